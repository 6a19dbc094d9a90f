/*
 * Copyright 2026 The llsdim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llsdim/strata.hpp"

namespace llsdim {

// rho = g + (r+1)(d - r - g) - sum of Schubert codimensions of the imposed
// multivanishing constraints.
std::int64_t rho_with_vanishing(std::int64_t g, std::int64_t r, std::int64_t d,
                                const std::vector<MultivanishingSequence>& constraints);

inline std::int64_t rho_classical(std::int64_t g, std::int64_t r, std::int64_t d) {
    return rho_with_vanishing(g, r, d, {});
}

// Everything the audit needs about one collapsed edge.
struct EdgeAnalysis {
    int collapsed_edge = -1;
    int side1 = -1, side2 = -1;        // side1 has the smaller vertex id
    DivisorSequence seq1, seq2;
    EdgePairStats stats;
    Ladder lad1, lad2;
    std::vector<EdgeStratum> strata;   // lexicographic
};

std::vector<EdgeAnalysis> analyze_edges(const CurveModel& model,
                                        const ConcentratedFamily& family,
                                        std::int64_t r, std::int64_t budget);

// Exact check of d = sum_v d_v - sum_e c_e + |E|. Throws IdentityViolation.
void degree_identity(const CurveModel& model, const ConcentratedFamily& family,
                     const std::vector<EdgeAnalysis>& edges);

// The two sides of the combinatorial inequality for one stratum, with the
// g-vector tracking how many gluing conditions land in each critical index.
struct BalanceResult {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t clamped_lhs = 0;  // negative summands replaced by 0
    std::vector<std::int64_t> g;   // by ladder index 0..b
};

// Computes both sides and asserts lhs >= rhs with equality exactly for
// refined strata; throws LemmaViolation with the offending data otherwise.
BalanceResult combin_balance(const EdgePairStats& stats, const EdgeStratum& stratum);

struct BudgetFlag {
    int collapsed_edge = -1;
    std::int64_t conditions = 0;    // expected gluing codimension at this pair
    std::int64_t torus_params = 0;  // m - 1 free enriched-structure parameters
};

struct StratumReport {
    std::uint64_t id = 0;
    std::vector<int> choice;  // per-edge stratum index
    bool refined = false;
    std::int64_t base_dim = 0;
    std::int64_t vanishing_codim = 0;
    std::int64_t gluing_codim = 0;
    std::int64_t expected_dim = 0;
    std::vector<BudgetFlag> flags;
};

struct DimensionReport {
    std::int64_t rho = 0;
    std::int64_t r = 0;
    std::vector<StrongBNCertificate> certificates;
    std::vector<EdgeAnalysis> edges;
    std::vector<StratumReport> strata;            // canonical id order
    std::optional<std::int64_t> max_expected_dim; // absent when no strata
    std::int64_t refined_count = 0;
};

struct AuditOptions {
    std::int64_t budget = 1000000;
    int workers = 1;
};

// Evaluates the per-stratum expected-dimension ledger over every choice of
// edge stratum: base dimension, vanishing codimension, clamped gluing
// codimension, and the enriched-structure budget flags. Deterministic for
// any worker count.
DimensionReport audit(const CurveModel& model, const ConcentratedFamily& family,
                      std::int64_t r, const AuditOptions& opts = {});

// Per-edge pieces of the ledger, shared by audit() and the binary-curve
// gluing ledger.
std::int64_t vanishing_codim_edge(std::int64_t r, const EdgeStratum& s);
std::int64_t gluing_codim_edge(const EdgePairStats& stats, const EdgeStratum& s);

// Stable key=value rendering of the report (CLI `--format records`).
std::string render_audit_records(const CurveModel& model,
                                 const ConcentratedFamily& family,
                                 const DimensionReport& report, bool list_strata);

}  // namespace llsdim
