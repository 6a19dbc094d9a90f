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

#include "llsdim/chain_graph.hpp"

namespace llsdim {

// A failing chain-length witness: twisting x_j full cycles across edge j can
// be cancelled by the other edges while the divisor ladder climbs by only
// floor_sum <= d, so two coupled gluing conditions fit below degree d.
struct ChainWitness {
    std::int64_t j = 0;          // index into the chain-length list
    std::int64_t x = 0;          // minimal positive multiplier
    std::int64_t floor_sum = 0;  // sum_i floor(x n_j / n_i)
};

struct MultiEdgeResult {
    bool pass = true;
    std::optional<ChainWitness> witness;
};

// Chain-structure genericity for one multi-edge pair: for every j and every
// minimal x in [1, d] with x * n_j inside the numerical semigroup generated
// by the other lengths, the floor sum must exceed d. The floor sum depends
// only on (j, x), is monotone in x, and its j-th term alone is x, so the
// search over [1, d] is complete. With two edges this reduces to the closed
// form lcm/n1 + lcm/n2 > d, asserted against the search.
MultiEdgeResult multi_edge_test(const std::vector<std::int64_t>& ns, std::int64_t d);

// Nonnegative-combination membership; exposed for the brute-force cross
// checks in the tests.
bool semigroup_member(std::int64_t target, const std::vector<std::int64_t>& gens);

struct PairReport {
    int collapsed_edge = -1;
    std::int64_t multiplicity = 0;
    bool cond_one = false;  // at most three edges
    bool cond_two = false;  // chain-length inequalities
    std::optional<ChainWitness> witness;
};

struct GenericityReport {
    std::vector<PairReport> pairs;
    std::vector<StrongBNCertificate> certificates;
    bool overall = false;
};

// Conditions (I)-(III): edge-count caps, chain-length inequalities at degree
// d, and component certificates. Never throws on unknown flags; the affected
// component simply fails certification.
GenericityReport check_curve(const CurveModel& model, std::int64_t d);

// Degeneration checker: every component must match one of the four allowed
// forms and the chain structure must pass the pair test at d = 2g - 2.
// Throws UnknownFlag when a decisive torsion/Weierstrass flag is unknown.
bool degeneration_check(const CurveModel& model);

}  // namespace llsdim
