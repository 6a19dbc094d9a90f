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

#include "llsdim/audit.hpp"
#include "llsdim/rational.hpp"

namespace llsdim {

// Point of the rational projective line as a primitive integer pair [x : y],
// y >= 0, with infinity = [1 : 0]. Everything downstream is exact.
struct ProjPoint {
    std::int64_t x = 0;
    std::int64_t y = 1;

    static ProjPoint make(std::int64_t x, std::int64_t y);  // normalizes
    static ProjPoint of(const Rat& value) { return make(value.num, value.den); }
    static ProjPoint infinity() { return ProjPoint{1, 0}; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    std::string str() const;
};

// Parses "p", "p/q" or "inf"; comma-separated lists for the CLI.
ProjPoint parse_point(const std::string& text);
std::vector<ProjPoint> parse_point_list(const std::string& text);

// Invertible 2x2 integer matrix up to scale.
struct Mobius {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    ProjPoint apply(const ProjPoint& p) const;
    bool invertible() const;
};

// The unique Mobius transformation carrying three distinct points to three
// distinct points.
Mobius mobius_through(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2,
                      const ProjPoint& q0, const ProjPoint& q1, const ProjPoint& q2);

// Two rational components glued at g + 1 nodes; node i identifies
// points1[i] with points2[i].
struct BinaryCurve {
    std::int64_t g = 2;
    std::vector<ProjPoint> points1;
    std::vector<ProjPoint> points2;

    // Throws DegenerateInput on repeated points within a side or on a size
    // mismatch.
    static BinaryCurve make(std::vector<ProjPoint> points1,
                            std::vector<ProjPoint> points2);
};

// Degree-2 pencil criterion: true iff one Mobius transformation matches
// every node pair. Fewer than three nodes are always matchable.
bool g12_exists(const BinaryCurve& curve);

// Exhaustively verifies that the weak multidegree window 0 <= d_i <= g-1
// sits inside the range (d-g-1)/2 <= d_i <= (d+g+1)/2, exactly.
bool range_check(std::int64_t g);

// Per-critical-index bookkeeping for the gluing argument on a binary curve.
enum class IndexClass { FullImage, Boundary, DoublyExtremal, Unused };

struct LedgerIndex {
    std::int64_t j = 0;          // critical index on side 1
    std::int64_t dim_w1 = 0;     // section-space image inside the f_j-dim quotient
    std::int64_t dim_w2 = 0;     // same on side 2 at index b - j
    std::int64_t gluing_codim = 0;
    IndexClass cls = IndexClass::FullImage;
};

struct LedgerReduction {
    std::vector<std::string> kept_nodes;        // support of the jump at j1
    std::vector<std::string> normalized_nodes;  // nodes removed by partial normalization
    std::int64_t reduced_d1 = 0;
    std::int64_t reduced_d2 = 0;
};

struct GluingLedger {
    std::int64_t d1 = 0, d2 = 0, r = 0;
    std::int64_t j1 = 0, j2 = 0;  // maximal j with deg D^i_j <= d_i + 1
    std::vector<LedgerIndex> per_index;
    std::optional<LedgerReduction> reduction;
};

// Requires the dual graph of a binary curve: two genus-0 vertices joined by
// at least three edges. Throws NotBinary otherwise.
GluingLedger gluing_ledger(const CurveModel& model, const ConcentratedFamily& family,
                           const EdgeAnalysis& edge, const EdgeStratum& stratum);

}  // namespace llsdim
