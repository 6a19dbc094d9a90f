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
#include <map>
#include <string>
#include <vector>

#include "llsdim/multidegree.hpp"

namespace llsdim {

// The nondecreasing ladder of node divisors on one side (e, v) of a collapsed
// edge. Entry i+1 minus entry i contains the node of an underlying edge
// exactly when sigma * mu is congruent to -i modulo its chain length, so the
// ladder is fully determined by the increments.
struct DivisorSequence {
    int collapsed_edge = -1;
    int side = -1;                               // vertex index
    std::int64_t b = 0;                          // ladder indexed 0..b+1
    std::vector<std::vector<int>> increments;    // edge indices entering at step i (i = 0..b)
    std::vector<std::int64_t> degrees;           // length b+2, degrees[0] = 0

    // The divisor at index i as a node multiset keyed by edge id.
    std::map<std::string, std::int64_t> entry(const CurveModel& model, std::int64_t i) const;
    bool critical(std::int64_t j) const {        // j in [0, b]
        return degrees[j + 1] != degrees[j];
    }
};

DivisorSequence divisor_sequence(const CurveModel& model,
                                 const ConcentratedFamily& family,
                                 int collapsed_edge, int side);

// Joint numbers of the two sides of one collapsed edge. Raises
// ComplementarityViolation if the complementarity identities fail, which
// would indicate a corrupted family.
struct EdgePairStats {
    std::int64_t b = 0;
    std::int64_t c = 0;                  // deg D1_j + deg D2_{b+1-j}, constant in j
    std::vector<int> critical;           // of the first side, sorted
    std::vector<std::int64_t> f;         // gaps f_j = deg D1_{j+1} - deg D1_j, j = 0..b
    // True where reading the gap through the other side with the subscript
    // c+1-j (instead of b+1-j) is defined and disagrees; recorded, never used.
    bool c_subscript_divergent = false;
};

EdgePairStats pair_stats(const DivisorSequence& side1, const DivisorSequence& side2);

}  // namespace llsdim
