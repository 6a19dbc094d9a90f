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
#include <vector>

#include "llsdim/divisor_seq.hpp"

namespace llsdim {

// Degree ladder of a divisor sequence, the only part the stratum calculus
// consumes. Synthetic ladders (built from gap vectors) drive the exhaustive
// checks.
struct Ladder {
    std::vector<std::int64_t> degrees;  // length b+2, degrees[0] = 0

    static Ladder from_gaps(const std::vector<std::int64_t>& gaps);
    static Ladder of(const DivisorSequence& seq) { return Ladder{seq.degrees}; }
    // Ladder of the opposite side of a complementary pair: gaps reversed.
    Ladder complement() const;

    std::int64_t b() const { return (std::int64_t)degrees.size() - 2; }
    std::int64_t gap(std::int64_t j) const { return degrees[j + 1] - degrees[j]; }
    bool critical(std::int64_t j) const { return gap(j) != 0; }
    // The unique critical j with degrees[j] == value, or -1. Distinct critical
    // indices carry distinct degrees, so uniqueness is automatic.
    std::int64_t critical_index_of(std::int64_t value) const;
};

// Nondecreasing sequence a_0 <= ... <= a_r over the critical degrees of a
// ladder, each repeated at most its gap. r_mult[j] counts occurrences of
// degrees[j] for critical j (0 elsewhere).
struct MultivanishingSequence {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> r_mult;  // length b+1

    static MultivanishingSequence over(const Ladder& lad,
                                       std::vector<std::int64_t> values);
};

// All valid sequences of length r+1 over critical degrees <= d_cap, in
// lexicographic order. Throws EnumerationBudgetExceeded past `budget`.
std::vector<MultivanishingSequence> enumerate_sequences(const Ladder& lad,
                                                        std::int64_t r,
                                                        std::int64_t d_cap,
                                                        std::int64_t budget);

// sum_l (a_l - l) + sum_j C(r_j, 2)
std::int64_t schubert_codim(const MultivanishingSequence& a);

// A compatible pair of sequences across one collapsed edge. Refined means
// every compatibility inequality is an equality.
struct EdgeStratum {
    MultivanishingSequence a1, a2;
    bool refined = false;
};

struct Compatibility {
    bool valid = false;
    bool refined = false;
};

// Two-sided check of the inequalities a2_{r-l} >= deg D2_{b-j} (and the
// mirror image); refined when the forward inequalities are all equalities.
Compatibility check_compatible(const Ladder& lad1, const Ladder& lad2,
                               const MultivanishingSequence& a1,
                               const MultivanishingSequence& a2);

// Cartesian product of the two enumerations filtered by compatibility, in
// lexicographic (a1, a2) order.
std::vector<EdgeStratum> edge_strata(const Ladder& lad1, const Ladder& lad2,
                                     std::int64_t r, std::int64_t d_cap1,
                                     std::int64_t d_cap2, std::int64_t budget);

std::int64_t binom2(std::int64_t n);

}  // namespace llsdim
