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

#include "llsdim/divisor_seq.hpp"

namespace llsdim {

std::map<std::string, std::int64_t> DivisorSequence::entry(const CurveModel& model,
                                                           std::int64_t i) const {
    std::map<std::string, std::int64_t> out;
    for (std::int64_t step = 0; step < i; ++step)
        for (int ei : increments[step]) out[model.edges()[ei].id] += 1;
    return out;
}

DivisorSequence divisor_sequence(const CurveModel& model,
                                 const ConcentratedFamily& family,
                                 int collapsed_edge, int side) {
    const CollapsedEdge& ce = model.collapsed()[collapsed_edge];
    if (ce.a != side && ce.b != side)
        fail_input("NotAdjacent", "vertex " + model.vertices()[side].id +
                                      " is not adjacent to the collapsed edge");
    DivisorSequence seq;
    seq.collapsed_edge = collapsed_edge;
    seq.side = side;
    seq.b = family.b[collapsed_edge];
    const AdmissibleMultidegree& wv = family.at[side];
    seq.increments.assign(seq.b + 1, {});
    seq.degrees.assign(seq.b + 2, 0);
    for (std::int64_t i = 0; i <= seq.b; ++i) {
        for (int ei : ce.edge_indices) {
            std::int64_t n = model.edges()[ei].chain_length;
            std::int64_t s = model.sigma(ei, side);
            // sigma * mu = -i (mod n)
            if (((s * wv.mu[ei] + i) % n + n) % n == 0)
                seq.increments[i].push_back(ei);
        }
        seq.degrees[i + 1] =
            seq.degrees[i] + (std::int64_t)seq.increments[i].size();
    }
    return seq;
}

EdgePairStats pair_stats(const DivisorSequence& side1, const DivisorSequence& side2) {
    if (side1.b != side2.b || side1.degrees.size() != side2.degrees.size())
        fail_condition("ComplementarityViolation", "ladder lengths differ");
    std::int64_t b = side1.b;
    EdgePairStats st;
    st.b = b;
    st.c = side1.degrees[0] + side2.degrees[b + 1];
    for (std::int64_t j = 0; j <= b + 1; ++j)
        if (side1.degrees[j] + side2.degrees[b + 1 - j] != st.c)
            fail_condition("ComplementarityViolation",
                           "deg D1_j + deg D2_{b+1-j} is not constant at j=" +
                               std::to_string(j));
    for (std::int64_t j = 0; j <= b; ++j) {
        std::int64_t gap1 = side1.degrees[j + 1] - side1.degrees[j];
        std::int64_t gap2 = side2.degrees[b + 1 - j] - side2.degrees[b - j];
        if (gap1 != gap2)
            fail_condition("ComplementarityViolation",
                           "two-sided gap formulas disagree at j=" + std::to_string(j));
        st.f.push_back(gap1);
        if (side1.critical(j)) st.critical.push_back((int)j);
        if (side1.critical(j) != side2.critical(b - j))
            fail_condition("ComplementarityViolation",
                           "critical sets are not complementary at j=" +
                               std::to_string(j));
        // Literal subscript c+1-j, where it happens to index into the ladder.
        std::int64_t hi = st.c + 1 - j, lo = st.c - j;
        if (lo >= 0 && hi <= b + 1) {
            std::int64_t via_c = side2.degrees[hi] - side2.degrees[lo];
            if (via_c != gap1) st.c_subscript_divergent = true;
        }
    }
    return st;
}

}  // namespace llsdim
