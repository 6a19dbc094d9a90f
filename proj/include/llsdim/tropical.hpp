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
#include <string>
#include <vector>

#include "llsdim/multidegree.hpp"

namespace llsdim {

// Plain undirected multigraph for chip-firing. The divisor theory here is
// general graph theory, so it is not tied to the pseudocompact-type
// hypothesis (cycles are fine).
struct FireGraph {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> edges;

    static FireGraph of(const SubdividedGraph& sub);
    static FireGraph make(std::vector<std::string> ids,
                          std::vector<std::pair<int, int>> edges);

    std::int64_t valence(int v) const;
    std::int64_t edges_between(int u, int v) const;
    std::int64_t betti() const {
        return (std::int64_t)edges.size() - (std::int64_t)ids.size() + 1;
    }
    int vertex_index(const std::string& id) const;
};

struct TropicalDivisor {
    std::vector<std::int64_t> chips;

    std::int64_t degree() const;
    friend bool operator==(const TropicalDivisor& a, const TropicalDivisor& b) {
        return a.chips == b.chips;
    }
};

// Image of an admissible multidegree on the subdivided graph: the vertex
// weights sit on the original vertices, and each nonzero residue mu(e) puts
// one chip on the mu(e)-th inserted vertex counted from the tail.
TropicalDivisor to_divisor(const CurveModel& model, const SubdividedGraph& sub,
                           const AdmissibleMultidegree& w);

// Every vertex of S sends one chip along each incident edge leaving S.
TropicalDivisor chip_fire(const FireGraph& g, const TropicalDivisor& div,
                          const std::vector<int>& subset);

// The firing set matching a twist at (collapsed edge, side): cut, per
// underlying edge, the (sigma*mu + 1)-st segment counted from the side
// vertex, and keep the component containing it.
std::vector<int> twist_firing_set(const CurveModel& model, const SubdividedGraph& sub,
                                  const AdmissibleMultidegree& w, int collapsed_edge,
                                  int side);

// Dhar's burning algorithm: the unique q-reduced divisor linearly equivalent
// to the input.
TropicalDivisor dhar_reduce(const FireGraph& g, const TropicalDivisor& div, int q);

bool is_reduced(const FireGraph& g, const TropicalDivisor& div, int q);

// K(v) = valence(v) - 2.
TropicalDivisor canonical_divisor(const FireGraph& g);

// Baker-Norine rank by brute force over effective subtractions; an oracle,
// not a production algorithm. Throws OracleBudgetExceeded beyond the small
// bounds it is meant for (8 vertices, degree 12).
std::int64_t bn_rank(const FireGraph& g, const TropicalDivisor& div);

}  // namespace llsdim
