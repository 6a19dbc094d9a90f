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

#include "llsdim/chain_graph.hpp"

namespace llsdim {

// Vertex weights plus one residue per edge. The residue mu(e) lives in
// Z/n(e)Z and is stored as its canonical representative in [0, n(e)), which
// makes equality of multidegrees plain field comparison.
struct AdmissibleMultidegree {
    std::vector<std::int64_t> w;   // by canonical vertex index
    std::vector<std::int64_t> mu;  // by canonical edge index

    static AdmissibleMultidegree zero(const CurveModel& model);

    // d = #{e : mu(e) != 0} + sum_v w(v)
    std::int64_t total_degree() const;
    std::int64_t min_weight() const;

    friend bool operator==(const AdmissibleMultidegree& x,
                           const AdmissibleMultidegree& y) {
        return x.w == y.w && x.mu == y.mu;
    }
    friend bool operator<(const AdmissibleMultidegree& x,
                          const AdmissibleMultidegree& y) {
        if (x.w != y.w) return x.w < y.w;
        return x.mu < y.mu;
    }

    std::string describe(const CurveModel& model) const;
};

// Elementary twist at a (collapsed edge, adjacent vertex) pair: every
// underlying residue moves one step in the direction given by sigma, the
// vertex loses one unit per residue that left zero, and the opposite vertex
// gains one unit per residue that arrived at zero. Total degree is preserved.
// Throws NotAdjacent.
AdmissibleMultidegree twist(const CurveModel& model, const AdmissibleMultidegree& w,
                            int collapsed_edge, int at_vertex);

// True iff twisting once toward v at any other vertex v' leaves a negative
// weight at v'.
bool is_concentrated(const CurveModel& model, const AdmissibleMultidegree& w,
                     int vertex);

// Canonical multidegree of total degree d concentrated at v1, nonnegative in
// every index: start with all weight at v1, then repair any negative index by
// minimal twists, sweeping vertices in decreasing distance from v1.
// Throws VacuousTheory if the result is negative at v1.
AdmissibleMultidegree concentrate(const CurveModel& model, std::int64_t d, int v1);

struct ConcentratedFamily {
    int seed = 0;                                // v1
    std::int64_t d = 0;                          // common total degree
    std::vector<AdmissibleMultidegree> at;       // w_v, by vertex index
    std::vector<std::int64_t> dv;                // d_v = w_v(v)
    std::vector<std::int64_t> b;                 // by collapsed edge index
};

// Builds the family (w_v)_v from a seed multidegree concentrated at v1:
// each non-seed w_v arises from its tree parent's multidegree by the maximal
// number of twists that keeps the parent index nonnegative; b records the
// twist counts. Throws NotConcentrated if w0 fails the concentration test
// after nonnegativity repair.
ConcentratedFamily concentrated_family(const CurveModel& model,
                                       const AdmissibleMultidegree& w0, int v1);

// Convenience: seed with concentrate(model, d, v1).
ConcentratedFamily concentrated_family(const CurveModel& model, std::int64_t d,
                                       int v1);

// The graph of multidegrees swept out between the w_v: vertices are all
// intermediate multidegrees along each collapsed edge, directed edges are
// single twists, labelled by their (collapsed edge, vertex) pair.
struct TwistGraph {
    struct Arc {
        int from = 0;
        int to = 0;
        int collapsed_edge = 0;
        int at_vertex = 0;
    };
    std::vector<AdmissibleMultidegree> vertices;  // sorted
    std::vector<Arc> arcs;                        // sorted by (from, to, edge, at)
};

TwistGraph build_twist_graph(const CurveModel& model, const ConcentratedFamily& family);

}  // namespace llsdim
