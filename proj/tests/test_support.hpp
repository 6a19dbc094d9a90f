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

#include <random>
#include <string>
#include <vector>

#include "llsdim/multidegree.hpp"
#include "llsdim/rational.hpp"
#include "llsdim/tropical.hpp"

namespace llsdim::testing {

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Simple path: v0 - v1 - ... with unit chain lengths.
inline CurveModel path_graph(int nv, std::int64_t n = 1) {
    ChainGraph g;
    for (int i = 0; i < nv; ++i)
        g.vertices.push_back({"v" + std::to_string(i), 0, ComponentClass::Rational,
                              TorsionFlag::Unknown, WeierstrassFlag::Unknown});
    for (int i = 0; i + 1 < nv; ++i)
        g.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                           "v" + std::to_string(i + 1), n});
    return CurveModel::validate(g);
}

// Two vertices joined by the given chain lengths.
inline CurveModel banana_graph(const std::vector<std::int64_t>& ns) {
    ChainGraph g;
    g.vertices.push_back({"u", 0, ComponentClass::Rational, TorsionFlag::Unknown,
                          WeierstrassFlag::Unknown});
    g.vertices.push_back({"v", 0, ComponentClass::Rational, TorsionFlag::Unknown,
                          WeierstrassFlag::Unknown});
    for (size_t i = 0; i < ns.size(); ++i)
        g.edges.push_back({"e" + std::to_string(i), "u", "v", ns[i]});
    return CurveModel::validate(g);
}

// Random pseudocompact-type graph: a random tree with random edge
// multiplicities, chain lengths, orientations and vertex genera.
inline CurveModel random_graph(Rng& rng, int max_vertices = 8,
                               std::int64_t max_mult = 3, std::int64_t max_n = 6,
                               std::int64_t max_genus = 2) {
    int nv = (int)pick(rng, 1, max_vertices);
    ChainGraph g;
    for (int i = 0; i < nv; ++i)
        g.vertices.push_back({"v" + std::to_string(i), pick(rng, 0, max_genus),
                              ComponentClass::General, TorsionFlag::Unknown,
                              WeierstrassFlag::Unknown});
    int eid = 0;
    for (int i = 1; i < nv; ++i) {
        int parent = (int)pick(rng, 0, i - 1);
        std::int64_t mult = pick(rng, 1, max_mult);
        for (std::int64_t m = 0; m < mult; ++m) {
            bool flip = pick(rng, 0, 1) == 1;
            std::string a = "v" + std::to_string(parent);
            std::string b = "v" + std::to_string(i);
            g.edges.push_back({"e" + std::to_string(eid++), flip ? b : a, flip ? a : b,
                               pick(rng, 1, max_n)});
        }
    }
    return CurveModel::validate(g);
}

inline AdmissibleMultidegree random_multidegree(Rng& rng, const CurveModel& model,
                                                std::int64_t wlo = -3,
                                                std::int64_t whi = 6) {
    AdmissibleMultidegree w = AdmissibleMultidegree::zero(model);
    for (auto& x : w.w) x = pick(rng, wlo, whi);
    for (size_t e = 0; e < model.edges().size(); ++e)
        w.mu[e] = pick(rng, 0, model.edges()[e].chain_length - 1);
    return w;
}

// Random connected multigraph (no loops) for the chip-firing oracle tests.
inline FireGraph random_fire_graph(Rng& rng, int max_vertices = 6, int max_edges = 9) {
    int nv = (int)pick(rng, 2, max_vertices);
    std::vector<std::string> ids;
    for (int i = 0; i < nv; ++i) ids.push_back("w" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < nv; ++i) edges.push_back({(int)pick(rng, 0, i - 1), i});
    int extra = (int)pick(rng, 0, std::max(0, max_edges - (nv - 1)));
    for (int k = 0; k < extra && nv >= 2; ++k) {
        int a = (int)pick(rng, 0, nv - 1);
        int b = (int)pick(rng, 0, nv - 1);
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return FireGraph::make(std::move(ids), std::move(edges));
}

// Exact linear-equivalence oracle: D ~ D' iff D - D' = L * s for an integer
// firing script s with s(0) = 0, solved over the rationals.
inline bool linearly_equivalent(const FireGraph& g, const TropicalDivisor& d1,
                                const TropicalDivisor& d2) {
    size_t nv = g.ids.size();
    if (d1.degree() != d2.degree()) return false;
    // Laplacian rows/columns for vertices 1..nv-1 (vertex 0 grounded).
    std::vector<std::vector<Rat>> m(nv - 1, std::vector<Rat>(nv, Rat(0)));
    for (size_t i = 1; i < nv; ++i) {
        for (size_t j = 1; j < nv; ++j) {
            if (i == j)
                m[i - 1][j - 1] = Rat(g.valence((int)i));
            else
                m[i - 1][j - 1] = Rat(-g.edges_between((int)i, (int)j));
        }
        m[i - 1][nv - 1] = Rat(d1.chips[i] - d2.chips[i]);
    }
    size_t rows = nv - 1;
    size_t col = 0;
    for (size_t r = 0; r < rows && col < rows; ++col) {
        size_t piv = r;
        while (piv < rows && m[piv][col] == Rat(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][col];
        for (auto& x : m[r]) x = x / lead;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][col] == Rat(0)) continue;
            Rat factor = m[rr][col];
            for (size_t cc = 0; cc < nv; ++cc)
                m[rr][cc] = m[rr][cc] - factor * m[r][cc];
        }
        ++r;
    }
    // The reduced Laplacian of a connected graph is invertible, so the system
    // has a unique solution; equivalence needs it integral.
    for (size_t r = 0; r < rows; ++r) {
        bool all_zero = true;
        for (size_t c = 0; c < rows; ++c)
            if (m[r][c] != Rat(0)) all_zero = false;
        if (all_zero && m[r][nv - 1] != Rat(0)) return false;
    }
    for (size_t r = 0; r < rows; ++r)
        if (!m[r][nv - 1].is_integer()) return false;
    return true;
}

}  // namespace llsdim::testing
