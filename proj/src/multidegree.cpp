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

#include "llsdim/multidegree.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

namespace llsdim {

AdmissibleMultidegree AdmissibleMultidegree::zero(const CurveModel& model) {
    AdmissibleMultidegree w;
    w.w.assign(model.vertices().size(), 0);
    w.mu.assign(model.edges().size(), 0);
    return w;
}

std::int64_t AdmissibleMultidegree::total_degree() const {
    std::int64_t d = std::accumulate(w.begin(), w.end(), (std::int64_t)0);
    for (std::int64_t m : mu)
        if (m != 0) ++d;
    return d;
}

std::int64_t AdmissibleMultidegree::min_weight() const {
    return *std::min_element(w.begin(), w.end());
}

std::string AdmissibleMultidegree::describe(const CurveModel& model) const {
    std::ostringstream os;
    os << "w=";
    for (size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << model.vertices()[i].id << ":" << w[i];
    os << " mu=";
    for (size_t i = 0; i < mu.size(); ++i)
        os << (i ? "," : "") << model.edges()[i].id << ":" << mu[i];
    return os.str();
}

AdmissibleMultidegree twist(const CurveModel& model, const AdmissibleMultidegree& w,
                            int collapsed_edge, int at_vertex) {
    const CollapsedEdge& ce = model.collapsed()[collapsed_edge];
    if (ce.a != at_vertex && ce.b != at_vertex)
        fail_input("NotAdjacent", "vertex " + model.vertices()[at_vertex].id +
                                      " is not adjacent to the collapsed edge");
    int other = ce.other(at_vertex);
    AdmissibleMultidegree out = w;
    for (int ei : ce.edge_indices) {
        std::int64_t n = model.edges()[ei].chain_length;
        std::int64_t old_mu = w.mu[ei];
        std::int64_t next = (old_mu + model.sigma(ei, at_vertex)) % n;
        if (next < 0) next += n;
        out.mu[ei] = next;
        if (old_mu == 0) out.w[at_vertex] -= 1;
        if (next == 0) out.w[other] += 1;
    }
    return out;
}

bool is_concentrated(const CurveModel& model, const AdmissibleMultidegree& w,
                     int vertex) {
    auto order = model.tree_order(vertex);
    for (size_t vi = 0; vi < model.vertices().size(); ++vi) {
        if ((int)vi == vertex) continue;
        int toward = order.toward_root[vi];
        AdmissibleMultidegree t = twist(model, w, toward, (int)vi);
        if (t.w[vi] >= 0) return false;
    }
    return true;
}

AdmissibleMultidegree concentrate(const CurveModel& model, std::int64_t d, int v1) {
    AdmissibleMultidegree w = AdmissibleMultidegree::zero(model);
    w.w[v1] = d;
    auto order = model.tree_order(v1);
    // Sweep in decreasing distance; repair each negative index by twisting
    // inward from its parent the minimal number of times.
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
        int v = *it;
        if (v == v1) continue;
        int ce = order.toward_root[v];
        int parent = order.parent[v];
        while (w.w[v] < 0) w = twist(model, w, ce, parent);
    }
    if (w.w[v1] < 0)
        fail_condition("VacuousTheory",
                       "concentrated multidegree is negative at its own vertex");
    return w;
}

namespace {

// Twists at (ce, from) as long as the weight at `from` stays nonnegative;
// returns the reached multidegree and the twist count.
std::pair<AdmissibleMultidegree, std::int64_t> max_twists(
    const CurveModel& model, AdmissibleMultidegree w, int ce, int from) {
    std::int64_t count = 0;
    // Each full residue cycle moves weight off `from`, so this terminates;
    // the guard is generous.
    std::int64_t guard = 16;
    for (int ei : model.collapsed()[ce].edge_indices)
        guard += model.edges()[ei].chain_length;
    guard *= (std::llabs(w.w[from]) + (std::int64_t)model.edges().size() + 2);
    while (true) {
        AdmissibleMultidegree next = twist(model, w, ce, from);
        if (next.w[from] < 0) break;
        w = std::move(next);
        ++count;
        if (--guard < 0)
            fail_condition("VacuousTheory", "twist repair failed to terminate");
    }
    return {std::move(w), count};
}

}  // namespace

ConcentratedFamily concentrated_family(const CurveModel& model,
                                       const AdmissibleMultidegree& w0, int v1) {
    auto order = model.tree_order(v1);

    // Nonnegativity repair of the seed, as in concentrate().
    AdmissibleMultidegree seed = w0;
    for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
        int v = *it;
        if (v == v1) continue;
        while (seed.w[v] < 0)
            seed = twist(model, seed, order.toward_root[v], order.parent[v]);
    }
    if (seed.w[v1] < 0)
        fail_condition("VacuousTheory",
                       "seed multidegree is negative at the seed vertex");
    if (!is_concentrated(model, seed, v1))
        fail_input("NotConcentrated", "seed multidegree is not concentrated at " +
                                          model.vertices()[v1].id);

    ConcentratedFamily fam;
    fam.seed = v1;
    fam.d = seed.total_degree();
    fam.at.assign(model.vertices().size(), AdmissibleMultidegree::zero(model));
    fam.dv.assign(model.vertices().size(), 0);
    fam.b.assign(model.collapsed().size(), 0);
    fam.at[v1] = seed;
    for (int v : order.order) {
        if (v == v1) continue;
        int ce = order.toward_root[v];
        int parent = order.parent[v];
        auto [wv, count] = max_twists(model, fam.at[parent], ce, parent);
        fam.at[v] = std::move(wv);
        fam.b[ce] = count;
    }
    for (size_t v = 0; v < model.vertices().size(); ++v) fam.dv[v] = fam.at[v].w[v];
    return fam;
}

ConcentratedFamily concentrated_family(const CurveModel& model, std::int64_t d,
                                       int v1) {
    return concentrated_family(model, concentrate(model, d, v1), v1);
}

TwistGraph build_twist_graph(const CurveModel& model, const ConcentratedFamily& family) {
    std::vector<AdmissibleMultidegree> verts;
    for (size_t ce = 0; ce < model.collapsed().size(); ++ce) {
        // Walk from the a-side multidegree to the b-side one; Sit 2.7 (II)
        // guarantees we arrive after exactly b twists.
        int from = model.collapsed()[ce].a;
        AdmissibleMultidegree w = family.at[from];
        verts.push_back(w);
        for (std::int64_t i = 0; i < family.b[ce]; ++i) {
            w = twist(model, w, (int)ce, from);
            verts.push_back(w);
        }
    }
    if (verts.empty()) verts.push_back(family.at[family.seed]);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    TwistGraph tg;
    tg.vertices = std::move(verts);
    auto find = [&tg](const AdmissibleMultidegree& w) {
        auto it = std::lower_bound(tg.vertices.begin(), tg.vertices.end(), w);
        if (it != tg.vertices.end() && *it == w)
            return (int)(it - tg.vertices.begin());
        return -1;
    };
    for (size_t i = 0; i < tg.vertices.size(); ++i) {
        for (size_t ce = 0; ce < model.collapsed().size(); ++ce) {
            for (int side : {model.collapsed()[ce].a, model.collapsed()[ce].b}) {
                AdmissibleMultidegree t = twist(model, tg.vertices[i], (int)ce, side);
                int j = find(t);
                if (j >= 0) tg.arcs.push_back({(int)i, j, (int)ce, side});
            }
        }
    }
    std::sort(tg.arcs.begin(), tg.arcs.end(), [](const TwistGraph::Arc& x,
                                                 const TwistGraph::Arc& y) {
        return std::tie(x.from, x.to, x.collapsed_edge, x.at_vertex) <
               std::tie(y.from, y.to, y.collapsed_edge, y.at_vertex);
    });
    return tg;
}

}  // namespace llsdim
