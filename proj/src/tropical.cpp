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

#include "llsdim/tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>

namespace llsdim {

FireGraph FireGraph::of(const SubdividedGraph& sub) {
    FireGraph g;
    for (const auto& v : sub.vertices) g.ids.push_back(v.id);
    for (const auto& s : sub.segments) g.edges.push_back({s.tail, s.head});
    return g;
}

FireGraph FireGraph::make(std::vector<std::string> ids,
                          std::vector<std::pair<int, int>> edges) {
    FireGraph g;
    g.ids = std::move(ids);
    g.edges = std::move(edges);
    for (auto& [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= (int)g.ids.size() || v >= (int)g.ids.size())
            fail_input("ParseError", "edge endpoint out of range");
        if (u == v) fail_input("LoopEdge", "chip-firing graphs here have no loops");
    }
    return g;
}

std::int64_t FireGraph::valence(int v) const {
    std::int64_t d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::int64_t FireGraph::edges_between(int u, int v) const {
    std::int64_t d = 0;
    for (const auto& [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) ++d;
    return d;
}

int FireGraph::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return (int)i;
    fail_input("ParseError", "unknown vertex " + id);
}

std::int64_t TropicalDivisor::degree() const {
    return std::accumulate(chips.begin(), chips.end(), (std::int64_t)0);
}

TropicalDivisor to_divisor(const CurveModel& model, const SubdividedGraph& sub,
                           const AdmissibleMultidegree& w) {
    TropicalDivisor div;
    div.chips.assign(sub.vertices.size(), 0);
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        if (sub.vertices[i].orig >= 0) div.chips[i] = w.w[sub.vertices[i].orig];
    for (size_t e = 0; e < model.edges().size(); ++e)
        if (w.mu[e] != 0) div.chips[sub.intermediate((int)e, w.mu[e])] += 1;
    return div;
}

TropicalDivisor chip_fire(const FireGraph& g, const TropicalDivisor& div,
                          const std::vector<int>& subset) {
    std::vector<char> in(g.ids.size(), 0);
    for (int v : subset) in[v] = 1;
    TropicalDivisor out = div;
    for (const auto& [a, b] : g.edges) {
        if (in[a] && !in[b]) {
            out.chips[a] -= 1;
            out.chips[b] += 1;
        } else if (in[b] && !in[a]) {
            out.chips[b] -= 1;
            out.chips[a] += 1;
        }
    }
    return out;
}

std::vector<int> twist_firing_set(const CurveModel& model, const SubdividedGraph& sub,
                                  const AdmissibleMultidegree& w, int collapsed_edge,
                                  int side) {
    const CollapsedEdge& ce = model.collapsed()[collapsed_edge];
    if (ce.a != side && ce.b != side)
        fail_input("NotAdjacent", "vertex is not adjacent to the collapsed edge");
    // Segment to cut over each underlying edge: step sigma*mu + 1 from the
    // side vertex; a head-side count reverses the tail-based numbering.
    std::vector<char> cut(sub.segments.size(), 0);
    for (int ei : ce.edge_indices) {
        std::int64_t n = model.edges()[ei].chain_length;
        std::int64_t k = ((model.sigma(ei, side) * w.mu[ei]) % n + n) % n + 1;
        std::int64_t step = model.sigma(ei, side) > 0 ? k : n + 1 - k;
        for (size_t s = 0; s < sub.segments.size(); ++s)
            if (sub.segments[s].orig_edge == ei && sub.segments[s].step == step)
                cut[s] = 1;
    }
    int start = -1;
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        if (sub.vertices[i].orig == side) start = (int)i;
    std::vector<char> seen(sub.vertices.size(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (size_t s = 0; s < sub.segments.size(); ++s) {
            if (cut[s]) continue;
            int next = -1;
            if (sub.segments[s].tail == v) next = sub.segments[s].head;
            if (sub.segments[s].head == v) next = sub.segments[s].tail;
            if (next >= 0 && !seen[next]) {
                seen[next] = 1;
                queue.push_back(next);
            }
        }
    }
    std::vector<int> out;
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        if (seen[i]) out.push_back((int)i);
    return out;
}

bool is_reduced(const FireGraph& g, const TropicalDivisor& div, int q) {
    for (size_t v = 0; v < g.ids.size(); ++v)
        if ((int)v != q && div.chips[v] < 0) return false;
    // Burning test: everything must burn starting from q alone.
    std::vector<char> burnt(g.ids.size(), 0);
    burnt[q] = 1;
    bool grew = true;
    size_t nburnt = 1;
    while (grew) {
        grew = false;
        for (size_t v = 0; v < g.ids.size(); ++v) {
            if (burnt[v]) continue;
            std::int64_t heat = 0;
            for (const auto& [a, b] : g.edges) {
                if (a == (int)v && burnt[b]) ++heat;
                if (b == (int)v && burnt[a]) ++heat;
            }
            if (heat > div.chips[v]) {
                burnt[v] = 1;
                ++nburnt;
                grew = true;
            }
        }
    }
    return nburnt == g.ids.size();
}

TropicalDivisor dhar_reduce(const FireGraph& g, const TropicalDivisor& div, int q) {
    size_t nv = g.ids.size();
    TropicalDivisor cur = div;

    // Stage 1: clear debt away from q, farthest level first. Firing the ball
    // {dist < l} feeds every level-l vertex and touches nothing deeper.
    std::vector<std::int64_t> dist(nv, -1);
    dist[q] = 0;
    std::deque<int> queue{q};
    std::int64_t maxdist = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [a, b] : g.edges) {
            int other = -1;
            if (a == v) other = b;
            if (b == v) other = a;
            if (other >= 0 && dist[other] < 0) {
                dist[other] = dist[v] + 1;
                maxdist = std::max(maxdist, dist[other]);
                queue.push_back(other);
            }
        }
    }
    for (size_t v = 0; v < nv; ++v)
        if (dist[v] < 0)
            fail_input("ParseError", "chip-firing graph is disconnected");

    for (std::int64_t level = maxdist; level >= 1; --level) {
        std::vector<int> ball;
        for (size_t v = 0; v < nv; ++v)
            if (dist[v] < level) ball.push_back((int)v);
        while (true) {
            bool debt = false;
            for (size_t v = 0; v < nv; ++v)
                if (dist[v] == level && cur.chips[v] < 0) debt = true;
            if (!debt) break;
            cur = chip_fire(g, cur, ball);
        }
    }

    // Stage 2: repeatedly fire the unburnt set until the burning test
    // consumes the whole graph.
    std::int64_t guard = 1;
    for (size_t v = 0; v < nv; ++v)
        guard += std::llabs(cur.chips[v]) + g.valence((int)v);
    guard = guard * (std::int64_t)nv * (std::int64_t)(g.edges.size() + 2) + 64;
    while (true) {
        std::vector<char> burnt(nv, 0);
        burnt[q] = 1;
        bool grew = true;
        size_t nburnt = 1;
        while (grew) {
            grew = false;
            for (size_t v = 0; v < nv; ++v) {
                if (burnt[v]) continue;
                std::int64_t heat = 0;
                for (const auto& [a, b] : g.edges) {
                    if (a == (int)v && burnt[b]) ++heat;
                    if (b == (int)v && burnt[a]) ++heat;
                }
                if (heat > cur.chips[v]) {
                    burnt[v] = 1;
                    ++nburnt;
                    grew = true;
                }
            }
        }
        if (nburnt == nv) break;
        std::vector<int> unburnt;
        for (size_t v = 0; v < nv; ++v)
            if (!burnt[v]) unburnt.push_back((int)v);
        cur = chip_fire(g, cur, unburnt);
        if (--guard < 0)
            fail_condition("NonEquivalentInput", "burning loop failed to terminate");
    }
    return cur;
}

TropicalDivisor canonical_divisor(const FireGraph& g) {
    TropicalDivisor k;
    k.chips.assign(g.ids.size(), -2);
    for (const auto& [a, b] : g.edges) {
        k.chips[a] += 1;
        k.chips[b] += 1;
    }
    return k;
}

namespace {

bool effective_equivalent(const FireGraph& g, const TropicalDivisor& div) {
    if (div.degree() < 0) return false;
    return dhar_reduce(g, div, 0).chips[0] >= 0;
}

// Walks all effective divisors of the given degree; returns false the moment
// the callback does.
bool for_each_effective(const FireGraph& g, std::int64_t degree,
                        TropicalDivisor& scratch, size_t from,
                        const std::function<bool(const TropicalDivisor&)>& cb) {
    if (degree == 0) return cb(scratch);
    if (from >= g.ids.size()) return true;
    for (std::int64_t take = degree; take >= 0; --take) {
        scratch.chips[from] += take;
        bool keep = for_each_effective(g, degree - take, scratch, from + 1, cb);
        scratch.chips[from] -= take;
        if (!keep) return false;
    }
    return true;
}

}  // namespace

std::int64_t bn_rank(const FireGraph& g, const TropicalDivisor& div) {
    if (g.ids.size() > 8 || div.degree() > 12)
        fail_input("OracleBudgetExceeded",
                   "rank oracle is limited to 8 vertices and degree 12");
    if (!effective_equivalent(g, div)) return -1;
    std::int64_t deg = div.degree();
    for (std::int64_t k = 1; k <= deg; ++k) {
        TropicalDivisor scratch;
        scratch.chips.assign(g.ids.size(), 0);
        bool all_pass = for_each_effective(
            g, k, scratch, 0, [&](const TropicalDivisor& eff) {
                TropicalDivisor rem = div;
                for (size_t v = 0; v < rem.chips.size(); ++v)
                    rem.chips[v] -= eff.chips[v];
                return effective_equivalent(g, rem);
            });
        if (!all_pass) return k - 1;
    }
    return deg;
}

}  // namespace llsdim
