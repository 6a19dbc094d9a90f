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

// Acceptance suite: every check is exact (zero tolerance), one verdict line
// per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "llsdim/audit.hpp"
#include "llsdim/binary_curves.hpp"
#include "llsdim/genericity.hpp"
#include "llsdim/tropical.hpp"
#include "test_support.hpp"

using namespace llsdim;
using namespace llsdim::testing;

namespace {

int failures = 0;

void verdict(int criterion, bool ok, const std::string& what) {
    std::cout << "criterion " << criterion << " " << (ok ? "PASS" : "FAIL") << " "
              << what << "\n";
    if (!ok) ++failures;
}

// --- 1: exhaustive combinatorial inequality -------------------------------

bool lemma_exhaustive(std::int64_t max_b, std::int64_t max_f, std::int64_t max_r,
                      std::uint64_t* pairs_seen) {
    for (std::int64_t b = 0; b <= max_b; ++b) {
        std::vector<std::int64_t> gaps(b + 1, 0);
        while (true) {
            Ladder lad1 = Ladder::from_gaps(gaps);
            Ladder lad2 = lad1.complement();
            EdgePairStats st;
            st.b = b;
            st.c = lad1.degrees[b + 1];
            for (std::int64_t j = 0; j <= b; ++j) {
                st.f.push_back(lad1.gap(j));
                if (lad1.critical(j)) st.critical.push_back((int)j);
            }
            for (std::int64_t r = 0; r <= max_r; ++r) {
                auto s1 = enumerate_sequences(lad1, r, 1 << 30, 1 << 30);
                auto s2 = enumerate_sequences(lad2, r, 1 << 30, 1 << 30);
                for (const auto& a1 : s1) {
                    for (const auto& a2 : s2) {
                        Compatibility comp = check_compatible(lad1, lad2, a1, a2);
                        if (!comp.valid) continue;
                        ++*pairs_seen;
                        EdgeStratum s{a1, a2, comp.refined};
                        BalanceResult res;
                        try {
                            res = combin_balance(st, s);  // throws on violation
                        } catch (const Error&) {
                            return false;
                        }
                        if (res.lhs < res.rhs) return false;
                        if ((res.lhs == res.rhs) != comp.refined) return false;
                    }
                }
            }
            size_t k = 0;
            while (k < gaps.size() && gaps[k] == max_f) gaps[k++] = 0;
            if (k == gaps.size()) break;
            ++gaps[k];
        }
    }
    return true;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t pairs = 0;
    bool ok = lemma_exhaustive(4, 3, 3, &pairs);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::ostringstream what;
    what << "combinatorial inequality exhaustive to b<=4, f<=3, r<=3 (" << pairs
         << " compatible pairs, " << secs << "s)";
    verdict(1, ok && secs < 60.0 && pairs > 0, what.str());
}

// --- 2: twist calculus ----------------------------------------------------

void criterion2() {
    Rng rng(92);
    bool ok = true;
    int sequences = 0;
    while (sequences < 1000 && ok) {
        CurveModel m = random_graph(rng, 8, 3, 6);
        if (m.collapsed().empty()) continue;
        AdmissibleMultidegree w = random_multidegree(rng, m);
        std::int64_t d = w.total_degree();
        for (int step = 0; step < 10 && ok; ++step) {
            int ce = (int)pick(rng, 0, (std::int64_t)m.collapsed().size() - 1);
            int side = pick(rng, 0, 1) ? m.collapsed()[ce].a : m.collapsed()[ce].b;
            AdmissibleMultidegree t = twist(m, w, ce, side);
            ok = ok && t.total_degree() == d;
            ok = ok && twist(m, t, ce, m.collapsed()[ce].other(side)) == w;
            w = t;
        }
        ++sequences;
    }
    verdict(2, ok && sequences == 1000,
            "degree conservation and twist involution on 1000 random sequences");
}

// --- 3: tropical dictionary -----------------------------------------------

void criterion3() {
    Rng rng(93);
    bool ok = true;
    int families = 0;
    while (families < 100 && ok) {
        CurveModel m = random_graph(rng, 6, 2, 4);
        if (m.collapsed().empty()) continue;
        SubdividedGraph sub = subdivide(m);
        FireGraph fg = FireGraph::of(sub);
        ConcentratedFamily fam = concentrated_family(
            m, pick(rng, 0, 8), (int)pick(rng, 0, (std::int64_t)m.vertices().size() - 1));
        TwistGraph tg = build_twist_graph(m, fam);
        for (const auto& w : tg.vertices) {
            for (size_t ce = 0; ce < m.collapsed().size() && ok; ++ce) {
                for (int side : {m.collapsed()[ce].a, m.collapsed()[ce].b}) {
                    AdmissibleMultidegree tw = twist(m, w, (int)ce, side);
                    auto fire_set = twist_firing_set(m, sub, w, (int)ce, side);
                    ok = ok && to_divisor(m, sub, tw) ==
                                   chip_fire(fg, to_divisor(m, sub, w), fire_set);
                }
            }
        }
        ++families;
    }
    verdict(3, ok && families == 100,
            "twists match chip-firings on 100 random concentrated families");
}

// --- 4: concentration algorithm -------------------------------------------

void criterion4() {
    Rng rng(94);
    bool ok = true;
    int graphs = 0;
    while (graphs < 100 && ok) {
        CurveModel m = random_graph(rng, 7, 3, 5);
        std::int64_t d = pick(rng, 0, 10);
        int seed = (int)pick(rng, 0, (std::int64_t)m.vertices().size() - 1);
        ConcentratedFamily fam = concentrated_family(m, d, seed);
        for (size_t v = 0; v < m.vertices().size() && ok; ++v) {
            ok = ok && fam.at[v].total_degree() == d;
            ok = ok && fam.at[v].min_weight() >= 0;
            ok = ok && is_concentrated(m, fam.at[v], (int)v);
        }
        auto order = m.tree_order(seed);
        for (size_t ce = 0; ce < m.collapsed().size() && ok; ++ce) {
            int a = m.collapsed()[ce].a, b = m.collapsed()[ce].b;
            int child = order.parent[a] == b ? a : b;
            int parent = m.collapsed()[ce].other(child);
            AdmissibleMultidegree w = fam.at[parent];
            for (std::int64_t i = 0; i < fam.b[ce]; ++i)
                w = twist(m, w, (int)ce, parent);
            ok = ok && w == fam.at[child];
        }
        try {
            degree_identity(m, fam, analyze_edges(m, fam, 1, 1 << 20));
        } catch (const Error&) {
            ok = false;
        }
        ++graphs;
    }
    verdict(4, ok && graphs == 100,
            "concentrated families: concentration, nonnegativity, twist chains and "
            "the degree identity on 100 random graphs");
}

// --- 5: rho spot values and the compact-type audit -------------------------

void criterion5() {
    bool ok = rho_classical(3, 1, 2) == -1 && rho_classical(4, 1, 3) == 0;
    ChainGraph g;
    g.vertices.push_back({"u", 0, ComponentClass::Rational, TorsionFlag::Unknown,
                          WeierstrassFlag::Unknown});
    g.vertices.push_back({"v", 0, ComponentClass::Rational, TorsionFlag::Unknown,
                          WeierstrassFlag::Unknown});
    g.edges.push_back({"e", "u", "v", 1});
    CurveModel m = CurveModel::validate(g);
    DimensionReport rep = audit(m, concentrated_family(m, 2, 0), 1);
    ok = ok && rep.rho == 2 && rep.max_expected_dim && *rep.max_expected_dim == 2 &&
         rep.refined_count > 0;
    for (const auto& s : rep.strata)
        if (s.refined) ok = ok && s.expected_dim == 2;
    verdict(5, ok, "rho(3,1,2) = -1, rho(4,1,3) = 0, compact-type audit attains rho "
                   "on refined strata");
}

// --- 6: the genus-3 alternating chain --------------------------------------

void criterion6() {
    ChainGraph g;
    for (char c = 'a'; c <= 'f'; ++c)
        g.vertices.push_back({std::string(1, c), 0, ComponentClass::Rational,
                              TorsionFlag::Unknown, WeierstrassFlag::Unknown});
    int eid = 0;
    auto link = [&](const std::string& u, const std::string& v, int mult) {
        for (int i = 0; i < mult; ++i)
            g.edges.push_back({"e" + std::to_string(eid++), u, v, 1});
    };
    link("a", "b", 2);
    link("b", "c", 1);
    link("c", "d", 2);
    link("d", "e", 1);
    link("e", "f", 2);
    CurveModel m = CurveModel::validate(g);
    DimensionReport rep = audit(m, concentrated_family(m, 2, 0), 1);

    bool ok = rep.rho == -1;
    const StratumReport* hyper = nullptr;
    std::vector<std::int64_t> word{0, 2};
    for (const auto& s : rep.strata) {
        bool all = true;
        for (size_t k = 0; k < rep.edges.size(); ++k) {
            const EdgeStratum& es = rep.edges[k].strata[s.choice[k]];
            all = all && es.a1.a == word && es.a2.a == word;
        }
        if (all) hyper = &s;
    }
    ok = ok && hyper != nullptr;
    if (hyper) {
        ok = ok && hyper->refined && hyper->expected_dim == -1;
        ok = ok && hyper->flags.size() == 3;
        for (const auto& fl : hyper->flags) {
            ok = ok && fl.conditions == 2 && fl.torus_params == 1;
            ok = ok && m.collapsed()[fl.collapsed_edge].multiplicity() == 2;
        }
    }
    verdict(6, ok, "alternating chain: rho = -1, the (0,2) stratum exists and every "
                   "double edge is flagged 2 conditions vs 1 torus parameter");
}

// --- 7: chain-structure genericity ------------------------------------------

void criterion7() {
    bool ok = true;
    for (std::int64_t d = 1; d <= 20 && ok; ++d)
        for (std::int64_t n = d; n <= d + 5 && ok; ++n)
            ok = multi_edge_test({1, n, n * n}, d).pass;
    for (std::int64_t d = 2; d <= 20 && ok; ++d)
        ok = !multi_edge_test({1, 1}, d).pass;

    Rng rng(97);
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::int64_t n1 = pick(rng, 1, 50), n2 = pick(rng, 1, 50);
        std::int64_t d = pick(rng, 1, 100);
        std::int64_t l = std::lcm(n1, n2);
        ok = multi_edge_test({n1, n2}, d).pass == (l / n1 + l / n2 > d);
    }
    for (int trial = 0; trial < 150 && ok; ++trial) {
        size_t k = (size_t)pick(rng, 1, 3);
        std::vector<std::int64_t> ns;
        for (size_t i = 0; i < k; ++i) ns.push_back(pick(rng, 1, 10));
        std::int64_t d = pick(rng, 1, 30);
        bool base = multi_edge_test(ns, d).pass;
        for (std::int64_t c = 2; c <= 5 && ok; ++c) {
            std::vector<std::int64_t> scaled;
            for (std::int64_t n : ns) scaled.push_back(c * n);
            ok = multi_edge_test(scaled, d).pass == base;
        }
    }
    verdict(7, ok, "1,n,n^2 passes for n >= d <= 20; 1,1 fails for d >= 2; closed "
                   "form matches the search on 500 draws; scale invariant to c = 5");
}

// --- 8: binary curves -------------------------------------------------------

void criterion8() {
    Rng rng(98);
    bool ok = true;
    for (std::int64_t g = 2; g <= 10 && ok; ++g) {
        std::vector<ProjPoint> points;
        while (points.size() < (size_t)g + 1) {
            ProjPoint p = ProjPoint::make(pick(rng, -20, 20), pick(rng, 1, 7));
            bool dup = false;
            for (const auto& q : points) dup = dup || q == p;
            if (!dup) points.push_back(p);
        }
        ok = g12_exists(BinaryCurve::make(points, points));
    }
    ok = ok && !g12_exists(BinaryCurve::make(parse_point_list("0,1,inf,2"),
                                             parse_point_list("0,1,inf,3")));
    for (std::int64_t g = 2; g <= 50 && ok; ++g) ok = range_check(g);

    // every reduction emitted across a sweep of binary strata stays in range
    int reductions = 0;
    for (int trial = 0; trial < 120 && ok; ++trial) {
        std::int64_t g = pick(rng, 2, 5);
        ChainGraph graph;
        graph.vertices.push_back({"u", 0, ComponentClass::Rational,
                                  TorsionFlag::Unknown, WeierstrassFlag::Unknown});
        graph.vertices.push_back({"v", 0, ComponentClass::Rational,
                                  TorsionFlag::Unknown, WeierstrassFlag::Unknown});
        for (std::int64_t i = 0; i <= g; ++i)
            graph.edges.push_back({"e" + std::to_string(i), "u", "v",
                                   pick(rng, 1, 2)});
        CurveModel m = CurveModel::validate(graph);
        AdmissibleMultidegree w0 = AdmissibleMultidegree::zero(m);
        w0.w[0] = pick(rng, 0, g - 1);
        w0.w[1] = pick(rng, 0, g - 1);
        if (!is_concentrated(m, w0, 0)) continue;
        ConcentratedFamily fam = concentrated_family(m, w0, 0);
        auto edges = analyze_edges(m, fam, pick(rng, 1, 2), 1 << 20);
        for (const auto& s : edges[0].strata) {
            GluingLedger led = gluing_ledger(m, fam, edges[0], s);
            if (led.reduction) {
                ++reductions;
                ok = ok && led.reduction->reduced_d1 >= 0 &&
                     led.reduction->reduced_d1 <= m.genus() - 1 &&
                     led.reduction->reduced_d2 >= 0 &&
                     led.reduction->reduced_d2 <= m.genus() - 1;
            }
        }
    }
    ok = ok && reductions > 0;
    verdict(8, ok, "self-glued g12 for g in [2,10], the four-point counterexample, "
                   "range containment to g = 50, and all ledger reductions in "
                   "[0, g-1]");
}

// --- 9: oracle self-consistency ---------------------------------------------

void criterion9() {
    Rng rng(99);
    bool ok = true;
    int cases = 0;
    while (cases < 200 && ok) {
        FireGraph g = random_fire_graph(rng, 6, 9);
        TropicalDivisor div;
        div.chips.assign(g.ids.size(), 0);
        std::int64_t degree = pick(rng, 0, 6);
        for (std::int64_t k = 0; k < degree; ++k)
            div.chips[pick(rng, 0, (std::int64_t)g.ids.size() - 1)] += 1;
        TropicalDivisor kd = canonical_divisor(g);
        for (size_t v = 0; v < g.ids.size(); ++v) kd.chips[v] -= div.chips[v];
        ok = ok && bn_rank(g, div) - bn_rank(g, kd) == div.degree() - g.betti() + 1;

        int q = (int)pick(rng, 0, (std::int64_t)g.ids.size() - 1);
        TropicalDivisor noisy = div;
        noisy.chips[pick(rng, 0, (std::int64_t)g.ids.size() - 1)] -= 3;
        noisy.chips[pick(rng, 0, (std::int64_t)g.ids.size() - 1)] += 3;
        TropicalDivisor red = dhar_reduce(g, noisy, q);
        ok = ok && is_reduced(g, red, q) && linearly_equivalent(g, noisy, red);
        ++cases;
    }
    verdict(9, ok && cases == 200,
            "graph Riemann-Roch and q-reduction on 200 sampled divisors");
}

// --- 10: byte-identical audit output across workers -------------------------

void criterion10() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("llsdim_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    {
        std::ofstream curve(dir / "chain.curve");
        curve << "curve v1\n";
        for (char c = 'a'; c <= 'f'; ++c)
            curve << "vertex " << c << " genus=0\n";
        int eid = 0;
        auto link = [&](char u, char v, int mult) {
            for (int i = 0; i < mult; ++i)
                curve << "edge e" << eid++ << " " << u << " " << v << " n=1\n";
        };
        link('a', 'b', 2);
        link('b', 'c', 1);
        link('c', 'd', 2);
        link('d', 'e', 1);
        link('e', 'f', 2);
    }
    auto run = [&](int workers) {
        fs::path out = dir / ("out" + std::to_string(workers));
        std::string cmd = std::string(LLSDIM_CLI_PATH) + " audit " +
                          (dir / "chain.curve").string() +
                          " --degree 2 --rank 1 --list-strata --seed 7 --workers " +
                          std::to_string(workers) + " > " + out.string();
        if (std::system(cmd.c_str()) != 0) return std::string();
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string w1 = run(1), w2 = run(2), w8 = run(8);
    bool ok = !w1.empty() && w1 == w2 && w1 == w8;
    verdict(10, ok, "audit output byte-identical across 1, 2 and 8 workers");
    fs::remove_all(dir);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
