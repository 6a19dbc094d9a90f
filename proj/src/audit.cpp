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

#include "llsdim/audit.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace llsdim {

std::int64_t rho_with_vanishing(std::int64_t g, std::int64_t r, std::int64_t d,
                                const std::vector<MultivanishingSequence>& constraints) {
    std::int64_t rho = g + (r + 1) * (d - r - g);
    for (const auto& a : constraints) rho -= schubert_codim(a);
    return rho;
}

std::vector<EdgeAnalysis> analyze_edges(const CurveModel& model,
                                        const ConcentratedFamily& family,
                                        std::int64_t r, std::int64_t budget) {
    std::vector<EdgeAnalysis> out;
    for (size_t ce = 0; ce < model.collapsed().size(); ++ce) {
        EdgeAnalysis ea;
        ea.collapsed_edge = (int)ce;
        ea.side1 = model.collapsed()[ce].a;
        ea.side2 = model.collapsed()[ce].b;
        ea.seq1 = divisor_sequence(model, family, (int)ce, ea.side1);
        ea.seq2 = divisor_sequence(model, family, (int)ce, ea.side2);
        ea.stats = pair_stats(ea.seq1, ea.seq2);
        ea.lad1 = Ladder::of(ea.seq1);
        ea.lad2 = Ladder::of(ea.seq2);
        ea.strata = edge_strata(ea.lad1, ea.lad2, r, family.dv[ea.side1],
                                family.dv[ea.side2], budget);
        out.push_back(std::move(ea));
    }
    return out;
}

void degree_identity(const CurveModel& model, const ConcentratedFamily& family,
                     const std::vector<EdgeAnalysis>& edges) {
    std::int64_t sum_dv = 0;
    for (std::int64_t dv : family.dv) sum_dv += dv;
    std::int64_t sum_c = 0;
    for (const auto& ea : edges) sum_c += ea.stats.c;
    std::int64_t rhs = sum_dv - sum_c + (std::int64_t)model.edges().size();
    if (rhs != family.d)
        fail_condition("IdentityViolation",
                       "d = " + std::to_string(family.d) + " but sum d_v - sum c + |E| = " +
                           std::to_string(rhs));
}

BalanceResult combin_balance(const EdgePairStats& stats, const EdgeStratum& stratum) {
    std::int64_t b = stats.b;
    std::int64_t r = (std::int64_t)stratum.a1.a.size() - 1;
    BalanceResult res;
    res.g.assign(b + 1, 0);

    std::int64_t running = 0;  // sum over earlier critical m of r1_m - r2_{b-m}
    for (int j : stats.critical) {
        std::int64_t r1 = stratum.a1.r_mult[j];
        std::int64_t r2 = stratum.a2.r_mult[b - j];
        std::int64_t gj = r1 + running;
        res.g[j] = gj;
        std::int64_t summand = gj * (stats.f[j] + gj - r1 - r2);
        res.lhs += summand;
        res.clamped_lhs += std::max<std::int64_t>(0, summand);
        running += r1 - r2;
    }

    std::int64_t a_pairs = 0;
    for (std::int64_t l = 0; l <= r; ++l)
        a_pairs += stratum.a1.a[l] + stratum.a2.a[r - l];
    std::int64_t binoms = 0;
    for (int j : stats.critical)
        binoms += binom2(stratum.a1.r_mult[j]) + binom2(stratum.a2.r_mult[b - j]);
    res.rhs = (r + 1) * (stats.c - 1) - a_pairs - binoms;

    if (res.lhs < res.rhs || (res.lhs == res.rhs) != stratum.refined) {
        std::ostringstream os;
        os << "lhs=" << res.lhs << " rhs=" << res.rhs
           << " refined=" << (stratum.refined ? "true" : "false") << " a1=";
        for (auto v : stratum.a1.a) os << v << ",";
        os << " a2=";
        for (auto v : stratum.a2.a) os << v << ",";
        fail_condition("LemmaViolation", os.str());
    }
    return res;
}

std::int64_t vanishing_codim_edge(std::int64_t r, const EdgeStratum& s) {
    std::int64_t a_pairs = 0;
    for (std::int64_t l = 0; l <= r; ++l)
        a_pairs += s.a1.a[l] + s.a2.a[r - l];
    std::int64_t binoms = 0;
    for (std::int64_t m : s.a1.r_mult) binoms += binom2(m);
    for (std::int64_t m : s.a2.r_mult) binoms += binom2(m);
    return -r * (r + 1) + a_pairs + binoms;
}

std::int64_t gluing_codim_edge(const EdgePairStats& stats, const EdgeStratum& s) {
    std::int64_t b = stats.b;
    std::int64_t total = 0;
    std::int64_t running = 0;
    for (int j : stats.critical) {
        std::int64_t r1 = s.a1.r_mult[j];
        std::int64_t r2 = s.a2.r_mult[b - j];
        std::int64_t gj = r1 + running;
        total += std::max<std::int64_t>(0, gj * (stats.f[j] + gj - r1 - r2));
        running += r1 - r2;
    }
    return total;
}

namespace {

StratumReport evaluate_stratum(const CurveModel& model, std::int64_t r,
                               std::int64_t rho, std::int64_t base_dim,
                               const std::vector<EdgeAnalysis>& edges,
                               std::uint64_t id) {
    StratumReport rep;
    rep.id = id;
    rep.base_dim = base_dim;
    rep.refined = true;

    // Mixed-radix decode, least significant digit on the first edge.
    std::uint64_t rest = id;
    for (const auto& ea : edges) {
        rep.choice.push_back((int)(rest % ea.strata.size()));
        rest /= ea.strata.size();
    }

    std::int64_t alt = rho;  // second route: rho + sum(rhs - clamped lhs)
    for (size_t k = 0; k < edges.size(); ++k) {
        const EdgeAnalysis& ea = edges[k];
        const EdgeStratum& s = ea.strata[rep.choice[k]];
        rep.refined = rep.refined && s.refined;
        rep.vanishing_codim += vanishing_codim_edge(r, s);
        BalanceResult bal = combin_balance(ea.stats, s);
        rep.gluing_codim += bal.clamped_lhs;
        alt += bal.rhs - bal.clamped_lhs;

        std::int64_t m = model.collapsed()[ea.collapsed_edge].multiplicity();
        if (bal.clamped_lhs > m - 1)
            rep.flags.push_back({ea.collapsed_edge, bal.clamped_lhs, m - 1});
    }
    rep.expected_dim = rep.base_dim - rep.vanishing_codim - rep.gluing_codim;

    if (rep.expected_dim != alt)
        fail_condition("LemmaViolation",
                       "ledger and rearranged routes disagree: " +
                           std::to_string(rep.expected_dim) + " vs " +
                           std::to_string(alt));
    if (rep.expected_dim > rho || (rep.expected_dim == rho) != rep.refined)
        fail_condition("LemmaViolation",
                       "expected dimension " + std::to_string(rep.expected_dim) +
                           " violates the rho bound " + std::to_string(rho));
    return rep;
}

}  // namespace

DimensionReport audit(const CurveModel& model, const ConcentratedFamily& family,
                      std::int64_t r, const AuditOptions& opts) {
    DimensionReport report;
    report.r = r;
    report.rho = rho_classical(model.genus(), r, family.d);
    for (size_t v = 0; v < model.vertices().size(); ++v)
        report.certificates.push_back(classify_component_status(model, (int)v));

    report.edges = analyze_edges(model, family, r, opts.budget);
    degree_identity(model, family, report.edges);

    std::int64_t base = (std::int64_t)model.edges().size() -
                        (std::int64_t)model.vertices().size() + 1;
    for (size_t v = 0; v < model.vertices().size(); ++v) {
        std::int64_t gv = model.vertices()[v].genus;
        base += gv + (r + 1) * (family.dv[v] - r - gv);
    }

    unsigned __int128 wide = 1;
    for (const auto& ea : report.edges) {
        if (ea.strata.empty()) {
            wide = 0;
            break;
        }
        wide *= ea.strata.size();
        if (wide > (unsigned __int128)opts.budget)
            fail_input("EnumerationBudgetExceeded",
                       "global stratum count exceeds budget " +
                           std::to_string(opts.budget));
    }
    std::uint64_t total = (std::uint64_t)wide;

    report.strata.resize(total);
    int workers = std::max(1, opts.workers);
    if (total > 0) {
        std::vector<std::exception_ptr> errors(workers);
        std::uint64_t chunk = total / workers;
        std::uint64_t rem = total % workers;
        auto run = [&](int wk) {
            std::uint64_t lo = wk * chunk + std::min<std::uint64_t>(wk, rem);
            std::uint64_t hi = lo + chunk + (std::uint64_t)((std::uint64_t)wk < rem);
            try {
                for (std::uint64_t id = lo; id < hi; ++id)
                    report.strata[id] = evaluate_stratum(model, r, report.rho,
                                                         base, report.edges, id);
            } catch (...) {
                errors[wk] = std::current_exception();
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int wk = 0; wk < workers; ++wk) pool.emplace_back(run, wk);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (const auto& s : report.strata) {
        if (!report.max_expected_dim || s.expected_dim > *report.max_expected_dim)
            report.max_expected_dim = s.expected_dim;
        if (s.refined) ++report.refined_count;
    }
    if (report.max_expected_dim) {
        bool attains = (*report.max_expected_dim == report.rho);
        if (attains != (report.refined_count > 0))
            fail_condition("LemmaViolation",
                           "max expected dimension should equal rho exactly when a "
                           "refined stratum exists");
    }
    return report;
}

std::string render_audit_records(const CurveModel& model,
                                 const ConcentratedFamily& family,
                                 const DimensionReport& report, bool list_strata) {
    std::ostringstream os;
    os << "rho=" << report.rho << "\n";
    os << "genus=" << model.genus() << "\n";
    os << "degree=" << family.d << "\n";
    os << "rank=" << report.r << "\n";
    os << "seed=" << model.vertices()[family.seed].id << "\n";
    for (const auto& cert : report.certificates) {
        os << "certificate vertex=" << cert.vertex
           << " status=" << to_string(cert.status)
           << " case=" << to_string(cert.case_tag);
        if (cert.blocking_flag) os << " blocked_by=" << *cert.blocking_flag;
        os << "\n";
    }
    for (const auto& ea : report.edges) {
        const auto& ce = model.collapsed()[ea.collapsed_edge];
        os << "edge pair=" << model.vertices()[ce.a].id << "-"
           << model.vertices()[ce.b].id << " m=" << ce.multiplicity()
           << " b=" << ea.stats.b << " c=" << ea.stats.c
           << " strata=" << ea.strata.size();
        if (ea.stats.c_subscript_divergent) os << " c_subscript_divergent=true";
        os << "\n";
    }
    os << "strata_total=" << report.strata.size() << "\n";
    for (const auto& s : report.strata) {
        os << "stratum id=" << s.id << " refined=" << (s.refined ? "true" : "false")
           << " base=" << s.base_dim << " vancodim=" << s.vanishing_codim
           << " gluecodim=" << s.gluing_codim << " expdim=" << s.expected_dim
           << " flags=" << s.flags.size() << "\n";
        for (const auto& fl : s.flags) {
            const auto& ce = model.collapsed()[fl.collapsed_edge];
            os << "flag stratum=" << s.id << " pair=" << model.vertices()[ce.a].id
               << "-" << model.vertices()[ce.b].id << " conditions=" << fl.conditions
               << " torus=" << fl.torus_params << "\n";
        }
        if (list_strata) {
            for (size_t k = 0; k < report.edges.size(); ++k) {
                const EdgeAnalysis& ea = report.edges[k];
                const EdgeStratum& es = ea.strata[s.choice[k]];
                const auto& ce = model.collapsed()[ea.collapsed_edge];
                os << "vanishing stratum=" << s.id << " pair="
                   << model.vertices()[ce.a].id << "-" << model.vertices()[ce.b].id
                   << " a1=";
                for (size_t i = 0; i < es.a1.a.size(); ++i)
                    os << (i ? "," : "") << es.a1.a[i];
                os << " a2=";
                for (size_t i = 0; i < es.a2.a.size(); ++i)
                    os << (i ? "," : "") << es.a2.a[i];
                os << " refined=" << (es.refined ? "true" : "false") << "\n";
            }
        }
    }
    if (report.max_expected_dim) {
        os << "maxexpdim=" << *report.max_expected_dim << "\n";
        os << "maxexpdim_equals_rho="
           << (*report.max_expected_dim == report.rho ? "true" : "false") << "\n";
    } else {
        os << "maxexpdim=none\n";
    }
    os << "refined_strata=" << report.refined_count << "\n";
    return os.str();
}

}  // namespace llsdim
