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

#include "llsdim/genericity.hpp"

#include <algorithm>
#include <numeric>

namespace llsdim {

bool semigroup_member(std::int64_t target, const std::vector<std::int64_t>& gens) {
    if (target == 0) return true;
    if (gens.empty() || target < 0) return false;
    std::vector<char> reach(target + 1, 0);
    reach[0] = 1;
    for (std::int64_t t = 1; t <= target; ++t)
        for (std::int64_t g : gens)
            if (g <= t && reach[t - g]) {
                reach[t] = 1;
                break;
            }
    return reach[target] != 0;
}

MultiEdgeResult multi_edge_test(const std::vector<std::int64_t>& ns, std::int64_t d) {
    if (ns.empty()) fail_input("ParseError", "empty chain-length list");
    if (d < 1) fail_input("ParseError", "degree must be positive");
    for (std::int64_t n : ns)
        if (n < 1) fail_input("BadChainLength", "chain length below 1");

    MultiEdgeResult res;
    for (size_t j = 0; j < ns.size(); ++j) {
        std::vector<std::int64_t> others;
        for (size_t i = 0; i < ns.size(); ++i)
            if (i != j) others.push_back(ns[i]);
        for (std::int64_t x = 1; x <= d; ++x) {
            if (!semigroup_member(x * ns[j], others)) continue;
            std::int64_t floor_sum = 0;
            for (std::int64_t n : ns) floor_sum += (x * ns[j]) / n;
            if (floor_sum <= d) {
                res.pass = false;
                if (!res.witness) res.witness = ChainWitness{(std::int64_t)j, x, floor_sum};
            }
            break;  // minimal witness decides: the floor sum grows with x
        }
        if (!res.pass) break;
    }

    if (ns.size() == 2) {
        // Closed form for a pair: minimal witness is lcm/n_j on either side.
        std::int64_t l = std::lcm(ns[0], ns[1]);
        bool closed = (l / ns[0] + l / ns[1]) > d;
        if (closed != res.pass)
            fail_condition("LemmaViolation",
                           "two-edge closed form disagrees with the semigroup search");
    }
    return res;
}

GenericityReport check_curve(const CurveModel& model, std::int64_t d) {
    GenericityReport rep;
    bool ok = true;
    for (size_t ce = 0; ce < model.collapsed().size(); ++ce) {
        PairReport pr;
        pr.collapsed_edge = (int)ce;
        pr.multiplicity = model.collapsed()[ce].multiplicity();
        pr.cond_one = pr.multiplicity <= 3;
        std::vector<std::int64_t> ns;
        for (int ei : model.collapsed()[ce].edge_indices)
            ns.push_back(model.edges()[ei].chain_length);
        MultiEdgeResult mr = multi_edge_test(ns, d);
        pr.cond_two = mr.pass;
        pr.witness = mr.witness;
        ok = ok && pr.cond_one && pr.cond_two;
        rep.pairs.push_back(std::move(pr));
    }
    for (size_t v = 0; v < model.vertices().size(); ++v) {
        StrongBNCertificate cert = classify_component_status(model, (int)v);
        if (cert.status == CertStatus::RequiresGenerality) ok = false;
        rep.certificates.push_back(std::move(cert));
    }
    rep.overall = ok;
    return rep;
}

namespace {

enum class FormCheck { Pass, Fail, NeedsFlag };

FormCheck component_form(const CurveModel& model, int vertex, std::string* flag) {
    std::int64_t g = model.vertices()[vertex].genus;
    std::vector<std::int64_t> mult;
    for (int ce : model.incident(vertex))
        mult.push_back(model.collapsed()[ce].multiplicity());
    std::int64_t n = (std::int64_t)mult.size();
    bool all_single = std::all_of(mult.begin(), mult.end(),
                                  [](std::int64_t m) { return m == 1; });
    bool all_le3 = std::all_of(mult.begin(), mult.end(),
                               [](std::int64_t m) { return m <= 3; });

    if (g == 0) return (n <= 2 && all_le3) || all_single ? FormCheck::Pass : FormCheck::Fail;
    if (g == 1) {
        if (n == 0) return FormCheck::Pass;
        if (!all_single || n > 2) return FormCheck::Fail;
        if (n == 1) return FormCheck::Pass;
        switch (model.vertices()[vertex].torsion) {
            case TorsionFlag::None: return FormCheck::Pass;
            case TorsionFlag::Present: return FormCheck::Fail;
            case TorsionFlag::Unknown: *flag = "torsion"; return FormCheck::NeedsFlag;
        }
    }
    if (g == 2) {
        if (n == 0) return FormCheck::Pass;
        if (n > 1 || !all_single) return FormCheck::Fail;
        switch (model.vertices()[vertex].weierstrass) {
            case WeierstrassFlag::No: return FormCheck::Pass;
            case WeierstrassFlag::Yes: return FormCheck::Fail;
            case WeierstrassFlag::Unknown: *flag = "weierstrass"; return FormCheck::NeedsFlag;
        }
    }
    return FormCheck::Fail;
}

}  // namespace

bool degeneration_check(const CurveModel& model) {
    std::int64_t d = 2 * model.genus() - 2;
    bool chain_ok = true;
    if (d >= 1) {
        for (const auto& ce : model.collapsed()) {
            std::vector<std::int64_t> ns;
            for (int ei : ce.edge_indices) ns.push_back(model.edges()[ei].chain_length);
            if (!multi_edge_test(ns, d).pass) {
                chain_ok = false;
                break;
            }
        }
    }

    bool forms_ok = true;
    std::string blocked_vertex, blocked_flag;
    for (size_t v = 0; v < model.vertices().size(); ++v) {
        std::string flag;
        switch (component_form(model, (int)v, &flag)) {
            case FormCheck::Pass: break;
            case FormCheck::Fail: forms_ok = false; break;
            case FormCheck::NeedsFlag:
                if (blocked_vertex.empty()) {
                    blocked_vertex = model.vertices()[v].id;
                    blocked_flag = flag;
                }
                break;
        }
    }
    // A definite failure answers the question; an unknown flag only blocks
    // when everything else passes.
    if (!forms_ok || !chain_ok) return false;
    if (!blocked_vertex.empty())
        fail_input("UnknownFlag", "vertex " + blocked_vertex + " needs a known " +
                                      blocked_flag + " flag");
    return true;
}

}  // namespace llsdim
