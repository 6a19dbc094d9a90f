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

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "llsdim/audit.hpp"
#include "llsdim/binary_curves.hpp"
#include "llsdim/genericity.hpp"
#include "llsdim/tropical.hpp"

namespace {

using namespace llsdim;

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitInputError = 2;

struct Common {
    std::string format = "records";
    std::int64_t budget = 1000000;
    int workers = 1;
    std::optional<std::int64_t> seed;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"records", "text"}));
    cmd->add_option("--budget", c.budget, "Enumeration budget");
    cmd->add_option("--workers", c.workers, "Worker threads for stratum evaluation")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--seed", c.seed, "Seed echoed for reproducibility records");
}

void echo_seed(const Common& c) {
    if (c.seed) std::cout << "seed_value=" << *c.seed << "\n";
}

CurveModel load_model(const std::string& path) {
    return CurveModel::validate(parse_curve_file(path));
}

int resolve_vertex(const CurveModel& model, const std::string& id) {
    if (id.empty()) return 0;  // canonical first vertex
    return model.vertex_index(id);
}

std::map<std::string, std::int64_t> parse_chip_list(const std::string& text) {
    std::map<std::string, std::int64_t> chips;
    if (text.empty()) return chips;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail_input("ParseError", "chip entry '" + item + "' is not id=count");
        try {
            chips[item.substr(0, eq)] += std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            fail_input("ParseError", "bad chip count in '" + item + "'");
        }
    }
    return chips;
}

TropicalDivisor divisor_from_chips(const SubdividedGraph& sub,
                                   const std::map<std::string, std::int64_t>& chips) {
    TropicalDivisor div;
    div.chips.assign(sub.vertices.size(), 0);
    for (const auto& [id, n] : chips) div.chips[sub.vertex_index(id)] = n;
    return div;
}

void print_divisor(const SubdividedGraph& sub, const TropicalDivisor& div) {
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        std::cout << "chip vertex=" << sub.vertices[i].id << " count=" << div.chips[i]
                  << "\n";
    std::cout << "degree=" << div.degree() << "\n";
}

int cmd_validate(const std::string& path, const Common& c) {
    CurveModel model = load_model(path);
    echo_seed(c);
    if (c.format == "text") {
        std::cout << "valid pseudocompact-type curve\n"
                  << "genus " << model.genus() << ", " << model.vertices().size()
                  << " vertices, " << model.edges().size() << " edges, "
                  << model.collapsed().size() << " collapsed edges\n";
        for (const auto& ce : model.collapsed())
            std::cout << "  " << model.vertices()[ce.a].id << " -- "
                      << model.vertices()[ce.b].id << "  x" << ce.multiplicity() << "\n";
        return kExitOk;
    }
    std::cout << "ok=true\n"
              << "genus=" << model.genus() << "\n"
              << "vertices=" << model.vertices().size() << "\n"
              << "edges=" << model.edges().size() << "\n"
              << "collapsed_edges=" << model.collapsed().size() << "\n";
    for (const auto& ce : model.collapsed()) {
        std::cout << "collapsed pair=" << model.vertices()[ce.a].id << "-"
                  << model.vertices()[ce.b].id << " multiplicity=" << ce.multiplicity()
                  << " edges=";
        for (size_t i = 0; i < ce.edge_indices.size(); ++i)
            std::cout << (i ? "," : "") << model.edges()[ce.edge_indices[i]].id;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_family(const std::string& path, std::int64_t degree, const std::string& at,
               bool with_twist_graph, const Common& c) {
    CurveModel model = load_model(path);
    if (degree < 0) fail_input("ParseError", "--degree must be nonnegative");
    int seed = resolve_vertex(model, at);
    ConcentratedFamily fam = concentrated_family(model, degree, seed);
    echo_seed(c);
    std::cout << "seed=" << model.vertices()[fam.seed].id << "\n"
              << "degree=" << fam.d << "\n";
    for (size_t v = 0; v < model.vertices().size(); ++v)
        std::cout << "family vertex=" << model.vertices()[v].id << " dv=" << fam.dv[v]
                  << " " << fam.at[v].describe(model) << "\n";
    for (size_t ce = 0; ce < model.collapsed().size(); ++ce)
        std::cout << "family_b pair=" << model.vertices()[model.collapsed()[ce].a].id
                  << "-" << model.vertices()[model.collapsed()[ce].b].id
                  << " b=" << fam.b[ce] << "\n";
    if (with_twist_graph) {
        TwistGraph tg = build_twist_graph(model, fam);
        std::cout << "tg_vertices=" << tg.vertices.size() << "\n"
                  << "tg_arcs=" << tg.arcs.size() << "\n";
        for (size_t i = 0; i < tg.vertices.size(); ++i)
            std::cout << "tgvertex id=" << i << " " << tg.vertices[i].describe(model)
                      << "\n";
        for (const auto& arc : tg.arcs)
            std::cout << "tgarc from=" << arc.from << " to=" << arc.to << " pair="
                      << model.vertices()[model.collapsed()[arc.collapsed_edge].a].id
                      << "-"
                      << model.vertices()[model.collapsed()[arc.collapsed_edge].b].id
                      << " at=" << model.vertices()[arc.at_vertex].id << "\n";
    }
    return kExitOk;
}

int cmd_divseq(const std::string& path, std::int64_t degree, const std::string& at,
               const std::string& toward, const Common& c) {
    CurveModel model = load_model(path);
    if (degree < 0) fail_input("ParseError", "--degree must be nonnegative");
    int side = resolve_vertex(model, at);
    int other = model.vertex_index(toward);
    int ce = model.collapsed_between(side, other);
    if (ce < 0)
        fail_input("NotAdjacent", "no collapsed edge between " + at + " and " + toward);
    ConcentratedFamily fam = concentrated_family(model, degree, side);
    DivisorSequence s1 = divisor_sequence(model, fam, ce, side);
    DivisorSequence s2 = divisor_sequence(model, fam, ce, other);
    EdgePairStats stats = pair_stats(s1, s2);
    echo_seed(c);
    std::cout << "pair=" << model.vertices()[side].id << "-"
              << model.vertices()[other].id << " side=" << model.vertices()[side].id
              << " b=" << stats.b << "\n";
    for (std::int64_t i = 0; i < (std::int64_t)s1.degrees.size(); ++i) {
        std::cout << "entry i=" << i << " degree=" << s1.degrees[i] << " support=";
        auto entry = s1.entry(model, i);
        bool first = true;
        for (const auto& [id, mult] : entry) {
            std::cout << (first ? "" : ",") << id << ":" << mult;
            first = false;
        }
        std::cout << "\n";
    }
    std::cout << "stats c=" << stats.c << " critical=";
    for (size_t i = 0; i < stats.critical.size(); ++i)
        std::cout << (i ? "," : "") << stats.critical[i];
    std::cout << " f=";
    for (size_t i = 0; i < stats.f.size(); ++i)
        std::cout << (i ? "," : "") << stats.f[i];
    std::cout << "\n";
    if (stats.c_subscript_divergent) std::cout << "c_subscript_divergent=true\n";
    return kExitOk;
}

int cmd_audit(const std::string& path, std::int64_t degree, std::int64_t rank,
              const std::string& at, bool list_strata, const Common& c) {
    CurveModel model = load_model(path);
    if (degree < 1) fail_input("ParseError", "--degree must be positive");
    if (rank < 1) fail_input("ParseError", "--rank must be positive");
    int seed = resolve_vertex(model, at);
    ConcentratedFamily fam = concentrated_family(model, degree, seed);
    AuditOptions opts;
    opts.budget = c.budget;
    opts.workers = c.workers;
    DimensionReport rep = audit(model, fam, rank, opts);
    echo_seed(c);
    if (c.format == "text") {
        std::cout << "rho " << rep.rho << ", " << rep.strata.size() << " strata ("
                  << rep.refined_count << " refined)\n";
        if (rep.max_expected_dim)
            std::cout << "max expected dimension " << *rep.max_expected_dim
                      << (rep.max_expected_dim == rep.rho ? " = rho" : " < rho") << "\n";
        else
            std::cout << "no admissible strata\n";
        return kExitOk;
    }
    std::cout << render_audit_records(model, fam, rep, list_strata);
    return kExitOk;
}

int cmd_genericity(const std::string& path, std::int64_t degree, const Common& c) {
    CurveModel model = load_model(path);
    if (degree < 1) fail_input("ParseError", "--degree must be positive");
    GenericityReport rep = check_curve(model, degree);
    echo_seed(c);
    if (c.format == "text") {
        for (const auto& pr : rep.pairs) {
            const auto& ce = model.collapsed()[pr.collapsed_edge];
            std::cout << model.vertices()[ce.a].id << " -- " << model.vertices()[ce.b].id
                      << ": " << pr.multiplicity << " edge(s), count "
                      << (pr.cond_one ? "ok" : "too many") << ", chain lengths "
                      << (pr.cond_two ? "generic" : "degenerate");
            if (pr.witness)
                std::cout << " (x = " << pr.witness->x << " on edge " << pr.witness->j
                          << " climbs only " << pr.witness->floor_sum << ")";
            std::cout << "\n";
        }
        std::cout << (rep.overall ? "genericity conditions hold"
                                  : "genericity conditions fail")
                  << " at degree " << degree << "\n";
        return rep.overall ? kExitOk : kExitConditionFailed;
    }
    for (const auto& pr : rep.pairs) {
        const auto& ce = model.collapsed()[pr.collapsed_edge];
        std::cout << "pair=" << model.vertices()[ce.a].id << "-"
                  << model.vertices()[ce.b].id << " m=" << pr.multiplicity
                  << " cond1=" << (pr.cond_one ? "true" : "false")
                  << " cond2=" << (pr.cond_two ? "true" : "false");
        if (pr.witness)
            std::cout << " witness_j=" << pr.witness->j << " witness_x=" << pr.witness->x
                      << " witness_floor_sum=" << pr.witness->floor_sum;
        std::cout << "\n";
    }
    for (const auto& cert : rep.certificates) {
        std::cout << "component vertex=" << cert.vertex
                  << " status=" << to_string(cert.status)
                  << " case=" << to_string(cert.case_tag);
        if (cert.blocking_flag) std::cout << " blocked_by=" << *cert.blocking_flag;
        std::cout << "\n";
    }
    std::cout << "overall=" << (rep.overall ? "true" : "false") << "\n";
    return rep.overall ? kExitOk : kExitConditionFailed;
}

int cmd_degeneration(const std::string& path, const Common& c) {
    CurveModel model = load_model(path);
    bool ok = degeneration_check(model);
    echo_seed(c);
    if (c.format == "text")
        std::cout << (ok ? "the generic fiber of this degeneration is Brill-Noether "
                           "general"
                         : "the checker cannot certify this degeneration")
                  << "\n";
    else
        std::cout << "degeneration=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitConditionFailed;
}

int cmd_rho(std::int64_t genus, std::int64_t rank, std::int64_t degree, const Common& c) {
    if (rank < 1 || degree < 1) fail_input("ParseError", "rank and degree must be positive");
    echo_seed(c);
    if (c.format == "text")
        std::cout << "rho = " << rho_classical(genus, rank, degree) << "\n";
    else
        std::cout << "rho=" << rho_classical(genus, rank, degree) << "\n";
    return kExitOk;
}

int cmd_tropical(const std::string& mode, const std::string& path,
                 const std::string& chips_text, const std::string& at,
                 const std::string& fire_set, const Common& c) {
    CurveModel model = load_model(path);
    SubdividedGraph sub = subdivide(model);
    FireGraph fg = FireGraph::of(sub);
    TropicalDivisor div = divisor_from_chips(sub, parse_chip_list(chips_text));
    echo_seed(c);
    if (mode == "rank") {
        std::cout << "rank=" << bn_rank(fg, div) << "\n"
                  << "degree=" << div.degree() << "\n";
        return kExitOk;
    }
    if (mode == "reduce") {
        int q = at.empty() ? 0 : sub.vertex_index(at);
        TropicalDivisor red = dhar_reduce(fg, div, q);
        std::cout << "at=" << sub.vertices[q].id << "\n";
        print_divisor(sub, red);
        return kExitOk;
    }
    if (mode == "fire") {
        std::vector<int> set;
        std::stringstream ss(fire_set);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) set.push_back(sub.vertex_index(item));
        print_divisor(sub, chip_fire(fg, div, set));
        return kExitOk;
    }
    fail_input("ParseError", "tropical mode must be rank, reduce or fire");
}

int cmd_binary_g12(const std::string& p1, const std::string& p2, const Common& c) {
    BinaryCurve curve = BinaryCurve::make(parse_point_list(p1), parse_point_list(p2));
    bool ok = g12_exists(curve);
    echo_seed(c);
    if (c.format == "text")
        std::cout << "genus " << curve.g << ": the marked points "
                  << (ok ? "match up to automorphism; a degree-2 pencil exists"
                         : "do not match; no degree-2 pencil of multidegree (1,1)")
                  << "\n";
    else
        std::cout << "genus=" << curve.g << "\n"
                  << "g12=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitConditionFailed;
}

int cmd_binary_ranges(std::int64_t genus, const Common& c) {
    bool ok = range_check(genus);
    echo_seed(c);
    if (c.format == "text")
        std::cout << "genus " << genus << ": weak multidegree window "
                  << (ok ? "contained in" : "escapes") << " the wider range\n";
    else
        std::cout << "genus=" << genus << "\n"
                  << "ranges_ok=" << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitConditionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expected-dimension calculus for limit linear series on curves of "
                 "pseudocompact type"};
    app.require_subcommand(1);

    Common common;
    std::string path, at, toward, chips, fire_set, points1, points2, tropical_mode;
    std::int64_t degree = 1, rank = 1, genus = 2;
    bool list_strata = false;
    int rc = kExitOk;

    auto* validate = app.add_subcommand("validate", "Check the pseudocompact-type hypotheses");
    validate->add_option("file", path)->required();
    add_common(validate, common);
    validate->callback([&] { rc = cmd_validate(path, common); });

    auto* genuscmd = app.add_subcommand("genus", "Arithmetic genus of the curve");
    genuscmd->add_option("file", path)->required();
    add_common(genuscmd, common);
    genuscmd->callback([&] {
        CurveModel model = load_model(path);
        echo_seed(common);
        std::cout << "genus=" << model.genus() << "\n";
    });

    auto* conc = app.add_subcommand("concentrate", "Concentrated multidegree family");
    conc->add_option("file", path)->required();
    conc->add_option("--degree", degree, "Total degree")->required();
    conc->add_option("--at", at, "Seed vertex (default: first by id)");
    add_common(conc, common);
    conc->callback([&] { rc = cmd_family(path, degree, at, false, common); });

    auto* tw = app.add_subcommand("twistgraph", "Family plus its twist graph");
    tw->add_option("file", path)->required();
    tw->add_option("--degree", degree, "Total degree")->required();
    tw->add_option("--at", at, "Seed vertex (default: first by id)");
    add_common(tw, common);
    tw->callback([&] { rc = cmd_family(path, degree, at, true, common); });

    auto* dv = app.add_subcommand("divseq", "Divisor ladder on one side of a collapsed edge");
    dv->add_option("file", path)->required();
    dv->add_option("--degree", degree, "Total degree")->required();
    dv->add_option("--at", at, "Side vertex, also the family seed")->required();
    dv->add_option("--toward", toward, "Opposite vertex of the collapsed edge")->required();
    add_common(dv, common);
    dv->callback([&] { rc = cmd_divseq(path, degree, at, toward, common); });

    auto* au = app.add_subcommand("audit", "Per-stratum expected-dimension ledger");
    au->add_option("file", path)->required();
    au->add_option("--degree", degree, "Total degree")->required();
    au->add_option("--rank", rank, "Rank r")->required();
    au->add_option("--at", at, "Seed vertex (default: first by id)");
    au->add_flag("--list-strata", list_strata, "Print one record per stratum");
    add_common(au, common);
    au->callback([&] { rc = cmd_audit(path, degree, rank, at, list_strata, common); });

    auto* gen = app.add_subcommand("genericity", "Chain-structure genericity conditions");
    gen->add_option("file", path)->required();
    gen->add_option("--degree", degree, "Degree d")->required();
    add_common(gen, common);
    gen->callback([&] { rc = cmd_genericity(path, degree, common); });

    auto* deg = app.add_subcommand("degeneration", "Composite degeneration checker");
    deg->add_option("file", path)->required();
    add_common(deg, common);
    deg->callback([&] { rc = cmd_degeneration(path, common); });

    auto* rho = app.add_subcommand("rho", "Brill-Noether number");
    rho->add_option("--genus", genus, "Genus g")->required();
    rho->add_option("--rank", rank, "Rank r")->required();
    rho->add_option("--degree", degree, "Degree d")->required();
    add_common(rho, common);
    rho->callback([&] { rc = cmd_rho(genus, rank, degree, common); });

    auto* trop = app.add_subcommand("tropical", "Chip-firing on the subdivided graph");
    trop->add_option("mode", tropical_mode, "rank | reduce | fire")->required();
    trop->add_option("file", path)->required();
    trop->add_option("--chips", chips, "Divisor as id=count,id=count");
    trop->add_option("--at", at, "Base vertex for reduce");
    trop->add_option("--set", fire_set, "Comma-separated firing set for fire");
    add_common(trop, common);
    trop->callback([&] {
        rc = cmd_tropical(tropical_mode, path, chips, at, fire_set, common);
    });

    auto* bin = app.add_subcommand("binary", "Exact checks for binary curves");
    bin->require_subcommand(1);
    auto* g12 = bin->add_subcommand("g12", "Degree-2 pencil existence");
    g12->add_option("--points1", points1, "Marked points on the first component")->required();
    g12->add_option("--points2", points2, "Marked points on the second component")->required();
    add_common(g12, common);
    g12->callback([&] { rc = cmd_binary_g12(points1, points2, common); });
    auto* ranges = bin->add_subcommand("ranges", "Weak range containment");
    ranges->add_option("--genus", genus, "Genus g >= 2")->required();
    add_common(ranges, common);
    ranges->callback([&] { rc = cmd_binary_ranges(genus, common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << "error=Usage\n";
        std::cerr << e.what() << "\n";
        return kExitInputError;
    } catch (const llsdim::Error& e) {
        std::cout << "error=" << e.token() << "\n";
        std::cerr << e.what() << "\n";
        return e.kind() == llsdim::ErrorKind::Input ? kExitInputError
                                                    : kExitConditionFailed;
    } catch (const std::exception& e) {
        std::cout << "error=Internal\n";
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }
    return rc;
}
