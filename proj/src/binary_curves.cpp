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

#include "llsdim/binary_curves.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace llsdim {

namespace {

std::int64_t narrow128(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        fail_input("ParseError", std::string("integer overflow in ") + what);
    return (std::int64_t)v;
}

// det [p | q] over the integers.
__int128 det2(const ProjPoint& p, const ProjPoint& q) {
    return (__int128)p.x * q.y - (__int128)p.y * q.x;
}

}  // namespace

ProjPoint ProjPoint::make(std::int64_t x, std::int64_t y) {
    if (x == 0 && y == 0) fail_input("DegenerateInput", "[0 : 0] is not a point");
    std::int64_t g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    x /= g;
    y /= g;
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return ProjPoint{x, y};
}

std::string ProjPoint::str() const {
    if (y == 0) return "inf";
    if (y == 1) return std::to_string(x);
    return std::to_string(x) + "/" + std::to_string(y);
}

ProjPoint parse_point(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return ProjPoint::infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            std::int64_t p = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return ProjPoint::make(p, 1);
        }
        size_t pos = 0;
        std::int64_t p = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        std::int64_t q = std::stoll(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1) throw std::invalid_argument(text);
        return ProjPoint::make(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_input("ParseError", "bad point '" + text + "'");
    }
}

std::vector<ProjPoint> parse_point_list(const std::string& text) {
    std::vector<ProjPoint> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) fail_input("ParseError", "empty entry in point list");
        out.push_back(parse_point(item));
    }
    if (out.empty()) fail_input("ParseError", "empty point list");
    return out;
}

ProjPoint Mobius::apply(const ProjPoint& p) const {
    __int128 nx = (__int128)a * p.x + (__int128)b * p.y;
    __int128 ny = (__int128)c * p.x + (__int128)d * p.y;
    return ProjPoint::make(narrow128(nx, "Mobius apply"), narrow128(ny, "Mobius apply"));
}

bool Mobius::invertible() const {
    return (__int128)a * d - (__int128)b * c != 0;
}

namespace {

// Matrix sending the standard frame [1:0], [0:1], [1:1] to p0, p1, p2:
// columns are p0, p1 scaled so that their sum is p2.
struct Mat128 {
    __int128 a, b, c, d;
};

Mat128 frame_matrix(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2) {
    __int128 l0 = det2(p2, p1);
    __int128 l1 = det2(p0, p2);
    if (l0 == 0 || l1 == 0 || det2(p0, p1) == 0)
        fail_input("DegenerateInput", "frame points are not distinct");
    return Mat128{l0 * p0.x, l1 * p1.x, l0 * p0.y, l1 * p1.y};
}

Mobius reduce(__int128 a, __int128 b, __int128 c, __int128 d) {
    auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
    __int128 g = 0;
    for (__int128 v : {a, b, c, d}) {
        v = abs128(v);
        while (v != 0) {
            __int128 t = g % v;
            g = v;
            v = t;
        }
    }
    if (g > 1) {
        a /= g;
        b /= g;
        c /= g;
        d /= g;
    }
    return Mobius{narrow128(a, "Mobius"), narrow128(b, "Mobius"),
                  narrow128(c, "Mobius"), narrow128(d, "Mobius")};
}

}  // namespace

Mobius mobius_through(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2,
                      const ProjPoint& q0, const ProjPoint& q1, const ProjPoint& q2) {
    Mat128 A = frame_matrix(p0, p1, p2);
    Mat128 B = frame_matrix(q0, q1, q2);
    // B * adj(A); the adjugate inverts up to the (nonzero) determinant.
    Mat128 adj{A.d, -A.b, -A.c, A.a};
    return reduce(B.a * adj.a + B.b * adj.c, B.a * adj.b + B.b * adj.d,
                  B.c * adj.a + B.d * adj.c, B.c * adj.b + B.d * adj.d);
}

BinaryCurve BinaryCurve::make(std::vector<ProjPoint> points1,
                              std::vector<ProjPoint> points2) {
    if (points1.size() != points2.size())
        fail_input("DegenerateInput", "the two marked-point lists differ in length");
    if (points1.size() < 3)
        fail_input("DegenerateInput", "a binary curve needs g + 1 >= 3 nodes");
    for (const auto* side : {&points1, &points2})
        for (size_t i = 0; i < side->size(); ++i)
            for (size_t k = i + 1; k < side->size(); ++k)
                if ((*side)[i] == (*side)[k])
                    fail_input("DegenerateInput",
                               "repeated marked point " + (*side)[i].str());
    BinaryCurve c;
    c.g = (std::int64_t)points1.size() - 1;
    c.points1 = std::move(points1);
    c.points2 = std::move(points2);
    return c;
}

bool g12_exists(const BinaryCurve& curve) {
    if (curve.points1.size() < 3) return true;  // Mobius maps act 3-transitively
    Mobius phi = mobius_through(curve.points1[0], curve.points1[1], curve.points1[2],
                                curve.points2[0], curve.points2[1], curve.points2[2]);
    if (!phi.invertible())
        fail_input("DegenerateInput", "matched frames give a singular map");
    for (size_t i = 3; i < curve.points1.size(); ++i)
        if (phi.apply(curve.points1[i]) != curve.points2[i]) return false;
    return true;
}

bool range_check(std::int64_t g) {
    if (g < 2) fail_input("ParseError", "genus must be at least 2");
    for (std::int64_t d1 = 0; d1 <= g - 1; ++d1) {
        for (std::int64_t d2 = 0; d2 <= g - 1; ++d2) {
            std::int64_t d = d1 + d2;
            Rat lo(d - g - 1, 2), hi(d + g + 1, 2);
            for (std::int64_t di : {d1, d2})
                if (Rat(di) < lo || Rat(di) > hi) return false;
        }
    }
    return true;
}

GluingLedger gluing_ledger(const CurveModel& model, const ConcentratedFamily& family,
                           const EdgeAnalysis& edge, const EdgeStratum& stratum) {
    if (model.vertices().size() != 2 || model.collapsed().size() != 1 ||
        model.collapsed()[0].multiplicity() < 3 ||
        model.vertices()[0].genus != 0 || model.vertices()[1].genus != 0)
        fail_input("NotBinary",
                   "expected two rational components joined by g + 1 >= 3 nodes");
    std::int64_t g = model.genus();
    std::int64_t b = edge.stats.b;

    GluingLedger led;
    led.d1 = family.dv[edge.side1];
    led.d2 = family.dv[edge.side2];
    led.r = (std::int64_t)stratum.a1.a.size() - 1;
    auto max_j = [b](const std::vector<std::int64_t>& degrees, std::int64_t cap) {
        std::int64_t j = 0;
        for (std::int64_t i = 0; i <= b + 1; ++i)
            if (degrees[i] <= cap + 1) j = i;
        return j;
    };
    led.j1 = max_j(edge.seq1.degrees, led.d1);
    led.j2 = max_j(edge.seq2.degrees, led.d2);

    std::int64_t running = 0;
    for (int j : edge.stats.critical) {
        LedgerIndex li;
        li.j = j;
        auto wdim = [](const std::vector<std::int64_t>& degrees, std::int64_t d,
                       std::int64_t at) {
            std::int64_t h0 = std::max<std::int64_t>(0, d + 1 - degrees[at]);
            std::int64_t h1 = std::max<std::int64_t>(0, d + 1 - degrees[at + 1]);
            return h0 - h1;
        };
        li.dim_w1 = wdim(edge.seq1.degrees, led.d1, j);
        li.dim_w2 = wdim(edge.seq2.degrees, led.d2, b - j);
        std::int64_t r1 = stratum.a1.r_mult[j];
        std::int64_t r2 = stratum.a2.r_mult[b - j];
        std::int64_t gj = r1 + running;
        running += r1 - r2;
        li.gluing_codim = std::max<std::int64_t>(
            0, gj * (edge.stats.f[j] + gj - r1 - r2));
        bool ex1 = (j == led.j1);
        bool ex2 = (b - j == led.j2);
        if (j > led.j1 || b - j > led.j2) li.cls = IndexClass::Unused;
        else if (ex1 && ex2) li.cls = IndexClass::DoublyExtremal;
        else if (ex1 || ex2) li.cls = IndexClass::Boundary;
        else li.cls = IndexClass::FullImage;
        led.per_index.push_back(li);
    }
    std::int64_t codim_total = 0;
    for (const auto& li : led.per_index) codim_total += li.gluing_codim;
    if (codim_total != gluing_codim_edge(edge.stats, stratum))
        fail_condition("LemmaViolation",
                       "ledger per-index codimensions disagree with the edge total");

    // The reduction of the doubly-extremal constant case: normalize away the
    // nodes outside the jump at j1 and drop the matched vanishing.
    if (b - led.j1 == led.j2 && led.j1 <= b && edge.seq1.critical(led.j1)) {
        std::int64_t v1 = edge.seq1.degrees[led.j1];
        std::int64_t v2 = edge.seq2.degrees[b - led.j1];
        bool const1 = std::all_of(stratum.a1.a.begin(), stratum.a1.a.end(),
                                  [&](std::int64_t a) { return a == v1; });
        bool const2 = std::all_of(stratum.a2.a.begin(), stratum.a2.a.end(),
                                  [&](std::int64_t a) { return a == v2; });
        if (const1 && const2) {
            LedgerReduction red;
            red.reduced_d1 = led.d1 - v1;
            red.reduced_d2 = led.d2 - v2;
            std::vector<char> kept(model.edges().size(), 0);
            for (int ei : edge.seq1.increments[led.j1]) kept[ei] = 1;
            for (size_t ei = 0; ei < model.edges().size(); ++ei)
                (kept[ei] ? red.kept_nodes : red.normalized_nodes)
                    .push_back(model.edges()[ei].id);
            if (red.reduced_d1 < 0 || red.reduced_d1 > g - 1 || red.reduced_d2 < 0 ||
                red.reduced_d2 > g - 1)
                fail_condition("LemmaViolation",
                               "ledger reduction left the weak multidegree range");
            led.reduction = std::move(red);
        }
    }
    return led;
}

}  // namespace llsdim
