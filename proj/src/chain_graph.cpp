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

#include "llsdim/chain_graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <tuple>

namespace llsdim {

std::string to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::Rational: return "rational";
        case ComponentClass::Elliptic: return "elliptic";
        case ComponentClass::Genus2: return "genus2";
        case ComponentClass::General: return "general";
    }
    return "?";
}

std::string to_string(TorsionFlag f) {
    switch (f) {
        case TorsionFlag::None: return "none";
        case TorsionFlag::Present: return "present";
        case TorsionFlag::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(WeierstrassFlag f) {
    switch (f) {
        case WeierstrassFlag::No: return "no";
        case WeierstrassFlag::Yes: return "yes";
        case WeierstrassFlag::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::CertifiedCharRestricted: return "certified-char-restricted";
        case CertStatus::RequiresGenerality: return "requires-generality";
    }
    return "?";
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
        case CaseTag::V: return "V";
        case CaseTag::VI: return "VI";
        case CaseTag::I_II: return "I/II";
        case CaseTag::None: return "none";
    }
    return "?";
}

CurveModel CurveModel::validate(const ChainGraph& input) {
    CurveModel m;
    m.vertices_ = input.vertices;
    m.edges_ = input.edges;
    std::sort(m.vertices_.begin(), m.vertices_.end(),
              [](const VertexInfo& x, const VertexInfo& y) { return x.id < y.id; });
    std::sort(m.edges_.begin(), m.edges_.end(),
              [](const EdgeInfo& x, const EdgeInfo& y) { return x.id < y.id; });

    if (m.vertices_.empty()) fail_input("ParseError", "graph has no vertices");
    for (size_t i = 0; i < m.vertices_.size(); ++i) {
        const auto& v = m.vertices_[i];
        if (v.genus < 0) fail_input("ParseError", "negative genus at vertex " + v.id);
        if (!m.vertex_by_id_.emplace(v.id, (int)i).second)
            fail_input("ParseError", "duplicate vertex id " + v.id);
    }
    for (size_t i = 0; i < m.edges_.size(); ++i) {
        const auto& e = m.edges_[i];
        if (!m.edge_by_id_.emplace(e.id, (int)i).second)
            fail_input("ParseError", "duplicate edge id " + e.id);
        if (e.chain_length < 1)
            fail_input("BadChainLength", "edge " + e.id + " has n < 1");
        auto t = m.vertex_by_id_.find(e.tail);
        auto h = m.vertex_by_id_.find(e.head);
        if (t == m.vertex_by_id_.end() || h == m.vertex_by_id_.end())
            fail_input("ParseError", "edge " + e.id + " references unknown vertex");
        if (t->second == h->second)
            fail_input("LoopEdge", "edge " + e.id + " has tail = head");
    }

    // Collapse multiple edges: one collapsed edge per adjacent vertex pair.
    std::map<std::pair<int, int>, std::vector<int>> pairs;
    for (size_t i = 0; i < m.edges_.size(); ++i) {
        int t = m.vertex_by_id_.at(m.edges_[i].tail);
        int h = m.vertex_by_id_.at(m.edges_[i].head);
        pairs[{std::min(t, h), std::max(t, h)}].push_back((int)i);
    }
    for (auto& [key, idx] : pairs) {
        CollapsedEdge ce;
        ce.a = key.first;
        ce.b = key.second;
        ce.edge_indices = idx;  // already sorted: edges_ is sorted by id
        m.collapsed_.push_back(ce);
    }

    // The collapsed graph must be a tree: connected and acyclic.
    size_t nv = m.vertices_.size();
    if (m.collapsed_.size() != nv - 1)
        fail_input("NotPseudocompactType",
                   "collapsed graph has " + std::to_string(m.collapsed_.size()) +
                       " edges on " + std::to_string(nv) + " vertices");
    m.incident_.assign(nv, {});
    for (size_t i = 0; i < m.collapsed_.size(); ++i) {
        m.incident_[m.collapsed_[i].a].push_back((int)i);
        m.incident_[m.collapsed_[i].b].push_back((int)i);
    }
    std::vector<char> seen(nv, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int ce : m.incident_[v]) {
            int w = m.collapsed_[ce].other(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != nv)
        fail_input("NotPseudocompactType", "collapsed graph is disconnected");

    std::int64_t gsum = 0;
    for (const auto& v : m.vertices_) gsum += v.genus;
    m.genus_ = gsum + (std::int64_t)m.edges_.size() - (std::int64_t)nv + 1;
    return m;
}

int CurveModel::vertex_index(const std::string& id) const {
    auto it = vertex_by_id_.find(id);
    if (it == vertex_by_id_.end()) fail_input("ParseError", "unknown vertex " + id);
    return it->second;
}

int CurveModel::find_vertex(const std::string& id) const {
    auto it = vertex_by_id_.find(id);
    return it == vertex_by_id_.end() ? -1 : it->second;
}

int CurveModel::edge_index(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) fail_input("ParseError", "unknown edge " + id);
    return it->second;
}

int CurveModel::sigma(int edge, int vertex) const {
    const auto& e = edges_[edge];
    int t = vertex_by_id_.at(e.tail);
    int h = vertex_by_id_.at(e.head);
    if (vertex == t) return 1;
    if (vertex == h) return -1;
    fail_input("NotAdjacent", "vertex " + vertices_[vertex].id +
                                  " is not an endpoint of edge " + e.id);
}

int CurveModel::collapsed_between(int u, int v) const {
    for (int ce : incident_[u])
        if (collapsed_[ce].other(u) == v) return ce;
    return -1;
}

CurveModel::TreeOrder CurveModel::tree_order(int root) const {
    TreeOrder t;
    t.root = root;
    size_t nv = vertices_.size();
    t.dist.assign(nv, -1);
    t.toward_root.assign(nv, -1);
    t.parent.assign(nv, -1);
    t.dist[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int ce : incident_[v]) {
            int w = collapsed_[ce].other(v);
            if (t.dist[w] < 0) {
                t.dist[w] = t.dist[v] + 1;
                t.toward_root[w] = ce;
                t.parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    // Distance order with ties broken by vertex id; indices follow id order.
    for (size_t v = 0; v < nv; ++v) t.order.push_back((int)v);
    std::sort(t.order.begin(), t.order.end(),
              [&t](int x, int y) { return std::tie(t.dist[x], x) < std::tie(t.dist[y], y); });
    return t;
}

int SubdividedGraph::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return (int)i;
    fail_input("ParseError", "unknown subdivided vertex " + id);
}

int SubdividedGraph::intermediate(int orig_edge, std::int64_t k) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].from_edge == orig_edge && vertices[i].position == k)
            return (int)i;
    fail_input("ParseError", "no intermediate vertex at position " +
                                 std::to_string(k));
}

std::int64_t SubdividedGraph::betti() const {
    return (std::int64_t)segments.size() - (std::int64_t)vertices.size() + 1;
}

SubdividedGraph subdivide(const CurveModel& model) {
    SubdividedGraph sg;
    for (size_t i = 0; i < model.vertices().size(); ++i) {
        SubdividedGraph::Vertex v;
        v.id = model.vertices()[i].id;
        v.orig = (int)i;
        sg.vertices.push_back(v);
    }
    for (size_t e = 0; e < model.edges().size(); ++e) {
        const auto& edge = model.edges()[e];
        std::int64_t n = edge.chain_length;
        int prev = model.vertex_index(edge.tail);
        for (std::int64_t k = 1; k <= n; ++k) {
            int next;
            if (k == n) {
                next = model.vertex_index(edge.head);
            } else {
                SubdividedGraph::Vertex v;
                v.id = edge.id + "." + std::to_string(k);
                v.from_edge = (int)e;
                v.position = (int)k;
                sg.vertices.push_back(v);
                next = (int)sg.vertices.size() - 1;
            }
            SubdividedGraph::Segment s;
            s.id = edge.id + "#" + std::to_string(k);
            s.tail = prev;
            s.head = next;
            s.orig_edge = (int)e;
            s.step = (int)k;
            sg.segments.push_back(s);
            prev = next;
        }
    }
    return sg;
}

StrongBNCertificate classify_component_status(const CurveModel& model, int vertex) {
    StrongBNCertificate cert;
    cert.vertex = model.vertices()[vertex].id;
    std::int64_t g = model.vertices()[vertex].genus;

    // Node clusters of v are its collapsed-tree neighbors; m_i is the number
    // of edges to the i-th neighbor.
    std::vector<std::int64_t> mult;
    for (int ce : model.incident(vertex))
        mult.push_back(model.collapsed()[ce].multiplicity());
    std::int64_t n = (std::int64_t)mult.size();
    bool all_single = std::all_of(mult.begin(), mult.end(),
                                  [](std::int64_t m) { return m == 1; });

    if (g == 0 && n <= 2) {
        cert.status = CertStatus::Certified;
        cert.case_tag = CaseTag::III;
        return cert;
    }
    if (g == 0 && all_single) {
        cert.status = CertStatus::CertifiedCharRestricted;
        cert.case_tag = CaseTag::IV;
        return cert;
    }
    if (g == 1 && n <= 2 && all_single) {
        TorsionFlag t = model.vertices()[vertex].torsion;
        if (n < 2 || t == TorsionFlag::None) {
            cert.status = CertStatus::Certified;
            cert.case_tag = CaseTag::V;
            return cert;
        }
        if (t == TorsionFlag::Unknown) {
            cert.status = CertStatus::RequiresGenerality;
            cert.case_tag = CaseTag::V;
            cert.blocking_flag = "torsion";
            return cert;
        }
        // torsion present: case V does not apply
    }
    if (g == 2 && n <= 1 && all_single) {
        WeierstrassFlag w = model.vertices()[vertex].weierstrass;
        if (n == 0 || w == WeierstrassFlag::No) {
            cert.status = CertStatus::Certified;
            cert.case_tag = CaseTag::VI;
            return cert;
        }
        if (w == WeierstrassFlag::Unknown) {
            cert.status = CertStatus::RequiresGenerality;
            cert.case_tag = CaseTag::VI;
            cert.blocking_flag = "weierstrass";
            return cert;
        }
    }
    cert.status = CertStatus::RequiresGenerality;
    cert.case_tag = CaseTag::I_II;
    return cert;
}

StrongBNCertificate classify_component(const CurveModel& model, int vertex) {
    StrongBNCertificate cert = classify_component_status(model, vertex);
    if (cert.blocking_flag)
        fail_input("UnknownFlag", "vertex " + cert.vertex + " needs a known " +
                                      *cert.blocking_flag + " flag for case " +
                                      to_string(cert.case_tag));
    return cert;
}

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_' && c != '-' && c != '.')
            return false;
    return true;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail_input("ParseError", "bad integer '" + s + "' for " + what);
    }
}

}  // namespace

ChainGraph parse_curve(std::istream& in) {
    ChainGraph g;
    std::string line;
    bool saw_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        std::string where = "line " + std::to_string(lineno);

        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "curve" || tok[1] != "v1")
                fail_input("ParseError", "expected 'curve v1' header at " + where);
            saw_header = true;
            continue;
        }
        if (tok[0] == "vertex") {
            if (tok.size() < 3) fail_input("ParseError", "short vertex record at " + where);
            VertexInfo v;
            v.id = tok[1];
            if (!valid_id(v.id)) fail_input("ParseError", "bad vertex id at " + where);
            bool saw_genus = false;
            for (size_t i = 2; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos)
                    fail_input("ParseError", "expected key=value at " + where);
                std::string key = tok[i].substr(0, eq);
                std::string val = tok[i].substr(eq + 1);
                if (key == "genus") {
                    v.genus = parse_int(val, "genus");
                    saw_genus = true;
                } else if (key == "class") {
                    if (val == "rational") v.cls = ComponentClass::Rational;
                    else if (val == "elliptic") v.cls = ComponentClass::Elliptic;
                    else if (val == "genus2") v.cls = ComponentClass::Genus2;
                    else if (val == "general") v.cls = ComponentClass::General;
                    else fail_input("ParseError", "bad class '" + val + "' at " + where);
                } else if (key == "torsion") {
                    if (val == "none") v.torsion = TorsionFlag::None;
                    else if (val == "present") v.torsion = TorsionFlag::Present;
                    else if (val == "unknown") v.torsion = TorsionFlag::Unknown;
                    else fail_input("ParseError", "bad torsion '" + val + "' at " + where);
                } else if (key == "weierstrass") {
                    if (val == "no") v.weierstrass = WeierstrassFlag::No;
                    else if (val == "yes") v.weierstrass = WeierstrassFlag::Yes;
                    else if (val == "unknown") v.weierstrass = WeierstrassFlag::Unknown;
                    else fail_input("ParseError", "bad weierstrass '" + val + "' at " + where);
                } else {
                    fail_input("ParseError", "unknown vertex attribute '" + key + "' at " + where);
                }
            }
            if (!saw_genus) fail_input("ParseError", "vertex without genus at " + where);
            bool class_ok = true;
            if (v.cls == ComponentClass::Rational) class_ok = (v.genus == 0);
            if (v.cls == ComponentClass::Elliptic) class_ok = (v.genus == 1);
            if (v.cls == ComponentClass::Genus2) class_ok = (v.genus == 2);
            if (!class_ok)
                fail_input("ParseError", "class/genus mismatch at " + where);
            g.vertices.push_back(v);
        } else if (tok[0] == "edge") {
            if (tok.size() != 5) fail_input("ParseError", "edge record needs 5 fields at " + where);
            EdgeInfo e;
            e.id = tok[1];
            e.tail = tok[2];
            e.head = tok[3];
            if (!valid_id(e.id) || !valid_id(e.tail) || !valid_id(e.head))
                fail_input("ParseError", "bad edge ids at " + where);
            if (tok[4].rfind("n=", 0) != 0)
                fail_input("ParseError", "expected n=<int> at " + where);
            e.chain_length = parse_int(tok[4].substr(2), "chain length");
            g.edges.push_back(e);
        } else {
            fail_input("ParseError", "unknown record '" + tok[0] + "' at " + where);
        }
    }
    if (!saw_header) fail_input("ParseError", "empty curve file");
    return g;
}

ChainGraph parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_input("ParseError", "cannot open " + path);
    return parse_curve(in);
}

}  // namespace llsdim
