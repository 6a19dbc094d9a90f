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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llsdim/error.hpp"

namespace llsdim {

enum class ComponentClass { Rational, Elliptic, Genus2, General };
enum class TorsionFlag { None, Present, Unknown };
enum class WeierstrassFlag { No, Yes, Unknown };

std::string to_string(ComponentClass c);
std::string to_string(TorsionFlag f);
std::string to_string(WeierstrassFlag f);

struct VertexInfo {
    std::string id;
    std::int64_t genus = 0;
    ComponentClass cls = ComponentClass::General;
    TorsionFlag torsion = TorsionFlag::Unknown;
    WeierstrassFlag weierstrass = WeierstrassFlag::Unknown;
};

// A directed edge of the dual graph carrying a chain length n(e) >= 1.
struct EdgeInfo {
    std::string id;
    std::string tail;
    std::string head;
    std::int64_t chain_length = 1;
};

// Raw input graph. Validation (tree-after-collapse etc.) happens in
// CurveModel::validate, which also fixes the canonical vertex/edge order
// (sorted by id) used by every downstream computation.
struct ChainGraph {
    std::vector<VertexInfo> vertices;
    std::vector<EdgeInfo> edges;
};

// One edge of the collapsed tree: the unordered pair {a, b} (a < b by id)
// together with the underlying edges of the original graph.
struct CollapsedEdge {
    int a = -1;
    int b = -1;
    std::vector<int> edge_indices;  // sorted by edge id

    int other(int v) const { return v == a ? b : a; }
    std::int64_t multiplicity() const { return (std::int64_t)edge_indices.size(); }
};

// Validated curve model: canonically ordered graph, collapsed tree and genus.
class CurveModel {
public:
    // Checks the pseudocompact-type hypotheses and builds the model.
    // Throws: LoopEdge, BadChainLength, NotPseudocompactType, ParseError
    // (duplicate ids).
    static CurveModel validate(const ChainGraph& input);

    const std::vector<VertexInfo>& vertices() const { return vertices_; }
    const std::vector<EdgeInfo>& edges() const { return edges_; }
    const std::vector<CollapsedEdge>& collapsed() const { return collapsed_; }
    std::int64_t genus() const { return genus_; }

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int find_vertex(const std::string& id) const;  // -1 if absent

    // sigma(e, v): +1 if v is the tail of edge e, -1 if the head.
    int sigma(int edge, int vertex) const;

    // Collapsed edges incident to v, sorted by the other endpoint's id.
    const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }

    // Index of the collapsed edge joining u and v, or -1.
    int collapsed_between(int u, int v) const;

    // BFS ordering from root: distances and, for each non-root vertex, the
    // collapsed edge leading one step toward the root. Ties within a distance
    // class are broken by vertex id (canonical order).
    struct TreeOrder {
        int root;
        std::vector<int> order;       // root first, then by (distance, id)
        std::vector<std::int64_t> dist;
        std::vector<int> toward_root;  // collapsed edge index, -1 at root
        std::vector<int> parent;       // vertex index, -1 at root
    };
    TreeOrder tree_order(int root) const;

private:
    std::vector<VertexInfo> vertices_;
    std::vector<EdgeInfo> edges_;
    std::vector<CollapsedEdge> collapsed_;
    std::vector<std::vector<int>> incident_;
    std::map<std::string, int> vertex_by_id_;
    std::map<std::string, int> edge_by_id_;
    std::int64_t genus_ = 0;
};

// The curve obtained by inserting a chain of n(e)-1 rational components at
// each node: every original edge becomes n(e) segments through n(e)-1
// intermediate genus-0 vertices, oriented tail to head.
struct SubdividedGraph {
    struct Vertex {
        std::string id;
        int orig = -1;           // original vertex index, or -1 for inserted
        int from_edge = -1;      // original edge index for inserted vertices
        int position = 0;        // 1..n(e)-1 counted from the tail
    };
    struct Segment {
        std::string id;
        int tail = -1;
        int head = -1;
        int orig_edge = -1;
        int step = 0;            // 1..n(e) counted from the tail
    };

    std::vector<Vertex> vertices;
    std::vector<Segment> segments;

    int vertex_index(const std::string& id) const;
    // Index of the k-th intermediate vertex (from the tail) of original
    // edge e; k in [1, n(e)-1].
    int intermediate(int orig_edge, std::int64_t k) const;
    // First Betti number |segments| - |vertices| + 1 (equals that of the
    // original graph).
    std::int64_t betti() const;
};

SubdividedGraph subdivide(const CurveModel& model);

// --- component-level strong Brill-Noether certificates ---

enum class CertStatus { Certified, CertifiedCharRestricted, RequiresGenerality };
enum class CaseTag { III, IV, V, VI, I_II, None };

std::string to_string(CertStatus s);
std::string to_string(CaseTag t);

struct StrongBNCertificate {
    std::string vertex;
    CertStatus status = CertStatus::RequiresGenerality;
    CaseTag case_tag = CaseTag::None;
    // Set when a decidable case would apply but a torsion/Weierstrass flag
    // is unknown; the certificate is then only requires-generality.
    std::optional<std::string> blocking_flag;
};

// Non-throwing classification; unknown-flag situations are reported via
// blocking_flag.
StrongBNCertificate classify_component_status(const CurveModel& model, int vertex);

// Spec-facing variant: throws UnknownFlag when a decidable case is blocked
// by an unknown torsion/Weierstrass flag.
StrongBNCertificate classify_component(const CurveModel& model, int vertex);

// --- curve file format ---

// Parses the `curve v1` text format ('#' comments, one record per line).
// Throws ParseError on malformed input.
ChainGraph parse_curve(std::istream& in);
ChainGraph parse_curve_file(const std::string& path);

}  // namespace llsdim
