#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ymsurf/unitary.hpp"

namespace ymsurf {

// One traversal step: an edge id together with a direction.
struct SignedEdge {
    std::string edge;
    bool inverse = false;

    SignedEdge() = default;
    SignedEdge(std::string e, bool inv = false) : edge(std::move(e)), inverse(inv) {}

    SignedEdge reversed() const { return SignedEdge(edge, !inverse); }
    bool operator==(const SignedEdge& o) const { return edge == o.edge && inverse == o.inverse; }
    std::string str() const { return inverse ? "-" + edge : edge; }
};

using Word = std::vector<SignedEdge>;

Word inverse_word(const Word& w);
std::string word_str(const Word& w);

struct EdgeDef {
    std::string id;
    std::string source;
    std::string target;
};

struct FaceDef {
    std::string id;
    Word word;    // closed boundary walk
    double area = 0.0;
};

// Combinatorial description of an admissible graph on a compact surface:
// faces are disks given by their boundary words, boundary components of
// the surface are closed walks. No geometric embedding is stored; the
// measure only ever consumes face words and areas.
struct SurfaceGraph {
    std::vector<std::string> vertices;
    std::vector<EdgeDef> edges;
    std::vector<FaceDef> faces;
    std::vector<Word> boundary;  // one word per boundary component

    const EdgeDef* find_edge(const std::string& id) const;
    const FaceDef* find_face(const std::string& id) const;
    double total_area() const;
};

struct EdgeIncidence {
    std::string edge;
    int face_count = 0;
    int boundary_count = 0;
};

struct ValidationReport {
    int euler = 0;  // V - E + F
    int n_vertices = 0;
    int n_edges = 0;
    int n_faces = 0;
    std::vector<EdgeIncidence> incidence;
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
};

ValidationReport validate_graph(const SurfaceGraph& g);

// A marked 4-valent crossing: four darts leaving the vertex in cyclic
// order and the four surrounding faces, F[i] sitting in the corner
// between darts[i] and darts[i+1] (so darts[0] lies between F[3] and
// F[0]).
struct Crossing {
    std::string vertex;
    std::array<SignedEdge, 4> darts;
    std::array<std::string, 4> faces;
};

// Empty when the crossing is consistent with the graph.
std::vector<std::string> check_crossing(const SurfaceGraph& g, const Crossing& c);

// True when the four dart edges and the four corner faces are pairwise
// distinct.
bool is_generic_at(const SurfaceGraph& g, const Crossing& c);

// Splits a loop at the crossing. The loop must start at the vertex,
// leave along darts[0], come back against darts[3], leave along
// darts[1] and finally return against darts[2]; the two returned words
// concatenate to the input.
std::pair<Word, Word> split_loop(const SurfaceGraph& g, const Word& loop, const Crossing& c);

// Rotates a closed loop so split_loop's traversal schedule holds.
// Throws SemanticError when no rotation matches.
Word rotate_loop_to_crossing(const SurfaceGraph& g, const Word& loop, const Crossing& c);

// Parallel transport composes against traversal order: the returned
// sequence lists the factors of the holonomy product from left to
// right (last traversed edge first).
Word holonomy_word(const Word& w);

struct SubdivideResult {
    SurfaceGraph graph;
    std::string first;       // replaces the head of the old edge
    std::string second;      // replaces the tail
    std::string mid_vertex;

    // Rewrites an external word (a loop) to the subdivided graph.
    Word rewrite(const Word& w, const std::string& old_edge) const;
};

SubdivideResult subdivide_edge(const SurfaceGraph& g, const std::string& edge);

// Splits one face in two by a new edge between the cut points after
// word positions cut_a and cut_b. piece_a keeps the arc strictly after
// cut_a up to cut_b; areas must be positive and sum to the old area.
struct EdgeSplitSpec {
    std::string face;
    int cut_a = 0;
    int cut_b = 0;
    std::string new_edge;
    std::string face_a;
    std::string face_b;
    double area_a = 0.0;
    double area_b = 0.0;
};

SurfaceGraph add_generic_edge(const SurfaceGraph& g, const EdgeSplitSpec& spec);

// Face -> integer coefficient of the alternating area direction at the
// crossing: +1 on F[0], -1 on F[1], +1 on F[2], -1 on F[3], accumulated
// when faces repeat. Faces whose contributions cancel stay in the map
// with coefficient 0.
std::map<std::string, int> alternating_area_vector(const SurfaceGraph& g, const Crossing& c);

// Reverses one edge and flips its sign everywhere; the measure is
// insensitive to this once the edge variable is inverted alongside.
SurfaceGraph reorient_edge(const SurfaceGraph& g, const std::string& edge);

// Integer-indexed view of a validated graph for numeric work.
class GraphIndex {
public:
    explicit GraphIndex(const SurfaceGraph& g);  // throws SemanticError if invalid

    const SurfaceGraph& graph() const { return graph_; }
    int n_edges() const { return static_cast<int>(edge_ids_.size()); }
    int n_faces() const { return static_cast<int>(faces_.size()); }

    int edge_index(const std::string& id) const;           // throws on miss
    int face_index(const std::string& id) const;
    const std::string& edge_id(int idx) const { return edge_ids_[idx]; }

    struct FaceData {
        std::string id;
        double area = 0.0;
        std::vector<SignedRef> walk;  // boundary word
        std::vector<SignedRef> hol;   // holonomy multiplication order
    };
    const FaceData& face(int idx) const { return faces_[idx]; }
    const std::vector<int>& faces_of_edge(int edge_idx) const { return faces_of_edge_[edge_idx]; }
    const std::vector<std::vector<SignedRef>>& boundary_walks() const { return boundary_; }

    std::vector<SignedRef> compile_word(const Word& w) const;
    std::vector<SignedRef> compile_holonomy(const Word& w) const;

private:
    SurfaceGraph graph_;
    std::vector<std::string> edge_ids_;
    std::map<std::string, int> edge_lookup_;
    std::vector<FaceData> faces_;
    std::map<std::string, int> face_lookup_;
    std::vector<std::vector<int>> faces_of_edge_;
    std::vector<std::vector<SignedRef>> boundary_;
};

}  // namespace ymsurf
