#include "ymsurf/surfgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ymsurf/errors.hpp"

namespace ymsurf {

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->reversed());
    return out;
}

std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i].str();
    }
    return s;
}

const EdgeDef* SurfaceGraph::find_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

const FaceDef* SurfaceGraph::find_face(const std::string& id) const {
    for (const auto& f : faces)
        if (f.id == id) return &f;
    return nullptr;
}

double SurfaceGraph::total_area() const {
    double a = 0.0;
    for (const auto& f : faces) a += f.area;
    return a;
}

namespace {

std::string walk_source(const SurfaceGraph& g, const SignedEdge& s) {
    const EdgeDef* e = g.find_edge(s.edge);
    return s.inverse ? e->target : e->source;
}

std::string walk_target(const SurfaceGraph& g, const SignedEdge& s) {
    const EdgeDef* e = g.find_edge(s.edge);
    return s.inverse ? e->source : e->target;
}

// Checks that a word is a closed walk; appends violations.
void check_closed_walk(const SurfaceGraph& g, const Word& w, const std::string& what,
                       std::vector<std::string>& out) {
    if (w.empty()) {
        out.push_back(what + ": empty word");
        return;
    }
    for (const auto& s : w) {
        if (!g.find_edge(s.edge)) {
            out.push_back(what + ": unknown edge '" + s.edge + "'");
            return;
        }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& cur = w[i];
        const auto& nxt = w[(i + 1) % w.size()];
        if (walk_target(g, cur) != walk_source(g, nxt)) {
            out.push_back(what + ": not a closed walk at step " + std::to_string(i) + " (" +
                          cur.str() + " -> " + nxt.str() + ")");
            return;
        }
    }
}

bool word_contains_cyclic_pair(const Word& w, const SignedEdge& a, const SignedEdge& b) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] == a && w[(i + 1) % n] == b) return true;
    return false;
}

}  // namespace

ValidationReport validate_graph(const SurfaceGraph& g) {
    ValidationReport rep;
    rep.n_vertices = static_cast<int>(g.vertices.size());
    rep.n_edges = static_cast<int>(g.edges.size());
    rep.n_faces = static_cast<int>(g.faces.size());
    rep.euler = rep.n_vertices - rep.n_edges + rep.n_faces;
    auto& bad = rep.violations;

    std::set<std::string> vset(g.vertices.begin(), g.vertices.end());
    if (vset.size() != g.vertices.size()) bad.push_back("duplicate vertex id");
    std::set<std::string> eset;
    for (const auto& e : g.edges) {
        if (!eset.insert(e.id).second) bad.push_back("duplicate edge id '" + e.id + "'");
        if (!vset.count(e.source)) bad.push_back("edge '" + e.id + "': unknown source '" + e.source + "'");
        if (!vset.count(e.target)) bad.push_back("edge '" + e.id + "': unknown target '" + e.target + "'");
    }
    std::set<std::string> fset;
    for (const auto& f : g.faces) {
        if (!fset.insert(f.id).second) bad.push_back("duplicate face id '" + f.id + "'");
        if (!(f.area > 0.0)) bad.push_back("face '" + f.id + "': area must be positive");
        check_closed_walk(g, f.word, "face '" + f.id + "'", bad);
    }
    for (std::size_t b = 0; b < g.boundary.size(); ++b)
        check_closed_walk(g, g.boundary[b], "boundary component " + std::to_string(b), bad);

    // Sign-insensitive incidence counts. An edge on the surface boundary
    // is shared between one face side and one boundary component; an
    // interior edge has two face sides.
    std::map<std::string, EdgeIncidence> counts;
    for (const auto& e : g.edges) counts[e.id] = EdgeIncidence{e.id, 0, 0};
    for (const auto& f : g.faces)
        for (const auto& s : f.word)
            if (counts.count(s.edge)) counts[s.edge].face_count++;
    for (const auto& w : g.boundary)
        for (const auto& s : w)
            if (counts.count(s.edge)) counts[s.edge].boundary_count++;
    for (const auto& e : g.edges) {
        const auto& c = counts[e.id];
        rep.incidence.push_back(c);
        const int total = c.face_count + c.boundary_count;
        if (c.boundary_count > 0) {
            if (total != 2)
                bad.push_back("edge '" + e.id + "': boundary edge must have one face side and one boundary side (got " +
                              std::to_string(c.face_count) + "+" + std::to_string(c.boundary_count) + ")");
        } else if (c.face_count != 2) {
            bad.push_back("edge '" + e.id + "': interior edge must appear exactly twice in face words (got " +
                          std::to_string(c.face_count) + ")");
        }
    }
    return rep;
}

std::vector<std::string> check_crossing(const SurfaceGraph& g, const Crossing& c) {
    std::vector<std::string> bad;
    bool vertex_ok = std::find(g.vertices.begin(), g.vertices.end(), c.vertex) != g.vertices.end();
    if (!vertex_ok) bad.push_back("crossing: unknown vertex '" + c.vertex + "'");
    for (int i = 0; i < 4; ++i) {
        const auto& d = c.darts[i];
        if (!g.find_edge(d.edge)) {
            bad.push_back("crossing: unknown edge '" + d.edge + "'");
            return bad;
        }
        if (vertex_ok && walk_source(g, d) != c.vertex)
            bad.push_back("crossing: dart " + d.str() + " does not leave vertex '" + c.vertex + "'");
        for (int j = i + 1; j < 4; ++j)
            if (c.darts[i] == c.darts[j]) bad.push_back("crossing: repeated dart " + d.str());
    }
    for (int i = 0; i < 4; ++i) {
        const FaceDef* f = g.find_face(c.faces[i]);
        if (!f) {
            bad.push_back("crossing: unknown face '" + c.faces[i] + "'");
            continue;
        }
        // F[i] occupies the corner between darts[i] and darts[i+1]; its
        // boundary word passes through the corner in one of the two
        // traversal directions.
        const SignedEdge& di = c.darts[i];
        const SignedEdge& dj = c.darts[(i + 1) % 4];
        const bool ok = word_contains_cyclic_pair(f->word, dj.reversed(), di) ||
                        word_contains_cyclic_pair(f->word, di.reversed(), dj);
        if (!ok)
            bad.push_back("crossing: face '" + c.faces[i] + "' does not occupy the corner between " +
                          di.str() + " and " + dj.str());
    }
    for (const auto& w : g.boundary)
        for (const auto& s : w)
            for (const auto& d : c.darts)
                if (s.edge == d.edge)
                    bad.push_back("crossing: edge '" + d.edge + "' lies on the surface boundary");
    return bad;
}

bool is_generic_at(const SurfaceGraph& g, const Crossing& c) {
    if (!check_crossing(g, c).empty()) return false;
    std::set<std::string> edges, faces;
    for (const auto& d : c.darts) edges.insert(d.edge);
    for (const auto& f : c.faces) faces.insert(f);
    return edges.size() == 4 && faces.size() == 4;
}

namespace {

// Positions i where the walk sits at `vertex` before traversing loop[i].
std::vector<std::size_t> vertex_visit_positions(const SurfaceGraph& g, const Word& loop,
                                                const std::string& vertex) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < loop.size(); ++i)
        if (walk_source(g, loop[i]) == vertex) pos.push_back(i);
    return pos;
}

}  // namespace

std::pair<Word, Word> split_loop(const SurfaceGraph& g, const Word& loop, const Crossing& c) {
    auto cross_bad = check_crossing(g, c);
    if (!cross_bad.empty()) throw SemanticError("split_loop: " + cross_bad.front());
    std::vector<std::string> walk_bad;
    check_closed_walk(g, loop, "loop", walk_bad);
    if (!walk_bad.empty()) throw SemanticError("split_loop: " + walk_bad.front());

    auto visits = vertex_visit_positions(g, loop, c.vertex);
    if (visits.size() != 2)
        throw SemanticError("split_loop: loop visits vertex '" + c.vertex + "' " +
                            std::to_string(visits.size()) + " times, need exactly 2");
    if (visits[0] != 0)
        throw SemanticError("split_loop: loop must start at the crossing vertex");
    const std::size_t mid = visits[1];
    const std::size_t last = loop.size() - 1;

    if (!(loop[0] == c.darts[0]))
        throw SemanticError("split_loop: loop must leave along " + c.darts[0].str() +
                            ", found " + loop[0].str());
    if (!(loop[mid - 1] == c.darts[3].reversed()))
        throw SemanticError("split_loop: first return must arrive against " + c.darts[3].str());
    if (!(loop[mid] == c.darts[1]))
        throw SemanticError("split_loop: second departure must leave along " + c.darts[1].str());
    if (!(loop[last] == c.darts[2].reversed()))
        throw SemanticError("split_loop: final return must arrive against " + c.darts[2].str());

    Word l1(loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(mid));
    Word l2(loop.begin() + static_cast<std::ptrdiff_t>(mid), loop.end());
    return {std::move(l1), std::move(l2)};
}

Word rotate_loop_to_crossing(const SurfaceGraph& g, const Word& loop, const Crossing& c) {
    for (std::size_t r = 0; r < loop.size(); ++r) {
        if (!(loop[r] == c.darts[0])) continue;
        Word rotated;
        rotated.reserve(loop.size());
        rotated.insert(rotated.end(), loop.begin() + static_cast<std::ptrdiff_t>(r), loop.end());
        rotated.insert(rotated.end(), loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(r));
        try {
            split_loop(g, rotated, c);
            return rotated;
        } catch (const SemanticError&) {
            // try the next occurrence of darts[0]
        }
    }
    throw SemanticError("loop '" + word_str(loop) + "' does not cross at vertex '" + c.vertex +
                        "' with the declared dart schedule");
}

Word holonomy_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it);
    return out;
}

namespace {

std::string fresh_id(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base)) base += "'";
    return base;
}

Word rewrite_word(const Word& w, const std::string& old_edge, const std::string& first,
                  const std::string& second) {
    Word out;
    out.reserve(w.size() + 4);
    for (const auto& s : w) {
        if (s.edge != old_edge) {
            out.push_back(s);
        } else if (!s.inverse) {
            out.emplace_back(first, false);
            out.emplace_back(second, false);
        } else {
            out.emplace_back(second, true);
            out.emplace_back(first, true);
        }
    }
    return out;
}

}  // namespace

Word SubdivideResult::rewrite(const Word& w, const std::string& old_edge) const {
    return rewrite_word(w, old_edge, first, second);
}

SubdivideResult subdivide_edge(const SurfaceGraph& g, const std::string& edge) {
    const EdgeDef* e = g.find_edge(edge);
    if (!e) throw SemanticError("subdivide_edge: unknown edge '" + edge + "'");

    std::set<std::string> edge_ids, vertex_ids(g.vertices.begin(), g.vertices.end());
    for (const auto& ed : g.edges) edge_ids.insert(ed.id);

    SubdivideResult res;
    res.first = fresh_id(edge + "'", edge_ids);
    edge_ids.insert(res.first);
    res.second = fresh_id(edge + "''", edge_ids);
    res.mid_vertex = fresh_id(edge + "_v", vertex_ids);

    SurfaceGraph out = g;
    out.vertices.push_back(res.mid_vertex);
    out.edges.clear();
    for (const auto& ed : g.edges) {
        if (ed.id != edge) {
            out.edges.push_back(ed);
        } else {
            out.edges.push_back(EdgeDef{res.first, ed.source, res.mid_vertex});
            out.edges.push_back(EdgeDef{res.second, res.mid_vertex, ed.target});
        }
    }
    for (auto& f : out.faces) f.word = rewrite_word(f.word, edge, res.first, res.second);
    for (auto& w : out.boundary) w = rewrite_word(w, edge, res.first, res.second);
    res.graph = std::move(out);
    return res;
}

SurfaceGraph add_generic_edge(const SurfaceGraph& g, const EdgeSplitSpec& spec) {
    const FaceDef* f = g.find_face(spec.face);
    if (!f) throw SemanticError("add_generic_edge: unknown face '" + spec.face + "'");
    const int len = static_cast<int>(f->word.size());
    int p = spec.cut_a, q = spec.cut_b;
    if (p < 0 || q < 0 || p >= len || q >= len || p == q)
        throw SemanticError("add_generic_edge: cut positions must be distinct word positions of face '" +
                            spec.face + "'");
    double area_a = spec.area_a;
    if (!(spec.area_a > 0.0) || !(spec.area_b > 0.0))
        throw SemanticError("add_generic_edge: sub-areas must be positive");
    if (std::abs(spec.area_a + spec.area_b - f->area) > 1e-12 * std::max(1.0, f->area))
        throw SemanticError("add_generic_edge: sub-areas must sum to the old area");
    if (g.find_edge(spec.new_edge)) throw SemanticError("add_generic_edge: edge id '" + spec.new_edge + "' taken");
    if (g.find_face(spec.face_a) || g.find_face(spec.face_b) || spec.face_a == spec.face_b)
        throw SemanticError("add_generic_edge: new face ids must be fresh and distinct");

    bool swapped = false;
    if (p > q) {
        std::swap(p, q);
        swapped = true;
    }
    // piece A: word(p+1 .. q) closed by the reversed new edge;
    // piece B: word(q+1 .. end, 0 .. p) closed by the new edge.
    const Word& w = f->word;
    Word wa(w.begin() + p + 1, w.begin() + q + 1);
    Word wb(w.begin() + q + 1, w.end());
    wb.insert(wb.end(), w.begin(), w.begin() + p + 1);
    wa.emplace_back(spec.new_edge, true);
    wb.emplace_back(spec.new_edge, false);

    const std::string src = walk_target(g, w[static_cast<std::size_t>(p)]);
    const std::string dst = walk_target(g, w[static_cast<std::size_t>(q)]);
    const double aa = swapped ? spec.area_b : area_a;

    SurfaceGraph out = g;
    out.edges.push_back(EdgeDef{spec.new_edge, src, dst});
    out.faces.clear();
    for (const auto& fd : g.faces) {
        if (fd.id != spec.face) {
            out.faces.push_back(fd);
        } else {
            out.faces.push_back(FaceDef{swapped ? spec.face_b : spec.face_a, wa, aa});
            out.faces.push_back(FaceDef{swapped ? spec.face_a : spec.face_b, wb, fd.area - aa});
        }
    }
    return out;
}

std::map<std::string, int> alternating_area_vector(const SurfaceGraph& g, const Crossing& c) {
    auto bad = check_crossing(g, c);
    if (!bad.empty()) throw SemanticError("alternating_area_vector: " + bad.front());
    std::map<std::string, int> out;
    const int sign[4] = {+1, -1, +1, -1};
    for (int i = 0; i < 4; ++i) out[c.faces[i]] += sign[i];
    return out;
}

SurfaceGraph reorient_edge(const SurfaceGraph& g, const std::string& edge) {
    if (!g.find_edge(edge)) throw SemanticError("reorient_edge: unknown edge '" + edge + "'");
    SurfaceGraph out = g;
    for (auto& e : out.edges)
        if (e.id == edge) std::swap(e.source, e.target);
    auto flip = [&](Word& w) {
        for (auto& s : w)
            if (s.edge == edge) s.inverse = !s.inverse;
    };
    for (auto& f : out.faces) flip(f.word);
    for (auto& w : out.boundary) flip(w);
    return out;
}

GraphIndex::GraphIndex(const SurfaceGraph& g) : graph_(g) {
    auto rep = validate_graph(g);
    if (!rep.valid()) throw SemanticError("invalid graph: " + rep.violations.front());

    for (const auto& e : g.edges) {
        edge_lookup_[e.id] = static_cast<int>(edge_ids_.size());
        edge_ids_.push_back(e.id);
    }
    faces_of_edge_.assign(edge_ids_.size(), {});
    for (const auto& f : g.faces) {
        FaceData fd;
        fd.id = f.id;
        fd.area = f.area;
        fd.walk = compile_word(f.word);
        fd.hol = compile_holonomy(f.word);
        const int fi = static_cast<int>(faces_.size());
        face_lookup_[f.id] = fi;
        faces_.push_back(std::move(fd));
        for (const auto& s : f.word) {
            auto& lst = faces_of_edge_[static_cast<std::size_t>(edge_lookup_.at(s.edge))];
            if (std::find(lst.begin(), lst.end(), fi) == lst.end()) lst.push_back(fi);
        }
    }
    for (const auto& w : g.boundary) boundary_.push_back(compile_word(w));
}

int GraphIndex::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) throw SemanticError("unknown edge '" + id + "'");
    return it->second;
}

int GraphIndex::face_index(const std::string& id) const {
    auto it = face_lookup_.find(id);
    if (it == face_lookup_.end()) throw SemanticError("unknown face '" + id + "'");
    return it->second;
}

std::vector<SignedRef> GraphIndex::compile_word(const Word& w) const {
    std::vector<SignedRef> out;
    out.reserve(w.size());
    for (const auto& s : w) out.push_back(SignedRef{edge_index(s.edge), s.inverse});
    return out;
}

std::vector<SignedRef> GraphIndex::compile_holonomy(const Word& w) const {
    return compile_word(holonomy_word(w));
}

}  // namespace ymsurf
