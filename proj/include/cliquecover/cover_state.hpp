#ifndef CLIQUECOVER_COVER_STATE_HPP
#define CLIQUECOVER_COVER_STATE_HPP

#include "graph.hpp"

#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace cliquecover {

/// Journal entry for one mutation of a CoverState. Applying the matching
/// undo restores the state bit-exactly.
struct UndoFrame {
    enum class Kind { CoverEdge, NewClique };
    Kind kind = Kind::CoverEdge;
    int clique = -1;
    Vertex x = -1, y = -1;
    bool x_was_member = false, y_was_member = false;
    std::vector<Vertex> evicted;        // vertices dropped from eligible[clique]
    std::vector<EdgeId> included_edges; // containment counts bumped by one
};

/// Mutable clique-cover search state: the cliques C_1..C_q, for every vertex
/// the set of cliques that can absorb an edge at it (reps, = cliques that
/// contain it or lie inside its neighborhood), the inverse map (eligible),
/// edge/vertex containment counts, and an undo journal. One solver run owns
/// a state exclusively.
class CoverState {
public:
    explicit CoverState(const Graph& g, std::vector<char> pre_covered = {})
        : g_(&g),
          edge_count_(g.edge_count()),
          base_covered_(std::move(pre_covered)),
          edge_cover_count_(g.edge_count(), 0),
          vertex_cover_count_(g.vertex_count(), 0),
          reps_(g.vertex_count())
    {
        if (base_covered_.empty()) base_covered_.assign(edge_count_, 0);
        if (static_cast<int>(base_covered_.size()) != edge_count_)
            throw std::invalid_argument("pre-covered mask size mismatch");
        uncovered_edges_ = 0;
        for (EdgeId e = 0; e < edge_count_; ++e)
            if (!base_covered_[e]) ++uncovered_edges_;
        uncovered_vertices_ = g.vertex_count();
    }

    const Graph& graph() const { return *g_; }
    int clique_count() const { return static_cast<int>(cliques_.size()); }
    const Clique& clique(int l) const { return cliques_[l]; }
    const Cover& cliques() const { return cliques_; }
    std::span<const int> reps(Vertex x) const { return reps_[x]; }
    std::span<const Vertex> eligible(int l) const { return eligible_[l]; }

    bool edge_covered(EdgeId e) const { return base_covered_[e] || edge_cover_count_[e] > 0; }
    int edge_multiplicity(EdgeId e) const { return edge_cover_count_[e]; }
    int uncovered_edges() const { return uncovered_edges_; }
    bool vertex_covered(Vertex v) const { return vertex_cover_count_[v] > 0; }
    int uncovered_vertices() const { return uncovered_vertices_; }
    size_t journal_depth() const { return journal_.size(); }

    std::vector<int> absorb_candidates(Vertex x, Vertex y) const
    {
        return sorted_intersection<int>(reps_[x], reps_[y]);
    }

    /// Token naming a journal frame; stays valid across journal growth.
    using FrameToken = size_t;

    /// Absorbs edge {x,y} into clique l: evicts eligible vertices that are no
    /// longer adjacent to the whole clique, then extends the clique.
    /// Requires l ∈ reps(x) ∩ reps(y) and {x,y} ∈ E.
    FrameToken cover_edge_in_clique(Vertex x, Vertex y, int l)
    {
        if (x == y || g_->edge_id(x, y) < 0)
            throw std::invalid_argument("cover_edge_in_clique: {x,y} is not an edge");
        if (!std::binary_search(reps_[x].begin(), reps_[x].end(), l) ||
            !std::binary_search(reps_[y].begin(), reps_[y].end(), l))
            throw std::invalid_argument("cover_edge_in_clique: clique is not a representative of both endpoints");

        UndoFrame frame;
        frame.kind = UndoFrame::Kind::CoverEdge;
        frame.clique = l;
        frame.x = x;
        frame.y = y;
        Clique& c = cliques_[l];
        frame.x_was_member = sorted_contains(c, x);
        frame.y_was_member = sorted_contains(c, y);

        for (Vertex z : eligible_[l]) {
            if (z == x || z == y) continue;
            if (!g_->has_edge(x, z) || !g_->has_edge(y, z)) frame.evicted.push_back(z);
        }
        for (Vertex z : frame.evicted) {
            sorted_erase_int(reps_[z], l);
            sorted_erase(eligible_[l], z);
        }

        if (!frame.x_was_member) include_vertex(frame, c, x);
        if (!frame.y_was_member) include_vertex(frame, c, y);

        journal_.push_back(std::move(frame));
        return journal_.size() - 1;
    }

    /// Reverts the cover_edge_in_clique that produced `token`; the frame must
    /// be the top of the journal.
    void undo_cover_edge(FrameToken token)
    {
        require_top(token, UndoFrame::Kind::CoverEdge);
        const UndoFrame frame = journal_.back();
        Clique& c = cliques_[frame.clique];
        for (EdgeId e : frame.included_edges) dec_edge(e);
        if (!frame.x_was_member) remove_vertex(c, frame.x);
        if (!frame.y_was_member) remove_vertex(c, frame.y);
        for (Vertex z : frame.evicted) {
            sorted_insert_int(reps_[z], frame.clique);
            sorted_insert(eligible_[frame.clique], z);
        }
        journal_.pop_back();
    }

    /// Opens the clique {x,y}; x == y opens the singleton {x}. Every common
    /// neighbor (closed) becomes eligible for the new clique.
    int add_new_clique(Vertex x, Vertex y)
    {
        if (x != y && g_->edge_id(x, y) < 0)
            throw std::invalid_argument("add_new_clique: {x,y} is not an edge");
        UndoFrame frame;
        frame.kind = UndoFrame::Kind::NewClique;
        frame.x = x;
        frame.y = y;
        int q = clique_count();
        frame.clique = q;

        std::vector<Vertex> scope;
        if (x == y) {
            scope = g_->closed_neighborhood(x);
        } else {
            auto nx = g_->closed_neighborhood(x);
            auto ny = g_->closed_neighborhood(y);
            scope = sorted_intersection<Vertex>(nx, ny);
        }
        cliques_.push_back(x == y ? Clique{x} : x < y ? Clique{x, y} : Clique{y, x});
        eligible_.push_back(scope);
        for (Vertex z : scope) sorted_insert_int(reps_[z], q);

        inc_vertex(x);
        if (x != y) {
            inc_vertex(y);
            EdgeId e = g_->edge_id(x, y);
            inc_edge(e);
            frame.included_edges.push_back(e);
        }
        journal_.push_back(std::move(frame));
        return q;
    }

    void remove_last_clique()
    {
        if (journal_.empty() || journal_.back().kind != UndoFrame::Kind::NewClique)
            throw std::logic_error("remove_last_clique: journal top is not a clique creation");
        const UndoFrame frame = journal_.back();
        int q = frame.clique;
        size_t initial_size = frame.x == frame.y ? 1 : 2;
        if (q != clique_count() - 1 || cliques_[q].size() != initial_size)
            throw std::logic_error("remove_last_clique: clique was expanded since creation");
        for (EdgeId e : frame.included_edges) dec_edge(e);
        dec_vertex(frame.x);
        if (frame.x != frame.y) dec_vertex(frame.y);
        for (Vertex z : eligible_[q]) sorted_erase_int(reps_[z], q);
        eligible_.pop_back();
        cliques_.pop_back();
        journal_.pop_back();
    }

    /// Frame lookup; the reference is invalidated by the next mutation.
    const UndoFrame& frame(FrameToken token) const { return journal_.at(token); }

    const UndoFrame& journal_top() const
    {
        if (journal_.empty()) throw std::logic_error("journal is empty");
        return journal_.back();
    }

    struct IsrSnapshot {
        std::vector<std::vector<int>> reps;
        std::vector<std::vector<Vertex>> eligible;

        friend bool operator==(const IsrSnapshot&, const IsrSnapshot&) = default;
    };

    /// Reference recomputation of (reps, eligible) from the cliques alone.
    IsrSnapshot recompute_isr() const
    {
        IsrSnapshot snap;
        snap.reps.resize(g_->vertex_count());
        snap.eligible.resize(cliques_.size());
        for (int l = 0; l < clique_count(); ++l) {
            for (Vertex z = 0; z < g_->vertex_count(); ++z) {
                bool member = sorted_contains(cliques_[l], z);
                bool inside_neighborhood = true;
                if (!member)
                    for (Vertex w : cliques_[l])
                        if (!g_->has_edge(z, w)) { inside_neighborhood = false; break; }
                if (member || inside_neighborhood) {
                    snap.reps[z].push_back(l);
                    snap.eligible[l].push_back(z);
                }
            }
        }
        return snap;
    }

    IsrSnapshot current_isr() const { return {reps_, eligible_}; }

    /// Full consistency check: incremental (reps, eligible) equals the
    /// recomputation, cliques are cliques, counts match. Throws on violation.
    void validate() const
    {
        if (!(recompute_isr() == current_isr()))
            throw std::logic_error("representative sets diverged from recomputation");
        std::vector<int> ec(edge_count_, 0);
        std::vector<int> vc(g_->vertex_count(), 0);
        for (const Clique& c : cliques_) {
            if (c.empty()) throw std::logic_error("empty clique in cover state");
            if (!g_->is_clique(c)) throw std::logic_error("stored set is not a clique");
            for (size_t i = 0; i < c.size(); ++i) {
                ++vc[c[i]];
                for (size_t j = i + 1; j < c.size(); ++j) ++ec[g_->edge_id(c[i], c[j])];
            }
        }
        if (ec != edge_cover_count_ || vc != vertex_cover_count_)
            throw std::logic_error("containment counts diverged");
    }

    void dump_json(std::ostream& os) const
    {
        auto list = [&os](const auto& xs) {
            os << '[';
            for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
            os << ']';
        };
        os << "{\"cliques\":[";
        for (size_t l = 0; l < cliques_.size(); ++l) {
            if (l) os << ',';
            list(cliques_[l]);
        }
        os << "],\"reps\":[";
        for (size_t v = 0; v < reps_.size(); ++v) {
            if (v) os << ',';
            list(reps_[v]);
        }
        os << "],\"eligible\":[";
        for (size_t l = 0; l < eligible_.size(); ++l) {
            if (l) os << ',';
            list(eligible_[l]);
        }
        os << "]}";
    }

    friend bool operator==(const CoverState& a, const CoverState& b)
    {
        return a.cliques_ == b.cliques_ && a.reps_ == b.reps_ && a.eligible_ == b.eligible_ &&
               a.edge_cover_count_ == b.edge_cover_count_ &&
               a.vertex_cover_count_ == b.vertex_cover_count_ &&
               a.uncovered_edges_ == b.uncovered_edges_ &&
               a.uncovered_vertices_ == b.uncovered_vertices_;
    }

private:
    static void sorted_insert_int(std::vector<int>& s, int v)
    {
        s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    }
    static void sorted_erase_int(std::vector<int>& s, int v)
    {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v) throw std::logic_error("missing representative entry");
        s.erase(it);
    }

    void require_top(FrameToken token, UndoFrame::Kind kind) const
    {
        if (journal_.empty() || token != journal_.size() - 1 || journal_.back().kind != kind)
            throw std::logic_error("undo does not match the journal top");
    }

    void inc_edge(EdgeId e)
    {
        if (edge_cover_count_[e]++ == 0 && !base_covered_[e]) --uncovered_edges_;
    }
    void dec_edge(EdgeId e)
    {
        if (--edge_cover_count_[e] == 0 && !base_covered_[e]) ++uncovered_edges_;
    }
    void inc_vertex(Vertex v)
    {
        if (vertex_cover_count_[v]++ == 0) --uncovered_vertices_;
    }
    void dec_vertex(Vertex v)
    {
        if (--vertex_cover_count_[v] == 0) ++uncovered_vertices_;
    }

    // Adds v to clique c (already a rep), bumping containment of the edges
    // from v to the previous members.
    void include_vertex(UndoFrame& frame, Clique& c, Vertex v)
    {
        for (Vertex w : c) {
            EdgeId e = g_->edge_id(v, w);
            inc_edge(e);
            frame.included_edges.push_back(e);
        }
        sorted_insert(c, v);
        inc_vertex(v);
    }

    void remove_vertex(Clique& c, Vertex v)
    {
        sorted_erase(c, v);
        dec_vertex(v);
    }

    const Graph* g_;
    int edge_count_;
    Cover cliques_;
    std::vector<char> base_covered_;
    std::vector<int> edge_cover_count_;
    std::vector<int> vertex_cover_count_;
    std::vector<std::vector<int>> reps_;
    std::vector<std::vector<Vertex>> eligible_;
    std::vector<UndoFrame> journal_;
    int uncovered_edges_ = 0;
    int uncovered_vertices_ = 0;
};

/// Builds an edge clique cover by walking the given edge order: each still
/// uncovered edge is absorbed into exactly one existing clique chosen by the
/// picker, or opens a fresh two-vertex clique when none can take it.
using CliquePicker = std::function<int(const CoverState&, Vertex, Vertex, std::span<const int>)>;

inline int pick_first_candidate(const CoverState&, Vertex, Vertex, std::span<const int> candidates)
{
    return candidates.front();
}

inline Cover build_locally_minimal_cover(const Graph& g, std::span<const EdgeId> edge_order,
                                         const CliquePicker& picker = pick_first_candidate)
{
    if (static_cast<int>(edge_order.size()) != g.edge_count())
        throw std::invalid_argument("edge order must be a permutation of the edges");
    CoverState state(g);
    for (EdgeId id : edge_order) {
        if (state.edge_covered(id)) continue;
        Edge e = g.edge(id);
        auto candidates = state.absorb_candidates(e.u, e.v);
        if (!candidates.empty()) {
            int l = picker(state, e.u, e.v, candidates);
            state.cover_edge_in_clique(e.u, e.v, l);
        } else {
            state.add_new_clique(e.u, e.v);
        }
    }
    return state.cliques();
}

} // namespace cliquecover

#endif
