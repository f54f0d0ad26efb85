#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pantslab {

/// Half-edge multigraph underlying a pants decomposition of a surface of
/// genus g with n punctures.  Each pair of pants is an interior vertex of
/// valence 3, each puncture a leaf-end vertex of valence 1.  Half-edge h
/// sits at vertex owner[h] and is glued to partner[h]; a loop is a glued
/// pair owned by the same vertex.  Values are immutable in practice:
/// operations produce new graphs instead of mutating shared ones.
struct PantsGraph {
    int num_vertices = 0;
    std::vector<int> owner;    // owner[h] = vertex holding half-edge h
    std::vector<int> partner;  // fixed-point-free involution on half-edges

    int half_edge_count() const { return static_cast<int>(owner.size()); }

    std::vector<int> valences() const;
    bool is_interior(int v) const;
    bool is_leaf_end(int v) const;

    /// Half-edges at each vertex, in increasing half-edge order.
    std::vector<std::vector<int>> incidence() const;

    bool operator==(const PantsGraph&) const = default;
};

/// Glued pair {lo, hi} with lo < hi.  Edge ids index the list returned by
/// edge_list(), which is ordered by lo and stable under moves (moves only
/// reassign owners, never the gluing).
struct Edge {
    int lo = 0;
    int hi = 0;
};

enum class EdgeKind { Interior, Loop, Leaf };

std::vector<Edge> edge_list(const PantsGraph& g);
EdgeKind edge_kind(const PantsGraph& g, const Edge& e);

/// Ids of edges joining two distinct interior vertices (moves act on these).
std::vector<int> interior_edge_ids(const PantsGraph& g);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Diagnostic check of every structural invariant: involution shape,
/// valences in {1,3}, connectivity, at least one interior vertex.
ValidationReport validate(const PantsGraph& g);

/// Throws std::invalid_argument with the first problem if g is not valid.
void require_valid(const PantsGraph& g, const char* where);

struct GraphMetrics {
    int genus = 0;
    int punctures = 0;
    std::optional<int> girth;  // nullopt when the interior graph is a forest
    int cycle_rank = 0;
    int leaf_count = 0;
};

GraphMetrics metrics(const PantsGraph& g);

int genus_of(const PantsGraph& g);
int puncture_count(const PantsGraph& g);

/// Shortest embedded cycle of the interior graph (leaf edges cannot lie on
/// cycles).  Loops count 1, parallel pairs 2.
std::optional<int> girth(const PantsGraph& g);

/// Moore-bound form of the systole estimate for closed-surface graphs:
/// girth <= 2*log2(2g/3) + 2.  Requires a valid graph with g >= 2, n = 0.
bool girth_moore_check(const PantsGraph& g);

/// Builds the standard numbering: interior vertices 0..nv-1, leaf ends
/// appended, interior/loop edges first as glued pairs (2i, 2i+1), then one
/// leaf edge per entry of leaves (vertex id, repeated for multiplicity).
PantsGraph graph_from_interior(int interior_vertices,
                               const std::vector<std::pair<int, int>>& interior_edges,
                               const std::vector<int>& leaves);

// JSON wire format {"owner": [...], "pairs": [[lo,hi],...], "vertices": K};
// encode/decode are byte-stable and id-stable (decode(encode(g)) == g).
std::string to_json(const PantsGraph& g);
PantsGraph graph_from_json(const std::string& text);

std::string to_dot(const PantsGraph& g);

}  // namespace pantslab
