#pragma once

#include <string>
#include <vector>

#include "pantslab/pants_graph.hpp"

namespace pantslab {

/// One elementary rewrite, supported on the interior non-loop edge with the
/// given id.  swap_lo is a half-edge at the vertex holding the edge's lo
/// half, swap_hi one at the vertex holding the hi half; the move exchanges
/// them across the edge (the half-edge form of a nearest-neighbour
/// interchange).  Applying {edge, swap_hi, swap_lo} to the result undoes it.
struct Move {
    int edge = 0;
    int swap_lo = 0;
    int swap_hi = 0;

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;
};

/// Whether two moves of a batch may share support vertices.  Vertex-disjoint
/// supports (a matching) are the default reading of moves in disjoint
/// subsurfaces; the edge policy only requires the touched half-edges to be
/// distinct.
enum class DisjointPolicy { Vertex, Edge };

void check_move(const PantsGraph& g, const Move& m);
PantsGraph apply_move(const PantsGraph& g, const Move& m);

/// The (at most 4) moves supported on one interior edge, in deterministic
/// (swap_lo, swap_hi) order.
std::vector<Move> moves_on_edge(const PantsGraph& g, int edge_id);
std::vector<Move> all_moves(const PantsGraph& g);

/// Single-move neighbours.  In quotient mode the result is deduplicated by
/// isomorphism class and the class of g itself is dropped; otherwise
/// duplicates and fixed points are dropped at the labelled level.
std::vector<PantsGraph> neighbors(const PantsGraph& g, bool quotient);

struct MoveBatch {
    std::vector<Move> moves;

    int size() const { return static_cast<int>(moves.size()); }
    double cost() const;
};

/// Throws with the offending pair if the batch violates the policy.
void check_batch(const PantsGraph& g, const MoveBatch& batch,
                 DisjointPolicy policy = DisjointPolicy::Vertex);
PantsGraph apply_batch(const PantsGraph& g, const MoveBatch& batch,
                       DisjointPolicy policy = DisjointPolicy::Vertex);

struct MoveSchedule {
    PantsGraph start;
    std::vector<MoveBatch> batches;
    PantsGraph end;
    double total_cost = 0.0;
};

MoveSchedule make_schedule(const PantsGraph& start, std::vector<MoveBatch> batches,
                           DisjointPolicy policy = DisjointPolicy::Vertex);

/// Replays the batches from start and checks the recorded end and cost.
void verify_schedule(const MoveSchedule& s, DisjointPolicy policy = DisjointPolicy::Vertex);

struct CostSummary {
    double cubical = 0.0;  // sum of sqrt(k_i)
    long long unit_moves = 0;  // sum of k_i, the plain pants-graph length
    int max_batch = 0;
};

/// Verifies the replay, then reports both cost readings.
CostSummary schedule_cost(const MoveSchedule& s);

MoveSchedule concat_schedules(const MoveSchedule& a, const MoveSchedule& b);
MoveSchedule reverse_schedule(const MoveSchedule& s);

std::string schedule_to_json(const MoveSchedule& s);
MoveSchedule schedule_from_json(const std::string& text);

}  // namespace pantslab
