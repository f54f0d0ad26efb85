#include "pantslab/moves.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "pantslab/canonical.hpp"

namespace pantslab {

namespace {

struct MoveSite {
    int lo, hi;    // half-edges of the support edge
    int u, v;      // their owners
};

MoveSite site_of(const PantsGraph& g, const Move& m) {
    std::vector<Edge> edges = edge_list(g);
    if (m.edge < 0 || m.edge >= static_cast<int>(edges.size()))
        throw std::invalid_argument("move: edge id out of range");
    const Edge& e = edges[m.edge];
    return MoveSite{e.lo, e.hi, g.owner[e.lo], g.owner[e.hi]};
}

}  // namespace

void check_move(const PantsGraph& g, const Move& m) {
    MoveSite s = site_of(g, m);
    if (s.u == s.v) throw std::invalid_argument("move: support edge is a loop");
    if (!g.is_interior(s.u) || !g.is_interior(s.v))
        throw std::invalid_argument("move: support edge is a leaf edge");
    if (m.swap_lo < 0 || m.swap_lo >= g.half_edge_count() || g.owner[m.swap_lo] != s.u ||
        m.swap_lo == s.lo)
        throw std::invalid_argument("move: bad half-edge choice at lo endpoint");
    if (m.swap_hi < 0 || m.swap_hi >= g.half_edge_count() || g.owner[m.swap_hi] != s.v ||
        m.swap_hi == s.hi)
        throw std::invalid_argument("move: bad half-edge choice at hi endpoint");
}

PantsGraph apply_move(const PantsGraph& g, const Move& m) {
    check_move(g, m);
    MoveSite s = site_of(g, m);
    PantsGraph out = g;
    out.owner[m.swap_lo] = s.v;
    out.owner[m.swap_hi] = s.u;
    return out;
}

std::vector<Move> moves_on_edge(const PantsGraph& g, int edge_id) {
    std::vector<Edge> edges = edge_list(g);
    const Edge& e = edges.at(edge_id);
    int u = g.owner[e.lo], v = g.owner[e.hi];
    if (u == v || !g.is_interior(u) || !g.is_interior(v)) return {};
    std::vector<int> at_u, at_v;
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (g.owner[h] == u && h != e.lo) at_u.push_back(h);
        if (g.owner[h] == v && h != e.hi) at_v.push_back(h);
    }
    std::vector<Move> out;
    for (int a : at_u)
        for (int b : at_v) out.push_back(Move{edge_id, a, b});
    return out;
}

std::vector<Move> all_moves(const PantsGraph& g) {
    std::vector<Move> out;
    for (int id : interior_edge_ids(g)) {
        std::vector<Move> ms = moves_on_edge(g, id);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

std::vector<PantsGraph> neighbors(const PantsGraph& g, bool quotient) {
    require_valid(g, "neighbors");
    std::vector<PantsGraph> out;
    if (quotient) {
        std::set<std::string> seen;
        seen.insert(canonical_key(g).key);
        for (const Move& m : all_moves(g)) {
            PantsGraph h = apply_move(g, m);
            std::string key = canonical_key(h).key;
            if (seen.insert(key).second) out.push_back(std::move(h));
        }
    } else {
        std::set<std::vector<int>> seen;
        seen.insert(g.owner);
        for (const Move& m : all_moves(g)) {
            PantsGraph h = apply_move(g, m);
            if (seen.insert(h.owner).second) out.push_back(std::move(h));
        }
    }
    return out;
}

double MoveBatch::cost() const { return std::sqrt(static_cast<double>(moves.size())); }

void check_batch(const PantsGraph& g, const MoveBatch& batch, DisjointPolicy policy) {
    if (batch.moves.empty()) throw std::invalid_argument("batch: empty");
    std::vector<Edge> edges = edge_list(g);
    for (const Move& m : batch.moves) check_move(g, m);
    for (size_t i = 0; i < batch.moves.size(); ++i) {
        for (size_t j = i + 1; j < batch.moves.size(); ++j) {
            const Move& a = batch.moves[i];
            const Move& b = batch.moves[j];
            if (a.edge == b.edge)
                throw std::invalid_argument("batch: moves " + std::to_string(i) + " and " +
                                            std::to_string(j) + " share a support edge");
            if (policy == DisjointPolicy::Vertex) {
                MoveSite sa = site_of(g, a), sb = site_of(g, b);
                if (sa.u == sb.u || sa.u == sb.v || sa.v == sb.u || sa.v == sb.v)
                    throw std::invalid_argument("batch: moves " + std::to_string(i) + " and " +
                                                std::to_string(j) + " share a support vertex");
            } else {
                // Touched half-edges must be distinct so the rewrites commute
                // and each move stays well-formed regardless of order.
                const Edge& ea = edges[a.edge];
                const Edge& eb = edges[b.edge];
                int ta[4] = {ea.lo, ea.hi, a.swap_lo, a.swap_hi};
                int tb[4] = {eb.lo, eb.hi, b.swap_lo, b.swap_hi};
                for (int x : ta)
                    for (int y : tb)
                        if (x == y)
                            throw std::invalid_argument("batch: moves " + std::to_string(i) +
                                                        " and " + std::to_string(j) +
                                                        " touch a common half-edge");
            }
        }
    }
}

PantsGraph apply_batch(const PantsGraph& g, const MoveBatch& batch, DisjointPolicy policy) {
    check_batch(g, batch, policy);
    // Disjoint supports commute, so a fixed order is just a convention.
    std::vector<Move> moves = batch.moves;
    std::sort(moves.begin(), moves.end());
    PantsGraph out = g;
    for (const Move& m : moves) out = apply_move(out, m);
    return out;
}

MoveSchedule make_schedule(const PantsGraph& start, std::vector<MoveBatch> batches,
                           DisjointPolicy policy) {
    MoveSchedule s;
    s.start = start;
    s.batches = std::move(batches);
    PantsGraph cur = start;
    double cost = 0.0;
    for (const MoveBatch& b : s.batches) {
        cur = apply_batch(cur, b, policy);
        cost += b.cost();
    }
    s.end = std::move(cur);
    s.total_cost = cost;
    return s;
}

void verify_schedule(const MoveSchedule& s, DisjointPolicy policy) {
    PantsGraph cur = s.start;
    double cost = 0.0;
    for (const MoveBatch& b : s.batches) {
        cur = apply_batch(cur, b, policy);
        cost += b.cost();
    }
    if (!(cur == s.end)) throw std::runtime_error("schedule replay does not reach recorded end");
    if (std::abs(cost - s.total_cost) > 1e-9)
        throw std::runtime_error("schedule replay cost mismatch");
}

CostSummary schedule_cost(const MoveSchedule& s) {
    verify_schedule(s);
    CostSummary c;
    for (const MoveBatch& b : s.batches) {
        c.cubical += b.cost();
        c.unit_moves += b.size();
        c.max_batch = std::max(c.max_batch, b.size());
    }
    return c;
}

MoveSchedule concat_schedules(const MoveSchedule& a, const MoveSchedule& b) {
    if (!(a.end == b.start))
        throw std::invalid_argument("concat_schedules: endpoint mismatch");
    std::vector<MoveBatch> batches = a.batches;
    batches.insert(batches.end(), b.batches.begin(), b.batches.end());
    MoveSchedule out;
    out.start = a.start;
    out.batches = std::move(batches);
    out.end = b.end;
    out.total_cost = a.total_cost + b.total_cost;
    return out;
}

MoveSchedule reverse_schedule(const MoveSchedule& s) {
    MoveSchedule out;
    out.start = s.end;
    out.batches.reserve(s.batches.size());
    for (auto it = s.batches.rbegin(); it != s.batches.rend(); ++it) {
        MoveBatch rb;
        for (const Move& m : it->moves) rb.moves.push_back(Move{m.edge, m.swap_hi, m.swap_lo});
        out.batches.push_back(std::move(rb));
    }
    out.end = s.start;
    out.total_cost = s.total_cost;
    return out;
}

std::string schedule_to_json(const MoveSchedule& s) {
    nlohmann::json j;
    j["start"] = nlohmann::json::parse(to_json(s.start));
    nlohmann::json batches = nlohmann::json::array();
    for (const MoveBatch& b : s.batches) {
        nlohmann::json moves = nlohmann::json::array();
        for (const Move& m : b.moves) {
            nlohmann::json jm;
            jm["edge"] = m.edge;
            jm["swap"] = {m.swap_lo, m.swap_hi};
            moves.push_back(jm);
        }
        nlohmann::json jb;
        jb["moves"] = moves;
        jb["cost"] = b.cost();
        batches.push_back(jb);
    }
    j["batches"] = batches;
    j["end"] = nlohmann::json::parse(to_json(s.end));
    j["total_cost"] = s.total_cost;
    return j.dump();
}

MoveSchedule schedule_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("schedule JSON parse error: ") + err.what());
    }
    if (!j.contains("start") || !j.contains("batches"))
        throw std::invalid_argument("schedule JSON needs fields start, batches");
    PantsGraph start = graph_from_json(j["start"].dump());
    std::vector<MoveBatch> batches;
    for (const auto& jb : j["batches"]) {
        MoveBatch b;
        for (const auto& jm : jb["moves"]) {
            Move m;
            m.edge = jm["edge"].get<int>();
            m.swap_lo = jm["swap"][0].get<int>();
            m.swap_hi = jm["swap"][1].get<int>();
            b.moves.push_back(m);
        }
        batches.push_back(std::move(b));
    }
    MoveSchedule s = make_schedule(start, std::move(batches));
    if (j.contains("end")) {
        PantsGraph end = graph_from_json(j["end"].dump());
        if (!(end == s.end)) throw std::runtime_error("schedule JSON: replay does not reach end");
    }
    return s;
}

}  // namespace pantslab
