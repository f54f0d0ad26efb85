#include "pantslab/pants_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pantslab {

std::vector<int> PantsGraph::valences() const {
    std::vector<int> val(num_vertices, 0);
    for (int v : owner) {
        if (v >= 0 && v < num_vertices) val[v]++;
    }
    return val;
}

bool PantsGraph::is_interior(int v) const {
    int deg = 0;
    for (int w : owner)
        if (w == v) deg++;
    return deg == 3;
}

bool PantsGraph::is_leaf_end(int v) const {
    int deg = 0;
    for (int w : owner)
        if (w == v) deg++;
    return deg == 1;
}

std::vector<std::vector<int>> PantsGraph::incidence() const {
    std::vector<std::vector<int>> at(num_vertices);
    for (int h = 0; h < half_edge_count(); ++h) at[owner[h]].push_back(h);
    return at;
}

std::vector<Edge> edge_list(const PantsGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.half_edge_count() / 2);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (h < g.partner[h]) edges.push_back(Edge{h, g.partner[h]});
    }
    return edges;
}

EdgeKind edge_kind(const PantsGraph& g, const Edge& e) {
    int u = g.owner[e.lo], v = g.owner[e.hi];
    if (u == v) return EdgeKind::Loop;
    if (g.is_leaf_end(u) || g.is_leaf_end(v)) return EdgeKind::Leaf;
    return EdgeKind::Interior;
}

std::vector<int> interior_edge_ids(const PantsGraph& g) {
    std::vector<int> val = g.valences();
    std::vector<Edge> edges = edge_list(g);
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int u = g.owner[edges[i].lo], v = g.owner[edges[i].hi];
        if (u != v && val[u] == 3 && val[v] == 3) ids.push_back(i);
    }
    return ids;
}

ValidationReport validate(const PantsGraph& g) {
    ValidationReport report;
    const int H = g.half_edge_count();
    if (static_cast<int>(g.partner.size()) != H) {
        report.problems.push_back("owner and partner arrays differ in length");
        return report;
    }
    for (int h = 0; h < H; ++h) {
        if (g.owner[h] < 0 || g.owner[h] >= g.num_vertices) {
            report.problems.push_back("half-edge " + std::to_string(h) + " has out-of-range owner");
            return report;
        }
        if (g.partner[h] < 0 || g.partner[h] >= H) {
            report.problems.push_back("half-edge " + std::to_string(h) + " has out-of-range partner");
            return report;
        }
    }
    for (int h = 0; h < H; ++h) {
        if (g.partner[h] == h)
            report.problems.push_back("half-edge " + std::to_string(h) + " is glued to itself");
        else if (g.partner[g.partner[h]] != h)
            report.problems.push_back("gluing is not an involution at half-edge " + std::to_string(h));
    }
    if (!report.ok()) return report;

    std::vector<int> val = g.valences();
    int interior = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        if (val[v] == 3) {
            interior++;
        } else if (val[v] != 1) {
            report.problems.push_back("vertex " + std::to_string(v) + " has valence " +
                                      std::to_string(val[v]) + ", expected 1 or 3");
        }
    }
    if (interior == 0) report.problems.push_back("graph has no interior (valence-3) vertex");
    if (!report.ok()) return report;

    // connectivity over half-edge gluing
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<std::vector<int>> at = g.incidence();
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : at[v]) {
            int w = g.owner[g.partner[h]];
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < g.num_vertices; ++v)
        if (!seen[v]) {
            report.problems.push_back("graph is not connected");
            break;
        }
    if (!report.ok()) return report;

    // Euler bookkeeping: with valences in {1,3} and connectivity these are
    // forced, so a failure here means internal corruption.
    int n = g.num_vertices - interior;
    int e_int = (3 * interior - n) / 2;
    int genus = e_int - interior + 1;
    if (genus < 0) report.problems.push_back("negative cycle rank");
    if (interior != 2 * genus - 2 + n)
        report.problems.push_back("vertex count violates V = 2g-2+n");
    if (e_int != 3 * genus - 3 + n)
        report.problems.push_back("interior edge count violates E = 3g-3+n");
    return report;
}

void require_valid(const PantsGraph& g, const char* where) {
    ValidationReport report = validate(g);
    if (!report.ok())
        throw std::invalid_argument(std::string(where) + ": invalid graph: " + report.problems.front());
}

int puncture_count(const PantsGraph& g) {
    int n = 0;
    for (int v : g.valences())
        if (v == 1) n++;
    return n;
}

int genus_of(const PantsGraph& g) {
    int n = puncture_count(g);
    int interior = g.num_vertices - n;
    int e_int = (3 * interior - n) / 2;
    return e_int - interior + 1;
}

namespace {

// Interior graph as a simple-graph adjacency plus loop/parallel flags, for
// the girth scan.
struct InteriorAdj {
    int n = 0;
    bool has_loop = false;
    bool has_parallel = false;
    std::vector<std::vector<int>> adj;  // distinct interior neighbours
};

InteriorAdj interior_adjacency(const PantsGraph& g) {
    std::vector<int> val = g.valences();
    InteriorAdj ia;
    ia.n = g.num_vertices;
    ia.adj.resize(g.num_vertices);
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edge_list(g)) {
        int u = g.owner[e.lo], v = g.owner[e.hi];
        if (val[u] != 3 || val[v] != 3) continue;
        if (u == v) {
            ia.has_loop = true;
            continue;
        }
        auto key = std::minmax(u, v);
        if (seen.count({key.first, key.second})) {
            ia.has_parallel = true;
            continue;
        }
        seen.insert({key.first, key.second});
        ia.adj[u].push_back(v);
        ia.adj[v].push_back(u);
    }
    return ia;
}

}  // namespace

std::optional<int> girth(const PantsGraph& g) {
    InteriorAdj ia = interior_adjacency(g);
    if (ia.has_loop) return 1;
    if (ia.has_parallel) return 2;
    // Simple-graph girth by BFS from each vertex; cycles >= 3 survive in the
    // simple skeleton.
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(ia.n), parent(ia.n);
    for (int s = 0; s < ia.n; ++s) {
        if (ia.adj[s].empty()) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;
            for (int v : ia.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

GraphMetrics metrics(const PantsGraph& g) {
    require_valid(g, "metrics");
    GraphMetrics m;
    m.punctures = puncture_count(g);
    m.leaf_count = m.punctures;
    m.genus = genus_of(g);
    m.cycle_rank = m.genus;
    m.girth = girth(g);
    return m;
}

bool girth_moore_check(const PantsGraph& g) {
    require_valid(g, "girth_moore_check");
    if (puncture_count(g) != 0)
        throw std::invalid_argument("girth_moore_check: graph has leaves");
    int genus = genus_of(g);
    if (genus < 2) throw std::invalid_argument("girth_moore_check: requires genus >= 2");
    std::optional<int> s = girth(g);
    if (!s) return true;
    return *s <= 2.0 * std::log2(2.0 * genus / 3.0) + 2.0;
}

PantsGraph graph_from_interior(int interior_vertices,
                               const std::vector<std::pair<int, int>>& interior_edges,
                               const std::vector<int>& leaves) {
    PantsGraph g;
    g.num_vertices = interior_vertices + static_cast<int>(leaves.size());
    for (const auto& [u, v] : interior_edges) {
        int h = g.half_edge_count();
        g.owner.push_back(u);
        g.owner.push_back(v);
        g.partner.push_back(h + 1);
        g.partner.push_back(h);
    }
    for (int i = 0; i < static_cast<int>(leaves.size()); ++i) {
        int h = g.half_edge_count();
        g.owner.push_back(leaves[i]);
        g.owner.push_back(interior_vertices + i);
        g.partner.push_back(h + 1);
        g.partner.push_back(h);
    }
    return g;
}

std::string to_json(const PantsGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.num_vertices;
    nlohmann::json pairs = nlohmann::json::array();
    for (const Edge& e : edge_list(g)) pairs.push_back({e.lo, e.hi});
    j["pairs"] = pairs;
    j["owner"] = g.owner;
    return j.dump();
}

PantsGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("graph JSON parse error: ") + err.what());
    }
    if (!j.contains("vertices") || !j.contains("pairs") || !j.contains("owner"))
        throw std::invalid_argument("graph JSON needs fields vertices, pairs, owner");
    PantsGraph g;
    g.num_vertices = j["vertices"].get<int>();
    g.owner = j["owner"].get<std::vector<int>>();
    g.partner.assign(g.owner.size(), -1);
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("graph JSON: each pair must be [h1, h2]");
        int a = p[0].get<int>(), b = p[1].get<int>();
        if (a < 0 || b < 0 || a >= g.half_edge_count() || b >= g.half_edge_count() || a == b)
            throw std::invalid_argument("graph JSON: pair indices out of range");
        if (g.partner[a] != -1 || g.partner[b] != -1)
            throw std::invalid_argument("graph JSON: half-edge glued twice");
        g.partner[a] = b;
        g.partner[b] = a;
    }
    for (int h = 0; h < g.half_edge_count(); ++h)
        if (g.partner[h] == -1)
            throw std::invalid_argument("graph JSON: half-edge " + std::to_string(h) + " unglued");
    return g;
}

std::string to_dot(const PantsGraph& g) {
    std::ostringstream out;
    out << "graph pants {\n";
    std::vector<int> val = g.valences();
    for (int v = 0; v < g.num_vertices; ++v) {
        out << "  v" << v;
        if (val[v] == 1)
            out << " [shape=point, label=\"\"]";
        else
            out << " [shape=circle, label=\"" << v << "\"]";
        out << ";\n";
    }
    for (const Edge& e : edge_list(g))
        out << "  v" << g.owner[e.lo] << " -- v" << g.owner[e.hi] << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace pantslab
