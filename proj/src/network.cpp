#include "tnn/network.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace tnn {

namespace {

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

// Orientation of c relative to segment a->b: sign of the cross product.
int orientation(const Vertex& a, const Vertex& b, const Vertex& c) {
    return sign_of((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool on_segment(const Vertex& a, const Vertex& b, const Vertex& c) {
    // c collinear with a-b assumed; test bounding box.
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Proper or improper intersection of closed segments pq and rs.
bool segments_intersect(const Vertex& p, const Vertex& q, const Vertex& r, const Vertex& s) {
    int o1 = orientation(p, q, r);
    int o2 = orientation(p, q, s);
    int o3 = orientation(r, s, p);
    int o4 = orientation(r, s, q);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p, q, r)) return true;
    if (o2 == 0 && on_segment(p, q, s)) return true;
    if (o3 == 0 && on_segment(r, s, p)) return true;
    if (o4 == 0 && on_segment(r, s, q)) return true;
    return false;
}

bool valid_symbol_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

std::string ValidationReport::str() const {
    if (ok()) return "ok\n";
    std::ostringstream out;
    for (const auto& v : violations) out << v.rule << ": " << v.detail << '\n';
    return out.str();
}

bool PlanarNetwork::is_source(int v) const { return source_slot(v) != 0; }
bool PlanarNetwork::is_sink(int v) const { return sink_slot(v) != 0; }

int PlanarNetwork::source_slot(int v) const {
    for (size_t k = 0; k < sources_.size(); ++k)
        if (sources_[k] == v) return static_cast<int>(k) + 1;
    return 0;
}

int PlanarNetwork::sink_slot(int v) const {
    for (size_t k = 0; k < sinks_.size(); ++k)
        if (sinks_[k] == v) return static_cast<int>(k) + 1;
    return 0;
}

std::vector<int> PlanarNetwork::out_edges(int v) const {
    std::vector<int> result;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].from == v) result.push_back(static_cast<int>(e));
    return result;
}

std::vector<int> PlanarNetwork::in_edges(int v) const {
    std::vector<int> result;
    for (size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].to == v) result.push_back(static_cast<int>(e));
    return result;
}

ValidationReport PlanarNetwork::validate() const {
    ValidationReport report;
    auto violate = [&](const std::string& rule, const std::string& detail) {
        report.violations.push_back({rule, detail});
    };

    // Degree conditions.
    for (int k = 1; k <= order_; ++k) {
        int s = sources_[k - 1];
        if (!in_edges(s).empty())
            violate("source in-degree", "source s" + std::to_string(k) + " (" + vertices_[s].id +
                                            ") has incoming edges");
        int t = sinks_[k - 1];
        if (!out_edges(t).empty())
            violate("sink out-degree", "sink t" + std::to_string(k) + " (" + vertices_[t].id +
                                           ") has outgoing edges");
    }

    // Counterclockwise boundary labeling: s1..sn top to bottom, t1..tn likewise.
    for (int k = 2; k <= order_; ++k) {
        if (!(vertices_[sources_[k - 1]].y < vertices_[sources_[k - 2]].y))
            violate("labeling order", "source s" + std::to_string(k) + " not strictly below s" +
                                          std::to_string(k - 1));
        if (!(vertices_[sinks_[k - 1]].y < vertices_[sinks_[k - 2]].y))
            violate("labeling order", "sink t" + std::to_string(k) + " not strictly below t" +
                                          std::to_string(k - 1));
    }

    // Sources strictly left of everything else, sinks strictly right.
    for (size_t v = 0; v < vertices_.size(); ++v) {
        int vi = static_cast<int>(v);
        if (!is_source(vi)) {
            for (int s : sources_)
                if (!(vertices_[s].x < vertices_[v].x))
                    violate("source placement", "source " + vertices_[s].id +
                                                    " not strictly left of " + vertices_[v].id);
        }
        if (!is_sink(vi)) {
            for (int t : sinks_)
                if (!(vertices_[t].x > vertices_[v].x))
                    violate("sink placement", "sink " + vertices_[t].id +
                                                  " not strictly right of " + vertices_[v].id);
        }
    }

    // No x-ties among interior vertices (keeps "rightmost" well-defined).
    for (size_t u = 0; u < vertices_.size(); ++u) {
        if (is_source(static_cast<int>(u)) || is_sink(static_cast<int>(u))) continue;
        for (size_t v = u + 1; v < vertices_.size(); ++v) {
            if (is_source(static_cast<int>(v)) || is_sink(static_cast<int>(v))) continue;
            if (vertices_[u].x == vertices_[v].x)
                violate("interior x-tie",
                        vertices_[u].id + " and " + vertices_[v].id + " share an x-coordinate");
        }
    }

    // Edges strictly left to right.
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (!(vertices_[edge.from].x < vertices_[edge.to].x))
            violate("non-left-to-right edge",
                    vertices_[edge.from].id + " -> " + vertices_[edge.to].id);
    }

    // At most one edge per ordered pair.
    for (size_t e = 0; e < edges_.size(); ++e)
        for (size_t f = e + 1; f < edges_.size(); ++f)
            if (edges_[e].from == edges_[f].from && edges_[e].to == edges_[f].to)
                violate("multi-edge", vertices_[edges_[e].from].id + " -> " +
                                          vertices_[edges_[e].to].id);

    // Straight-segment planarity: no two edges intersect except at a shared
    // endpoint, and no edge passes through a non-endpoint vertex.
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Vertex& p = vertices_[edges_[e].from];
        const Vertex& q = vertices_[edges_[e].to];
        for (size_t f = e + 1; f < edges_.size(); ++f) {
            const Vertex& r = vertices_[edges_[f].from];
            const Vertex& s = vertices_[edges_[f].to];
            bool share = edges_[e].from == edges_[f].from || edges_[e].from == edges_[f].to ||
                         edges_[e].to == edges_[f].from || edges_[e].to == edges_[f].to;
            if (!segments_intersect(p, q, r, s)) continue;
            if (!share) {
                violate("edge crossing", p.id + "->" + q.id + " crosses " + r.id + "->" + s.id);
                continue;
            }
            // Shared endpoint: any further contact means overlap.
            // Collinear overlapping edges intersect in more than one point.
            if (orientation(p, q, r) == 0 && orientation(p, q, s) == 0) {
                // Same supporting line; overlap iff interiors meet.
                int shared = 0;
                if (edges_[e].from == edges_[f].from || edges_[e].from == edges_[f].to) ++shared;
                if (edges_[e].to == edges_[f].from || edges_[e].to == edges_[f].to) ++shared;
                if (shared < 2) {
                    // Overlap iff a non-shared endpoint lies on the other segment.
                    bool overlap = false;
                    if (on_segment(p, q, r) && !(r.x == p.x && r.y == p.y) &&
                        !(r.x == q.x && r.y == q.y))
                        overlap = true;
                    if (on_segment(p, q, s) && !(s.x == p.x && s.y == p.y) &&
                        !(s.x == q.x && s.y == q.y))
                        overlap = true;
                    if (on_segment(r, s, p) && !(p.x == r.x && p.y == r.y) &&
                        !(p.x == s.x && p.y == s.y))
                        overlap = true;
                    if (on_segment(r, s, q) && !(q.x == r.x && q.y == r.y) &&
                        !(q.x == s.x && q.y == s.y))
                        overlap = true;
                    if (overlap)
                        violate("edge overlap",
                                p.id + "->" + q.id + " overlaps " + r.id + "->" + s.id);
                }
            }
        }
        for (size_t v = 0; v < vertices_.size(); ++v) {
            int vi = static_cast<int>(v);
            if (vi == edges_[e].from || vi == edges_[e].to) continue;
            if (orientation(p, q, vertices_[v]) == 0 && on_segment(p, q, vertices_[v]))
                violate("edge through vertex",
                        p.id + "->" + q.id + " passes through " + vertices_[v].id);
        }
    }

    return report;
}

std::vector<Path> PlanarNetwork::enumerate_paths(int i, int j) const {
    if (i < 1 || i > order_ || j < 1 || j > order_)
        throw DimensionError("source or sink index out of range");
    const int start = sources_[i - 1];
    const int goal = sinks_[j - 1];
    std::vector<Path> result;
    std::vector<int> stack;

    // Depth-first; out-edges tried in edge insertion order.
    std::function<void(int)> dfs = [&](int v) {
        if (v == goal) {
            result.push_back({i, j, stack});
            return;
        }
        for (int e : out_edges(v)) {
            stack.push_back(e);
            dfs(edges_[e].to);
            stack.pop_back();
        }
    };
    dfs(start);
    return result;
}

Polynomial PlanarNetwork::path_weight(const Path& p) const {
    Polynomial w(1);
    for (int e : p.edges) w = w * edges_[e].weight;
    return w;
}

PolyMatrix PlanarNetwork::weight_matrix() const {
    auto report = validate();
    if (!report.ok())
        throw std::runtime_error("invalid network: " + report.violations.front().rule);

    // Topological order by x, ties broken by y (interior x's are distinct;
    // ties occur only among sources or among sinks, which carry no edges
    // between themselves).
    std::vector<int> topo(vertices_.size());
    std::iota(topo.begin(), topo.end(), 0);
    std::sort(topo.begin(), topo.end(), [&](int a, int b) {
        if (vertices_[a].x != vertices_[b].x) return vertices_[a].x < vertices_[b].x;
        return vertices_[a].y < vertices_[b].y;
    });

    PolyMatrix W(order_, order_);
    for (int i = 1; i <= order_; ++i) {
        std::vector<Polynomial> reach(vertices_.size());
        reach[sources_[i - 1]] = Polynomial(1);
        for (int v : topo) {
            if (reach[v].is_zero()) continue;
            for (int e : out_edges(v)) reach[edges_[e].to] = reach[edges_[e].to] + reach[v] * edges_[e].weight;
        }
        for (int j = 1; j <= order_; ++j) W.at(i, j) = reach[sinks_[j - 1]];
    }
    return W;
}

PolyMatrix PlanarNetwork::weight_matrix_by_enumeration() const {
    PolyMatrix W(order_, order_);
    for (int i = 1; i <= order_; ++i)
        for (int j = 1; j <= order_; ++j) {
            Polynomial sum;
            for (const Path& p : enumerate_paths(i, j)) sum = sum + path_weight(p);
            W.at(i, j) = sum;
        }
    return W;
}

std::optional<std::string> PlanarNetwork::Builder::build(PlanarNetwork& out) const {
    PlanarNetwork net;
    if (order < 1) return "order must be a positive integer";
    net.order_ = order;
    for (const auto& v : vertices) {
        if (net.index_by_id_.count(v.id)) return "duplicate vertex id '" + v.id + "'";
        net.index_by_id_[v.id] = static_cast<int>(net.vertices_.size());
        net.vertices_.push_back(v);
    }
    net.sources_.assign(order, -1);
    net.sinks_.assign(order, -1);
    for (const auto& [slot, id] : sources) {
        if (slot < 1 || slot > order) return "source slot out of range";
        auto it = net.index_by_id_.find(id);
        if (it == net.index_by_id_.end()) return "unknown source vertex '" + id + "'";
        if (net.sources_[slot - 1] != -1) return "duplicate source slot " + std::to_string(slot);
        net.sources_[slot - 1] = it->second;
    }
    for (const auto& [slot, id] : sinks) {
        if (slot < 1 || slot > order) return "sink slot out of range";
        auto it = net.index_by_id_.find(id);
        if (it == net.index_by_id_.end()) return "unknown sink vertex '" + id + "'";
        if (net.sinks_[slot - 1] != -1) return "duplicate sink slot " + std::to_string(slot);
        net.sinks_[slot - 1] = it->second;
    }
    for (int k = 0; k < order; ++k) {
        if (net.sources_[k] == -1) return "missing source " + std::to_string(k + 1);
        if (net.sinks_[k] == -1) return "missing sink " + std::to_string(k + 1);
    }
    for (const auto& e : edges) {
        auto fu = net.index_by_id_.find(e.from);
        auto tu = net.index_by_id_.find(e.to);
        if (fu == net.index_by_id_.end()) return "unknown vertex '" + e.from + "'";
        if (tu == net.index_by_id_.end()) return "unknown vertex '" + e.to + "'";
        net.edges_.push_back({fu->second, tu->second, e.weight});
    }
    out = std::move(net);
    return std::nullopt;
}

ParseResult parse_network(const std::string& text) {
    PlanarNetwork::Builder builder;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_order = false;

    auto fail = [&](const std::string& reason) {
        return ParseResult{std::nullopt, "line " + std::to_string(lineno) + ": " + reason};
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;

        if (!saw_order && keyword != "order")
            return fail("expected 'order' as the first directive");

        if (keyword == "order") {
            if (saw_order) return fail("duplicate 'order' line");
            if (!(ls >> builder.order) || builder.order < 1)
                return fail("order must be a positive integer");
            saw_order = true;
        } else if (keyword == "vertex") {
            std::string id, xs, ys;
            if (!(ls >> id >> xs >> ys)) return fail("vertex needs: id x y");
            auto x = parse_rational(xs);
            auto y = parse_rational(ys);
            if (!x || !y) return fail("bad coordinate for vertex '" + id + "'");
            builder.vertices.push_back({id, *x, *y});
        } else if (keyword == "source" || keyword == "sink") {
            int slot;
            std::string id;
            if (!(ls >> slot >> id)) return fail(keyword + " needs: slot vertex-id");
            if (keyword == "source")
                builder.sources.emplace_back(slot, id);
            else
                builder.sinks.emplace_back(slot, id);
        } else if (keyword == "edge") {
            std::string from, to, weight;
            if (!(ls >> from >> to >> weight)) return fail("edge needs: from to weight");
            Polynomial w;
            if (auto r = parse_rational(weight); r.has_value()) {
                if (*r < 0) return fail("edge weight must be nonnegative");
                w = Polynomial::constant(*r);
            } else if (valid_symbol_name(weight)) {
                w = Polynomial::symbol(weight);
            } else {
                return fail("edge weight must be a symbol or a nonnegative rational");
            }
            builder.edges.push_back({from, to, w});
        } else {
            return fail("unknown directive '" + keyword + "'");
        }
        std::string extra;
        if (ls >> extra) return fail("trailing tokens");
    }
    if (!saw_order) {
        lineno = 0;
        return fail("missing 'order' line");
    }
    PlanarNetwork net;
    if (auto err = builder.build(net)) {
        lineno = 0;
        return fail(*err);
    }
    return ParseResult{std::move(net), ""};
}

std::string serialize_network(const PlanarNetwork& net) {
    std::ostringstream out;
    out << "order " << net.order() << '\n';
    for (const auto& v : net.vertices())
        out << "vertex " << v.id << ' ' << v.x.str() << ' ' << v.y.str() << '\n';
    for (int k = 1; k <= net.order(); ++k)
        out << "source " << k << ' ' << net.vertex(net.source_vertex(k)).id << '\n';
    for (int k = 1; k <= net.order(); ++k)
        out << "sink " << k << ' ' << net.vertex(net.sink_vertex(k)).id << '\n';
    for (const auto& e : net.edges())
        out << "edge " << net.vertex(e.from).id << ' ' << net.vertex(e.to).id << ' '
            << e.weight.str() << '\n';
    return out.str();
}

} // namespace tnn
