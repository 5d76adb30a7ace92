#include "tnn/chains.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tnn {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> path_vertices(const PlanarNetwork& net, const Path& p) {
    std::vector<int> vs;
    vs.push_back(net.source_vertex(p.source_index));
    for (int e : p.edges) vs.push_back(net.edges()[e].to);
    return vs;
}

void require_vertex_disjoint(const PlanarNetwork& net, const std::vector<Path>& family,
                             const char* name) {
    std::set<int> seen;
    for (const Path& p : family)
        for (int v : path_vertices(net, p))
            if (!seen.insert(v).second)
                throw FamilyError(std::string(name) + " family is not vertex-disjoint");
}

// y-coordinate of the path polyline at abscissa x; the path must span x.
Rational path_y_at(const PlanarNetwork& net, const Path& p, const Rational& x) {
    for (int e : p.edges) {
        const Vertex& a = net.vertex(net.edges()[e].from);
        const Vertex& b = net.vertex(net.edges()[e].to);
        if (a.x <= x && x <= b.x)
            return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
    throw std::logic_error("path does not span the requested abscissa");
}

bool path_spans(const PlanarNetwork& net, const Path& p, const Rational& x) {
    const Vertex& start = net.vertex(net.source_vertex(p.source_index));
    const Vertex& end = net.vertex(net.sink_vertex(p.sink_index));
    return start.x <= x && x <= end.x;
}

} // namespace

ColoredNetwork ColoredNetwork::build(const PlanarNetwork& net, const std::vector<Path>& blue,
                                     const std::vector<Path>& red) {
    require_vertex_disjoint(net, blue, "blue");
    require_vertex_disjoint(net, red, "red");

    // Which network edges each family uses, and by which path.
    std::map<int, int> blue_of, red_of; // network edge -> 1-based path index
    auto by_source = [](const std::vector<Path>& fam) {
        std::vector<Path> sorted = fam;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Path& a, const Path& b) { return a.source_index < b.source_index; });
        return sorted;
    };
    std::vector<Path> blue_sorted = by_source(blue);
    std::vector<Path> red_sorted = by_source(red);
    for (size_t i = 0; i < blue_sorted.size(); ++i)
        for (int e : blue_sorted[i].edges) blue_of[e] = static_cast<int>(i) + 1;
    for (size_t i = 0; i < red_sorted.size(); ++i)
        for (int e : red_sorted[i].edges) red_of[e] = static_cast<int>(i) + 1;

    std::set<int> used;
    for (const auto& [e, i] : blue_of) used.insert(e);
    for (const auto& [e, i] : red_of) used.insert(e);

    // Underlying degrees (dual edges counted once).
    std::map<int, int> in_deg, out_deg;
    for (int e : used) {
        ++out_deg[net.edges()[e].from];
        ++in_deg[net.edges()[e].to];
    }
    auto pass_through = [&](int v) { return in_deg[v] == 1 && out_deg[v] == 1; };

    std::map<int, int> next_from; // vertex -> unique outgoing used edge, where unique
    for (int e : used)
        if (out_deg[net.edges()[e].from] == 1) next_from[net.edges()[e].from] = e;

    ColoredNetwork cn;
    cn.net_ = &net;
    std::set<int> consumed;
    for (int e : used) {
        if (consumed.count(e)) continue;
        if (pass_through(net.edges()[e].from)) continue; // interior of a run
        MergedEdge merged;
        merged.from = net.edges()[e].from;
        int cursor = e;
        while (true) {
            consumed.insert(cursor);
            merged.underlying.push_back(cursor);
            int head = net.edges()[cursor].to;
            if (!pass_through(head)) {
                merged.to = head;
                break;
            }
            cursor = next_from.at(head);
        }
        const bool has_blue = blue_of.count(merged.underlying.front()) > 0;
        const bool has_red = red_of.count(merged.underlying.front()) > 0;
        merged.dual = has_blue && has_red;
        const int edge_id = static_cast<int>(cn.merged_.size());
        cn.merged_.push_back(merged);
        if (has_blue)
            cn.instances_.push_back({edge_id, Color::Blue, blue_of.at(merged.underlying.front())});
        if (has_red)
            cn.instances_.push_back({edge_id, Color::Red, red_of.at(merged.underlying.front())});
    }

    cn.extract_families();
    cn.compute_chains();
    return cn;
}

void ColoredNetwork::extract_families() {
    const PlanarNetwork& net = *net_;
    for (Color color : {Color::Blue, Color::Red}) {
        std::map<int, int> out_instance; // vertex -> instance index
        std::map<int, int> in_count;
        for (size_t i = 0; i < instances_.size(); ++i) {
            if (instances_[i].color != color) continue;
            const MergedEdge& e = merged_[instances_[i].edge];
            if (out_instance.count(e.from))
                throw FamilyError("coloring is not a vertex-disjoint family");
            out_instance[e.from] = static_cast<int>(i);
            if (++in_count[e.to] > 1)
                throw FamilyError("coloring is not a vertex-disjoint family");
        }
        std::vector<Path> paths;
        for (const auto& [start, first] : out_instance) {
            if (in_count.count(start)) continue; // interior of a path
            if (!net.is_source(start))
                throw FamilyError("colored path does not start at a source");
            Path p;
            p.source_index = net.source_slot(start);
            int at = start;
            while (out_instance.count(at)) {
                int inst = out_instance.at(at);
                const MergedEdge& e = merged_[instances_[inst].edge];
                p.edges.insert(p.edges.end(), e.underlying.begin(), e.underlying.end());
                at = e.to;
            }
            if (!net.is_sink(at)) throw FamilyError("colored path does not end at a sink");
            p.sink_index = net.sink_slot(at);
            paths.push_back(std::move(p));
        }
        std::sort(paths.begin(), paths.end(),
                  [](const Path& a, const Path& b) { return a.source_index < b.source_index; });
        (color == Color::Blue ? blue_paths_ : red_paths_) = paths;

        // Refresh instance path indices from the extracted ordering.
        std::map<int, int> index_of_edge; // network edge -> path index
        for (size_t i = 0; i < paths.size(); ++i)
            for (int e : paths[i].edges) index_of_edge[e] = static_cast<int>(i) + 1;
        for (auto& inst : instances_)
            if (inst.color == color)
                inst.path_index = index_of_edge.at(merged_[inst.edge].underlying.front());
    }
}

void ColoredNetwork::compute_chains() {
    const int n = static_cast<int>(instances_.size());
    UnionFind uf(n);
    std::map<int, std::vector<int>> by_from, by_to, by_edge;
    for (int i = 0; i < n; ++i) {
        by_from[merged_[instances_[i].edge].from].push_back(i);
        by_to[merged_[instances_[i].edge].to].push_back(i);
        by_edge[instances_[i].edge].push_back(i);
    }
    for (const auto& group : {by_from, by_to, by_edge})
        for (const auto& [key, members] : group)
            for (size_t k = 1; k < members.size(); ++k) uf.unite(members[0], members[k]);

    chains_.clear();
    std::map<int, int> chain_of_root;
    for (int i = 0; i < n; ++i) {
        int root = uf.find(i);
        auto it = chain_of_root.find(root);
        if (it == chain_of_root.end()) {
            it = chain_of_root.emplace(root, static_cast<int>(chains_.size())).first;
            chains_.push_back({});
            chains_.back().id = static_cast<int>(chains_.size());
        }
        chains_[it->second].instances.push_back(i);
    }

    for (Chain& chain : chains_) {
        chain.even = chain.instances.size() % 2 == 0;
        // Endpoints: boundary-side attachment groups of size one.
        for (const auto& [v, members] : by_from) {
            if (members.size() != 1) continue;
            int inst = members[0];
            if (uf.find(inst) != uf.find(chain.instances[0])) continue;
            if (net_->is_source(v))
                chain.endpoints.push_back({v, true, instances_[inst].color});
        }
        for (const auto& [v, members] : by_to) {
            if (members.size() != 1) continue;
            int inst = members[0];
            if (uf.find(inst) != uf.find(chain.instances[0])) continue;
            if (net_->is_sink(v))
                chain.endpoints.push_back({v, false, instances_[inst].color});
        }
        chain.closed_tour = chain.endpoints.empty();
    }
}

bool ColoredNetwork::strongly_connected(int i1, int i2) const {
    if (i1 == i2) throw std::logic_error("strongly_connected expects distinct instances");
    const ColorInstance& a = instances_.at(i1);
    const ColorInstance& b = instances_.at(i2);
    if (a.edge == b.edge) return true; // the two instances of a dual edge
    return merged_[a.edge].from == merged_[b.edge].from || merged_[a.edge].to == merged_[b.edge].to;
}

bool ColoredNetwork::is_evenly_chained() const {
    for (const Chain& chain : chains_)
        if (!chain.even) return false;
    return true;
}

ColoredNetwork ColoredNetwork::recolor_chain(const Chain& chain) const {
    ColoredNetwork next = *this;
    for (int i : chain.instances)
        next.instances_[i].color =
            next.instances_[i].color == Color::Blue ? Color::Red : Color::Blue;
    next.extract_families();
    next.compute_chains();
    return next;
}

long ColoredNetwork::depth(int instance) const {
    const ColorInstance& inst = instances_.at(instance);
    const MergedEdge& edge = merged_[inst.edge];
    const int mid = edges_midpoint_index(edge);
    const Edge& seg = net_->edges()[edge.underlying[static_cast<size_t>(mid)]];
    const Vertex& a = net_->vertex(seg.from);
    const Vertex& b = net_->vertex(seg.to);
    const Rational x = (a.x + b.x) / 2;
    const Rational y = (a.y + b.y) / 2;

    if (inst.color == Color::Blue) {
        long above = 0;
        for (const Path& rho : red_paths_)
            if (path_spans(*net_, rho, x) && path_y_at(*net_, rho, x) > y) ++above;
        return inst.path_index - above - 1;
    }
    long on_or_above = 0;
    for (const Path& beta : blue_paths_)
        if (path_spans(*net_, beta, x) && path_y_at(*net_, beta, x) >= y) ++on_or_above;
    return -inst.path_index + on_or_above;
}

ColoredNetwork ColoredNetwork::sink_swap() const {
    if (!is_evenly_chained()) throw FamilyError("sink_swap requires an evenly chained network");
    if (blue_paths_.size() != red_paths_.size())
        throw FamilyError("sink_swap requires equal path counts");

    std::set<int> flip;
    for (const Chain& chain : chains_)
        for (const ChainEndpoint& ep : chain.endpoints)
            if (!ep.at_source)
                for (int i : chain.instances) flip.insert(i);

    ColoredNetwork next = *this;
    for (int i : flip)
        next.instances_[i].color =
            next.instances_[i].color == Color::Blue ? Color::Red : Color::Blue;
    next.extract_families();
    next.compute_chains();

    // Postconditions: sources fixed per family, sink sets exchanged.
    auto sources_of = [](const std::vector<Path>& fam) {
        std::vector<int> s;
        for (const Path& p : fam) s.push_back(p.source_index);
        return s;
    };
    auto sinks_of = [](const std::vector<Path>& fam) {
        std::vector<int> s;
        for (const Path& p : fam) s.push_back(p.sink_index);
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sources_of(next.blue_paths_) != sources_of(blue_paths_) ||
        sources_of(next.red_paths_) != sources_of(red_paths_))
        throw FamilyError("sink_swap changed a source");
    if (sinks_of(next.blue_paths_) != sinks_of(red_paths_) ||
        sinks_of(next.red_paths_) != sinks_of(blue_paths_))
        throw FamilyError("sink_swap did not interchange the sinks");
    return next;
}

int ColoredNetwork::edges_midpoint_index(const MergedEdge& edge) {
    return static_cast<int>(edge.underlying.size() / 2);
}

std::string ColoredNetwork::dump() const {
    std::map<int, int> chain_of;
    for (const Chain& chain : chains_)
        for (int i : chain.instances) chain_of[i] = chain.id;
    std::vector<std::string> lines;
    for (size_t i = 0; i < instances_.size(); ++i) {
        const MergedEdge& e = merged_[instances_[i].edge];
        std::ostringstream line;
        line << "chain=" << chain_of[static_cast<int>(i)]
             << " color=" << (instances_[i].color == Color::Blue ? "blue" : "red")
             << " from=" << net_->vertex(e.from).id << " to=" << net_->vertex(e.to).id
             << " dual=" << (e.dual ? 1 : 0);
        lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (const auto& l : lines) out << l << '\n';
    return out.str();
}

CancellationReport verify_2x2_cancellation(const PlanarNetwork& net, const OffsetSet& A,
                                           const OffsetSet& B, const std::pair<int, int>& C,
                                           const std::pair<int, int>& D) {
    const auto [c1, c2] = C;
    const auto [d1, d2] = D;
    if (!(c1 < c2) || !(d1 < d2)) throw DimensionError("window indices must be increasing");
    PolyMatrix W = net.weight_matrix();
    PolyMatrix T = minor_matrix(W, A, B); // validates A, B against W
    if (c1 < 1 || c2 > T.rows() || d1 < 1 || d2 > T.cols())
        throw DimensionError("window indices out of range for the minor matrix");

    auto shifted = [](int base, const OffsetSet& offsets) {
        IndexSet I;
        for (int o : offsets) I.push_back(base + o);
        return I;
    };
    auto disjoint_families = [&](int row, int col) {
        std::vector<std::vector<Path>> result;
        for (const PathFamily& f : enumerate_families(net, shifted(row, A), shifted(col, B)))
            if (is_vertex_disjoint(net, f)) result.push_back(f.paths);
        return result;
    };

    auto blue_bundles = disjoint_families(c1, d2);
    auto red_bundles = disjoint_families(c2, d1);
    auto target_blue = disjoint_families(c1, d1);
    auto target_red = disjoint_families(c2, d2);

    auto weight_of = [&](const std::vector<Path>& fam) {
        Polynomial w(1);
        for (const Path& p : fam) w = w * net.path_weight(p);
        return w;
    };
    auto contains = [](const std::vector<std::vector<Path>>& pool, const std::vector<Path>& fam) {
        return std::find(pool.begin(), pool.end(), fam) != pool.end();
    };

    CancellationReport report;
    std::set<std::pair<std::string, std::string>> images;
    auto key_of = [&](const std::vector<Path>& fam) {
        std::ostringstream key;
        for (const Path& p : fam) {
            key << p.source_index << ':' << p.sink_index << ':';
            for (int e : p.edges) key << e << ',';
            key << ';';
        }
        return key.str();
    };

    for (const auto& blue : blue_bundles) {
        for (const auto& red : red_bundles) {
            ++report.pairs_checked;
            try {
                ColoredNetwork cn = ColoredNetwork::build(net, blue, red);
                if (!cn.is_evenly_chained()) {
                    report.ok = false;
                    report.message = "pair is not evenly chained";
                    break;
                }
                ColoredNetwork swapped = cn.sink_swap();
                const auto& new_blue = swapped.blue_paths();
                const auto& new_red = swapped.red_paths();
                if (!contains(target_blue, new_blue) || !contains(target_red, new_red)) {
                    report.ok = false;
                    report.message = "sink swap image is not a target disjoint-family pair";
                    break;
                }
                if (weight_of(new_blue) * weight_of(new_red) != weight_of(blue) * weight_of(red)) {
                    report.ok = false;
                    report.message = "sink swap changed the weight";
                    break;
                }
                if (!images.emplace(key_of(new_blue), key_of(new_red)).second) {
                    report.ok = false;
                    report.message = "sink swap images collide (map not injective)";
                    break;
                }
            } catch (const FamilyError& e) {
                report.ok = false;
                report.message = e.what();
                break;
            }
        }
        if (!report.ok) break;
    }

    Polynomial det = T.at(c1, d1) * T.at(c2, d2) - T.at(c1, d2) * T.at(c2, d1);
    report.minor_subtraction_free = det.is_subtraction_free();
    if (!report.minor_subtraction_free) {
        report.ok = false;
        if (report.message.empty()) report.message = "2x2 minor has a negative coefficient";
    }
    return report;
}

} // namespace tnn
