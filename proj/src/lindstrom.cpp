#include "tnn/lindstrom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tnn {

int permutation_sign(const std::vector<int>& sigma) {
    int inversions = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<int> path_vertices(const PlanarNetwork& net, const Path& p) {
    std::vector<int> vs;
    vs.push_back(net.source_vertex(p.source_index));
    for (int e : p.edges) vs.push_back(net.edges()[e].to);
    return vs;
}

} // namespace

std::vector<PathFamily> enumerate_families(const PlanarNetwork& net, const IndexSet& I,
                                           const IndexSet& J) {
    if (I.size() != J.size()) throw DimensionError("source and sink sets differ in cardinality");
    const int k = static_cast<int>(I.size());
    for (int v : I)
        if (v < 1 || v > net.order()) throw DimensionError("source index out of range");
    for (int v : J)
        if (v < 1 || v > net.order()) throw DimensionError("sink index out of range");

    std::vector<PathFamily> families;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end()); // lexicographic one-line order from identity
    do {
        // Paths for slot q: from source I[q] to sink J[perm[q]].
        std::vector<std::vector<Path>> choices(k);
        bool feasible = true;
        for (int q = 0; q < k && feasible; ++q) {
            choices[q] = net.enumerate_paths(I[q], J[perm[q]]);
            if (choices[q].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<int> sigma(k);
        for (int q = 0; q < k; ++q) sigma[q] = J[perm[q]];
        const int sign = permutation_sign(sigma);

        std::vector<size_t> pick(k, 0);
        while (true) {
            PathFamily f;
            f.sigma = sigma;
            f.sign = sign;
            for (int q = 0; q < k; ++q) f.paths.push_back(choices[q][pick[q]]);
            families.push_back(std::move(f));
            int pos = k - 1;
            while (pos >= 0 && pick[pos] + 1 == choices[pos].size()) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return families;
}

bool is_vertex_disjoint(const PlanarNetwork& net, const PathFamily& f) {
    std::set<int> seen;
    for (const Path& p : f.paths)
        for (int v : path_vertices(net, p))
            if (!seen.insert(v).second) return false;
    return true;
}

FamilyClass classify(const PlanarNetwork& net, const PathFamily& f) {
    if (is_vertex_disjoint(net, f)) return FamilyClass::P0;
    return f.sign > 0 ? FamilyClass::Pplus : FamilyClass::Pminus;
}

Polynomial family_weight(const PlanarNetwork& net, const PathFamily& f) {
    Polynomial w(1);
    for (const Path& p : f.paths) w = w * net.path_weight(p);
    return w;
}

Polynomial disjoint_sum(const PlanarNetwork& net, const IndexSet& I, const IndexSet& J) {
    Polynomial total;
    for (const PathFamily& f : enumerate_families(net, I, J))
        if (is_vertex_disjoint(net, f)) total = total + family_weight(net, f);
    return total;
}

PathFamily tail_swap(const PlanarNetwork& net, const PathFamily& f) {
    // Vertex -> slots of the paths visiting it.
    std::map<int, std::vector<int>> visitors;
    for (size_t q = 0; q < f.paths.size(); ++q)
        for (int v : path_vertices(net, f.paths[q])) visitors[v].push_back(static_cast<int>(q));

    int best = -1;
    for (const auto& [v, slots] : visitors) {
        if (slots.size() < 2) continue;
        if (best == -1 || net.vertex(v).x > net.vertex(best).x) best = v;
    }
    if (best == -1) throw std::logic_error("tail_swap on a vertex-disjoint family");

    const auto& slots = visitors[best];
    const int i = slots[0];
    const int j = slots[1]; // two least indices: visitors collected in slot order

    auto split = [&](const Path& p) {
        // Edge position after which the path sits at 'best'.
        size_t cut = 0;
        int at = net.source_vertex(p.source_index);
        while (at != best) {
            at = net.edges()[p.edges[cut]].to;
            ++cut;
        }
        return cut;
    };
    const size_t ci = split(f.paths[i]);
    const size_t cj = split(f.paths[j]);

    PathFamily g = f;
    auto& pi = g.paths[i];
    auto& pj = g.paths[j];
    std::vector<int> tail_i(f.paths[i].edges.begin() + ci, f.paths[i].edges.end());
    std::vector<int> tail_j(f.paths[j].edges.begin() + cj, f.paths[j].edges.end());
    pi.edges.assign(f.paths[i].edges.begin(), f.paths[i].edges.begin() + ci);
    pi.edges.insert(pi.edges.end(), tail_j.begin(), tail_j.end());
    pj.edges.assign(f.paths[j].edges.begin(), f.paths[j].edges.begin() + cj);
    pj.edges.insert(pj.edges.end(), tail_i.begin(), tail_i.end());
    std::swap(pi.sink_index, pj.sink_index);
    std::swap(g.sigma[i], g.sigma[j]);
    g.sign = -f.sign;
    return g;
}

bool verify_lindstrom(const PlanarNetwork& net, const IndexSet& I, const IndexSet& J) {
    return minor(net.weight_matrix(), I, J) == disjoint_sum(net, I, J);
}

} // namespace tnn
