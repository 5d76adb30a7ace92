#ifndef TNN_LINDSTROM_HPP
#define TNN_LINDSTROM_HPP

#include <vector>

#include "tnn/network.hpp"

namespace tnn {

enum class FamilyClass { P0, Pplus, Pminus };

/// An ordered tuple of paths, one per selected source; path k runs from the
/// k-th source of the selection to the sigma(k)-th sink.
struct PathFamily {
    std::vector<Path> paths;
    std::vector<int> sigma; // sigma[k] = 1-based sink slot of the k-th path
    int sign = 1;           // sgn(sigma)

    bool operator==(const PathFamily& other) const {
        return paths == other.paths && sigma == other.sigma;
    }
};

int permutation_sign(const std::vector<int>& sigma);

/// All path families from sources I to sinks J over every permutation,
/// ordered by (sigma in one-line lexicographic order, per-path enumeration
/// index).
std::vector<PathFamily> enumerate_families(const PlanarNetwork& net, const IndexSet& I,
                                           const IndexSet& J);

bool is_vertex_disjoint(const PlanarNetwork& net, const PathFamily& f);

FamilyClass classify(const PlanarNetwork& net, const PathFamily& f);

Polynomial family_weight(const PlanarNetwork& net, const PathFamily& f);

/// Sum of family weights over the vertex-disjoint families (class P0).
Polynomial disjoint_sum(const PlanarNetwork& net, const IndexSet& I, const IndexSet& J);

/// The sign-reversing, weight-preserving involution of the Lindstrom
/// cancellation: swap the tails of the two least-index paths through the
/// rightmost intersection vertex. Throws std::logic_error on a
/// vertex-disjoint family.
PathFamily tail_swap(const PlanarNetwork& net, const PathFamily& f);

/// minor(weight_matrix, I, J) == disjoint_sum(net, I, J).
bool verify_lindstrom(const PlanarNetwork& net, const IndexSet& I, const IndexSet& J);

} // namespace tnn

#endif
