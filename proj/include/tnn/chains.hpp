#ifndef TNN_CHAINS_HPP
#define TNN_CHAINS_HPP

#include <string>
#include <vector>

#include "tnn/lindstrom.hpp"
#include "tnn/network.hpp"

namespace tnn {

enum class Color { Blue, Red };

/// A maximal run of subnetwork edges with no branching in between; the unit
/// the chain machinery works on. A dual edge is carried by both families and
/// yields two color instances.
struct MergedEdge {
    int from = -1; // network vertex indices
    int to = -1;
    std::vector<int> underlying; // network edge indices, in path order
    bool dual = false;
};

struct ColorInstance {
    int edge = -1; // index into ColoredNetwork::merged_edges()
    Color color = Color::Blue;
    int path_index = 0; // 1-based position within its color's family
};

struct ChainEndpoint {
    int vertex = -1;
    bool at_source = false; // out side of a source vs in side of a sink
    Color color = Color::Blue;
};

struct Chain {
    int id = 0;
    std::vector<int> instances; // indices into ColoredNetwork::instances()
    bool even = false;
    bool closed_tour = false;
    std::vector<ChainEndpoint> endpoints; // empty for closed tours, else two
};

class FamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two-colored subnetwork built from a blue and a red vertex-disjoint
/// path family: union of the families, dual edges with multiplicity two,
/// pass-through vertices merged away. Immutable; recoloring returns a new
/// value.
class ColoredNetwork {
public:
    static ColoredNetwork build(const PlanarNetwork& net, const std::vector<Path>& blue,
                                const std::vector<Path>& red);

    const PlanarNetwork& network() const { return *net_; }
    const std::vector<MergedEdge>& merged_edges() const { return merged_; }
    const std::vector<ColorInstance>& instances() const { return instances_; }

    /// Families extracted from the current coloring, ordered by source slot.
    const std::vector<Path>& blue_paths() const { return blue_paths_; }
    const std::vector<Path>& red_paths() const { return red_paths_; }

    bool strongly_connected(int i1, int i2) const;

    const std::vector<Chain>& chains() const { return chains_; }
    bool is_evenly_chained() const;

    ColoredNetwork recolor_chain(const Chain& chain) const;

    /// Constant on each chain under the crossing hypotheses; defined
    /// pointwise everywhere.
    long depth(int instance) const;

    /// Minimal recoloring that interchanges the two families' sinks while
    /// fixing their sources: recolors exactly the chains with an endpoint at
    /// a sink. Requires an evenly chained network with equal path counts.
    ColoredNetwork sink_swap() const;

    /// One line per instance: chain=<id> color=<blue|red> from=<v> to=<v> dual=<0|1>.
    std::string dump() const;

private:
    ColoredNetwork() = default;
    void extract_families(); // rebuild blue_paths_/red_paths_ and path indices
    void compute_chains();
    static int edges_midpoint_index(const MergedEdge& edge);

    const PlanarNetwork* net_ = nullptr;
    std::vector<MergedEdge> merged_;
    std::vector<ColorInstance> instances_;
    std::vector<Path> blue_paths_;
    std::vector<Path> red_paths_;
    std::vector<Chain> chains_;
};

struct CancellationReport {
    bool ok = true;
    long pairs_checked = 0;
    bool minor_subtraction_free = false;
    std::string message; // first failure description
};

/// Constructive check of the 2x2-minor cancellation for the (A,B)-minor
/// matrix window (C,D): pairs every vertex-disjoint family bundle behind
/// t_{c1,d2} with one behind t_{c2,d1}, applies the sink swap, and verifies
/// the image lands injectively in the t_{c1,d1} x t_{c2,d2} bundles with
/// equal weight. Cross-checks the symbolic 2x2 minor.
CancellationReport verify_2x2_cancellation(const PlanarNetwork& net, const OffsetSet& A,
                                           const OffsetSet& B, const std::pair<int, int>& C,
                                           const std::pair<int, int>& D);

} // namespace tnn

#endif
