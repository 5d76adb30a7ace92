#ifndef TNN_NETWORK_HPP
#define TNN_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/polynomial.hpp"
#include "tnn/rational.hpp"

namespace tnn {

struct Vertex {
    std::string id;
    Rational x;
    Rational y;
};

struct Edge {
    int from; // vertex indices into PlanarNetwork::vertices
    int to;
    Polynomial weight; // single symbol or nonnegative rational constant
};

struct Violation {
    std::string rule;    // short tag, e.g. "labeling order"
    std::string detail;  // offending element
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// An edge sequence from a source to a sink.
struct Path {
    int source_index = 0; // 1-based source slot
    int sink_index = 0;   // 1-based sink slot
    std::vector<int> edges; // indices into PlanarNetwork::edges, in order

    bool operator==(const Path& other) const {
        return source_index == other.source_index && sink_index == other.sink_index &&
               edges == other.edges;
    }
};

/// Embedded left-to-right DAG with n ordered sources and n ordered sinks.
/// Immutable after construction; build via parse_network or the Builder.
class PlanarNetwork {
public:
    int order() const { return order_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& sources() const { return sources_; } // vertex indices
    const std::vector<int>& sinks() const { return sinks_; }

    int source_vertex(int k) const { return sources_.at(k - 1); } // 1-based
    int sink_vertex(int k) const { return sinks_.at(k - 1); }
    const Vertex& vertex(int v) const { return vertices_.at(v); }

    bool is_source(int v) const;
    bool is_sink(int v) const;
    /// 1-based slot of a source/sink vertex, 0 if none.
    int source_slot(int v) const;
    int sink_slot(int v) const;

    std::vector<int> out_edges(int v) const;
    std::vector<int> in_edges(int v) const;

    ValidationReport validate() const;

    /// All directed paths from source slot i to sink slot j, each exactly
    /// once, lexicographic by edge insertion order.
    std::vector<Path> enumerate_paths(int i, int j) const;

    Polynomial path_weight(const Path& p) const;

    /// Entry (i,j) = sum of path weights s_i -> t_j, by one left-to-right
    /// DP pass per source. Throws std::runtime_error on an invalid network.
    PolyMatrix weight_matrix() const;

    /// Reference implementation: brute-force enumeration per entry.
    PolyMatrix weight_matrix_by_enumeration() const;

    struct Builder {
        int order = 0;
        std::vector<Vertex> vertices;
        struct RawEdge { std::string from, to; Polynomial weight; };
        std::vector<RawEdge> edges;
        std::vector<std::pair<int, std::string>> sources; // (slot, vertex id)
        std::vector<std::pair<int, std::string>> sinks;

        /// Assembles the network; returns an error message on structural
        /// problems (unknown ids, duplicate slots). Geometric and labeling
        /// invariants are reported by validate(), not here.
        std::optional<std::string> build(PlanarNetwork& out) const;
    };

private:
    int order_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
    std::map<std::string, int> index_by_id_;
};

struct ParseResult {
    std::optional<PlanarNetwork> network;
    std::string error; // "line N: reason" when network is empty
};

/// Line-oriented network file format; '#' comments, blank lines ignored.
ParseResult parse_network(const std::string& text);

/// Renders a network in the file format accepted by parse_network.
std::string serialize_network(const PlanarNetwork& net);

} // namespace tnn

#endif
