#include "tnn/builtins.hpp"

#include <cctype>

#include "tnn/logconcavity.hpp"
#include "tnn/network.hpp"

namespace tnn {

namespace {

// Realization of the order-3 network behind the 3x3 weight matrix
// [[ad, aef, aeg], [bd, bef, beg], [0, cf, cg+h]].
const char* kFigure3 = R"(order 3
vertex s1 0 12
vertex s2 0 11
vertex s3 0 10
vertex p 3 23/2
vertex q 5 21/2
vertex t1 10 12
vertex t2 10 11
vertex t3 10 10
source 1 s1
source 2 s2
source 3 s3
sink 1 t1
sink 2 t2
sink 3 t3
edge s1 p a
edge s2 p b
edge s3 q c
edge p t1 d
edge p q e
edge q t2 f
edge q t3 g
edge s3 t3 h
)";

// Order-6 network whose unit-weight matrix is block diagonal with blocks
// [[1,1,1],[1,1,1],[0,1,1]] and [[1,1,0],[1,1,1],[1,1,1]].
const char* kOrder6Body = R"(order 6
vertex s1 0 12
vertex s2 0 11
vertex s3 0 10
vertex p 3 23/2
vertex q 5 21/2
vertex t1 14 12
vertex t2 14 11
vertex t3 14 10
vertex s4 0 6
vertex s5 0 5
vertex s6 0 4
vertex p2 4 9/2
vertex q2 6 11/2
vertex t4 14 6
vertex t5 14 5
vertex t6 14 4
source 1 s1
source 2 s2
source 3 s3
source 4 s4
source 5 s5
source 6 s6
sink 1 t1
sink 2 t2
sink 3 t3
sink 4 t4
sink 5 t5
sink 6 t6
)";

const char* kOrder6UnitEdges = R"(edge s1 p 1
edge s2 p 1
edge s3 q 1
edge p t1 1
edge p q 1
edge q t2 1
edge q t3 1
edge s4 q2 1
edge s5 p2 1
edge s6 p2 1
edge p2 q2 1
edge q2 t4 1
edge q2 t5 1
edge p2 t6 1
)";

const char* kOrder6SymbolicEdges = R"(edge s1 p u1
edge s2 p u2
edge s3 q u3
edge p t1 u4
edge p q u5
edge q t2 u6
edge q t3 u7
edge s4 q2 v1
edge s5 p2 v2
edge s6 p2 v3
edge p2 q2 v4
edge q2 t4 v5
edge q2 t5 v6
edge p2 t6 v7
)";

const char* kParallelEdges = R"(order 3
vertex s1 0 3
vertex s2 0 2
vertex s3 0 1
vertex t1 10 3
vertex t2 10 2
vertex t3 10 1
source 1 s1
source 2 s2
source 3 s3
sink 1 t1
sink 2 t2
sink 3 t3
edge s1 t1 x1
edge s2 t2 x2
edge s3 t3 x3
)";

// Order-2 bowtie: the two crossing paths s1->m->t2 and s2->m->t1 give the
// minimal crossing two-family configuration.
const char* kCrossingPair = R"(order 2
vertex s1 0 2
vertex s2 0 1
vertex m 2 3/2
vertex t1 4 2
vertex t2 4 1
source 1 s1
source 2 s2
sink 1 t1
sink 2 t2
edge s1 m u1
edge s2 m u2
edge m t1 w1
edge m t2 w2
)";

const char* kSingleEdge = R"(order 1
vertex s1 0 0
vertex t1 1 0
source 1 s1
sink 1 t1
edge s1 t1 x
)";

std::optional<std::string> sequence_builtin(const std::string& name) {
    // sequence-<m>x<n>
    const std::string prefix = "sequence-";
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    auto x = rest.find('x');
    if (x == std::string::npos) return std::nullopt;
    std::string ms = rest.substr(0, x), ns = rest.substr(x + 1);
    if (ms.empty() || ns.empty()) return std::nullopt;
    for (char c : ms + ns)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    int m = std::stoi(ms), n = std::stoi(ns);
    if (n < 1 || m < 0 || m > 12 || n > 24) return std::nullopt;
    return serialize_network(sequence_network_symbolic(m, n));
}

} // namespace

std::optional<std::string> builtin_network_text(const std::string& name) {
    if (name == "figure3") return std::string(kFigure3);
    if (name == "order6-unit") return std::string(kOrder6Body) + kOrder6UnitEdges;
    if (name == "order6-symbolic") return std::string(kOrder6Body) + kOrder6SymbolicEdges;
    if (name == "parallel-edges") return std::string(kParallelEdges);
    if (name == "crossing-pair") return std::string(kCrossingPair);
    if (name == "single-edge") return std::string(kSingleEdge);
    return sequence_builtin(name);
}

std::vector<std::string> builtin_network_names() {
    return {"figure3",      "order6-unit",   "order6-symbolic", "parallel-edges",
            "crossing-pair", "single-edge",  "sequence-<m>x<n>"};
}

} // namespace tnn
