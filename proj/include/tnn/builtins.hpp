#ifndef TNN_BUILTINS_HPP
#define TNN_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

namespace tnn {

/// Network file text for a named built-in, or nullopt for an unknown name.
/// Names: figure3, order6-unit, order6-symbolic, parallel-edges,
/// crossing-pair, single-edge, and sequence-<m>x<n> (symbolic sequence
/// network with m columns, order n).
std::optional<std::string> builtin_network_text(const std::string& name);

std::vector<std::string> builtin_network_names();

} // namespace tnn

#endif
