#pragma once

#include <string>

#include "treeramsey/graph.hpp"

namespace treeramsey {

// Standard graph6 text encoding of an undirected graph. The order is written
// first (one byte for orders up to 62, '~'-prefixed long forms above that),
// followed by the upper triangle of the adjacency matrix in column order,
// packed six bits per printable byte. Encoding and decoding round-trip
// byte-exactly for every supported graph.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace treeramsey
