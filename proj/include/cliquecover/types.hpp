#ifndef CLIQUECOVER_TYPES_HPP
#define CLIQUECOVER_TYPES_HPP

#include <cstdint>
#include <vector>

namespace cliquecover {

using Vertex = int;
using EdgeId = int;

// A clique is kept as a sorted vector of vertex ids.
using Clique = std::vector<Vertex>;
using Cover = std::vector<Clique>;

struct Edge {
    Vertex u; // u < v
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

} // namespace cliquecover

#endif
