#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "redchev/projmap.hpp"

namespace redchev {

// Directed graph of a self-map on a finite set: exactly one outgoing edge
// per node.  Components are cycles with rooted trees hanging off them.
struct FunctionalGraph {
  std::vector<uint32_t> succ;
  std::vector<std::string> labels;  // point encodings when built from maps

  size_t size() const { return succ.size(); }
};

// One weakly connected component in canonical form: the cycle length and
// one AHU tree encoding per cycle node, in the lexicographically least
// rotation.
struct GraphComponent {
  uint64_t cycle_len = 0;
  std::vector<std::string> trees;

  auto operator<=>(const GraphComponent&) const = default;
};

// Relabeling-invariant encoding: two functional graphs are isomorphic iff
// their canonical forms are equal.
struct CanonicalForm {
  std::vector<GraphComponent> components;  // sorted

  bool operator==(const CanonicalForm&) const = default;
  std::string to_string() const;
};

// Builds the graph of f on the given domain; throws if f leaves the domain
// (e.g. a map into P^1 applied to the affine line only).
FunctionalGraph build_graph(const std::function<Point(const Point&)>& f,
                            const std::vector<Point>& domain);

CanonicalForm canonical_form(const FunctionalGraph& g);

bool iso_check(const FunctionalGraph& a, const FunctionalGraph& b);

// Graph of u -> u^n on the q+1 elements of mu_{q+1}.
FunctionalGraph power_map_graph(const Extension& E, uint64_t n);

// DOT digraph: one node per point, one edge per node.
std::string to_dot(const FunctionalGraph& g);

// "cycles: <len>x<count>, ...; tails: <depth>x<count>, ..." with histograms
// ascending; "tails: none" when the map is a permutation.
std::string cycle_stats(const FunctionalGraph& g);

// True iff every node lies on a cycle, i.e. the map is a bijection.
bool all_cycles(const FunctionalGraph& g);

}  // namespace redchev
