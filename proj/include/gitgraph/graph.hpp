#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gitgraph {

// A feature branch: starts at main-branch position `start`, merges into
// position `end` (both 1-indexed), and carries `length` white vertices.
struct Branch {
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t length = 0;

  friend bool operator==(const Branch&, const Branch&) = default;
};

// A Git feature-branch graph: a directed path of `main_length` black
// vertices plus feature branches. At most one branch may end on any main
// vertex; position 1 can never be an end.
struct GitGraph {
  std::int64_t main_length = 0;  // k, number of black vertices
  std::vector<Branch> branches;

  std::int64_t size() const;        // n = k + total white vertices
  std::int64_t black_count() const { return main_length; }
  std::int64_t free_count() const;  // black vertices without incoming branch

  friend bool operator==(const GitGraph&, const GitGraph&) = default;
};

// nullopt means the graph is valid; otherwise the first violated invariant.
std::optional<std::string> validate(const GitGraph& g);

// Injective byte encoding of a valid graph: k followed by the
// (end, start, length) triples sorted by end. Usable as a map key.
std::string canonical_encode(const GitGraph& g);

// Labeled cycles of black vertices carrying white chains. Labels across all
// cycles form a permutation of 1..k; the chain length is 0 exactly on the
// maximum label of each cycle, and >= 1 everywhere else.
struct Cyclarium {
  struct Vertex {
    std::int64_t label = 0;
    std::int64_t chain = 0;
  };
  std::vector<std::vector<Vertex>> cycles;

  std::int64_t label_count() const;  // k
  std::int64_t size() const;         // n = k + total chain length
  std::int64_t cycle_count() const { return static_cast<std::int64_t>(cycles.size()); }
};

std::optional<std::string> validate(const Cyclarium& c);

// Injective encoding: each cycle rotated to start at its maximum label,
// cycles sorted by maximum label.
std::string canonical_encode(const Cyclarium& c);

// The cyclarium -> Git graph bijection. Each cycle is broken just before its
// maximum label so the resulting path starts at the maximum; paths are
// concatenated in increasing order of their maxima, giving main positions
// 1..k carrying the original labels l_1..l_k; every chain at position j
// becomes a branch ending at j and starting at r = |{p <= j : l_p <= l_j}|.
// Preserves n and k; free vertices of the output = cycles of the input.
GitGraph cyclarium_to_git_graph(const Cyclarium& c);

}  // namespace gitgraph
