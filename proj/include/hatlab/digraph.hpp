#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hatlab/game.hpp"

namespace hatlab {

enum class DigraphMode { kAll, kWeaklyConnected };

// All loop-free digraphs on n nodes in increasing order of adjacency
// bitmask; bit k stands for the k-th off-diagonal pair (i, j) in row-major
// order.
std::vector<VisibilityGraph> enumerate_digraphs(std::size_t n, DigraphMode mode = DigraphMode::kAll);

VisibilityGraph digraph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t digraph_mask(const VisibilityGraph& v);

bool has_directed_cycle(const VisibilityGraph& v);
bool is_weakly_connected(const VisibilityGraph& v);

// Smallest (innings, adjacency mask) over all relabelings of the prisoners.
// Two finite games are isomorphic iff their canonical keys agree.
struct CanonicalKey {
  std::vector<Inning> innings;
  std::uint64_t mask = 0;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const std::vector<Inning>& innings, const VisibilityGraph& v);

}  // namespace hatlab
