#include "hatlab/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "hatlab/error.hpp"

namespace hatlab {

namespace {

// Off-diagonal pairs in row-major order.
std::vector<std::pair<Prisoner, Prisoner>> pairs_of(std::size_t n) {
  std::vector<std::pair<Prisoner, Prisoner>> out;
  for (Prisoner i = 0; i < n; ++i) {
    for (Prisoner j = 0; j < n; ++j) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

VisibilityGraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::vector<Prisoner>> seen(n);
  const auto pairs = pairs_of(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1) seen[pairs[k].first].push_back(pairs[k].second);
  }
  return VisibilityGraph::lists(std::move(seen));
}

std::uint64_t digraph_mask(const VisibilityGraph& v) {
  if (!v.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "digraph masks need finitely many prisoners");
  const auto pairs = pairs_of(v.size());
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (v.sees(pairs[k].first, pairs[k].second)) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

bool has_directed_cycle(const VisibilityGraph& v) {
  const std::size_t n = v.size();
  // Kahn: repeatedly remove nodes nobody remaining points to
  std::vector<std::size_t> indegree(n, 0);
  for (Prisoner a = 0; a < n; ++a) {
    for (Prisoner b : v.seen_by(a).listed()) ++indegree[b];
  }
  std::vector<Prisoner> ready;
  for (Prisoner a = 0; a < n; ++a) {
    if (indegree[a] == 0) ready.push_back(a);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Prisoner a = ready.back();
    ready.pop_back();
    ++removed;
    for (Prisoner b : v.seen_by(a).listed()) {
      if (--indegree[b] == 0) ready.push_back(b);
    }
  }
  return removed < n;
}

bool is_weakly_connected(const VisibilityGraph& v) {
  const std::size_t n = v.size();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Prisoner a = 0; a < n; ++a) {
    for (Prisoner b : v.seen_by(a).listed()) parent[find(a)] = find(b);
  }
  for (Prisoner a = 1; a < n; ++a) {
    if (find(a) != find(0)) return false;
  }
  return true;
}

std::vector<VisibilityGraph> enumerate_digraphs(std::size_t n, DigraphMode mode) {
  if (n > 5) fail(ErrorCode::kTooManyNodes, std::to_string(n) + " nodes (at most 5)");
  const std::size_t bits = n * (n == 0 ? 0 : n - 1);
  std::vector<VisibilityGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    VisibilityGraph v = digraph_from_mask(n, mask);
    if (mode == DigraphMode::kWeaklyConnected && !is_weakly_connected(v)) continue;
    out.push_back(std::move(v));
  }
  return out;
}

CanonicalKey canonical_key(const std::vector<Inning>& innings, const VisibilityGraph& v) {
  const std::size_t n = v.size();
  if (innings.size() != n) fail(ErrorCode::kInvalidArgument, "inning list and graph sizes differ");
  std::vector<Prisoner> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalKey> best;
  do {
    // new label i carries old prisoner perm[i]
    std::vector<Prisoner> relabel(n);
    for (std::size_t i = 0; i < n; ++i) relabel[perm[i]] = i;
    std::vector<std::vector<Prisoner>> seen(n);
    CanonicalKey key;
    key.innings.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      key.innings[i] = innings[perm[i]];
      for (Prisoner b : v.seen_by(perm[i]).listed()) seen[i].push_back(relabel[b]);
      std::sort(seen[i].begin(), seen[i].end());
    }
    key.mask = digraph_mask(VisibilityGraph::lists(std::move(seen)));
    if (!best || key < *best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace hatlab
