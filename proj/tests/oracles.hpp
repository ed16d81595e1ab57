#pragma once

// Test-only oracles. They enumerate every bijection with std::next_permutation
// and recompute vertex sums from the raw edge list, sharing no code with the
// library's search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::vector<std::int64_t> sums(std::size_t n, const Pairs& edges, const std::vector<std::int64_t>& labels) {
  std::vector<std::int64_t> s(n, 0);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    s[edges[j].first] += labels[j];
    s[edges[j].second] += labels[j];
  }
  return s;
}

inline bool antimagic(const Pairs& edges, const std::vector<std::int64_t>& s) {
  for (const auto& [u, v] : edges)
    if (s[u] == s[v]) return false;
  return true;
}

inline std::size_t distinct(std::vector<std::int64_t> s) {
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

/// Calls visit(labels, sums) for every bijection onto 1..q.
inline void for_each_labeling(
    std::size_t n, const Pairs& edges,
    const std::function<void(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> labels(edges.size());
  std::iota(labels.begin(), labels.end(), 1);
  do {
    visit(labels, sums(n, edges, labels));
  } while (std::next_permutation(labels.begin(), labels.end()));
}

/// Minimum color count over all local antimagic bijections.
inline std::size_t chi_la(std::size_t n, const Pairs& edges) {
  std::size_t best = n + 1;
  for_each_labeling(n, edges, [&](const auto&, const auto& s) {
    if (antimagic(edges, s)) best = std::min(best, distinct(s));
  });
  return best;
}

/// Whether some local antimagic labeling has exactly the color multiset.
inline bool profile_exists(std::size_t n, const Pairs& edges, std::vector<std::int64_t> target) {
  std::sort(target.begin(), target.end());
  bool found = false;
  for_each_labeling(n, edges, [&](const auto&, const auto& s) {
    if (found || !antimagic(edges, s)) return;
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == target) found = true;
  });
  return found;
}

/// Brute-force proper colouring count check: smallest k admitting a proper
/// k-colouring, by trying all k^n assignments.
inline std::size_t chromatic(std::size_t n, const Pairs& edges) {
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> c(n, 0);
    for (;;) {
      bool ok = true;
      for (const auto& [u, v] : edges)
        if (c[u] == c[v]) ok = false;
      if (ok) return k;
      std::size_t pos = 0;
      while (pos < n && ++c[pos] == k) c[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

/// Random connected simple graph: random spanning tree on n vertices plus
/// extra distinct edges until `edges` total.
inline Pairs random_connected(std::mt19937& rng, std::size_t n, std::size_t edges) {
  Pairs out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    out.emplace_back(u, v);
    seen.emplace(u, v);
  }
  const std::size_t max_edges = n * (n - 1) / 2;
  edges = std::min(edges, max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (out.size() < edges) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (seen.emplace(a, b).second) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace oracle
