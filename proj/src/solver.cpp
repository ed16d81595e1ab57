#include "lachi/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <string>
#include <thread>

#include "lachi/error.hpp"

namespace lachi {

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Exhaustive: return "exhaustive";
    case SolveMethod::CertifiedByPendantBound: return "certified-by-pendant-bound";
  }
  return "unknown";
}

std::vector<EdgeIndex> search_edge_order(const Graph& g) {
  std::vector<EdgeIndex> order;
  if (g.edge_count() == 0) return order;
  std::vector<bool> queued(g.edge_count(), false);
  std::queue<EdgeIndex> frontier;
  // Restart from the next unseen edge so disconnected inputs still get a
  // complete order.
  for (EdgeIndex start = 0; start < g.edge_count(); ++start) {
    if (queued[start]) continue;
    queued[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
      const EdgeIndex j = frontier.front();
      frontier.pop();
      order.push_back(j);
      for (Vertex x : {g.edge(j).u, g.edge(j).v})
        for (EdgeIndex next : g.incident_edges(x))
          if (!queued[next]) {
            queued[next] = true;
            frontier.push(next);
          }
    }
  }
  return order;
}

std::size_t pendant_lower_bound(const Graph& g) {
  return std::max<std::size_t>(2, pendant_vertices(g).size() + 1);
}

namespace {

void check_size(const Graph& g, std::size_t edge_limit) {
  g.require_labelable();
  const std::size_t cap = std::min(edge_limit, kHardEdgeLimit);
  if (g.edge_count() > cap)
    throw Error(ErrorCode::TooLarge,
                std::to_string(g.edge_count()) + " edges exceeds limit " + std::to_string(cap));
}

/// Partial assignment of labels along a fixed edge order. A vertex is
/// complete once all its incident edges carry labels; only complete
/// vertices are compared or counted.
class PartialLabeling {
 public:
  PartialLabeling(const Graph& g, std::vector<EdgeIndex> order)
      : g_(g),
        order_(std::move(order)),
        labels_(g.edge_count(), 0),
        used_(g.edge_count() + 1, false),
        sum_(g.vertex_count(), 0),
        remaining_(g.vertex_count(), 0) {
    const std::size_t q = g.edge_count();
    refs_.assign(q * (q + 1) / 2 + 1, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) remaining_[v] = g.degree(v);
  }

  std::size_t edges() const { return order_.size(); }
  bool used(Label x) const { return used_[static_cast<std::size_t>(x)]; }
  std::size_t distinct() const { return distinct_; }
  std::uint32_t refs(Color c) const { return refs_[static_cast<std::size_t>(c)]; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Returns false when a newly completed vertex matches a complete neighbor.
  /// The placement is applied either way; always pair with remove().
  bool place(std::size_t depth, Label x) {
    const EdgeIndex j = order_[depth];
    const Edge& e = g_.edge(j);
    labels_[j] = x;
    used_[static_cast<std::size_t>(x)] = true;
    sum_[e.u] += x;
    sum_[e.v] += x;
    --remaining_[e.u];
    --remaining_[e.v];
    bool ok = true;
    for (Vertex v : {e.u, e.v}) {
      if (remaining_[v] != 0) continue;
      if (refs_[static_cast<std::size_t>(sum_[v])]++ == 0) ++distinct_;
    }
    for (Vertex v : {e.u, e.v}) {
      if (remaining_[v] != 0) continue;
      for (Vertex w : g_.neighbors(v))
        if (remaining_[w] == 0 && sum_[w] == sum_[v]) ok = false;
    }
    last_completed_ = {remaining_[e.u] == 0 ? e.u : kNone, remaining_[e.v] == 0 ? e.v : kNone};
    return ok;
  }

  /// Vertices completed by the most recent place().
  std::pair<Vertex, Vertex> last_completed() const { return last_completed_; }
  Color sum(Vertex v) const { return sum_[v]; }

  void remove(std::size_t depth) {
    const EdgeIndex j = order_[depth];
    const Edge& e = g_.edge(j);
    const Label x = labels_[j];
    for (Vertex v : {e.u, e.v}) {
      if (remaining_[v] != 0) continue;
      if (--refs_[static_cast<std::size_t>(sum_[v])] == 0) --distinct_;
    }
    ++remaining_[e.u];
    ++remaining_[e.v];
    sum_[e.u] -= x;
    sum_[e.v] -= x;
    used_[static_cast<std::size_t>(x)] = false;
    labels_[j] = 0;
  }

  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

 private:
  const Graph& g_;
  std::vector<EdgeIndex> order_;
  std::vector<Label> labels_;
  std::vector<bool> used_;
  std::vector<Color> sum_;
  std::vector<std::size_t> remaining_;
  std::vector<std::uint32_t> refs_;
  std::size_t distinct_ = 0;
  std::pair<Vertex, Vertex> last_completed_{kNone, kNone};
};

struct SharedBound {
  std::atomic<std::size_t> best;
  std::size_t lower;
  std::atomic<bool> done{false};

  void offer(std::size_t value) {
    std::size_t cur = best.load();
    while (value < cur && !best.compare_exchange_weak(cur, value)) {
    }
    if (value <= lower) done.store(true);
  }
};

class MinimumSearch {
 public:
  MinimumSearch(const Graph& g, const std::vector<EdgeIndex>& order, SharedBound& shared)
      : state_(g, order), shared_(shared) {}

  void run_shard(Label first) {
    if (state_.place(0, first) && state_.distinct() < bound()) descend(1);
    state_.remove(0);
  }

  std::size_t best() const { return best_; }
  const std::vector<Label>& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t bound() const { return std::min(best_, shared_.best.load(std::memory_order_relaxed)); }

  void descend(std::size_t depth) {
    ++nodes_;
    if (depth == state_.edges()) {
      best_ = state_.distinct();
      witness_ = state_.labels();
      shared_.offer(best_);
      return;
    }
    const auto q = static_cast<Label>(state_.edges());
    for (Label x = 1; x <= q; ++x) {
      if (state_.used(x)) continue;
      if (state_.place(depth, x) && state_.distinct() < bound()) descend(depth + 1);
      state_.remove(depth);
      if (shared_.done.load(std::memory_order_relaxed)) return;
    }
  }

  PartialLabeling state_;
  SharedBound& shared_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<Label> witness_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolverResult solve_chi_la(const Graph& g, const SolverOptions& options) {
  check_size(g, options.edge_limit);
  const std::size_t q = g.edge_count();
  const auto order = search_edge_order(g);

  SolverResult result;
  result.lower_bound =
      std::max(pendant_lower_bound(g), chromatic_number_exact(g, std::max<std::size_t>(16, g.vertex_count())));

  SharedBound shared{g.vertex_count() + 1, result.lower_bound};

  std::size_t jobs = options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  jobs = std::clamp<std::size_t>(jobs, 1, q);

  struct ShardOutcome {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Label> witness;
    std::uint64_t nodes = 0;
  };
  std::vector<ShardOutcome> outcomes(q);
  std::atomic<std::size_t> next_shard{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t shard = next_shard.fetch_add(1);
      if (shard >= q || shared.done.load()) return;
      MinimumSearch search(g, order, shared);
      search.run_shard(static_cast<Label>(shard + 1));
      outcomes[shard] = {search.best(), search.witness(), search.nodes()};
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::size_t best_shard = q;
  for (std::size_t shard = 0; shard < q; ++shard) {
    result.nodes_explored += outcomes[shard].nodes;
    if (outcomes[shard].witness.empty()) continue;
    if (best_shard == q || outcomes[shard].best < outcomes[best_shard].best) best_shard = shard;
  }
  // Every connected graph of order >= 3 has a local antimagic labeling, so
  // the full search always yields one.
  if (best_shard == q) throw std::logic_error("search finished without a local antimagic labeling");

  result.chi_la = outcomes[best_shard].best;
  result.witness = EdgeLabeling(outcomes[best_shard].witness);
  result.exhaustive = true;
  result.method = SolveMethod::Exhaustive;
  return result;
}

namespace {

class TargetSearch {
 public:
  TargetSearch(const Graph& g, std::vector<std::uint32_t> wanted)
      : state_(g, search_edge_order(g)), wanted_(std::move(wanted)) {}

  bool descend(std::size_t depth) {
    if (depth == state_.edges()) return true;
    const auto q = static_cast<Label>(state_.edges());
    for (Label x = 1; x <= q; ++x) {
      if (state_.used(x)) continue;
      if (state_.place(depth, x) && within_target() && descend(depth + 1)) return true;
      state_.remove(depth);
    }
    return false;
  }

  const std::vector<Label>& labels() const { return state_.labels(); }

 private:
  bool within_target() const {
    const auto [a, b] = state_.last_completed();
    for (Vertex v : {a, b}) {
      if (v == PartialLabeling::kNone) continue;
      const auto c = static_cast<std::size_t>(state_.sum(v));
      if (c >= wanted_.size() || state_.refs(state_.sum(v)) > wanted_[c]) return false;
    }
    return true;
  }

  PartialLabeling state_;
  std::vector<std::uint32_t> wanted_;
};

}  // namespace

std::optional<EdgeLabeling> find_labeling_with_profile(const Graph& g,
                                                       const std::vector<ColorTarget>& target,
                                                       std::size_t edge_limit) {
  check_size(g, edge_limit);
  const auto q = static_cast<Color>(g.edge_count());
  const std::size_t max_color = g.edge_count() * (g.edge_count() + 1) / 2;
  std::vector<std::uint32_t> wanted(max_color + 1, 0);
  Color weighted = 0;
  std::size_t vertices = 0;
  for (const auto& [color, mult] : target) {
    if (color < 1 || static_cast<std::size_t>(color) > max_color) return std::nullopt;
    wanted[static_cast<std::size_t>(color)] += static_cast<std::uint32_t>(mult);
    weighted += color * static_cast<Color>(mult);
    vertices += mult;
  }
  if (weighted != q * (q + 1) || vertices != g.vertex_count()) return std::nullopt;

  TargetSearch search(g, std::move(wanted));
  if (!search.descend(0)) return std::nullopt;
  return EdgeLabeling(search.labels());
}

std::optional<SolverResult> certify(const Graph& g, const EdgeLabeling& f) {
  if (!is_local_antimagic(g, f))
    throw Error(ErrorCode::NotLocalAntimagic, "cannot certify a labeling that is not local antimagic");
  const std::size_t k = pendant_vertices(g).size();
  if (color_count(g, f) != k + 1) return std::nullopt;
  SolverResult result;
  result.chi_la = k + 1;
  result.witness = f;
  result.exhaustive = false;
  result.method = SolveMethod::CertifiedByPendantBound;
  result.lower_bound = k + 1;
  return result;
}

}  // namespace lachi
