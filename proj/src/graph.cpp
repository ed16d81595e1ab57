#include "lachi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "lachi/error.hpp"

namespace lachi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::EmptyTargetSet: return "EmptyTargetSet";
    case ErrorCode::LabelingMismatch: return "LabelingMismatch";
    case ErrorCode::NotLocalAntimagic: return "NotLocalAntimagic";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::ClassOutOfRange: return "ClassOutOfRange";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::string name)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      incidence_(vertex_count),
      name_(std::move(name)) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (EdgeIndex j = 0; j < edges_.size(); ++j) {
    const auto [u, v] = edges_[j];
    if (u >= vertex_count || v >= vertex_count)
      throw Error(ErrorCode::ParseError, "edge " + std::to_string(j) + " has an endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} repeated");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incidence_[u].push_back(j);
    incidence_[v].push_back(j);
  }
}

Graph Graph::from_edge_list(const std::vector<std::pair<Vertex, Vertex>>& pairs, std::string name) {
  if (pairs.empty()) throw Error(ErrorCode::DegenerateFamily, "empty edge list");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  Vertex top = 0;
  for (const auto& [u, v] : pairs) {
    edges.push_back({u, v});
    top = std::max({top, u, v});
  }
  return Graph(top + 1, std::move(edges), std::move(name));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& na = adjacency_.at(a);
  return std::find(na.begin(), na.end(), b) != na.end();
}

bool Graph::is_pendant_edge(EdgeIndex j) const {
  const Edge& e = edges_.at(j);
  return degree(e.u) == 1 || degree(e.v) == 1;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<bool> seen(vertex_count(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == vertex_count();
}

void Graph::require_labelable() const {
  if (vertex_count() < 3)
    throw Error(ErrorCode::TooSmall, "order " + std::to_string(vertex_count()) + " < 3");
  if (!is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

Graph build_path(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DegenerateFamily, "path needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), "P_" + std::to_string(n));
}

Graph build_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DegenerateFamily, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges), "C_" + std::to_string(n));
}

Graph build_star(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::DegenerateFamily, "star needs k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.push_back({0, i});
  return Graph(k + 1, std::move(edges), "K_{1," + std::to_string(k) + "} (center = vertex 0)");
}

Graph build_wheel(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DegenerateFamily, "wheel needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.push_back({0, i});
  for (Vertex i = 1; i <= n; ++i) edges.push_back({i, i == n ? 1 : i + 1});
  return Graph(n + 1, std::move(edges), "W_" + std::to_string(n) + " (hub = vertex 0)");
}

Graph build_spider(const std::vector<SpiderLeg>& legs) {
  std::size_t d = 0;
  std::string name = "Sp(";
  for (const auto& leg : legs) {
    if (leg.length == 0 || leg.multiplicity == 0)
      throw Error(ErrorCode::DegenerateFamily, "spider legs need length and multiplicity >= 1");
    d += leg.multiplicity;
    if (name.size() > 3) name += ",";
    name += std::to_string(leg.length) + "^[" + std::to_string(leg.multiplicity) + "]";
  }
  if (d < 3) throw Error(ErrorCode::DegenerateFamily, "spider needs at least 3 legs");
  name += ") (core = vertex 0)";

  std::vector<Edge> edges;
  Vertex next = 1;
  for (const auto& leg : legs) {
    for (std::size_t copy = 0; copy < leg.multiplicity; ++copy) {
      Vertex prev = 0;
      for (std::size_t step = 0; step < leg.length; ++step) {
        edges.push_back({prev, next});
        prev = next++;
      }
    }
  }
  return Graph(next, std::move(edges), std::move(name));
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

Graph add_pendant_edges(const Graph& g, const VertexSet& targets, std::size_t s) {
  if (targets.empty()) throw Error(ErrorCode::EmptyTargetSet, "no target vertices");
  if (s == 0) throw Error(ErrorCode::DegenerateFamily, "s must be >= 1");
  VertexSet sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= g.vertex_count())
    throw Error(ErrorCode::EmptyTargetSet, "target " + std::to_string(sorted.back()) + " not in graph");

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Vertex next = g.vertex_count();
  for (Vertex target : sorted)
    for (std::size_t k = 0; k < s; ++k) edges.push_back({target, next++});
  std::string name = g.name().empty() ? std::string("G") : g.name();
  name += " + " + std::to_string(s) + " pendants on " + std::to_string(sorted.size()) + " vertices";
  return Graph(next, std::move(edges), std::move(name));
}

namespace {

class ColouringSearch {
 public:
  explicit ColouringSearch(const Graph& g) : g_(g), colour_(g.vertex_count(), 0) {
    order_.resize(g.vertex_count());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::size_t greedy() {
    std::vector<std::size_t> c(g_.vertex_count(), 0);
    std::size_t used = 0;
    for (Vertex v : order_) {
      std::vector<bool> taken(used + 2, false);
      for (Vertex w : g_.neighbors(v))
        if (c[w] != 0) taken[c[w]] = true;
      std::size_t pick = 1;
      while (taken[pick]) ++pick;
      c[v] = pick;
      used = std::max(used, pick);
    }
    return used;
  }

  bool colourable(std::size_t k) {
    std::fill(colour_.begin(), colour_.end(), 0);
    return extend(0, 0, k);
  }

 private:
  bool extend(std::size_t depth, std::size_t used, std::size_t k) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    // Colours beyond used + 1 are symmetric to used + 1.
    for (std::size_t c = 1; c <= std::min(k, used + 1); ++c) {
      bool clash = false;
      for (Vertex w : g_.neighbors(v))
        if (colour_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour_[v] = c;
      if (extend(depth + 1, std::max(used, c), k)) return true;
      colour_[v] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> colour_;
};

}  // namespace

std::size_t chromatic_number_exact(const Graph& g, std::size_t vertex_limit) {
  if (g.vertex_count() > vertex_limit)
    throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) + " vertices exceeds limit " +
                                         std::to_string(vertex_limit));
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  ColouringSearch search(g);
  const std::size_t upper = search.greedy();
  for (std::size_t k = 2; k < upper; ++k)
    if (search.colourable(k)) return k;
  return upper;
}

}  // namespace lachi
