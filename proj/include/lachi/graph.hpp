#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lachi {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Ascending list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph with dense 0-based vertices and stable edge
/// indices: edge j is always the j-th pair given at construction.
///
/// Immutable once built. Connectivity is not enforced here; operations that
/// need a labelable graph call require_labelable().
class Graph {
 public:
  /// Throws LoopEdge / DuplicateEdge; vertex_count may exceed the largest
  /// endpoint only through this constructor.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::string name = {});

  /// vertex_count = 1 + largest index.
  static Graph from_edge_list(const std::vector<std::pair<Vertex, Vertex>>& pairs,
                              std::string name = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex j) const { return edges_.at(j); }

  /// Indices of edges incident to v, ascending.
  std::span<const EdgeIndex> incident_edges(Vertex v) const { return incidence_.at(v); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool is_pendant_edge(EdgeIndex j) const;

  bool is_connected() const;

  /// Throws Disconnected or TooSmall (order < 3).
  void require_labelable() const;

  /// Human-readable family tag set by the builders, e.g. "W_4 (hub = vertex 0)".
  const std::string& name() const { return name_; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::string name_;
};

// Family builders. Canonical numbering: hub / core / center is vertex 0.

/// P_n: vertices 0..n-1 in order, edge j = (j, j+1).
Graph build_path(std::size_t n);
/// C_n: edge j = (j, j+1 mod n).
Graph build_cycle(std::size_t n);
/// K_{1,k}: center 0, edge j = (0, j+1).
Graph build_star(std::size_t k);
/// W_n: hub 0, rim 1..n; spokes (0, i) first, then rim edges (i, i+1), (n, 1).
Graph build_wheel(std::size_t n);

struct SpiderLeg {
  std::size_t length;
  std::size_t multiplicity;
};

/// Sp(a_1^[n_1], ...): core 0; legs are laid out one after another, each leg
/// numbered outward from the core, and its edges appended in that order.
Graph build_spider(const std::vector<SpiderLeg>& legs);

/// Degree-1 vertices.
VertexSet pendant_vertices(const Graph& g);

/// G(targets, s): attach s new pendant vertices to every target. New edges
/// are appended after the original ones, target-major (ascending target
/// vertex), then k = 1..s; new vertices are numbered in the same order.
Graph add_pendant_edges(const Graph& g, const VertexSet& targets, std::size_t s);

/// Exact chromatic number by backtracking. Throws TooLarge above vertex_limit.
std::size_t chromatic_number_exact(const Graph& g, std::size_t vertex_limit = 16);

}  // namespace lachi
