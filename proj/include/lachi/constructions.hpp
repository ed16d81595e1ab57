#pragma once

#include "lachi/graph.hpp"
#include "lachi/labeling.hpp"

namespace lachi {

struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
};

/// Sp(2^[n]) with f(u v_i) = i and f(v_i w_i) = 2n + 1 - i. Core color
/// n(n+1)/2, middles 2n+1, leg ends 2n+1-i.
LabeledGraph label_spider_2n(std::size_t n);

/// K_{1,k} with edge j labeled j + 1.
LabeledGraph label_star(std::size_t k);

struct Augmentation {
  Graph graph;
  EdgeLabeling labeling;
  /// Class members in the order used for the index a (ascending vertex).
  VertexSet augmented;
  /// Checked on the output, never assumed.
  bool local_antimagic = false;
};

/// Throws ParityViolation unless s >= 1 for n_i = 1 and s >= 2 even for n_i >= 2.
void check_augment_parity(std::size_t class_size, std::size_t s);

/// Attaches s pendants to each member v_a of class i of extract_profile(g, f)
/// and labels the k-th pendant at v_a with e + (k-1) n_i + a for odd k and
/// e + k n_i + 1 - a for even k. Old edges keep their labels.
Augmentation augment_and_label(const Graph& g, const EdgeLabeling& f, std::size_t class_index,
                               std::size_t s);

/// The color an augmented vertex a (1-based) of class color c_i receives.
Color augmented_vertex_color(Color class_color, std::size_t e, std::size_t class_size,
                             std::size_t a, std::size_t s);

/// K_{1,k} with the identity labeling, then s pendants on the leaf whose
/// color is leaf_class - 1, labeled k+1..k+s. Throws NotApplicable when the
/// new color i - 1 + ks + s(s+1)/2 repeats a color already in use.
LabeledGraph augment_star_leaf(std::size_t k, std::size_t leaf_class, std::size_t s);

}  // namespace lachi
