#include "lachi/constructions.hpp"

#include <string>

#include "lachi/error.hpp"

namespace lachi {

LabeledGraph label_spider_2n(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::DegenerateFamily, "Sp(2^[n]) needs n >= 3");
  Graph g = build_spider({{2, n}});
  // Leg i occupies edges 2(i-1) (core side) and 2(i-1)+1 (pendant side).
  std::vector<Label> labels(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels[2 * (i - 1)] = static_cast<Label>(i);
    labels[2 * (i - 1) + 1] = static_cast<Label>(2 * n + 1 - i);
  }
  return {std::move(g), EdgeLabeling(std::move(labels))};
}

LabeledGraph label_star(std::size_t k) {
  Graph g = build_star(k);
  std::vector<Label> labels(k);
  for (std::size_t j = 0; j < k; ++j) labels[j] = static_cast<Label>(j + 1);
  return {std::move(g), EdgeLabeling(std::move(labels))};
}

void check_augment_parity(std::size_t class_size, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::ParityViolation, "s must be >= 1");
  if (class_size >= 2 && s % 2 != 0)
    throw Error(ErrorCode::ParityViolation,
                "class of size " + std::to_string(class_size) + " needs even s >= 2, got " + std::to_string(s));
}

Color augmented_vertex_color(Color class_color, std::size_t e, std::size_t class_size,
                             std::size_t a, std::size_t s) {
  const auto E = static_cast<Color>(e);
  const auto S = static_cast<Color>(s);
  const auto N = static_cast<Color>(class_size);
  if (s % 2 == 0) return class_color + E * S + (S / 2) * (S * N + 1);
  return class_color + E * S + S * (S + 1) / 2 + static_cast<Color>(a) - 1;
}

Augmentation augment_and_label(const Graph& g, const EdgeLabeling& f, std::size_t class_index,
                               std::size_t s) {
  const ColorProfile profile = extract_profile(g, f);
  const ColorClass& cls = profile.cls(class_index);
  check_augment_parity(cls.size, s);

  Augmentation out{add_pendant_edges(g, cls.members, s), EdgeLabeling{}, cls.members, false};
  const std::size_t e = g.edge_count();
  const std::size_t n = cls.size;
  std::vector<Label> labels(f.labels().begin(), f.labels().end());
  labels.reserve(e + s * n);
  // add_pendant_edges appends member-major, then k = 1..s.
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t k = 1; k <= s; ++k) {
      const std::size_t label = k % 2 == 1 ? e + (k - 1) * n + a : e + k * n + 1 - a;
      labels.push_back(static_cast<Label>(label));
    }
  }
  out.labeling = EdgeLabeling(std::move(labels));

  const auto colors = induced_colors(out.graph, out.labeling);
  for (std::size_t a = 1; a <= n; ++a) {
    const Color expected = augmented_vertex_color(cls.color, e, n, a, s);
    if (colors.colors[cls.members[a - 1]] != expected)
      throw std::logic_error("augmented color mismatch at member " + std::to_string(a));
  }
  out.local_antimagic = is_local_antimagic(out.graph, out.labeling);
  return out;
}

LabeledGraph augment_star_leaf(std::size_t k, std::size_t leaf_class, std::size_t s) {
  if (k < 2) throw Error(ErrorCode::DegenerateFamily, "star needs k >= 2");
  if (leaf_class < 2 || leaf_class > k + 1)
    throw Error(ErrorCode::ClassOutOfRange,
                "leaf class " + std::to_string(leaf_class) + " not in 2.." + std::to_string(k + 1));
  if (s == 0) throw Error(ErrorCode::DegenerateFamily, "s must be >= 1");

  const auto K = static_cast<Color>(k);
  const auto S = static_cast<Color>(s);
  const auto old_color = static_cast<Color>(leaf_class - 1);
  const Color new_color = old_color + K * S + S * (S + 1) / 2;
  const bool collides_low = new_color >= 1 && new_color <= K + S && new_color != old_color;
  if (collides_low || new_color == K * (K + 1) / 2)
    throw Error(ErrorCode::NotApplicable,
                "augmented leaf color " + std::to_string(new_color) + " repeats an existing color");

  // With the identity labeling the leaf colored i-1 is vertex i-1.
  const auto leaf = static_cast<Vertex>(leaf_class - 1);
  Graph g = add_pendant_edges(build_star(k), {leaf}, s);
  std::vector<Label> labels(k + s);
  for (std::size_t j = 0; j < k + s; ++j) labels[j] = static_cast<Label>(j + 1);
  LabeledGraph out{std::move(g), EdgeLabeling(std::move(labels))};
  if (!is_local_antimagic(out.graph, out.labeling))
    throw Error(ErrorCode::NotLocalAntimagic, "augmented star labeling is not local antimagic");
  return out;
}

}  // namespace lachi
