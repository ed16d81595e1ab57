#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lachi/graph.hpp"

namespace lachi {

using Label = std::int64_t;
using Color = std::int64_t;

/// Bijection from edges {0..q-1} onto {1..q}. Construction rejects anything
/// that is not a permutation of 1..q with LabelingMismatch.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  Label operator[](EdgeIndex j) const { return labels_[j]; }
  std::span<const Label> labels() const { return labels_; }
  /// Edge carrying label q.
  EdgeIndex max_label_edge() const;

  bool operator==(const EdgeLabeling&) const = default;

 private:
  std::vector<Label> labels_;
};

/// colors[v] = f+(v), the sum of labels on edges incident to v.
struct InducedColoring {
  std::vector<Color> colors;

  /// Number of distinct values, c(f).
  std::size_t distinct() const;
};

InducedColoring induced_colors(const Graph& g, const EdgeLabeling& f);
bool is_local_antimagic(const Graph& g, const EdgeLabeling& f);
std::size_t color_count(const Graph& g, const EdgeLabeling& f);

struct ColorClass {
  Color color = 0;
  std::size_t size = 0;
  /// Number of pendant vertices in the class (never more than 1 for a real
  /// labeling: two pendants sharing a color would share a label).
  std::size_t pendants = 0;
  /// Ascending vertex indices; empty for synthetic profiles.
  VertexSet members;
};

/// Canonical decomposition of a local antimagic labeling into color classes.
///
/// Classes 1..r are those containing at least one non-pendant vertex, in
/// ascending color; classes r+1..t are pendant singletons, also ascending.
/// b counts the pendant vertices lying in classes 1..r. Indices taken by the
/// accessors are 1-based to match that numbering.
struct ColorProfile {
  std::size_t edge_count = 0;
  std::size_t r = 0;
  std::size_t b = 0;
  std::vector<ColorClass> classes;

  std::size_t t() const { return classes.size(); }
  std::size_t pendant_count() const { return (t() - r) + b; }
  const ColorClass& cls(std::size_t i) const;
  Color c(std::size_t i) const { return cls(i).color; }
  std::size_t n(std::size_t i) const { return cls(i).size; }
  Color e() const { return static_cast<Color>(edge_count); }
  /// r == 1 happens exactly for stars K_{1,e}.
  bool is_star() const { return r == 1; }
};

/// Throws NotLocalAntimagic when f is not local antimagic on g.
ColorProfile extract_profile(const Graph& g, const EdgeLabeling& f);

/// Structural checks for hand-entered profiles: class ordering, pendant
/// classes are singletons colored at most e, sum of n_i c_i = e(e+1).
/// Throws InvalidProfile.
void validate_profile(const ColorProfile& p);

/// True unless the max label sits on a non-pendant edge and c(f) < k + 2.
bool check_pendant_lemma(const Graph& g, const EdgeLabeling& f);

}  // namespace lachi
