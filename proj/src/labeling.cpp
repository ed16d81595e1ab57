#include "lachi/labeling.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lachi/error.hpp"

namespace lachi {

EdgeLabeling::EdgeLabeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  const auto q = static_cast<Label>(labels_.size());
  std::vector<bool> used(labels_.size() + 1, false);
  for (Label x : labels_) {
    if (x < 1 || x > q)
      throw Error(ErrorCode::LabelingMismatch, "label " + std::to_string(x) + " outside 1.." + std::to_string(q));
    if (used[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::LabelingMismatch, "label " + std::to_string(x) + " used twice");
    used[static_cast<std::size_t>(x)] = true;
  }
}

EdgeIndex EdgeLabeling::max_label_edge() const {
  const auto it = std::max_element(labels_.begin(), labels_.end());
  return static_cast<EdgeIndex>(it - labels_.begin());
}

std::size_t InducedColoring::distinct() const {
  std::vector<Color> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

InducedColoring induced_colors(const Graph& g, const EdgeLabeling& f) {
  if (f.size() != g.edge_count())
    throw Error(ErrorCode::LabelingMismatch, std::to_string(f.size()) + " labels for " +
                                                 std::to_string(g.edge_count()) + " edges");
  InducedColoring out{std::vector<Color>(g.vertex_count(), 0)};
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    out.colors[e.u] += f[j];
    out.colors[e.v] += f[j];
  }
  return out;
}

bool is_local_antimagic(const Graph& g, const EdgeLabeling& f) {
  g.require_labelable();
  const auto coloring = induced_colors(g, f);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return coloring.colors[e.u] != coloring.colors[e.v]; });
}

std::size_t color_count(const Graph& g, const EdgeLabeling& f) {
  return induced_colors(g, f).distinct();
}

const ColorClass& ColorProfile::cls(std::size_t i) const {
  if (i < 1 || i > classes.size())
    throw Error(ErrorCode::ClassOutOfRange,
                "class " + std::to_string(i) + " not in 1.." + std::to_string(classes.size()));
  return classes[i - 1];
}

ColorProfile extract_profile(const Graph& g, const EdgeLabeling& f) {
  if (!is_local_antimagic(g, f))
    throw Error(ErrorCode::NotLocalAntimagic, "adjacent vertices share an induced color");
  const auto coloring = induced_colors(g, f);

  std::map<Color, ColorClass> by_color;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& cls = by_color[coloring.colors[v]];
    cls.color = coloring.colors[v];
    ++cls.size;
    cls.members.push_back(v);
    if (g.degree(v) == 1) ++cls.pendants;
  }

  ColorProfile p;
  p.edge_count = g.edge_count();
  std::vector<ColorClass> pendant_only;
  for (auto& [color, cls] : by_color) {
    if (cls.pendants < cls.size) {
      p.b += cls.pendants;
      p.classes.push_back(std::move(cls));
    } else {
      pendant_only.push_back(std::move(cls));
    }
  }
  p.r = p.classes.size();
  for (auto& cls : pendant_only) p.classes.push_back(std::move(cls));
  return p;
}

void validate_profile(const ColorProfile& p) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidProfile, why); };
  if (p.edge_count < 2) fail("e must be >= 2");
  if (p.r < 1 || p.r > p.t()) fail("r must lie in 1..t");
  std::size_t b = 0;
  Color weighted = 0;
  for (std::size_t i = 1; i <= p.t(); ++i) {
    const ColorClass& cls = p.cls(i);
    if (cls.size == 0) fail("class " + std::to_string(i) + " is empty");
    if (cls.pendants > 1) fail("class " + std::to_string(i) + " holds two pendants of one color");
    if (!cls.members.empty() && cls.members.size() != cls.size)
      fail("class " + std::to_string(i) + " member list disagrees with its size");
    if (i <= p.r) {
      if (cls.pendants >= cls.size) fail("class " + std::to_string(i) + " has no non-pendant vertex");
      b += cls.pendants;
    } else {
      if (cls.size != 1 || cls.pendants != 1)
        fail("class " + std::to_string(i) + " beyond r must be a pendant singleton");
      if (cls.color > p.e()) fail("pendant class " + std::to_string(i) + " colored above e");
    }
    const bool ordered_break = i != 1 && i != p.r + 1;
    if (ordered_break && p.c(i - 1) >= cls.color)
      fail("class colors not ascending at " + std::to_string(i));
    weighted += static_cast<Color>(cls.size) * cls.color;
  }
  if (b != p.b) fail("b disagrees with class pendant counts");
  if (weighted != p.e() * (p.e() + 1)) fail("sum of n_i c_i is not e(e+1)");
}

bool check_pendant_lemma(const Graph& g, const EdgeLabeling& f) {
  if (!is_local_antimagic(g, f))
    throw Error(ErrorCode::NotLocalAntimagic, "lemma applies to local antimagic labelings only");
  if (g.is_pendant_edge(f.max_label_edge())) return true;
  return color_count(g, f) >= pendant_vertices(g).size() + 2;
}

}  // namespace lachi
