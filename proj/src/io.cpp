#include "lachi/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lachi/error.hpp"

namespace lachi {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename A, typename B>
bool read_pair(const std::string& text, A& a, B& b) {
  std::istringstream ss(text);
  long long x = 0;
  long long y = 0;
  std::string rest;
  if (!(ss >> x >> y) || (ss >> rest) || x < 0 || y < 0) return false;
  a = static_cast<A>(x);
  b = static_cast<B>(y);
  return true;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in, std::string name) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    Vertex u = 0;
    Vertex v = 0;
    if (!read_pair(body, u, v))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'u v'");
    pairs.emplace_back(u, v);
  }
  return Graph::from_edge_list(pairs, std::move(name));
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_list(in, path.stem().string());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# graph: " << g.name() << '\n';
  out << "# vertices " << g.vertex_count() << ", edges " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeLabeling read_labeling(std::istream& in, std::size_t edge_count) {
  if (edge_count > kMaxFileEdges)
    throw Error(ErrorCode::TooLarge, "labeling files are capped at " + std::to_string(kMaxFileEdges) + " edges");
  std::vector<Label> labels(edge_count, 0);
  std::vector<bool> seen(edge_count, false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::size_t j = 0;
    long long x = 0;
    if (!read_pair(body, j, x))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'edge_index label'");
    if (j >= edge_count)
      throw Error(ErrorCode::LabelingMismatch, "edge index " + std::to_string(j) + " out of range");
    if (seen[j]) throw Error(ErrorCode::LabelingMismatch, "edge " + std::to_string(j) + " labeled twice");
    seen[j] = true;
    labels[j] = x;
  }
  for (std::size_t j = 0; j < edge_count; ++j)
    if (!seen[j]) throw Error(ErrorCode::LabelingMismatch, "edge " + std::to_string(j) + " has no label");
  return EdgeLabeling(std::move(labels));
}

EdgeLabeling read_labeling_file(const std::filesystem::path& path, std::size_t edge_count) {
  auto in = open(path);
  return read_labeling(in, edge_count);
}

void write_labeling(std::ostream& out, const Graph& g, const EdgeLabeling& f) {
  for (EdgeIndex j = 0; j < f.size(); ++j) out << j << ' ' << f[j] << '\n';
  const auto coloring = induced_colors(g, f);
  out << "# colors:\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "# " << v << '=' << coloring.colors[v] << '\n';
}

Json to_json(const ColorProfile& p) {
  Json classes = Json::array();
  for (const auto& cls : p.classes) {
    Json c;
    c["color"] = cls.color;
    c["size"] = cls.size;
    c["pendants"] = cls.pendants;
    c["members"] = cls.members;
    classes.push_back(std::move(c));
  }
  Json j;
  j["e"] = p.edge_count;
  j["t"] = p.t();
  j["r"] = p.r;
  j["b"] = p.b;
  j["pendant_count"] = p.pendant_count();
  j["classes"] = std::move(classes);
  return j;
}

ColorProfile profile_from_json(const Json& j) {
  try {
    ColorProfile p;
    p.edge_count = j.at("e").get<std::size_t>();
    p.r = j.at("r").get<std::size_t>();
    for (const auto& c : j.at("classes")) {
      ColorClass cls;
      cls.color = c.at("color").get<Color>();
      cls.size = c.at("size").get<std::size_t>();
      cls.pendants = c.value("pendants", std::size_t{0});
      if (c.contains("members")) cls.members = c.at("members").get<VertexSet>();
      p.classes.push_back(std::move(cls));
    }
    std::size_t b = 0;
    for (std::size_t i = 0; i < std::min(p.r, p.classes.size()); ++i) b += p.classes[i].pendants;
    p.b = j.contains("b") ? j.at("b").get<std::size_t>() : b;
    if (j.contains("t") && j.at("t").get<std::size_t>() != p.t())
      throw Error(ErrorCode::InvalidProfile, "t disagrees with the number of classes");
    validate_profile(p);
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("profile JSON: ") + ex.what());
  }
}

Json to_json(const PredictedBounds& b) {
  Json j;
  j["applicable"] = b.applicable;
  j["theorem_case"] = std::string(to_string(b.theorem_case));
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["exact"] = b.exact ? Json(*b.exact) : Json(nullptr);
  j["failed_preconditions"] = b.failed_preconditions;
  j["notes"] = b.notes;
  return j;
}

Json to_json(const EdgeLabeling& f) {
  return Json(std::vector<Label>(f.labels().begin(), f.labels().end()));
}

Json to_json(const SolverResult& r, std::int64_t wall_time_us) {
  Json j;
  j["chi_la"] = r.chi_la;
  j["witness"] = to_json(r.witness);
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes_explored;
  j["method"] = std::string(to_string(r.method));
  j["lower_bound"] = r.lower_bound;
  j["wall_time"] = wall_time_us;
  return j;
}

Json to_json(const ExperimentReport& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["instance"] = r.instance;
  j["predicted"] = to_json(r.predicted);
  j["constructed_color_count"] = opt(r.constructed_color_count);
  j["constructed_local_antimagic"] = r.constructed_local_antimagic;
  j["certified_value"] = opt(r.certified_value);
  j["solver_value"] = opt(r.solver_value);
  j["consistent"] = r.consistent;
  return j;
}

std::string instance_hash(const Graph& g, const std::string& operation) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  mix(std::to_string(g.vertex_count()) + ";");
  for (const Edge& e : g.edges()) mix(std::to_string(e.u) + "-" + std::to_string(e.v) + ";");
  mix("|" + operation);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lachi
