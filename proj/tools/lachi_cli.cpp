// lachi: command-line front end for local antimagic labeling experiments.
//
// Exit codes: 0 success (including inapplicable predictions), 1 an
// inconsistency was detected, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lachi/constructions.hpp"
#include "lachi/error.hpp"
#include "lachi/harness.hpp"
#include "lachi/io.hpp"
#include "lachi/solver.hpp"
#include "lachi/store.hpp"

namespace fs = std::filesystem;
using namespace lachi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInput = 2;

struct StoreOptions {
  std::string path;
  bool disabled = false;

  std::optional<ResultsStore> open() const {
    if (disabled) return std::nullopt;
    if (!path.empty()) return ResultsStore(path);
    if (const char* env = std::getenv("LACHI_RESULTS_STORE"); env && *env) return ResultsStore(env);
    return ResultsStore("lachi-results.jsonl");
  }
};

/// Appends to the store and reports a determinism failure as exit 1.
int record(const StoreOptions& store_opts, const Graph& g, const std::string& operation, const Json& payload,
           const Json& details) {
  auto store = store_opts.open();
  if (!store) return kExitOk;
  const auto outcome = store->append(instance_hash(g, operation), operation, payload, details);
  if (!outcome.matches) {
    std::cerr << "determinism audit failed: stored result for " << operation << " differs\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

void write_files(const std::string& prefix, const Graph& g, const EdgeLabeling& f, Json& summary) {
  const fs::path base(prefix);
  if (base.has_parent_path()) fs::create_directories(base.parent_path());
  const std::string edges_path = prefix + ".edges";
  const std::string labels_path = prefix + ".labels";
  {
    std::ofstream out(edges_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + edges_path);
    write_edge_list(out, g);
  }
  {
    std::ofstream out(labels_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + labels_path);
    write_labeling(out, g, f);
  }
  summary["files"]["graph"] = edges_path;
  summary["files"]["labeling"] = labels_path;
  if (is_local_antimagic(g, f)) {
    const std::string profile_path = prefix + ".profile.json";
    std::ofstream out(profile_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + profile_path);
    out << to_json(extract_profile(g, f)).dump(2) << '\n';
    summary["files"]["profile"] = profile_path;
  }
}

Json summarize(const Graph& g, const EdgeLabeling& f) {
  Json j;
  j["graph"] = g.name();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["pendants"] = pendant_vertices(g).size();
  j["local_antimagic"] = is_local_antimagic(g, f);
  j["colors"] = color_count(g, f);
  return j;
}

TheoremChoice parse_theorem(const std::string& name) {
  if (name == "auto") return TheoremChoice::Auto;
  if (name == "addpendant") return TheoremChoice::AddPendant;
  if (name == "addpendant2") return TheoremChoice::AddPendant2;
  if (name == "corollary") return TheoremChoice::Corollary;
  throw Error(ErrorCode::ParseError, "unknown theorem '" + name + "'");
}

struct BatchRow {
  fs::path graph;
  fs::path labeling;
  std::size_t class_index;
  std::size_t s;
};

std::vector<BatchRow> read_batch(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  const fs::path dir = path.parent_path();
  std::vector<BatchRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string graph;
    std::string labeling;
    long long i = 0;
    long long s = 0;
    if (!(ss >> graph)) continue;
    std::string extra;
    if (!(ss >> labeling >> i >> s) || (ss >> extra) || i < 1 || s < 0)
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(lineno) + ": expected 'graph labeling class s'");
    auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : dir / p; };
    rows.push_back({resolve(graph), resolve(labeling), static_cast<std::size_t>(i), static_cast<std::size_t>(s)});
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local antimagic labeling toolkit"};
  app.require_subcommand(1);
  StoreOptions store_opts;
  app.add_option("--store", store_opts.path, "Results store path (default $LACHI_RESULTS_STORE or ./lachi-results.jsonl)");
  app.add_flag("--no-store", store_opts.disabled, "Do not persist results");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a constructed labeling");
  std::string family;
  std::size_t param_n = 4;
  std::size_t param_k = 3;
  std::size_t param_i = 2;
  std::size_t param_s = 1;
  std::string out_prefix;
  construct->add_option("family", family, "spider2 | star | star-augment")
      ->required()
      ->check(CLI::IsMember({"spider2", "star", "star-augment"}));
  construct->add_option("--n", param_n, "Sp(2^[n]) legs");
  construct->add_option("--k", param_k, "star size");
  construct->add_option("--i", param_i, "leaf class for star-augment (2..k+1)");
  construct->add_option("--s", param_s, "pendants added for star-augment");
  construct->add_option("--out", out_prefix, "Output prefix for .edges/.labels/.profile.json");

  // solve
  auto* solve = app.add_subcommand("solve", "Exact chi_la by exhaustive search");
  std::string graph_path;
  std::size_t edge_limit = kDefaultEdgeLimit;
  std::size_t jobs = 0;
  solve->add_option("graph", graph_path, "Edge-list file")->required();
  solve->add_option("--edge-limit", edge_limit, "Refuse graphs with more edges (hard cap 11)");
  solve->add_option("--jobs", jobs, "Worker threads (0 = available parallelism)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a labeling and print its color profile");
  std::string labels_path;
  verify->add_option("graph", graph_path, "Edge-list file")->required();
  verify->add_option("labeling", labels_path, "Labeling file")->required();

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Predicted chi_la of G(V_i, s) from a color profile");
  std::string profile_path;
  std::size_t class_index = 1;
  std::size_t s_value = 1;
  std::string theorem = "auto";
  predict_cmd->add_option("--profile", profile_path, "Profile JSON file");
  predict_cmd->add_option("--graph", graph_path, "Edge-list file (with --labels)");
  predict_cmd->add_option("--labels", labels_path, "Labeling file (with --graph)");
  predict_cmd->add_option("--class,-i", class_index, "Target class index (1-based)")->required();
  predict_cmd->add_option("--s", s_value, "Pendants per vertex")->required();
  predict_cmd->add_option("--theorem", theorem, "auto | addpendant | addpendant2 | corollary");

  // augment
  auto* augment = app.add_subcommand("augment", "Build G(V_i, s) with the pendant labeling");
  augment->add_option("graph", graph_path, "Edge-list file")->required();
  augment->add_option("labeling", labels_path, "Labeling file")->required();
  augment->add_option("--class,-i", class_index, "Target class index (1-based)")->required();
  augment->add_option("--s", s_value, "Pendants per vertex")->required();
  augment->add_option("--out", out_prefix, "Output prefix");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a batch of prediction/construction cross-checks");
  std::string batch_path;
  bool use_solver = false;
  experiment->add_option("batch", batch_path, "Batch file: 'graph labeling class s' per line")->required();
  experiment->add_flag("--use-solver", use_solver, "Also run the exhaustive solver when small enough");
  experiment->add_option("--edge-limit", edge_limit, "Solver edge limit");
  experiment->add_option("--jobs", jobs, "Solver worker threads");
  experiment->add_option("--theorem", theorem, "auto | addpendant | addpendant2 | corollary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*construct) {
      LabeledGraph built = [&] {
        if (family == "spider2") return label_spider_2n(param_n);
        if (family == "star") return label_star(param_k);
        return augment_star_leaf(param_k, param_i, param_s);
      }();
      std::string params = family == "spider2" ? "n" + std::to_string(param_n)
                           : family == "star"  ? "k" + std::to_string(param_k)
                                               : "k" + std::to_string(param_k) + "-i" + std::to_string(param_i) +
                                                    "-s" + std::to_string(param_s);
      if (out_prefix.empty()) out_prefix = family + "-" + params;
      Json summary;
      summary["family"] = family;
      summary.update(summarize(built.graph, built.labeling));
      write_files(out_prefix, built.graph, built.labeling, summary);
      std::cout << summary.dump() << '\n';
      return kExitOk;
    }

    if (*solve) {
      const Graph g = read_edge_list_file(graph_path);
      if (g.edge_count() == kHardEdgeLimit && edge_limit >= kHardEdgeLimit)
        std::cerr << "warning: 11 edges means about 4e7 labelings; expect a long run\n";
      const auto start = std::chrono::steady_clock::now();
      const SolverResult result = solve_chi_la(g, SolverOptions{edge_limit, jobs});
      const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      const Json out = to_json(result, elapsed);
      std::cout << out.dump() << '\n';
      Json payload;
      payload["chi_la"] = result.chi_la;
      payload["exhaustive"] = result.exhaustive;
      payload["method"] = out["method"];
      Json details;
      details["witness"] = out["witness"];
      details["nodes"] = result.nodes_explored;
      details["wall_time"] = elapsed;
      details["jobs"] = jobs;
      return record(store_opts, g, "solve edge_limit=" + std::to_string(edge_limit), payload, details);
    }

    if (*verify) {
      const Graph g = read_edge_list_file(graph_path);
      const EdgeLabeling f = read_labeling_file(labels_path, g.edge_count());
      Json out = summarize(g, f);
      if (out["local_antimagic"].get<bool>()) {
        out["profile"] = to_json(extract_profile(g, f));
        out["pendant_lemma"] = check_pendant_lemma(g, f);
      } else {
        out["profile"] = nullptr;
        out["pendant_lemma"] = nullptr;
      }
      std::cout << out.dump() << '\n';
      return record(store_opts, g, "verify " + to_json(f).dump(), out, Json::object());
    }

    if (*predict_cmd) {
      ColorProfile profile;
      if (!profile_path.empty()) {
        std::ifstream in(profile_path);
        if (!in) throw Error(ErrorCode::IoError, "cannot open " + profile_path);
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorCode::ParseError, profile_path + " is not valid JSON");
        profile = profile_from_json(j);
      } else if (!graph_path.empty() && !labels_path.empty()) {
        const Graph g = read_edge_list_file(graph_path);
        profile = extract_profile(g, read_labeling_file(labels_path, g.edge_count()));
      } else {
        throw Error(ErrorCode::ParseError, "predict needs --profile or --graph with --labels");
      }
      const PredictedBounds bounds = predict(profile, class_index, s_value, parse_theorem(theorem));
      std::cout << to_json(bounds).dump() << '\n';
      return kExitOk;
    }

    if (*augment) {
      const Graph g = read_edge_list_file(graph_path);
      const EdgeLabeling f = read_labeling_file(labels_path, g.edge_count());
      const Augmentation aug = augment_and_label(g, f, class_index, s_value);
      Json out = summarize(aug.graph, aug.labeling);
      out["augmented_vertices"] = aug.augmented;
      std::optional<SolverResult> cert;
      if (aug.local_antimagic) cert = certify(aug.graph, aug.labeling);
      out["certified_chi_la"] = cert ? Json(cert->chi_la) : Json(nullptr);
      if (out_prefix.empty()) out_prefix = fs::path(graph_path).stem().string() + "-aug";
      write_files(out_prefix, aug.graph, aug.labeling, out);
      std::cout << out.dump() << '\n';
      return kExitOk;
    }

    if (*experiment) {
      ExperimentOptions options;
      options.use_solver = use_solver;
      options.theorem = parse_theorem(theorem);
      options.solver = SolverOptions{edge_limit, jobs};
      int status = kExitOk;
      for (const BatchRow& row : read_batch(batch_path)) {
        const Graph g = read_edge_list_file(row.graph);
        const EdgeLabeling f = read_labeling_file(row.labeling, g.edge_count());
        const ExperimentReport report = run_experiment(g, f, row.class_index, row.s, options);
        Json line = to_json(report);
        std::cout << line.dump() << '\n';
        if (report.predicted.applicable && !report.consistent) status = kExitInconsistent;
        line.erase("instance");
        const std::string op = "experiment " + to_json(f).dump() + " i=" + std::to_string(row.class_index) +
                               " s=" + std::to_string(row.s) + " solver=" + (use_solver ? "1" : "0");
        if (record(store_opts, g, op, line, Json::object()) != kExitOk) status = kExitInconsistent;
      }
      return status;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    Json err;
    err["error"] = std::string(to_string(e.code()));
    err["message"] = e.what();
    std::cout << err.dump() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
