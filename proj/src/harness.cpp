#include "lachi/harness.hpp"

#include "lachi/error.hpp"

namespace lachi {

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::None: return "none";
    case TheoremCase::AddPendantBelowAll: return "addpendant/e<c1";
    case TheoremCase::AddPendantFirstGapClass1: return "addpendant/c1<=e<c2/i=1";
    case TheoremCase::AddPendantFirstGap: return "addpendant/c1<=e<c2/i>=2";
    case TheoremCase::AddPendantGapLowWithPendant: return "addpendant/gap/i<j/pendant";
    case TheoremCase::AddPendantGapLowNoPendant: return "addpendant/gap/i<j/no-pendant";
    case TheoremCase::AddPendantGapHigh: return "addpendant/gap/i>=j";
    case TheoremCase::AddPendantGapExact: return "addpendant/gap/exact";
    case TheoremCase::AddLeafBelowAll: return "addleaf/e<c1";
    case TheoremCase::AddLeafGap: return "addleaf/gap";
    case TheoremCase::AddLeafGapExact: return "addleaf/gap/exact";
    case TheoremCase::TightTopClass: return "tight/i=r";
    case TheoremCase::TightOtherClass: return "tight/i!=r";
    case TheoremCase::TightStar: return "tight/star";
  }
  return "unknown";
}

namespace {

using Int = long long;

/// Smallest j in 1..r+1 with e < c_j over the classes 1..r (r+1 when e >= c_r).
std::size_t gap_index(const ColorProfile& p) {
  std::size_t j = 1;
  while (j <= p.r && p.c(j) <= p.e()) ++j;
  return j;
}

void require_parity(PredictedBounds& out, std::size_t n_i, std::size_t s) {
  if (s == 0) {
    out.failed_preconditions.push_back("s >= 1");
  } else if (n_i >= 2 && s % 2 != 0) {
    out.failed_preconditions.push_back("s must be even when n_i >= 2");
  }
}

void require_magnitude(PredictedBounds& out, const ColorProfile& p, std::size_t n_i, std::size_t s,
                       Color required, const char* which) {
  const Color reach = p.e() + static_cast<Color>(s * n_i);
  const std::string lhs = "e + s*n_i = " + std::to_string(reach);
  if (reach < required) {
    out.failed_preconditions.push_back(lhs + " < " + which + " = " + std::to_string(required));
  } else if (reach == required) {
    out.notes.push_back("boundary: " + lhs + " == " + which);
  }
}

PredictedBounds finish(PredictedBounds out) {
  if (!out.failed_preconditions.empty()) {
    out = PredictedBounds{0, 0, std::nullopt, out.theorem_case, false, out.failed_preconditions, out.notes};
    return out;
  }
  if (out.exact) out.lower = out.upper = *out.exact;
  if (out.lower > out.upper) {
    out.failed_preconditions.push_back("profile yields lower bound " + std::to_string(out.lower) +
                                       " above upper bound " + std::to_string(out.upper));
    return finish(std::move(out));
  }
  out.applicable = true;
  return out;
}

void set_exact(PredictedBounds& out, Int value) {
  out.exact = value;
  out.lower = out.upper = value;
}

}  // namespace

PredictedBounds predict_thm_addpendant(const ColorProfile& p, std::size_t i, std::size_t s) {
  if (i < 1 || i > p.r)
    throw Error(ErrorCode::ClassOutOfRange, "class " + std::to_string(i) + " not in 1..r = 1.." + std::to_string(p.r));
  PredictedBounds out;
  if (p.r < 2) {
    out.failed_preconditions.push_back("r >= 2");
    return finish(std::move(out));
  }
  const std::size_t n_i = p.n(i);
  const std::size_t r = p.r;
  const std::size_t j = gap_index(p);
  require_parity(out, n_i, s);
  if (j == r + 1) out.failed_preconditions.push_back("profile has c_r <= e");

  // With c_{r-1} <= e < c_r, augmenting V_r needs the parity rule only.
  const bool simplified = i == r && j == r;
  if (j <= r && !simplified) {
    if (i < r) {
      require_magnitude(out, p, n_i, s, p.c(r), "c_r");
    } else {
      require_magnitude(out, p, n_i, s, p.c(r - 1), "c_{r-1}");
    }
  }
  if (!out.failed_preconditions.empty()) return finish(std::move(out));

  const Int base = static_cast<Int>(s * n_i + (p.t() - r));
  const auto b = static_cast<Int>(p.b);
  const auto J = static_cast<Int>(j);
  if (j == 1) {
    out.theorem_case = TheoremCase::AddPendantBelowAll;
    set_exact(out, base + 1);
  } else if (j == 2) {
    if (i == 1) {
      out.theorem_case = TheoremCase::AddPendantFirstGapClass1;
      set_exact(out, base + 1);
    } else {
      out.theorem_case = TheoremCase::AddPendantFirstGap;
      out.lower = base + b + 1;
      out.upper = base + 2;
      if (p.c(1) == p.e() && p.b == 1) {
        out.notes.push_back("c_1 = e and b = 1: upper bound attained");
        set_exact(out, base + 2);
      }
    }
  } else if (p.c(j - 1) == p.e() && p.b == j - 1) {
    out.theorem_case = TheoremCase::AddPendantGapExact;
    out.notes.push_back("c_{j-1} = e and b = j-1 with j = " + std::to_string(j));
    set_exact(out, i <= j - 1 ? base + J - 1 : base + J);
  } else if (i <= j - 1) {
    if (p.cls(i).pendants > 0) {
      out.theorem_case = TheoremCase::AddPendantGapLowWithPendant;
      out.lower = base + b;
    } else {
      out.theorem_case = TheoremCase::AddPendantGapLowNoPendant;
      out.lower = base + b + 1;
    }
    out.upper = base + J - 1;
  } else {
    out.theorem_case = TheoremCase::AddPendantGapHigh;
    out.lower = base + b + 1;
    out.upper = base + J;
  }
  return finish(std::move(out));
}

PredictedBounds predict_thm_addpendant2(const ColorProfile& p, std::size_t i, std::size_t s) {
  if (i <= p.r || i > p.t())
    throw Error(ErrorCode::ClassOutOfRange, "class " + std::to_string(i) + " not in r+1..t = " +
                                                std::to_string(p.r + 1) + ".." + std::to_string(p.t()));
  PredictedBounds out;
  if (p.is_star()) {
    out.failed_preconditions.push_back("base is K_{1,e}");
    return finish(std::move(out));
  }
  const std::size_t r = p.r;
  const std::size_t j = gap_index(p);
  require_parity(out, 1, s);
  if (j == r + 1) {
    out.failed_preconditions.push_back("profile has c_r <= e");
  } else {
    require_magnitude(out, p, 1, s, p.c(r), "c_r");
  }
  if (!out.failed_preconditions.empty()) return finish(std::move(out));

  const Int base = static_cast<Int>(s + (p.t() - r));
  if (j == 1) {
    out.theorem_case = TheoremCase::AddLeafBelowAll;
    set_exact(out, base);
  } else if (p.b == j - 1) {
    out.theorem_case = TheoremCase::AddLeafGapExact;
    out.notes.push_back("b = j-1 with j = " + std::to_string(j));
    set_exact(out, base + static_cast<Int>(j) - 1);
  } else {
    out.theorem_case = TheoremCase::AddLeafGap;
    out.lower = base + static_cast<Int>(p.b);
    out.upper = base + static_cast<Int>(j) - 1;
  }
  return finish(std::move(out));
}

PredictedBounds predict_cor_addpendant3(const ColorProfile& p, std::size_t i, std::size_t s) {
  if (i < 1 || i > p.t())
    throw Error(ErrorCode::ClassOutOfRange, "class " + std::to_string(i) + " not in 1.." + std::to_string(p.t()));
  PredictedBounds out;
  const std::size_t k = p.pendant_count();
  if (p.t() != k + 1) {
    out.failed_preconditions.push_back("t = " + std::to_string(p.t()) + " differs from k + 1 = " +
                                       std::to_string(k + 1));
    return finish(std::move(out));
  }
  const std::size_t r = p.r;
  const std::size_t n_i = p.n(i);
  require_parity(out, n_i, s);

  if (r == 1) {
    if (i == 1) out.failed_preconditions.push_back("augmenting the star center gives another star");
    require_magnitude(out, p, n_i, s, p.c(1), "c_1");
    out.theorem_case = TheoremCase::TightStar;
    if (out.failed_preconditions.empty()) set_exact(out, static_cast<Int>(s + k));
    return finish(std::move(out));
  }

  if (i == r) {
    require_magnitude(out, p, n_i, s, p.c(r - 1), "c_{r-1}");
    out.theorem_case = TheoremCase::TightTopClass;
    if (out.failed_preconditions.empty()) set_exact(out, static_cast<Int>(s * n_i + k + 1));
  } else {
    require_magnitude(out, p, n_i, s, p.c(r), "c_r");
    out.theorem_case = TheoremCase::TightOtherClass;
    if (out.failed_preconditions.empty()) set_exact(out, static_cast<Int>(s * n_i + k));
  }
  return finish(std::move(out));
}

PredictedBounds predict(const ColorProfile& p, std::size_t i, std::size_t s, TheoremChoice choice) {
  switch (choice) {
    case TheoremChoice::AddPendant: return predict_thm_addpendant(p, i, s);
    case TheoremChoice::AddPendant2: return predict_thm_addpendant2(p, i, s);
    case TheoremChoice::Corollary: return predict_cor_addpendant3(p, i, s);
    case TheoremChoice::Auto: break;
  }
  if (p.t() == p.pendant_count() + 1) return predict_cor_addpendant3(p, i, s);
  if (i >= 1 && i <= p.r) return predict_thm_addpendant(p, i, s);
  return predict_thm_addpendant2(p, i, s);
}

ExperimentReport run_experiment(const Graph& g, const EdgeLabeling& f, std::size_t i, std::size_t s,
                                const ExperimentOptions& options) {
  const ColorProfile profile = extract_profile(g, f);
  ExperimentReport report;
  report.instance = (g.name().empty() ? std::string("G") : g.name()) + " class " + std::to_string(i) +
                    " s " + std::to_string(s);
  report.predicted = predict(profile, i, s, options.theorem);
  if (!report.predicted.applicable) return report;

  const Augmentation aug = augment_and_label(g, f, i, s);
  report.constructed_color_count = color_count(aug.graph, aug.labeling);
  report.constructed_local_antimagic = aug.local_antimagic;
  if (aug.local_antimagic) {
    if (auto cert = certify(aug.graph, aug.labeling)) report.certified_value = cert->chi_la;
  }
  const std::size_t limit = std::min(options.solver.edge_limit, kHardEdgeLimit);
  if (options.use_solver && aug.graph.edge_count() <= limit)
    report.solver_value = solve_chi_la(aug.graph, options.solver).chi_la;

  const auto within = [&](std::size_t v) {
    const auto x = static_cast<long long>(v);
    return report.predicted.lower <= x && x <= report.predicted.upper;
  };
  bool ok = aug.local_antimagic;
  if (ok && static_cast<long long>(*report.constructed_color_count) > report.predicted.upper) ok = false;
  if (report.certified_value && !within(*report.certified_value)) ok = false;
  if (report.solver_value) {
    if (!within(*report.solver_value)) ok = false;
    if (*report.constructed_color_count < *report.solver_value) ok = false;
  }
  report.consistent = ok;
  return report;
}

}  // namespace lachi
