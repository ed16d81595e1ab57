#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lachi/constructions.hpp"
#include "lachi/labeling.hpp"
#include "lachi/solver.hpp"

namespace lachi {

/// Which clause of which bound theorem produced a prediction.
enum class TheoremCase {
  None,
  // Augmenting a class that contains a non-pendant vertex (1 <= i <= r).
  AddPendantBelowAll,          // e < c_1
  AddPendantFirstGapClass1,    // c_1 <= e < c_2, i = 1
  AddPendantFirstGap,          // c_1 <= e < c_2, i >= 2
  AddPendantGapLowWithPendant, // c_{j-1} <= e < c_j, i < j, class i holds a pendant
  AddPendantGapLowNoPendant,   // same, class i holds no pendant
  AddPendantGapHigh,           // same, i >= j
  AddPendantGapExact,          // c_{j-1} = e and b = j - 1
  // Augmenting a pendant singleton class (r < i <= t).
  AddLeafBelowAll,
  AddLeafGap,
  AddLeafGapExact,
  // Base graph already meets chi_la = k + 1.
  TightTopClass,    // i = r
  TightOtherClass,  // i != r
  TightStar,        // r = 1, base is K_{1,k}
};

std::string_view to_string(TheoremCase c);

struct PredictedBounds {
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
  TheoremCase theorem_case = TheoremCase::None;
  bool applicable = false;
  std::vector<std::string> failed_preconditions;
  /// Informational flags, e.g. the magnitude condition holding with equality.
  std::vector<std::string> notes;
};

/// Bounds for G(V_i, s), 1 <= i <= r, from a profile with r >= 2.
/// Precondition failures set applicable = false; a class index outside 1..r
/// throws ClassOutOfRange.
PredictedBounds predict_thm_addpendant(const ColorProfile& p, std::size_t i, std::size_t s);

/// Bounds for G(V_i, s), r < i <= t, when the base is not a star.
PredictedBounds predict_thm_addpendant2(const ColorProfile& p, std::size_t i, std::size_t s);

/// Exact values when the base already has chi_la = k + 1 (t = k + 1).
PredictedBounds predict_cor_addpendant3(const ColorProfile& p, std::size_t i, std::size_t s);

enum class TheoremChoice { Auto, AddPendant, AddPendant2, Corollary };

/// Auto picks the tight-base corollary when t = k + 1, otherwise the
/// theorem matching the class index.
PredictedBounds predict(const ColorProfile& p, std::size_t i, std::size_t s,
                        TheoremChoice choice = TheoremChoice::Auto);

struct ExperimentReport {
  std::string instance;
  PredictedBounds predicted;
  std::optional<std::size_t> constructed_color_count;
  bool constructed_local_antimagic = false;
  std::optional<std::size_t> certified_value;
  std::optional<std::size_t> solver_value;
  bool consistent = true;
};

struct ExperimentOptions {
  bool use_solver = false;
  TheoremChoice theorem = TheoremChoice::Auto;
  SolverOptions solver;
};

/// extract_profile -> predict -> augment_and_label -> certify / solve.
/// Inapplicable predictions skip the construction and count as consistent.
ExperimentReport run_experiment(const Graph& g, const EdgeLabeling& f, std::size_t i, std::size_t s,
                                const ExperimentOptions& options = {});

}  // namespace lachi
