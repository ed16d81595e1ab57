#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lachi/error.hpp"
#include "lachi/harness.hpp"
#include "oracles.hpp"

using namespace lachi;

namespace {

ColorProfile synthetic(std::size_t e, std::vector<ColorClass> main, std::vector<Color> pendant_colors) {
  ColorProfile p;
  p.edge_count = e;
  p.r = main.size();
  for (const auto& cls : main) p.b += cls.pendants;
  p.classes = std::move(main);
  for (Color c : pendant_colors) p.classes.push_back({c, 1, 1, {}});
  validate_profile(p);
  return p;
}

ColorProfile w4_profile() { return synthetic(8, {{11, 2, 0, {}}, {15, 2, 0, {}}, {20, 1, 0, {}}}, {}); }

const std::vector<Label> kW4Profile = {1, 6, 5, 8, 7, 2, 4, 3};

oracle::Pairs pairs_of(const Graph& g) {
  oracle::Pairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

TEST_CASE("add-pendant theorem on the W_4 profile") {
  const ColorProfile p = w4_profile();
  SUBCASE("hub, s = 12: e < c_1 so exact 13") {
    const auto b = predict_thm_addpendant(p, 3, 12);
    CHECK(b.applicable);
    CHECK(b.theorem_case == TheoremCase::AddPendantBelowAll);
    REQUIRE(b.exact);
    CHECK(*b.exact == 13);
  }
  SUBCASE("rim class: exact 2s + 1 once 8 + 2s >= 20") {
    for (std::size_t s = 6; s <= 20; s += 2) {
      const auto b = predict_thm_addpendant(p, 1, s);
      CHECK(b.applicable);
      REQUIRE(b.exact);
      CHECK(*b.exact == static_cast<long long>(2 * s + 1));
    }
    CHECK(predict_thm_addpendant(p, 1, 6).notes.size() == 1);  // 8 + 12 == c_3
    CHECK_FALSE(predict_thm_addpendant(p, 1, 4).applicable);
    CHECK_FALSE(predict_thm_addpendant(p, 2, 7).applicable);
  }
  SUBCASE("hub magnitude condition uses c_{r-1}") {
    // 8 + s >= 15 needs s >= 7.
    CHECK_FALSE(predict_thm_addpendant(p, 3, 6).applicable);
    CHECK(predict_thm_addpendant(p, 3, 7).applicable);
  }
  SUBCASE("linear growth in s with slope n_i") {
    const auto a = predict_thm_addpendant(p, 2, 10);
    const auto b = predict_thm_addpendant(p, 2, 14);
    CHECK(*b.exact - *a.exact == 2 * 4);
  }
  CHECK_THROWS_AS(predict_thm_addpendant(p, 4, 2), Error);
  CHECK_THROWS_AS(predict_thm_addpendant(p, 0, 2), Error);
}

TEST_CASE("add-pendant theorem with c_1 = e") {
  // e = 7, t = r = 2, c = (7, 14), n = (4, 2), b = 1.
  const ColorProfile p = synthetic(7, {{7, 4, 1, {}}, {14, 2, 0, {}}}, {});
  for (std::size_t s = 2; s <= 10; s += 2) {
    const auto first = predict_thm_addpendant(p, 1, s);
    CHECK(first.theorem_case == TheoremCase::AddPendantFirstGapClass1);
    CHECK(*first.exact == static_cast<long long>(4 * s + 1));
    const auto second = predict_thm_addpendant(p, 2, s);
    CHECK(second.theorem_case == TheoremCase::AddPendantFirstGap);
    REQUIRE(second.exact);
    CHECK(*second.exact == static_cast<long long>(2 * s + 2));
  }
}

TEST_CASE("add-pendant theorem with c_{j-1} = e and b = j - 1") {
  // e = 5, t = r = 3, c = (4, 5, 12), b = 2: exact s + 3 for the top class.
  const ColorProfile p = synthetic(5, {{4, 2, 1, {}}, {5, 2, 1, {}}, {12, 1, 0, {}}}, {});
  for (std::size_t s = 1; s <= 6; ++s) {
    const auto b = predict_thm_addpendant(p, 3, s);
    CHECK(b.applicable);
    CHECK(b.theorem_case == TheoremCase::AddPendantGapExact);
    CHECK(*b.exact == static_cast<long long>(s + 3));
  }
}

TEST_CASE("add-pendant theorem needs r >= 2") {
  const ColorProfile star = synthetic(3, {{6, 1, 0, {}}}, {1, 2, 3});
  const auto b = predict_thm_addpendant(star, 1, 2);
  CHECK_FALSE(b.applicable);
  CHECK(b.failed_preconditions.front() == "r >= 2");
}

TEST_CASE("pendant-class theorem") {
  SUBCASE("e = 9 < c_1 = 10, r = 3, t = 9") {
    const ColorProfile p =
        synthetic(9, {{10, 2, 0, {}}, {20, 1, 0, {}}, {25, 1, 0, {}}}, {1, 2, 3, 4, 6, 9});
    CHECK(p.t() == 9);
    for (std::size_t i = 4; i <= 9; ++i) {
      const auto b = predict_thm_addpendant2(p, i, 16);
      CHECK(b.applicable);
      CHECK(b.theorem_case == TheoremCase::AddLeafBelowAll);
      CHECK(*b.exact == 16 + 6);
    }
    CHECK_FALSE(predict_thm_addpendant2(p, 4, 15).applicable);
    CHECK_THROWS_AS(predict_thm_addpendant2(p, 3, 16), Error);
  }
  SUBCASE("c_2 < e < c_3 with b = j - 1 = 2") {
    // e = 6, classes (4, 5, 18) each holding a pendant in the first two, plus the leaf colored 6.
    const ColorProfile p = synthetic(6, {{4, 2, 1, {}}, {5, 2, 1, {}}, {18, 1, 0, {}}}, {6});
    const auto b = predict_thm_addpendant2(p, 4, 12);
    CHECK(b.applicable);
    CHECK(b.theorem_case == TheoremCase::AddLeafGapExact);
    CHECK(*b.exact == 12 + 1 + 2);
    CHECK_FALSE(predict_thm_addpendant2(p, 4, 11).applicable);
  }
  SUBCASE("stars are excluded") {
    const ColorProfile star = synthetic(3, {{6, 1, 0, {}}}, {1, 2, 3});
    const auto b = predict_thm_addpendant2(star, 2, 5);
    CHECK_FALSE(b.applicable);
    CHECK(b.failed_preconditions.front() == "base is K_{1,e}");
  }
}

TEST_CASE("tight-base corollary") {
  SUBCASE("W_4 itself has no pendants, so t != k + 1") {
    CHECK_FALSE(predict_cor_addpendant3(w4_profile(), 3, 12).applicable);
  }
  SUBCASE("K_{1,3}, leaf class 2, s = 3") {
    const auto star = label_star(3);
    const auto b = predict_cor_addpendant3(extract_profile(star.graph, star.labeling), 2, 3);
    CHECK(b.applicable);
    CHECK(b.theorem_case == TheoremCase::TightStar);
    CHECK(*b.exact == 6);
    CHECK_FALSE(predict_cor_addpendant3(extract_profile(star.graph, star.labeling), 2, 2).applicable);
    CHECK_FALSE(predict_cor_addpendant3(extract_profile(star.graph, star.labeling), 1, 3).applicable);
  }
  SUBCASE("P_4 with (2,1,3)") {
    const ColorProfile p = extract_profile(build_path(4), EdgeLabeling({2, 1, 3}));
    CHECK(p.t() == 3);
    CHECK(p.r == 2);
    CHECK(p.pendant_count() == 2);
    for (std::size_t s = 1; s <= 5; ++s) {
      const auto top = predict_cor_addpendant3(p, 2, s);
      CHECK(top.theorem_case == TheoremCase::TightTopClass);
      CHECK(*top.exact == static_cast<long long>(s + 3));
      const auto leaf = predict_cor_addpendant3(p, 3, s);
      CHECK(leaf.theorem_case == TheoremCase::TightOtherClass);
      CHECK(*leaf.exact == static_cast<long long>(s + 2));
    }
  }
  SUBCASE("W_4(V_3, 12) as the new base") {
    const auto aug = augment_and_label(build_wheel(4), EdgeLabeling(kW4Profile), 3, 12);
    const ColorProfile p = extract_profile(aug.graph, aug.labeling);
    CHECK(p.pendant_count() == 12);
    CHECK(p.t() == 13);
    CHECK(p.c(p.r) == 194);
    const auto b = predict_cor_addpendant3(p, p.r, 4);
    CHECK(*b.exact == 4 + 13);
  }
}

TEST_CASE("predictions are pure") {
  const ColorProfile p = w4_profile();
  const auto a = predict(p, 3, 12);
  const auto b = predict(p, 3, 12);
  CHECK(a.exact == b.exact);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK(a.theorem_case == b.theorem_case);
  CHECK(a.failed_preconditions == b.failed_preconditions);
}

TEST_CASE("run_experiment") {
  SUBCASE("W_4, hub, s = 12, certificate only") {
    const auto r = run_experiment(build_wheel(4), EdgeLabeling(kW4Profile), 3, 12);
    CHECK(r.predicted.applicable);
    CHECK(*r.predicted.exact == 13);
    CHECK(*r.constructed_color_count == 13);
    CHECK(*r.certified_value == 13);
    CHECK_FALSE(r.solver_value);
    CHECK(r.consistent);
  }
  SUBCASE("K_{1,3}, leaf class 2, s = 3, with solver") {
    const auto star = label_star(3);
    ExperimentOptions opts;
    opts.use_solver = true;
    const auto r = run_experiment(star.graph, star.labeling, 2, 3, opts);
    CHECK(*r.predicted.exact == 6);
    CHECK(*r.constructed_color_count == 6);
    CHECK(*r.solver_value == 6);
    CHECK(r.consistent);
  }
  SUBCASE("parity violation is recorded, nothing is built") {
    const auto sp = label_spider_2n(4);
    const auto r = run_experiment(sp.graph, sp.labeling, 1, 3);
    CHECK_FALSE(r.predicted.applicable);
    CHECK_FALSE(r.constructed_color_count);
    CHECK(r.consistent);
  }
}

TEST_CASE("predictions agree with construction and exhaustive search on small bases") {
  // Bases: optimal labelings (c(f) = chi_la) of small graphs, as the bound
  // theorems assume.
  std::vector<Graph> bases{build_path(3), build_path(4), build_path(5), build_star(3), build_star(4),
                           build_spider({{2, 3}}), build_cycle(4)};
  std::mt19937 rng(31);
  for (int round = 0; round < 6; ++round) {
    const std::size_t n = 4 + rng() % 2;
    bases.push_back(Graph::from_edge_list(oracle::random_connected(rng, n, n)));
  }

  std::size_t checked_exact = 0;
  std::size_t checked = 0;
  for (const Graph& g : bases) {
    const auto pairs = pairs_of(g);
    const std::size_t best = oracle::chi_la(g.vertex_count(), pairs);
    std::vector<std::vector<std::int64_t>> optimal;
    oracle::for_each_labeling(g.vertex_count(), pairs, [&](const auto& l, const auto& s) {
      if (optimal.size() < 4 && oracle::antimagic(pairs, s) && oracle::distinct(s) == best) optimal.push_back(l);
    });
    for (const auto& labels : optimal) {
      const EdgeLabeling f(labels);
      const ColorProfile p = extract_profile(g, f);
      for (std::size_t i = 1; i <= p.t(); ++i) {
        for (std::size_t s = 1; s <= 4; ++s) {
          if (g.edge_count() + s * p.n(i) > 9) continue;
          for (auto choice : {TheoremChoice::AddPendant, TheoremChoice::AddPendant2, TheoremChoice::Corollary}) {
            PredictedBounds b;
            try {
              b = predict(p, i, s, choice);
            } catch (const Error&) {
              continue;  // class index belongs to the other theorem
            }
            if (!b.applicable) continue;
            CAPTURE(g.name());
            CAPTURE(i);
            CAPTURE(s);
            CAPTURE(to_string(b.theorem_case));
            const auto aug = augment_and_label(g, f, i, s);
            CHECK(aug.local_antimagic);
            const auto solved = solve_chi_la(aug.graph).chi_la;
            CHECK(static_cast<long long>(solved) >= b.lower);
            CHECK(static_cast<long long>(solved) <= b.upper);
            CHECK(static_cast<long long>(color_count(aug.graph, aug.labeling)) <= b.upper);
            ++checked;
            if (b.exact) {
              CHECK(static_cast<long long>(solved) == *b.exact);
              ++checked_exact;
            }
          }
        }
      }
    }
  }
  CHECK(checked > 20);
  CHECK(checked_exact > 10);
  MESSAGE("cross-checked " << checked << " predictions, " << checked_exact << " exact");
}
