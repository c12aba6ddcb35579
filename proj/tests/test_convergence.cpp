#include <gtest/gtest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "support/test_support.hpp"
#include "weakhash/convergence.hpp"
#include "weakhash/error.hpp"
#include "weakhash/weakhash.hpp"

namespace weakhash {
namespace {

using testing::dirac;
using testing::line;

MeasureSequence constant_sequence() {
  const CountingMeasure mu(line(), {{Point{0.2}, 2}, {Point{1.4}, 1}});
  return MeasureSequence(std::vector<CountingMeasure>(10, mu), mu);
}

TEST(ConvergenceTest, SequenceValidation) {
  EXPECT_THROW(MeasureSequence({}, dirac(line(), {0.0})), InputError);
  EXPECT_THROW(MeasureSequence({dirac(MetricContext(2), {0.0, 0.0})}, dirac(line(), {0.0})),
               InputError);
}

TEST(ConvergenceTest, WeakHashCriterion) {
  const auto jitter = check_criterion_weakhash(testing::jitter_sequence(), 0.05);
  EXPECT_TRUE(jitter.converged);
  ASSERT_EQ(jitter.trace.size(), 100u);
  // Independent brute-force value for k = 100.
  EXPECT_NEAR(jitter.trace.back()[0], 0.008963041230503234, 1e-14);

  const auto constant = check_criterion_weakhash(constant_sequence(), 0.05);
  EXPECT_TRUE(constant.converged);
  for (const auto& row : constant.trace) EXPECT_EQ(row[0], 0.0);

  const auto escape = check_criterion_weakhash(testing::mass_escape_sequence(), 0.05);
  EXPECT_FALSE(escape.converged);
  for (const auto& row : escape.trace) EXPECT_EQ(row[0], 0.5);

  EXPECT_THROW((void)check_criterion_weakhash(constant_sequence(), 0.0), InputError);
}

TEST(ConvergenceTest, WeakHashCriterionRejectsRisingTail) {
  // Final term is close, but the tail jumps up and back down.
  std::vector<CountingMeasure> terms(12, dirac(line(), {0.5}));
  terms[10] = dirac(line(), {3.0});
  const MeasureSequence seq(std::move(terms), dirac(line(), {0.5}));
  EXPECT_FALSE(check_criterion_weakhash(seq, 0.05).converged);
}

TEST(ConvergenceTest, IntegralCriterion) {
  const std::vector<TestFunction> tent{TestFunction::tent(Point{0.5}, 1.0)};
  const auto v = check_criterion_integrals(testing::jitter_sequence(), tent, 0.05);
  EXPECT_TRUE(v.converged);
  EXPECT_NEAR(v.trace.back()[0], 0.01, 1e-12);

  const std::vector<TestFunction> zero{TestFunction::tent(Point{0.0}, 1.0, 0.0)};
  EXPECT_TRUE(check_criterion_integrals(testing::mass_escape_sequence(), zero, 0.05).converged);

  const std::vector<TestFunction> far{TestFunction::bump(Point{-5.0}, 1.0)};
  const auto disjoint = check_criterion_integrals(testing::jitter_sequence(), far, 0.05);
  for (const auto& row : disjoint.trace) EXPECT_EQ(row[0], 0.0);

  EXPECT_THROW(TestFunction("unbounded", Point{0.0}, std::numeric_limits<double>::infinity(),
                            [](const Point&) { return 1.0; }),
               InputError);
}

TEST(ConvergenceTest, ContinuityRadii) {
  const auto radii = select_continuity_radii(dirac(line(), {0.5}), 2, 2.0);
  ASSERT_EQ(radii.size(), 2u);
  EXPECT_GT(radii[0], 0.0);
  EXPECT_LT(radii[0], 1.0);
  EXPECT_GT(radii[1], 1.0);
  EXPECT_LT(radii[1], 2.0);
  for (double r : radii) EXPECT_EQ(boundary_mass(dirac(line(), {0.5}), r), 0);

  EXPECT_EQ(select_continuity_radii(CountingMeasure(line()), 3, 3.0),
            (std::vector<double>{0.5, 1.5, 2.5}));

  const CountingMeasure at_one(line(), {{Point{1.0}, 1}, {Point{-0.5}, 1}, {Point{2.5}, 2}});
  for (double r : select_continuity_radii(at_one, 4, 4.0)) EXPECT_NE(r, 1.0);

  testing::Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = testing::random_measure(rng, testing::random_context(rng), 10, 2, 5.0);
    const auto radii_r = select_continuity_radii(mu, 6, 6.0);
    for (std::size_t i = 0; i < radii_r.size(); ++i) {
      EXPECT_EQ(boundary_mass(mu, radii_r[i]), 0);
      if (i) EXPECT_LT(radii_r[i - 1], radii_r[i]);
    }
  }
  EXPECT_THROW((void)select_continuity_radii(at_one, 0, 1.0), InputError);
}

TEST(ConvergenceTest, RestrictionCriterion) {
  const std::vector<double> radii{0.9, 1.9};
  const auto jitter = check_criterion_restrictions(testing::jitter_sequence(), radii, 0.05);
  EXPECT_TRUE(jitter.converged);
  EXPECT_NEAR(jitter.trace.back()[0], 0.01, 1e-12);

  const auto constant = check_criterion_restrictions(constant_sequence(), radii, 0.05);
  EXPECT_TRUE(constant.converged);

  const std::vector<double> inner{0.9};
  const auto escape = check_criterion_restrictions(testing::mass_escape_sequence(), inner, 0.05);
  EXPECT_FALSE(escape.converged);
  EXPECT_EQ(escape.trace.back()[0], 1.0);

  const std::vector<double> on_atom{0.5};
  EXPECT_THROW((void)check_criterion_restrictions(testing::jitter_sequence(), on_atom, 0.05),
               InputError);
}

TEST(ConvergenceTest, SetCriterion) {
  const std::vector<PointSet> ball{PointSet::closed_ball(Point{0.0}, 0.7)};
  const auto jitter = check_criterion_sets(testing::jitter_sequence(), ball, 0.05);
  EXPECT_TRUE(jitter.converged);
  // 0.5 + 1/k <= 0.7 iff k >= 5.
  for (std::size_t k = 0; k < jitter.trace.size(); ++k) {
    EXPECT_EQ(jitter.trace[k][0], k + 1 >= 5 ? 0.0 : 1.0) << "k = " << k + 1;
  }

  const std::vector<PointSet> far{PointSet::box(Point{-9.0}, Point{-8.0})};
  EXPECT_TRUE(check_criterion_sets(testing::mass_escape_sequence(), far, 0.05).converged);

  const std::vector<PointSet> unit{PointSet::closed_ball(Point{0.0}, 1.0)};
  EXPECT_FALSE(check_criterion_sets(testing::mass_escape_sequence(), unit, 0.05).converged);

  const std::vector<PointSet> touching{PointSet::closed_ball(Point{0.0}, 0.5)};
  EXPECT_THROW((void)check_criterion_sets(testing::jitter_sequence(), touching, 0.05),
               InputError);
  const std::vector<PointSet> unbounded{PointSet::everything()};
  EXPECT_THROW((void)check_criterion_sets(testing::jitter_sequence(), unbounded, 0.05),
               InputError);
}

TEST(ConvergenceTest, ClosedBallSetsMatchBallMasses) {
  testing::Rng rng(19);
  std::uniform_real_distribution<double> radius(0.1, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const MetricContext ctx = testing::random_context(rng);
    const auto mu = testing::random_measure(rng, ctx, 6);
    const double r = radius(rng);
    EXPECT_EQ(set_mass(mu, PointSet::closed_ball(ctx.origin(), r)),
              ball_mass(mu, r) + boundary_mass(mu, r));
  }
}

TEST(ConvergenceTest, Concordance) {
  const testing::CriteriaBattery battery;
  for (const auto& v : battery.run(testing::jitter_sequence())) {
    EXPECT_TRUE(v.converged) << criterion_name(v.criterion);
  }
  for (const auto& seq : {testing::mass_escape_sequence(), testing::extra_atom_sequence()}) {
    for (const auto& v : battery.run(seq)) {
      EXPECT_FALSE(v.converged) << criterion_name(v.criterion);
    }
  }
}

TEST(ConvergenceTest, VerdictTable) {
  const testing::CriteriaBattery battery;
  const auto verdicts = battery.run(testing::jitter_sequence(4));
  std::ostringstream os;
  write_verdict_table(os, verdicts);
  const std::string table = os.str();
  EXPECT_EQ(table.rfind("term\tweakhash\tintegrals\trestrictions\tsets\n", 0), 0u);
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 6);
}

TEST(NeighborhoodTest, Membership) {
  const CountingMeasure centre(line(), {{Point{0.5}, 1}, {Point{2.0}, 2}});
  NeighborhoodSpec spec{centre, 0.5,
                        {PointSet::closed_ball(Point{0.5}, 0.25),
                         PointSet::box(Point{1.5}, Point{2.5})},
                        {1.0, 3.0}};
  EXPECT_TRUE(basis_neighborhood_contains(centre, spec));

  const CountingMeasure on_sphere(line(), {{Point{0.5}, 1}, {Point{2.0}, 2}, {Point{-1.0}, 1}});
  EXPECT_FALSE(basis_neighborhood_contains(on_sphere, spec));

  const CountingMeasure heavier(line(), {{Point{0.5}, 2}, {Point{2.0}, 2}});
  EXPECT_FALSE(basis_neighborhood_contains(heavier, spec));

  // Losing mass inside F_i is allowed by the one-sided condition, but the
  // closed-ball count still changes.
  const CountingMeasure lighter(line(), {{Point{0.45}, 1}, {Point{2.0}, 1}});
  EXPECT_FALSE(basis_neighborhood_contains(lighter, spec));
  NeighborhoodSpec sets_only{centre, 0.5, spec.closed_sets, {}};
  EXPECT_TRUE(basis_neighborhood_contains(lighter, sets_only));

  NeighborhoodSpec bad{centre, 0.5, {}, {2.0}};
  EXPECT_THROW((void)basis_neighborhood_contains(centre, bad), InputError);
}

}  // namespace
}  // namespace weakhash
