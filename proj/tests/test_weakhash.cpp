#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/suites.hpp"
#include "support/test_support.hpp"
#include "weakhash/error.hpp"
#include "weakhash/prohorov.hpp"
#include "weakhash/weakhash.hpp"

namespace weakhash {
namespace {

using testing::dirac;
using testing::line;

const CountingMeasure kEmpty{line()};

CountingMeasure delta0() { return dirac(line(), {0.0}); }
CountingMeasure delta_half() { return dirac(line(), {0.5}); }

TEST(ProfileTest, Breakpoints) {
  EXPECT_EQ(profile_breakpoints(delta0(), delta_half()), std::vector<double>{0.5});
  const CountingMeasure mu(line(), {{Point{-2.0}, 1}, {Point{0.5}, 2}, {Point{2.0}, 1}});
  EXPECT_EQ(profile_breakpoints(mu, mu), (std::vector<double>{0.5, 2.0}));
  EXPECT_TRUE(profile_breakpoints(kEmpty, kEmpty).empty());
}

TEST(ProfileTest, CounterexampleProfile) {
  const StepProfile p = prohorov_profile(delta0(), delta_half());
  EXPECT_EQ(p.breakpoints, std::vector<double>{0.5});
  EXPECT_EQ(p.values, (std::vector<double>{1.0, 0.5}));
  EXPECT_EQ(p.value_at(0.25), 1.0);
  EXPECT_EQ(p.value_at(0.5), 1.0);  // open ball: the atom at 0.5 is outside B_0.5
  EXPECT_EQ(p.value_at(0.75), 0.5);
  EXPECT_THROW((void)p.value_at(0.0), InputError);
}

TEST(ProfileTest, ProfileIsNotMonotone) {
  const StepProfile p = prohorov_profile(delta0(), delta_half());
  EXPECT_LT(p.value_at(0.6), p.value_at(0.4));
}

TEST(ProfileTest, ConstantProfiles) {
  const CountingMeasure mu(line(), {{Point{0.0}, 1}, {Point{1.0}, 2}});
  EXPECT_EQ(prohorov_profile(mu, mu), (StepProfile{{}, {0.0}}));
  EXPECT_EQ(prohorov_profile(delta0(), kEmpty), (StepProfile{{}, {1.0}}));
}

TEST(WeakHashTest, ClosedForms) {
  EXPECT_NEAR(weak_hash_distance(delta0(), delta_half()), 0.5 - std::exp(-0.5) / 6, 1e-15);
  EXPECT_EQ(weak_hash_distance(delta_half(), delta_half()), 0.0);
  EXPECT_EQ(weak_hash_distance(delta0(), kEmpty), 0.5);
}

TEST(WeakHashTest, FrozenTwoDimensionalInstance) {
  // Value from an independent brute-force script.
  const MetricContext plane(2);
  const CountingMeasure mu(plane, {{Point{0.0, 0.0}, 2}, {Point{1.0, 0.0}, 1}});
  const CountingMeasure nu(plane, {{Point{0.0, 0.3}, 1}, {Point{3.0, 0.0}, 1}});
  EXPECT_NEAR(weak_hash_distance(mu, nu), 0.604510203414954, 1e-14);

  const CountingMeasure a(line(), {{Point{0.0}, 1}, {Point{-1.0}, 2}, {Point{1.5}, 1}});
  const CountingMeasure b(line(), {{Point{0.25}, 1}, {Point{-1.25}, 1}, {Point{2.0}, 3}});
  EXPECT_NEAR(weak_hash_distance(a, b), 0.4274743981732916, 1e-14);
}

TEST(WeakHashTest, Truncated) {
  EXPECT_NEAR(truncated_weak_hash(delta0(), delta_half(), 0.5), 0.5 * (1 - std::exp(-0.5)),
              1e-15);
  EXPECT_EQ(truncated_weak_hash(delta_half(), delta_half(), 3.0), 0.0);
  EXPECT_THROW((void)truncated_weak_hash(delta0(), delta_half(), 0.0), InputError);

  testing::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const MetricContext ctx = testing::random_context(rng);
    const auto mu = testing::random_measure(rng, ctx, 5, 3, 4.0);
    const auto nu = testing::random_measure(rng, ctx, 5, 3, 4.0);
    EXPECT_NEAR(truncated_weak_hash(mu, nu, 50.0), weak_hash_distance(mu, nu), 1e-12);
  }
}

TEST(WeakHashTest, TotalVariation) {
  EXPECT_EQ(profile_total_variation(delta0(), delta_half(), 1.0), 0.5);
  // Jump at R itself is outside (0, R].
  EXPECT_EQ(profile_total_variation(delta0(), delta_half(), 0.5), 0.0);
  const CountingMeasure mu(line(), {{Point{0.3}, 1}, {Point{-0.8}, 2}});
  EXPECT_EQ(profile_total_variation(mu, mu, 5.0), 0.0);
  EXPECT_EQ(profile_total_variation(delta0(), kEmpty, 1.0), 0.0);
  EXPECT_THROW((void)profile_total_variation(delta0(), kEmpty, -1.0), InputError);
}

TEST(WeakHashTest, ProfileCsv) {
  std::ostringstream os;
  write_profile_csv(os, prohorov_profile(delta0(), delta_half()));
  EXPECT_EQ(os.str(),
            "r_lo,r_hi,prohorov,transformed\n"
            "0,0.5,1,0.5\n"
            "0.5,inf,0.5,0.333333333333333\n");
}

TEST(WeakHashTest, QuadratureCrossCheck) {
  EXPECT_NEAR(testing::weak_hash_by_quadrature(delta0(), delta_half()),
              weak_hash_distance(delta0(), delta_half()), 1e-9);
  testing::Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const auto mu = testing::random_measure(rng, line(), 3, 2, 3.0);
    const auto nu = testing::random_measure(rng, line(), 3, 2, 3.0);
    EXPECT_NEAR(testing::weak_hash_by_quadrature(mu, nu), weak_hash_distance(mu, nu), 1e-9)
        << "trial " << trial;
  }
}

TEST(WeakHashProperty, ProfileMatchesDirectSampling) {
  testing::Rng rng(77);
  std::uniform_real_distribution<double> radius(1e-6, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const MetricContext ctx = testing::random_context(rng);
    const auto mu = testing::random_measure(rng, ctx, 5, 3, 3.0);
    const auto nu = testing::random_measure(rng, ctx, 5, 3, 3.0);
    const StepProfile p = prohorov_profile(mu, nu);

    const auto radii = profile_breakpoints(mu, nu);
    for (double b : p.breakpoints) {
      EXPECT_TRUE(std::binary_search(radii.begin(), radii.end(), b));
    }
    for (std::size_t k = 0; k + 1 < p.values.size(); ++k) {
      EXPECT_NE(p.values[k], p.values[k + 1]);
    }
    for (double c : p.values) EXPECT_GE(c, 0.0);

    std::vector<double> probes;
    for (int s = 0; s < 50; ++s) probes.push_back(radius(rng));
    probes.insert(probes.end(), radii.begin(), radii.end());  // right endpoints
    for (double r : probes) {
      EXPECT_EQ(p.value_at(r), prohorov_distance(restriction(mu, r), restriction(nu, r)))
          << "r = " << r;
    }
  }
}

TEST(WeakHashProperty, MetricAxiomsAndRange) {
  testing::Rng rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const MetricContext ctx = testing::random_context(rng);
    const auto a = testing::random_measure(rng, ctx, 6);
    const auto b = testing::random_measure(rng, ctx, 6);
    const auto c = testing::random_measure(rng, ctx, 6);
    const double ab = weak_hash_distance(a, b);
    EXPECT_EQ(ab, weak_hash_distance(b, a));
    EXPECT_LE(weak_hash_distance(a, c), ab + weak_hash_distance(b, c) + 1e-12);
    EXPECT_EQ(ab == 0.0, a == b);
    EXPECT_GE(ab, 0.0);
    EXPECT_LT(ab, 1.0);
  }
}

TEST(WeakHashProperty, VariationBound) {
  testing::Rng rng(555);
  const auto r = testing::variation_suite(rng, 500);
  EXPECT_EQ(r.instances, 1500);
  EXPECT_EQ(r.violations, 0);
}

}  // namespace
}  // namespace weakhash
