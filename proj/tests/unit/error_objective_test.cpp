#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "ivalid/error_objective.hpp"
#include "ivalid/estimators/basic.hpp"
#include "ivalid/estimators/gradient_descent.hpp"
#include "models.hpp"
#include "samplers.hpp"

using namespace ivalid;
using ivalid::testing::identity_objective;

namespace {

std::vector<double> sample(std::mt19937_64& rng, const IntervalBox& b) {
  std::vector<double> p;
  for (const auto& c : b) {
    std::uniform_real_distribution<double> u(c.lb(), c.ub());
    p.push_back(c.is_point() ? c.lb() : std::fmin(u(rng), c.ub()));
  }
  return p;
}

IntervalBox random_sub_box(std::mt19937_64& rng, const IntervalBox& b) {
  std::vector<Interval> c;
  for (const auto& comp : b) {
    std::uniform_real_distribution<double> u(comp.lb(), comp.ub());
    double p = comp.is_point() ? comp.lb() : u(rng);
    double q = comp.is_point() ? comp.lb() : u(rng);
    if (p > q) std::swap(p, q);
    c.emplace_back(p, q);
  }
  return IntervalBox(std::move(c));
}

// Containment of error_point in both enclosures at random sub-boxes.
void check_containment(const ErrorObjective& obj, std::uint64_t seed, int boxes, int points) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < boxes; ++i) {
    const IntervalBox X = random_sub_box(rng, obj.param_box());
    const IntervalBox E = random_sub_box(rng, obj.noise_box());
    const Interval nat = obj.error_box(X, E);
    const Interval mv = obj.error_box_mean_value(X, E);
    EXPECT_GE(nat.lb(), 0.0);
    EXPECT_TRUE(mv.subset_of(nat)) << mv << " vs " << nat;
    for (int k = 0; k < points; ++k) {
      const auto x = sample(rng, X);
      const auto e = sample(rng, E);
      const double err = obj.error_point(x, e);
      ASSERT_TRUE(nat.contains(err)) << err << " not in " << nat;
      ASSERT_TRUE(mv.contains(err)) << err << " not in " << mv;
    }
    EXPECT_TRUE(nat.contains(obj.error_point(X.midpoint(), E.midpoint())));
  }
}

}  // namespace

TEST(ErrorObjective, ObserveIdentity) {
  const auto obj = identity_objective({Interval(0, 2), Interval(0, 2)},
                                      {Interval(-1, 1), Interval(-1, 1)});
  const auto y = obj.observe(std::vector<double>{1, 2}, std::vector<double>{0.1, -0.1});
  EXPECT_EQ(y, (std::vector<double>{1.1, 1.9}));
}

TEST(ErrorObjective, ObserveTrilateration) {
  const ErrorObjective obj(ivalid::testing::range_trilateration(),
                           std::make_shared<ConstantEstimator>(std::vector<double>{0, 0}, 3),
                           ivalid::testing::range_param_box(),
                           ivalid::testing::range_noise_box());
  const auto y = obj.observe(std::vector<double>{10, -9}, std::vector<double>{0, 0, 0});
  ASSERT_EQ(y.size(), 3u);
  EXPECT_EQ(y[0], 0.0);
  EXPECT_NEAR(y[1], std::sqrt(466.0), 1e-13);
  EXPECT_NEAR(y[2], std::sqrt(706.0), 1e-13);
}

TEST(ErrorObjective, ErrorPointExamples) {
  const auto obj = identity_objective({Interval(0, 2), Interval(0, 2)},
                                      {Interval(-1, 1), Interval(-1, 1)});
  EXPECT_NEAR(obj.error_point(std::vector<double>{1, 2}, std::vector<double>{0.1, -0.1}),
              std::sqrt(0.02), 1e-15);
  EXPECT_EQ(obj.error_point(std::vector<double>{1, 2}, std::vector<double>{0, 0}), 0.0);

  const ErrorObjective constant(std::make_shared<IdentityObservation>(2),
                                std::make_shared<ConstantEstimator>(std::vector<double>{0, 0}, 2),
                                IntervalBox{Interval(0, 5), Interval(0, 5)},
                                IntervalBox{Interval(-1, 1), Interval(-1, 1)});
  EXPECT_EQ(constant.error_point(std::vector<double>{3, 4}, std::vector<double>{0.7, -0.3}), 5.0);
}

TEST(ErrorObjective, ErrorBoxExamples) {
  const IntervalBox E{Interval(-0.1, 0.1), Interval(-0.1, 0.1)};
  const auto obj = identity_objective({Interval(0, 2), Interval(0, 2)}, E);
  const IntervalBox X = IntervalBox::point(std::vector<double>{1, 2});
  const Interval r = obj.error_box(X, E);
  EXPECT_LE(r.lb(), 0.0 + 1e-15);
  EXPECT_GE(r.ub(), std::sqrt(0.02));

  const IntervalBox zero = IntervalBox::point(std::vector<double>{0, 0});
  const Interval z = obj.error_box(X, zero);
  EXPECT_EQ(z.lb(), 0.0);
  EXPECT_LE(z.ub(), 1e-300);
}

TEST(ErrorObjective, ObjectiveIsNegatedError) {
  const IntervalBox E{Interval(-0.1, 0.1), Interval(-0.1, 0.1)};
  const auto obj = identity_objective({Interval(0, 1), Interval(0, 1)}, E);
  const IntervalBox B = obj.search_box();
  const Interval f = obj.objective_box(B);
  const Interval eps = obj.error_enclosure(obj.param_box(), E);
  EXPECT_EQ(f.lb(), -eps.ub());
  EXPECT_EQ(f.ub(), -eps.lb());
  EXPECT_EQ(obj.objective_point(std::vector<double>{0.5, 0.5, 0.1, 0.0}),
            -obj.error_point(std::vector<double>{0.5, 0.5}, std::vector<double>{0.1, 0.0}));
  EXPECT_THROW(obj.objective_box(obj.param_box()), std::invalid_argument);
}

TEST(ErrorObjective, SplitDimsAreParameterComponents) {
  const ErrorObjective obj(ivalid::testing::range_trilateration(),
                           std::make_shared<ConstantEstimator>(std::vector<double>{0, 0}, 3),
                           ivalid::testing::range_param_box(),
                           ivalid::testing::range_noise_box());
  EXPECT_EQ(obj.split_dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(obj.search_box().dim(), 5u);
}

TEST(ErrorObjective, DimensionMismatch) {
  EXPECT_THROW(ErrorObjective(std::make_shared<IdentityObservation>(2),
                              std::make_shared<IdentityEstimator>(3),
                              IntervalBox{Interval(0, 1), Interval(0, 1)},
                              IntervalBox{Interval(0, 1), Interval(0, 1)}),
               std::invalid_argument);
  const auto obj = identity_objective({Interval(0, 1), Interval(0, 1)},
                                      {Interval(0, 1), Interval(0, 1)});
  EXPECT_THROW(obj.error_point(std::vector<double>{1}, std::vector<double>{0, 0}),
               std::invalid_argument);
}

TEST(ErrorObjective, MeanValueIsExactForIdentity) {
  const IntervalBox E{Interval(-0.1, 0.1), Interval(-0.1, 0.1)};
  const auto obj = identity_objective({Interval(0, 1), Interval(0, 1)}, E);
  const Interval mv = obj.error_box_mean_value(obj.param_box(), E);
  EXPECT_GE(mv.ub(), std::sqrt(0.02));
  EXPECT_LE(mv.ub(), std::sqrt(0.02) + 1e-15);
  EXPECT_GT(obj.error_box(obj.param_box(), E).ub(), 1.5);
}

TEST(ErrorObjectiveProperty, ContainmentIdentity) {
  check_containment(identity_objective({Interval(-3, 3), Interval(0, 1)},
                                       {Interval(-0.5, 0.5), Interval(-0.1, 0.2)}),
                    31, 500, 20);
}

TEST(ErrorObjectiveProperty, ContainmentTrilaterationGd) {
  auto g = ivalid::testing::range_trilateration();
  const ErrorObjective obj(g,
                           std::make_shared<GradientDescentEstimator>(
                               g, GradientDescentConfig{50, 0.01, {15.0, 15.0}}),
                           ivalid::testing::range_param_box(),
                           ivalid::testing::range_noise_box());
  check_containment(obj, 32, 300, 10);
}

TEST(ErrorObjectiveProperty, ContainmentTrilaterationMlp) {
  std::mt19937_64 rng(33);
  auto g = ivalid::testing::range_trilateration();
  for (int m = 0; m < 5; ++m) {
    auto net = std::make_shared<const MlpModel>(ivalid::testing::random_mlp(rng, 3, 2));
    const ErrorObjective obj(g, std::make_shared<MlpEstimator>(net),
                             ivalid::testing::range_param_box(),
                             ivalid::testing::range_noise_box());
    check_containment(obj, 34 + m, 200, 10);
  }
}

TEST(ErrorObjectiveProperty, NaturalIsIsotone) {
  std::mt19937_64 rng(35);
  const auto obj = identity_objective({Interval(-3, 3), Interval(0, 1)},
                                      {Interval(-0.5, 0.5), Interval(-0.1, 0.2)});
  for (int i = 0; i < 1000; ++i) {
    const IntervalBox X = random_sub_box(rng, obj.param_box());
    const IntervalBox E = random_sub_box(rng, obj.noise_box());
    const IntervalBox Xs = random_sub_box(rng, X);
    const IntervalBox Es = random_sub_box(rng, E);
    EXPECT_TRUE(obj.error_box(Xs, Es).subset_of(obj.error_box(X, E)));
  }
}

TEST(InclusionForm, Names) {
  EXPECT_EQ(parse_inclusion_form("natural"), InclusionForm::natural);
  EXPECT_EQ(parse_inclusion_form(to_string(InclusionForm::mean_value)), InclusionForm::mean_value);
  EXPECT_THROW(parse_inclusion_form("taylor"), std::invalid_argument);
}
