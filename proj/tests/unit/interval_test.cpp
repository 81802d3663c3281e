#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "directed.hpp"
#include "ivalid/interval.hpp"
#include "samplers.hpp"

using ivalid::Interval;
using ivalid::testing::IntervalSampler;
namespace t = ivalid::testing;

namespace {

constexpr int kTrials = 10'000;

void expect_encloses(const Interval& r, const t::Bracket& exact) {
  EXPECT_LE(r.lb(), exact.down) << r;
  EXPECT_GE(r.ub(), exact.up) << r;
}

}  // namespace

TEST(Interval, Construction) {
  const Interval a(1.0, 2.0);
  EXPECT_EQ(a.lb(), 1.0);
  EXPECT_EQ(a.ub(), 2.0);
  const Interval p(3.0, 3.0);
  EXPECT_TRUE(p.is_point());
  EXPECT_EQ(p.width(), 0.0);
  EXPECT_THROW(Interval(2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Interval(std::nan(""), 1.0), std::invalid_argument);
  EXPECT_THROW(Interval(0.0, std::nan("")), std::invalid_argument);
}

TEST(Interval, NoRoundingAtConstruction) {
  const Interval a(0.1, 0.3);
  EXPECT_EQ(a.lb(), 0.1);
  EXPECT_EQ(a.ub(), 0.3);
}

TEST(Interval, ArithmeticExamples) {
  EXPECT_EQ(Interval(1, 2) + Interval(3, 4), Interval(4, 6));
  EXPECT_EQ(Interval(-1, 2) * Interval(3, 4), Interval(-4, 8));
  EXPECT_EQ(-Interval(-1, 2), Interval(-2, 1));
  EXPECT_EQ(Interval(1, 2) - Interval(3, 4), Interval(-3, -1));
  EXPECT_EQ(Interval(1, 2) / Interval(4, 8), Interval(0.125, 0.5));
}

TEST(Interval, InexactSumIsWidened) {
  const Interval r = Interval::point(0.1) + Interval::point(0.2);
  EXPECT_LT(r.lb(), r.ub());
  EXPECT_EQ(r.ub(), std::nextafter(r.lb(), 1.0));
}

TEST(Interval, SqrExamples) {
  EXPECT_EQ(sqr(Interval(-2, 3)), Interval(0, 9));
  EXPECT_EQ(sqr(Interval(2, 3)), Interval(4, 9));
  EXPECT_EQ(sqr(Interval(-3, -2)), Interval(4, 9));
}

TEST(Interval, SqrtExamples) {
  EXPECT_EQ(sqrt(Interval(4, 9)), Interval(2, 3));
  EXPECT_EQ(sqrt(Interval(0, 0)), Interval(0, 0));
  EXPECT_EQ(sqrt(Interval(-1e-12, 4)), Interval(0, 2));
  EXPECT_THROW(sqrt(Interval(-2, -1)), std::domain_error);
}

TEST(Interval, ReluExamples) {
  EXPECT_EQ(relu(Interval(-1, 2)), Interval(0, 2));
  EXPECT_EQ(relu(Interval(1, 2)), Interval(1, 2));
  EXPECT_EQ(relu(Interval(-3, -1)), Interval(0, 0));
}

TEST(Interval, WidthAndHull) {
  EXPECT_EQ(width(Interval(4, 6)), 2.0);
  EXPECT_EQ(hull(Interval(0, 1), Interval(3, 4)), Interval(0, 4));
  EXPECT_FALSE(intersect(Interval(0, 1), Interval(2, 3)).has_value());
  EXPECT_EQ(*intersect(Interval(0, 2), Interval(1, 3)), Interval(1, 2));
}

TEST(Interval, WidthRoundsUp) {
  const Interval a(-0.1, 0.2);
  EXPECT_GE(a.width(), t::sub_directed(0.2, -0.1).up);
}

TEST(Interval, DivisionByIntervalContainingZero) {
  const Interval r = Interval(1, 2) / Interval(-1, 1);
  EXPECT_EQ(r.lb(), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(r.ub(), std::numeric_limits<double>::infinity());
}

TEST(Interval, Printing) {
  std::ostringstream os;
  os << Interval(1, 2);
  EXPECT_EQ(os.str(), "[1, 2]");
}

TEST(IntervalProperty, FundamentalInclusionBinary) {
  IntervalSampler s(1);
  for (int i = 0; i < kTrials; ++i) {
    const Interval a = s.interval();
    const Interval b = s.interval();
    const double x = s.member(a);
    const double y = s.member(b);
    expect_encloses(a + b, t::add_directed(x, y));
    expect_encloses(a - b, t::sub_directed(x, y));
    expect_encloses(a * b, t::mul_directed(x, y));
    expect_encloses(-a, {-x, -x});
    if (!b.contains_zero()) expect_encloses(a / b, t::div_directed(x, y));
  }
}

TEST(IntervalProperty, FundamentalInclusionUnary) {
  IntervalSampler s(2);
  for (int i = 0; i < kTrials; ++i) {
    const Interval a = s.interval();
    const double x = s.member(a);
    expect_encloses(sqr(a), t::mul_directed(x, x));
    EXPECT_TRUE(relu(a).contains(x > 0.0 ? x : 0.0));
    const Interval p = s.nonnegative();
    expect_encloses(sqrt(p), t::sqrt_directed(s.member(p)));
  }
}

// Directed rounding gives the tightest float enclosure of a point op, so the
// endpoint formulas must reproduce it exactly.
TEST(IntervalProperty, EndpointBoundsAreTight) {
  IntervalSampler s(3);
  for (int i = 0; i < kTrials; ++i) {
    const double x = s.number();
    const double y = s.number();
    const Interval px = Interval::point(x);
    const Interval py = Interval::point(y);
    const auto sum = t::add_directed(x, y);
    EXPECT_EQ(px + py, Interval(sum.down, sum.up));
    const auto prod = t::mul_directed(x, y);
    EXPECT_EQ(px * py, Interval(prod.down, prod.up));
    if (y != 0.0) {
      const auto q = t::div_directed(x, y);
      EXPECT_EQ(px / py, Interval(q.down, q.up));
    }
    const double ax = std::fabs(x);
    const auto r = t::sqrt_directed(ax);
    EXPECT_EQ(sqrt(Interval::point(ax)), Interval(r.down, r.up));
  }
}

TEST(IntervalProperty, Isotonicity) {
  IntervalSampler s(4);
  for (int i = 0; i < kTrials; ++i) {
    const Interval a = s.interval();
    const Interval b = s.interval();
    const Interval a_in = Interval::point(s.member(a));
    const Interval b_in = hull(Interval::point(s.member(b)), Interval::point(s.member(b)));
    EXPECT_TRUE((a_in + b_in).subset_of(a + b));
    EXPECT_TRUE((a_in - b_in).subset_of(a - b));
    EXPECT_TRUE((a_in * b_in).subset_of(a * b));
    EXPECT_TRUE(sqr(a_in).subset_of(sqr(a)));
    EXPECT_TRUE(relu(a_in).subset_of(relu(a)));
    const Interval p = s.nonnegative();
    EXPECT_TRUE(sqrt(Interval::point(s.member(p))).subset_of(sqrt(p)));
  }
}

TEST(IntervalProperty, SqrTighterThanProduct) {
  IntervalSampler s(5);
  for (int i = 0; i < kTrials; ++i) {
    const Interval a = s.interval();
    EXPECT_TRUE(sqr(a).subset_of(a * a));
    EXPECT_GE(sqr(a).lb(), 0.0);
  }
}

TEST(IntervalProperty, ReluExactImage) {
  IntervalSampler s(6);
  for (int i = 0; i < 1000; ++i) {
    const Interval a = s.interval();
    const Interval r = relu(a);
    for (int k = 0; k < 100; ++k) {
      const double x = s.member(a);
      EXPECT_TRUE(r.contains(std::fmax(0.0, x)));
    }
    EXPECT_EQ(r.lb(), std::fmax(0.0, a.lb()));
    EXPECT_EQ(r.ub(), std::fmax(0.0, a.ub()));
  }
}

TEST(IntervalProperty, SqrtOfSquareContainsAbs) {
  IntervalSampler s(7);
  for (int i = 0; i < kTrials; ++i) {
    const Interval a = s.interval();
    const double x = s.member(a);
    EXPECT_TRUE(sqrt(sqr(a)).contains(std::fabs(x)));
  }
}
