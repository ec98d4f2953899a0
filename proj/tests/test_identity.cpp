#include "mcshane/identity.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace mcshane;

namespace {

const double kFrickeZ = 8 + std::sqrt(32.0);

SumOptions by_eps(double eps, unsigned threads = 1) {
  SumOptions o;
  o.eps = eps;
  o.threads = threads;
  return o;
}

SumOptions by_depth(int depth, unsigned threads = 1) {
  SumOptions o;
  o.depth = depth;
  o.threads = threads;
  return o;
}

double nonsimple_fraction(const std::vector<ScanPoint>& points) {
  return static_cast<double>(count_verdicts(points).non_simple) / static_cast<double>(points.size());
}

}  // namespace

TEST_CASE("terms of the identity") {
  CHECK(term(Scalar(3)) == doctest::Approx(0.1273220).epsilon(1e-6));
  CHECK(term(Scalar(6)) == doctest::Approx(0.0285955).epsilon(1e-5));
  CHECK(term(Scalar(3.0)) == term(Scalar(3)));
  double last = 0.5;
  for (int t = 3; t < 200; ++t) {
    const double v = term(Scalar(t));
    REQUIRE(v < last);
    REQUIRE(v > 0);
    last = v;
  }
  CHECK(term(Scalar(std::numeric_limits<double>::infinity())) == 0);
  CHECK(term(Scalar(1e100)) > 0);
  CHECK_THROWS_AS(term(Scalar(2)), DomainError);
  CHECK_THROWS_AS(term(Scalar(-5)), DomainError);
}

TEST_CASE("pairwise summation") {
  const std::vector<double> v{1e16, 1, -1e16, 1};
  CHECK(pairwise_sum(v) == pairwise_sum(std::vector<double>(v)));
  CHECK(pairwise_sum(std::vector<double>{}) == 0);
  std::vector<double> many(1000, 0.1);
  CHECK(pairwise_sum(many) == doctest::Approx(100).epsilon(1e-14));
}

TEST_CASE("depth 0 counts the three root slopes") {
  const IdentityReport r = mcshane_sum(modular_torus(), by_depth(0));
  CHECK(r.terms == 3);
  CHECK(r.sum == doctest::Approx(0.3819660).epsilon(1e-6));
  CHECK(r.sum < 0.5);
}

TEST_CASE("options are validated") {
  CHECK_THROWS_AS(mcshane_sum(modular_torus(), SumOptions{}), DomainError);
  SumOptions both = by_eps(1e-6);
  both.depth = 3;
  CHECK_THROWS_AS(mcshane_sum(modular_torus(), both), DomainError);
  CHECK_THROWS_AS(mcshane_sum(modular_torus(), by_eps(0)), DomainError);
  CHECK_THROWS_AS(mcshane_sum(modular_torus(), by_depth(-1)), DomainError);
}

TEST_CASE("the identity sums to one half") {
  const IdentityReport m = mcshane_sum(modular_torus(), by_eps(1e-12));
  CHECK(std::abs(m.sum - 0.5) <= 1e-6);
  CHECK(m.residual == doctest::Approx(std::abs(m.sum - 0.5)));
  CHECK(m.largest_pruned < 1e-12);
  const PuncturedTorusGroup f = from_traces(Scalar(4), Scalar(4), Scalar(kFrickeZ));
  const IdentityReport r = mcshane_sum(f, by_eps(1e-12));
  CHECK(std::abs(r.sum - 0.5) <= 1e-6);
}

TEST_CASE("partial sums undercount and converge monotonically") {
  for (const PuncturedTorusGroup& g :
       {modular_torus(), from_traces(Scalar(4), Scalar(4), Scalar(kFrickeZ)), from_traces(Scalar(3), Scalar(4), Scalar(6 + std::sqrt(11.0)))}) {
    double last = 0;
    for (int d = 0; d <= 10; ++d) {
      const IdentityReport r = mcshane_sum(g, by_depth(d));
      REQUIRE(r.sum <= 0.5 + 1e-9);
      REQUIRE(r.sum > last);
      last = r.sum;
    }
    for (double eps : {1e-4, 1e-6, 1e-8}) {
      const IdentityReport r = mcshane_sum(g, by_eps(eps));
      REQUIRE(r.sum <= 0.5 + 1e-9);
      REQUIRE(r.sum > last - 1e-3);
    }
  }
}

TEST_CASE("results are bit-identical across thread counts") {
  const PuncturedTorusGroup g = modular_torus();
  const IdentityReport one = mcshane_sum(g, by_eps(1e-10, 1));
  for (unsigned t : {2u, 3u, 8u}) {
    const IdentityReport many = mcshane_sum(g, by_eps(1e-10, t));
    CHECK(many.sum == one.sum);
    CHECK(many.terms == one.terms);
  }
  const IdentityReport d1 = mcshane_sum(g, by_depth(9, 1));
  CHECK(mcshane_sum(g, by_depth(9, 4)).sum == d1.sum);
}

TEST_CASE("deadzone coverage: widths add up to twice the partial sum") {
  const PuncturedTorusGroup g = modular_torus();
  double last = 0;
  for (int d = 0; d <= 6; ++d) {
    const CoverageReport r = gap_measure(g, d, 0);
    CHECK(r.overlaps == 0);
    CHECK(r.deadzones.size() == static_cast<std::size_t>(6) << d);
    CHECK(std::abs(r.total_width - r.identity_twice) <= 1e-9);
    CHECK(r.identity_twice == doctest::Approx(2 * mcshane_sum(g, by_depth(d)).sum).epsilon(1e-12));
    CHECK(r.total_width > last);
    if (d >= 3) CHECK(r.total_width >= 0.99);
    last = r.total_width;
    for (std::size_t i = 1; i < r.deadzones.size(); ++i)
      REQUIRE(compare(r.deadzones[i - 1].right, r.deadzones[i].left) <= 0);
    for (const CoverageEntry& e : r.deadzones) {
      REQUIRE(compare(e.center, BoundaryPoint(0)) >= 0);
      REQUIRE(compare(e.center, BoundaryPoint(1)) < 0);
    }
  }
}

TEST_CASE("coverage on a Fricke group and with center simplicity checks") {
  const PuncturedTorusGroup f = from_traces(Scalar(4), Scalar(4), Scalar(kFrickeZ));
  const CoverageReport r = gap_measure(f, 5, 0);
  CHECK(r.overlaps == 0);
  CHECK(std::abs(r.total_width - r.identity_twice) <= 1e-9);
  const CoverageReport checked = gap_measure(modular_torus(), 2, 8);
  CHECK(checked.radius == 8);
  CHECK(checked.overlaps == 0);
}

TEST_CASE("simplicity scan") {
  const PuncturedTorusGroup g = modular_torus();
  const CoverageReport cov = gap_measure(g, 4, 0);
  const Scalar step(Rational(1, 200));
  const std::vector<ScanPoint> coarse = scan_simplicity(g, step, 6, cov.deadzones);
  const std::vector<ScanPoint> fine = scan_simplicity(g, step, 12, cov.deadzones, 2);
  REQUIRE(coarse.size() == 200);
  REQUIRE(fine.size() == 200);
  CHECK(nonsimple_fraction(fine) >= nonsimple_fraction(coarse));
  CHECK(nonsimple_fraction(fine) > 0.9);
  CHECK(coarse[0].verdict == ScanVerdict::CuspCenter);
  CHECK(coarse[0].deadzone_id >= 0);
  const ScanCounts counts = count_verdicts(fine);
  CHECK(counts.non_simple + counts.no_crossing + counts.cusp_center == 200);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    if (coarse[i].verdict == ScanVerdict::NonSimple) REQUIRE(fine[i].verdict == ScanVerdict::NonSimple);
    if (fine[i].verdict == ScanVerdict::NonSimple) REQUIRE(fine[i].witness_length <= 12);
    if (fine[i].verdict == ScanVerdict::NoCrossing) REQUIRE(fine[i].witness_length == 0);
  }
  CHECK(std::string(to_string(ScanVerdict::NoCrossing)) == "no_crossing");
  CHECK_THROWS_AS(scan_simplicity(g, Scalar(0), 6, cov.deadzones), DomainError);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) REQUIRE(h == 1);
  parallel_for(0, 4, [&](std::size_t) { FAIL("no work expected"); });
}
