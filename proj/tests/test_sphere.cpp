#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "weakmult/descriptor.hpp"
#include "weakmult/norms.hpp"
#include "weakmult/restriction.hpp"
#include "weakmult/sphere.hpp"

using namespace weakmult;
using std::numbers::pi;

namespace {

// pinned from a verified run: 50 bumps, seed 7, d = 2, q = 6/5, 64 nodes
constexpr double RESTRICTION_MAX_SEED7 = 1.5074543827198372;

// int_{S^2} x^a y^b z^c dsigma = 2 G(A) G(B) G(C) / G(A + B + C), A = (a+1)/2, ...,
// zero unless a, b, c are all even.
double sphere_monomial(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  const double A = (a + 1) / 2.0, B = (b + 1) / 2.0, C = (c + 1) / 2.0;
  return 2.0 * std::tgamma(A) * std::tgamma(B) * std::tgamma(C) / std::tgamma(A + B + C);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule against tabulated values") {
  const auto rule = gauss_legendre(20);
  REQUIRE(rule.nodes.size() == 20);
  const auto& x = boost::math::quadrature::gauss<double, 20>::abscissa();
  const auto& w = boost::math::quadrature::gauss<double, 20>::weights();
  // the rule lists nodes in increasing order; the table holds the positive half
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(rule.nodes[10 + i] == doctest::Approx(x[i]).epsilon(1e-14));
    CHECK(rule.nodes[9 - i] == doctest::Approx(-x[i]).epsilon(1e-14));
    CHECK(rule.weights[10 + i] == doctest::Approx(w[i]).epsilon(1e-13));
  }
  const auto odd = gauss_legendre(7);
  const auto& xo = boost::math::quadrature::gauss<double, 7>::abscissa();
  CHECK(odd.nodes[3] == doctest::Approx(xo[0]).scale(1.0).epsilon(1e-15));
  CHECK(odd.nodes[6] == doctest::Approx(xo[3]).epsilon(1e-14));
}

TEST_CASE("sphere quadrature nodes and weights") {
  const SphereQuadrature s0(0, 4);
  REQUIRE(s0.size() == 2);
  CHECK(s0.node(0).size() == 1);
  CHECK(s0.node(0)[0] == -1.0);
  CHECK(s0.node(1)[0] == 1.0);
  CHECK(s0.weights()[0] == 1.0);
  CHECK(s0.weights()[1] == 1.0);

  const SphereQuadrature s1(1, 8);
  REQUIRE(s1.size() == 8);
  for (double w : s1.weights()) CHECK(w == doctest::Approx(pi / 4).epsilon(1e-15));
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(std::hypot(s1.node(i)[0], s1.node(i)[1]) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(std::abs(SphereQuadrature(1, 37).integrate([](std::span<const double>) { return 1.0; }) - 2 * pi) < 1e-14);

  const SphereQuadrature s2(2, 16);
  CHECK(s2.size() == 16 * 32);
  CHECK(s2.integrate([](std::span<const double>) { return 1.0; }) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK_THROWS_AS(SphereQuadrature(3, 8), std::invalid_argument);
  CHECK_THROWS_AS(SphereQuadrature(1, 2), std::invalid_argument);
}

TEST_CASE("exactness on S^2 monomials") {
  const int m = 8;
  const SphereQuadrature quad(2, m);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      for (int c = 0; c <= 6; ++c) {
        if (a + b + c > 2 * m - 1) continue;
        const double got = quad.integrate([&](std::span<const double> x) {
          return std::pow(x[0], a) * std::pow(x[1], b) * std::pow(x[2], c);
        });
        CHECK(got == doctest::Approx(sphere_monomial(a, b, c)).scale(1.0).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("trapezoid rule on S^1") {
  const int m = 16;
  const SphereQuadrature quad(1, m);
  for (int k = 0; k < m; ++k) {
    // int cos^k = 2 pi k! / (2^k ((k/2)!)^2) for even k, 0 for odd k
    const double exact =
        k % 2 ? 0.0 : 2 * pi * std::tgamma(k + 1.0) / (std::pow(2.0, k) * std::pow(std::tgamma(k / 2 + 1.0), 2));
    const double got = quad.integrate([&](std::span<const double> x) { return std::pow(x[0], k); });
    CHECK(got == doctest::Approx(exact).scale(1.0).epsilon(1e-13));
  }
}

TEST_CASE("Zygmund functional of constants") {
  const SphereQuadrature s1(1, 64);
  CHECK(zygmund_functional([](std::span<const double>) { return Complex{}; }, s1) == 0.0);
  CHECK(zygmund_functional([](std::span<const double>) { return Complex(1.0); }, s1) ==
        doctest::Approx(2 * pi * std::log(2.0)).epsilon(1e-14));
  CHECK(2 * pi * std::log(2.0) == doctest::Approx(4.35517).epsilon(1e-6));
  for (double c : {0.5, 2.0, 10.0}) {
    auto k = [c](std::span<const double>) { return Complex(0.0, c); };
    CHECK(std::abs(zygmund_functional(k, s1) - 2 * pi * c * std::log1p(c)) < 1e-10);
    CHECK(std::abs(zygmund_functional(k, SphereQuadrature(0, 4)) - 2 * c * std::log1p(c)) < 1e-12);
    CHECK(std::abs(zygmund_functional(k, SphereQuadrature(2, 8)) - 4 * pi * c * std::log1p(c)) < 1e-10);
  }
}

TEST_CASE("Zygmund functional of grid kernels") {
  // exp(-|x|^2) is e^{-1} on the unit circle
  const auto k = sample(gaussian(1.0, 1.0), make_grid(2, 16, 256));
  const double expected = 2 * pi * std::exp(-1.0) * std::log1p(std::exp(-1.0));
  CHECK(std::abs(zygmund_functional(k, SphereQuadrature(1, 64)) - expected) < 1e-4 * expected);

  const auto k1 = sample(gaussian(2.0, 3.0), make_grid(1, 16, 512));
  const double v = 3 * std::exp(-2.0);
  CHECK(zygmund_functional(k1, SphereQuadrature(0, 4)) == doctest::Approx(2 * v * std::log1p(v)).epsilon(1e-12));
}

TEST_CASE("rotation invariance") {
  const double x0[3] = {0.3, -0.2, 0.4};
  auto kernel_at = [&](const double* c) {
    return [c](std::span<const double> x) {
      double r2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - c[i]) * (x[i] - c[i]);
      return Complex(2.0 * std::exp(-1.5 * r2));
    };
  };
  for (double angle : {0.4, 1.3, 2.9}) {
    const double ca = std::cos(angle), sa = std::sin(angle);
    // rotation about the z axis; on S^1 this is a rotation of the plane
    const double rotated[3] = {ca * x0[0] - sa * x0[1], sa * x0[0] + ca * x0[1], x0[2]};
    for (int s : {1, 2}) {
      const SphereQuadrature quad(s, 32);
      CHECK(zygmund_functional(kernel_at(rotated), quad) ==
            doctest::Approx(zygmund_functional(kernel_at(x0), quad)).epsilon(1e-10));
    }
    // rotation taking the z axis toward x
    const double tilted[3] = {ca * x0[0] + sa * x0[2], x0[1], -sa * x0[0] + ca * x0[2]};
    const SphereQuadrature quad(2, 32);
    CHECK(zygmund_functional(kernel_at(tilted), quad) ==
          doctest::Approx(zygmund_functional(kernel_at(x0), quad)).epsilon(1e-10));
  }
}

TEST_CASE("restriction ratio of the centered Gaussian") {
  // f = exp(-pi |x|^2): f^ = e^{-pi} on S^1, ||f||_{6/5} = (5/6)^{5/6}.
  // Transform values reach the nodes by cubic interpolation on the dual grid
  // (spacing 1/L), so the error budget is 1e-4 and shrinks like L^-4.
  const double numerator = std::sqrt(2 * pi) * std::exp(-pi);
  const SphereQuadrature quad(1, 64);
  double prev = 1.0;
  for (auto [extent, tol] : {std::pair{16.0, 1e-4}, std::pair{64.0, 1e-6}}) {
    const auto f = sample(gaussian(pi, 1.0), make_grid(2, extent, 16 * static_cast<std::size_t>(extent)));
    const double fwd = sphere_l2_of_transform(f, quad);
    const double err = std::abs(fwd - numerator) / numerator;
    CHECK(err < tol);
    CHECK(err < prev / 100);
    prev = err;
    CHECK(sphere_l2_of_transform(f, quad, TransformDirection::kInverse) == doctest::Approx(fwd).epsilon(1e-13));
    CHECK(restriction_ratio(f, 1.2, quad) ==
          doctest::Approx(numerator / std::pow(5.0 / 6.0, 5.0 / 6.0)).epsilon(tol));
  }
  CHECK(restriction_exponent_bound(2) == doctest::Approx(1.2));
  CHECK(restriction_exponent_bound(1) == 1.0);
}

TEST_CASE("restriction ratio vanishes when the transform vanishes on the sphere") {
  // exp(-pi|x|^2) - (e^pi/2) exp(-pi|x|^2/2) has transform e^{-pi r^2} - e^{pi} e^{-2 pi r^2}, zero at r = 1
  const auto desc = combination({{1.0, gaussian(pi, 1.0)}, {-std::exp(pi) / 2, gaussian(pi / 2, 1.0)}});
  const auto coarse = sample(desc, make_grid(2, 16, 256));
  const auto fine = sample(desc, make_grid(2, 64, 1024));
  CHECK(lp_norm(coarse, 1.2) > 1.0);
  CHECK(restriction_ratio(coarse, 1.2, SphereQuadrature(1, 64)) < 1e-4);
  CHECK(restriction_ratio(fine, 1.2, SphereQuadrature(1, 64)) < 1e-6);
}

TEST_CASE("dilated bumps") {
  const auto a = dilated_bumps(2, 50, 7);
  const auto b = dilated_bumps(2, 50, 7);
  const auto c = dilated_bumps(2, 50, 8);
  REQUIRE(a.size() == 50);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dilation >= 0.125);
    CHECK(a[i].dilation <= 8.0);
    CHECK(a[i].dilation == b[i].dilation);
    CHECK(a[i].descriptor.describe() == b[i].descriptor.describe());
    CHECK(a[i].grid.extent() >= 16 * a[i].dilation);
    differs = differs || a[i].dilation != c[i].dilation;
  }
  CHECK(differs);

  const SphereQuadrature quad(1, 64);
  const auto rows = restriction_table(a, 1.2, quad);
  REQUIRE(rows.size() == 50);
  double hi = 0.0;
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio >= 0.0);
    hi = std::max(hi, r.ratio);
  }
  CHECK(restriction_constant(rows) == hi);
  CHECK(hi == doctest::Approx(RESTRICTION_MAX_SEED7).epsilon(1e-9));
}
