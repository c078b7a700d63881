#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "core/linalg4.hpp"
#include "support/checks.hpp"

using namespace isogeo4;
using namespace isogeo4::testing;

namespace {

Vec4 random_vec(std::mt19937& rng, double span = 2.0) {
  std::uniform_real_distribution<double> d(-span, span);
  return {d(rng), d(rng), d(rng), d(rng)};
}

bool bit_equal(const Vec4& a, const Vec4& b) {
  auto eq = [](double x, double y) {
    return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
  };
  return eq(a.x, b.x) && eq(a.y, b.y) && eq(a.z, b.z) && eq(a.w, b.w);
}

}  // namespace

TEST_CASE("dot product basics") {
  CHECK(dot({1, 0, 0, 0}, {0, 1, 0, 0}) == 0.0);
  CHECK(dot({1, 2, 3, 4}, {1, 2, 3, 4}) == 30.0);
  const Vec4 a{0.5, 0.5, 0.5, 0.5};
  CHECK(dot(a, a) == 1.0);
}

TEST_CASE("triple product of basis vectors") {
  const Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0};
  const Vec4 p = triple_product(e1, e2, e3);
  CHECK(p.x == 0.0);
  CHECK(p.y == 0.0);
  CHECK(p.z == 0.0);
  CHECK(p.w == -1.0);
}

TEST_CASE("triple product with a repeated argument is exactly zero") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Vec4 u = random_vec(rng), w = random_vec(rng);
    const Vec4 p = triple_product(u, u, w);
    CHECK(p.x == 0.0);
    CHECK(p.y == 0.0);
    CHECK(p.z == 0.0);
    CHECK(p.w == 0.0);
  }
}

TEST_CASE("triple product of the example1 curve derivatives gives B2") {
  // r'(s), r''(s), r'''(s) written out by hand for a few s values.
  for (double s : {0.0, 0.7, 2.4, 5.9}) {
    const double sn = std::sin(s), cs = std::cos(s);
    const Vec4 d1{-0.5 * sn, 0.5 * cs, 0.5, std::sqrt(2.0) / 2};
    const Vec4 d2{-0.5 * cs, -0.5 * sn, 0, 0};
    const Vec4 d3{0.5 * sn, -0.5 * cs, 0, 0};
    const Vec4 b2 = normalized(triple_product(d1, d2, d3));
    check_vec4_close(b2, Vec4{0, 0, std::sqrt(6.0) / 3, -std::sqrt(3.0) / 3}, 1e-14);
  }
}

TEST_CASE("triple product is orthogonal to its arguments") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Vec4 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    const Vec4 p = triple_product(u, v, w);
    const double tol = 1e-12 * norm(u) * norm(v) * norm(w);
    CHECK(std::abs(dot(p, u)) <= tol);
    CHECK(std::abs(dot(p, v)) <= tol);
    CHECK(std::abs(dot(p, w)) <= tol);
  }
}

TEST_CASE("swapping the first two arguments flips the sign exactly") {
  std::mt19937 rng(43);
  for (int i = 0; i < 1000; ++i) {
    const Vec4 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    CHECK(bit_equal(triple_product(u, v, w), -triple_product(v, u, w)));
  }
}

TEST_CASE("antisymmetry in the remaining argument pairs") {
  std::mt19937 rng(44);
  for (int i = 0; i < 200; ++i) {
    const Vec4 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    const double tol = 1e-12 * norm(u) * norm(v) * norm(w);
    CHECK(max_abs_diff(triple_product(u, v, w), -triple_product(u, w, v)) <= tol);
    CHECK(max_abs_diff(triple_product(u, v, w), -triple_product(w, v, u)) <= tol);
  }
}

TEST_CASE("trilinearity in the first argument") {
  std::mt19937 rng(45);
  std::uniform_real_distribution<double> coef(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const Vec4 u = random_vec(rng), u2 = random_vec(rng);
    const Vec4 v = random_vec(rng), w = random_vec(rng);
    const double alpha = coef(rng), beta = coef(rng);
    const Vec4 combined = triple_product(alpha * u + beta * u2, v, w);
    const Vec4 expanded = alpha * triple_product(u, v, w) + beta * triple_product(u2, v, w);
    const double scale =
        (std::abs(alpha) * norm(u) + std::abs(beta) * norm(u2)) * norm(v) * norm(w);
    CHECK(max_abs_diff(combined, expanded) <= 1e-12 * (1 + scale));
  }
}

TEST_CASE("gram identity") {
  const Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0};
  CHECK(gram_norm_identity_check(e1, e2, e3) == 0.0);

  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Vec4 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    const double scale = dot(u, u) * dot(v, v) * dot(w, w);
    CHECK(std::abs(gram_norm_identity_check(u, v, w)) <= 1e-9 * scale);
  }

  const Vec4 u = random_vec(rng), w = random_vec(rng);
  CHECK(std::abs(gram_norm_identity_check(u, u, w)) <=
        1e-12 * dot(u, u) * dot(u, u) * dot(w, w));
}

TEST_CASE("orthonormal frame checks") {
  const Frame4 identity{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(is_orthonormal_frame(identity, 1e-12));

  // example1 frame at s = 0, written out by hand.
  const double r3 = std::sqrt(3.0), r6 = std::sqrt(6.0), r2 = std::sqrt(2.0);
  Frame4 ex1{{0, 0.5, 0.5, r2 / 2},
             {-1, 0, 0, 0},
             {0, r3 / 2, -r3 / 6, -r6 / 6},
             {0, 0, r6 / 3, -r3 / 3}};
  CHECK(is_orthonormal_frame(ex1, 1e-10));

  Frame4 scaled = ex1;
  scaled.b2 = 1.01 * scaled.b2;
  CHECK_FALSE(is_orthonormal_frame(scaled, 1e-10));

  CHECK_THROWS_AS(is_orthonormal_frame(identity, 0.0), InvalidArgument);
}

TEST_CASE("normalize rejects the zero vector") {
  CHECK_THROWS_AS(normalized(Vec4{}), DomainError);
}
