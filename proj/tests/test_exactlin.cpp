#include <doctest.h>

#include <random>

#include "liefam/errors.hpp"
#include "liefam/exactlin.hpp"
#include "oracle.hpp"

using namespace liefam;

namespace {

GaussianRational q(long p, long d, long r = 0, long s = 1) {
  return {Rational(p) / Rational(d), Rational(r) / Rational(s)};
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, bool complex, int range = 3) {
  ExactMatrix m(rows, cols);
  auto pick = [&] { return static_cast<long>(rng() % (2 * range + 1)) - range; };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = GaussianRational(Rational(pick()), Rational(complex ? pick() : 0));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
  const GaussianRational a = q(1, 2, 3, 4), b = q(-2, 3, 1, 5);
  CHECK((a * b) / b == a);
  CHECK(a - a == GaussianRational(0));
  CHECK(a * a.conj() == GaussianRational(a.norm2()));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(a / GaussianRational(0), DomainError);
}

TEST_CASE("scalar text format") {
  CHECK(GaussianRational::parse("3").to_string() == "3");
  CHECK(GaussianRational::parse("6/4").to_string() == "3/2");
  CHECK(GaussianRational::parse("-1/2i") == q(0, 1, -1, 2));
  CHECK(GaussianRational::parse("1/2-i") == q(1, 2, -1, 1));
  CHECK(GaussianRational::parse("i").to_string() == "i");
  CHECK(GaussianRational::parse("-i").to_string() == "-i");
  CHECK(GaussianRational::parse("0").to_string() == "0");
  CHECK(q(0, 1, 2, 1).to_string() == "2i");
  CHECK(q(1, 3, 1, 1).to_string() == "1/3+i");
  for (const char* bad : {"", "1/0", "abc", "1+", "2ii", "1//2"}) CHECK_THROWS_AS(GaussianRational::parse(bad), ParseError);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const GaussianRational z(Rational(static_cast<long>(rng() % 41) - 20) / Rational(static_cast<long>(rng() % 9) + 1),
                             Rational(static_cast<long>(rng() % 41) - 20) / Rational(static_cast<long>(rng() % 9) + 1));
    CHECK(GaussianRational::parse(z.to_string()) == z);
  }
}

TEST_CASE("matrix products and inverse") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const ExactMatrix a = random_matrix(rng, 3, 3, true);
    const ExactMatrix b = random_matrix(rng, 3, 3, true);
    CHECK(oracle::to_eigen(a * b).isApprox(oracle::to_eigen(a) * oracle::to_eigen(b)));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(commutator(a, b) == -commutator(b, a));
    if (auto inv = inverse(a)) {
      CHECK(a * *inv == ExactMatrix::identity(3));
    } else {
      CHECK(rank(a) < 3);
    }
  }
  CHECK_FALSE(inverse(ExactMatrix{{1, 2}, {2, 4}}).has_value());
  CHECK_THROWS_AS(commutator(ExactMatrix::identity(2), ExactMatrix::identity(3)), DimensionError);
}

TEST_CASE("rank agrees with a floating-point oracle") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
    ExactMatrix m = random_matrix(rng, r, c, k % 2 == 0, 2);
    if (k % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c) * GaussianRational(2));
    Eigen::FullPivLU<oracle::CMat> lu(oracle::to_eigen(m));
    lu.setThreshold(1e-10);
    CHECK(rank(m) == static_cast<std::size_t>(lu.rank()));
    const auto ns = nullspace(m);
    CHECK(ns.size() == c - rank(m));
    for (const auto& v : ns) CHECK(is_zero(m * v));
  }
}

TEST_CASE("rref is canonical") {
  const ExactMatrix m{{2, 4, 6}, {1, 2, 4}};
  const Rref r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == ExactMatrix{{1, 2, 0}, {0, 0, 1}});
  const Rref again = rref(ExactMatrix{{1, 2, 4}, {3, 6, 10}});
  CHECK(again.reduced == r.reduced);
}

TEST_CASE("rational nullspace of a rational matrix") {
  const auto ns = nullspace(ExactMatrix{{1, 1, 0}, {0, 0, 1}});
  REQUIRE(ns.size() == 1);
  for (const auto& x : ns[0]) CHECK(x.is_real());
}

TEST_CASE("subspaces over C and over R") {
  const Vector e1{1, 0}, ie1{GaussianRational::i(), 0}, e2{0, 1};
  const Subspace c1 = Subspace::span(Field::Complex, 2, {e1});
  CHECK(c1.contains(ie1));
  const Subspace r1 = Subspace::span(Field::Real, 2, {e1});
  CHECK(r1.dim() == 1);
  CHECK_FALSE(r1.contains(ie1));
  CHECK(r1.as_real().dim() == 1);
  CHECK(c1.as_real().dim() == 2);
  CHECK(r1.scaled(GaussianRational::i()) == Subspace::span(Field::Real, 2, {ie1}));
  CHECK(Subspace::whole(Field::Real, 2).dim() == 4);
  CHECK(sum(r1, Subspace::span(Field::Real, 2, {e2})).dim() == 2);
  CHECK_THROWS_AS(intersect(c1, r1), FieldError);
  CHECK_THROWS_AS(intersect(c1, Subspace::whole(Field::Complex, 3)), DimensionError);
  CHECK(r1.coordinates(scaled(e1, 5)).value() == Vector{5});
  CHECK_FALSE(r1.coordinates(ie1).has_value());
}

TEST_CASE("subspace dimension formula") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const Field f = k % 2 ? Field::Real : Field::Complex;
    std::vector<Vector> a, b;
    for (int j = 0; j < 2; ++j) {
      a.push_back(random_matrix(rng, 4, 1, true, 2).column(0));
      b.push_back(random_matrix(rng, 4, 1, true, 2).column(0));
    }
    b.push_back(a[0]);
    const Subspace u = Subspace::span(f, 4, a), v = Subspace::span(f, 4, b);
    CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
    CHECK(intersect(u, v).contains(a[0]));
  }
}

TEST_CASE("realify matches complex multiplication") {
  std::mt19937_64 rng(9);
  const ExactMatrix m = random_matrix(rng, 2, 2, true);
  const Vector v = random_matrix(rng, 2, 1, true).column(0);
  CHECK(complexify(realify(m) * realify(v)) == m * v);
  CHECK(complexify(realify(m, true) * realify(v)) == m * conj(v));
}

TEST_CASE("coordinatizer") {
  const std::vector<Vector> basis{{1, 1, 0}, {0, 1, 1}};
  const Coordinatizer c(Field::Complex, 3, basis);
  CHECK(c.solve({2, 5, 3}).value() == Vector{2, 3});
  CHECK_FALSE(c.solve({1, 0, 0}).has_value());
  CHECK_THROWS_AS(Coordinatizer(Field::Complex, 3, {{1, 0, 0}, {2, 0, 0}}), DimensionError);
  const Coordinatizer r(Field::Real, 1, {{1}});
  CHECK_FALSE(r.solve({GaussianRational::i()}).has_value());
}
