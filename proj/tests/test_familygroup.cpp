#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "liefam/familygroup.hpp"

using namespace liefam;

namespace {

LieAlgebraSpec sl2() {
  return {2, Field::Complex, {ExactMatrix::unit(2, 0, 1), ExactMatrix::unit(2, 1, 0),
                              ExactMatrix::unit(2, 0, 0) - ExactMatrix::unit(2, 1, 1)}};
}

LieAlgebraSpec gl2() {
  std::vector<ExactMatrix> b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.push_back(ExactMatrix::unit(2, i, j));
  return {2, Field::Complex, b};
}

const MatrixInvolution kNegTranspose{false, true, -1, {}};
const MatrixInvolution kConj{true, false, 1, {}};

GroupSpec sl2_spec() { return {Membership::Special, sl2(), kNegTranspose, kConj}; }

// U(2) / U(1,1) family: theta = Ad diag(1, -1), sigma(X) = -X^*.
GroupSpec gl2_spec() {
  return {Membership::General, gl2(), MatrixInvolution{false, false, 1, ExactMatrix::diagonal({1, -1})},
          MatrixInvolution{true, true, -1, {}}};
}

CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = {u(rng), u(rng)};
  return m;
}

}  // namespace

TEST_CASE("expm agrees with Eigen's matrix exponential") {
  std::mt19937_64 rng(42);
  for (double scale : {1e-3, 0.3, 2.0, 8.0}) {
    for (Eigen::Index n : {1, 2, 4}) {
      const CMatrix a = random_matrix(rng, n, scale);
      const CMatrix ref = a.exp();
      CHECK(max_abs(expm(a) - ref) <= 1e-12 * std::max(1.0, max_abs(ref)));
    }
  }
  CHECK(max_abs(expm(CMatrix::Zero(3, 3)) - CMatrix::Identity(3, 3)) == 0.0);
  const CMatrix nil = (CMatrix(2, 2) << 0, 1, 0, 0).finished();
  CHECK(max_abs(expm(nil) - (CMatrix(2, 2) << 1, 1, 0, 1).finished()) < 1e-15);
}

TEST_CASE("group-level involutions") {
  std::mt19937_64 rng(1);
  const CMatrix g = expm(random_matrix(rng, 2, 0.5));
  CHECK(max_abs(apply_group(kNegTranspose, g) - g.transpose().inverse()) < 1e-13);
  CHECK(max_abs(apply_group(kConj, g) - g.conjugate()) == 0.0);
  CHECK(max_abs(apply_group(kConj, apply_group(kConj, g)) - g) == 0.0);
  CHECK(max_abs(apply_group(kNegTranspose, apply_group(kNegTranspose, g)) - g) < 1e-12);
  CHECK_THROWS_AS(apply_group(MatrixInvolution{false, false, -1, {}}, g), DomainError);
  // exp(tau X) = tau(exp X) for the group action.
  const CMatrix x = random_matrix(rng, 2, 0.5);
  CHECK(max_abs(apply_group(kNegTranspose, expm(x)) - expm(-x.transpose())) < 1e-12);
}

TEST_CASE("group spec membership and bases") {
  const GroupSpec spec = sl2_spec();
  CHECK_FALSE(spec.doubled());
  CHECK(spec.n() == 2);
  ElementSampler s(3);
  const auto& b = spec.bases();
  CHECK(b.algebra.size() == 3);
  CHECK(b.plus.size() == 1);
  CHECK(b.minus.size() == 2);
  CHECK(b.plus_fixed.size() == 1);
  CHECK(b.minus_fixed.size() == 2);
  for (int k = 0; k < 10; ++k) {
    const CMatrix g = s.exp_of(b.algebra, true, 2);
    CHECK(spec.contains(g));
    CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
  }
  CHECK_FALSE(spec.contains(2.0 * CMatrix::Identity(2, 2)));
  CHECK(spec.contains(CMatrix::Identity(2, 2)));
}

TEST_CASE("sampler is deterministic") {
  ElementSampler a(9), b(9);
  for (int k = 0; k < 5; ++k) CHECK(a.uniform() == b.uniform());
  ElementSampler c(9, 2.0);
  for (int k = 0; k < 100; ++k) CHECK(std::abs(c.uniform()) <= 2.0);
}

TEST_CASE("embedding is a homomorphism and factors") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(5);
  for (int k = 0; k < 20; ++k) {
    const CMatrix g = s.exp_of(spec.bases().algebra, true, 2);
    const CMatrix h = s.exp_of(spec.bases().algebra, true, 2);
    CHECK(max_abs(embed_group(spec, g) * embed_group(spec, h) - embed_group(spec, g * h)) < 1e-10);
    CHECK(max_abs(embed_group(spec, g) - embed_group_factored(spec, g)) < 1e-12);
  }
  CHECK_THROWS_AS(embed_group(spec, 3.0 * CMatrix::Identity(2, 2)), DomainError);
}

TEST_CASE("fiber elements") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(6);
  for (Complex z : {Complex(4.0), Complex(-2.5), Complex(0.3, 1.1)}) {
    const CMatrix g = s.exp_of(spec.bases().algebra, true, 2);
    const GroupFiberElement e = fiber_element(spec, z, g);
    CHECK(std::abs(e.root * e.root - z) < 1e-14);
    // The other root gives the same element once g is replaced by theta(g).
    CHECK(max_abs(fiber_element(spec, z, g, -1).matrix - fiber_element(spec, z, spec.theta(g)).matrix) < 1e-10);
    const FiberMembership m = fiber_membership(spec, e.root, e.matrix);
    CHECK(m.residual() < 1e-10);
    CHECK(max_abs(m.g - g) < 1e-10);
    CHECK(fiber_membership(spec, e.root, CMatrix::Identity(4, 4) + CMatrix::Constant(4, 4, 0.1)).residual() > 1e-3);
  }
}

TEST_CASE("fiber closure") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(7);
  std::vector<CMatrix> samples;
  for (int k = 0; k < 20; ++k) samples.push_back(s.exp_of(spec.bases().algebra, true, 2));
  for (Complex z : {Complex(-2.5), Complex(4.0), Complex(0, 1)}) {
    const ClosureReport r = fiber_closure_check(spec, z, samples);
    CHECK(r.ok());
    CHECK(r.pairs == 20);
    CHECK(r.max_product_residual < Tolerances::membership);
  }
  CHECK_THROWS_AS(fiber_closure_check(spec, 0.0, samples), DomainError);
}

TEST_CASE("degenerate semidirect law") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(8);
  const auto& b = spec.bases();
  for (DegenerateSide side : {DegenerateSide::Zero, DegenerateSide::Infinity}) {
    for (int k = 0; k < 10; ++k) {
      const DegenerateElement a{side, s.exp_of(b.plus, true, 2), s.combination(b.minus, true, 2)};
      const DegenerateElement c{side, s.exp_of(b.plus, true, 2), s.combination(b.minus, true, 2)};
      const DegenerateElement ac = degenerate_product(a, c);
      CHECK(max_abs(ac.matrix() - a.matrix() * c.matrix()) < 1e-12);
      CHECK(max_abs(ac.k - a.k * c.k) < 1e-12);
      CHECK(max_abs(ac.x - (c.k.inverse() * a.x * c.k + c.x)) < 1e-12);
      CHECK(max_abs(degenerate_product(a, degenerate_inverse(a)).matrix() - CMatrix::Identity(4, 4)) < 1e-12);
    }
  }
  const DegenerateElement z{DegenerateSide::Zero, CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)};
  const DegenerateElement i{DegenerateSide::Infinity, CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)};
  CHECK_THROWS_AS(degenerate_product(z, i), DomainError);
  CHECK(std::string(to_string(DegenerateSide::Infinity)) == "infinity");
}

TEST_CASE("contraction to the degenerate fiber") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(10);
  const auto& b = spec.bases();
  for (int k = 0; k < 3; ++k) {
    const CMatrix g = k == 0 ? CMatrix::Identity(2, 2).eval() : s.exp_of(b.plus, true, 2);
    const CMatrix x = s.combination(b.minus, true, 2);
    const ContractionReport r = contraction_limit(spec, g, x, default_contraction_zs());
    CHECK(r.ok());
    CHECK(r.slope >= 1.9);
    CHECK(r.slope <= 2.1);
    CHECK(r.rows.back().distance < Tolerances::limit);
    for (const auto& row : r.rows) CHECK(row.display_mismatch < Tolerances::construction);
  }
  const ContractionReport trivial = contraction_limit(spec, CMatrix::Identity(2, 2), CMatrix::Zero(2, 2),
                                                      default_contraction_zs());
  CHECK(trivial.trivial);
  CHECK(trivial.ok());
  CHECK_THROWS_AS(contraction_limit(spec, CMatrix::Identity(2, 2), b.plus[0], default_contraction_zs()), DomainError);
}

TEST_CASE("real structure fixed points at z = 1 and z = -1") {
  for (const GroupSpec& spec : {sl2_spec(), gl2_spec()}) {
    for (double z : {1.0, -1.0}) {
      const RealStructureCheck r = group_real_structure_check(spec, z, 11, 50);
      CHECK(r.ok());
      CHECK(r.samples == 50);
      CHECK(r.mismatches == 0);
      CHECK(r.predicted_fixed > 0);
      CHECK(r.predicted_fixed < 50);
    }
    for (DegenerateSide side : {DegenerateSide::Zero, DegenerateSide::Infinity}) {
      const DegenerateRealStructureCheck r = degenerate_real_structure_check(spec, side, 12, 50);
      CHECK(r.ok());
      CHECK(r.predicted_fixed > 0);
      CHECK(r.predicted_fixed < 50);
    }
  }
}

TEST_CASE("real structure is an involution on G_z") {
  const GroupSpec spec = sl2_spec();
  ElementSampler s(13);
  const CMatrix g = s.exp_of(spec.bases().algebra, true, 2);
  const CMatrix m = fiber_element(spec, 2.0, g).matrix;
  const CMatrix r = group_real_structure(spec, m);
  CHECK(max_abs(group_real_structure(spec, r) - m) < 1e-12);
  CHECK(fiber_membership(spec, std::sqrt(2.0), r).residual() < Tolerances::membership);
}

TEST_CASE("sigma doubling for a unitary-type sigma") {
  const GroupSpec spec = gl2_spec();
  CHECK(spec.doubled());
  CHECK(spec.n() == 4);
  ElementSampler s(14);
  const CMatrix g = s.exp_of(spec.bases().algebra, true, 4);
  CHECK(spec.contains(g));
  CHECK(max_abs(spec.sigma(spec.sigma(g)) - g) < 1e-12);
  CHECK(max_abs(spec.sigma(spec.theta(g)) - spec.theta(spec.sigma(g))) < 1e-12);
}

TEST_CASE("differentials match the algebra maps") {
  for (const GroupSpec& spec : {sl2_spec(), gl2_spec()})
    for (const ProjPoint& p : {ProjPoint(1, 1), ProjPoint(-11, 12), ProjPoint(0, 1), ProjPoint(1, 0)})
      CHECK(differential_check(spec, p).ok());
}
