#include "liefam/involutions.hpp"

namespace liefam {

InvolutionSpec::InvolutionSpec(bool antilinear, ExactMatrix images, std::optional<ExactMatrix> conjugator)
    : antilinear_(antilinear), images_(std::move(images)), conjugator_(std::move(conjugator)) {
  if (!images_.is_square()) throw DimensionError("involution image table must be square");
}

InvolutionSpec InvolutionSpec::identity(std::size_t dim) { return {false, ExactMatrix::identity(dim)}; }

InvolutionSpec InvolutionSpec::from_map(const LieAlgebraSpec& algebra, bool antilinear,
                                        const std::function<ExactMatrix(const ExactMatrix&)>& f,
                                        std::optional<ExactMatrix> conjugator) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    auto c = algebra.coordinates(f(algebra.basis()[i]));
    if (!c) throw DomainError("map sends basis element B" + std::to_string(i) + " outside the algebra");
    cols.push_back(std::move(*c));
  }
  return {antilinear, ExactMatrix::from_columns(cols, algebra.dim()), std::move(conjugator)};
}

InvolutionSpec InvolutionSpec::from_conjugator(const LieAlgebraSpec& algebra, bool antilinear, const ExactMatrix& t) {
  auto tinv = inverse(t);
  if (!tinv) throw DomainError("conjugator is singular");
  return from_map(
      algebra, antilinear,
      [&](const ExactMatrix& x) { return t * (antilinear ? x.conj() : x) * *tinv; }, t);
}

Vector InvolutionSpec::apply(const Vector& coords) const {
  return images_ * (antilinear_ ? liefam::conj(coords) : coords);
}

ExactMatrix InvolutionSpec::apply(const LieAlgebraSpec& algebra, const ExactMatrix& m) const {
  auto c = algebra.coordinates(m);
  if (!c) throw DomainError("matrix is not in the algebra");
  return algebra.element(apply(*c));
}

ExactMatrix MatrixInvolution::apply(const ExactMatrix& x) const {
  ExactMatrix y = x;
  if (conjugate) y = y.conj();
  if (transpose) y = y.transpose();
  if (conjugator.rows() != 0) {
    auto tinv = inverse(conjugator);
    if (!tinv) throw DomainError("conjugator is singular");
    y = conjugator * y * *tinv;
  }
  if (sign != 1) y *= GaussianRational(sign);
  return y;
}

InvolutionSpec MatrixInvolution::to_spec(const LieAlgebraSpec& algebra) const {
  std::optional<ExactMatrix> cert;
  if (!transpose && sign == 1) cert = conjugator.rows() != 0 ? conjugator : ExactMatrix::identity(algebra.matrix_size());
  return InvolutionSpec::from_map(
      algebra, conjugate, [this](const ExactMatrix& x) { return apply(x); }, cert);
}

InvolutionSpec compose(const InvolutionSpec& a, const InvolutionSpec& b) {
  if (a.dim() != b.dim()) throw DimensionError("composing involutions of different dimensions");
  ExactMatrix m = a.images() * (a.antilinear() ? b.images().conj() : b.images());
  std::optional<ExactMatrix> cert;
  if (a.conjugator() && b.conjugator())
    cert = *a.conjugator() * (a.antilinear() ? b.conjugator()->conj() : *b.conjugator());
  return {a.antilinear() != b.antilinear(), std::move(m), std::move(cert)};
}

InvolutionReport check_involution(const LieAlgebraSpec& algebra, const InvolutionSpec& tau) {
  if (algebra.field() != Field::Complex) throw FieldError("involutions act on complex Lie algebras");
  if (tau.dim() != algebra.dim()) throw DimensionError("involution dimension does not match the algebra");
  InvolutionReport r;
  const std::size_t d = algebra.dim();

  r.involutive = compose(tau, tau).images() == ExactMatrix::identity(d);
  if (!r.involutive) r.failures.push_back("not involutive");

  const StructureConstants sc = check_closure(algebra);
  r.automorphism = true;
  for (std::size_t i = 0; i < d && r.automorphism; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector bij(d);
      for (std::size_t k = 0; k < d; ++k) bij[k] = sc(i, j, k);
      if (tau.apply(bij) != sc.bracket(tau.images().column(i), tau.images().column(j))) {
        r.automorphism = false;
        r.failures.push_back("bracket not preserved on (B" + std::to_string(i) + ", B" + std::to_string(j) + ")");
        break;
      }
    }

  if (tau.conjugator()) {
    const ExactMatrix& t = *tau.conjugator();
    auto tinv = inverse(t);
    bool ok = tinv.has_value() && t.rows() == algebra.matrix_size();
    for (std::size_t i = 0; i < d && ok; ++i) {
      const ExactMatrix& b = algebra.basis()[i];
      ok = t * (tau.antilinear() ? b.conj() : b) * *tinv == algebra.element(tau.images().column(i));
    }
    r.conjugator_consistent = ok;
    if (!ok) r.failures.push_back("conjugator does not reproduce the basis images");
  }
  return r;
}

std::optional<std::size_t> commutation_witness(const InvolutionSpec& a, const InvolutionSpec& b) {
  const ExactMatrix ab = compose(a, b).images();
  const ExactMatrix ba = compose(b, a).images();
  for (std::size_t c = 0; c < ab.cols(); ++c)
    if (ab.column(c) != ba.column(c)) return c;
  return std::nullopt;
}

CommutingPair compose_commuting_pair(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma1,
                                     const InvolutionSpec& sigma2) {
  if (!sigma1.antilinear() || !sigma2.antilinear()) throw DomainError("both involutions must be conjugate-linear");
  for (const InvolutionSpec* s : {&sigma1, &sigma2}) {
    InvolutionReport r = check_involution(algebra, *s);
    if (!r.valid()) throw TheoremViolation("invalid involution: " + r.failures.front());
  }
  if (auto w = commutation_witness(sigma1, sigma2)) throw NonCommutingError(*w);
  return {compose(sigma1, sigma2), sigma1};
}

Subspace eigenspace(const InvolutionSpec& tau, int sign) {
  const std::size_t d = tau.dim();
  if (!tau.antilinear()) {
    ExactMatrix m = tau.images() - ExactMatrix::identity(d) * GaussianRational(sign);
    return kernel(m, Field::Complex);
  }
  ExactMatrix m = realify(tau.images(), true) - ExactMatrix::identity(2 * d) * GaussianRational(sign);
  std::vector<Vector> vecs;
  for (const auto& w : nullspace(m)) vecs.push_back(complexify(w));
  return Subspace::span(Field::Real, d, vecs);
}

EigenSplit eigenspace_split(const LieAlgebraSpec& algebra, const InvolutionSpec& theta) {
  if (theta.antilinear()) throw DomainError("eigenspace split needs a complex-linear involution");
  if (theta.dim() != algebra.dim()) throw DimensionError("involution dimension does not match the algebra");
  return {eigenspace(theta, 1), eigenspace(theta, -1)};
}

std::vector<ExactMatrix> coordinate_matrices(const LieAlgebraSpec& algebra, const Subspace& coords) {
  if (coords.ambient() != algebra.dim()) throw DimensionError("coordinate subspace has the wrong ambient dimension");
  std::vector<ExactMatrix> out;
  for (const auto& x : coords.basis()) out.push_back(algebra.element(x));
  return out;
}

LieAlgebraSpec subalgebra(const LieAlgebraSpec& algebra, const Subspace& coords) {
  return {algebra.matrix_size(), coords.field(), coordinate_matrices(algebra, coords)};
}

LieAlgebraSpec fixed_real_form(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma) {
  if (!sigma.antilinear()) throw DomainError("real forms come from conjugate-linear involutions");
  LieAlgebraSpec form = subalgebra(algebra, eigenspace(sigma, 1));
  if (form.dim() != algebra.dim())
    throw TheoremViolation("fixed space has real dimension " + std::to_string(form.dim()) + ", expected " +
                           std::to_string(algebra.dim()));
  check_closure(form);
  return form;
}

bool realizes_sigma(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma, const ExactMatrix& s) {
  if (!sigma.antilinear() || s.rows() != algebra.matrix_size()) return false;
  auto sinv = inverse(s);
  if (!sinv) return false;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (s * algebra.basis()[i].conj() * *sinv != algebra.element(sigma.images().column(i))) return false;
  return true;
}

SigmaDoubling doubling_embedding_for_sigma(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma) {
  if (!sigma.antilinear()) throw DomainError("doubling embedding needs a conjugate-linear involution");
  const std::size_t n = algebra.matrix_size();
  std::vector<ExactMatrix> image;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const ExactMatrix sx = algebra.element(sigma.images().column(i));
    image.push_back(ExactMatrix::block_diag(algebra.basis()[i], sx.conj()));
  }
  const ExactMatrix id = ExactMatrix::identity(n);
  const ExactMatrix zero(n, n);
  return {LieAlgebraSpec(2 * n, Field::Complex, std::move(image)), ExactMatrix::blocks(zero, id, id, zero)};
}

DualFormReport dual_form_identities(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma1,
                                    const InvolutionSpec& sigma2) {
  compose_commuting_pair(algebra, sigma1, sigma2);
  const Subspace f1 = eigenspace(sigma1, 1);
  const Subspace a1 = eigenspace(sigma1, -1);
  const Subspace f2 = eigenspace(sigma2, 1);
  const Subspace a2 = eigenspace(sigma2, -1);
  const Subspace common = intersect(f1, f2);
  const Subspace first = intersect(f1, a2);
  const Subspace second = intersect(a1, f2);

  DualFormReport r;
  r.dim_fixed1 = f1.dim();
  r.dim_fixed2 = f2.dim();
  r.dim_common = common.dim();
  r.dim_first_split = first.dim();
  r.dim_second_split = second.dim();
  r.decomposition1 = sum(common, first) == f1 && intersect(common, first).dim() == 0;
  r.decomposition2 = sum(common, second) == f2 && intersect(common, second).dim() == 0;
  r.i_identity = first.scaled(GaussianRational::i()) == second;
  r.dim_literal_rhs = intersect(a2, f2).dim();
  return r;
}

}  // namespace liefam
