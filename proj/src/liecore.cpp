#include "liefam/liecore.hpp"

#include <algorithm>
#include <sstream>

namespace liefam {

namespace {

std::vector<Vector> flattened(const std::vector<ExactMatrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.flatten());
  return out;
}

Subspace coordinate_space(Field field, std::size_t d) {
  std::vector<Vector> e;
  for (std::size_t k = 0; k < d; ++k) {
    Vector v(d);
    v[k] = 1;
    e.push_back(std::move(v));
  }
  return Subspace::span(field, d, e);
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::size_t n, Field field, std::vector<ExactMatrix> basis)
    : n_(n), field_(field), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.rows() != n_ || b.cols() != n_) throw DimensionError("basis matrix is not " + std::to_string(n_) + "x" + std::to_string(n_));
  coords_ = std::make_shared<const Coordinatizer>(field_, n_ * n_, flattened(basis_));
}

std::optional<Vector> LieAlgebraSpec::coordinates(const ExactMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionError("matrix size does not match algebra");
  return coords_->solve(m.flatten());
}

ExactMatrix LieAlgebraSpec::element(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw DimensionError("coordinate vector length does not match dimension");
  ExactMatrix m(n_, n_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) m += basis_[k] * coords[k];
  return m;
}

Subspace LieAlgebraSpec::span() const { return Subspace::span(field_, n_ * n_, flattened(basis_)); }

std::vector<ExactMatrix> matrices_of(std::size_t n, const Subspace& sub) {
  if (sub.ambient() != n * n) throw DimensionError("subspace does not live in flattened n x n space");
  std::vector<ExactMatrix> out;
  for (const auto& v : sub.basis()) out.push_back(ExactMatrix::unflatten(n, n, v));
  return out;
}

Vector StructureConstants::bracket(const Vector& u, const Vector& v) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const GaussianRational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(*this)(i, j, k).is_zero()) out[k] += uv * (*this)(i, j, k);
    }
  }
  return out;
}

NotClosedError::NotClosedError(std::size_t i, std::size_t j, ExactMatrix residual)
    : TheoremViolation([&] {
        std::ostringstream os;
        os << "not closed: [B" << i << ", B" << j << "] leaves the span; residual " << residual;
        return os.str();
      }()),
      i_(i),
      j_(j),
      residual_(std::move(residual)) {}

StructureConstants check_closure(const LieAlgebraSpec& algebra) {
  const std::size_t d = algebra.dim();
  StructureConstants sc(algebra.field(), d);
  const auto& b = algebra.basis();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      ExactMatrix br = commutator(b[i], b[j]);
      auto c = algebra.coordinates(br);
      if (!c) {
        const std::size_t n = algebra.matrix_size();
        throw NotClosedError(i, j, ExactMatrix::unflatten(n, n, algebra.span().remainder(br.flatten())));
      }
      for (std::size_t k = 0; k < d; ++k) {
        sc(i, j, k) = (*c)[k];
        sc(j, i, k) = -(*c)[k];
      }
    }
  return sc;
}

std::optional<std::array<std::size_t, 3>> jacobi_violation(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  // sum_m c(i,j,m) c(m,k,l) + c(j,k,m) c(m,i,l) + c(k,i,m) c(m,j,l) = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          GaussianRational s;
          for (std::size_t m = 0; m < d; ++m) {
            if (!sc(i, j, m).is_zero() && !sc(m, k, l).is_zero()) s += sc(i, j, m) * sc(m, k, l);
            if (!sc(j, k, m).is_zero() && !sc(m, i, l).is_zero()) s += sc(j, k, m) * sc(m, i, l);
            if (!sc(k, i, m).is_zero() && !sc(m, j, l).is_zero()) s += sc(k, i, m) * sc(m, j, l);
          }
          if (!s.is_zero()) return std::array<std::size_t, 3>{i, j, k};
        }
  return std::nullopt;
}

bool jacobi_check(const StructureConstants& sc) { return !jacobi_violation(sc).has_value(); }

std::vector<ExactMatrix> ad_matrices(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  std::vector<ExactMatrix> out(d, ExactMatrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out[i](k, j) = sc(i, j, k);
  return out;
}

ExactMatrix killing_matrix(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  ExactMatrix kf(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      GaussianRational t;
      // tr(ad_i ad_j) = sum_{k,l} c(i,l,k) c(j,k,l)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          if (!sc(i, l, k).is_zero() && !sc(j, k, l).is_zero()) t += sc(i, l, k) * sc(j, k, l);
      kf(i, j) = t;
      kf(j, i) = t;
    }
  return kf;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

Signature symmetric_signature(const ExactMatrix& sym) {
  if (!sym.is_square()) throw DimensionError("signature of a non-square matrix");
  if (!sym.is_real()) throw FieldError("signature needs a real matrix");
  if (sym != sym.transpose()) throw DomainError("signature needs a symmetric matrix");
  const std::size_t n = sym.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = sym(i, j).re();

  std::vector<std::size_t> active(n);
  for (std::size_t k = 0; k < n; ++k) active[k] = k;
  Signature s;
  auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&](std::size_t k) { return sgn(a[k][k]) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Rational piv = a[p][p];
      (sgn(piv) > 0 ? s.positive : s.negative) += 1;
      drop(p);
      for (std::size_t r : active)
        for (std::size_t c : active) a[r][c] -= a[r][p] * a[p][c] / piv;
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t r : active) {
      for (std::size_t c : active)
        if (r != c && sgn(a[r][c]) != 0) {
          off = {r, c};
          break;
        }
      if (off) break;
    }
    if (!off) {
      s.zero += active.size();
      break;
    }
    // Zero diagonal with a nonzero off-diagonal entry: the 2x2 block
    // [[0, h], [h, 0]] is hyperbolic, inertia (1, 1). Take its Schur
    // complement.
    const auto [p, q] = *off;
    const Rational h = a[p][q];
    s.positive += 1;
    s.negative += 1;
    drop(p);
    drop(q);
    for (std::size_t r : active)
      for (std::size_t c : active) a[r][c] -= (a[r][p] * a[q][c] + a[r][q] * a[p][c]) / h;
  }
  return s;
}

Signature killing_signature(const LieAlgebraSpec& algebra) {
  if (algebra.field() != Field::Real) throw FieldError("Killing signature needs a real Lie algebra");
  return symmetric_signature(killing_matrix(check_closure(algebra)));
}

Subspace derived_subspace(const StructureConstants& sc, const Subspace& a, const Subspace& b) {
  std::vector<Vector> out;
  const auto ba = a.basis();
  const auto bb = b.basis();
  for (const auto& u : ba)
    for (const auto& v : bb) out.push_back(sc.bracket(u, v));
  return Subspace::span(sc.field(), sc.dim(), out);
}

Subspace center(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  // x is central iff sum_i x_i c(i, j, k) = 0 for all (j, k).
  ExactMatrix m(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) m(j * d + k, i) = sc(i, j, k);
  return Subspace::span(sc.field(), d, nullspace(m));
}

namespace {

template <typename Next>
std::vector<std::size_t> series_dims(Subspace start, Next next) {
  std::vector<std::size_t> dims{start.dim()};
  Subspace cur = std::move(start);
  while (dims.back() != 0) {
    cur = next(cur);
    dims.push_back(cur.dim());
    if (dims[dims.size() - 1] == dims[dims.size() - 2]) break;
  }
  return dims;
}

}  // namespace

Fingerprint fingerprint(const StructureConstants& sc) {
  Fingerprint f;
  f.field = sc.field();
  f.dim = sc.dim();
  const ExactMatrix kf = killing_matrix(sc);
  if (sc.field() == Field::Real) {
    f.killing_signature = symmetric_signature(kf);
    f.killing_rank = f.killing_signature->positive + f.killing_signature->negative;
  } else {
    f.killing_rank = rank(kf);
  }
  const Subspace whole = coordinate_space(sc.field(), sc.dim());
  f.derived_dims = series_dims(whole, [&](const Subspace& s) { return derived_subspace(sc, s, s); });
  f.lcs_dims = series_dims(whole, [&](const Subspace& s) { return derived_subspace(sc, whole, s); });
  f.center_dim = center(sc).dim();
  return f;
}

Fingerprint fingerprint(const LieAlgebraSpec& algebra) { return fingerprint(check_closure(algebra)); }

std::string to_string(const Fingerprint& f) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
  };
  std::string out = std::string(to_string(f.field)) + " dim " + std::to_string(f.dim);
  if (f.killing_signature)
    out += " sig " + to_string(*f.killing_signature);
  else
    out += " killing-rank " + std::to_string(f.killing_rank);
  return out + " derived " + list(f.derived_dims) + " lcs " + list(f.lcs_dims) + " center " + std::to_string(f.center_dim);
}

bool SemidirectSplit::trivial_action() const {
  return std::all_of(action.begin(), action.end(), [](const ExactMatrix& m) { return m.is_zero(); });
}

SemidirectSplit semidirect_split(const LieAlgebraSpec& algebra, const Subspace& ideal, const Subspace& sub) {
  const std::size_t n = algebra.matrix_size();
  for (const Subspace* s : {&ideal, &sub}) {
    if (s->field() != algebra.field()) throw FieldError("split candidate has a different field tag");
    if (s->ambient() != n * n) throw DimensionError("split candidate is not in the flattened matrix space");
  }
  const Subspace whole = algebra.span();
  for (const Subspace* s : {&ideal, &sub})
    for (const auto& v : s->basis())
      if (!whole.contains(v)) throw SplitError("outside-algebra", "candidate vector not in the algebra");

  const auto ideal_mats = matrices_of(n, ideal);
  const auto sub_mats = matrices_of(n, sub);

  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t a = 0; a < ideal_mats.size(); ++a)
      if (!ideal.contains(commutator(algebra.basis()[i], ideal_mats[a]).flatten()))
        throw SplitError("not-an-ideal", "[B" + std::to_string(i) + ", I" + std::to_string(a) + "] leaves the ideal");
  for (std::size_t a = 0; a < ideal_mats.size(); ++a)
    for (std::size_t b = a + 1; b < ideal_mats.size(); ++b)
      if (!commutator(ideal_mats[a], ideal_mats[b]).is_zero())
        throw SplitError("ideal-not-abelian", "[I" + std::to_string(a) + ", I" + std::to_string(b) + "] != 0");
  for (std::size_t a = 0; a < sub_mats.size(); ++a)
    for (std::size_t b = a + 1; b < sub_mats.size(); ++b)
      if (!sub.contains(commutator(sub_mats[a], sub_mats[b]).flatten()))
        throw SplitError("not-a-subalgebra", "[S" + std::to_string(a) + ", S" + std::to_string(b) + "] leaves the subalgebra");
  if (ideal.dim() + sub.dim() != algebra.dim() || intersect(ideal, sub).dim() != 0)
    throw SplitError("not-a-direct-sum", "dimensions " + std::to_string(ideal.dim()) + " + " + std::to_string(sub.dim()) +
                                             " do not decompose dimension " + std::to_string(algebra.dim()));

  SemidirectSplit out;
  out.subalgebra = LieAlgebraSpec(n, algebra.field(), sub_mats);
  out.ideal_basis = ideal_mats;
  for (const auto& s : sub_mats) {
    ExactMatrix act(ideal_mats.size(), ideal_mats.size());
    for (std::size_t a = 0; a < ideal_mats.size(); ++a) {
      auto c = ideal.coordinates(commutator(s, ideal_mats[a]).flatten());
      for (std::size_t k = 0; k < ideal_mats.size(); ++k) act(k, a) = (*c)[k];
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

}  // namespace liefam
