#ifndef LIEFAM_LIECORE_HPP
#define LIEFAM_LIECORE_HPP

// Lie algebras as exact matrix subalgebras of gl(n, C).

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liefam/errors.hpp"
#include "liefam/exactlin.hpp"

namespace liefam {

// A real or complex span of n x n matrices. The basis is checked for
// independence over the tagged field on construction; closure under the
// commutator is checked separately by check_closure.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec() = default;
  LieAlgebraSpec(std::size_t n, Field field, std::vector<ExactMatrix> basis);

  std::size_t matrix_size() const { return n_; }
  Field field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }

  // Coordinates of m in the basis, over the tagged field.
  std::optional<Vector> coordinates(const ExactMatrix& m) const;
  ExactMatrix element(const Vector& coords) const;
  // The span as a subspace of the flattened n*n coordinate space.
  Subspace span() const;

 private:
  std::size_t n_ = 0;
  Field field_ = Field::Complex;
  std::vector<ExactMatrix> basis_;
  std::shared_ptr<const Coordinatizer> coords_;
};

// Matrices spanned (over `sub.field()`) by the basis of a subspace of the
// flattened n*n coordinate space.
std::vector<ExactMatrix> matrices_of(std::size_t n, const Subspace& sub);

// [B_i, B_j] = sum_k c(i, j, k) B_k. Entries are real for a real algebra.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(Field field, std::size_t dim) : field_(field), dim_(dim), c_(dim * dim * dim) {}

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  // Bracket of two coordinate vectors.
  Vector bracket(const Vector& u, const Vector& v) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  Field field_ = Field::Complex;
  std::size_t dim_ = 0;
  std::vector<GaussianRational> c_;
};

class NotClosedError : public TheoremViolation {
 public:
  NotClosedError(std::size_t i, std::size_t j, ExactMatrix residual);
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }
  // [B_i, B_j] minus its projection onto the span along the pivot rows;
  // nonzero by construction.
  const ExactMatrix& residual() const { return residual_; }

 private:
  std::size_t i_, j_;
  ExactMatrix residual_;
};

StructureConstants check_closure(const LieAlgebraSpec& algebra);

// Exact Jacobi identity over every index triple.
bool jacobi_check(const StructureConstants& sc);
std::optional<std::array<std::size_t, 3>> jacobi_violation(const StructureConstants& sc);

// ad(B_i) as a dim x dim matrix acting on coordinates.
std::vector<ExactMatrix> ad_matrices(const StructureConstants& sc);
// B(B_i, B_j) = tr(ad B_i ad B_j).
ExactMatrix killing_matrix(const StructureConstants& sc);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
std::string to_string(const Signature& s);

// Inertia of a real symmetric rational matrix by exact congruence
// diagonalization. FieldError for non-real entries, DomainError when not
// symmetric.
Signature symmetric_signature(const ExactMatrix& sym);

// FieldError on a complex algebra.
Signature killing_signature(const LieAlgebraSpec& algebra);

// Basis-independent invariants. For complex algebras the Killing form has no
// signature; only its rank is recorded. Series stop after the first repeated
// dimension or the first zero, so sl(2) gives [3, 3] and an abelian algebra
// [d, 0].
struct Fingerprint {
  Field field = Field::Real;
  std::size_t dim = 0;
  std::optional<Signature> killing_signature;
  std::size_t killing_rank = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lcs_dims;
  std::size_t center_dim = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
std::string to_string(const Fingerprint& f);

Fingerprint fingerprint(const StructureConstants& sc);
Fingerprint fingerprint(const LieAlgebraSpec& algebra);

// Subspaces of the coordinate space K^dim of an algebra.
Subspace derived_subspace(const StructureConstants& sc, const Subspace& a, const Subspace& b);
Subspace center(const StructureConstants& sc);

struct SemidirectSplit {
  LieAlgebraSpec subalgebra;
  std::vector<ExactMatrix> ideal_basis;
  // action[a] is ad(subalgebra.basis()[a]) restricted to the ideal, in
  // ideal_basis coordinates.
  std::vector<ExactMatrix> action;
  bool trivial_action() const;
};

class SplitError : public TheoremViolation {
 public:
  SplitError(std::string check, const std::string& detail)
      : TheoremViolation(check + ": " + detail), check_(std::move(check)) {}
  // One of "outside-algebra", "not-an-ideal", "ideal-not-abelian",
  // "not-a-subalgebra", "not-a-direct-sum".
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// Candidates are subspaces of the flattened n*n matrix space with the
// algebra's field tag.
SemidirectSplit semidirect_split(const LieAlgebraSpec& algebra, const Subspace& ideal, const Subspace& sub);

}  // namespace liefam

#endif
