#ifndef LIEFAM_INVOLUTIONS_HPP
#define LIEFAM_INVOLUTIONS_HPP

// Linear and antilinear involutions of a complex matrix Lie algebra.
//
// An involution is stored as its table of basis images in coordinates. An
// antilinear map acts on a coordinate vector by conjugate-then-apply:
//
//     tau(x) = A conj(x)        (antilinear)
//     tau(x) = A x              (linear)
//
// where column i of A holds the coordinates of tau(B_i). An optional
// conjugator certifies the map as X -> T X T^-1 or X -> T conj(X) T^-1.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liefam/liecore.hpp"

namespace liefam {

class InvolutionSpec {
 public:
  InvolutionSpec() = default;
  InvolutionSpec(bool antilinear, ExactMatrix images, std::optional<ExactMatrix> conjugator = std::nullopt);

  static InvolutionSpec identity(std::size_t dim);
  // Basis images of f. DomainError if some f(B_i) leaves the algebra.
  static InvolutionSpec from_map(const LieAlgebraSpec& algebra, bool antilinear,
                                 const std::function<ExactMatrix(const ExactMatrix&)>& f,
                                 std::optional<ExactMatrix> conjugator = std::nullopt);
  // X -> T X T^-1 (linear) or X -> T conj(X) T^-1 (antilinear).
  static InvolutionSpec from_conjugator(const LieAlgebraSpec& algebra, bool antilinear, const ExactMatrix& t);

  bool antilinear() const { return antilinear_; }
  std::size_t dim() const { return images_.cols(); }
  // Column i = coordinates of tau(B_i).
  const ExactMatrix& images() const { return images_; }
  const std::optional<ExactMatrix>& conjugator() const { return conjugator_; }

  Vector apply(const Vector& coords) const;
  ExactMatrix apply(const LieAlgebraSpec& algebra, const ExactMatrix& m) const;  // DomainError outside

 private:
  bool antilinear_ = false;
  ExactMatrix images_;
  std::optional<ExactMatrix> conjugator_;
};

// Maps of the form X -> sign * T op(X) T^-1 with op one of X, conj X,
// X^t, X^*. These cover the usual catalog involutions (conj, -X^t, -X^*,
// J X J, ...). The group-level counterpart replaces the sign -1 (which only
// occurs together with a transpose) by an inverse.
struct MatrixInvolution {
  bool conjugate = false;
  bool transpose = false;
  int sign = 1;
  ExactMatrix conjugator;  // empty means identity

  ExactMatrix apply(const ExactMatrix& x) const;
  InvolutionSpec to_spec(const LieAlgebraSpec& algebra) const;
};

// a o b.
InvolutionSpec compose(const InvolutionSpec& a, const InvolutionSpec& b);

struct InvolutionReport {
  bool involutive = false;
  bool automorphism = false;
  std::optional<bool> conjugator_consistent;
  std::vector<std::string> failures;
  bool valid() const { return failures.empty(); }
};

// FieldError for a real-tagged algebra, DimensionError on size mismatch.
InvolutionReport check_involution(const LieAlgebraSpec& algebra, const InvolutionSpec& tau);

// Index of a basis element on which a o b and b o a differ.
std::optional<std::size_t> commutation_witness(const InvolutionSpec& a, const InvolutionSpec& b);

class NonCommutingError : public TheoremViolation {
 public:
  explicit NonCommutingError(std::size_t witness)
      : TheoremViolation("involutions do not commute on basis element B" + std::to_string(witness)),
        witness_(witness) {}
  std::size_t witness() const { return witness_; }

 private:
  std::size_t witness_;
};

struct CommutingPair {
  InvolutionSpec theta;  // sigma1 o sigma2, complex-linear
  InvolutionSpec sigma;  // sigma1
};

// Both inputs must be valid antilinear involutions that commute.
CommutingPair compose_commuting_pair(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma1,
                                     const InvolutionSpec& sigma2);

// {x : tau(x) = sign * x} in the coordinate space of the algebra; complex
// for linear tau, real-tagged for antilinear tau.
Subspace eigenspace(const InvolutionSpec& tau, int sign);

struct EigenSplit {
  Subspace plus;
  Subspace minus;
};
// DomainError for an antilinear input.
EigenSplit eigenspace_split(const LieAlgebraSpec& algebra, const InvolutionSpec& theta);

// Matrices sum_i x_i B_i for the basis x of a coordinate subspace.
std::vector<ExactMatrix> coordinate_matrices(const LieAlgebraSpec& algebra, const Subspace& coords);
LieAlgebraSpec subalgebra(const LieAlgebraSpec& algebra, const Subspace& coords);

// The real form g^sigma as a real-tagged algebra of the same matrices.
LieAlgebraSpec fixed_real_form(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma);

// True when sigma(X) = S conj(X) S^-1 on every basis element.
bool realizes_sigma(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma, const ExactMatrix& s);

struct SigmaDoubling {
  LieAlgebraSpec image;  // iota(B_i) = diag(B_i, conj(sigma(B_i))), same coordinates
  ExactMatrix s;         // [[0, I], [I, 0]]
};
SigmaDoubling doubling_embedding_for_sigma(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma);

struct DualFormReport {
  std::size_t dim_fixed1 = 0;        // g^{s1}
  std::size_t dim_fixed2 = 0;        // g^{s2}
  std::size_t dim_common = 0;        // g^{s1} n g^{s2}
  std::size_t dim_first_split = 0;   // g^{s1} n g^{-s2}
  std::size_t dim_second_split = 0;  // g^{-s1} n g^{s2}
  bool decomposition1 = false;
  bool decomposition2 = false;
  // i * (g^{s1} n g^{-s2}) = g^{-s1} n g^{s2}
  bool i_identity = false;
  // The literal right-hand side g^{-s2} n g^{s2} is always zero; recorded so
  // reports can show why the identity is read with s1 and s2 swapped.
  std::size_t dim_literal_rhs = 0;
  bool ok() const { return decomposition1 && decomposition2 && i_identity; }
};
DualFormReport dual_form_identities(const LieAlgebraSpec& algebra, const InvolutionSpec& sigma1,
                                    const InvolutionSpec& sigma2);

}  // namespace liefam

#endif
