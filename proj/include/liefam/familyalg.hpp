#ifndef LIEFAM_FAMILYALG_HPP
#define LIEFAM_FAMILYALG_HPP

// The algebraic family of Lie algebras over CP^1 built from (g, theta), and
// the real structure induced by a conjugate-linear sigma commuting with
// theta.
//
// With X_i a basis of g^theta and Y_j a basis of g^-theta (inside gl(n)),
// the fiber over [a:b] is the span of
//
//     diag(X_i, X_i)          ("X-sector")
//     [[0, a Y_j], [b Y_j, 0]] ("Y-sector")
//
// inside gl(2n). The real structure is M -> diag(S,S) conj(M) diag(S,S)^-1
// where S realizes sigma on g, and it maps the fiber over p to the fiber
// over conj(p).

#include <optional>
#include <string>
#include <vector>

#include "liefam/involutions.hpp"

namespace liefam {

// A point of CP^1. Real points are stored as coprime integers with b > 0,
// or as [1:0]; non-real points as [a/b : 1] or [1:0].
class ProjPoint {
 public:
  ProjPoint() : ProjPoint(GaussianRational(0), GaussianRational(1)) {}
  ProjPoint(const GaussianRational& alpha, const GaussianRational& beta);  // DomainError for [0:0]

  static ProjPoint parse(std::string_view text);  // "a:b" in scalar text format

  const GaussianRational& alpha() const { return alpha_; }
  const GaussianRational& beta() const { return beta_; }
  bool is_real() const { return alpha_.is_real() && beta_.is_real(); }
  GaussianRational product() const { return alpha_ * beta_; }
  bool is_degenerate() const { return alpha_.is_zero() || beta_.is_zero(); }
  // sign(alpha * beta) in {-1, 0, 1}; DomainError for a non-real point.
  int regime() const;
  ProjPoint conj() const { return {alpha_.conj(), beta_.conj()}; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }
  // Total order on normalized coordinates, used to sort reports.
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);

 private:
  GaussianRational alpha_, beta_;
};

// The fixed sample used for "all points" claims.
std::vector<ProjPoint> default_sample();

class FamilyData {
 public:
  // `base` is a complex algebra iota(g) in gl(n); theta a linear involution
  // of it; sigma (optional) a conjugate-linear involution commuting with
  // theta, realized as X -> S conj(X) S^-1 by `real_structure`.
  FamilyData(LieAlgebraSpec base, InvolutionSpec theta, std::optional<InvolutionSpec> sigma = std::nullopt,
             std::optional<ExactMatrix> real_structure = std::nullopt);

  const LieAlgebraSpec& base() const { return base_; }
  const InvolutionSpec& theta() const { return theta_; }
  const std::optional<InvolutionSpec>& sigma() const { return sigma_; }
  const std::optional<ExactMatrix>& real_structure() const { return s_; }
  bool has_real_structure() const { return s_.has_value(); }

  std::size_t n() const { return base_.matrix_size(); }
  const std::vector<ExactMatrix>& x_basis() const { return x_; }
  const std::vector<ExactMatrix>& y_basis() const { return y_; }
  // Real bases of g^theta n g^sigma and g^-theta n g^sigma.
  const std::vector<ExactMatrix>& x_fixed_basis() const { return x_fixed_; }
  const std::vector<ExactMatrix>& y_fixed_basis() const { return y_fixed_; }

  // sigma o theta; ConfigurationError without sigma.
  InvolutionSpec sigma_theta() const;

 private:
  LieAlgebraSpec base_;
  InvolutionSpec theta_;
  std::optional<InvolutionSpec> sigma_;
  std::optional<ExactMatrix> s_;
  std::vector<ExactMatrix> x_, y_, x_fixed_, y_fixed_;
};

// X -> 1/2 [[X + tX, X - tX], [X - tX, X + tX]] on the basis of `base`.
LieAlgebraSpec doubled_embedding(const LieAlgebraSpec& base, const InvolutionSpec& theta);

struct Fiber {
  ProjPoint point;
  LieAlgebraSpec algebra;  // first x_dim basis elements are the X-sector
  std::size_t x_dim = 0;
};

Fiber fiber_at(const FamilyData& fd, const ProjPoint& p);
// The same span from unnormalized homogeneous coordinates.
LieAlgebraSpec fiber_algebra(const FamilyData& fd, const GaussianRational& alpha, const GaussianRational& beta);

// Chart change at a point with ab != 0: sections written in the chart
// z = a/b are re-expressed in the chart w = b/a. Each sector acts by one
// scalar: 1 on g^theta, a/b on g^-theta.
struct TransitionReport {
  ProjPoint point;
  std::optional<GaussianRational> x_scalar;  // nullopt when the sector is empty or not scalar
  std::optional<GaussianRational> y_scalar;
  GaussianRational expected_y;
  bool charts_agree = false;  // both charts span the same fiber
  bool ok = false;
};
TransitionReport transition_action(const FamilyData& fd, const ProjPoint& p);  // DomainError if ab = 0

// Conjugation by diag(-I, I) on one fiber.
struct FamilyThetaReport {
  bool preserves_fiber = false;
  bool fixes_x_sector = false;
  bool negates_y_sector = false;
  std::size_t fixed_dim = 0;
  std::size_t expected_fixed_dim = 0;
  bool ok() const { return preserves_fiber && fixes_x_sector && negates_y_sector && fixed_dim == expected_fixed_dim; }
};
FamilyThetaReport family_theta(const FamilyData& fd, const ProjPoint& p);
ExactMatrix apply_family_theta(const ExactMatrix& m);

// [X,X] c X, [X,Y] c Y, [Y,Y] c X; at ab = 0 also [Y,Y] = 0.
struct GradingReport {
  bool xx = false, xy = false, yy = false, y_abelian_when_degenerate = true;
  bool ok() const { return xx && xy && yy && y_abelian_when_degenerate; }
};
GradingReport grading_check(const Fiber& fiber);

// The element's image and the point it lives over. ConfigurationError
// without S; DomainError if the element is not in the fiber over p.
struct RealStructureImage {
  ProjPoint point;
  ExactMatrix element;
};
RealStructureImage real_structure_apply(const FamilyData& fd, const ProjPoint& p, const ExactMatrix& element);
// The real structure as an antilinear involution of the fiber over a real p.
InvolutionSpec fiber_real_structure(const FamilyData& fd, const Fiber& fiber);

// Fixed fiber from the closed form (real span of diag(X,X), [[0,aY],[bY,0]]
// with X, Y sigma-fixed). DomainError for a non-real point.
LieAlgebraSpec fixed_fiber_at(const FamilyData& fd, const ProjPoint& p);
// The same fixed fiber computed as the fixed points of the real structure
// acting on the complex fiber.
LieAlgebraSpec fixed_fiber_by_real_structure(const FamilyData& fd, const ProjPoint& p);

enum class WitnessStatus { Exact, FloatVerified, Failed };
const char* to_string(WitnessStatus s);

// M -> M_11 + (c / b) M_21 with c^2 = ab, mapping the fixed fiber onto g^sigma
// (ab > 0) or g^{sigma theta} (ab < 0).
struct WitnessReport {
  ProjPoint point;
  bool perfect_square = false;
  std::string c;         // "2", "6i", "sqrt(2)", "i*sqrt(2)"
  std::string target;    // "sigma" or "sigma-theta"
  WitnessStatus status = WitnessStatus::Failed;
  bool homomorphism = false;
  bool bijective = false;
  bool fingerprint_match = false;
  double max_residual = 0.0;  // float route only
  static constexpr double tolerance = 1e-9;
};
WitnessReport witness_isomorphism(const FamilyData& fd, const ProjPoint& p);  // DomainError if ab = 0

struct DegenerationData {
  ProjPoint point;
  SemidirectSplit split;  // reductive part + abelian ideal + action
  LieAlgebraSpec reductive;
  std::size_t ideal_dim = 0;
  std::size_t expected_ideal_dim = 0;
  bool reductive_matches = false;  // fingerprint equals that of g^theta n g^sigma
  bool ok() const { return reductive_matches && ideal_dim == expected_ideal_dim; }
};
DegenerationData degeneration_at(const FamilyData& fd, const ProjPoint& p);  // DomainError if ab != 0

}  // namespace liefam

#endif
