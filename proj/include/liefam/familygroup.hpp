#ifndef LIEFAM_FAMILYGROUP_HPP
#define LIEFAM_FAMILYGROUP_HPP

// The family of groups over CP^1 in floating point.
//
// For z != 0 the fiber is G_z = d(w) E(G) d(w)^-1 with w^2 = z,
// d(w) = diag(w I, I) and
//
//     E(g) = 1/2 [[g + tg, g - tg], [g - tg, g + tg]]   (t = theta)
//
// The fibers over z = 0 and z = infinity are the degenerate groups
// G_0 = {[[k, 0], [kX, k]]} and G_inf = {[[k, kX], [0, k]]} with k in G^theta
// and X in g^-theta.
//
// Distances are entrywise max-abs norms throughout.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liefam/familyalg.hpp"

namespace liefam {

using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

struct Tolerances {
  static constexpr double construction = 1e-10;
  static constexpr double membership = 1e-8;
  static constexpr double limit = 1e-6;
};

CMatrix to_float(const ExactMatrix& m);
double max_abs(const CMatrix& m);
// Scaling and squaring with a Taylor core.
CMatrix expm(const CMatrix& a);

// Group-level action of a matrix involution: g -> T op(g) T^-1 where op
// conjugates and/or transposes and, for sign -1, also inverts. Its
// differential is MatrixInvolution::apply. DomainError for sign -1 without
// a transpose.
CMatrix apply_group(const MatrixInvolution& m, const CMatrix& g);

enum class Membership { Special, General };  // det = 1, det != 0
const char* to_string(Membership m);

class GroupSpec {
 public:
  // `base` spans the Lie algebra of G inside gl(n). When sigma is not plain
  // conjugation by a matrix, G is re-embedded as g -> diag(g, conj sigma(g))
  // so that sigma becomes g -> S conj(g) S^-1 with S = [[0, I], [I, 0]].
  GroupSpec(Membership membership, const LieAlgebraSpec& base, MatrixInvolution theta, MatrixInvolution sigma);

  Membership membership() const { return membership_; }
  bool doubled() const { return doubled_; }
  std::size_t n() const { return family_.n(); }  // working matrix size
  // The algebra family in working coordinates, carrying sigma and S.
  const FamilyData& family() const { return family_; }
  const CMatrix& s() const { return s_; }

  // Residual of the membership relations (0 for a member).
  double membership_residual(const CMatrix& g) const;
  bool contains(const CMatrix& g, double tol = Tolerances::membership) const {
    return membership_residual(g) < tol;
  }
  CMatrix theta(const CMatrix& g) const;
  CMatrix sigma(const CMatrix& g) const;  // S conj(g) S^-1

  // Float bases (working coordinates). Complex spans: algebra, plus, minus.
  // Real spans: sigma_fixed = g^sigma, sigma_theta_fixed = g^{sigma theta},
  // plus_fixed = g^theta n g^sigma, minus_fixed = g^-theta n g^sigma.
  struct Bases {
    std::vector<CMatrix> algebra, plus, minus;
    std::vector<CMatrix> sigma_fixed, sigma_theta_fixed, plus_fixed, minus_fixed;
  };
  const Bases& bases() const { return bases_; }

 private:
  Membership membership_;
  MatrixInvolution theta_base_, sigma_base_;
  bool doubled_ = false;
  std::size_t base_n_ = 0;
  FamilyData family_;
  CMatrix s_, s_inv_;
  Bases bases_;
};

// Seeded sampler. Coefficients are uniform in [-scale, scale] (real and
// imaginary parts for complex spans); elements are exponentials.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed, double scale = 0.5) : rng_(seed), scale_(scale) {}
  double uniform();  // in [-scale, scale]
  // `size` is the matrix size, used when the basis is empty.
  CMatrix combination(const std::vector<CMatrix>& basis, bool complex_coefficients, Eigen::Index size);
  CMatrix exp_of(const std::vector<CMatrix>& basis, bool complex_coefficients, Eigen::Index size) {
    return expm(combination(basis, complex_coefficients, size));
  }

 private:
  std::mt19937_64 rng_;
  double scale_;
};

// 1/2 [[g + tg, g - tg], [g - tg, g + tg]]. DomainError for a non-member.
CMatrix embed_group(const GroupSpec& spec, const CMatrix& g);
// A diag(g, tg) A^-1 with A = [[I, -I], [I, I]].
CMatrix embed_group_factored(const GroupSpec& spec, const CMatrix& g);
// d(w) = diag(w I, I) of size 2n.
CMatrix d_matrix(std::size_t n, Complex w);

struct GroupFiberElement {
  Complex z;
  Complex root;  // the w used, w^2 = z
  CMatrix matrix;
};
// branch = +1 uses the principal square root, -1 its negative.
GroupFiberElement fiber_element(const GroupSpec& spec, Complex z, const CMatrix& g, int branch = 1);
GroupFiberElement fiber_element_at_root(const GroupSpec& spec, Complex w, const CMatrix& g);

// Decomposes M = d(w) A diag(g, h) A^-1 d(w)^-1 and reports how far the
// blocks are from a valid (g, theta g) with g in G.
struct FiberMembership {
  CMatrix g;
  double off_diagonal = 0;  // |off-diagonal blocks of diag(g, h)|
  double theta_pair = 0;    // |h - theta(g)|
  double group = 0;         // membership residual of g
  double residual() const { return std::max({off_diagonal, theta_pair, group}); }
};
FiberMembership fiber_membership(const GroupSpec& spec, Complex w, const CMatrix& m);

struct ClosureReport {
  Complex z;
  std::size_t pairs = 0;
  double max_product_residual = 0;    // membership of products
  double max_inverse_residual = 0;    // membership of inverses
  double max_homomorphism_error = 0;  // |F(g)F(h) - F(gh)|, |F(g)^-1 - F(g^-1)|
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  bool ok() const { return !offending.has_value(); }
};
// Products of cyclically consecutive samples (i, i+1 mod n) and all
// inverses. DomainError
// for z = 0.
ClosureReport fiber_closure_check(const GroupSpec& spec, Complex z, const std::vector<CMatrix>& samples);

enum class DegenerateSide { Zero, Infinity };
const char* to_string(DegenerateSide s);

struct DegenerateElement {
  DegenerateSide side = DegenerateSide::Zero;
  CMatrix k;  // in G^theta
  CMatrix x;  // in g^-theta
  // [[k, 0], [kX, k]] (Zero) or [[k, kX], [0, k]] (Infinity).
  CMatrix matrix() const;
};
// (k1, X1)(k2, X2) = (k1 k2, k2^-1 X1 k2 + X2). DomainError on a side mismatch.
DegenerateElement degenerate_product(const DegenerateElement& a, const DegenerateElement& b);
DegenerateElement degenerate_inverse(const DegenerateElement& a);

struct ContractionRow {
  double z = 0;
  double upper_right = 0;  // Frobenius norm of the (1,2) block
  double distance = 0;     // to [[g, 0], [gX, g]]
  double lower_left_error = 0;
  double display_mismatch = 0;  // displayed formula vs fiber_element over [z^2:1]
};
struct ContractionReport {
  std::vector<ContractionRow> rows;
  double slope = 0;      // least squares of log |UR| against log z
  double c_min = 0, c_max = 0;  // |UR| / z^2 range
  bool trivial = false;  // X = 0: constant curve
  bool slope_ok = false;
  bool converges = false;
  bool construction_ok = false;
  bool ok() const { return construction_ok && converges && (trivial || slope_ok); }
};
// g in G^theta, X in g^-theta, zs nonzero reals decreasing to 0.
ContractionReport contraction_limit(const GroupSpec& spec, const CMatrix& g, const CMatrix& x,
                                    const std::vector<double>& zs);
std::vector<double> default_contraction_zs();  // 1e-1, 1e-2, 1e-3, 1e-4

// M -> diag(S,S) conj(M) diag(S,S)^-1.
CMatrix group_real_structure(const GroupSpec& spec, const CMatrix& m);

struct RealStructureCheck {
  double z = 0;
  std::size_t samples = 0;
  std::size_t predicted_fixed = 0;  // sigma g = g (z > 0), sigma g = theta g (z < 0)
  std::size_t observed_fixed = 0;
  std::size_t mismatches = 0;
  double max_preservation_residual = 0;  // images stay in G_z
  bool ok() const { return mismatches == 0 && max_preservation_residual < Tolerances::membership; }
};
// Samples cycle through g^sigma-type, g^{sigma theta}-type and generic
// elements so both outcomes occur. DomainError for z = 0.
RealStructureCheck group_real_structure_check(const GroupSpec& spec, double z, std::uint64_t seed,
                                              std::size_t count);

struct DegenerateRealStructureCheck {
  DegenerateSide side = DegenerateSide::Zero;
  std::size_t samples = 0;
  std::size_t predicted_fixed = 0;  // sigma k = k and sigma X = X
  std::size_t observed_fixed = 0;
  std::size_t mismatches = 0;
  double max_law_error = 0;  // semidirect law against matrix products
  bool ok() const { return mismatches == 0 && max_law_error < Tolerances::construction; }
};
DegenerateRealStructureCheck degenerate_real_structure_check(const GroupSpec& spec, DegenerateSide side,
                                                             std::uint64_t seed, std::size_t count);

// Central-difference differentials at the identity compared with the
// algebra-level maps: theta and sigma on the algebra basis, and the group
// real structure against the fiber real structure at a real point.
struct DifferentialCheck {
  double theta = 0, sigma = 0, fiber = 0;
  bool ok() const { return std::max({theta, sigma, fiber}) < Tolerances::membership; }
};
DifferentialCheck differential_check(const GroupSpec& spec, const ProjPoint& p);

}  // namespace liefam

#endif
