#include "liefam/familygroup.hpp"

#include <algorithm>
#include <cmath>

namespace liefam {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t n) { return static_cast<Index>(n); }

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix m = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

CMatrix blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const Index n = a.rows();
  CMatrix m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

std::vector<CMatrix> float_basis(const std::vector<ExactMatrix>& ms) {
  std::vector<CMatrix> out;
  for (const auto& m : ms) out.push_back(to_float(m));
  return out;
}

// Builds the working family; sets `doubled` when sigma needs re-embedding.
FamilyData working_family(const LieAlgebraSpec& base, const MatrixInvolution& theta, const MatrixInvolution& sigma,
                          bool& doubled) {
  if (theta.conjugate) throw DomainError("group theta must be complex-linear");
  if (!sigma.conjugate) throw DomainError("group sigma must be conjugate-linear");
  for (const MatrixInvolution* m : {&theta, &sigma})
    if (m->sign == -1 && !m->transpose) throw DomainError("sign -1 is only supported together with a transpose");
  const InvolutionSpec th = theta.to_spec(base);
  const InvolutionSpec sg = sigma.to_spec(base);
  if (!sigma.transpose && sigma.sign == 1) {
    doubled = false;
    const ExactMatrix s = sigma.conjugator.rows() != 0 ? sigma.conjugator : ExactMatrix::identity(base.matrix_size());
    return {base, th, sg, s};
  }
  doubled = true;
  SigmaDoubling dbl = doubling_embedding_for_sigma(base, sg);
  return {dbl.image, InvolutionSpec(false, th.images()), InvolutionSpec(true, sg.images(), dbl.s), dbl.s};
}

double base_residual(Membership m, const CMatrix& g) {
  const Complex det = g.determinant();
  if (m == Membership::Special) return std::abs(det - 1.0);
  return std::abs(det) > 1e-12 ? 0.0 : 1.0;
}

}  // namespace

CMatrix to_float(const ExactMatrix& m) {
  CMatrix f(idx(m.rows()), idx(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) f(idx(r), idx(c)) = {m(r, c).re().get_d(), m(r, c).im().get_d()};
  return f;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMatrix expm(const CMatrix& a) {
  if (!a.allFinite()) throw DomainError("matrix exponential of a non-finite matrix");
  const Index n = a.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  if (n == 0) return a;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix x = a / std::ldexp(1.0, squarings);
  CMatrix term = id, sum = id;
  for (int k = 1; k < 40; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= 1e-18 * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

CMatrix apply_group(const MatrixInvolution& m, const CMatrix& g) {
  CMatrix y = g;
  if (m.conjugate) y = y.conjugate().eval();
  if (m.transpose) y = y.transpose().eval();
  if (m.sign == -1) {
    if (!m.transpose) throw DomainError("sign -1 is only supported together with a transpose");
    y = y.inverse().eval();
  }
  if (m.conjugator.rows() != 0) {
    const CMatrix t = to_float(m.conjugator);
    y = t * y * t.inverse();
  }
  return y;
}

const char* to_string(Membership m) { return m == Membership::Special ? "sl" : "gl"; }

GroupSpec::GroupSpec(Membership membership, const LieAlgebraSpec& base, MatrixInvolution theta,
                     MatrixInvolution sigma)
    : membership_(membership),
      theta_base_(std::move(theta)),
      sigma_base_(std::move(sigma)),
      base_n_(base.matrix_size()),
      family_(working_family(base, theta_base_, sigma_base_, doubled_)) {
  s_ = to_float(*family_.real_structure());
  s_inv_ = s_.inverse();
  const LieAlgebraSpec& w = family_.base();
  bases_.algebra = float_basis(w.basis());
  bases_.plus = float_basis(family_.x_basis());
  bases_.minus = float_basis(family_.y_basis());
  bases_.plus_fixed = float_basis(family_.x_fixed_basis());
  bases_.minus_fixed = float_basis(family_.y_fixed_basis());
  bases_.sigma_fixed = float_basis(fixed_real_form(w, *family_.sigma()).basis());
  bases_.sigma_theta_fixed = float_basis(fixed_real_form(w, family_.sigma_theta()).basis());
}

double GroupSpec::membership_residual(const CMatrix& g) const {
  const Index n = idx(this->n());
  if (g.rows() != n || g.cols() != n || !g.allFinite()) return INFINITY;
  if (!doubled_) return base_residual(membership_, g);
  const Index b = idx(base_n_);
  const CMatrix a = g.topLeftCorner(b, b);
  const double off = std::max(max_abs(g.topRightCorner(b, b)), max_abs(g.bottomLeftCorner(b, b)));
  const double pair = max_abs(g.bottomRightCorner(b, b) - apply_group(sigma_base_, a).conjugate());
  return std::max({off, pair, base_residual(membership_, a)});
}

CMatrix GroupSpec::theta(const CMatrix& g) const {
  if (!doubled_) return apply_group(theta_base_, g);
  const Index b = idx(base_n_);
  return block_diag(apply_group(theta_base_, g.topLeftCorner(b, b)),
                    apply_group(theta_base_, g.bottomRightCorner(b, b).conjugate()).conjugate());
}

CMatrix GroupSpec::sigma(const CMatrix& g) const { return s_ * g.conjugate() * s_inv_; }

double ElementSampler::uniform() {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return scale_ * (2.0 * u - 1.0);
}

CMatrix ElementSampler::combination(const std::vector<CMatrix>& basis, bool complex_coefficients, Index size) {
  CMatrix x = CMatrix::Zero(size, size);
  for (const auto& b : basis) {
    const double re = uniform();
    const double im = complex_coefficients ? uniform() : 0.0;
    x += Complex(re, im) * b;
  }
  return x;
}

CMatrix embed_group(const GroupSpec& spec, const CMatrix& g) {
  if (!spec.contains(g)) throw DomainError("element is not in the group");
  const CMatrix t = spec.theta(g);
  const CMatrix p = 0.5 * (g + t), m = 0.5 * (g - t);
  return blocks(p, m, m, p);
}

CMatrix embed_group_factored(const GroupSpec& spec, const CMatrix& g) {
  const Index n = idx(spec.n());
  const CMatrix id = CMatrix::Identity(n, n), zero = CMatrix::Zero(n, n);
  const CMatrix a = blocks(id, -id, id, id);
  return a * block_diag(g, spec.theta(g)) * a.inverse();
}

CMatrix d_matrix(std::size_t n, Complex w) {
  const Index k = idx(n);
  CMatrix d = CMatrix::Identity(2 * k, 2 * k);
  d.topLeftCorner(k, k) *= w;
  return d;
}

GroupFiberElement fiber_element_at_root(const GroupSpec& spec, Complex w, const CMatrix& g) {
  if (w == 0.0) throw DomainError("fiber over z = 0 is degenerate; use DegenerateElement");
  const CMatrix e = embed_group(spec, g);
  return {w * w, w, d_matrix(spec.n(), w) * e * d_matrix(spec.n(), 1.0 / w)};
}

GroupFiberElement fiber_element(const GroupSpec& spec, Complex z, const CMatrix& g, int branch) {
  if (z == 0.0) throw DomainError("fiber over z = 0 is degenerate; use DegenerateElement");
  const Complex w = std::sqrt(Complex(z.real(), z.imag() + 0.0)) * static_cast<double>(branch < 0 ? -1 : 1);
  GroupFiberElement f = fiber_element_at_root(spec, w, g);
  f.z = z;
  return f;
}

FiberMembership fiber_membership(const GroupSpec& spec, Complex w, const CMatrix& m) {
  const Index n = idx(spec.n());
  const CMatrix id = CMatrix::Identity(n, n);
  const CMatrix a = blocks(id, -id, id, id);
  const CMatrix e = d_matrix(spec.n(), 1.0 / w) * m * d_matrix(spec.n(), w);
  const CMatrix p = a.inverse() * e * a;
  FiberMembership r;
  r.g = p.topLeftCorner(n, n);
  r.off_diagonal = std::max(max_abs(p.topRightCorner(n, n)), max_abs(p.bottomLeftCorner(n, n)));
  r.group = spec.membership_residual(r.g);
  r.theta_pair = std::isfinite(r.group) ? max_abs(p.bottomRightCorner(n, n) - spec.theta(r.g)) : INFINITY;
  return r;
}

ClosureReport fiber_closure_check(const GroupSpec& spec, Complex z, const std::vector<CMatrix>& samples) {
  if (z == 0.0) throw DomainError("closure check needs z != 0");
  ClosureReport r;
  r.z = z;
  const std::size_t count = samples.size();
  std::vector<GroupFiberElement> f;
  for (const auto& g : samples) f.push_back(fiber_element(spec, z, g));
  auto flag = [&](double v, std::size_t i, std::size_t j) {
    if (!(v < Tolerances::membership) && !r.offending) r.offending = std::make_pair(i, j);
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = (i + 1) % count;
    const CMatrix prod = f[i].matrix * f[j].matrix;
    const double mem = fiber_membership(spec, f[i].root, prod).residual();
    const double hom = max_abs(prod - fiber_element(spec, z, samples[i] * samples[j]).matrix);
    r.max_product_residual = std::max(r.max_product_residual, mem);
    r.max_homomorphism_error = std::max(r.max_homomorphism_error, hom);
    flag(std::max(mem, hom), i, j);
    ++r.pairs;

    const CMatrix inv = f[i].matrix.inverse();
    const double imem = fiber_membership(spec, f[i].root, inv).residual();
    const double ihom = max_abs(inv - fiber_element(spec, z, samples[i].inverse()).matrix);
    r.max_inverse_residual = std::max(r.max_inverse_residual, imem);
    r.max_homomorphism_error = std::max(r.max_homomorphism_error, ihom);
    flag(std::max(imem, ihom), i, i);
  }
  return r;
}

const char* to_string(DegenerateSide s) { return s == DegenerateSide::Zero ? "zero" : "infinity"; }

CMatrix DegenerateElement::matrix() const {
  const CMatrix zero = CMatrix::Zero(k.rows(), k.cols());
  return side == DegenerateSide::Zero ? blocks(k, zero, k * x, k) : blocks(k, k * x, zero, k);
}

DegenerateElement degenerate_product(const DegenerateElement& a, const DegenerateElement& b) {
  if (a.side != b.side) throw DomainError("degenerate elements live over different points");
  return {a.side, a.k * b.k, b.k.inverse() * a.x * b.k + b.x};
}

DegenerateElement degenerate_inverse(const DegenerateElement& a) {
  return {a.side, a.k.inverse(), -(a.k * a.x * a.k.inverse())};
}

std::vector<double> default_contraction_zs() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

ContractionReport contraction_limit(const GroupSpec& spec, const CMatrix& g, const CMatrix& x,
                                    const std::vector<double>& zs) {
  if (max_abs(spec.theta(g) - g) >= Tolerances::membership) throw DomainError("g is not theta-fixed");
  if (max_abs(spec.theta(expm(x)) - expm(-x)) >= Tolerances::membership)
    throw DomainError("X is not in the -1 eigenspace of theta");
  if (zs.empty()) throw DomainError("empty z sequence");
  const Index n = idx(spec.n());
  const CMatrix zero = CMatrix::Zero(n, n);
  const CMatrix limit = blocks(g, zero, g * x, g);

  ContractionReport r;
  r.trivial = max_abs(x) == 0.0;
  r.construction_ok = true;
  for (double z : zs) {
    if (z == 0.0) throw DomainError("z sequence must avoid 0");
    const CMatrix gp = g * expm(z * x), gm = g * expm(-z * x);
    const CMatrix display = 0.5 * blocks(gp + gm, z * (gp - gm), (gp - gm) / z, gp + gm);
    const CMatrix via_fiber = fiber_element_at_root(spec, z, gp).matrix;
    ContractionRow row;
    row.z = z;
    row.upper_right = display.topRightCorner(n, n).norm();
    row.distance = max_abs(display - limit);
    row.lower_left_error = max_abs(display.bottomLeftCorner(n, n) - g * x);
    row.display_mismatch = max_abs(display - via_fiber);
    if (!(row.display_mismatch < Tolerances::construction)) r.construction_ok = false;
    r.rows.push_back(row);
  }
  const auto smallest = std::min_element(r.rows.begin(), r.rows.end(),
                                         [](const auto& a, const auto& b) { return std::abs(a.z) < std::abs(b.z); });
  r.converges = smallest->distance < Tolerances::limit;
  if (r.trivial) return r;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  r.c_min = INFINITY;
  r.c_max = 0;
  for (const auto& row : r.rows) {
    if (row.upper_right <= 0) continue;
    const double lx = std::log(std::abs(row.z)), ly = std::log(row.upper_right);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
    const double c = row.upper_right / (row.z * row.z);
    r.c_min = std::min(r.c_min, c);
    r.c_max = std::max(r.c_max, c);
  }
  if (m >= 2) {
    const double md = static_cast<double>(m);
    r.slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);
    r.slope_ok = r.slope >= 1.9 && r.slope <= 2.1;
  }
  return r;
}

CMatrix group_real_structure(const GroupSpec& spec, const CMatrix& m) {
  const CMatrix d = block_diag(spec.s(), spec.s());
  return d * m.conjugate() * d.inverse();
}

RealStructureCheck group_real_structure_check(const GroupSpec& spec, double z, std::uint64_t seed,
                                              std::size_t count) {
  if (z == 0.0) throw DomainError("use degenerate_real_structure_check at z = 0");
  const auto& b = spec.bases();
  const Index n = idx(spec.n());
  ElementSampler sampler(seed);
  RealStructureCheck r;
  r.z = z;
  for (std::size_t i = 0; i < count; ++i) {
    CMatrix g;
    switch (i % 3) {
      case 0:
        g = sampler.exp_of(b.sigma_fixed, false, n);
        break;
      case 1:
        g = sampler.exp_of(b.sigma_theta_fixed, false, n);
        break;
      default:
        g = sampler.exp_of(b.algebra, true, n);
    }
    const CMatrix sg = spec.sigma(g);
    const bool predicted = max_abs(sg - (z > 0 ? g : spec.theta(g))) < Tolerances::membership;
    const GroupFiberElement f = fiber_element(spec, z, g);
    const CMatrix image = group_real_structure(spec, f.matrix);
    const bool observed = max_abs(image - f.matrix) < Tolerances::membership;
    r.max_preservation_residual =
        std::max(r.max_preservation_residual, fiber_membership(spec, f.root, image).residual());
    r.predicted_fixed += predicted;
    r.observed_fixed += observed;
    r.mismatches += predicted != observed;
    ++r.samples;
  }
  return r;
}

DegenerateRealStructureCheck degenerate_real_structure_check(const GroupSpec& spec, DegenerateSide side,
                                                             std::uint64_t seed, std::size_t count) {
  const auto& b = spec.bases();
  const Index n = idx(spec.n());
  ElementSampler sampler(seed);
  DegenerateRealStructureCheck r;
  r.side = side;
  std::vector<DegenerateElement> elems;
  for (std::size_t i = 0; i < count; ++i) {
    DegenerateElement e;
    e.side = side;
    const int kind = static_cast<int>(i % 3);
    e.k = kind == 1 ? sampler.exp_of(b.plus, true, n) : sampler.exp_of(b.plus_fixed, false, n);
    e.x = kind == 2 ? sampler.combination(b.minus, true, n) : sampler.combination(b.minus_fixed, false, n);
    const bool predicted = max_abs(spec.sigma(e.k) - e.k) < Tolerances::membership &&
                           max_abs(spec.sigma(e.x) - e.x) < Tolerances::membership;
    const CMatrix m = e.matrix();
    const bool observed = max_abs(group_real_structure(spec, m) - m) < Tolerances::membership;
    r.predicted_fixed += predicted;
    r.observed_fixed += observed;
    r.mismatches += predicted != observed;
    ++r.samples;
    elems.push_back(std::move(e));
  }
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    const CMatrix direct = elems[i].matrix() * elems[i + 1].matrix();
    r.max_law_error = std::max(r.max_law_error, max_abs(degenerate_product(elems[i], elems[i + 1]).matrix() - direct));
  }
  return r;
}

DifferentialCheck differential_check(const GroupSpec& spec, const ProjPoint& p) {
  constexpr double h = 1e-5;
  const FamilyData& fd = spec.family();
  const LieAlgebraSpec& w = fd.base();
  // Central difference along x / |x|, rescaled by |x|.
  auto derivative = [&](const auto& f, const CMatrix& x) {
    const double s = std::max(max_abs(x), 1e-300);
    const CMatrix u = x / s;
    return (s * (f(expm(h * u)) - f(expm(-h * u))) / (2 * h)).eval();
  };
  DifferentialCheck r;
  for (const auto& b : w.basis()) {
    const CMatrix x = to_float(b);
    r.theta = std::max(r.theta, max_abs(derivative([&](const CMatrix& g) { return spec.theta(g); }, x) -
                                        to_float(fd.theta().apply(w, b))));
    r.sigma = std::max(r.sigma, max_abs(derivative([&](const CMatrix& g) { return spec.sigma(g); }, x) -
                                        to_float(fd.sigma()->apply(w, b))));
  }
  const Fiber fiber = fiber_at(fd, p);
  const InvolutionSpec tau = fiber_real_structure(fd, fiber);
  for (const auto& b : fiber.algebra.basis()) {
    const CMatrix x = to_float(b);
    r.fiber = std::max(r.fiber, max_abs(derivative([&](const CMatrix& g) { return group_real_structure(spec, g); }, x) -
                                        to_float(tau.apply(fiber.algebra, b))));
  }
  return r;
}

}  // namespace liefam
