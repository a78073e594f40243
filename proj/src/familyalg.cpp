#include "liefam/familyalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>

namespace liefam {

namespace {

Rational lcm_den(const Rational& a, const Rational& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return Rational(l);
}

mpz_class gcd_num(const Rational& a, const Rational& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return g;
}

ExactMatrix off_diagonal(const ExactMatrix& y, const GaussianRational& a, const GaussianRational& b) {
  const ExactMatrix zero(y.rows(), y.cols());
  return ExactMatrix::blocks(zero, y * a, y * b, zero);
}

ExactMatrix doubled_diag(const ExactMatrix& x) { return ExactMatrix::block_diag(x, x); }

Subspace matrix_span(Field field, std::size_t n, const std::vector<ExactMatrix>& ms) {
  std::vector<Vector> vs;
  for (const auto& m : ms) vs.push_back(m.flatten());
  return Subspace::span(field, n * n, vs);
}

std::vector<ExactMatrix> sector(const LieAlgebraSpec& l, std::size_t begin, std::size_t end) {
  return {l.basis().begin() + static_cast<std::ptrdiff_t>(begin), l.basis().begin() + static_cast<std::ptrdiff_t>(end)};
}

void require_real_point(const ProjPoint& p) {
  if (!p.is_real()) throw DomainError("point " + p.to_string() + " is not real");
}

const ExactMatrix& require_s(const FamilyData& fd) {
  if (!fd.real_structure()) throw ConfigurationError("family has no real structure (S is missing)");
  return *fd.real_structure();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Eigen::MatrixXcd float_matrix(const ExactMatrix& m) {
  Eigen::MatrixXcd f(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) f(r, c) = {m(r, c).re().get_d(), m(r, c).im().get_d()};
  return f;
}

// Real coordinates of a float matrix in the real span of `basis`, with the
// residual of the least-squares fit.
std::pair<Eigen::VectorXd, double> real_coordinates(const std::vector<Eigen::MatrixXcd>& basis,
                                                    const Eigen::MatrixXcd& m) {
  const Eigen::Index len = m.size();
  Eigen::MatrixXd a(2 * len, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& b = basis[j];
    for (Eigen::Index k = 0; k < len; ++k) {
      a(2 * k, static_cast<Eigen::Index>(j)) = b(k).real();
      a(2 * k + 1, static_cast<Eigen::Index>(j)) = b(k).imag();
    }
  }
  Eigen::VectorXd rhs(2 * len);
  for (Eigen::Index k = 0; k < len; ++k) {
    rhs(2 * k) = m(k).real();
    rhs(2 * k + 1) = m(k).imag();
  }
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(rhs);
  return {x, (a * x - rhs).cwiseAbs().maxCoeff()};
}

}  // namespace

// ---- ProjPoint ----

ProjPoint::ProjPoint(const GaussianRational& alpha, const GaussianRational& beta) {
  if (alpha.is_zero() && beta.is_zero()) throw DomainError("[0:0] is not a point of the projective line");
  if (beta.is_zero()) {
    alpha_ = 1;
    beta_ = 0;
    return;
  }
  if (!alpha.is_real() || !beta.is_real()) {
    alpha_ = alpha / beta;
    beta_ = 1;
    return;
  }
  Rational a = alpha.re(), b = beta.re();
  const Rational l = lcm_den(a, b);
  a *= l;
  b *= l;
  const Rational g(gcd_num(a, b));
  a /= g;
  b /= g;
  if (sgn(b) < 0) {
    a = -a;
    b = -b;
  }
  alpha_ = a;
  beta_ = b;
}

ProjPoint ProjPoint::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
    throw ParseError("point must have the form a:b", "");
  try {
    return {GaussianRational::parse(text.substr(0, colon)), GaussianRational::parse(text.substr(colon + 1))};
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "");
  }
}

int ProjPoint::regime() const {
  require_real_point(*this);
  return sgn(product().re());
}

std::string ProjPoint::to_string() const { return alpha_.to_string() + ":" + beta_.to_string(); }

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  auto key = [](const ProjPoint& p) {
    return std::make_tuple(p.beta().is_zero(), p.alpha().re(), p.alpha().im(), p.beta().re(), p.beta().im());
  };
  return key(a) < key(b);
}

std::vector<ProjPoint> default_sample() {
  const int raw[][2] = {{1, 1}, {2, 1}, {4, 1}, {-1, 1}, {-2, 1}, {-1, 2}, {0, 1}, {1, 0}, {3, 2}, {-9, 4}};
  std::vector<ProjPoint> out;
  for (const auto& r : raw) out.emplace_back(r[0], r[1]);
  return out;
}

// ---- FamilyData ----

FamilyData::FamilyData(LieAlgebraSpec base, InvolutionSpec theta, std::optional<InvolutionSpec> sigma,
                       std::optional<ExactMatrix> real_structure)
    : base_(std::move(base)), theta_(std::move(theta)), sigma_(std::move(sigma)), s_(std::move(real_structure)) {
  if (base_.field() != Field::Complex) throw FieldError("family base algebra must be complex");
  const EigenSplit split = eigenspace_split(base_, theta_);
  x_ = coordinate_matrices(base_, split.plus);
  y_ = coordinate_matrices(base_, split.minus);
  if (s_ && !sigma_) throw ConfigurationError("S given without sigma");
  if (sigma_) {
    if (!sigma_->antilinear()) throw DomainError("sigma must be conjugate-linear");
    if (auto w = commutation_witness(theta_, *sigma_)) throw NonCommutingError(*w);
    const Subspace fixed = eigenspace(*sigma_, 1);
    x_fixed_ = coordinate_matrices(base_, intersect(split.plus.as_real(), fixed));
    y_fixed_ = coordinate_matrices(base_, intersect(split.minus.as_real(), fixed));
    if (s_ && !realizes_sigma(base_, *sigma_, *s_)) throw ConfigurationError("S does not realize sigma");
  }
}

InvolutionSpec FamilyData::sigma_theta() const {
  if (!sigma_) throw ConfigurationError("family has no sigma");
  return compose(*sigma_, theta_);
}

LieAlgebraSpec doubled_embedding(const LieAlgebraSpec& base, const InvolutionSpec& theta) {
  const GaussianRational half = Rational(1, 2);
  std::vector<ExactMatrix> image;
  for (const auto& b : base.basis()) {
    const ExactMatrix tb = theta.apply(base, b);
    const ExactMatrix p = (b + tb) * half, m = (b - tb) * half;
    image.push_back(ExactMatrix::blocks(p, m, m, p));
  }
  return {2 * base.matrix_size(), Field::Complex, std::move(image)};
}

LieAlgebraSpec fiber_algebra(const FamilyData& fd, const GaussianRational& alpha, const GaussianRational& beta) {
  if (alpha.is_zero() && beta.is_zero()) throw DomainError("[0:0] is not a point of the projective line");
  std::vector<ExactMatrix> basis;
  for (const auto& x : fd.x_basis()) basis.push_back(doubled_diag(x));
  for (const auto& y : fd.y_basis()) basis.push_back(off_diagonal(y, alpha, beta));
  return {2 * fd.n(), Field::Complex, std::move(basis)};
}

Fiber fiber_at(const FamilyData& fd, const ProjPoint& p) {
  return {p, fiber_algebra(fd, p.alpha(), p.beta()), fd.x_basis().size()};
}

TransitionReport transition_action(const FamilyData& fd, const ProjPoint& p) {
  if (p.is_degenerate()) throw DomainError("transition needs a point with ab != 0");
  TransitionReport r;
  r.point = p;
  const GaussianRational z = p.alpha() / p.beta(), w = p.beta() / p.alpha();
  r.expected_y = z;

  std::vector<ExactMatrix> chart1, chart2;
  for (const auto& x : fd.x_basis()) {
    chart1.push_back(doubled_diag(x));
    chart2.push_back(doubled_diag(x));
  }
  for (const auto& y : fd.y_basis()) {
    chart1.push_back(off_diagonal(y, z, 1));
    chart2.push_back(off_diagonal(y, 1, w));
  }
  const std::size_t nn = 2 * fd.n();
  const LieAlgebraSpec target(nn, Field::Complex, chart2);
  r.charts_agree = matrix_span(Field::Complex, nn, chart1) == target.span();

  const std::size_t xd = fd.x_basis().size();
  bool x_ok = true, y_ok = true;
  auto sector_scalar = [&](std::size_t begin, std::size_t end, bool& ok) -> std::optional<GaussianRational> {
    std::optional<GaussianRational> s;
    for (std::size_t k = begin; k < end && ok; ++k) {
      auto c = target.coordinates(chart1[k]);
      if (!c) {
        ok = false;
        break;
      }
      for (std::size_t j = 0; j < c->size(); ++j)
        if (j != k && !(*c)[j].is_zero()) ok = false;
      if (!s) s = (*c)[k];
      else if (*s != (*c)[k]) ok = false;
    }
    return ok ? s : std::nullopt;
  };
  r.x_scalar = sector_scalar(0, xd, x_ok);
  r.y_scalar = sector_scalar(xd, chart1.size(), y_ok);
  r.ok = r.charts_agree && x_ok && y_ok && (!r.x_scalar || *r.x_scalar == GaussianRational(1)) &&
         (!r.y_scalar || *r.y_scalar == r.expected_y);
  return r;
}

ExactMatrix apply_family_theta(const ExactMatrix& m) {
  const std::size_t n = m.rows() / 2;
  ExactMatrix out = m;
  out.set_block(0, n, -m.block(0, n, n, n));
  out.set_block(n, 0, -m.block(n, 0, n, n));
  return out;
}

FamilyThetaReport family_theta(const FamilyData& fd, const ProjPoint& p) {
  const Fiber f = fiber_at(fd, p);
  FamilyThetaReport r;
  r.expected_fixed_dim = fd.x_basis().size();
  r.fixes_x_sector = r.negates_y_sector = true;
  for (std::size_t i = 0; i < f.algebra.dim(); ++i) {
    const ExactMatrix& b = f.algebra.basis()[i];
    const ExactMatrix img = apply_family_theta(b);
    if (i < f.x_dim && img != b) r.fixes_x_sector = false;
    if (i >= f.x_dim && img != -b) r.negates_y_sector = false;
  }
  try {
    const InvolutionSpec t = InvolutionSpec::from_map(f.algebra, false, apply_family_theta);
    r.preserves_fiber = true;
    r.fixed_dim = eigenspace(t, 1).dim();
  } catch (const DomainError&) {
    r.preserves_fiber = false;
  }
  return r;
}

GradingReport grading_check(const Fiber& fiber) {
  const StructureConstants sc = check_closure(fiber.algebra);
  const std::size_t d = sc.dim(), x = fiber.x_dim;
  GradingReport r;
  r.xx = r.xy = r.yy = true;
  const bool degenerate = fiber.point.is_degenerate();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (sc(i, j, k).is_zero()) continue;
        const bool xi = i < x, xj = j < x, xk = k < x;
        if (xi && xj && !xk) r.xx = false;
        if (xi != xj && xk) r.xy = false;
        if (!xi && !xj) {
          if (!xk) r.yy = false;
          if (degenerate) r.y_abelian_when_degenerate = false;
        }
      }
  return r;
}

RealStructureImage real_structure_apply(const FamilyData& fd, const ProjPoint& p, const ExactMatrix& element) {
  const ExactMatrix& s = require_s(fd);
  const Fiber f = fiber_at(fd, p);
  if (!f.algebra.coordinates(element)) throw DomainError("element is not in the fiber over " + p.to_string());
  const ExactMatrix d = ExactMatrix::block_diag(s, s);
  return {p.conj(), d * element.conj() * *inverse(d)};
}

InvolutionSpec fiber_real_structure(const FamilyData& fd, const Fiber& fiber) {
  const ExactMatrix& s = require_s(fd);
  require_real_point(fiber.point);
  const ExactMatrix d = ExactMatrix::block_diag(s, s);
  return InvolutionSpec::from_conjugator(fiber.algebra, true, d);
}

LieAlgebraSpec fixed_fiber_at(const FamilyData& fd, const ProjPoint& p) {
  require_real_point(p);
  if (!fd.sigma()) throw ConfigurationError("family has no sigma");
  std::vector<ExactMatrix> basis;
  for (const auto& x : fd.x_fixed_basis()) basis.push_back(doubled_diag(x));
  for (const auto& y : fd.y_fixed_basis()) basis.push_back(off_diagonal(y, p.alpha(), p.beta()));
  LieAlgebraSpec l(2 * fd.n(), Field::Real, std::move(basis));
  check_closure(l);
  return l;
}

LieAlgebraSpec fixed_fiber_by_real_structure(const FamilyData& fd, const ProjPoint& p) {
  require_real_point(p);
  const Fiber f = fiber_at(fd, p);
  return fixed_real_form(f.algebra, fiber_real_structure(fd, f));
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Exact:
      return "exact";
    case WitnessStatus::FloatVerified:
      return "float-verified";
    case WitnessStatus::Failed:
      break;
  }
  return "failed";
}

WitnessReport witness_isomorphism(const FamilyData& fd, const ProjPoint& p) {
  require_real_point(p);
  if (p.is_degenerate()) throw DomainError("witness map needs ab != 0; use degeneration_at");
  if (!fd.sigma()) throw ConfigurationError("family has no sigma");
  WitnessReport r;
  r.point = p;
  const Rational ab = p.product().re();
  const bool positive = sgn(ab) > 0;
  const Rational mag = positive ? ab : Rational(-ab);
  r.target = positive ? "sigma" : "sigma-theta";

  const LieAlgebraSpec fixed = fixed_fiber_at(fd, p);
  const LieAlgebraSpec target = fixed_real_form(fd.base(), positive ? *fd.sigma() : fd.sigma_theta());
  r.fingerprint_match = fingerprint(fixed) == fingerprint(target);
  const std::size_t n = fd.n(), d = fixed.dim();
  const StructureConstants sc = check_closure(fixed);

  const auto root = rational_sqrt(mag);
  r.perfect_square = root.has_value();
  if (root) {
    const std::string mag_text = GaussianRational(*root).to_string();
    r.c = positive ? mag_text : (mag_text == "1" ? "i" : mag_text + "i");
    const GaussianRational c = positive ? GaussianRational(*root) : GaussianRational(0, *root);
    const GaussianRational factor = c / p.beta();
    auto phi = [&](const ExactMatrix& m) { return m.block(0, 0, n, n) + m.block(n, 0, n, n) * factor; };
    std::vector<ExactMatrix> images;
    bool inside = true;
    for (const auto& b : fixed.basis()) {
      images.push_back(phi(b));
      if (!target.coordinates(images.back())) inside = false;
    }
    r.bijective = inside && matrix_span(Field::Real, n, images) == target.span() && images.size() == target.dim();
    r.homomorphism = true;
    for (std::size_t i = 0; i < d && r.homomorphism; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (phi(commutator(fixed.basis()[i], fixed.basis()[j])) != commutator(images[i], images[j])) {
          r.homomorphism = false;
          break;
        }
    r.status = r.homomorphism && r.bijective ? WitnessStatus::Exact : WitnessStatus::Failed;
    return r;
  }

  const std::string mag_text = "sqrt(" + GaussianRational(mag).to_string() + ")";
  r.c = positive ? mag_text : "i*" + mag_text;
  const double root_f = std::sqrt(mag.get_d());
  const std::complex<double> c = positive ? std::complex<double>(root_f, 0) : std::complex<double>(0, root_f);
  const std::complex<double> factor = c / p.beta().re().get_d();
  const auto n_e = static_cast<Eigen::Index>(n);
  auto phi = [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd {
    return m.block(0, 0, n_e, n_e) + factor * m.block(n_e, 0, n_e, n_e);
  };
  std::vector<Eigen::MatrixXcd> fbasis, images, tbasis;
  for (const auto& b : fixed.basis()) {
    fbasis.push_back(float_matrix(b));
    images.push_back(phi(fbasis.back()));
  }
  for (const auto& b : target.basis()) tbasis.push_back(float_matrix(b));

  double residual = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Eigen::MatrixXcd lhs = phi(fbasis[i] * fbasis[j] - fbasis[j] * fbasis[i]);
      const Eigen::MatrixXcd rhs = images[i] * images[j] - images[j] * images[i];
      if (lhs.size() > 0) residual = std::max(residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  r.homomorphism = residual < WitnessReport::tolerance;

  Eigen::MatrixXd coords(static_cast<Eigen::Index>(target.dim()), static_cast<Eigen::Index>(d));
  double outside = 0;
  for (std::size_t j = 0; j < d; ++j) {
    auto [x, res] = real_coordinates(tbasis, images[j]);
    coords.col(static_cast<Eigen::Index>(j)) = x;
    outside = std::max(outside, res);
  }
  r.max_residual = std::max(residual, outside);
  r.bijective = target.dim() == d && outside < WitnessReport::tolerance &&
                (d == 0 || Eigen::FullPivLU<Eigen::MatrixXd>(coords).rank() == static_cast<Eigen::Index>(d));
  (void)sc;
  r.status = r.homomorphism && r.bijective && r.fingerprint_match ? WitnessStatus::FloatVerified
                                                                  : WitnessStatus::Failed;
  return r;
}

DegenerationData degeneration_at(const FamilyData& fd, const ProjPoint& p) {
  if (!p.is_degenerate()) throw DomainError("degeneration needs ab = 0");
  const LieAlgebraSpec fixed = fixed_fiber_at(fd, p);
  const std::size_t nn = 2 * fd.n(), xd = fd.x_fixed_basis().size();
  const Subspace sub = matrix_span(Field::Real, nn, sector(fixed, 0, xd));
  const Subspace ideal = matrix_span(Field::Real, nn, sector(fixed, xd, fixed.dim()));
  DegenerationData r{p, semidirect_split(fixed, ideal, sub), {}, 0, 0, false};
  r.reductive = LieAlgebraSpec(fd.n(), Field::Real, fd.x_fixed_basis());
  r.ideal_dim = r.split.ideal_basis.size();
  r.expected_ideal_dim = fd.y_basis().size();
  r.reductive_matches = fingerprint(r.split.subalgebra) == fingerprint(r.reductive);
  return r;
}

}  // namespace liefam
