#ifndef LIEFAM_TESTS_ORACLE_HPP
#define LIEFAM_TESTS_ORACLE_HPP

// Floating-point reference computations, written against Eigen only, used
// to produce expected values for the exact code.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "liefam/exactlin.hpp"

namespace oracle {

using CMat = Eigen::MatrixXcd;

inline CMat to_eigen(const liefam::ExactMatrix& m) {
  CMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = {m(r, c).re().get_d(), m(r, c).im().get_d()};
  return out;
}

inline std::vector<CMat> to_eigen(const std::vector<liefam::ExactMatrix>& b) {
  std::vector<CMat> out;
  for (const auto& m : b) out.push_back(to_eigen(m));
  return out;
}

// Real coordinates of a matrix: real parts then imaginary parts.
inline Eigen::VectorXd real_vec(const CMat& m) {
  const Eigen::Index k = m.size();
  Eigen::VectorXd v(2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    v(i) = m(i).real();
    v(k + i) = m(i).imag();
  }
  return v;
}

inline Eigen::MatrixXd real_columns(const std::vector<CMat>& b) {
  Eigen::MatrixXd out(2 * b.front().size(), static_cast<Eigen::Index>(b.size()));
  for (std::size_t j = 0; j < b.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = real_vec(b[j]);
  return out;
}

inline std::size_t real_rank(const std::vector<CMat>& b, double tol = 1e-9) {
  if (b.empty()) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(real_columns(b));
  lu.setThreshold(tol);
  return static_cast<std::size_t>(lu.rank());
}

inline CMat bracket(const CMat& a, const CMat& b) { return a * b - b * a; }

// Largest least-squares residual of [B_i, B_j] against the real span.
inline double closure_residual(const std::vector<CMat>& b) {
  const Eigen::MatrixXd cols = real_columns(b);
  const auto qr = cols.colPivHouseholderQr();
  double worst = 0;
  for (const auto& x : b)
    for (const auto& y : b) {
      const Eigen::VectorXd t = real_vec(bracket(x, y));
      worst = std::max(worst, (cols * qr.solve(t) - t).cwiseAbs().maxCoeff());
    }
  return worst;
}

// The same for a complex span, seen as the real span of B_i and i B_i.
inline double complex_closure_residual(const std::vector<CMat>& b) {
  std::vector<CMat> doubled = b;
  for (const auto& x : b) doubled.push_back(std::complex<double>(0, 1) * x);
  return closure_residual(doubled);
}

// Killing form of a real Lie algebra given by a real basis of matrices.
inline Eigen::MatrixXd killing(const std::vector<CMat>& b) {
  const auto d = static_cast<Eigen::Index>(b.size());
  const Eigen::MatrixXd cols = real_columns(b);
  const auto qr = cols.colPivHouseholderQr();
  std::vector<Eigen::MatrixXd> ad;
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::MatrixXd a(d, d);
    for (Eigen::Index j = 0; j < d; ++j) a.col(j) = qr.solve(real_vec(bracket(b[i], b[j])));
    ad.push_back(a);
  }
  Eigen::MatrixXd k(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) k(i, j) = (ad[i] * ad[j]).trace();
  return k;
}

inline std::array<std::size_t, 3> signature(const Eigen::MatrixXd& sym, double tol = 1e-8) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()));
  std::array<std::size_t, 3> s{0, 0, 0};
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double e = es.eigenvalues()(i);
    if (e > tol * scale)
      ++s[0];
    else if (e < -tol * scale)
      ++s[1];
    else
      ++s[2];
  }
  return s;
}

// Real basis of [L, L] extracted by SVD.
inline std::vector<CMat> derived(const std::vector<CMat>& b, double tol = 1e-9) {
  std::vector<CMat> all;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) all.push_back(bracket(b[i], b[j]));
  if (all.empty()) return {};
  const Eigen::MatrixXd cols = real_columns(all);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  std::vector<CMat> out;
  const Eigen::Index rows = b.front().rows(), k = b.front().size();
  for (Eigen::Index c = 0; c < svd.singularValues().size(); ++c) {
    if (svd.singularValues()(c) <= tol * std::max(1.0, svd.singularValues()(0))) break;
    CMat m(rows, rows);
    for (Eigen::Index i = 0; i < k; ++i) m(i) = {svd.matrixU()(i, c), svd.matrixU()(k + i, c)};
    out.push_back(m);
  }
  return out;
}

inline std::array<std::size_t, 3> killing_signature(const std::vector<liefam::ExactMatrix>& basis) {
  return signature(killing(to_eigen(basis)));
}

}  // namespace oracle

#endif
