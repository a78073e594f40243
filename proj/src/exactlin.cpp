#include "liefam/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "liefam/errors.hpp"

namespace liefam {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm2();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

bool parse_unsigned_rational(std::string_view s, Rational& out) {
  auto slash = s.find('/');
  auto digits = [](std::string_view d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (slash == std::string_view::npos) {
    if (!digits(s)) return false;
    out = Rational(mpz_class(std::string(s)));
    return true;
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  if (!digits(num) || !digits(den)) return false;
  mpz_class d(std::string{den});
  if (d == 0) return false;
  out = Rational(mpz_class(std::string(num)), d);
  out.canonicalize();
  return true;
}

// [sign] rational
bool parse_signed_rational(std::string_view s, Rational& out) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!parse_unsigned_rational(s, out)) return false;
  if (neg) out = -out;
  return true;
}

// [sign] [rational] 'i'
bool parse_imaginary(std::string_view s, Rational& out) {
  if (s.empty() || s.back() != 'i') return false;
  s.remove_suffix(1);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    out = 1;
  } else if (!parse_unsigned_rational(s, out)) {
    return false;
  }
  if (neg) out = -out;
  return true;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw ParseError("empty scalar");
  Rational re = 0, im = 0;
  if (text.back() != 'i') {
    if (!parse_signed_rational(text, re)) throw ParseError("invalid scalar '" + original + "'");
    return {re, im};
  }
  // The split between real and imaginary parts is the last sign that is not
  // the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (!parse_imaginary(text, im)) throw ParseError("invalid scalar '" + original + "'");
    return {re, im};
  }
  if (!parse_signed_rational(text.substr(0, split), re) || !parse_imaginary(text.substr(split), im))
    throw ParseError("invalid scalar '" + original + "'");
  return {re, im};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  Rational mag = abs(im_);
  if (sgn(im_) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (mag != 1) out += mag.get_str();
  out += 'i';
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ExactMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const Vector& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

ExactMatrix ExactMatrix::block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

ExactMatrix ExactMatrix::blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                                const ExactMatrix& d) {
  for (const ExactMatrix* x : {&b, &c, &d})
    if (x->rows_ != a.rows_ || x->cols_ != a.cols_) throw DimensionError("block shapes differ");
  ExactMatrix m(2 * a.rows_, 2 * a.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  m.set_block(a.rows_, 0, c);
  m.set_block(a.rows_, a.cols_, d);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

ExactMatrix ExactMatrix::unflatten(std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw DimensionError("flattened length mismatch");
  ExactMatrix m(rows, cols);
  m.data_ = v;
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

bool ExactMatrix::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussianRational& z) { return z.is_real(); });
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  ExactMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix m = *this;
  for (auto& z : m.data_) z = z.conj();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

GaussianRational ExactMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  GaussianRational t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m = *this;
  for (auto& z : m.data_) z = -z;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const GaussianRational& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  return m;
}

Vector ExactMatrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("commutator needs square matrices of equal size");
  return a * b - b * a;
}

Rref rref(ExactMatrix m) {
  Rref out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const GaussianRational pivot = m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) /= pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank(); }

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, ExactMatrix::identity(n));
  Rref r = rref(std::move(aug));
  if (r.rank() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

std::vector<Vector> nullspace(const ExactMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

ExactMatrix realify(const ExactMatrix& m, bool antilinear) {
  ExactMatrix out(2 * m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& a = m(r, c).re();
      const Rational& b = m(r, c).im();
      // (a + bi)(x + iy) = (ax - by) + i(bx + ay); with conj(v): (ax + by) + i(bx - ay).
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = antilinear ? Rational(b) : Rational(-b);
      out(2 * r + 1, 2 * c) = b;
      out(2 * r + 1, 2 * c + 1) = antilinear ? Rational(-a) : Rational(a);
    }
  return out;
}

Vector realify(const Vector& v) {
  Vector out(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[2 * k] = v[k].re();
    out[2 * k + 1] = v[k].im();
  }
  return out;
}

Vector complexify(const Vector& w) {
  if (w.size() % 2 != 0) throw DimensionError("odd length in complexify");
  Vector out(w.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!w[2 * k].is_real() || !w[2 * k + 1].is_real())
      throw FieldError("complexify expects real coordinates");
    out[k] = GaussianRational(w[2 * k].re(), w[2 * k + 1].re());
  }
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vector scaled(const Vector& v, const GaussianRational& s) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * s;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

// ---------------------------------------------------------------------------
// Subspace

Vector Subspace::to_working(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  return field_ == Field::Real ? realify(v) : v;
}

Vector Subspace::from_working(const Vector& w) const { return field_ == Field::Real ? complexify(w) : w; }

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  const std::size_t width = field == Field::Real ? 2 * ambient : ambient;
  ExactMatrix m(vectors.size(), width);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw DimensionError("spanning vector has wrong length");
    Vector w = field == Field::Real ? realify(vectors[r]) : vectors[r];
    for (std::size_t c = 0; c < width; ++c) m(r, c) = w[c];
  }
  Rref r = rref(std::move(m));
  ExactMatrix rows = r.reduced.block(0, 0, r.rank(), width);
  return Subspace(field, ambient, std::move(rows), std::move(r.pivots));
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  std::vector<Vector> e;
  for (std::size_t k = 0; k < ambient; ++k) {
    Vector v(ambient);
    v[k] = 1;
    e.push_back(v);
    if (field == Field::Real) {
      v[k] = GaussianRational::i();
      e.push_back(v);
    }
  }
  return span(field, ambient, e);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(from_working(rows_.row(r)));
  return out;
}

Vector Subspace::residual(Vector w) const {
  for (std::size_t r = 0; r < dim(); ++r) {
    const GaussianRational f = w[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < w.size(); ++c)
      if (!rows_(r, c).is_zero()) w[c] -= f * rows_(r, c);
  }
  return w;
}

bool Subspace::contains(const Vector& v) const {
  return is_zero(residual(to_working(v)));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  Vector w = to_working(v);
  Vector coeffs(dim());
  for (std::size_t r = 0; r < dim(); ++r) coeffs[r] = w[pivots_[r]];
  if (!is_zero(residual(std::move(w)))) return std::nullopt;
  return coeffs;
}

Vector Subspace::remainder(const Vector& v) const { return from_working(residual(to_working(v))); }

Subspace Subspace::scaled(const GaussianRational& s) const {
  std::vector<Vector> b = basis();
  for (auto& v : b) v = liefam::scaled(v, s);
  return span(field_, ambient_, b);
}

Subspace Subspace::as_real() const {
  if (field_ == Field::Real) return *this;
  std::vector<Vector> b = basis();
  std::vector<Vector> doubled;
  for (const auto& v : b) {
    doubled.push_back(v);
    doubled.push_back(liefam::scaled(v, GaussianRational::i()));
  }
  return span(Field::Real, ambient_, doubled);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

Subspace kernel(const ExactMatrix& m, Field field) {
  if (field == Field::Complex) return Subspace::span(Field::Complex, m.cols(), nullspace(m));
  std::vector<Vector> real_null = nullspace(realify(m));
  std::vector<Vector> vecs;
  vecs.reserve(real_null.size());
  for (const auto& w : real_null) vecs.push_back(complexify(w));
  return Subspace::span(Field::Real, m.cols(), vecs);
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field()) throw FieldError("subspaces carry different field tags");
  if (u.ambient() != v.ambient()) throw DimensionError("subspaces live in different ambient spaces");
}
}  // namespace

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  std::vector<Vector> bu = u.basis();
  std::vector<Vector> bv = v.basis();
  if (bu.empty() || bv.empty()) return Subspace::zero(u.field(), u.ambient());
  // Solve sum a_k u_k - sum b_l v_l = 0 with a, b in the tagged field.
  std::vector<Vector> cols;
  for (const auto& x : bu) cols.push_back(u.field() == Field::Real ? realify(x) : x);
  for (const auto& x : bv) cols.push_back(liefam::scaled(u.field() == Field::Real ? realify(x) : x, -1));
  const std::size_t height = cols.front().size();
  std::vector<Vector> null = nullspace(ExactMatrix::from_columns(cols, height));
  std::vector<Vector> out;
  for (const auto& ab : null) {
    Vector x(u.ambient());
    for (std::size_t k = 0; k < bu.size(); ++k)
      if (!ab[k].is_zero())
        for (std::size_t c = 0; c < x.size(); ++c) x[c] += ab[k] * bu[k][c];
    out.push_back(std::move(x));
  }
  return Subspace::span(u.field(), u.ambient(), out);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  std::vector<Vector> all = u.basis();
  for (auto& x : v.basis()) all.push_back(std::move(x));
  return Subspace::span(u.field(), u.ambient(), all);
}

bool member(const Vector& v, const Subspace& u) { return u.contains(v); }

// ---------------------------------------------------------------------------
// Coordinatizer

Coordinatizer::Coordinatizer(Field field, std::size_t ambient, const std::vector<Vector>& basis)
    : field_(field), ambient_(ambient), dim_(basis.size()) {
  const std::size_t width = field == Field::Real ? 2 * ambient : ambient;
  std::vector<Vector> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.size() != ambient) throw DimensionError("basis vector has wrong length");
    cols.push_back(field == Field::Real ? realify(b) : b);
  }
  basis_ = ExactMatrix::from_columns(cols, width);
  // Independent rows of the basis matrix = pivot columns of its transpose.
  Rref r = rref(basis_.transpose());
  if (r.rank() != dim_) throw DimensionError("basis is linearly dependent over the " + std::string(to_string(field)) + " field");
  rows_ = r.pivots;
  ExactMatrix square(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) square(i, j) = basis_(rows_[i], j);
  inverse_ = *inverse(square);
}

std::optional<Vector> Coordinatizer::solve(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  Vector w = field_ == Field::Real ? realify(v) : v;
  Vector picked(dim_);
  for (std::size_t i = 0; i < dim_; ++i) picked[i] = w[rows_[i]];
  Vector coeffs = inverse_ * picked;
  if (basis_ * coeffs != w) return std::nullopt;
  return coeffs;
}

}  // namespace liefam
