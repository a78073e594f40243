#ifndef LIEFAM_EXACTLIN_HPP
#define LIEFAM_EXACTLIN_HPP

// Exact linear algebra over the Gaussian rationals Q(i).
//
// Every algebraic computation in liefam runs on these types; nothing here
// touches floating point. Real-linear questions about complex coordinates
// (fixed points of antilinear maps, real spans of complex matrices) are
// answered on doubled real coordinates with the (re, im) interleaving
//
//     v = (v_0, ..., v_{m-1})  <->  (re v_0, im v_0, re v_1, im v_1, ...)
//
// which is the only layout used anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liefam {

using Rational = mpq_class;

class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);  // DomainError on 0

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Text format `p/q+r/si`: optional sign, parts omitted when zero, a unit
  // imaginary coefficient written as a bare `i`. Examples: `3`, `-1/2i`,
  // `0`, `1/2-i`. to_string always emits the canonical spelling.
  std::string to_string() const;
  static GaussianRational parse(std::string_view text);  // ParseError

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using Vector = std::vector<GaussianRational>;

enum class Field { Real, Complex };

const char* to_string(Field f);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij
  static ExactMatrix diagonal(const Vector& d);
  static ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);
  // [[a, b], [c, d]]; all four blocks must share one shape.
  static ExactMatrix blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                            const ExactMatrix& d);
  static ExactMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static ExactMatrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_real() const;

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  // Row-major copy of the entries.
  const Vector& flatten() const { return data_; }
  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);

  ExactMatrix conj() const;
  ExactMatrix transpose() const;
  ExactMatrix adjoint() const { return conj().transpose(); }
  GaussianRational trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;
  Vector operator*(const Vector& v) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

// AB - BA. DimensionError unless both are square of one size.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

// Exact inverse; nullopt when singular. DimensionError when not square.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Reduced row-echelon form over Q(i); pivots are column indices.
struct Rref {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};
Rref rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

// Null space of `m` over the scalars its entries live in: a matrix with
// rational entries yields rational basis vectors.
std::vector<Vector> nullspace(const ExactMatrix& m);

// Doubled real coordinates. realify(M, false) is the real matrix of v -> Mv,
// realify(M, true) the real matrix of v -> M conj(v).
ExactMatrix realify(const ExactMatrix& m, bool antilinear = false);
Vector realify(const Vector& v);
Vector complexify(const Vector& real_coords);

Vector conj(const Vector& v);
Vector scaled(const Vector& v, const GaussianRational& s);
bool is_zero(const Vector& v);

// A subspace of K^m, K = Q(i), spanned over the tagged field. Real-tagged
// subspaces are real spans of complex vectors. The stored basis is the RREF
// of the spanning set in working coordinates (complex coordinates for the
// complex tag, doubled real coordinates for the real tag); equality is RREF
// equality.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace zero(Field field, std::size_t ambient) { return span(field, ambient, {}); }
  static Subspace whole(Field field, std::size_t ambient);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }

  // Canonical basis, as complex coordinate vectors.
  std::vector<Vector> basis() const;

  bool contains(const Vector& v) const;
  // Coefficients of v in basis() (real numbers for a real-tagged subspace);
  // nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  // v minus its reduction against the canonical basis; zero iff v is inside.
  Vector remainder(const Vector& v) const;

  // {s*v : v in U}; for a real-tagged U and s = i this is i*U.
  Subspace scaled(const GaussianRational& s) const;
  // The same set of vectors seen as a real span (dimension doubles).
  Subspace as_real() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Field field, std::size_t ambient, ExactMatrix rows, std::vector<std::size_t> pivots)
      : field_(field), ambient_(ambient), rows_(std::move(rows)), pivots_(std::move(pivots)) {}
  Vector to_working(const Vector& v) const;
  Vector from_working(const Vector& w) const;
  Vector residual(Vector w) const;

  Field field_ = Field::Complex;
  std::size_t ambient_ = 0;
  ExactMatrix rows_;  // dim x working-dimension, RREF
  std::vector<std::size_t> pivots_;
};

// Kernel of M: over C as-is, over R as the real-linear map on doubled
// coordinates.
Subspace kernel(const ExactMatrix& m, Field field);
Subspace intersect(const Subspace& u, const Subspace& v);  // FieldError, DimensionError
Subspace sum(const Subspace& u, const Subspace& v);
bool member(const Vector& v, const Subspace& u);

// Coordinates with respect to a fixed, possibly non-canonical, independent
// list of vectors. Built once per basis; each solve is a d x d product plus
// a residual check.
class Coordinatizer {
 public:
  Coordinatizer() = default;
  // DimensionError when the vectors are dependent over `field`.
  Coordinatizer(Field field, std::size_t ambient, const std::vector<Vector>& basis);
  std::size_t dim() const { return dim_; }
  std::optional<Vector> solve(const Vector& v) const;

 private:
  Field field_ = Field::Complex;
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  ExactMatrix basis_;  // working-dim x d
  std::vector<std::size_t> rows_;
  ExactMatrix inverse_;  // inverse of basis_ restricted to rows_
};

}  // namespace liefam

#endif
