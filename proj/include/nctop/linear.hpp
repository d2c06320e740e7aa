#pragma once

// Exact linear algebra over a prime field F_p. Everything here is
// deterministic and integer-only; no floating point.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nctop/errors.hpp"

namespace nctop {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A residue in [0, p) with exact arithmetic mod a prime p.
class Fp {
 public:
  Fp(long long v, unsigned p) : p_(p) {
    if (!is_prime(p)) throw Error("Fp: modulus " + std::to_string(p) + " is not prime");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<unsigned>(r);
  }

  unsigned value() const { return v_; }
  unsigned modulus() const { return p_; }

  Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % p_, p_); }
  Fp operator-(const Fp& o) const { return raw((v_ + p_ - o.v_) % p_, p_); }
  Fp operator*(const Fp& o) const { return raw((v_ * o.v_) % p_, p_); }
  Fp operator-() const { return raw((p_ - v_) % p_, p_); }

  Fp inv() const {
    if (v_ == 0) throw Error("Fp: inverse of zero");
    // Fermat: v^(p-2) mod p.
    unsigned long long b = v_, r = 1;
    unsigned e = p_ - 2;
    while (e) {
      if (e & 1u) r = r * b % p_;
      b = b * b % p_;
      e >>= 1u;
    }
    return raw(static_cast<unsigned>(r), p_);
  }

  Fp operator/(const Fp& o) const { return *this * o.inv(); }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  static Fp raw(unsigned v, unsigned p) {
    Fp x(p);
    x.v_ = v;
    return x;
  }
  explicit Fp(unsigned p) : v_(0), p_(p) {}
  unsigned v_;
  unsigned p_;
};

/// Coefficient vector over F_p, residues in [0, p).
using Vec = std::vector<unsigned>;

/// Dense row-major matrix over F_p. Zero rows or columns are legal.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, unsigned p)
      : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
    if (!is_prime(p)) throw Error("Matrix: modulus " + std::to_string(p) + " is not prime");
  }

  Matrix(std::size_t rows, std::size_t cols, unsigned p, std::vector<unsigned> entries)
      : Matrix(rows, cols, p) {
    assert(entries.size() == rows * cols);
    for (auto& x : entries) x %= p;
    e_ = std::move(entries);
  }

  static Matrix identity(std::size_t n, unsigned p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned modulus() const { return p_; }

  unsigned operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  unsigned& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  Fp at(std::size_t r, std::size_t c) const { return Fp((*this)(r, c), p_); }

  const std::vector<unsigned>& entries() const { return e_; }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_ && p_ == o.p_);
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        unsigned a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) = (r(i, j) + a * o(k, j)) % p_;
      }
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// this - lambda * I (square only).
  Matrix minus_scalar_identity(unsigned lambda) const {
    assert(rows_ == cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i)
      r(i, i) = (r(i, i) + p_ - lambda % p_) % p_;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
  }

 private:
  std::size_t rows_, cols_;
  unsigned p_;
  std::vector<unsigned> e_;
};

inline Vec mat_vec(const Matrix& m, const Vec& v) {
  assert(v.size() == m.cols());
  Vec r(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = (acc + m(i, j) * v[j]) % m.modulus();
    r[i] = acc;
  }
  return r;
}

inline bool is_zero_vec(const Vec& v) {
  for (unsigned x : v)
    if (x != 0) return false;
  return true;
}

/// Stack matrices with equal column counts on top of each other.
inline Matrix stack_rows(const std::vector<Matrix>& ms, std::size_t cols, unsigned p) {
  std::size_t rows = 0;
  for (const auto& m : ms) rows += m.rows();
  Matrix r(rows, cols, p);
  std::size_t off = 0;
  for (const auto& m : ms) {
    assert(m.cols() == cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(off + i, j) = m(i, j);
    off += m.rows();
  }
  return r;
}

/// Matrix whose rows are the given vectors.
inline Matrix rows_from(const std::vector<Vec>& vs, std::size_t cols, unsigned p) {
  Matrix m(vs.size(), cols, p);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    assert(vs[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = vs[i][j] % p;
  }
  return m;
}

struct RrefResult {
  Matrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form (Gauss-Jordan with exact mod-p pivots).
inline RrefResult rref(const Matrix& in) {
  Matrix m = in;
  const unsigned p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    unsigned inv = Fp(m(r, c), p).inv().value();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      unsigned f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = (m(i, j) + (p - f) * m(r, j)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

/// Canonical kernel basis from the rref free columns, ordered by free-column index.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const unsigned p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) {
      std::size_t c = rr.pivot_cols[r];
      v[c] = (p - rr.matrix(r, f) % p) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solve A x = b; returns one solution or nullopt if inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  assert(b.size() == a.rows());
  const unsigned p = a.modulus();
  Matrix aug(a.rows(), a.cols() + 1, p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % p;
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.matrix(r, a.cols());
  return x;
}

/// Row-reduced description of a subspace, used for canonical quotient coordinates.
struct SubspaceForm {
  Matrix rref_rows;                    // rank x ambient, reduced
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;  // the canonical complement coordinates
  std::size_t ambient;

  std::size_t dim() const { return pivot_cols.size(); }
};

inline SubspaceForm subspace_form(const std::vector<Vec>& basis, std::size_t ambient, unsigned p) {
  RrefResult rr = rref(rows_from(basis, ambient, p));
  Matrix rows(rr.rank, ambient, p);
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = rr.matrix(i, j);
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  return {std::move(rows), rr.pivot_cols, std::move(free_cols), ambient};
}

/// Reduce v modulo the subspace; the result has zeros at all pivot coordinates.
inline Vec reduce_mod(const SubspaceForm& s, Vec v) {
  const unsigned p = s.rref_rows.modulus();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    unsigned f = v[s.pivot_cols[r]] % p;
    if (f == 0) continue;
    for (std::size_t j = 0; j < s.ambient; ++j)
      v[j] = (v[j] + (p - f) * s.rref_rows(r, j)) % p;
  }
  for (auto& x : v) x %= p;
  return v;
}

inline bool in_span(const SubspaceForm& s, const Vec& v) {
  return is_zero_vec(reduce_mod(s, v));
}

/// Coordinates of v in the canonical complement (the free columns), assuming
/// v has already been reduced modulo the subspace.
inline Vec quotient_coords(const SubspaceForm& s, const Vec& reduced) {
  Vec q(s.free_cols.size(), 0);
  for (std::size_t k = 0; k < s.free_cols.size(); ++k) q[k] = reduced[s.free_cols[k]];
  return q;
}

/// Induced matrix of m on canonical complement coordinates, given subspaces of
/// the source and target that m is required to respect.
inline Matrix quotient_action(const Matrix& m, const std::vector<Vec>& source_sub,
                              const std::vector<Vec>& target_sub) {
  const unsigned p = m.modulus();
  SubspaceForm src = subspace_form(source_sub, m.cols(), p);
  SubspaceForm tgt = subspace_form(target_sub, m.rows(), p);
  for (std::size_t r = 0; r < src.dim(); ++r) {
    Vec b(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) b[j] = src.rref_rows(r, j);
    if (!in_span(tgt, mat_vec(m, b)))
      throw NotInvariant("quotient_action: image of source subspace escapes target subspace");
  }
  Matrix q(tgt.free_cols.size(), src.free_cols.size(), p);
  for (std::size_t k = 0; k < src.free_cols.size(); ++k) {
    Vec e(m.cols(), 0);
    e[src.free_cols[k]] = 1;
    Vec img = quotient_coords(tgt, reduce_mod(tgt, mat_vec(m, e)));
    for (std::size_t i = 0; i < img.size(); ++i) q(i, k) = img[i];
  }
  return q;
}

/// Same subspace on both sides (square matrices).
inline Matrix quotient_action(const Matrix& m, const std::vector<Vec>& sub) {
  assert(m.rows() == m.cols());
  return quotient_action(m, sub, sub);
}

}  // namespace nctop
