#include "twistcoh/zmod.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "twistcoh/error.hpp"

namespace twistcoh::zmod {

namespace {

constexpr i64 kModulusLimit = i64{1} << 31;

struct Egcd {
  i64 g, s, t;
};

// s*a + t*b = g = gcd(a, b) for a, b >= 0, not both zero.
Egcd egcd(i64 a, i64 b) {
  if (a != 0 && b % a == 0) return {a, 1, 0};
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// Inverse of a modulo n, gcd(a, n) = 1.
i64 inverse(i64 a, i64 n) {
  if (n == 1) return 0;
  Egcd e = egcd(reduce(a, n), n);
  return reduce(e.s, n);
}

// Replaces (x, y) by (s x + t y, -b/g x + a/g y) entrywise.
void combine(std::span<i64> x, std::span<i64> y, i64 s, i64 t, i64 bg, i64 ag, i64 m) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    i64 xv = x[k], yv = y[k];
    if (xv == 0 && yv == 0) continue;
    x[k] = reduce(mulmod(s, xv, m) + mulmod(t, yv, m), m);
    y[k] = reduce(mulmod(-bg, xv, m) + mulmod(ag, yv, m), m);
  }
}

class Reducer {
 public:
  Reducer(Matrix& A, i64 m, bool want_u) : A_(A), m_(m), want_u_(want_u) {
    if (want_u_) U = Matrix::identity(A.rows());
    V = Matrix::identity(A.cols());
    Vinv = Matrix::identity(A.cols());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(A_.row(i).begin(), A_.row(i).end(), A_.row(j).begin());
    if (want_u_) std::swap_ranges(U.row(i).begin(), U.row(i).end(), U.row(j).begin());
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A_.rows(); ++r) std::swap(A_(r, i), A_(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    std::swap_ranges(Vinv.row(i).begin(), Vinv.row(i).end(), Vinv.row(j).begin());
  }

  // Clears A(i, t) against the pivot row t.
  void row_gcd(std::size_t t, std::size_t i) {
    i64 a = A_(t, t), b = A_(i, t);
    Egcd e = egcd(a, b);
    combine(A_.row(t), A_.row(i), e.s, e.t, b / e.g, a / e.g, m_);
    if (want_u_) combine(U.row(t), U.row(i), e.s, e.t, b / e.g, a / e.g, m_);
  }

  // Clears A(t, j) against the pivot column t.
  void col_gcd(std::size_t t, std::size_t j) {
    i64 a = A_(t, t), b = A_(t, j);
    Egcd e = egcd(a, b);
    i64 bg = b / e.g, ag = a / e.g;
    for (std::size_t r = 0; r < A_.rows(); ++r) col_step(A_, r, t, j, e.s, e.t, bg, ag);
    for (std::size_t r = 0; r < V.rows(); ++r) col_step(V, r, t, j, e.s, e.t, bg, ag);
    // Vinv <- T^{-1} Vinv with T^{-1} = [[a/g, b/g], [-t, s]].
    combine(Vinv.row(t), Vinv.row(j), ag, bg, e.t, e.s, m_);
  }

  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < A_.cols(); ++c) A_(dst, c) = reduce(A_(dst, c) + A_(src, c), m_);
    if (want_u_)
      for (std::size_t c = 0; c < U.cols(); ++c) U(dst, c) = reduce(U(dst, c) + U(src, c), m_);
  }

  Matrix U, V, Vinv;

 private:
  void col_step(Matrix& M, std::size_t r, std::size_t t, std::size_t j, i64 s, i64 tt, i64 bg,
                i64 ag) {
    i64 x = M(r, t), y = M(r, j);
    if (x == 0 && y == 0) return;
    M(r, t) = reduce(mulmod(s, x, m_) + mulmod(tt, y, m_), m_);
    M(r, j) = reduce(mulmod(-bg, x, m_) + mulmod(ag, y, m_), m_);
  }

  Matrix& A_;
  i64 m_;
  bool want_u_;
};

Matrix compress(const Matrix& A, i64 m) {
  RowSpace rs(A.cols(), m);
  for (std::size_t r = 0; r < A.rows(); ++r) rs.add({A.row(r).begin(), A.row(r).end()});
  return rs.rows();
}

}  // namespace

i64 reduce(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  if (a < kModulusLimit && a > -kModulusLimit && b < kModulusLimit && b > -kModulusLimit)
    return (a * b) % m;
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) std::tie(a, b) = std::make_pair(b, a % b);
  return a;
}

i64 checked_mul(i64 a, i64 b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "negative modulus");
  if (a != 0 && b > kModulusLimit / a) throw Error(ErrorCode::Overflow, "modulus exceeds 2^31");
  return a * b;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

void Matrix::append_row(std::span<const i64> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

RowSpace::RowSpace(std::size_t cols, i64 m) : cols_(cols), m_(m), pivot_(cols) {}

void RowSpace::add(std::vector<i64> row) {
  for (auto& v : row) v = reduce(v, m_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] == 0) continue;
    auto& p = pivot_[j];
    if (p.empty()) {
      p = std::move(row);
      return;
    }
    i64 a = p[j], b = row[j];
    Egcd e = egcd(a, b);
    combine(std::span<i64>(p).subspan(j), std::span<i64>(row).subspan(j), e.s, e.t, b / e.g,
            a / e.g, m_);
  }
}

Matrix RowSpace::rows() const {
  Matrix out(0, cols_);
  for (const auto& p : pivot_)
    if (!p.empty()) out.append_row(p);
  return out;
}

Smith smith(Matrix A, i64 m, bool want_u) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const std::size_t r = A.rows(), c = A.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (auto& v : A.row(i)) v = reduce(v, m);
  Reducer red(A, m, want_u);
  const std::size_t k = std::min(r, c);
  std::size_t t = 0;
  for (; t < k; ++t) {
    std::size_t bi = r, bj = c;
    i64 best = m;
    for (std::size_t i = t; i < r && best > 1; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (A(i, j) == 0) continue;
        i64 g = gcd(A(i, j), m);
        if (g < best) {
          best = g;
          bi = i;
          bj = j;
          if (g == 1) break;
        }
      }
    if (bi == r) break;
    red.swap_rows(t, bi);
    red.swap_cols(t, bj);
    for (;;) {
      for (std::size_t i = t + 1; i < r; ++i)
        if (A(i, t) != 0) red.row_gcd(t, i);
      bool dirty = false;
      for (std::size_t j = t + 1; j < c; ++j)
        if (A(t, j) != 0) red.col_gcd(t, j);
      for (std::size_t i = t + 1; i < r && !dirty; ++i) dirty = A(i, t) != 0;
      if (dirty) continue;
      const i64 g = gcd(A(t, t), m);
      std::size_t fix = r;
      for (std::size_t i = t + 1; i < r && fix == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (A(i, j) % g != 0) {
            fix = i;
            break;
          }
      if (fix == r) break;
      red.add_row(t, fix);
    }
  }
  Smith s;
  s.m = m;
  s.rows = r;
  s.cols = c;
  s.raw.assign(k, 0);
  s.diag.assign(c, m);
  for (std::size_t i = 0; i < k; ++i) {
    s.raw[i] = A(i, i);
    s.diag[i] = A(i, i) == 0 ? m : gcd(A(i, i), m);
  }
  s.U = std::move(red.U);
  s.V = std::move(red.V);
  s.Vinv = std::move(red.Vinv);
  return s;
}

std::vector<std::optional<std::vector<i64>>> solve_many(const Matrix& A,
                                                        const std::vector<std::vector<i64>>& bs,
                                                        i64 m) {
  const std::size_t c = A.cols(), K = bs.size();
  for (const auto& b : bs)
    if (b.size() != A.rows()) throw Error(ErrorCode::InvalidArgument, "rhs length mismatch");
  RowSpace rs(c + K, m);
  std::vector<i64> row(c + K);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::copy(A.row(i).begin(), A.row(i).end(), row.begin());
    for (std::size_t k = 0; k < K; ++k) row[c + k] = bs[k][i];
    rs.add(row);
  }
  const Matrix aug = rs.rows();
  const std::size_t r = aug.rows();
  Matrix Ap(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) Ap(i, j) = aug(i, j);
  const Smith s = smith(Ap, m, true);
  const std::size_t kk = std::min(r, c);
  std::vector<std::optional<std::vector<i64>>> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<i64> rhs(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      i64 acc = 0;
      for (std::size_t l = 0; l < r; ++l) acc = reduce(acc + mulmod(s.U(i, l), aug(l, c + k), m), m);
      rhs[i] = acc;
    }
    std::vector<i64> y(c, 0);
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      if (i >= kk) {
        ok = rhs[i] == 0;
        continue;
      }
      const i64 d = s.raw[i];
      const i64 g = d == 0 ? m : gcd(d, m);
      if (rhs[i] % g != 0) {
        ok = false;
        continue;
      }
      if (d == 0) continue;
      const i64 n = m / g;
      y[i] = mulmod(rhs[i] / g, inverse(d / g, n), n == 0 ? 1 : n);
    }
    if (!ok) continue;
    std::vector<i64> x(c, 0);
    for (std::size_t i = 0; i < c; ++i) {
      i64 acc = 0;
      for (std::size_t j = 0; j < c; ++j)
        if (y[j] != 0) acc = reduce(acc + mulmod(s.V(i, j), y[j], m), m);
      x[i] = acc;
    }
    out[k] = std::move(x);
  }
  return out;
}

std::optional<std::vector<i64>> solve(const Matrix& A, std::span<const i64> b, i64 m) {
  return solve_many(A, {std::vector<i64>(b.begin(), b.end())}, m).front();
}

Kernel kernel(const Matrix& A, i64 m) {
  const Smith s = smith(compress(A, m), m, false);
  Kernel k;
  for (std::size_t i = 0; i < s.cols; ++i) {
    const i64 g = s.diag[i];
    if (g == 1) continue;
    std::vector<i64> v(s.cols);
    for (std::size_t r = 0; r < s.cols; ++r) v[r] = mulmod(s.V(r, i), m / g, m);
    k.generators.push_back(std::move(v));
    k.orders.push_back(g);
  }
  return k;
}

AbelianQuotient::AbelianQuotient(const Matrix& relations, std::size_t cols, i64 m)
    : m_(m), cols_(cols) {
  Matrix rel = relations.rows() == 0 ? Matrix(0, cols) : compress(relations, m);
  const Smith s = smith(std::move(rel), m, false);
  for (std::size_t i = 0; i < cols; ++i)
    if (s.diag[i] > 1) {
      inv_.push_back(s.diag[i]);
      pos_.push_back(i);
    }
  V_ = s.V;
  Vinv_ = s.Vinv;
}

std::vector<i64> AbelianQuotient::coords(std::span<const i64> x) const {
  std::vector<i64> out(inv_.size());
  for (std::size_t k = 0; k < inv_.size(); ++k) {
    i64 acc = 0;
    for (std::size_t r = 0; r < cols_; ++r)
      if (x[r] != 0) acc = reduce(acc + mulmod(reduce(x[r], m_), V_(r, pos_[k]), m_), m_);
    out[k] = acc % inv_[k];
  }
  return out;
}

std::vector<i64> AbelianQuotient::lift(std::size_t i) const {
  auto r = Vinv_.row(pos_.at(i));
  return {r.begin(), r.end()};
}

i64 AbelianQuotient::order() const {
  i64 o = 1;
  for (i64 d : inv_) o = checked_mul(o, d);
  return o;
}

}  // namespace twistcoh::zmod
