#pragma once
// Exact linear algebra over Z_m: Smith normal form with transforms,
// row-space compression, linear solves, kernels and abelian quotients.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace twistcoh::zmod {

using i64 = std::int64_t;

i64 reduce(i64 a, i64 m);
i64 mulmod(i64 a, i64 b, i64 m);
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);  // throws Overflow beyond 2^31

// Checked product for moduli; throws Overflow beyond 2^31.
i64 checked_mul(i64 a, i64 b);

// Dense row-major matrix of residues. The modulus travels separately.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  i64& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  i64 operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<i64> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const i64> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  void append_row(std::span<const i64> r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<i64> a_;
};

// Compresses a stream of rows into at most `cols` rows spanning the same
// Z_m-submodule, in echelon shape.
class RowSpace {
 public:
  RowSpace(std::size_t cols, i64 m);
  void add(std::vector<i64> row);
  Matrix rows() const;
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  i64 m_;
  std::vector<std::vector<i64>> pivot_;  // indexed by pivot column, empty if none
};

// U·A·V = D with D diagonal. diag[i] holds gcd(D_ii, m) (m standing for zero),
// forming a divisibility chain; positions beyond the rank of A are m.
struct Smith {
  i64 m = 1;
  std::size_t rows = 0, cols = 0;
  std::vector<i64> raw;   // D_ii as computed, length min(rows, cols)
  std::vector<i64> diag;  // length cols
  Matrix U, V, Vinv;      // U only if requested
};

Smith smith(Matrix A, i64 m, bool want_u);

// One solution of A x = b over Z_m, or nullopt.
std::optional<std::vector<i64>> solve(const Matrix& A, std::span<const i64> b, i64 m);

// Solves A x = b_k for several right-hand sides sharing A.
std::vector<std::optional<std::vector<i64>>> solve_many(const Matrix& A,
                                                        const std::vector<std::vector<i64>>& bs,
                                                        i64 m);

struct Kernel {
  std::vector<std::vector<i64>> generators;  // one per nontrivial cyclic summand
  std::vector<i64> orders;                   // order of each generator
};

// Kernel of x ↦ A x over Z_m, as a direct sum of cyclic groups.
Kernel kernel(const Matrix& A, i64 m);

// Z_m^c modulo the row span of `relations`, in invariant-factor form.
class AbelianQuotient {
 public:
  AbelianQuotient(const Matrix& relations, std::size_t cols, i64 m);
  const std::vector<i64>& invariants() const { return inv_; }
  std::vector<i64> coords(std::span<const i64> x) const;
  std::vector<i64> lift(std::size_t i) const;
  i64 order() const;

 private:
  i64 m_;
  std::size_t cols_;
  std::vector<i64> inv_;
  std::vector<std::size_t> pos_;
  Matrix V_, Vinv_;
};

}  // namespace twistcoh::zmod
