#ifndef RLIE_GF_HPP
#define RLIE_GF_HPP

// Exact linear algebra over a prime field GF(p).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlie {

// A prime field of odd or even characteristic p. Elements are canonical
// representatives 0..p-1 stored as int64_t; every operation reduces.
class PrimeField {
public:
  explicit PrimeField(int64_t p) : m_p(p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }

  int64_t p() const { return m_p; }

  int64_t reduce(int64_t a) const {
    int64_t r = a % m_p;
    return r < 0 ? r + m_p : r;
  }

  int64_t add(int64_t a, int64_t b) const { return reduce(a + b); }
  int64_t sub(int64_t a, int64_t b) const { return reduce(a - b); }
  int64_t neg(int64_t a) const { return reduce(-a); }
  int64_t mul(int64_t a, int64_t b) const { return reduce(reduce(a) * reduce(b)); }

  int64_t pow(int64_t a, int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    int64_t base = reduce(a), r = 1 % m_p;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Multiplicative inverse by extended Euclid; inverting zero is a usage error.
  int64_t inv(int64_t a) const {
    int64_t x = reduce(a);
    if (x == 0) throw std::invalid_argument("division by zero in GF(" + std::to_string(m_p) + ")");
    int64_t t = 0, newt = 1, r = m_p, newr = x;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt;
      t = newt; newt = tmp;
      tmp = r - q * newr;
      r = newr; newr = tmp;
    }
    return reduce(t);
  }

  int64_t div(int64_t a, int64_t b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return m_p == o.m_p; }
  bool operator!=(const PrimeField& o) const { return m_p != o.m_p; }

private:
  int64_t m_p;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b)
    throw std::invalid_argument("operands live over GF(" + std::to_string(a.p()) + ") and GF(" +
                                std::to_string(b.p()) + ")");
}

// Dense vector over GF(p); carries its field so mixed-field operations fail loudly.
class FpVector {
public:
  FpVector(PrimeField f, std::size_t n) : m_f(f), m_v(n, 0) {}
  FpVector(PrimeField f, std::vector<int64_t> entries) : m_f(f), m_v(std::move(entries)) {
    for (auto& e : m_v) e = m_f.reduce(e);
  }
  // Keeps brace-list entries from resolving to the size constructor.
  FpVector(PrimeField f, std::initializer_list<int64_t> entries)
      : FpVector(f, std::vector<int64_t>(entries)) {}

  static FpVector unit(PrimeField f, std::size_t n, std::size_t i) {
    FpVector v(f, n);
    v.m_v.at(i) = 1 % f.p();
    return v;
  }

  const PrimeField& field() const { return m_f; }
  std::size_t size() const { return m_v.size(); }
  int64_t operator[](std::size_t i) const { return m_v.at(i); }
  void set(std::size_t i, int64_t a) { m_v.at(i) = m_f.reduce(a); }
  const std::vector<int64_t>& entries() const { return m_v; }

  bool is_zero() const {
    for (auto e : m_v)
      if (e != 0) return false;
    return true;
  }

  FpVector operator+(const FpVector& o) const {
    check(o);
    FpVector r(m_f, m_v.size());
    for (std::size_t i = 0; i < m_v.size(); ++i) r.m_v[i] = m_f.add(m_v[i], o.m_v[i]);
    return r;
  }
  FpVector operator-(const FpVector& o) const {
    check(o);
    FpVector r(m_f, m_v.size());
    for (std::size_t i = 0; i < m_v.size(); ++i) r.m_v[i] = m_f.sub(m_v[i], o.m_v[i]);
    return r;
  }
  FpVector operator*(int64_t a) const {
    FpVector r(m_f, m_v.size());
    for (std::size_t i = 0; i < m_v.size(); ++i) r.m_v[i] = m_f.mul(m_v[i], a);
    return r;
  }
  FpVector operator-() const { return *this * (m_f.p() - 1); }
  FpVector& operator+=(const FpVector& o) { return *this = *this + o; }
  FpVector& operator-=(const FpVector& o) { return *this = *this - o; }

  bool operator==(const FpVector& o) const { return m_f == o.m_f && m_v == o.m_v; }
  bool operator!=(const FpVector& o) const { return !(*this == o); }

private:
  void check(const FpVector& o) const {
    require_same_field(m_f, o.m_f);
    if (m_v.size() != o.m_v.size()) throw std::invalid_argument("vector size mismatch");
  }

  PrimeField m_f;
  std::vector<int64_t> m_v;
};

// Result of a linear solve: either a solution or a witness row where the
// system is inconsistent.
struct SolveResult {
  bool consistent = false;
  std::optional<FpVector> solution;  // one solution, free variables set to zero
};

// Dense matrix over GF(p), row major.
class FpMatrix {
public:
  FpMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : m_f(f), m_rows(rows), m_cols(cols), m_a(rows * cols, 0) {}

  static FpMatrix identity(PrimeField f, std::size_t n) {
    FpMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static FpMatrix from_rows(PrimeField f, const std::vector<std::vector<int64_t>>& rows) {
    std::size_t rc = rows.size(), cc = rc ? rows[0].size() : 0;
    FpMatrix m(f, rc, cc);
    for (std::size_t i = 0; i < rc; ++i) {
      if (rows[i].size() != cc) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  const PrimeField& field() const { return m_f; }
  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }
  int64_t at(std::size_t i, std::size_t j) const { return m_a.at(i * m_cols + j); }
  void set(std::size_t i, std::size_t j, int64_t a) { m_a.at(i * m_cols + j) = m_f.reduce(a); }

  FpVector row(std::size_t i) const {
    FpVector v(m_f, m_cols);
    for (std::size_t j = 0; j < m_cols; ++j) v.set(j, at(i, j));
    return v;
  }
  FpVector col(std::size_t j) const {
    FpVector v(m_f, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) v.set(i, at(i, j));
    return v;
  }
  void set_row(std::size_t i, const FpVector& v) {
    require_same_field(m_f, v.field());
    if (v.size() != m_cols) throw std::invalid_argument("row size mismatch");
    for (std::size_t j = 0; j < m_cols; ++j) set(i, j, v[j]);
  }
  void set_col(std::size_t j, const FpVector& v) {
    require_same_field(m_f, v.field());
    if (v.size() != m_rows) throw std::invalid_argument("column size mismatch");
    for (std::size_t i = 0; i < m_rows; ++i) set(i, j, v[i]);
  }

  FpMatrix operator+(const FpMatrix& o) const {
    check_shape(o);
    FpMatrix r(m_f, m_rows, m_cols);
    for (std::size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_f.add(m_a[k], o.m_a[k]);
    return r;
  }
  FpMatrix operator-(const FpMatrix& o) const {
    check_shape(o);
    FpMatrix r(m_f, m_rows, m_cols);
    for (std::size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_f.sub(m_a[k], o.m_a[k]);
    return r;
  }
  FpMatrix operator*(int64_t a) const {
    FpMatrix r(m_f, m_rows, m_cols);
    for (std::size_t k = 0; k < m_a.size(); ++k) r.m_a[k] = m_f.mul(m_a[k], a);
    return r;
  }
  FpMatrix operator*(const FpMatrix& o) const {
    require_same_field(m_f, o.m_f);
    if (m_cols != o.m_rows) throw std::invalid_argument("matrix shape mismatch in product");
    FpMatrix r(m_f, m_rows, o.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t k = 0; k < m_cols; ++k) {
        int64_t aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.m_cols; ++j)
          r.m_a[i * o.m_cols + j] = m_f.add(r.m_a[i * o.m_cols + j], m_f.mul(aik, o.at(k, j)));
      }
    return r;
  }
  FpVector operator*(const FpVector& v) const {
    require_same_field(m_f, v.field());
    if (m_cols != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    FpVector r(m_f, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
      int64_t s = 0;
      for (std::size_t j = 0; j < m_cols; ++j) s = m_f.add(s, m_f.mul(at(i, j), v[j]));
      r.set(i, s);
    }
    return r;
  }

  bool operator==(const FpMatrix& o) const {
    return m_f == o.m_f && m_rows == o.m_rows && m_cols == o.m_cols && m_a == o.m_a;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (auto e : m_a)
      if (e != 0) return false;
    return true;
  }

  FpMatrix power(int64_t e) const {
    if (m_rows != m_cols) throw std::invalid_argument("power of a non-square matrix");
    FpMatrix r = identity(m_f, m_rows), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Reduced row echelon form; returns the pivot columns.
  FpMatrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    FpMatrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m_cols && r < m_rows; ++c) {
      std::size_t sel = r;
      while (sel < m_rows && m.at(sel, c) == 0) ++sel;
      if (sel == m_rows) continue;
      if (sel != r)
        for (std::size_t j = 0; j < m_cols; ++j) {
          int64_t t = m.at(r, j);
          m.set(r, j, m.at(sel, j));
          m.set(sel, j, t);
        }
      int64_t piv_inv = m_f.inv(m.at(r, c));
      for (std::size_t j = 0; j < m_cols; ++j) m.set(r, j, m_f.mul(m.at(r, j), piv_inv));
      for (std::size_t i = 0; i < m_rows; ++i) {
        if (i == r) continue;
        int64_t factor = m.at(i, c);
        if (factor == 0) continue;
        for (std::size_t j = 0; j < m_cols; ++j)
          m.set(i, j, m_f.sub(m.at(i, j), m_f.mul(factor, m.at(r, j))));
      }
      piv.push_back(c);
      ++r;
    }
    if (pivots) *pivots = piv;
    return m;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  // Dimension of the column space.
  std::size_t image_dim() const { return rank(); }

  // Basis of the right kernel {x : Mx = 0}.
  std::vector<FpVector> kernel_basis() const {
    std::vector<std::size_t> piv;
    FpMatrix r = rref(&piv);
    std::vector<bool> is_pivot(m_cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (std::size_t freec = 0; freec < m_cols; ++freec) {
      if (is_pivot[freec]) continue;
      FpVector v(m_f, m_cols);
      v.set(freec, 1);
      for (std::size_t k = 0; k < piv.size(); ++k) v.set(piv[k], m_f.neg(r.at(k, freec)));
      basis.push_back(v);
    }
    return basis;
  }

  // Solve Mx = b; free variables are set to zero. Inconsistency is reported,
  // not thrown: an unsolvable system is a legitimate mathematical answer.
  SolveResult solve(const FpVector& b) const {
    require_same_field(m_f, b.field());
    if (b.size() != m_rows) throw std::invalid_argument("rhs size mismatch");
    FpMatrix aug(m_f, m_rows, m_cols + 1);
    for (std::size_t i = 0; i < m_rows; ++i) {
      for (std::size_t j = 0; j < m_cols; ++j) aug.set(i, j, at(i, j));
      aug.set(i, m_cols, b[i]);
    }
    std::vector<std::size_t> piv;
    FpMatrix r = aug.rref(&piv);
    SolveResult res;
    for (auto c : piv)
      if (c == m_cols) return res;  // pivot in the augmented column: inconsistent
    res.consistent = true;
    FpVector x(m_f, m_cols);
    for (std::size_t k = 0; k < piv.size(); ++k) x.set(piv[k], r.at(k, m_cols));
    res.solution = x;
    return res;
  }

  std::optional<FpMatrix> inverse() const {
    if (m_rows != m_cols) throw std::invalid_argument("inverse of a non-square matrix");
    FpMatrix aug(m_f, m_rows, 2 * m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
      for (std::size_t j = 0; j < m_cols; ++j) aug.set(i, j, at(i, j));
      aug.set(i, m_cols + i, 1);
    }
    FpMatrix r = aug.rref();
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t j = 0; j < m_cols; ++j)
        if (r.at(i, j) != (i == j ? 1 % m_f.p() : 0)) return std::nullopt;
    FpMatrix inv(m_f, m_rows, m_cols);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t j = 0; j < m_cols; ++j) inv.set(i, j, r.at(i, m_cols + j));
    return inv;
  }

private:
  void check_shape(const FpMatrix& o) const {
    require_same_field(m_f, o.m_f);
    if (m_rows != o.m_rows || m_cols != o.m_cols)
      throw std::invalid_argument("matrix shape mismatch");
  }

  PrimeField m_f;
  std::size_t m_rows, m_cols;
  std::vector<int64_t> m_a;
};

// Stack matrices vertically; all blocks must share field and column count.
inline FpMatrix vstack(const std::vector<FpMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of no blocks");
  std::size_t rows = 0, cols = blocks[0].cols();
  for (const auto& b : blocks) {
    require_same_field(blocks[0].field(), b.field());
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  FpMatrix m(blocks[0].field(), rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) m.set(r, j, b.at(i, j));
  return m;
}

}  // namespace rlie

#endif
