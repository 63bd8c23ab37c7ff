#include "lift/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace lift {

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1)
    os << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw error("bad rational literal: '" + s + "'");
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw error("ragged row list");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<std::vector<Int>>& cols) {
  if (cols.empty()) return IntMat();
  IntMat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw error("ragged column list");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Int> IntMat::row(std::size_t r) const {
  std::vector<Int> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

std::vector<Int> IntMat::col(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw error("matrix shape mismatch in product");
  IntMat p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        p.at(i, j) += at(i, k) * other.at(k, j);
    }
  return p;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw error("matrix/vector shape mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

namespace {

// row_op: rows[i] += q * rows[k], mirrored into the U transform.
void add_row(IntMat& m, IntMat& u, std::size_t i, std::size_t k, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) += q * m.at(k, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) += q * u.at(k, c);
}

void add_col(IntMat& m, IntMat& v, std::size_t j, std::size_t k, const Int& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, j) += q * m.at(r, k);
  for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, j) += q * v.at(r, k);
}

void negate_row(IntMat& m, IntMat& u, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

SmithResult smith_decompose(const IntMat& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  SmithResult res{IntMat::identity(rows), input, IntMat::identity(cols)};
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Find a pivot of minimal absolute value in the trailing block.
    bool found = false;
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s.at(i, j) == 0) continue;
        Int a = abs(s.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;

    for (;;) {
      if (pr != t) {
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
      }
      if (pc != t) {
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);
      }
      // Reduce column t, then row t, against the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        add_row(s, u, i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        add_col(s, v, j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (!dirty) break;
      // Some remainder survived; it is smaller than the pivot, re-pick.
      pr = t;
      pc = t;
      Int mn = abs(s.at(t, t));
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s.at(i, j) != 0 && abs(s.at(i, j)) < mn) {
            mn = abs(s.at(i, j));
            pr = i;
            pc = j;
          }
    }

    if (s.at(t, t) < 0) negate_row(s, u, t);

    // Enforce the divisibility chain: fold any non-divisible entry into
    // the pivot position and redo this step.
    bool redo = false;
    for (std::size_t i = t + 1; i < rows && !redo; ++i)
      for (std::size_t j = t + 1; j < cols && !redo; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          add_row(s, u, t, i, 1);
          redo = true;
        }
    if (redo) --t;
  }
  return res;
}

IntMat integer_kernel(const IntMat& m) {
  if (m.cols() == 0) return IntMat(0, 0);
  if (m.rows() == 0) return IntMat::identity(m.cols());
  SmithResult snf = smith_decompose(m);
  std::size_t rk = 0;
  const std::size_t n = std::min(m.rows(), m.cols());
  while (rk < n && snf.s.at(rk, rk) != 0) ++rk;
  // ker(m) = v * ker(s): the trailing cols-rk columns of v.
  IntMat k(m.cols(), m.cols() - rk);
  for (std::size_t j = rk; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, j - rk) = snf.v.at(i, j);
  return k;
}

std::size_t rank(const IntMat& m) {
  SmithResult snf = smith_decompose(m);
  std::size_t rk = 0;
  const std::size_t n = std::min(m.rows(), m.cols());
  while (rk < n && snf.s.at(rk, rk) != 0) ++rk;
  return rk;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw error("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw error("solve_integer: shape mismatch");
  SmithResult snf = smith_decompose(m);
  std::vector<Int> ub = snf.u.apply(b);
  std::vector<Int> y(m.cols(), Int(0));
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int d = (i < n) ? snf.s.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return snf.v.apply(y);
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& m, const std::vector<Int>& b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw error("solve_rational: shape mismatch");
  const std::size_t n = m.rows();
  // Gaussian elimination over Q.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n] = Rat(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;  // singular
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

std::optional<std::vector<Int>> kernel_line(const IntMat& m) {
  IntMat k = integer_kernel(m);
  if (k.cols() != 1) return std::nullopt;
  std::vector<Int> g = k.col(0);
  return primitive(g);
}

IntMat inverse_unimodular(const IntMat& m) {
  if (!is_unimodular(m)) throw error("inverse_unimodular: matrix is not unimodular");
  const std::size_t n = m.rows();
  IntMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> e(n, Int(0));
    e[j] = 1;
    auto col = solve_rational(m, e);
    for (std::size_t i = 0; i < n; ++i) {
      const Rat& q = (*col)[i];
      if (boost::multiprecision::denominator(q) != 1)
        throw error("inverse_unimodular: non-integral inverse");
      inv.at(i, j) = boost::multiprecision::numerator(q);
    }
  }
  return inv;
}

}  // namespace lift
