#include "aw/snf.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

namespace aw {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

Int to_int_checked(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<Int>::max()) ||
      x < BigInt(std::numeric_limits<Int>::min())) {
    throw std::logic_error("integer coordinate out of range");
  }
  return x.convert_to<Int>();
}

IMat identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat multiply(const IMat& a, const IMat& b) {
  if (a.cols != b.rows) throw std::logic_error("matrix shape mismatch");
  IMat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t t = 0; t < a.cols; ++t) {
      const BigInt& x = a.at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += x * b.at(t, j);
    }
  return c;
}

void swap_rows(IMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row_i -= q * row_t
void add_row(IMat& m, std::size_t i, std::size_t t, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(t, c);
}

// col_j -= q * col_t
void add_col(IMat& m, std::size_t j, std::size_t t, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, t);
}

void negate_row(IMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Truncated quotient; the remainder m - q*p then satisfies |rem| < |p|.
BigInt trunc_div(const BigInt& x, const BigInt& p) { return x / p; }

void verify_snf(const IMat& m, const SnfResult& r) {
  IMat prod = multiply(multiply(r.u, m), r.v);
  if (prod.rows != r.d.rows || prod.cols != r.d.cols)
    throw std::logic_error("smith factor shape mismatch");
  for (std::size_t i = 0; i < prod.rows; ++i)
    for (std::size_t j = 0; j < prod.cols; ++j)
      if (prod.at(i, j) != r.d.at(i, j))
        throw std::logic_error("smith factorization failed to reproduce input");
  std::size_t rank = std::min(r.d.rows, r.d.cols);
  for (std::size_t i = 0; i < prod.rows; ++i)
    for (std::size_t j = 0; j < prod.cols; ++j)
      if (i != j && r.d.at(i, j) != 0)
        throw std::logic_error("smith form is not diagonal");
  for (std::size_t t = 0; t < rank; ++t) {
    if (r.d.at(t, t) < 0) throw std::logic_error("smith diagonal entry negative");
    if (t + 1 < rank && r.d.at(t, t) != 0 && r.d.at(t + 1, t + 1) % r.d.at(t, t) != 0)
      throw std::logic_error("smith divisibility chain broken");
    if (r.d.at(t, t) == 0 && t + 1 < rank && r.d.at(t + 1, t + 1) != 0)
      throw std::logic_error("smith zero entry precedes nonzero entry");
  }
}

}  // namespace

SnfResult smith_normal_form(const IMat& m) {
  SnfResult r;
  r.u = identity(m.rows);
  r.v = identity(m.cols);
  r.d = m;
  IMat& d = r.d;
  std::size_t lim = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Minimal nonzero |entry| in the trailing block, first by row then
      // column, keeps the elimination deterministic.
      std::size_t pi = t, pj = t;
      BigInt best = 0;
      for (std::size_t i = t; i < d.rows; ++i)
        for (std::size_t j = t; j < d.cols; ++j) {
          const BigInt& x = d.at(i, j);
          if (x == 0) continue;
          if (best == 0 || big_abs(x) < best) {
            best = big_abs(x);
            pi = i;
            pj = j;
          }
        }
      if (best == 0) {
        t = lim;  // trailing block is zero, nothing left to do
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(r.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(r.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        BigInt q = trunc_div(d.at(i, t), d.at(t, t));
        add_row(d, i, t, q);
        add_row(r.u, i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        BigInt q = trunc_div(d.at(t, j), d.at(t, t));
        add_col(d, j, t, q);
        add_col(r.v, j, t, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide every remaining entry; fold an offending row in
      // and restart so the gcd migrates into the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            add_row(d, t, i, BigInt(-1));
            add_row(r.u, t, i, BigInt(-1));
            divides = false;
          }
      if (!divides) continue;

      if (d.at(t, t) < 0) {
        negate_row(d, t);
        negate_row(r.u, t);
      }
      break;
    }
    if (t == lim) break;
  }

  verify_snf(m, r);
  return r;
}

namespace {

std::vector<BigInt> mat_apply(const IMat& m, const std::vector<BigInt>& x) {
  if (m.cols != x.size()) throw std::logic_error("matrix/vector shape mismatch");
  std::vector<BigInt> y(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

}  // namespace

bool solvable(const IMat& m, const std::vector<BigInt>& b) {
  if (b.size() != m.rows) throw std::logic_error("rhs length mismatch");
  SnfResult r = smith_normal_form(m);
  std::vector<BigInt> c = mat_apply(r.u, b);
  std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    BigInt di = i < lim ? r.d.at(i, i) : BigInt(0);
    if (di == 0) {
      if (c[i] != 0) return false;
    } else if (c[i] % di != 0) {
      return false;
    }
  }
  return true;
}

bool GroupElement::is_zero() const {
  for (Int x : torsion_coords)
    if (x != 0) return false;
  for (Int x : free_coords)
    if (x != 0) return false;
  return true;
}

GroupShape cokernel(const IMat& m) {
  SnfResult r = smith_normal_form(m);
  GroupShape g;
  std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    BigInt di = i < lim ? r.d.at(i, i) : BigInt(0);
    if (di == 0)
      ++g.free_rank;
    else if (di >= 2)
      g.torsion.push_back(to_int_checked(di));
  }
  return g;
}

GroupElement cokernel_class(const IMat& m, const std::vector<BigInt>& b) {
  if (b.size() != m.rows) throw std::logic_error("rhs length mismatch");
  SnfResult r = smith_normal_form(m);
  std::vector<BigInt> c = mat_apply(r.u, b);
  GroupElement e;
  std::size_t lim = std::min(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    BigInt di = i < lim ? r.d.at(i, i) : BigInt(0);
    if (di == 0) {
      e.free_coords.push_back(to_int_checked(c[i]));
    } else if (di >= 2) {
      BigInt red = c[i] % di;
      if (red < 0) red += di;
      e.torsion_coords.push_back(to_int_checked(red));
    }
  }
  return e;
}

}  // namespace aw
