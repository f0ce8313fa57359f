#include "hda/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hda {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer matrix entry overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  return checked(static_cast<__int128>(a) - static_cast<__int128>(q) * b);
}

}  // namespace

std::vector<std::int64_t> IntMatrix::column(int c) const {
  std::vector<std::int64_t> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<std::int64_t>>& cols) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      __int128 s = 0;
      for (int k = 0; k < a.cols(); ++k) s += static_cast<__int128>(a.at(i, k)) * b.at(k, j);
      out.at(i, j) = checked(s);
    }
  return out;
}

std::vector<std::int64_t> multiply(const IntMatrix& a, const std::vector<std::int64_t>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matrix shape mismatch");
  std::vector<std::int64_t> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    __int128 s = 0;
    for (int k = 0; k < a.cols(); ++k) s += static_cast<__int128>(a.at(i, k)) * v[k];
    out[i] = checked(s);
  }
  return out;
}

std::vector<std::int64_t> invariant_factors(IntMatrix m) {
  std::vector<std::int64_t> diag;
  const int R = m.rows(), C = m.cols();
  int t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry in the remaining block becomes the pivot
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int r = t; r < R; ++r)
      for (int c = t; c < C; ++c) {
        std::int64_t v = std::llabs(m.at(r, c));
        if (v != 0 && (best == 0 || v < best)) { best = v; pr = r; pc = c; }
      }
    if (pr < 0) break;
    for (int c = 0; c < C; ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (int r = 0; r < R; ++r) std::swap(m.at(r, t), m.at(r, pc));
    bool clean = true;
    for (int r = t + 1; r < R; ++r) {
      std::int64_t q = m.at(r, t) / m.at(t, t);
      if (q != 0)
        for (int c = t; c < C; ++c) m.at(r, c) = mul_sub(m.at(r, c), q, m.at(t, c));
      if (m.at(r, t) != 0) clean = false;
    }
    for (int c = t + 1; c < C; ++c) {
      std::int64_t q = m.at(t, c) / m.at(t, t);
      if (q != 0)
        for (int r = t; r < R; ++r) m.at(r, c) = mul_sub(m.at(r, c), q, m.at(r, t));
      if (m.at(t, c) != 0) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the rest of the block
    int bad_r = -1;
    for (int r = t + 1; r < R && bad_r < 0; ++r)
      for (int c = t + 1; c < C; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) { bad_r = r; break; }
    if (bad_r >= 0) {
      for (int c = t; c < C; ++c)
        m.at(t, c) = checked(static_cast<__int128>(m.at(t, c)) + m.at(bad_r, c));
      continue;
    }
    diag.push_back(std::llabs(m.at(t, t)));
    ++t;
  }
  return diag;
}

int rank(const IntMatrix& m) { return column_echelon(m).rank; }

ColumnEchelon column_echelon(const IntMatrix& m) {
  ColumnEchelon e{m, IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& a = e.reduced;
  const int R = a.rows(), C = a.cols();
  // col_j -= q col_i on a and v; row_i += q row_j on v^-1
  auto sub = [&](int j, int i, std::int64_t q) {
    if (q == 0) return;
    for (int r = 0; r < R; ++r) a.at(r, j) = mul_sub(a.at(r, j), q, a.at(r, i));
    for (int r = 0; r < C; ++r) e.v.at(r, j) = mul_sub(e.v.at(r, j), q, e.v.at(r, i));
    for (int c = 0; c < C; ++c) e.v_inverse.at(i, c) = mul_sub(e.v_inverse.at(i, c), -q, e.v_inverse.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < R; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < C; ++r) std::swap(e.v.at(r, i), e.v.at(r, j));
    for (int c = 0; c < C; ++c) std::swap(e.v_inverse.at(i, c), e.v_inverse.at(j, c));
  };
  int p = 0;
  for (int r = 0; r < R && p < C; ++r) {
    while (true) {
      int best = -1;
      for (int c = p; c < C; ++c)
        if (a.at(r, c) != 0 && (best < 0 || std::llabs(a.at(r, c)) < std::llabs(a.at(r, best)))) best = c;
      if (best < 0) break;
      swap_cols(p, best);
      bool done = true;
      for (int c = p + 1; c < C; ++c) {
        sub(c, p, a.at(r, c) / a.at(r, p));
        if (a.at(r, c) != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  e.rank = p;
  return e;
}

}  // namespace hda
