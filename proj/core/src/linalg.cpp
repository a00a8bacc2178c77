#include "hsmedian/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace hsm {

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

Vec cross3(const Vec& a, const Vec& b) {
  assert(a.size() == 3 && b.size() == 3);
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec perp2(const Vec& a) {
  assert(a.size() == 2);
  return {-a[1], a[0]};
}

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

Rat det3(const Vec& a, const Vec& b, const Vec& c) { return dot(a, cross3(b, c)); }

int rank(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.size() <= 1) return 0;
  Mat diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  return rank(std::move(diffs));
}

bool solve_linear(Mat a, Vec rhs, Vec& out) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || rhs.size() != n) throw std::invalid_argument("solve_linear: shape");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[c]);
    std::swap(rhs[pivot], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  out.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / a[i][i];
  return true;
}

Vec null_vector(const Mat& rows, std::size_t dim) {
  // Row-reduce, then back-substitute one free variable.
  Mat m = rows;
  for (auto& row : m)
    if (row.size() != dim) throw std::invalid_argument("null_vector: row length");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r + 1 != dim) return {};  // null space dimension != 1
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < dim && is_pivot[free_col]) ++free_col;
  Vec v(dim, Rat(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    // row i: m[i][pivot_col[i]] * v[pivot] + m[i][free_col] * 1 = 0
    v[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
  }
  return v;
}

Vec canonical_ray(const Vec& v) {
  mpz_class lcm_den = 1;
  for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class gcd_num = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), ints[i].get_mpz_t());
  }
  Vec out(v.size(), Rat(0));
  if (gcd_num == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / gcd_num);
  return out;
}

Vec canonical_line(const Vec& v) {
  Vec out = canonical_ray(v);
  for (const Rat& x : out) {
    if (x > 0) break;
    if (x < 0) return vec_neg(out);
  }
  return out;
}

}  // namespace hsm
