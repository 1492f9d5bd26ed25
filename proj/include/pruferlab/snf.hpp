#pragma once

/**
 * @file snf.hpp
 * @brief Smith normal form over the integers, templated on a signed integral
 * scalar. Arithmetic is overflow-checked: any step that would leave the range
 * of the working type, or a result that does not fit Scalar, throws
 * std::overflow_error rather than producing a wrong answer.
 *
 * Method: alternate row Hermite forms of the matrix and of its transpose until
 * it is diagonal, then repair divisibility pairwise with 2x2 Bezout transforms.
 * Entries above each Hermite pivot are reduced modulo the pivot, and the rows of
 * a transform that annihilate the matrix are kept as a Hermite-reduced basis
 * against which the other rows are size-reduced. Without those reductions the
 * transforms of a random 6x5 matrix with entries in [-20, 20] routinely exceed
 * 64 bits. The work is done in a type twice as wide as Scalar and narrowed at
 * the end.
 */

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace pruferlab {

template <std::signed_integral Scalar>
using IntegerMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = IntegerMatrix<std::int64_t>;

/// U * M * V = D with U, V unimodular, D diagonal, d1 | d2 | ..., all d_i >= 0.
template <std::signed_integral Scalar>
struct SmithForm {
  IntegerMatrix<Scalar> D;
  IntegerMatrix<Scalar> U;
  IntegerMatrix<Scalar> V;

  /// min(rows, cols) diagonal entries of D.
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Eigen::Index k = 0; k < std::min(D.rows(), D.cols()); ++k) d.push_back(D(k, k));
    return d;
  }
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (auto x : diagonal()) r += x != 0;
    return r;
  }
};

namespace detail {

template <class S>
struct wider {
  using type = S;
};
template <>
struct wider<std::int8_t> {
  using type = std::int16_t;
};
template <>
struct wider<std::int16_t> {
  using type = std::int32_t;
};
template <>
struct wider<std::int32_t> {
  using type = std::int64_t;
};
template <>
struct wider<std::int64_t> {
  using type = __int128;
};
#if defined(__LP64__)
template <>
struct wider<long long> {
  using type = __int128;
};
#endif

[[noreturn]] inline void overflow() { throw std::overflow_error("integer overflow in Smith normal form"); }

template <class S>
S checked_mul(S a, S b) {
  S r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

template <class S>
S checked_sub(S a, S b) {
  S r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

template <class S>
S checked_add(S a, S b) {
  S r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

template <class S>
S checked_abs(S a) {
  if (a == std::numeric_limits<S>::min()) overflow();
  return a < 0 ? static_cast<S>(-a) : a;
}

template <class S>
S checked_neg(S a) {
  return checked_sub(S{0}, a);
}

template <class S>
S floor_div(S a, S b) {
  S q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q = checked_sub(q, S{1});
  return q;
}

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// row(dst) -= q * row(src)
template <class S>
void row_axpy(Mat<S>& m, Eigen::Index dst, Eigen::Index src, S q) {
  if (q == 0) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

/// col(dst) -= q * col(src)
template <class S>
void col_axpy(Mat<S>& m, Eigen::Index dst, Eigen::Index src, S q) {
  if (q == 0) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

template <class S>
void negate_row(Mat<S>& m, Eigen::Index r) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = checked_neg(m(r, c));
}

template <class S>
bool is_diagonal(const Mat<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) return false;
  return true;
}

template <class S>
Eigen::Index row_hermite(Mat<S>& a, Mat<S>& t);

/// Rows [r, end) of t annihilate the matrix being reduced: replace them by the
/// Hermite basis of the lattice they span, then size-reduce rows [0, r)
/// against them. Both steps keep t unimodular and t·M unchanged.
template <class S>
void reduce_against_kernel(Mat<S>& t, Eigen::Index r) {
  const Eigen::Index n = t.rows();
  if (r >= n || r < 0) return;
  Mat<S> k = t.bottomRows(n - r);
  Mat<S> unused = Mat<S>::Identity(n - r, n - r);
  row_hermite(k, unused);
  t.bottomRows(n - r) = k;
  for (int pass = 0; pass < 2; ++pass)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = r; j < n; ++j) {
        long double num = 0, den = 0;
        for (Eigen::Index c = 0; c < t.cols(); ++c) {
          num += static_cast<long double>(t(i, c)) * static_cast<long double>(t(j, c));
          den += static_cast<long double>(t(j, c)) * static_cast<long double>(t(j, c));
        }
        if (den == 0) continue;
        const long double q = std::round(num / den);
        // any integer multiple is valid; the rounding only has to be close
        if (q != 0 && std::fabs(q) < 1e30L) row_axpy(t, i, j, static_cast<S>(q));
      }
}

/// Row Hermite form in place, applying the same row operations to t. Pivots
/// are positive and entries above a pivot lie in [0, pivot). Returns the rank.
template <class S>
Eigen::Index row_hermite(Mat<S>& a, Mat<S>& t) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (p < 0 || checked_abs(a(i, c)) < checked_abs(a(p, c)))) p = i;
      if (p < 0) break;
      if (p != r) {
        a.row(r).swap(a.row(p));
        t.row(r).swap(t.row(p));
      }
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        // nearest-integer quotient keeps remainders at most half the pivot
        S q = floor_div(a(i, c), a(r, c));
        const S rem = checked_sub(a(i, c), checked_mul(q, a(r, c)));
        if (checked_mul(S{2}, checked_abs(rem)) > checked_abs(a(r, c))) q = checked_add(q, S{1});
        row_axpy(a, i, r, q);
        row_axpy(t, i, r, q);
        if (a(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      negate_row(a, r);
      negate_row(t, r);
    }
    for (Eigen::Index k = 0; k < r; ++k) {
      const S q = floor_div(a(k, c), a(r, c));
      row_axpy(a, k, r, q);
      row_axpy(t, k, r, q);
    }
    ++r;
  }
  reduce_against_kernel(t, r);
  return r;
}

template <std::signed_integral Scalar, class S>
IntegerMatrix<Scalar> narrow(const Mat<S>& m) {
  IntegerMatrix<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) < std::numeric_limits<Scalar>::min() || m(i, j) > std::numeric_limits<Scalar>::max()) overflow();
      out(i, j) = static_cast<Scalar>(m(i, j));
    }
  return out;
}

}  // namespace detail

template <std::signed_integral Scalar>
SmithForm<Scalar> smith_normal_form(const IntegerMatrix<Scalar>& m) {
  using W = typename detail::wider<Scalar>::type;
  using detail::checked_mul;
  using Mat = detail::Mat<W>;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Mat a = m.template cast<W>();
  Mat u = Mat::Identity(rows, rows);
  Mat v = Mat::Identity(cols, cols);

  // Each round either finishes or strictly lowers the first pivot that changes.
  while (!detail::is_diagonal(a)) {
    detail::row_hermite(a, u);
    if (detail::is_diagonal(a)) break;
    Mat at = a.transpose(), vt = v.transpose();
    detail::row_hermite(at, vt);
    a = at.transpose();
    v = vt.transpose();
  }

  const Eigen::Index n = std::min(rows, cols);
  auto swap_diagonal = [&](Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
  };
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (a(i, i) != 0) swap_diagonal(rank++, i);
  for (Eigen::Index i = 0; i < rank; ++i)
    if (a(i, i) < 0) {
      detail::negate_row(a, i);
      detail::negate_row(u, i);
    }

  // diag(x, y) -> diag(g, lcm) by [[s, t], [-y/g, x/g]] on the left and
  // [[1, -t·y/g], [1, s·x/g]] on the right, where s·x + t·y = g.
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = i + 1; j < rank; ++j) {
      const W x = a(i, i), y = a(j, j);
      if (y % x == 0) continue;
      W g = x, h = y, s = 1, s1 = 0, t = 0, t1 = 1;
      while (h != 0) {
        const W q = g / h;
        std::tie(g, h) = std::pair(h, detail::checked_sub(g, checked_mul(q, h)));
        std::tie(s, s1) = std::pair(s1, detail::checked_sub(s, checked_mul(q, s1)));
        std::tie(t, t1) = std::pair(t1, detail::checked_sub(t, checked_mul(q, t1)));
      }
      const W yg = y / g, xg = x / g;
      for (Eigen::Index c = 0; c < rows; ++c) {
        const W p = u(i, c), q = u(j, c);
        u(i, c) = detail::checked_add(checked_mul(s, p), checked_mul(t, q));
        u(j, c) = detail::checked_add(checked_mul(detail::checked_neg(yg), p), checked_mul(xg, q));
      }
      for (Eigen::Index r = 0; r < cols; ++r) {
        const W p = v(r, i), q = v(r, j);
        v(r, i) = detail::checked_add(p, q);
        v(r, j) = detail::checked_add(checked_mul(detail::checked_neg(checked_mul(t, yg)), p),
                                      checked_mul(checked_mul(s, xg), q));
      }
      a(i, i) = g;
      a(j, j) = checked_mul(xg, y);
    }

  // rows of U past the rank annihilate M from the left, columns of V past it from the right
  detail::reduce_against_kernel(u, rank);
  Mat vt = v.transpose();
  detail::reduce_against_kernel(vt, rank);
  v = vt.transpose();

  return SmithForm<Scalar>{detail::narrow<Scalar>(a), detail::narrow<Scalar>(u), detail::narrow<Scalar>(v)};
}

/// Nonzero diagonal entries of the Smith form, with the unit factors dropped.
template <std::signed_integral Scalar>
std::vector<Scalar> invariant_factors(const IntegerMatrix<Scalar>& m) {
  std::vector<Scalar> out;
  for (auto d : smith_normal_form(m).diagonal())
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace pruferlab
