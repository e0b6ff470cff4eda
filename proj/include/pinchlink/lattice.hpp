#pragma once

#include "pinchlink/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

namespace pinchlink::lattice {

/// Smith decomposition `left * input * right == diagonal` with unimodular
/// `left` and `right`. Diagonal entries are nonnegative and each divides the
/// next; zero entries trail the nonzero ones.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> left;
  Matrix<Scalar> diagonal;
  Matrix<Scalar> right;

  [[nodiscard]] std::size_t rank() const {
    std::size_t r = 0;
    const auto n = std::min(diagonal.rows(), diagonal.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!is_zero(diagonal(i, i))) ++r;
    }
    return r;
  }
};

namespace detail {

// Position of the nonzero entry of smallest magnitude in the block
// [from, rows) x [from, cols), if any.
template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_entry(const Matrix<Scalar>& a,
                                                                    Eigen::Index from) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_abs = 0;
  for (Eigen::Index j = from; j < a.cols(); ++j) {
    for (Eigen::Index i = from; i < a.rows(); ++i) {
      if (is_zero(a(i, j))) continue;
      Scalar v = abs_value(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

template <typename Scalar>
void swap_rows(Matrix<Scalar>& a, Matrix<Scalar>& u, Eigen::Index i, Eigen::Index k) {
  if (i == k) return;
  a.row(i).swap(a.row(k));
  u.row(i).swap(u.row(k));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& a, Matrix<Scalar>& v, Eigen::Index j, Eigen::Index k) {
  if (j == k) return;
  a.col(j).swap(a.col(k));
  v.col(j).swap(v.col(k));
}

// Clears row and column `t` outside the pivot using Euclidean steps.
// Returns false when a remainder survived and a new pivot is needed.
template <typename Scalar>
bool eliminate_cross(Matrix<Scalar>& a, Matrix<Scalar>& u, Matrix<Scalar>& v, Eigen::Index t) {
  bool clean = true;
  for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
    if (is_zero(a(i, t))) continue;
    Scalar q = a(i, t) / a(t, t);
    a.row(i) -= q * a.row(t);
    u.row(i) -= q * u.row(t);
    if (!is_zero(a(i, t))) clean = false;
  }
  for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
    if (is_zero(a(t, j))) continue;
    Scalar q = a(t, j) / a(t, t);
    a.col(j) -= q * a.col(t);
    v.col(j) -= q * v.col(t);
    if (!is_zero(a(t, j))) clean = false;
  }
  return clean;
}

// Moves the smallest nonzero entry of row/column `t` onto the diagonal.
template <typename Scalar>
void repivot_cross(Matrix<Scalar>& a, Matrix<Scalar>& u, Matrix<Scalar>& v, Eigen::Index t) {
  Eigen::Index best_row = t;
  Eigen::Index best_col = t;
  Scalar best_abs = abs_value(a(t, t));
  for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
    if (!is_zero(a(i, t)) && abs_value(a(i, t)) < best_abs) {
      best_abs = abs_value(a(i, t));
      best_row = i;
      best_col = t;
    }
  }
  for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
    if (!is_zero(a(t, j)) && abs_value(a(t, j)) < best_abs) {
      best_abs = abs_value(a(t, j));
      best_row = t;
      best_col = j;
    }
  }
  swap_rows(a, u, t, best_row);
  swap_cols(a, v, t, best_col);
}

}  // namespace detail

/// Smith normal form over the integers. Works for `std::int64_t` on small
/// inputs and for `Integer` where entries may grow.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& input) {
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();
  SmithForm<Scalar> out{Matrix<Scalar>::Identity(m, m), input, Matrix<Scalar>::Identity(n, n)};
  auto& a = out.diagonal;
  auto& u = out.left;
  auto& v = out.right;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    auto pivot = detail::smallest_entry(a, t);
    if (!pivot) break;
    detail::swap_rows(a, u, t, pivot->first);
    detail::swap_cols(a, v, t, pivot->second);

    for (;;) {
      if (!detail::eliminate_cross(a, u, v, t)) {
        detail::repivot_cross(a, u, v, t);
        continue;
      }
      // Divisibility chain: fold any row with an entry the pivot does not
      // divide into row t and start over.
      bool divides_all = true;
      for (Eigen::Index i = t + 1; i < m && divides_all; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          Scalar r = a(i, j) % a(t, t);
          if (!is_zero(r)) {
            a.row(t) += a.row(i);
            u.row(t) += u.row(i);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (sign_of(a(t, t)) < 0) {
      a.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return out;
}

/// Invariant factors of `m`: the nonzero diagonal of its Smith form.
template <typename Scalar>
Vector<Scalar> invariant_factors(const Matrix<Scalar>& m) {
  auto snf = smith_normal_form(m);
  const auto r = static_cast<Eigen::Index>(snf.rank());
  Vector<Scalar> out(r);
  for (Eigen::Index i = 0; i < r; ++i) out(i) = snf.diagonal(i, i);
  return out;
}

template <typename Scalar>
std::size_t rank(const Matrix<Scalar>& m) {
  return smith_normal_form(m).rank();
}

/// Rank of the integer kernel of `m` acting on column vectors.
template <typename Scalar>
std::size_t kernel_rank(const Matrix<Scalar>& m) {
  return static_cast<std::size_t>(m.cols()) - rank(m);
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index swap_with = k + 1;
      while (swap_with < n && is_zero(a(swap_with, k))) ++swap_with;
      if (swap_with == n) return Scalar(0);
      a.row(k).swap(a.row(swap_with));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / previous;
      }
    }
    previous = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

}  // namespace pinchlink::lattice
