#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resist/errors.hpp"
#include "resist/scalar.hpp"

namespace resist {

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using DenseRowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;
using FloatMatrix = DenseMatrix<double>;
using FloatVector = DenseVector<double>;

/// Sorted set of distinct 1-based row/column (or vertex) labels.
///
/// Ordering matters: submatrix extraction follows ascending label order, and
/// the (-1)^{alpha} signs in the cofactor identities presume both 1-based
/// labels and that natural order.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] < 1) throw IndexError("index labels are 1-based, got " + std::to_string(labels_[i]));
      if (i > 0 && labels_[i] == labels_[i - 1])
        throw IndexError("duplicate label " + std::to_string(labels_[i]) + " in index set");
    }
  }

  static IndexSet full(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(std::move(v));
  }

  /// Parses a comma list of 1-based labels, e.g. "1,2,4".
  static IndexSet parse(std::string_view text);

  const std::vector<int>& labels() const { return labels_; }
  int cardinality() const { return static_cast<int>(labels_.size()); }  // eta
  bool empty() const { return labels_.empty(); }

  /// Sum of the stored 1-based labels (the alpha of the sign rules).
  long long alpha() const {
    long long s = 0;
    for (int v : labels_) s += v;
    return s;
  }

  void check_bounds(int n) const {
    if (!labels_.empty() && labels_.back() > n)
      throw IndexError("label " + std::to_string(labels_.back()) + " out of range 1.." + std::to_string(n));
  }

  IndexSet complement(int n) const {
    check_bounds(n);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - labels_.size());
    std::size_t k = 0;
    for (int v = 1; v <= n; ++v) {
      if (k < labels_.size() && labels_[k] == v) {
        ++k;
      } else {
        out.push_back(v);
      }
    }
    return IndexSet(std::move(out));
  }

  std::string str() const;

 private:
  std::vector<int> labels_;
};

namespace detail {

template <typename S>
void require_square(const DenseMatrix<S>& w, const char* op) {
  if (w.rows() != w.cols())
    throw ShapeError(std::string(op) + " requires a square matrix, got " + std::to_string(w.rows()) +
                     "x" + std::to_string(w.cols()));
  if (w.rows() == 0) throw ShapeError(std::string(op) + " undefined for the empty matrix");
}

// Pivot selection: the exact backend takes the first nonzero entry (no
// magnitude ordering exists that helps exactness); the float backend takes
// the entry of largest magnitude.
template <typename S>
Eigen::Index find_pivot(const DenseMatrix<S>& m, Eigen::Index col, Eigen::Index from) {
  if constexpr (ScalarTraits<S>::is_exact) {
    for (Eigen::Index i = from; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) return i;
    return -1;
  } else {
    Eigen::Index best = -1;
    double best_abs = 0.0;
    for (Eigen::Index i = from; i < m.rows(); ++i) {
      double a = std::abs(m(i, col));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    return best;
  }
}

}  // namespace detail

/// Submatrix with rows and columns picked by 1-based label sets, in
/// ascending label order.
template <typename S>
DenseMatrix<S> submatrix(const DenseMatrix<S>& w, const IndexSet& rows, const IndexSet& cols) {
  rows.check_bounds(static_cast<int>(w.rows()));
  cols.check_bounds(static_cast<int>(w.cols()));
  DenseMatrix<S> out(rows.cardinality(), cols.cardinality());
  for (int i = 0; i < rows.cardinality(); ++i)
    for (int j = 0; j < cols.cardinality(); ++j)
      out(i, j) = w(rows.labels()[static_cast<std::size_t>(i)] - 1,
                    cols.labels()[static_cast<std::size_t>(j)] - 1);
  return out;
}

/// Exact determinant. Rational backend: fraction-free (Bareiss) elimination,
/// which keeps intermediate entries polynomially bounded; float backend:
/// partially pivoted elimination.
template <typename S>
S det(const DenseMatrix<S>& w) {
  detail::require_square(w, "det");
  const Eigen::Index n = w.rows();
  DenseMatrix<S> m = w;
  bool negate = false;

  if constexpr (ScalarTraits<S>::is_exact) {
    S prev = S(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      Eigen::Index p = detail::find_pivot(m, k, k);
      if (p < 0) return S(0);
      if (p != k) {
        m.row(p).swap(m.row(k));
        negate = !negate;
      }
      const S pivot = m(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
        m(i, k) = S(0);
      }
      prev = pivot;
    }
    return negate ? S(-m(n - 1, n - 1)) : m(n - 1, n - 1);
  } else {
    S result = S(1);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index p = detail::find_pivot(m, k, k);
      if (p < 0) return S(0);
      if (p != k) {
        m.row(p).swap(m.row(k));
        negate = !negate;
      }
      const S pivot = m(k, k);
      result *= pivot;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        const S f = m(i, k) / pivot;
        for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      }
    }
    return negate ? -result : result;
  }
}

/// Inverse by Gauss-Jordan elimination on [W | I]. The rational backend is
/// exact: W * inverse(W) == I entrywise. Never regularizes; a singular input
/// throws SingularMatrixError carrying the failed pivot stage.
template <typename S>
DenseMatrix<S> inverse(const DenseMatrix<S>& w) {
  detail::require_square(w, "inverse");
  const Eigen::Index n = w.rows();
  DenseMatrix<S> m = w;
  DenseMatrix<S> inv = DenseMatrix<S>::Identity(n, n);

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = detail::find_pivot(m, k, k);
    if (p < 0) throw SingularMatrixError("singular matrix has no inverse", static_cast<int>(k));
    if (p != k) {
      m.row(p).swap(m.row(k));
      inv.row(p).swap(inv.row(k));
    }
    const S pivot = m(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(k, j) = m(k, j) / pivot;
      inv(k, j) = inv(k, j) / pivot;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const S f = m(i, k);
      if (ScalarTraits<S>::is_zero(f)) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Classical adjoint via signed minors, entry by entry. Deliberately not
/// det(W) * inverse(W): this route is defined for singular W as well, and it
/// serves as the independent oracle for the bordered-determinant cofsum.
template <typename S>
DenseMatrix<S> adjugate(const DenseMatrix<S>& w) {
  detail::require_square(w, "adjugate");
  const Eigen::Index n = w.rows();
  if (n == 1) {
    DenseMatrix<S> one(1, 1);
    one(0, 0) = S(1);
    return one;
  }
  DenseMatrix<S> adj(n, n);
  DenseMatrix<S> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // adj(i, j) is the (j, i) cofactor.
      Eigen::Index mr = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        if (r == j) continue;
        Eigen::Index mc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc) = w(r, c);
          ++mc;
        }
        ++mr;
      }
      S d = det(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : S(-d);
    }
  }
  return adj;
}

/// Sum of all cofactors, 1' adj(W) 1, computed as -det of the bordered
/// matrix [[W, 1], [1', 0]]. Defined for singular W; the border scale is 1
/// so everything stays in the scalar field.
template <typename S>
S cofsum(const DenseMatrix<S>& w) {
  detail::require_square(w, "cofsum");
  const Eigen::Index n = w.rows();
  DenseMatrix<S> bordered(n + 1, n + 1);
  bordered.topLeftCorner(n, n) = w;
  for (Eigen::Index i = 0; i < n; ++i) {
    bordered(i, n) = S(1);
    bordered(n, i) = S(1);
  }
  bordered(n, n) = S(0);
  return S(-det(bordered));
}

/// All-ones n x n matrix (the J of the rank-one corrections).
template <typename S>
DenseMatrix<S> ones_matrix(Eigen::Index n) {
  return DenseMatrix<S>::Constant(n, n, S(1));
}

// --- entrywise comparison helpers (backend-aware) ---

template <typename S>
bool matrix_equal(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!ScalarTraits<S>::equal(a(i, j), b(i, j))) return false;
  return true;
}

template <typename S>
double matrix_residual(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r = std::max(r, ScalarTraits<S>::residual(a(i, j), b(i, j)));
  return r;
}

template <typename S>
std::optional<std::string> first_mismatch(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return "shape mismatch " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
           std::to_string(b.rows()) + "x" + std::to_string(b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!ScalarTraits<S>::equal(a(i, j), b(i, j)))
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): " + ScalarTraits<S>::str(a(i, j)) + " vs " + ScalarTraits<S>::str(b(i, j));
  return std::nullopt;
}

}  // namespace resist
