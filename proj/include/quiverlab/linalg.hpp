#pragma once

// Exact linear algebra over an arbitrary field scalar (no pivoting by
// magnitude; any nonzero pivot is accepted).

#include <algorithm>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "quiverlab/rational.hpp"

namespace quiverlab::linalg {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}
inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <typename Scalar>
struct RowEchelon {
    MatrixX<Scalar> rows;             // rank x cols, reduced row echelon form
    std::vector<Eigen::Index> pivots; // pivot column of each row
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

// Reduced row echelon form of `a`; zero rows are dropped.
template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    MatrixX<Scalar> m = a;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!is_zero(m(i, c))) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r) m.row(sel).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) {
            if (!is_zero(m(r, j))) m(r, j) *= inv;
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    RowEchelon<Scalar> out;
    out.rows = m.topRows(r);
    out.pivots = std::move(pivots);
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
    return row_echelon(a).rank();
}

// Basis of the right null space, one column per free variable. The basis
// vector for free column f has entry 1 at f and 0 at every other free column.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    const auto ech = row_echelon(a);
    const Eigen::Index n = a.cols();
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (auto p : ech.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < n; ++c) {
        if (!is_pivot[static_cast<size_t>(c)]) free.push_back(c);
    }
    MatrixX<Scalar> k = MatrixX<Scalar>::Zero(n, static_cast<Eigen::Index>(free.size()));
    for (size_t f = 0; f < free.size(); ++f) {
        const Eigen::Index col = static_cast<Eigen::Index>(f);
        k(free[f], col) = Scalar(1);
        for (Eigen::Index r = 0; r < ech.rank(); ++r) {
            const Scalar& v = ech.rows(r, free[f]);
            if (!is_zero(v)) k(ech.pivots[static_cast<size_t>(r)], col) = -v;
        }
    }
    return k;
}

// Some X with a * X = b, or nothing when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<MatrixX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                         const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename DerivedA::Scalar;
    MatrixX<Scalar> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    const auto ech = row_echelon(aug);
    MatrixX<Scalar> x = MatrixX<Scalar>::Zero(a.cols(), b.cols());
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
        const Eigen::Index p = ech.pivots[static_cast<size_t>(r)];
        if (p >= a.cols()) return std::nullopt;
        x.row(p) = ech.rows.row(r).tail(b.cols());
    }
    return x;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve(a, MatrixX<Scalar>::Identity(a.rows(), a.rows()));
}

template <typename Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

// Incrementally maintained subspace of Scalar^n in reduced row echelon form.
template <typename Scalar>
class Subspace {
public:
    explicit Subspace(Eigen::Index ambient = 0) : ambient_(ambient) {}

    Eigen::Index ambient() const { return ambient_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
    const std::vector<VectorX<Scalar>>& rows() const { return rows_; }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }

    // Reduce v modulo the subspace; the result vanishes at every pivot.
    VectorX<Scalar> reduce(VectorX<Scalar> v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v(pivots_[r]);
            if (is_zero(c)) continue;
            const auto& row = rows_[r];
            for (Eigen::Index j = 0; j < ambient_; ++j) {
                if (!is_zero(row(j))) v(j) -= c * row(j);
            }
        }
        return v;
    }

    bool contains(const VectorX<Scalar>& v) const {
        const auto red = reduce(v);
        for (Eigen::Index j = 0; j < ambient_; ++j) {
            if (!is_zero(red(j))) return false;
        }
        return true;
    }

    // Adds v; returns false when v was already in the span.
    bool add(const VectorX<Scalar>& v) {
        auto red = reduce(v);
        Eigen::Index p = -1;
        for (Eigen::Index j = 0; j < ambient_; ++j) {
            if (!is_zero(red(j))) {
                p = j;
                break;
            }
        }
        if (p < 0) return false;
        const Scalar inv = Scalar(1) / red(p);
        for (Eigen::Index j = p; j < ambient_; ++j) {
            if (!is_zero(red(j))) red(j) *= inv;
        }
        for (auto& row : rows_) {
            const Scalar c = row(p);
            if (is_zero(c)) continue;
            for (Eigen::Index j = p; j < ambient_; ++j) {
                if (!is_zero(red(j))) row(j) -= c * red(j);
            }
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        const auto idx = pos - pivots_.begin();
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + idx, std::move(red));
        return true;
    }

    template <typename Derived>
    void add_columns(const Eigen::MatrixBase<Derived>& m) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) add(m.col(c));
    }

    // Coordinates not used as pivots; they index a basis of the quotient.
    std::vector<Eigen::Index> complement() const {
        std::vector<Eigen::Index> out;
        size_t k = 0;
        for (Eigen::Index j = 0; j < ambient_; ++j) {
            if (k < pivots_.size() && pivots_[k] == j) {
                ++k;
                continue;
            }
            out.push_back(j);
        }
        return out;
    }

    // Image of v in the quotient, in the basis indexed by complement().
    VectorX<Scalar> quotient_coordinates(const VectorX<Scalar>& v) const {
        const auto red = reduce(v);
        const auto comp = complement();
        VectorX<Scalar> out(static_cast<Eigen::Index>(comp.size()));
        for (size_t i = 0; i < comp.size(); ++i) out(static_cast<Eigen::Index>(i)) = red(comp[i]);
        return out;
    }

private:
    Eigen::Index ambient_;
    std::vector<VectorX<Scalar>> rows_;
    std::vector<Eigen::Index> pivots_;
};

}  // namespace quiverlab::linalg
