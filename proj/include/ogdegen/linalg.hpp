#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ogdegen/errors.hpp"
#include "ogdegen/rational.hpp"
#include "ogdegen/rational_function.hpp"

namespace ogdegen {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatZ = Mat<Integer>;
using MatQt = Mat<RationalFunction>;
using VecQ = Vec<Rational>;

// ---------------------------------------------------------------------------
// Lifts from a fraction field to its base domain.  Elimination runs
// fraction-free over the domain (Bareiss), bounding coefficient and degree
// growth; row scaling by common denominators changes neither rank nor the
// solution of a linear system.
// ---------------------------------------------------------------------------

template <class S>
struct FieldLift;

template <>
struct FieldLift<Rational> {
    using Domain = Integer;
    static Integer den(const Rational& x) { return denominator(x); }
    static Integer num(const Rational& x) { return numerator(x); }
    static Integer lcm(const Integer& a, const Integer& b) {
        return a / gcd(a, b) * b;
    }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer div_exact(const Integer& a, const Integer& b) { return a / b; }
    static Rational to_field(const Integer& a) { return Rational(a); }
};

template <>
struct FieldLift<RationalFunction> {
    using Domain = Polynomial;
    static Polynomial den(const RationalFunction& x) { return x.den(); }
    static Polynomial num(const RationalFunction& x) { return x.num(); }
    static Polynomial lcm(const Polynomial& a, const Polynomial& b) {
        return Polynomial::div_exact(a * b, Polynomial::gcd(a, b));
    }
    static Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
    static bool is_zero(const Polynomial& a) { return a.is_zero(); }
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
        return Polynomial::div_exact(a, b);
    }
    static RationalFunction to_field(const Polynomial& a) { return RationalFunction(a); }
};

/// Clear denominators row by row; the result has the same rank and, for an
/// augmented system, the same solution set.
template <class S>
Mat<typename FieldLift<S>::Domain> lift_rows(const Mat<S>& M) {
    using L = FieldLift<S>;
    using D = typename L::Domain;
    Mat<D> out(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        D common = L::den(S(1));
        for (Eigen::Index j = 0; j < M.cols(); ++j) common = L::lcm(common, L::den(M(i, j)));
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            out(i, j) = L::mul(L::num(M(i, j)), L::div_exact(common, L::den(M(i, j))));
    }
    return out;
}

struct EchelonInfo {
    Eigen::Index rank = 0;
    std::vector<Eigen::Index> pivot_cols;
};

/// In-place fraction-free (Bareiss) row echelon form over an integral domain.
/// Pivot selection: first row with a nonzero entry in column order.
template <class D, class Ops>
EchelonInfo bareiss_echelon(Mat<D>& M, const Ops&) {
    const Eigen::Index rows = M.rows(), cols = M.cols();
    EchelonInfo info;
    if (rows == 0 || cols == 0) return info;
    D prev{};
    bool have_prev = false;
    for (Eigen::Index col = 0; col < cols && info.rank < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = info.rank; r < rows; ++r)
            if (!Ops::is_zero(M(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != info.rank) M.row(piv).swap(M.row(info.rank));
        for (Eigen::Index i = info.rank + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                D t = Ops::mul(M(info.rank, col), M(i, j));
                t = t - Ops::mul(M(i, col), M(info.rank, j));
                M(i, j) = have_prev ? Ops::div_exact(t, prev) : t;
            }
            M(i, col) = D(0);
        }
        prev = M(info.rank, col);
        have_prev = true;
        info.pivot_cols.push_back(col);
        ++info.rank;
    }
    return info;
}

template <class S>
Eigen::Index mat_rank(const Mat<S>& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    auto lifted = lift_rows(M);
    return bareiss_echelon(lifted, FieldLift<S>()).rank;
}

inline Eigen::Index mat_rank(const MatZ& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    MatZ copy = M;
    return bareiss_echelon(copy, FieldLift<Rational>()).rank;
}

/// Solve Mx = b for square M; throws SingularSystem when det(M) = 0.
template <class S>
Vec<S> solve_square(const Mat<S>& M, const Vec<S>& b) {
    using L = FieldLift<S>;
    const Eigen::Index n = M.rows();
    if (M.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_square: dimension mismatch");
    if (n == 0) return Vec<S>(0);
    Mat<S> aug(n, n + 1);
    aug.leftCols(n) = M;
    aug.col(n) = b;
    auto lifted = lift_rows(aug);
    EchelonInfo info = bareiss_echelon(lifted, L());
    if (info.rank < n || info.pivot_cols.back() == n)
        throw SingularSystem("solve_square: singular coefficient matrix");
    Vec<S> x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        S acc = L::to_field(lifted(i, n));
        for (Eigen::Index j = i + 1; j < n; ++j) acc -= L::to_field(lifted(i, j)) * x(j);
        x(i) = acc / L::to_field(lifted(i, i));
    }
    return x;
}

/// Solve an m x k system Cx = d that is required to have a unique solution.
/// Throws SingularSystem("underdetermined ...") when rank(C) < k and
/// SingularSystem("inconsistent ...") when d is outside the column span.
template <class S>
Vec<S> solve_unique(const Mat<S>& C, const Vec<S>& d, const std::string& what) {
    using L = FieldLift<S>;
    const Eigen::Index m = C.rows(), k = C.cols();
    if (d.size() != m) throw std::invalid_argument("solve_unique: dimension mismatch");
    Mat<S> aug(m, k + 1);
    aug.leftCols(k) = C;
    aug.col(k) = d;
    auto lifted = lift_rows(aug);
    EchelonInfo info = bareiss_echelon(lifted, L());
    Eigen::Index rank_c = 0;
    for (Eigen::Index p : info.pivot_cols) {
        if (p == k) throw SingularSystem("inconsistent system: " + what);
        ++rank_c;
    }
    if (rank_c < k) throw SingularSystem("underdetermined system: " + what);
    Vec<S> x(k);
    for (Eigen::Index i = k - 1; i >= 0; --i) {
        S acc = L::to_field(lifted(i, k));
        for (Eigen::Index j = i + 1; j < k; ++j) acc -= L::to_field(lifted(i, j)) * x(j);
        x(i) = acc / L::to_field(lifted(i, i));
    }
    return x;
}

template <class S>
bool mats_equal(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class S>
Mat<S> select_cols(const Mat<S>& M, const std::vector<int>& cols) {
    Mat<S> out(M.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = M.col(cols[j]);
    return out;
}

/// Basis of the null space {x : Mx = 0}, one column per basis vector,
/// computed by plain Gauss-Jordan over the field.
template <class S>
Mat<S> kernel_basis(const Mat<S>& M) {
    const Eigen::Index m = M.rows(), n = M.cols();
    Mat<S> R = M;
    std::vector<Eigen::Index> pivot_of_col(n, -1);
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < n && rank < m; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = rank; r < m; ++r)
            if (!(R(r, col) == S(0))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) R.row(piv).swap(R.row(rank));
        S inv = S(1) / R(rank, col);
        for (Eigen::Index j = col; j < n; ++j) R(rank, j) = R(rank, j) * inv;
        for (Eigen::Index r = 0; r < m; ++r) {
            if (r == rank || R(r, col) == S(0)) continue;
            S f = R(r, col);
            for (Eigen::Index j = col; j < n; ++j) R(r, j) -= f * R(rank, j);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    Mat<S> K(n, n - rank);
    K.setConstant(S(0));
    Eigen::Index out = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        K(col, out) = S(1);
        for (Eigen::Index c = 0; c < col; ++c)
            if (pivot_of_col[c] >= 0) K(c, out) = -R(pivot_of_col[c], col);
        ++out;
    }
    return K;
}

}  // namespace ogdegen
