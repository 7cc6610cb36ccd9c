#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ogdegen/combin.hpp"
#include "ogdegen/linalg.hpp"
#include "ogdegen/prng.hpp"

namespace ogdegen {

// ---------------------------------------------------------------------------
// Columns are indexed 1, ..., n, 0, n-bar, ..., 1-bar and held as codes
// 0..2n in that order; bar is the reflection code <-> 2n - code.
// ---------------------------------------------------------------------------

inline int col_pos(int q, int /*n*/) { return q - 1; }
inline int col_zero(int n) { return n; }
inline int col_neg(int q, int n) { return 2 * n + 1 - q; }
inline int col_bar(int code, int n) { return 2 * n - code; }
inline bool col_is_pos(int code, int n) { return code < n; }
inline bool col_is_zero(int code, int n) { return code == n; }
inline bool col_is_neg(int code, int n) { return code > n; }
/// The q of Pos(q)/Neg(q), or 0 for the zero column.
inline int col_q(int code, int n) {
    return col_is_pos(code, n) ? code + 1 : (col_is_neg(code, n) ? 2 * n + 1 - code : 0);
}
/// Signed integer form: +q, -q, or 0.
inline int col_signed(int code, int n) {
    return col_is_pos(code, n) ? code + 1 : (col_is_neg(code, n) ? -(2 * n + 1 - code) : 0);
}
int col_code_from_signed(int signed_q, int n);
std::string col_label(int code, int n);

enum class Symbol : std::uint8_t { Zero, One, Plus, Star };

char symbol_char(Symbol s);

/// The n x (2n+1) symbol grid of an allowed pair, with its derived
/// structure: inner box, special columns, and per-row zero runs.
struct SymbolShape {
    AllowedPair pair;
    int n = 0;
    std::vector<Symbol> grid;  // row-major, rows 1..n, columns by code

    int box_top = 0, box_bottom = 0;        // rows, 1-based inclusive
    int box_col_lo = 0, box_col_hi = 0;     // column codes, inclusive
    std::vector<int> special_pos;           // columns n+1-lambda_i, ascending
    std::vector<int> special_neg;           // the q of the barred special columns
    std::vector<std::pair<int, int>> plus_pos;  // (row, col code), row-major
    std::vector<std::pair<int, int>> star_pos;
    std::vector<int> lead_zeros, trail_zeros, one_col;  // indexed by row-1

    Symbol at(int row, int col) const { return grid[(row - 1) * (2 * n + 1) + col]; }
    int cols() const { return 2 * n + 1; }
    int plus_index(int row, int col) const;  // index into plus_pos, -1 if absent
    std::string row_string(int row) const;

    friend bool operator==(const SymbolShape& a, const SymbolShape& b) {
        return a.n == b.n && a.grid == b.grid;
    }
};

/// Steps (1)-(7): zero runs from the two partitions, then 1 / + / * fill.
SymbolShape build_shape(const AllowedPair& pair);

inline int plus_count(const SymbolShape& s) { return static_cast<int>(s.plus_pos.size()); }
inline int star_count(const SymbolShape& s) { return static_cast<int>(s.star_pos.size()); }

/// Values for the plus entries, aligned with shape.plus_pos.
template <class S>
using PlusValues = std::vector<S>;

inline PlusValues<RationalFunction> to_rational_functions(const PlusValues<Rational>& v) {
    PlusValues<RationalFunction> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.emplace_back(r);
    return out;
}

/// A numeric matrix conforming to a symbol shape: zeros at Zero cells, ones
/// at One cells, pairwise isotropically orthogonal independent rows.
template <class S>
struct ChartMatrixT {
    SymbolShape shape;
    Mat<S> entries;
};
using ChartMatrixQ = ChartMatrixT<Rational>;
using ChartMatrixQt = ChartMatrixT<RationalFunction>;

/// The type B form y.z = 2 y_0 z_0 + sum_q (y_q z_qbar + y_qbar z_q).
template <class S>
S iso_dot(const Vec<S>& y, const Vec<S>& z) {
    if (y.size() != z.size() || y.size() % 2 == 0)
        throw std::invalid_argument("iso_dot: vectors must both have odd length 2n+1");
    const int n = static_cast<int>(y.size()) / 2;
    S acc(0);
    for (int c = 0; c <= 2 * n; ++c) acc += y(c) * z(2 * n - c);
    acc += y(n) * z(n);
    return acc;
}

namespace detail {

// One row's star system: unknowns are the stars of `row` whose column code
// lies in [col_lo, col_hi]; equations pair with `eq_rows` (self equations
// halved).  Solved values are written back into A.
template <class S>
void solve_row_stars(const SymbolShape& shape, Mat<S>& A, int row, int col_lo, int col_hi,
                     const std::vector<int>& eq_rows, const char* stage) {
    const int n = shape.n;
    std::vector<int> unknown_cols;
    for (int c = col_lo; c <= col_hi && c < n; ++c)
        if (shape.at(row, c) == Symbol::Star) unknown_cols.push_back(c);
    if (unknown_cols.empty()) return;
    const int m = static_cast<int>(eq_rows.size());
    const int u = static_cast<int>(unknown_cols.size());
    Mat<S> C(m, u);
    Vec<S> d(m);
    for (int e = 0; e < m; ++e) {
        const int i = eq_rows[e];
        for (int t = 0; t < u; ++t) C(e, t) = A(i - 1, col_bar(unknown_cols[t], n));
        if (i == row) {
            // halved self pairing: sum over positive columns + square of the 0 entry
            S acc(0);
            for (int c = 0; c < n; ++c) acc += A(row - 1, c) * A(row - 1, col_bar(c, n));
            acc += A(row - 1, n) * A(row - 1, n);
            d(e) = -acc;
        } else {
            d(e) = -iso_dot<S>(A.row(i - 1).transpose(), A.row(row - 1).transpose());
        }
    }
    Vec<S> x;
    try {
        x = solve_unique<S>(C, d, std::string(stage) + " row " + std::to_string(row) + " of " +
                                      shape.pair.str());
    } catch (const SingularSystem& e) {
        throw NotNice(e.what());
    }
    for (int t = 0; t < u; ++t) A(row - 1, unknown_cols[t]) = x(t);
}

}  // namespace detail

/// Fill the stars of a shape from its plus entries: inner-box rows top-down
/// (each solved against the box rows above it), then the south-west sweep
/// (each remaining row solved against rows 1..box_bottom).  Throws NotNice
/// naming the singular system.  The result is verified pairwise orthogonal.
template <class S>
ChartMatrixT<S> solve_stars(const SymbolShape& shape, const PlusValues<S>& plus) {
    const int n = shape.n;
    if (static_cast<int>(plus.size()) != plus_count(shape))
        throw std::invalid_argument("solve_stars: plus value count mismatch");
    Mat<S> A(n, 2 * n + 1);
    A.setConstant(S(0));
    for (int r = 1; r <= n; ++r) A(r - 1, shape.one_col[r - 1]) = S(1);
    for (size_t i = 0; i < shape.plus_pos.size(); ++i)
        A(shape.plus_pos[i].first - 1, shape.plus_pos[i].second) = plus[i];

    // stage 1: inner box, top-down
    for (int row = shape.box_top; row <= shape.box_bottom; ++row) {
        std::vector<int> eq_rows;
        for (int i = shape.box_top; i <= row; ++i) eq_rows.push_back(i);
        detail::solve_row_stars(shape, A, row, shape.box_col_lo, shape.box_col_hi, eq_rows,
                                "inner box");
    }
    // stage 2: stars on the south-west path, row by row
    for (int row = shape.box_bottom; row <= n; ++row) {
        std::vector<int> eq_rows;
        for (int i = 1; i <= shape.box_bottom; ++i)
            if (i != row) eq_rows.push_back(i);
        detail::solve_row_stars(shape, A, row, 0, shape.box_col_lo - 1, eq_rows, "south-west path");
    }
    // every pair of rows must now be exactly orthogonal
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!(iso_dot<S>(A.row(i).transpose(), A.row(j).transpose()) == S(0)))
                throw NotNice("orthogonality verification failed at rows " + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + " of " + shape.pair.str());
    return ChartMatrixT<S>{shape, std::move(A)};
}

/// True when the leftmost non-Zero shape position of every row holds a
/// nonzero value.
bool check_leftmost_nonzero(const ChartMatrixQ& A);

/// Open-cell incidence conditions for both flags, as exact equalities of
/// column-submatrix ranks.
bool verify_richardson_membership(const ChartMatrixQ& A);

/// The unique shape-conformant matrix with the same row span as B; throws
/// NotInCell when B is rank deficient or its span violates the incidence
/// pattern of the pair.
ChartMatrixQ reconstruct_chart(const MatQ& B, const AllowedPair& pair);

/// Scale column q by t_q, column q-bar by 1/t_q, fix column 0.
template <class S>
Mat<S> torus_scale(const Mat<S>& A, const std::vector<S>& t_vec) {
    const int n = static_cast<int>(t_vec.size());
    if (A.cols() != 2 * n + 1) throw std::invalid_argument("torus_scale: dimension mismatch");
    for (const S& t : t_vec)
        if (t == S(0)) throw std::domain_error("torus_scale: zero scale factor");
    Mat<S> out = A;
    for (int q = 1; q <= n; ++q) {
        out.col(col_pos(q, n)) *= t_vec[q - 1];
        out.col(col_neg(q, n)) *= S(1) / t_vec[q - 1];
    }
    return out;
}

/// Uniform nonzero integer plus entries in [-99, 99].
PlusValues<Rational> random_plus(const SymbolShape& shape, Prng& rng);

struct NiceDraw {
    PlusValues<Rational> plus;
    ChartMatrixQ chart;
    int attempts = 0;
};

/// Draw plus entries until the solve succeeds and every leftmost entry is
/// nonzero; at most max_attempts redraws, then NotNice.
NiceDraw draw_nice_chart(const AllowedPair& pair, Prng& rng, int max_attempts = 32);

}  // namespace ogdegen
