#include "ogdegen/chart.hpp"

#include <algorithm>
#include <cassert>

namespace ogdegen {

int col_code_from_signed(int signed_q, int n) {
    if (signed_q > 0) return signed_q - 1;
    if (signed_q < 0) return 2 * n + 1 + signed_q;
    return n;
}

std::string col_label(int code, int n) {
    if (col_is_pos(code, n)) return std::to_string(code + 1);
    if (col_is_zero(code, n)) return "0";
    return std::to_string(2 * n + 1 - code) + "~";
}

char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::Zero: return '0';
        case Symbol::One: return '1';
        case Symbol::Plus: return '+';
        case Symbol::Star: return '*';
    }
    return '?';
}

int SymbolShape::plus_index(int row, int col) const {
    for (size_t i = 0; i < plus_pos.size(); ++i)
        if (plus_pos[i].first == row && plus_pos[i].second == col) return static_cast<int>(i);
    return -1;
}

std::string SymbolShape::row_string(int row) const {
    std::string s;
    for (int c = 0; c <= 2 * n; ++c) s += symbol_char(at(row, c));
    return s;
}

SymbolShape build_shape(const AllowedPair& pair) {
    const int n = pair.n;
    const int cols = 2 * n + 1;
    SymbolShape sh;
    sh.pair = pair;
    sh.n = n;

    PartitionData pd = partition_data(n, pair.I);
    PartitionData pdp = partition_data(n, pair.Iprime);
    const int s = pd.s(), sp = pdp.s();

    sh.lead_zeros.resize(n);
    sh.trail_zeros.resize(n);
    sh.one_col.resize(n);
    for (int p = 1; p <= n; ++p) {
        sh.lead_zeros[p - 1] = (p <= sp) ? n + pdp.lambda_at(p) : pdp.mu_at(p);
        sh.trail_zeros[p - 1] = (p >= n - s + 1) ? n + pd.lambda_at(n + 1 - p) : pd.mu_at(n + 1 - p);
        assert(sh.lead_zeros[p - 1] + sh.trail_zeros[p - 1] < cols);
    }

    sh.grid.assign(static_cast<size_t>(n) * cols, Symbol::Zero);
    for (int p = 1; p <= n; ++p) {
        const int lo = sh.lead_zeros[p - 1];
        const int hi = cols - 1 - sh.trail_zeros[p - 1];
        sh.one_col[p - 1] = hi;
        sh.grid[(p - 1) * cols + hi] = Symbol::One;
        for (int c = lo; c < hi; ++c)
            sh.grid[(p - 1) * cols + c] = (c >= n) ? Symbol::Plus : Symbol::Star;
    }

    sh.box_top = (pair.j > 0) ? sp : sp + 1;
    sh.box_bottom = n - s;
    sh.box_col_lo = n - pair.k;
    sh.box_col_hi = n + pair.k;

    for (int i = 1; i <= s; ++i) sh.special_pos.push_back(n + 1 - pd.lambda_at(i));
    int neg_count = pair.saturated ? sp : (pair.j != 0 ? sp - 1 : sp);
    for (int i = 1; i <= neg_count; ++i) sh.special_neg.push_back(n + 1 - pdp.lambda_at(i));
    std::sort(sh.special_pos.begin(), sh.special_pos.end());
    std::sort(sh.special_neg.begin(), sh.special_neg.end());

    for (int p = 1; p <= n; ++p)
        for (int c = 0; c < cols; ++c) {
            Symbol sym = sh.grid[(p - 1) * cols + c];
            if (sym == Symbol::Plus) sh.plus_pos.emplace_back(p, c);
            else if (sym == Symbol::Star) sh.star_pos.emplace_back(p, c);
        }

    assert(plus_count(sh) == n * (n + 1) / 2 - codim_w(pair.I) - codim_w(pair.Iprime));
    return sh;
}

bool check_leftmost_nonzero(const ChartMatrixQ& A) {
    const int n = A.shape.n;
    for (int p = 1; p <= n; ++p) {
        int c = A.shape.lead_zeros[p - 1];
        if (A.entries(p - 1, c) == 0) return false;
    }
    return true;
}

namespace {

Eigen::Index rank_of_codes(const MatQ& A, const std::vector<int>& codes) {
    if (codes.empty()) return 0;
    return mat_rank(select_cols(A, codes));
}

}  // namespace

bool verify_richardson_membership(const ChartMatrixQ& A) {
    const int n = A.shape.n;
    const MatQ& M = A.entries;
    if (mat_rank(M) != n) return false;
    PartitionData pd = partition_data(n, A.shape.pair.I);
    PartitionData pdp = partition_data(n, A.shape.pair.Iprime);

    auto codes_from = [&](int lo, int hi) {
        std::vector<int> v;
        for (int c = lo; c <= hi; ++c) v.push_back(c);
        return v;
    };
    // dim(span cap F_m) = n - rank of the columns outside 1..m
    for (int h = 1; h <= pd.s(); ++h) {
        int m = n + 1 - pd.lambda_at(h);
        if (n - rank_of_codes(M, codes_from(m, 2 * n)) != h) return false;
    }
    // dim(span cap F_{mu_h}^perp) = n - rank of columns 1bar..mu_h-bar
    for (int h = pd.s() + 1; h <= n; ++h) {
        int m = pd.mu_at(h);
        if (n - rank_of_codes(M, codes_from(2 * n + 1 - m, 2 * n)) != h) return false;
    }
    // dual flag: F'_m spans barred coordinates
    for (int h = 1; h <= pdp.s(); ++h) {
        int m = n + 1 - pdp.lambda_at(h);
        if (n - rank_of_codes(M, codes_from(0, 2 * n - m)) != h) return false;
    }
    for (int h = pdp.s() + 1; h <= n; ++h) {
        int m = pdp.mu_at(h);
        if (n - rank_of_codes(M, codes_from(0, m - 1)) != h) return false;
    }
    return true;
}

ChartMatrixQ reconstruct_chart(const MatQ& B, const AllowedPair& pair) {
    SymbolShape shape = build_shape(pair);
    const int n = shape.n;
    if (B.rows() != n || B.cols() != 2 * n + 1)
        throw std::invalid_argument("reconstruct_chart: dimension mismatch");
    if (mat_rank(B) != n) throw NotInCell("reconstruct_chart: dependent rows");

    MatQ W(n, 2 * n + 1);
    for (int p = 1; p <= n; ++p) {
        std::vector<int> constrained;
        for (int c = 0; c < shape.lead_zeros[p - 1]; ++c) constrained.push_back(c);
        for (int c = 2 * n + 1 - shape.trail_zeros[p - 1]; c <= 2 * n; ++c) constrained.push_back(c);
        MatQ K;
        if (constrained.empty()) {
            K = MatQ::Zero(n, n);  // no constraints: kernel is everything
            for (int i = 0; i < n; ++i) K(i, i) = 1;
        } else {
            MatQ Bs = select_cols(B, constrained);
            K = kernel_basis<Rational>(Bs.transpose());
        }
        if (K.cols() != 1)
            throw NotInCell("reconstruct_chart: intersection with the flag pair is not a line at row " +
                            std::to_string(p));
        VecQ w = B.transpose() * K.col(0);
        const int one = shape.one_col[p - 1];
        if (w(one) == 0)
            throw NotInCell("reconstruct_chart: vanishing pivot entry at row " + std::to_string(p));
        W.row(p - 1) = (w / w(one)).transpose();
    }
    for (int p = 1; p <= n; ++p)
        for (int c = 0; c <= 2 * n; ++c)
            if (shape.at(p, c) == Symbol::Zero && W(p - 1, c) != 0)
                throw NotInCell("reconstruct_chart: span violates the zero pattern at row " +
                                std::to_string(p) + ", column " + col_label(c, n));
    if (mat_rank(W) != n) throw NotInCell("reconstruct_chart: reconstructed rows dependent");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (iso_dot<Rational>(W.row(i).transpose(), W.row(j).transpose()) != 0)
                throw NotInCell("reconstruct_chart: rows are not isotropically orthogonal");
    return ChartMatrixQ{std::move(shape), std::move(W)};
}

PlusValues<Rational> random_plus(const SymbolShape& shape, Prng& rng) {
    PlusValues<Rational> vals(shape.plus_pos.size());
    for (auto& v : vals) v = rng.plus_entry();
    return vals;
}

NiceDraw draw_nice_chart(const AllowedPair& pair, Prng& rng, int max_attempts) {
    SymbolShape shape = build_shape(pair);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        PlusValues<Rational> vals = random_plus(shape, rng);
        try {
            ChartMatrixQ chart = solve_stars<Rational>(shape, vals);
            if (!check_leftmost_nonzero(chart)) continue;
            return NiceDraw{std::move(vals), std::move(chart), attempt};
        } catch (const NotNice&) {
            continue;
        }
    }
    throw NotNice("draw_nice_chart: no nice point for " + pair.str() + " after " +
                  std::to_string(max_attempts) + " draws");
}

}  // namespace ogdegen
