#include "ogdegen/degen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ogdegen/dmatroid.hpp"

namespace ogdegen {

ActiveCoordinate active_coordinate(const SymbolShape& shape) {
    ActiveCoordinate ac;
    ac.row = shape.box_top;
    ac.col = shape.n + shape.pair.j;
    ac.plus_index = shape.plus_index(ac.row, ac.col);
    if (ac.plus_index < 0)
        throw std::logic_error("active_coordinate: no plus entry at the active position of " +
                               shape.pair.str());
    for (int c = shape.n; c < ac.col; ++c)
        if (shape.at(ac.row, c) == Symbol::Plus)
            throw std::logic_error("active_coordinate: not the leftmost plus of the top box row");
    return ac;
}

ChartMatrixQt build_family(const AllowedPair& pair, const PlusValues<Rational>& plus) {
    SymbolShape shape = build_shape(pair);
    ActiveCoordinate ac = active_coordinate(shape);
    PlusValues<RationalFunction> vals = to_rational_functions(plus);
    vals[ac.plus_index] = vals[ac.plus_index] * RationalFunction::t();
    return solve_stars<RationalFunction>(shape, vals);
}

std::pair<AllowedPair, PlusValues<Rational>> pr_left(const AllowedPair& pair,
                                                     const PlusValues<Rational>& plus) {
    SymbolShape shape = build_shape(pair);
    ActiveCoordinate ac = active_coordinate(shape);
    AllowedPair child = left_child(pair);
    SymbolShape child_shape = build_shape(child);
    if (plus_count(child_shape) != plus_count(shape) - 1)
        throw std::logic_error("pr_left: child plus count mismatch");
    PlusValues<Rational> out(child_shape.plus_pos.size());
    for (size_t i = 0; i < child_shape.plus_pos.size(); ++i) {
        auto [r, c] = child_shape.plus_pos[i];
        int idx = shape.plus_index(r, c);
        if (idx < 0 || (r == ac.row && c == ac.col))
            throw std::logic_error("pr_left: child plus position missing in parent");
        out[i] = plus[idx];
    }
    return {child, std::move(out)};
}

std::pair<AllowedPair, PlusValues<Rational>> pr_right(const AllowedPair& pair,
                                                      const PlusValues<Rational>& plus) {
    SymbolShape shape = build_shape(pair);
    const int n = shape.n, j = pair.j, k = pair.k;
    AllowedPair child = right_child(pair);
    SymbolShape child_shape = build_shape(child);

    // Lay the plus entries (and shape ones) into a working matrix.
    MatQ R = MatQ::Zero(n, 2 * n + 1);
    for (int r = 1; r <= n; ++r) R(r - 1, shape.one_col[r - 1]) = 1;
    for (size_t i = 0; i < shape.plus_pos.size(); ++i)
        R(shape.plus_pos[i].first - 1, shape.plus_pos[i].second) = plus[i];

    // Rows 2..j+1 of the inner box: zero columns bar(n-k+2)..bar(n-j), then
    // renormalize so row r gets pivot 1 in column bar(n-j+r), top to bottom.
    for (int r = 1; r <= j; ++r) {
        int g = shape.box_top + r;  // global row
        for (int q = n - k + 2; q <= n - j; ++q) R(g - 1, col_neg(q, n)) = 0;
        for (int rp = 1; rp < r; ++rp) {
            int gp = shape.box_top + rp;
            int pcol = col_neg(n - j + rp, n);
            Rational f = R(g - 1, pcol);
            if (f != 0) R.row(g - 1) -= f * R.row(gp - 1);
        }
        int pivot_col = col_neg(n - j + r, n);
        if (R(g - 1, pivot_col) == 0)
            throw SingularReduction("pr_right: zero pivot in row " + std::to_string(g) + " of " +
                                    pair.str());
        R.row(g - 1) /= R(g - 1, pivot_col);
    }

    PlusValues<Rational> out(child_shape.plus_pos.size());
    for (size_t i = 0; i < child_shape.plus_pos.size(); ++i) {
        auto [r, c] = child_shape.plus_pos[i];
        bool reduced_region = (r >= shape.box_top + 1 && r <= shape.box_top + j && c >= n);
        if (!reduced_region && shape.plus_index(r, c) < 0)
            throw std::logic_error("pr_right: child plus position missing in parent");
        out[i] = R(r - 1, c);
    }
    return {child, std::move(out)};
}

namespace {

MatQ eval_entries_at_zero(const MatQt& M) {
    MatQ out(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index c = 0; c < M.cols(); ++c) out(i, c) = M(i, c).eval_at_zero();
    return out;
}

void check_shape_conformance(const MatQ& A, const SymbolShape& shape, const char* who) {
    for (int r = 1; r <= shape.n; ++r)
        for (int c = 0; c <= 2 * shape.n; ++c) {
            Symbol s = shape.at(r, c);
            if (s == Symbol::Zero && A(r - 1, c) != 0)
                throw NotNice(std::string(who) + ": limit violates the zero pattern of " +
                              shape.pair.str() + " at row " + std::to_string(r) + ", column " +
                              col_label(c, shape.n));
            if (s == Symbol::One && A(r - 1, c) != 1)
                throw NotNice(std::string(who) + ": limit violates the one pattern of " +
                              shape.pair.str());
        }
}

}  // namespace

LeftLimit limit_left(const ChartMatrixQt& At) {
    AllowedPair child = left_child(At.shape.pair);
    SymbolShape child_shape = build_shape(child);
    MatQ limit = eval_entries_at_zero(At.entries);
    check_shape_conformance(limit, child_shape, "limit_left");
    return LeftLimit{child, ChartMatrixQ{std::move(child_shape), std::move(limit)}};
}

RightLimit limit_right(const ChartMatrixQt& At) {
    const AllowedPair& pair = At.shape.pair;
    const int n = pair.n, j = pair.j;
    AllowedPair child = right_child(pair);

    // (i) translate by (1/t, ..., 1/t, 1, ..., 1), the last j coordinates 1
    std::vector<RationalFunction> tvec(n, RationalFunction(Rational(1)) / RationalFunction::t());
    for (int q = n - j + 1; q <= n; ++q) tvec[q - 1] = RationalFunction(Rational(1));
    MatQt scaled = torus_scale(At.entries, tvec);

    // (ii) rows above the box and the first box row by 1/t; rows strictly
    // below box row j+1 by t
    RationalFunction t = RationalFunction::t();
    RationalFunction inv_t = RationalFunction(Rational(1)) / t;
    for (int r = 1; r <= At.shape.box_top; ++r) scaled.row(r - 1) *= inv_t;
    for (int r = At.shape.box_top + j + 1; r <= n; ++r) scaled.row(r - 1) *= t;

    // (iii) evaluate at t = 0
    MatQ at_zero = eval_entries_at_zero(scaled);

    // (iv) unique row reduction into the child chart
    ChartMatrixQ chart = reconstruct_chart(at_zero, child);
    return RightLimit{child, std::move(chart), std::move(scaled), std::move(at_zero)};
}

bool is_nicest(const AllowedPair& pair, const PlusValues<Rational>& plus) {
    for (const Rational& v : plus)
        if (v == 0) return false;
    SymbolShape shape = build_shape(pair);
    ChartMatrixQ chart;
    try {
        chart = solve_stars<Rational>(shape, plus);
    } catch (const NotNice&) {
        return false;
    }
    if (!check_leftmost_nonzero(chart)) return false;
    if (pair.saturated) return true;
    try {
        auto [lp, lv] = pr_left(pair, plus);
        if (!is_nicest(lp, lv)) return false;
        auto [rp, rv] = pr_right(pair, plus);
        return is_nicest(rp, rv);
    } catch (const SingularReduction&) {
        return false;
    }
}

namespace {

int max_degree(const MatQt& M) {
    int d = 0;
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            d = std::max(d, M(i, c).num().degree());
            d = std::max(d, M(i, c).den().degree());
        }
    return d;
}

}  // namespace

DegenerationStep degeneration_step(const AllowedPair& pair, const PlusValues<Rational>& plus) {
    DegenerationStep step;
    step.pair = pair;
    step.plus = plus;
    step.At = build_family(pair, plus);
    step.qt_degree_max = max_degree(step.At.entries);

    LeftLimit left = limit_left(step.At);
    RightLimit right = limit_right(step.At);
    auto [lp, lv] = pr_left(pair, plus);
    auto [rp, rv] = pr_right(pair, plus);

    ChartMatrixQ left_solved = solve_stars<Rational>(build_shape(lp), lv);
    ChartMatrixQ right_solved = solve_stars<Rational>(build_shape(rp), rv);
    if (!mats_equal(left.chart.entries, left_solved.entries))
        throw std::runtime_error("degeneration_step: left limit disagrees with the projected solve at " +
                                 pair.str());
    if (!mats_equal(right.chart.entries, right_solved.entries))
        throw std::runtime_error(
            "degeneration_step: right limit disagrees with the projected solve at " + pair.str());

    step.left_pair = lp;
    step.left_plus = std::move(lv);
    step.left_chart = std::move(left.chart);
    step.right_pair = rp;
    step.right_plus = std::move(rv);
    step.right_chart = std::move(right.chart);
    return step;
}

namespace {

void run_cascade(const AllowedPair& pair, const PlusValues<Rational>& plus, const std::string& path,
                 const CascadeOptions& opts, CascadeReport& report) {
    try {
        if (pair.saturated) {
            ChartMatrixQ chart = solve_stars<Rational>(build_shape(pair), plus);
            CascadeLeaf leaf{pair, path, plus, std::move(chart), std::nullopt};
            if (opts.with_multiplicity) {
                DeltaMatroid dm = feasible_sets(leaf.chart.entries);
                leaf.multiplicity = vertex_lattice_index(polytope_V(dm));
            }
            report.leaves.push_back(std::move(leaf));
            return;
        }
        DegenerationStep step = degeneration_step(pair, plus);
        report.steps.push_back(CascadeStepLog{pair, path, step.qt_degree_max});
        if (opts.dump_matrices) report.dumped_families.push_back(step.At);
        run_cascade(step.left_pair, step.left_plus, path + "L", opts, report);
        run_cascade(step.right_pair, step.right_plus, path + "R", opts, report);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        if (msg.rfind("[path", 0) == 0) throw;  // already annotated deeper down
        throw std::runtime_error("[path " + (path.empty() ? std::string("root") : path) + "] " + msg);
    }
}

}  // namespace

CascadeReport cascade(int n, std::uint64_t seed, const CascadeOptions& opts) {
    if (n < 2) throw std::invalid_argument("cascade: n must be at least 2");
    AllowedPair root = validate_pair(n, SubsetMask(0), SubsetMask(0));
    SymbolShape root_shape = build_shape(root);
    Prng rng(seed);

    CascadeReport report;
    report.n = n;
    report.seed = seed;

    PlusValues<Rational> plus;
    bool found = false;
    for (int attempt = 1; attempt <= opts.max_root_redraws; ++attempt) {
        plus = random_plus(root_shape, rng);
        report.root_attempts = attempt;
        if (is_nicest(root, plus)) {
            found = true;
            break;
        }
    }
    if (!found)
        throw NotNice("cascade: no nicest root assignment found in " +
                      std::to_string(opts.max_root_redraws) + " draws");

    run_cascade(root, plus, "", opts, report);

    if (report.leaves.size() != (1u << (n - 1)))
        throw std::logic_error("cascade: wrong leaf count");
    std::vector<SubsetMask> seen;
    for (const CascadeLeaf& leaf : report.leaves) {
        if (!leaf.pair.saturated) throw std::logic_error("cascade: non-saturated leaf");
        seen.push_back(leaf.pair.I);
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != i) throw std::logic_error("cascade: leaves do not enumerate all subsets");
    return report;
}

}  // namespace ogdegen
