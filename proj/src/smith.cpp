#include "ogdegen/smith.hpp"

#include <cstdlib>

namespace ogdegen {

namespace {

Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Locate the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (s, s); returns false if that submatrix is zero.
bool find_pivot(const MatZ& M, Eigen::Index s, Eigen::Index& pr, Eigen::Index& pc) {
    bool found = false;
    Integer best = 0;
    for (Eigen::Index i = s; i < M.rows(); ++i)
        for (Eigen::Index j = s; j < M.cols(); ++j) {
            if (M(i, j) == 0) continue;
            Integer a = abs_int(M(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(MatZ M) {
    const Eigen::Index m = M.rows(), n = M.cols();
    SmithForm out;
    Eigen::Index s = 0;
    while (s < m && s < n) {
        Eigen::Index pr = s, pc = s;
        if (!find_pivot(M, s, pr, pc)) break;
        M.row(pr).swap(M.row(s));
        M.col(pc).swap(M.col(s));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = s + 1; i < m; ++i) {
                if (M(i, s) == 0) continue;
                Integer q = M(i, s) / M(s, s);
                M.row(i) -= M.row(s) * q;
                if (M(i, s) != 0) {  // remainder smaller than pivot: promote it
                    M.row(i).swap(M.row(s));
                    clean = false;
                }
            }
            for (Eigen::Index j = s + 1; j < n; ++j) {
                if (M(s, j) == 0) continue;
                Integer q = M(s, j) / M(s, s);
                M.col(j) -= M.col(s) * q;
                if (M(s, j) != 0) {
                    M.col(j).swap(M.col(s));
                    clean = false;
                }
            }
        }
        if (M(s, s) < 0) M(s, s) = -M(s, s);
        out.diagonal.push_back(M(s, s));
        ++s;
    }
    out.rank = static_cast<Eigen::Index>(out.diagonal.size());
    // Sort divisibility into the chain d_1 | d_2 | ... by gcd/lcm folding.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < out.diagonal.size(); ++i) {
            Integer &a = out.diagonal[i], &b = out.diagonal[i + 1];
            if (b % a != 0) {
                Integer g = gcd(a, b);
                Integer l = a / g * b;
                a = g;
                b = l;
                changed = true;
            }
        }
    }
    return out;
}

std::optional<Integer> lattice_index(const MatZ& generators, Eigen::Index ambient_dim) {
    if (generators.cols() != ambient_dim)
        throw std::invalid_argument("lattice_index: generators must have ambient_dim columns");
    SmithForm f = smith_normal_form(generators);
    if (f.rank < ambient_dim) return std::nullopt;
    Integer idx = 1;
    for (const Integer& d : f.diagonal) idx *= d;
    return idx;
}

}  // namespace ogdegen
