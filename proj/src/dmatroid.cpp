#include "ogdegen/dmatroid.hpp"

#include <algorithm>

namespace ogdegen {

std::vector<int> admissible_codes(const AdmissibleSet& S, int n) {
    std::vector<int> codes;
    for (int q = 1; q <= n; ++q) {
        if (S.sign(q) > 0) codes.push_back(col_pos(q, n));
        else if (S.sign(q) < 0) codes.push_back(col_neg(q, n));
    }
    return codes;
}

int rank_of(const MatQ& A, const AdmissibleSet& S) {
    const int n = static_cast<int>(A.rows());
    std::vector<int> codes = admissible_codes(S, n);
    if (codes.empty()) return 0;
    return static_cast<int>(mat_rank(select_cols(A, codes)));
}

int g_of(const MatQ& A, const AdmissibleSet& S) { return rank_of(A, S) - S.count_neg(); }

AdmissibleSet DeltaMatroid::set_of(std::uint32_t T) const {
    AdmissibleSet S = AdmissibleSet::empty(n);
    for (int q = 1; q <= n; ++q) S.eps[q - 1] = ((T >> (q - 1)) & 1u) ? 1 : -1;
    return S;
}

DeltaMatroid feasible_sets(const MatQ& A) {
    const int n = static_cast<int>(A.rows());
    DeltaMatroid D;
    D.n = n;
    for (std::uint32_t T = 0; T < (1u << n); ++T) {
        AdmissibleSet S = AdmissibleSet::empty(n);
        for (int q = 1; q <= n; ++q) S.eps[q - 1] = ((T >> (q - 1)) & 1u) ? 1 : -1;
        if (rank_of(A, S) == n) D.feasible.push_back(T);
    }
    return D;
}

int rank_via_matroid(const DeltaMatroid& D, const AdmissibleSet& S) {
    int best = 0;
    for (std::uint32_t T : D.feasible) {
        int inter = 0;
        for (int q = 1; q <= D.n; ++q) {
            bool in_T = (T >> (q - 1)) & 1u;
            if ((S.sign(q) > 0 && in_T) || (S.sign(q) < 0 && !in_T)) ++inter;
        }
        best = std::max(best, inter);
    }
    return best;
}

PolytopeH polytope_H(const MatQ& A) {
    const int n = static_cast<int>(A.rows());
    PolytopeH P;
    P.n = n;
    for (const AdmissibleSet& S : enumerate_admissible(n, false)) {
        if (S.is_empty()) continue;
        P.sets.push_back(S);
        P.bounds.push_back(g_of(A, S));
    }
    return P;
}

PolytopeV polytope_V(const DeltaMatroid& D) {
    PolytopeV V;
    V.n = D.n;
    V.vertices = D.feasible;  // chi(S') keeps exactly the unbarred part
    std::sort(V.vertices.begin(), V.vertices.end());
    V.vertices.erase(std::unique(V.vertices.begin(), V.vertices.end()), V.vertices.end());
    return V;
}

Rational x_of(const VecQ& x, const AdmissibleSet& S) {
    Rational acc = 0;
    for (int q = 1; q <= S.n; ++q) {
        if (S.sign(q) > 0) acc += x(q - 1);
        else if (S.sign(q) < 0) acc -= x(q - 1);
    }
    return acc;
}

bool contains(const PolytopeH& P, const VecQ& x) {
    for (size_t i = 0; i < P.sets.size(); ++i)
        if (x_of(x, P.sets[i]) > P.bounds[i]) return false;
    return true;
}

bool contains_strictly(const PolytopeH& P, const VecQ& x) {
    for (size_t i = 0; i < P.sets.size(); ++i)
        if (x_of(x, P.sets[i]) >= P.bounds[i]) return false;
    return true;
}

std::optional<AdmissibleSet> first_violated(const PolytopeH& P, const VecQ& x) {
    for (size_t i = 0; i < P.sets.size(); ++i)
        if (x_of(x, P.sets[i]) > P.bounds[i]) return P.sets[i];
    return std::nullopt;
}

VecQ chi_vector(std::uint32_t T, int n) {
    VecQ x(n);
    for (int q = 1; q <= n; ++q) x(q - 1) = ((T >> (q - 1)) & 1u) ? 1 : 0;
    return x;
}

std::vector<VecQ> enumerate_vertices(const PolytopeH& P) {
    const int n = P.n;
    if (n > 4)
        throw DimensionTooLarge("enumerate_vertices: bound n <= 4, got n = " + std::to_string(n));
    const int m = static_cast<int>(P.sets.size());
    std::vector<VecQ> found;
    auto record = [&](const VecQ& x) {
        for (const VecQ& v : found)
            if (mats_equal<Rational>(v, x)) return;
        found.push_back(x);
    };
    std::vector<int> idx(n);
    // all n-subsets of the constraints, solved as tight equalities
    auto solve_subset = [&]() {
        MatQ C(n, n);
        VecQ d(n);
        for (int r = 0; r < n; ++r) {
            const AdmissibleSet& S = P.sets[idx[r]];
            for (int q = 1; q <= n; ++q) C(r, q - 1) = S.sign(q);
            d(r) = P.bounds[idx[r]];
        }
        try {
            VecQ x = solve_square(C, d);
            if (contains(P, x)) record(x);
        } catch (const SingularSystem&) {
        }
    };
    std::vector<int> stack;
    // iterative choose(m, n)
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (m < n) return found;
    while (true) {
        solve_subset();
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    std::sort(found.begin(), found.end(), [](const VecQ& a, const VecQ& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) < b(i)) return true;
            if (a(i) > b(i)) return false;
        }
        return false;
    });
    return found;
}

std::optional<Integer> vertex_lattice_index(const PolytopeV& V) {
    if (V.vertices.size() < 2)
        throw std::invalid_argument("vertex_lattice_index: need at least two vertices");
    const int n = V.n;
    MatZ D(static_cast<Eigen::Index>(V.vertices.size()) - 1, n);
    for (size_t i = 1; i < V.vertices.size(); ++i)
        for (int q = 1; q <= n; ++q) {
            int a = (V.vertices[i] >> (q - 1)) & 1u;
            int b = (V.vertices[0] >> (q - 1)) & 1u;
            D(static_cast<Eigen::Index>(i) - 1, q - 1) = a - b;
        }
    return lattice_index(D, n);
}

namespace {

AdmissibleSet random_admissible(int n, Prng& rng) {
    AdmissibleSet S = AdmissibleSet::empty(n);
    for (int q = 0; q < n; ++q) S.eps[q] = static_cast<std::int8_t>(rng.int_in(-1, 1));
    return S;
}

}  // namespace

bool check_bisubmodular(const MatQ& A, int trials, Prng& rng) {
    const int n = static_cast<int>(A.rows());
    for (int t = 0; t < trials; ++t) {
        AdmissibleSet S1 = random_admissible(n, rng);
        AdmissibleSet S2 = random_admissible(n, rng);
        int lhs = g_of(A, S1) + g_of(A, S2);
        int rhs = g_of(A, adm_intersect(S1, S2)) + g_of(A, adm_sqcup(S1, S2));
        if (lhs < rhs) return false;
    }
    return true;
}

bool check_split_rank(const MatQ& A) {
    const int n = static_cast<int>(A.rows());
    for (const AdmissibleSet& S : enumerate_admissible(n, false)) {
        AdmissibleSet pos = S, neg = S;
        for (int q = 0; q < n; ++q) {
            if (pos.eps[q] < 0) pos.eps[q] = 0;
            if (neg.eps[q] > 0) neg.eps[q] = 0;
        }
        if (rank_of(A, S) != rank_of(A, pos) + rank_of(A, neg)) return false;
    }
    return true;
}

AdmissibleSet check_rank_plus_j(const MatQ& A, const AdmissibleSet& S, SubsetMask J) {
    const int n = static_cast<int>(A.rows());
    for (int q : mask_elements(J))
        if (S.sign(q) != 0)
            throw std::invalid_argument("check_rank_plus_j: J u J-bar meets S");
    AdmissibleSet current = S;
    AdmissibleSet witness = AdmissibleSet::empty(n);
    int r = rank_of(A, current);
    for (int q : mask_elements(J)) {
        current.eps[q - 1] = 1;
        if (rank_of(A, current) == r + 1) {
            witness.eps[q - 1] = 1;
            ++r;
            continue;
        }
        current.eps[q - 1] = -1;
        if (rank_of(A, current) != r + 1)
            throw std::runtime_error(
                "check_rank_plus_j: neither column raises the rank; matrix is not isotropic");
        witness.eps[q - 1] = -1;
        ++r;
    }
    return witness;
}

}  // namespace ogdegen
