#pragma once

#include <optional>
#include <vector>

#include "ogdegen/chart.hpp"
#include "ogdegen/smith.hpp"

namespace ogdegen {

/// Column codes selected by an admissible set: q for +, bar(q) for -.
std::vector<int> admissible_codes(const AdmissibleSet& S, int n);

/// Rank of the column submatrix A_S.
int rank_of(const MatQ& A, const AdmissibleSet& S);
inline int rank_of(const ChartMatrixQ& A, const AdmissibleSet& S) {
    return rank_of(A.entries, S);
}

/// g(S) = rk(S) - |S restricted to barred indices|.
int g_of(const MatQ& A, const AdmissibleSet& S);

/// Feasible maximal admissible sets, encoded as subsets T of [n]
/// (q in T exactly when the set keeps q rather than q-bar).
struct DeltaMatroid {
    int n = 0;
    std::vector<std::uint32_t> feasible;  // sorted ascending

    AdmissibleSet set_of(std::uint32_t T) const;
};

/// Brute force over all 2^n maximal admissible sets; A must have full row rank.
DeltaMatroid feasible_sets(const MatQ& A);
inline DeltaMatroid feasible_sets(const ChartMatrixQ& A) { return feasible_sets(A.entries); }

/// rk(S) recovered from the feasible sets alone: max over S' of |S' cap S|.
int rank_via_matroid(const DeltaMatroid& D, const AdmissibleSet& S);

/// Base polytope as the inequality system x(S) <= g(S) over all nonempty
/// admissible S.
struct PolytopeH {
    int n = 0;
    std::vector<AdmissibleSet> sets;
    std::vector<int> bounds;
};

/// Base polytope as its 0/1 vertex set chi(S'), S' feasible.
struct PolytopeV {
    int n = 0;
    std::vector<std::uint32_t> vertices;  // chi vectors as subsets of [n], sorted
};

PolytopeH polytope_H(const MatQ& A);
PolytopeV polytope_V(const DeltaMatroid& D);
inline PolytopeV polytope_V(const MatQ& A) { return polytope_V(feasible_sets(A)); }

/// x(S) = sum of eps_q x_q.
Rational x_of(const VecQ& x, const AdmissibleSet& S);

bool contains(const PolytopeH& P, const VecQ& x);
bool contains_strictly(const PolytopeH& P, const VecQ& x);
/// First constraint violated by x, if any.
std::optional<AdmissibleSet> first_violated(const PolytopeH& P, const VecQ& x);

VecQ chi_vector(std::uint32_t T, int n);

/// All vertices of the inequality system, by solving n-subsets of tight
/// constraints; exact and deduplicated.  Desk-scale bound n <= 4.
std::vector<VecQ> enumerate_vertices(const PolytopeH& P);

/// Index in Z^n of the lattice generated by differences of the vertices.
std::optional<Integer> vertex_lattice_index(const PolytopeV& V);

/// g(S1) + g(S2) >= g(S1 cap S2) + g(S1 sqcup S2) over random pairs.
bool check_bisubmodular(const MatQ& A, int trials, Prng& rng);

/// rk(S) = rk(S cap [n]) + rk(S cap [n-bar]) over every admissible S;
/// meaningful for nice saturated chart matrices.
bool check_split_rank(const MatQ& A);

/// Greedy witness J+ inside J u J-bar with rk(S u J+) = rk(S) + |J|.
/// J u J-bar must be disjoint from S.  Throws std::runtime_error when the
/// greedy step fails, which certifies a non-isotropic input.
AdmissibleSet check_rank_plus_j(const MatQ& A, const AdmissibleSet& S, SubsetMask J);

}  // namespace ogdegen
