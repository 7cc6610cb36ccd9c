#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogdegen/chart.hpp"

namespace ogdegen {

/// Position of the active coordinate: the leftmost plus entry of the top
/// inner-box row (column code n + j, i.e. bar(n+1-j) when j > 0 and the zero
/// column when j = 0).
struct ActiveCoordinate {
    int row = 0;
    int col = 0;
    int plus_index = -1;
};

ActiveCoordinate active_coordinate(const SymbolShape& shape);

/// Embed the plus entries into Q(t), multiply the active coordinate by t,
/// and solve the stars over Q(t).
ChartMatrixQt build_family(const AllowedPair& pair, const PlusValues<Rational>& plus);

/// Forget the active coordinate.
std::pair<AllowedPair, PlusValues<Rational>> pr_left(const AllowedPair& pair,
                                                     const PlusValues<Rational>& plus);

/// Zero the prescribed inner-box columns in rows 2..j+1 and renormalize by
/// the unique row operations; throws SingularReduction on a vanishing pivot.
std::pair<AllowedPair, PlusValues<Rational>> pr_right(const AllowedPair& pair,
                                                      const PlusValues<Rational>& plus);

struct LeftLimit {
    AllowedPair child;
    ChartMatrixQ chart;
};

struct RightLimit {
    AllowedPair child;
    ChartMatrixQ chart;
    MatQt scaled;   // after the torus translate and row rescalings (steps i-ii)
    MatQ at_zero;   // after evaluation at t = 0 (step iii)
};

/// Entrywise evaluation of A(t) at t = 0; the result conforms to the left
/// child's shape.
LeftLimit limit_left(const ChartMatrixQt& At);

/// Steps (i)-(iv): torus translate by (1/t, ..., 1/t, 1, ..., 1), row
/// rescaling, evaluation at 0, and reduction to the right child's chart.
RightLimit limit_right(const ChartMatrixQt& At);

/// Recursive genericity: the solve succeeds with nonzero plus entries and
/// leftmost entries, and both projections are again nicest.
bool is_nicest(const AllowedPair& pair, const PlusValues<Rational>& plus);

/// One degeneration step with both limits computed exactly over Q(t) and
/// verified entrywise against the projected solves.
struct DegenerationStep {
    AllowedPair pair;
    PlusValues<Rational> plus;
    ChartMatrixQt At;
    AllowedPair left_pair, right_pair;
    PlusValues<Rational> left_plus, right_plus;
    ChartMatrixQ left_chart, right_chart;
    int qt_degree_max = 0;  // largest num/den degree seen in A(t)
};

DegenerationStep degeneration_step(const AllowedPair& pair, const PlusValues<Rational>& plus);

struct CascadeLeaf {
    AllowedPair pair;
    std::string path;  // "L"/"R" moves from the root
    PlusValues<Rational> plus;
    ChartMatrixQ chart;
    std::optional<Integer> multiplicity;  // vertex lattice index of its polytope
};

struct CascadeStepLog {
    AllowedPair pair;
    std::string path;
    int qt_degree_max = 0;
};

struct CascadeReport {
    int n = 0;
    std::uint64_t seed = 0;
    int root_attempts = 0;
    std::vector<CascadeLeaf> leaves;
    std::vector<CascadeStepLog> steps;
    std::vector<ChartMatrixQt> dumped_families;  // only with dump_matrices
};

struct CascadeOptions {
    bool with_multiplicity = true;
    bool dump_matrices = false;
    int max_root_redraws = 32;
};

/// Drive one shared nicest plus assignment from the root (empty, empty)
/// down the whole tree, checking limit/projection coherence at every node.
CascadeReport cascade(int n, std::uint64_t seed, const CascadeOptions& opts = {});

}  // namespace ogdegen
