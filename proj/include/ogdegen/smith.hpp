#pragma once

#include <optional>
#include <vector>

#include "ogdegen/linalg.hpp"

namespace ogdegen {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SmithForm {
    std::vector<Integer> diagonal;  // the r positive invariant factors
    Eigen::Index rank = 0;
};

SmithForm smith_normal_form(MatZ M);

/// Index in Z^ambient_dim of the sublattice spanned by the rows of
/// `generators`: the product of invariant factors when the rows have full
/// column rank, std::nullopt (infinite index) otherwise.
std::optional<Integer> lattice_index(const MatZ& generators, Eigen::Index ambient_dim);

}  // namespace ogdegen
