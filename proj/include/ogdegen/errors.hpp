#pragma once

#include <stdexcept>
#include <string>

namespace ogdegen {

/// Square system with vanishing determinant.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

/// Rational function evaluated where its denominator vanishes.
struct PoleAtZero : std::runtime_error {
    explicit PoleAtZero(const std::string& what) : std::runtime_error(what) {}
};

/// A pair (I, I') that fails every clause of the allowed-pair definition.
struct NotAllowed : std::runtime_error {
    explicit NotAllowed(const std::string& what) : std::runtime_error(what) {}
};

/// Successor of a saturated pair requested.
struct SaturatedPair : std::runtime_error {
    explicit SaturatedPair(const std::string& what) : std::runtime_error(what) {}
};

/// A star-solver pivot system is singular for the given plus-entries.
/// Carries which system vanished so the caller can diagnose or redraw.
struct NotNice : std::runtime_error {
    explicit NotNice(const std::string& what) : std::runtime_error(what) {}
};

/// Basis matrix does not lie in the open Richardson cell of the pair.
struct NotInCell : std::runtime_error {
    explicit NotInCell(const std::string& what) : std::runtime_error(what) {}
};

/// The right projection's row reduction hit a zero pivot.
struct SingularReduction : std::runtime_error {
    explicit SingularReduction(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex enumeration requested above its desk-scale bound.
struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Sample point lies on a wall of the polytope decomposition.
struct BoundaryPoint : std::runtime_error {
    explicit BoundaryPoint(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ogdegen
