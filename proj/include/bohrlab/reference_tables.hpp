#pragma once

#include <span>

#include "bohrlab/functionals.hpp"

namespace bohrlab {

/// One published reference radius: the 6-digit value tabulated for the
/// functional at parameter m. `note` is null except where the published
/// value is known to be inconsistent with its own equation (see
/// reference_radii() in the implementation for the two affected rows).
struct ReferenceEntry {
    double m;
    double root;
    const char* note;
};

/// The published 11-row table (m = 0.1, ..., 1.0, 1.25) for each functional.
std::span<const ReferenceEntry> reference_radii(FunctionalKind kind);

/// Comparison tolerance for reproducing the published 6-digit values: the
/// printed final digit carries rounding noise of a few 1e-5.
inline constexpr double kReferenceTolerance = 1e-4;

}  // namespace bohrlab
