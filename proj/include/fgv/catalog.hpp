#pragma once

#include <optional>
#include <string>

#include "fgv/configuration.hpp"

namespace fgv::catalog {

/// P^2(F2): 7 points, 7 lines.
LineConfiguration fano();

/// Points and F2-lines of P^n.
LineConfiguration projective_configuration(int n);

/// Points and lines of the elliptic quadric Q_{2n}^-.
LineConfiguration quadric_configuration(int n);

/// The 27 lines on a smooth cubic surface, with the classical labels
/// a1..a6, b1..b6, c12..c56 and the 45 coplanar triples
/// {ai, bj, cij} (i != j) and {cij, ckl, cmn} over partitions of {1..6}.
LineConfiguration schlaefli_configuration();

/// n isolated points, no lines.
LineConfiguration isolated_points(int n);

/// Product of n copies of P^1.
LineConfiguration p1_power(int n);

/// True iff the automorphism group acts transitively on points.
bool homogeneity_check(const LineConfiguration& c);

/// Resolve a catalog name: fano, schlaefli, p<n>, q-minus<n>, p1x<n>,
/// points<n>.  Returns nothing for unknown names.
std::optional<LineConfiguration> by_name(const std::string& name);

}  // namespace fgv::catalog
