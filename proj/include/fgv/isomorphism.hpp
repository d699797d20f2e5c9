#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgv/configuration.hpp"

namespace fgv {

/// Point bijection matching lines both ways, or absence.  Deterministic:
/// the search explores points in a fixed refinement order and candidates
/// by smallest index, so repeated runs return the same witness.
std::optional<std::vector<int>> are_isomorphic(const LineConfiguration& a,
                                               const LineConfiguration& b);

/// Like are_isomorphic but with a forced assignment src -> dst.
std::optional<std::vector<int>> find_isomorphism_fixing(const LineConfiguration& a,
                                                        const LineConfiguration& b,
                                                        int src, int dst);

/// Order of the self-isomorphism group, counted by backtracking.
std::uint64_t automorphism_group_order(const LineConfiguration& c);

/// True iff the automorphism group acts transitively on points.
bool is_point_transitive(const LineConfiguration& c);

/// Plain graph isomorphism on adjacency bitsets (used for the phi_p
/// correspondences, where only a graph structure is compared).
std::optional<std::vector<int>> graph_isomorphism(const std::vector<Bitset>& a,
                                                  const std::vector<Bitset>& b);

}  // namespace fgv
