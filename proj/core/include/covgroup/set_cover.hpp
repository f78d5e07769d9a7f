#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covgroup/element_set.hpp"

namespace covgroup {

// Unweighted set cover over ElementSets. Indices refer to `candidates`.

/// Repeatedly takes the candidate covering the most uncovered elements
/// (first in input order on ties). Empty result if the candidates cannot
/// cover the universe.
std::vector<std::size_t> greedy_set_cover(const ElementSet& universe, std::span<const ElementSet> candidates);

/// Minimum-size cover by branch and bound: the greedy cover seeds the
/// incumbent; each node branches on the uncovered element lying in the fewest
/// candidates (smallest element on ties), trying candidates in input order;
/// nodes whose size plus a counting lower bound reaches the incumbent are cut.
/// Empty result if no cover exists.
std::vector<std::size_t> minimum_set_cover(const ElementSet& universe, std::span<const ElementSet> candidates);

bool covers_universe(const ElementSet& universe, std::span<const ElementSet> candidates,
                     std::span<const std::size_t> chosen);

}  // namespace covgroup
