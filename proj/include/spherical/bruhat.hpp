#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spherical/permutation.hpp"

namespace spherical {

/// Bruhat order by prefix dominance: v <= w iff v[1,i] ⪯ w[1,i] for all i.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// Smallest i with v[1,i] not dominated by w[1,i]; empty when v <= w.
std::optional<int> first_bruhat_violation(const Permutation& v, const Permutation& w);

/// All w*t, t a transposition, with length(w*t) = length(w) + 1. Sorted.
std::vector<Permutation> bruhat_covers_up(const Permutation& w);

/// Right weak order: length(v) + length(v^{-1} w) = length(w).
bool prefix_leq(const Permutation& v, const Permutation& w);

struct BruhatInterval {
  Permutation top;
  std::vector<Permutation> elements;                        // sorted lexicographically
  std::vector<std::pair<Permutation, Permutation>> covers;  // (u, u') with u ⋖ u', sorted
};

struct IntervalOptions {
  int rank_bound = 12;
  // Degrees up to this filter all of S_n; above it the interval is grown
  // upward from e along covers.
  int filter_degree_limit = 8;
};

/// [e, w] with its cover relations. Throws std::length_error when
/// length(w) exceeds options.rank_bound.
BruhatInterval build_interval(const Permutation& w, const IntervalOptions& options = {});

/// Order-isomorphism with the Boolean lattice of rank length(top), decided by
/// the atom-set bijection.
bool is_boolean_lattice(const BruhatInterval& interval);

}  // namespace spherical
