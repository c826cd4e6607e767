#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spherical/permutation.hpp"

namespace spherical {

/// s_{i_1} s_{i_2} ... s_{i_l} with letters stored in that order.
struct ReducedWord {
  int degree = 1;
  std::vector<int> letters;

  /// compose(s_{i_1}, compose(s_{i_2}, ...)).
  Permutation product() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Order in which left descents are tried by the depth-first searches.
enum class DescentOrder { ascending, descending };

/// Enumeration refuses to run past this many estimated words unless a limit is given.
inline constexpr double kReducedWordEstimateCap = 1e7;

/// Upper-bound style estimate: product of left-descent counts along the probe
/// that always strips the smallest descent.
double estimate_reduced_word_count(const Permutation& w);

/// All reduced words of w (at most `limit` of them), lexicographically.
/// Without a limit, throws std::length_error when the estimate exceeds
/// kReducedWordEstimateCap.
std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 std::optional<std::size_t> limit = std::nullopt);

/// Maximal runs of consecutive indices of J (the type A Dynkin diagram is a path).
std::vector<GeneratorSet> dynkin_components(const GeneratorSet& J);

bool word_is_repetition_free(const ReducedWord& word);

/// A reduced word of w in which no generator repeats, if one exists.
std::optional<ReducedWord> repetition_free_word(const Permutation& w,
                                                DescentOrder order = DescentOrder::ascending);
bool is_boolean_by_words(const Permutation& w);

/// Per-letter caps for the spherical word search: each generator outside
/// J(w) may appear once; generators inside a component C of J(w) share a cap
/// of l(w_0(C)) + |C|.
struct SphericalBudget {
  std::vector<int> group_of;  // index i -> budget group (entry 0 unused)
  std::vector<int> caps;      // cap per group

  static SphericalBudget for_permutation(const Permutation& w);
};

/// l(w_0(C)) + |C| for a component of c consecutive generators.
constexpr int component_cap(int c) { return c * (c + 1) / 2 + c; }

/// A reduced word of w satisfying the spherical budget, if one exists.
std::optional<ReducedWord> spherical_word(const Permutation& w,
                                          DescentOrder order = DescentOrder::ascending);
bool is_spherical_by_definition(const Permutation& w,
                                DescentOrder order = DescentOrder::ascending);

}  // namespace spherical
