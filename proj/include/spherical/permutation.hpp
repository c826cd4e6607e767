#pragma once

// Core permutation arithmetic for the symmetric group S_n.
//
// Conventions used throughout the library:
//   * Positions and values are 1-based, exactly as in one-line notation
//     w = w_1 w_2 ... w_n.
//   * compose(u, w) applies w first and then u, i.e. i -> u(w(i)).
//     A product written v*w therefore reads as compose(v, w); left
//     multiplication by s_i swaps the *values* i and i+1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spherical {

class Permutation {
public:
  /// Builds a permutation from one-line notation. Throws std::invalid_argument
  /// unless the entries are exactly {1, ..., n} for some n >= 1.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(oneline_.size()); }

  /// w(i), 1-based.
  int operator()(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;

  /// w^{-1}(v): the position holding value v.
  int position_of(int value) const;

  std::span<const int> oneline() const { return oneline_; }
  bool is_identity() const;

  Permutation inverse() const;
  int length() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on one-line notation (shorter degree sorts first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
  struct Unchecked {};
  Permutation(std::vector<int> oneline, Unchecked) : oneline_(std::move(oneline)) {}

  std::vector<int> oneline_;

  friend Permutation compose(const Permutation& u, const Permutation& w);
  friend Permutation left_multiply_generator(int i, const Permutation& w);
  friend Permutation right_multiply_transposition(const Permutation& w, int i, int j);
};

/// i -> u(w(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& u, const Permutation& w);
Permutation inverse(const Permutation& w);
/// Inversion count; equals the length of any reduced word.
int length(const Permutation& w);

/// s_i * w: swaps the values i and i+1 in the one-line notation.
Permutation left_multiply_generator(int i, const Permutation& w);
/// w * (i j): swaps the entries at positions i and j.
Permutation right_multiply_transposition(const Permutation& w, int i, int j);

/// A subset of the simple generators {s_1, ..., s_{n-1}} of S_n, stored by index.
class GeneratorSet {
public:
  explicit GeneratorSet(int degree, std::vector<int> members = {});

  int degree() const { return degree_; }
  std::span<const int> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
  int degree_;
  std::vector<int> members_;  // sorted, unique
};

/// J(w) = { i : w^{-1}(i+1) < w^{-1}(i) }.
GeneratorSet left_descents(const Permutation& w);

/// w_0(J): reverses every maximal block of consecutive values linked by J.
Permutation longest_parabolic(const GeneratorSet& J);

/// A finite set of positive integers, kept sorted.
class ValueSet {
public:
  ValueSet() = default;
  explicit ValueSet(std::vector<int> values);

  std::span<const int> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(int v) const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
  std::vector<int> values_;
};

/// w[a,b] = { w_a, ..., w_b }. Requires 1 <= a <= b <= n.
ValueSet value_window(const Permutation& w, int a, int b);

/// A ⪯ B: after sorting, a_k <= b_k for every k. Requires |A| = |B|.
bool dominates(const ValueSet& a, const ValueSet& b);

struct PatternOccurrence {
  std::vector<int> positions;  // strictly increasing, 1-based
  Permutation pattern;

  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// All position tuples of w realizing p, in lexicographic order of positions.
std::vector<PatternOccurrence> pattern_occurrences(const Permutation& w, const Permutation& p);
/// First occurrence (lexicographically smallest positions), if any.
std::optional<PatternOccurrence> find_pattern(const Permutation& w, const Permutation& p);
bool contains_pattern(const Permutation& w, const Permutation& p);
bool avoids_all(const Permutation& w, std::span<const Permutation> patterns);

/// Relative order of a sequence of distinct values, as a permutation of 1..k.
Permutation standardize(std::span<const int> values);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

std::uint64_t factorial(int n);

}  // namespace spherical
