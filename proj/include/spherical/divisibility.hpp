#pragma once

#include <optional>
#include <string>

#include "spherical/permutation.hpp"

namespace spherical {

enum class DivisibilityKind { after, at };

struct DivisibilityWitness {
  DivisibilityKind kind;
  int position;           // 1-based
  int intersection_size;  // |v[1,i] ∩ w[1,i]|

  friend bool operator==(const DivisibilityWitness&, const DivisibilityWitness&) = default;
};

/// |v[1,i] ∩ w[1,i]| <= i - 2.
bool divisible_after(const Permutation& v, const Permutation& w, int i);
/// v_i = w_i and |v[1,i] ∩ w[1,i]| <= i - 1.
bool divisible_at(const Permutation& v, const Permutation& w, int i);

/// Smallest divisible position, "after" preferred over "at" at the same
/// position. Linear in n.
std::optional<DivisibilityWitness> is_divisible(const Permutation& v, const Permutation& w);

/// "after@i", "at@i", or "none".
std::string to_string(const std::optional<DivisibilityWitness>& witness);

}  // namespace spherical
