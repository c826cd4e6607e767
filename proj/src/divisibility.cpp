#include "spherical/divisibility.hpp"

#include <stdexcept>
#include <vector>

namespace spherical {

namespace {

void check_arguments(const Permutation& v, const Permutation& w, int i) {
  if (v.degree() != w.degree()) throw std::invalid_argument("divisibility: degree mismatch");
  if (i < 1 || i > v.degree()) {
    throw std::invalid_argument("divisibility: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(v.degree()));
  }
}

int prefix_overlap(const Permutation& v, const Permutation& w, int i) {
  const ValueSet a = value_window(v, 1, i);
  const ValueSet b = value_window(w, 1, i);
  int count = 0;
  for (int x : a.values()) {
    if (b.contains(x)) ++count;
  }
  return count;
}

}  // namespace

bool divisible_after(const Permutation& v, const Permutation& w, int i) {
  check_arguments(v, w, i);
  return prefix_overlap(v, w, i) <= i - 2;
}

bool divisible_at(const Permutation& v, const Permutation& w, int i) {
  check_arguments(v, w, i);
  return v(i) == w(i) && prefix_overlap(v, w, i) <= i - 1;
}

std::optional<DivisibilityWitness> is_divisible(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("divisibility: degree mismatch");
  const int n = v.degree();
  std::vector<bool> in_v(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> in_w(static_cast<std::size_t>(n) + 1, false);
  int overlap = 0;
  for (int i = 1; i <= n; ++i) {
    const auto a = static_cast<std::size_t>(v(i));
    const auto b = static_cast<std::size_t>(w(i));
    in_v[a] = true;
    if (in_w[a]) ++overlap;
    in_w[b] = true;
    if (in_v[b]) ++overlap;
    if (overlap <= i - 2) return DivisibilityWitness{DivisibilityKind::after, i, overlap};
    if (a == b && overlap <= i - 1) return DivisibilityWitness{DivisibilityKind::at, i, overlap};
  }
  return std::nullopt;
}

std::string to_string(const std::optional<DivisibilityWitness>& witness) {
  if (!witness) return "none";
  return std::string(witness->kind == DivisibilityKind::after ? "after@" : "at@") +
         std::to_string(witness->position);
}

}  // namespace spherical
