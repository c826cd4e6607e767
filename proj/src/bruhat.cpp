#include "spherical/bruhat.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace spherical {

std::optional<int> first_bruhat_violation(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  const int n = v.degree();
  // Prefix sets grow one value at a time; keep them sorted by insertion.
  std::vector<int> vp;
  std::vector<int> wp;
  vp.reserve(static_cast<std::size_t>(n));
  wp.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    vp.insert(std::upper_bound(vp.begin(), vp.end(), v(i)), v(i));
    wp.insert(std::upper_bound(wp.begin(), wp.end(), w(i)), w(i));
    for (std::size_t k = 0; k < vp.size(); ++k) {
      if (vp[k] > wp[k]) return i;
    }
  }
  return std::nullopt;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  return !first_bruhat_violation(v, w).has_value();
}

std::vector<Permutation> bruhat_covers_up(const Permutation& w) {
  const int n = w.degree();
  const int len = w.length();
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Permutation wt = right_multiply_transposition(w, i, j);
      if (wt.length() == len + 1) out.push_back(std::move(wt));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool prefix_leq(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("prefix_leq: degree mismatch");
  return v.length() + compose(v.inverse(), w).length() == w.length();
}

BruhatInterval build_interval(const Permutation& w, const IntervalOptions& options) {
  const int rank = w.length();
  if (rank > options.rank_bound) {
    throw std::length_error("interval rank " + std::to_string(rank) + " exceeds bound " +
                            std::to_string(options.rank_bound));
  }
  const int n = w.degree();
  BruhatInterval iv{w, {}, {}};

  if (n <= options.filter_degree_limit) {
    for (auto& u : all_permutations(n)) {
      if (bruhat_leq(u, w)) iv.elements.push_back(std::move(u));
    }
  } else {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      Permutation u = std::move(frontier.front());
      frontier.pop_front();
      for (auto& up : bruhat_covers_up(u)) {
        if (!bruhat_leq(up, w) || seen.contains(up)) continue;
        seen.insert(up);
        frontier.push_back(std::move(up));
      }
    }
    iv.elements.assign(seen.begin(), seen.end());
  }

  for (const auto& u : iv.elements) {
    for (auto& up : bruhat_covers_up(u)) {
      if (std::binary_search(iv.elements.begin(), iv.elements.end(), up)) {
        iv.covers.emplace_back(u, std::move(up));
      }
    }
  }
  return iv;
}

bool is_boolean_lattice(const BruhatInterval& interval) {
  const int rank = interval.top.length();
  if (rank >= 63) return false;
  const auto& elems = interval.elements;
  if (elems.size() != (std::size_t{1} << rank)) return false;

  std::vector<const Permutation*> atoms;
  for (const auto& u : elems) {
    if (u.length() == 1) atoms.push_back(&u);
  }
  if (static_cast<int>(atoms.size()) != rank) return false;

  std::vector<std::uint64_t> masks;
  masks.reserve(elems.size());
  for (const auto& u : elems) {
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (bruhat_leq(*atoms[a], u)) mask |= std::uint64_t{1} << a;
    }
    masks.push_back(mask);
  }

  // |elements| = 2^rank and distinct masks over rank atoms means a bijection
  // onto all subsets.
  std::vector<std::uint64_t> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      const bool subset = (masks[x] & ~masks[y]) == 0;
      if (subset != bruhat_leq(elems[x], elems[y])) return false;
    }
  }
  return true;
}

}  // namespace spherical
