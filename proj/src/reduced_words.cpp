#include "spherical/reduced_words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace spherical {

Permutation ReducedWord::product() const {
  Permutation out = Permutation::identity(degree);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out = left_multiply_generator(*it, out);
  }
  return out;
}

double estimate_reduced_word_count(const Permutation& w) {
  double estimate = 1.0;
  Permutation cur = w;
  while (!cur.is_identity()) {
    const GeneratorSet d = left_descents(cur);
    estimate *= static_cast<double>(d.size());
    cur = left_multiply_generator(d.members().front(), cur);
  }
  return estimate;
}

std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 std::optional<std::size_t> limit) {
  if (!limit && estimate_reduced_word_count(w) > kReducedWordEstimateCap) {
    throw std::length_error("reduced-word enumeration estimated above " +
                            std::to_string(static_cast<long long>(kReducedWordEstimateCap)) +
                            " words; pass an explicit limit");
  }
  std::vector<ReducedWord> out;
  if (limit && *limit == 0) return out;

  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(w.length()));
  auto dfs = [&](auto&& self, const Permutation& cur) -> bool {
    if (cur.is_identity()) {
      out.push_back(ReducedWord{w.degree(), letters});
      return limit && out.size() >= *limit;
    }
    const GeneratorSet descents = left_descents(cur);
    for (int i : descents.members()) {
      letters.push_back(i);
      const bool stop = self(self, left_multiply_generator(i, cur));
      letters.pop_back();
      if (stop) return true;
    }
    return false;
  };
  dfs(dfs, w);
  return out;
}

std::vector<GeneratorSet> dynkin_components(const GeneratorSet& J) {
  std::vector<GeneratorSet> out;
  std::vector<int> run;
  for (int i : J.members()) {
    if (!run.empty() && i != run.back() + 1) {
      out.emplace_back(J.degree(), std::move(run));
      run.clear();
    }
    run.push_back(i);
  }
  if (!run.empty()) out.emplace_back(J.degree(), std::move(run));
  return out;
}

bool word_is_repetition_free(const ReducedWord& word) {
  std::set<int> seen;
  for (int i : word.letters) {
    if (!seen.insert(i).second) return false;
  }
  return true;
}

namespace {

// Depth-first search over left-descent choices. Every letter consumes one
// unit from its group's budget; branches that would overdraw are cut.
// Failed (permutation, remaining budget) states are remembered.
std::optional<ReducedWord> budgeted_search(const Permutation& w, const SphericalBudget& budget,
                                           DescentOrder order) {
  std::vector<int> remaining = budget.caps;
  std::vector<int> letters;
  std::set<std::pair<Permutation, std::vector<int>>> dead;

  auto dfs = [&](auto&& self, const Permutation& cur) -> bool {
    if (cur.is_identity()) return true;
    if (dead.contains({cur, remaining})) return false;
    const GeneratorSet d = left_descents(cur);
    std::vector<int> choices(d.members().begin(), d.members().end());
    if (order == DescentOrder::descending) std::reverse(choices.begin(), choices.end());
    for (int i : choices) {
      int& left = remaining[static_cast<std::size_t>(budget.group_of[static_cast<std::size_t>(i)])];
      if (left == 0) continue;
      --left;
      letters.push_back(i);
      if (self(self, left_multiply_generator(i, cur))) return true;
      letters.pop_back();
      ++left;
    }
    dead.emplace(cur, remaining);
    return false;
  };
  if (!dfs(dfs, w)) return std::nullopt;
  return ReducedWord{w.degree(), std::move(letters)};
}

SphericalBudget singleton_budget(int degree) {
  SphericalBudget b;
  b.group_of.assign(static_cast<std::size_t>(degree), 0);
  for (int i = 1; i < degree; ++i) {
    b.group_of[static_cast<std::size_t>(i)] = static_cast<int>(b.caps.size());
    b.caps.push_back(1);
  }
  return b;
}

}  // namespace

std::optional<ReducedWord> repetition_free_word(const Permutation& w, DescentOrder order) {
  return budgeted_search(w, singleton_budget(w.degree()), order);
}

bool is_boolean_by_words(const Permutation& w) { return repetition_free_word(w).has_value(); }

SphericalBudget SphericalBudget::for_permutation(const Permutation& w) {
  const GeneratorSet J = left_descents(w);
  SphericalBudget b;
  b.group_of.assign(static_cast<std::size_t>(w.degree()), 0);
  for (int i = 1; i < w.degree(); ++i) {
    if (J.contains(i)) continue;
    b.group_of[static_cast<std::size_t>(i)] = static_cast<int>(b.caps.size());
    b.caps.push_back(1);
  }
  for (const auto& component : dynkin_components(J)) {
    const int group = static_cast<int>(b.caps.size());
    for (int i : component.members()) b.group_of[static_cast<std::size_t>(i)] = group;
    b.caps.push_back(component_cap(static_cast<int>(component.size())));
  }
  return b;
}

std::optional<ReducedWord> spherical_word(const Permutation& w, DescentOrder order) {
  return budgeted_search(w, SphericalBudget::for_permutation(w), order);
}

bool is_spherical_by_definition(const Permutation& w, DescentOrder order) {
  return spherical_word(w, order).has_value();
}

}  // namespace spherical
