#include "spherical/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spherical {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = degree();
  if (n == 0) throw std::invalid_argument("permutation must have degree >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: degree must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

int Permutation::at(int i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("position " + std::to_string(i));
  return (*this)(i);
}

int Permutation::position_of(int value) const {
  auto it = std::find(oneline_.begin(), oneline_.end(), value);
  if (it == oneline_.end()) throw std::out_of_range("value " + std::to_string(value));
  return static_cast<int>(it - oneline_.begin()) + 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < oneline_.size(); ++i) {
    if (oneline_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(oneline_.size());
  for (std::size_t i = 0; i < oneline_.size(); ++i) {
    inv[static_cast<std::size_t>(oneline_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv), Unchecked{});
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < oneline_.size(); ++i) {
    for (std::size_t j = i + 1; j < oneline_.size(); ++j) {
      if (oneline_[i] > oneline_[j]) ++count;
    }
  }
  return count;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.oneline_.begin(), a.oneline_.end(),
                                                b.oneline_.begin(), b.oneline_.end());
}

Permutation compose(const Permutation& u, const Permutation& w) {
  require_same_degree(u, w, "compose");
  std::vector<int> out(w.oneline_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(w.oneline_[i]);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& w) { return w.inverse(); }

int length(const Permutation& w) { return w.length(); }

Permutation left_multiply_generator(int i, const Permutation& w) {
  if (i < 1 || i >= w.degree()) {
    throw std::invalid_argument("generator s_" + std::to_string(i) + " not in S_" +
                                std::to_string(w.degree()));
  }
  std::vector<int> out = w.oneline_;
  for (int& v : out) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation right_multiply_transposition(const Permutation& w, int i, int j) {
  if (i < 1 || j < 1 || i > w.degree() || j > w.degree() || i == j) {
    throw std::invalid_argument("invalid transposition");
  }
  std::vector<int> out = w.oneline_;
  std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

GeneratorSet::GeneratorSet(int degree, std::vector<int> members)
    : degree_(degree), members_(std::move(members)) {
  if (degree < 1) throw std::invalid_argument("generator set degree must be >= 1");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int i : members_) {
    if (i < 1 || i > degree - 1) {
      throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(degree - 1));
    }
  }
}

bool GeneratorSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

GeneratorSet left_descents(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<int> members;
  for (int i = 1; i < w.degree(); ++i) {
    if (inv(i + 1) < inv(i)) members.push_back(i);
  }
  return GeneratorSet(w.degree(), std::move(members));
}

Permutation longest_parabolic(const GeneratorSet& J) {
  const int n = J.degree();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  int start = 1;
  while (start <= n) {
    int end = start;
    while (end < n && J.contains(end)) ++end;
    for (int v = end; v >= start; --v) out.push_back(v);
    start = end + 1;
  }
  return Permutation(std::move(out));
}

ValueSet::ValueSet(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
    throw std::invalid_argument("value set has repeated entries");
  }
}

bool ValueSet::contains(int v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

ValueSet value_window(const Permutation& w, int a, int b) {
  if (a < 1 || b > w.degree() || a > b) {
    throw std::invalid_argument("value_window: need 1 <= a <= b <= " +
                                std::to_string(w.degree()));
  }
  auto line = w.oneline();
  return ValueSet(std::vector<int>(line.begin() + (a - 1), line.begin() + b));
}

bool dominates(const ValueSet& a, const ValueSet& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: cardinality mismatch");
  auto av = a.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < av.size(); ++k) {
    if (av[k] > bv[k]) return false;
  }
  return true;
}

namespace {

// Depth-first choice of host positions; each new value must sit in the same
// relative order against the values already chosen as the pattern prescribes.
template <typename Visit>
bool scan_occurrences(const Permutation& w, const Permutation& p, Visit&& visit) {
  if (p.degree() > w.degree()) {
    throw std::invalid_argument("pattern of degree " + std::to_string(p.degree()) +
                                " longer than host of degree " + std::to_string(w.degree()));
  }
  const int n = w.degree();
  const int k = p.degree();
  std::vector<int> chosen(static_cast<std::size_t>(k));

  auto consistent = [&](int depth, int pos) {
    const int value = w(pos);
    const int pv = p(depth + 1);
    for (int d = 0; d < depth; ++d) {
      const bool host_less = w(chosen[static_cast<std::size_t>(d)]) < value;
      const bool pattern_less = p(d + 1) < pv;
      if (host_less != pattern_less) return false;
    }
    return true;
  };

  // Returns true when the visitor asks to stop.
  auto recurse = [&](auto&& self, int depth, int next) -> bool {
    if (depth == k) return visit(chosen);
    for (int pos = next; pos <= n - (k - depth) + 1; ++pos) {
      if (!consistent(depth, pos)) continue;
      chosen[static_cast<std::size_t>(depth)] = pos;
      if (self(self, depth + 1, pos + 1)) return true;
    }
    return false;
  };
  return recurse(recurse, 0, 1);
}

}  // namespace

std::vector<PatternOccurrence> pattern_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<PatternOccurrence> out;
  scan_occurrences(w, p, [&](const std::vector<int>& pos) {
    out.push_back(PatternOccurrence{pos, p});
    return false;
  });
  return out;
}

std::optional<PatternOccurrence> find_pattern(const Permutation& w, const Permutation& p) {
  std::optional<PatternOccurrence> found;
  scan_occurrences(w, p, [&](const std::vector<int>& pos) {
    found = PatternOccurrence{pos, p};
    return true;
  });
  return found;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  return scan_occurrences(w, p, [](const std::vector<int>&) { return true; });
}

bool avoids_all(const Permutation& w, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& p) {
    return p.degree() <= w.degree() && contains_pattern(w, p);
  });
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int rank = 1;
    for (int v : values) {
      if (v < values[i]) ++rank;
    }
    out[i] = rank;
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace spherical
