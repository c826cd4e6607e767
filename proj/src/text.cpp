#include "spherical/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "spherical/reduced_words.hpp"

namespace spherical {

namespace {

std::string join(std::span<const int> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("invalid character '" + std::string(1, c) +
                                    "' in permutation \"" + std::string(text) + "\"");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      std::string_view field = text.substr(start, end - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument("invalid entry \"" + std::string(field) +
                                    "\" in permutation \"" + std::string(text) + "\"");
      }
      values.push_back(v);
      start = end + 1;
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("\"" + std::string(text) + "\" is not a permutation: " +
                                e.what());
  }
}

std::string to_string(const Permutation& w) {
  if (w.degree() >= 10) return join(w.oneline(), ',');
  std::string out;
  for (int v : w.oneline()) out += static_cast<char>('0' + v);
  return out;
}

std::string to_string(const ValueSet& s) { return "{" + join(s.values(), ',') + "}"; }

std::string to_string(const GeneratorSet& J) { return "{" + join(J.members(), ',') + "}"; }

std::string to_string(const ReducedWord& word) { return "[" + join(word.letters, ',') + "]"; }

std::string to_string(const PatternOccurrence& occ) {
  return to_string(occ.pattern) + " at (" + join(occ.positions, ',') + ")";
}

}  // namespace spherical
