#pragma once

// Text encodings shared by the library and the CLI.
//
//   permutation:   "25314" for n <= 9, "2,5,3,1,4,10,..." for n >= 10
//                  (parsing accepts either form at any degree)
//   reduced word:  "[1,2,1]", empty word "[]"

#include <string>
#include <string_view>

#include "spherical/permutation.hpp"

namespace spherical {

struct ReducedWord;
struct DivisibilityWitness;

/// Throws std::invalid_argument with a readable message on malformed input.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& w);
std::string to_string(const ValueSet& s);
std::string to_string(const GeneratorSet& J);
std::string to_string(const ReducedWord& word);
std::string to_string(const PatternOccurrence& occ);

}  // namespace spherical
