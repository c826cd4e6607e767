#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spherical/reduced_words.hpp"
#include "spherical/text.hpp"

using namespace spherical;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }
ReducedWord W(int n, std::vector<int> letters) { return ReducedWord{n, std::move(letters)}; }
}  // namespace

TEST_CASE("enumerate reduced words") {
  CHECK(enumerate_reduced_words(P("321")) ==
        std::vector<ReducedWord>{W(3, {1, 2, 1}), W(3, {2, 1, 2})});
  CHECK(enumerate_reduced_words(P("123")) == std::vector<ReducedWord>{W(3, {})});
  CHECK(enumerate_reduced_words(P("213")) == std::vector<ReducedWord>{W(3, {1})});
  CHECK(enumerate_reduced_words(P("4321"), 5).size() == 5);
  CHECK(enumerate_reduced_words(P("4321"), 0).empty());
}

TEST_CASE("reduced words multiply back and match the naive count") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto words = enumerate_reduced_words(w);
      for (const auto& word : words) {
        CHECK(word.product() == w);
        CHECK(static_cast<int>(word.letters.size()) == length(w));
      }
      CHECK(words.size() == oracle::naive_reduced_word_count(w, length(w)));
    }
  }
}

TEST_CASE("enumeration refuses oversized requests without a limit") {
  std::vector<int> rev(9);
  for (int i = 0; i < 9; ++i) rev[static_cast<std::size_t>(i)] = 9 - i;
  const Permutation longest(rev);
  CHECK(estimate_reduced_word_count(longest) > kReducedWordEstimateCap);
  CHECK_THROWS_AS(enumerate_reduced_words(longest), std::length_error);
  CHECK(enumerate_reduced_words(longest, 3).size() == 3);
}

TEST_CASE("dynkin components") {
  auto comps = dynkin_components(GeneratorSet(6, {1, 2, 4}));
  CHECK(comps == std::vector<GeneratorSet>{GeneratorSet(6, {1, 2}), GeneratorSet(6, {4})});
  CHECK(dynkin_components(GeneratorSet(6)).empty());
  comps = dynkin_components(GeneratorSet(6, {1, 3, 5}));
  CHECK(comps.size() == 3);
}

TEST_CASE("component cap formula agrees with the longest element") {
  for (int c = 0; c <= 8; ++c) {
    std::vector<int> members;
    for (int i = 1; i <= c; ++i) members.push_back(i);
    const Permutation w0 = longest_parabolic(GeneratorSet(c + 1, members));
    CHECK(component_cap(c) == length(w0) + c);
  }
}

TEST_CASE("repetition-free words") {
  CHECK_FALSE(word_is_repetition_free(W(3, {1, 2, 1})));
  CHECK(word_is_repetition_free(W(1, {})));
  CHECK(word_is_repetition_free(W(4, {2, 1, 3})));

  CHECK_FALSE(is_boolean_by_words(P("321")));
  CHECK_FALSE(is_boolean_by_words(P("3412")));
  CHECK(is_boolean_by_words(P("2143")));
  const auto word = repetition_free_word(P("2143"));
  REQUIRE(word.has_value());
  CHECK(word->product() == P("2143"));
}

TEST_CASE("Boolean by words matches 321/3412 avoidance, and every word is then repetition-free") {
  const std::vector<Permutation> pats{P("321"), P("3412")};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const bool boolean = is_boolean_by_words(w);
      if (boolean != avoids_all(w, pats)) FAIL_CHECK(to_string(w));
      if (!boolean) continue;
      for (const auto& word : enumerate_reduced_words(w)) {
        if (!word_is_repetition_free(word)) FAIL_CHECK(to_string(w) << " " << to_string(word));
      }
    }
  }
}

TEST_CASE("spherical budget") {
  const auto b = SphericalBudget::for_permutation(P("3214"));  // J = {1,2}
  CHECK(b.caps.size() == 2);
  CHECK(b.group_of[1] == b.group_of[2]);
  CHECK(b.caps[static_cast<std::size_t>(b.group_of[1])] == 5);
  CHECK(b.caps[static_cast<std::size_t>(b.group_of[3])] == 1);
}

TEST_CASE("spherical by definition") {
  CHECK(is_spherical_by_definition(P("12345")));
  CHECK_FALSE(is_spherical_by_definition(P("24531")));
  CHECK(is_spherical_by_definition(P("321")));
  const auto word = spherical_word(P("321"));
  REQUIRE(word.has_value());
  CHECK(word->product() == P("321"));
}

TEST_CASE("definition search does not depend on descent order") {
  for (const auto& w : all_permutations(5)) {
    const auto up = spherical_word(w, DescentOrder::ascending);
    const auto down = spherical_word(w, DescentOrder::descending);
    CHECK(up.has_value() == down.has_value());
    if (up) CHECK(up->product() == w);
    if (down) CHECK(down->product() == w);
    CHECK(repetition_free_word(w, DescentOrder::ascending).has_value() ==
          repetition_free_word(w, DescentOrder::descending).has_value());
  }
}

TEST_CASE("budgeted search agrees with exhaustive word filtering") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto b = SphericalBudget::for_permutation(w);
      bool any = false;
      for (const auto& word : enumerate_reduced_words(w)) {
        std::vector<int> used(b.caps.size(), 0);
        for (int i : word.letters) ++used[static_cast<std::size_t>(b.group_of[static_cast<std::size_t>(i)])];
        bool ok = true;
        for (std::size_t g = 0; g < used.size(); ++g) ok = ok && used[g] <= b.caps[g];
        any = any || ok;
      }
      if (any != is_spherical_by_definition(w)) FAIL_CHECK(to_string(w));
    }
  }
}
