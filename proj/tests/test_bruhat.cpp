#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spherical/bruhat.hpp"
#include "spherical/text.hpp"

using namespace spherical;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("bruhat_leq examples") {
  for (const auto& w : all_permutations(4)) CHECK(bruhat_leq(Permutation::identity(4), w));
  CHECK(bruhat_leq(P("2143"), P("3142")));
  CHECK_FALSE(bruhat_leq(P("321"), P("312")));
  CHECK(first_bruhat_violation(P("321"), P("312")) == 2);
  CHECK_FALSE(first_bruhat_violation(P("2143"), P("3142")).has_value());
  CHECK_THROWS_AS(bruhat_leq(P("21"), P("321")), std::invalid_argument);
}

TEST_CASE("bruhat_leq equals the closure of covers") {
  for (int n = 1; n <= 5; ++n) {
    const auto closure = oracle::cover_closure(n);
    const auto perms = all_permutations(n);
    for (const auto& v : perms) {
      for (const auto& w : perms) {
        const bool want = closure.contains({oracle::line(v), oracle::line(w)});
        if (bruhat_leq(v, w) != want) FAIL_CHECK(to_string(v) << " <= " << to_string(w));
      }
    }
  }
}

TEST_CASE("bruhat_leq is a partial order on S_n for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& a : perms) {
      CHECK(bruhat_leq(a, a));
      for (const auto& b : perms) {
        if (a != b && bruhat_leq(a, b)) CHECK_FALSE(bruhat_leq(b, a));
        if (!bruhat_leq(a, b)) continue;
        for (const auto& c : perms) {
          if (bruhat_leq(b, c) && !bruhat_leq(a, c)) FAIL_CHECK("transitivity");
        }
      }
    }
  }
}

TEST_CASE("covers") {
  CHECK(bruhat_covers_up(P("123")) == std::vector<Permutation>{P("132"), P("213")});
  CHECK(bruhat_covers_up(P("321")).empty());
  CHECK(bruhat_covers_up(P("213")) == std::vector<Permutation>{P("231"), P("312")});
}

TEST_CASE("weak order") {
  CHECK(prefix_leq(P("1234"), P("4231")));
  // 312 = 132 * s_1 with lengths adding; 213 is not a left factor of 312.
  CHECK(prefix_leq(P("132"), P("312")));
  CHECK_FALSE(prefix_leq(P("213"), P("312")));
  CHECK_FALSE(prefix_leq(P("321"), P("312")));
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& v : perms) {
      for (const auto& w : perms) {
        if (prefix_leq(v, w) && !bruhat_leq(v, w)) FAIL_CHECK("weak order not refining Bruhat");
      }
    }
  }
}

TEST_CASE("intervals") {
  const auto iv = build_interval(P("2143"));
  CHECK(iv.elements == std::vector<Permutation>{P("1234"), P("1243"), P("2134"), P("2143")});
  CHECK(iv.covers.size() == 4);
  CHECK(is_boolean_lattice(iv));

  const auto point = build_interval(P("1234"));
  CHECK(point.elements.size() == 1);
  CHECK(point.covers.empty());
  CHECK(is_boolean_lattice(point));

  const auto full = build_interval(P("321"));
  CHECK(full.elements.size() == 6);
  CHECK_FALSE(is_boolean_lattice(full));

  CHECK_THROWS_AS(build_interval(P("654321"), {.rank_bound = 12}), std::length_error);
  CHECK_NOTHROW(build_interval(P("654321"), {.rank_bound = 15}));
}

TEST_CASE("interval invariants") {
  for (const auto& w : all_permutations(5)) {
    const auto iv = build_interval(w);
    CHECK(std::binary_search(iv.elements.begin(), iv.elements.end(), Permutation::identity(5)));
    CHECK(std::binary_search(iv.elements.begin(), iv.elements.end(), w));
    for (const auto& u : iv.elements) CHECK(bruhat_leq(u, w));
    for (const auto& [u, up] : iv.covers) {
      CHECK(length(up) == length(u) + 1);
      int differ = 0;
      for (int i = 1; i <= 5; ++i) differ += u(i) != up(i);
      CHECK(differ == 2);
    }
  }
}

TEST_CASE("upward growth matches filtering") {
  for (const char* text : {"2143", "3142", "24531", "351426", "4231"}) {
    const Permutation w = P(text);
    const auto filtered = build_interval(w);
    const auto grown = build_interval(w, {.rank_bound = 12, .filter_degree_limit = 0});
    CHECK(filtered.elements == grown.elements);
    CHECK(filtered.covers == grown.covers);
  }
  // Degree 10 with a short top element goes through the upward search.
  const Permutation w = P("2,1,4,3,6,5,8,7,10,9");
  const auto iv = build_interval(w);
  CHECK(iv.elements.size() == 32);
  CHECK(is_boolean_lattice(iv));
}

TEST_CASE("Boolean lattice recognition matches 321/3412 avoidance") {
  const std::vector<Permutation> pats{P("321"), P("3412")};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const bool lattice = is_boolean_lattice(build_interval(w, {.rank_bound = 15}));
      if (lattice != avoids_all(w, pats)) FAIL_CHECK(to_string(w));
    }
  }
}
