#pragma once

// The 21-pattern catalog and the four interchangeable sphericality tests:
//
//   pattern           w avoids every pattern in the catalog
//   boolean_quotient  w_0(J(w)) * w is Boolean (has a repetition-free reduced word)
//   divisibility      the pair (w_0(J(w)), w) is not divisible
//   definition        some reduced word of w meets the per-generator budget
//
// All four are the same predicate; cross_check() verifies that on S_n.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spherical/divisibility.hpp"
#include "spherical/permutation.hpp"
#include "spherical/reduced_words.hpp"

namespace spherical {

struct PatternCatalog {
  std::vector<Permutation> all;      // 21 patterns
  std::vector<Permutation> sub321;   // 11 patterns
  std::vector<Permutation> sub3412;  // 12 patterns

  bool in_all(const Permutation& p) const;
  bool in_sub321(const Permutation& p) const;
  bool in_sub3412(const Permutation& p) const;
};

/// The catalog, validated against verify_catalog_characterizations() on
/// first use. Throws std::logic_error if the literal data fails the check.
const PatternCatalog& catalog();

/// Positional characterization of the 321 half over S_5.
bool satisfies_321_condition(const Permutation& p);
/// Positional characterization of the 3412 half over S_5.
bool satisfies_3412_condition(const Permutation& p);

/// Checks the literal catalog against both positional conditions over all of
/// S_5 and against the quotient-containment description.
bool verify_catalog_characterizations();

enum class Backend { pattern, boolean_quotient, divisibility, definition };

inline constexpr std::array<Backend, 4> kAllBackends{
    Backend::pattern, Backend::boolean_quotient, Backend::divisibility, Backend::definition};
inline constexpr std::array<Backend, 3> kFastBackends{
    Backend::pattern, Backend::boolean_quotient, Backend::divisibility};

/// CLI spellings: pattern, boolean, divisible, definition.
std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// w_0(J(w)) * w.
Permutation boolean_quotient(const Permutation& w);

bool is_spherical(const Permutation& w, Backend backend = Backend::pattern);

/// First catalog occurrence in w (catalog order, then position order).
std::optional<PatternOccurrence> find_catalog_occurrence(const Permutation& w);

struct Verdict {
  Backend backend;
  bool spherical;
  /// Human-readable certificate: a pattern occurrence, a divisibility
  /// witness, or a reduced word.
  std::string witness;
};

Verdict classify(const Permutation& w, Backend backend);

struct ExhaustiveOptions {
  int bound_fast = 7;        // pattern / boolean_quotient / divisibility
  int bound_definition = 6;  // whenever the definition backend is enabled
  int bound_density = 8;     // density_table
  bool force = false;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::size_t max_reported = 20;
};

/// Thrown when a degree exceeds the configured exhaustive bound without force.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Disagreement {
  Permutation w;
  std::vector<Verdict> verdicts;
};

struct CrossCheckReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t spherical = 0;  // by the first enabled backend
  std::vector<Backend> backends;
  std::uint64_t disagreement_count = 0;
  std::vector<Disagreement> disagreements;  // first max_reported, lexicographic
};

CrossCheckReport cross_check(int n, std::vector<Backend> backends,
                             const ExhaustiveOptions& options = {});

std::uint64_t count_spherical(int n, Backend backend, const ExhaustiveOptions& options = {});

struct DensityRow {
  int n;
  std::uint64_t spherical;
  std::uint64_t total;
  double ratio;
};

std::vector<DensityRow> density_table(int max_n, Backend backend = Backend::pattern,
                                      const ExhaustiveOptions& options = {});

/// Worker count after resolving 0 to the machine's parallelism.
unsigned resolve_jobs(unsigned jobs);

}  // namespace spherical
