#include "spherical/spherical.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "spherical/text.hpp"

namespace spherical {

namespace {

constexpr std::array<std::string_view, 21> kPatterns{
    "24531", "25314", "25341", "34512", "34521", "35412", "35421",
    "42531", "45123", "45213", "45231", "45312", "52314", "52341",
    "53124", "53142", "53412", "53421", "54123", "54213", "54231"};

constexpr std::array<std::string_view, 11> kPatterns321{
    "24531", "25314", "25341", "42531", "45231", "45312",
    "52314", "52341", "53124", "53142", "53412"};

constexpr std::array<std::string_view, 12> kPatterns3412{
    "34512", "34521", "35412", "35421", "45123", "45213",
    "45231", "53412", "53421", "54123", "54213", "54231"};

template <std::size_t N>
std::vector<Permutation> parse_all(const std::array<std::string_view, N>& texts) {
  std::vector<Permutation> out;
  out.reserve(N);
  for (auto t : texts) out.push_back(parse_permutation(t));
  return out;
}

const PatternCatalog& raw_catalog() {
  static const PatternCatalog c{parse_all(kPatterns), parse_all(kPatterns321),
                                parse_all(kPatterns3412)};
  return c;
}

bool member(const std::vector<Permutation>& set, const Permutation& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

// v lies strictly outside the closed interval spanned by x and y.
bool outside(int v, int x, int y) { return v < std::min(x, y) || v > std::max(x, y); }

bool check_catalog(const PatternCatalog& c) {
  if (c.all.size() != 21 || c.sub321.size() != 11 || c.sub3412.size() != 12) return false;

  std::vector<Permutation> both;
  for (const auto& p : c.sub321) {
    if (member(c.sub3412, p)) both.push_back(p);
  }
  if (both != std::vector<Permutation>{parse_permutation("45231"), parse_permutation("53412")}) {
    return false;
  }
  for (const auto& p : c.all) {
    if (!member(c.sub321, p) && !member(c.sub3412, p)) return false;
  }
  for (const auto& p : c.sub321) {
    if (!member(c.all, p)) return false;
  }
  for (const auto& p : c.sub3412) {
    if (!member(c.all, p)) return false;
  }

  const Permutation p321 = parse_permutation("321");
  const Permutation p3412 = parse_permutation("3412");
  for (const auto& p : all_permutations(5)) {
    if (satisfies_321_condition(p) != member(c.sub321, p)) return false;
    if (satisfies_3412_condition(p) != member(c.sub3412, p)) return false;
  }
  for (const auto& p : c.all) {
    const Permutation q = boolean_quotient(p);
    if (contains_pattern(q, p321) != member(c.sub321, p)) return false;
    if (contains_pattern(q, p3412) != member(c.sub3412, p)) return false;
  }
  return true;
}

// Visits all of S_n in lexicographic order, split into n chunks by first
// value. Workers pull chunks from a shared counter; per-chunk results are
// merged in chunk order so output never depends on scheduling.
template <typename Acc, typename Visit, typename Merge>
Acc partitioned_scan(int n, unsigned jobs, Visit visit, Merge merge) {
  std::vector<Acc> partial(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int chunk = next++; chunk < n; chunk = next++) {
      std::vector<int> line(static_cast<std::size_t>(n));
      line[0] = chunk + 1;
      int fill = 1;
      for (int v = 1; v <= n; ++v) {
        if (v != chunk + 1) line[static_cast<std::size_t>(fill++)] = v;
      }
      Acc& acc = partial[static_cast<std::size_t>(chunk)];
      do {
        visit(acc, Permutation(line));
      } while (std::next_permutation(line.begin() + 1, line.end()));
    }
  };
  const unsigned workers = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(n));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  Acc total{};
  for (auto& p : partial) merge(total, std::move(p));
  return total;
}

void check_bound(int n, int bound, bool force, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": degree must be >= 1");
  if (n > bound && !force) {
    throw BoundExceeded(std::string(what) + ": degree " + std::to_string(n) +
                        " exceeds exhaustive bound " + std::to_string(bound) +
                        " (override with force)");
  }
}

}  // namespace

bool PatternCatalog::in_all(const Permutation& p) const { return member(all, p); }
bool PatternCatalog::in_sub321(const Permutation& p) const { return member(sub321, p); }
bool PatternCatalog::in_sub3412(const Permutation& p) const { return member(sub3412, p); }

const PatternCatalog& catalog() {
  static const PatternCatalog& c = []() -> const PatternCatalog& {
    if (!check_catalog(raw_catalog())) {
      throw std::logic_error("pattern catalog failed its characterization checksum");
    }
    return raw_catalog();
  }();
  return c;
}

bool satisfies_321_condition(const Permutation& p) {
  if (p.degree() != 5) return false;
  const Permutation inv = p.inverse();
  return inv(5) < inv(3) && inv(3) < inv(1) && outside(inv(4), inv(5), inv(3)) &&
         outside(inv(2), inv(3), inv(1));
}

bool satisfies_3412_condition(const Permutation& p) {
  if (p.degree() != 5) return false;
  const Permutation inv = p.inverse();
  return std::max(inv(4), inv(5)) < std::min(inv(1), inv(2)) &&
         outside(inv(3), inv(4), inv(2));
}

bool verify_catalog_characterizations() { return check_catalog(raw_catalog()); }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::pattern: return "pattern";
    case Backend::boolean_quotient: return "boolean";
    case Backend::divisibility: return "divisible";
    case Backend::definition: return "definition";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (Backend b : kAllBackends) {
    if (backend_name(b) == name) return b;
  }
  if (name == "boolean_quotient") return Backend::boolean_quotient;
  if (name == "divisibility") return Backend::divisibility;
  return std::nullopt;
}

Permutation boolean_quotient(const Permutation& w) {
  return compose(longest_parabolic(left_descents(w)), w);
}

std::optional<PatternOccurrence> find_catalog_occurrence(const Permutation& w) {
  if (w.degree() < 5) return std::nullopt;
  for (const auto& p : catalog().all) {
    if (auto occ = find_pattern(w, p)) return occ;
  }
  return std::nullopt;
}

bool is_spherical(const Permutation& w, Backend backend) {
  switch (backend) {
    case Backend::pattern:
      return avoids_all(w, catalog().all);
    case Backend::boolean_quotient:
      return is_boolean_by_words(boolean_quotient(w));
    case Backend::divisibility:
      return !is_divisible(longest_parabolic(left_descents(w)), w).has_value();
    case Backend::definition:
      return is_spherical_by_definition(w);
  }
  return false;
}

Verdict classify(const Permutation& w, Backend backend) {
  switch (backend) {
    case Backend::pattern: {
      if (auto occ = find_catalog_occurrence(w)) return {backend, false, to_string(*occ)};
      return {backend, true, "avoids all 21 patterns"};
    }
    case Backend::boolean_quotient: {
      const Permutation q = boolean_quotient(w);
      const std::string head = "quotient " + to_string(q);
      if (auto word = repetition_free_word(q)) {
        return {backend, true, head + " word " + to_string(*word)};
      }
      for (const char* bad : {"321", "3412"}) {
        if (q.degree() < 3) break;
        const Permutation p = parse_permutation(bad);
        if (p.degree() > q.degree()) continue;
        if (auto occ = find_pattern(q, p)) {
          return {backend, false, head + " contains " + to_string(*occ)};
        }
      }
      return {backend, false, head + " has no repetition-free word"};
    }
    case Backend::divisibility: {
      const auto witness = is_divisible(longest_parabolic(left_descents(w)), w);
      return {backend, !witness.has_value(), to_string(witness)};
    }
    case Backend::definition: {
      if (auto word = spherical_word(w)) return {backend, true, to_string(*word)};
      return {backend, false, "no reduced word within budget"};
    }
  }
  return {backend, false, ""};
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

CrossCheckReport cross_check(int n, std::vector<Backend> backends,
                             const ExhaustiveOptions& options) {
  if (backends.empty()) throw std::invalid_argument("cross_check: no backends enabled");
  const bool slow = std::find(backends.begin(), backends.end(), Backend::definition) !=
                    backends.end();
  check_bound(n, slow ? options.bound_definition : options.bound_fast, options.force,
              "cross_check");
  catalog();

  struct Acc {
    std::uint64_t total = 0;
    std::uint64_t spherical = 0;
    std::uint64_t disagreements = 0;
    std::vector<Disagreement> kept;
  };
  const std::size_t keep = options.max_reported;

  Acc acc = partitioned_scan<Acc>(
      n, options.jobs,
      [&](Acc& a, const Permutation& w) {
        ++a.total;
        std::vector<bool> results;
        results.reserve(backends.size());
        for (Backend b : backends) results.push_back(is_spherical(w, b));
        if (results.front()) ++a.spherical;
        const bool agree = std::all_of(results.begin(), results.end(),
                                       [&](bool r) { return r == results.front(); });
        if (agree) return;
        ++a.disagreements;
        if (a.kept.size() < keep) {
          Disagreement d{w, {}};
          for (Backend b : backends) d.verdicts.push_back(classify(w, b));
          a.kept.push_back(std::move(d));
        }
      },
      [&](Acc& total, Acc&& part) {
        total.total += part.total;
        total.spherical += part.spherical;
        total.disagreements += part.disagreements;
        for (auto& d : part.kept) {
          if (total.kept.size() < keep) total.kept.push_back(std::move(d));
        }
      });

  CrossCheckReport report;
  report.n = n;
  report.total = acc.total;
  report.spherical = acc.spherical;
  report.backends = std::move(backends);
  report.disagreement_count = acc.disagreements;
  report.disagreements = std::move(acc.kept);
  std::sort(report.disagreements.begin(), report.disagreements.end(),
            [](const Disagreement& a, const Disagreement& b) { return a.w < b.w; });
  return report;
}

std::uint64_t count_spherical(int n, Backend backend, const ExhaustiveOptions& options) {
  check_bound(n, backend == Backend::definition ? options.bound_definition : options.bound_density,
              options.force, "count_spherical");
  catalog();
  return partitioned_scan<std::uint64_t>(
      n, options.jobs,
      [&](std::uint64_t& count, const Permutation& w) {
        if (is_spherical(w, backend)) ++count;
      },
      [](std::uint64_t& total, std::uint64_t part) { total += part; });
}

std::vector<DensityRow> density_table(int max_n, Backend backend,
                                      const ExhaustiveOptions& options) {
  check_bound(max_n, options.bound_density, options.force, "density_table");
  std::vector<DensityRow> rows;
  ExhaustiveOptions inner = options;
  inner.force = true;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t count = count_spherical(n, backend, inner);
    const std::uint64_t total = factorial(n);
    rows.push_back({n, count, total, static_cast<double>(count) / static_cast<double>(total)});
  }
  return rows;
}

}  // namespace spherical
