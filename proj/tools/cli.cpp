#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spherical/bruhat.hpp"
#include "spherical/divisibility.hpp"
#include "spherical/reduced_words.hpp"
#include "spherical/spherical.hpp"
#include "spherical/text.hpp"

namespace spherical::cli {

namespace {

using json = nlohmann::json;

// Verb-level failure that maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected json, csv or table)");
}

Permutation parse_perm_arg(const std::string& text) {
  try {
    return parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Backend> parse_backend_list(const std::string& text) {
  std::vector<Backend> out;
  if (text == "all") return {kAllBackends.begin(), kAllBackends.end()};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = parse_backend(item);
    if (!b) throw UsageError("unknown backend '" + item + "'");
    if (std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(*b);
  }
  if (out.empty()) throw UsageError("no backends given");
  return out;
}

std::string backend_list_text(const std::vector<Backend>& bs) {
  std::string s;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (i != 0) s += ",";
    s += backend_name(bs[i]);
  }
  return s;
}

/// Shortest round-trip decimal, always with a fractional part ("1.0", "0.825").
std::string format_ratio(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void print_estimate(std::ostream& err, int n, std::size_t backends, bool slow) {
  const double evaluations = static_cast<double>(factorial(n)) * static_cast<double>(backends);
  const double seconds = evaluations * (slow ? 2e-5 : 2e-6);
  err << "estimate: " << factorial(n) << " permutations x " << backends
      << " backend(s), roughly " << std::fixed << std::setprecision(1) << seconds
      << " s single-threaded\n";
  err.unsetf(std::ios::floatfield);
}

struct Options {
  unsigned jobs = 0;

  std::string classify_perm;
  std::string classify_backend = "pattern";
  bool classify_explain = false;
  std::string classify_format = "table";

  int cross_n = 0;
  std::string cross_backends;
  bool cross_force = false;
  std::string cross_format = "table";

  int count_max_n = 0;
  std::string count_format = "table";
  std::string count_backend = "pattern";
  bool count_force = false;

  std::string patterns_subset = "all";
  bool patterns_verify = false;
  std::string patterns_format = "table";

  std::string words_perm;
  std::size_t words_limit = 0;

  std::string bruhat_v;
  std::string bruhat_w;
  bool bruhat_explain = false;

  std::string interval_perm;
  bool interval_edges = false;
  int interval_rank_bound = 12;
  std::string interval_format = "table";
};

int cmd_classify(const Options& o, std::ostream& out) {
  const Permutation w = parse_perm_arg(o.classify_perm);
  const std::vector<Backend> backends = parse_backend_list(o.classify_backend);
  const Format fmt = parse_format(o.classify_format);

  std::vector<Verdict> verdicts;
  for (Backend b : backends) verdicts.push_back(classify(w, b));
  const bool spherical = verdicts.front().spherical;
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                                 [&](const Verdict& v) { return v.spherical == spherical; });

  if (fmt == Format::json) {
    json j{{"permutation", to_string(w)}, {"spherical", spherical}, {"agree", agree}};
    j["verdicts"] = json::array();
    for (const auto& v : verdicts) {
      j["verdicts"].push_back(
          {{"backend", backend_name(v.backend)}, {"spherical", v.spherical}, {"witness", v.witness}});
    }
    out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    out << "permutation,backend,spherical,witness\n";
    for (const auto& v : verdicts) {
      out << to_string(w) << "," << backend_name(v.backend) << ","
          << (v.spherical ? "true" : "false") << ",\"" << v.witness << "\"\n";
    }
  } else {
    out << to_string(w) << ": " << (spherical ? "spherical" : "not spherical") << "\n";
    if (backends.size() > 1) {
      out << (agree ? "all backends agree: " : "backends DISAGREE: ") << backend_list_text(backends)
          << "\n";
    }
    for (const auto& v : verdicts) {
      if (o.classify_explain || !agree) {
        out << "  " << backend_name(v.backend) << ": "
            << (v.spherical ? "spherical" : "not spherical") << " -- " << v.witness << "\n";
      }
    }
  }
  if (!agree) return 1;
  return spherical ? 0 : 1;
}

int cmd_crosscheck(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.cross_n < 1) throw UsageError("--n must be >= 1");
  const Format fmt = parse_format(o.cross_format);
  std::vector<Backend> backends;
  if (o.cross_backends.empty()) {
    backends = o.cross_n <= 6 ? std::vector<Backend>(kAllBackends.begin(), kAllBackends.end())
                              : std::vector<Backend>(kFastBackends.begin(), kFastBackends.end());
  } else {
    backends = parse_backend_list(o.cross_backends);
  }
  if (backends.size() < 2) throw UsageError("crosscheck needs at least two backends");

  ExhaustiveOptions opts;
  opts.force = o.cross_force;
  opts.jobs = o.jobs;
  const bool slow =
      std::find(backends.begin(), backends.end(), Backend::definition) != backends.end();
  const int bound = slow ? opts.bound_definition : opts.bound_fast;
  if (o.cross_n > bound) {
    if (!o.cross_force) {
      throw UsageError("degree " + std::to_string(o.cross_n) + " exceeds bound " +
                       std::to_string(bound) + " for backends " + backend_list_text(backends) +
                       "; pass --force to run anyway");
    }
    print_estimate(err, o.cross_n, backends.size(), slow);
  }

  const CrossCheckReport r = cross_check(o.cross_n, backends, opts);

  if (fmt == Format::json) {
    json j{{"n", r.n},
           {"total", r.total},
           {"spherical", r.spherical},
           {"backends", json::array()},
           {"disagreement_count", r.disagreement_count},
           {"disagreements", json::array()}};
    for (Backend b : r.backends) j["backends"].push_back(backend_name(b));
    for (const auto& d : r.disagreements) {
      json entry{{"permutation", to_string(d.w)}, {"verdicts", json::array()}};
      for (const auto& v : d.verdicts) {
        entry["verdicts"].push_back({{"backend", backend_name(v.backend)},
                                     {"spherical", v.spherical},
                                     {"witness", v.witness}});
      }
      j["disagreements"].push_back(std::move(entry));
    }
    out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    out << "n,total,spherical,backends,disagreements\n";
    out << r.n << "," << r.total << "," << r.spherical << ",\"" << backend_list_text(r.backends)
        << "\"," << r.disagreement_count << "\n";
  } else {
    out << r.total << (r.total == 1 ? " permutation, " : " permutations, ") << r.spherical
        << " spherical, " << r.disagreement_count
        << (r.disagreement_count == 1 ? " disagreement" : " disagreements") << "\n";
    out << "backends: " << backend_list_text(r.backends) << "\n";
    for (const auto& d : r.disagreements) {
      out << "  " << to_string(d.w) << ":";
      for (const auto& v : d.verdicts) {
        out << " " << backend_name(v.backend) << "=" << (v.spherical ? "yes" : "no") << " ("
            << v.witness << ")";
      }
      out << "\n";
    }
  }
  return r.disagreement_count == 0 ? 0 : 1;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.count_max_n < 1) throw UsageError("--max-n must be >= 1");
  const Format fmt = parse_format(o.count_format);
  const auto backend = parse_backend(o.count_backend);
  if (!backend) throw UsageError("unknown backend '" + o.count_backend + "'");

  ExhaustiveOptions opts;
  opts.force = o.count_force;
  opts.jobs = o.jobs;
  if (o.count_max_n > opts.bound_density) {
    if (!o.count_force) {
      throw UsageError("--max-n " + std::to_string(o.count_max_n) + " exceeds bound " +
                       std::to_string(opts.bound_density) + "; pass --force to run anyway");
    }
    print_estimate(err, o.count_max_n, 1, *backend == Backend::definition);
  }
  const auto rows = density_table(o.count_max_n, *backend, opts);

  if (fmt == Format::json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n}, {"spherical", r.spherical}, {"total", r.total}, {"ratio", r.ratio}});
    }
    out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    for (const auto& r : rows) {
      out << r.n << "," << r.spherical << "," << r.total << "," << format_ratio(r.ratio) << "\n";
    }
  } else {
    out << std::setw(3) << "n" << std::setw(12) << "spherical" << std::setw(12) << "n!"
        << "  ratio\n";
    for (const auto& r : rows) {
      out << std::setw(3) << r.n << std::setw(12) << r.spherical << std::setw(12) << r.total
          << "  " << format_ratio(r.ratio) << "\n";
    }
  }
  return 0;
}

int cmd_patterns(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.patterns_format);
  if (o.patterns_verify) {
    const bool ok = verify_catalog_characterizations();
    if (fmt == Format::json) {
      out << json{{"catalog_characterizations", ok}}.dump() << "\n";
    } else {
      out << "catalog characterizations: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
  }

  const auto& c = catalog();
  std::vector<Permutation> listed;
  if (o.patterns_subset == "all") {
    listed = c.all;
  } else if (o.patterns_subset == "321") {
    listed = c.sub321;
  } else if (o.patterns_subset == "3412") {
    listed = c.sub3412;
  } else if (o.patterns_subset == "both") {
    for (const auto& p : c.sub321) {
      if (c.in_sub3412(p)) listed.push_back(p);
    }
  } else {
    throw UsageError("unknown subset '" + o.patterns_subset + "' (expected all, 321, 3412, both)");
  }

  auto tags = [&](const Permutation& p) {
    std::vector<std::string> t;
    if (c.in_sub321(p)) t.emplace_back("321");
    if (c.in_sub3412(p)) t.emplace_back("3412");
    return t;
  };

  if (fmt == Format::json) {
    json j = json::array();
    for (const auto& p : listed) j.push_back({{"pattern", to_string(p)}, {"subsets", tags(p)}});
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : listed) {
      out << to_string(p);
      for (const auto& t : tags(p)) out << (fmt == Format::csv ? "," : "  ") << t;
      out << "\n";
    }
  }
  return 0;
}

int cmd_reduced_words(const Options& o, std::ostream& out) {
  const Permutation w = parse_perm_arg(o.words_perm);
  std::optional<std::size_t> limit;
  if (o.words_limit > 0) limit = o.words_limit;
  std::vector<ReducedWord> words;
  try {
    words = enumerate_reduced_words(w, limit);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  for (const auto& word : words) out << to_string(word) << "\n";
  return 0;
}

int cmd_bruhat(const Options& o, std::ostream& out) {
  const Permutation v = parse_perm_arg(o.bruhat_v);
  const Permutation w = parse_perm_arg(o.bruhat_w);
  if (v.degree() != w.degree()) throw UsageError("permutations have different degrees");
  const auto violation = first_bruhat_violation(v, w);
  out << (violation ? "false" : "true") << "\n";
  if (o.bruhat_explain && violation) {
    const int i = *violation;
    out << "first failing prefix: " << i << " (" << to_string(value_window(v, 1, i))
        << " not dominated by " << to_string(value_window(w, 1, i)) << ")\n";
  }
  return 0;
}

int cmd_interval(const Options& o, std::ostream& out) {
  const Permutation w = parse_perm_arg(o.interval_perm);
  const Format fmt = parse_format(o.interval_format);
  BruhatInterval iv{w, {}, {}};
  try {
    iv = build_interval(w, {.rank_bound = o.interval_rank_bound});
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  const bool boolean = is_boolean_lattice(iv);

  if (fmt == Format::json) {
    json j{{"top", to_string(w)},
           {"elements", json::array()},
           {"boolean", boolean},
           {"covers", json::array()}};
    for (const auto& u : iv.elements) j["elements"].push_back(to_string(u));
    for (const auto& [u, up] : iv.covers) j["covers"].push_back({to_string(u), to_string(up)});
    out << j.dump(2) << "\n";
    return 0;
  }
  out << iv.elements.size() << (iv.elements.size() == 1 ? " element" : " elements")
      << ", boolean: " << (boolean ? "true" : "false") << "\n";
  if (o.interval_edges) {
    out << "elements:";
    for (const auto& u : iv.elements) out << " " << to_string(u);
    out << "\n";
    for (const auto& [u, up] : iv.covers) out << to_string(u) << " < " << to_string(up) << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical permutations: classification, cross-checks and tables", "spherical"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for exhaustive runs (0: all cores)")
      ->envname("SPHERICAL_JOBS");

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether a permutation is spherical");
  classify_cmd->add_option("perm", o.classify_perm, "Permutation in one-line notation")->required();
  classify_cmd->add_option("--backend", o.classify_backend,
                           "pattern|boolean|divisible|definition|all");
  classify_cmd->add_flag("--explain", o.classify_explain, "Print the certificate");
  classify_cmd->add_option("--format", o.classify_format, "json|csv|table");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare backends on all of S_n");
  cross_cmd->add_option("--n", o.cross_n, "Degree")->required();
  cross_cmd->add_option("--backends", o.cross_backends, "Comma-separated backends");
  cross_cmd->add_flag("--force", o.cross_force, "Run past the degree bound");
  cross_cmd->add_option("--format", o.cross_format, "json|csv|table");

  auto* count_cmd = app.add_subcommand("count", "Spherical counts and densities for n = 1..max");
  count_cmd->add_option("--max-n", o.count_max_n, "Largest degree")->required();
  count_cmd->add_option("--format", o.count_format, "json|csv|table");
  count_cmd->add_option("--backend", o.count_backend, "Classifier used for counting");
  count_cmd->add_flag("--force", o.count_force, "Run past the degree bound");

  auto* patterns_cmd = app.add_subcommand("patterns", "List the 21 patterns");
  patterns_cmd->add_option("--subset", o.patterns_subset, "all|321|3412|both");
  patterns_cmd->add_flag("--verify", o.patterns_verify, "Check the catalog characterizations");
  patterns_cmd->add_option("--format", o.patterns_format, "json|csv|table");

  auto* words_cmd = app.add_subcommand("reduced-words", "List reduced words");
  words_cmd->add_option("perm", o.words_perm, "Permutation")->required();
  words_cmd->add_option("--limit", o.words_limit, "Stop after this many words");

  auto* bruhat_cmd = app.add_subcommand("bruhat", "Compare two permutations in Bruhat order");
  bruhat_cmd->add_option("v", o.bruhat_v, "Lower permutation")->required();
  bruhat_cmd->add_option("w", o.bruhat_w, "Upper permutation")->required();
  bruhat_cmd->add_flag("--explain", o.bruhat_explain, "Print the first failing prefix");

  auto* interval_cmd = app.add_subcommand("interval", "Build the Bruhat interval [e, w]");
  interval_cmd->add_option("perm", o.interval_perm, "Permutation")->required();
  interval_cmd->add_flag("--edges", o.interval_edges, "Print elements and cover edges");
  interval_cmd->add_option("--rank-bound", o.interval_rank_bound, "Largest allowed length(w)");
  interval_cmd->add_option("--format", o.interval_format, "json|csv|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*classify_cmd) {
      status = cmd_classify(o, buffer);
    } else if (*cross_cmd) {
      status = cmd_crosscheck(o, buffer, err);
    } else if (*count_cmd) {
      status = cmd_count(o, buffer, err);
    } else if (*patterns_cmd) {
      status = cmd_patterns(o, buffer);
    } else if (*words_cmd) {
      status = cmd_reduced_words(o, buffer);
    } else if (*bruhat_cmd) {
      status = cmd_bruhat(o, buffer);
    } else if (*interval_cmd) {
      status = cmd_interval(o, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << buffer.str();
  return status;
}

}  // namespace spherical::cli
