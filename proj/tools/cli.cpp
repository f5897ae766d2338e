#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstirling/coinv.hpp"
#include "qstirling/combinat.hpp"
#include "qstirling/conject.hpp"
#include "qstirling/involution.hpp"
#include "qstirling/lattice.hpp"
#include "qstirling/qseries.hpp"
#include "qstirling/stirling.hpp"
#include "qstirling/symid.hpp"

namespace qstirling::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for bad flag combinations the parser cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxListedFailures = 25;

const std::map<std::string, Kind>& kind_flags() {
  static const std::map<std::string, Kind> m{{"S", Kind::S_A}, {"c", Kind::c_A}, {"SB", Kind::S_B}, {"cB", Kind::c_B}};
  return m;
}

// --- table ---

struct TableRow {
  int k;
  QPoly poly;
};

std::string table_label(const std::string& kind) {
  if (kind == "S") return "S";
  if (kind == "c") return "c";
  if (kind == "SB") return "S_B";
  if (kind == "cB") return "c_B";
  if (kind == "So") return "S^o";
  if (kind == "SBo") return "S_B^o";
  return "Sbar";
}

QPoly table_entry(const std::string& kind, int n, int k) {
  if (kind == "So") return ordered(OrderedKind::S_A, n, k);
  if (kind == "SBo") return ordered(OrderedKind::S_B, n, k);
  if (kind == "sbar") return barred(n, k);
  return stirling(kind_flags().at(kind), n, k);
}

int cmd_table(const std::string& kind, int n, std::optional<int> k, const std::string& format, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (k && (*k < 0 || *k > n)) throw UsageError("--k must lie in 0..n");
  std::vector<TableRow> rows;
  for (int j = k.value_or(0); j <= k.value_or(n); ++j) rows.push_back({j, table_entry(kind, n, j)});

  const std::string label = table_label(kind);
  if (format == "json") {
    json entries = json::array();
    for (const auto& r : rows) entries.push_back({{"k", r.k}, {"poly", json::parse(to_json(r.poly))}});
    out << json{{"kind", kind}, {"n", n}, {"entries", entries}}.dump() << "\n";
  } else if (format == "csv") {
    out << "n,k,j,coeff\n";
    for (const auto& r : rows) {
      const auto& c = r.poly.coeffs();
      for (std::size_t j = 0; j < c.size(); ++j) out << n << "," << r.k << "," << j << "," << c[j].get_str() << "\n";
    }
  } else {
    std::string at_one;
    for (const auto& r : rows) {
      out << label << "[" << n << "," << r.k << "] = " << to_text(r.poly) << "\n";
      at_one += (at_one.empty() ? "" : ", ") + r.poly.at_one().get_str();
    }
    out << "q=1: " << at_one << "\n";
  }
  return 0;
}

// --- enumerate ---

template <class Objects, class StatFn>
void list_objects(const Objects& objects, std::optional<std::string> stat, StatFn stat_of, std::ostream& out) {
  for (const auto& obj : objects) {
    out << to_text(obj);
    if (stat) out << "\t" << *stat << "=" << stat_of(obj);
    out << "\n";
  }
  out << "count: " << objects.size() << "\n";
}

int cmd_enumerate(const std::string& object, int n, std::optional<int> k, std::optional<std::string> stat, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (k && (*k < 0 || *k > n)) throw UsageError("--k must lie in 0..n");
  if (stat == "maj" && object != "sp") throw UsageError("maj is only defined for signed partitions (--object sp)");
  const bool use_maj = stat == "maj";

  Family family = Family::signed_partition;
  if (object == "sp") {
    const auto objs = k ? enumerate_signed_partitions(n, *k) : enumerate_signed_partitions(n);
    list_objects(objs, stat, [&](const SignedPartition& r) { return use_maj ? maj(r) : inv(r); }, out);
  } else if (object == "perm") {
    family = Family::signed_permutation;
    const auto objs = k ? enumerate_signed_permutations(n, *k) : enumerate_signed_permutations(n);
    list_objects(objs, stat, [](const SignedPermutation& p) { return inv(p); }, out);
  } else {
    const Flavor flavor = object == "ordA" ? Flavor::typeA : Flavor::typeB;
    family = object == "ordA" ? Family::ordered_A : Family::ordered_B;
    const auto objs = k ? enumerate_ordered(flavor, n, *k) : enumerate_ordered(flavor, n);
    list_objects(objs, stat, [](const OrderedPartition& o) { return inv(o); }, out);
  }
  if (stat && k) out << "gf: " << to_text(statistic_gf(family, n, *k, use_maj ? Stat::maj : Stat::inv)) << "\n";
  return 0;
}

// --- verify ---

int bound(std::optional<int> given, int fallback) {
  const int v = given.value_or(fallback);
  if (v < 0) throw std::invalid_argument("bounds must be nonnegative");
  return v;
}

using SuiteFn = std::function<Report(std::optional<int>, std::optional<int>)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"recursions", [](auto n, auto) { return verify_recursions(bound(n, 12)); }},
      {"symmetric", [](auto n, auto) { return verify_symmetric_expressions(bound(n, 12)); }},
      {"tn-expansion",
       [](auto n, auto) {
         Report r{"tn-expansion"};
         const int top = bound(n, 10);
         for (int j = 0; j <= std::min(top, 5); ++j) r.absorb(verify_tn_expansion(j, TnVariant::generic));
         for (int j = 0; j <= top; ++j) {
           r.absorb(verify_tn_expansion(j, TnVariant::typeA_q));
           r.absorb(verify_tn_expansion(j, TnVariant::typeB_q));
         }
         return r;
       }},
      {"inverse", [](auto n, auto m) { return verify_inverse_matrices(bound(n, 12), bound(m, 8)); }},
      {"ogf", [](auto n, auto) { return verify_generating_functions(bound(n, 8)); }},
      {"egf", [](auto n, auto) { return egf_verify_all(bound(n, 10)); }},
      {"qegf", [](auto n, auto) { return qegf_identity_suite(bound(n, 10)); }},
      {"involution",
       [](auto n, auto) {
         Report r{"involution"};
         const int top = bound(n, 7);
         for (int j = 0; j <= top; ++j) r.absorb(verify_involution(Flavor::typeA, j));
         for (int j = 0; j <= std::min(top, 5); ++j) r.absorb(verify_involution(Flavor::typeB, j));
         return r;
       }},
      {"divisibility", [](auto n, auto m) { return verify_divisibility(bound(n, 8), bound(m, 4)); }},
      {"lattice", [](auto n, auto) { return verify_lattice(bound(n, 4)); }},
      {"hilbert",
       [](auto n, auto) {
         const int top = bound(n, 8);
         return verify_hilbert(top, std::min(top, 6));
       }},
      {"bijection",
       [](auto n, auto) {
         const int top = bound(n, 7);
         return verify_bijection(top, std::min(top, 5));
       }},
      {"statistics",
       [](auto n, auto m) {
         Report r{"statistics"};
         r.absorb(verify_statistics(bound(n, 6), bound(n, 7), std::min(bound(n, 5), 5)));
         r.absorb(verify_type_b_functions(std::min(bound(n, 4), 5), bound(m, 3)));
         return r;
       }},
  };
  return table;
}

void print_report(const Report& report, std::ostream& out) {
  out << report.summary() << "\n";
  const std::size_t shown = std::min(report.failures.size(), kMaxListedFailures);
  for (std::size_t i = 0; i < shown; ++i) out << "  " << report.failures[i] << "\n";
  if (shown < report.failures.size()) out << "  ... " << report.failures.size() - shown << " more\n";
}

int cmd_verify(const std::string& suite, std::optional<int> max_n, std::optional<int> m, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  bool ok = true;
  for (const auto& name : names) {
    const Report report = run_suite(name, max_n, m);
    print_report(report, out);
    ok = ok && report.passed();
  }
  return ok ? 0 : 1;
}

// --- conjecture ---

std::vector<Kind> default_families(const std::string& which) {
  if (which == "logconcave") return {Kind::S_A, Kind::c_A};
  if (which == "parity" || which == "strongqlc") return {Kind::S_B, Kind::c_B};
  return {Kind::S_A, Kind::c_A, Kind::S_B, Kind::c_B};
}

SeqProperty property_for(const std::string& which) {
  if (which == "logconcave") return SeqProperty::log_concave;
  if (which == "parity") return SeqProperty::parity_log_concave;
  if (which == "unimodal") return SeqProperty::unimodal;
  if (which == "bottomheavy") return SeqProperty::bottom_heavy;
  return SeqProperty::bottom_interlacing;
}

std::string join_coeffs(const std::vector<BigInt>& c) {
  std::string s;
  for (const auto& v : c) s += (s.empty() ? "" : ", ") + v.get_str();
  return s;
}

int cmd_conjecture(const std::string& which, int max_n, int max_k, const std::vector<std::string>& family_flags, const std::string& format,
                   std::ostream& out) {
  if (max_n < 0 || max_k < 0) throw UsageError("--max-n and --max-k must be nonnegative");
  std::vector<Kind> families;
  for (const auto& f : family_flags) families.push_back(kind_flags().at(f));
  if (families.empty()) families = default_families(which);

  if (which == "strongqlc") {
    bool ok = true;
    json failing = json::array();
    for (Kind fam : families) {
      if (fam != Kind::S_B && fam != Kind::c_B) throw UsageError("strongqlc applies to SB and cB only");
      Report r{"strong_q_log_concave " + std::string(kind_name(fam))};
      for (int n = 0; n <= max_n; ++n) r.absorb(strong_qlc_check(fam, n));
      ok = ok && r.passed();
      if (format == "text") print_report(r, out);
      else if (!r.passed()) failing.push_back({{"family", kind_name(fam)}, {"property", "strong_q_log_concave"}, {"failures", r.failures}});
    }
    if (format != "text") out << failing.dump() << "\n";
    return ok ? 0 : 1;
  }

  const SeqProperty property = property_for(which);
  std::vector<ScanResult> failing;
  for (Kind fam : families) {
    ScanResult r = scan(fam, max_n, max_k, property);
    if (format == "text") {
      out << kind_name(fam) << " " << property_name(property) << ": " << r.checked << " checked, " << r.failures.size() << " failures\n";
      for (const auto& f : r.failures) {
        out << "  " << kind_name(fam) << "[" << f.n << "," << f.k << "] witness " << f.witness << ": " << join_coeffs(f.coeffs) << "\n";
      }
    }
    if (!r.failures.empty()) failing.push_back(std::move(r));
  }
  if (format != "text") out << to_json(failing) << "\n";
  return failing.empty() ? 0 : 1;
}

// --- euler-char / plotdata ---

int cmd_euler(const std::string& type, int m, int n, std::ostream& out) {
  if (n < 0 || m < 1) throw UsageError("--n must be nonnegative and --m positive");
  const Flavor flavor = type == "A" ? Flavor::typeA : Flavor::typeB;
  const AlternatingSum s = alternating_sum(flavor, n, m);
  out << "sum: " << to_text(s.sum) << "\n";
  out << "sum - 1: " << to_text(s.sum - QPoly{1}) << "\n";
  out << "residue mod q^" << m << " - q: " << to_text(s.residue) << "\n";
  return 0;
}

int cmd_plotdata(const std::string& kind, int n, const std::string& path, std::ostream& out, std::ostream& err) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  const DistributionData data = distribution_data(kind_flags().at(kind), n);
  std::ofstream file(path, std::ios::binary);
  if (file) file << distribution_csv(data);
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return 1;
  }
  out << moments_csv(data);
  return 0;
}

std::vector<std::string> map_keys(const std::map<std::string, Kind>& m) {
  std::vector<std::string> keys;
  for (const auto& kv : m) keys.push_back(kv.first);
  return keys;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.first);
    return v;
  }();
  return names;
}

Report run_suite(std::string_view name, std::optional<int> max_n, std::optional<int> m) {
  for (const auto& [suite, fn] : suites()) {
    if (suite == name) {
      Report r = fn(max_n, m);
      r.name = suite;
      return r;
    }
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact type A and type B q-Stirling numbers, objects and identity checks", "qstirling"};
  app.require_subcommand(1, 1);

  std::string kind, format = "text", object, suite, which, type, path;
  std::optional<std::string> stat;
  std::optional<int> k, m, max_n_opt;
  int n = 0, max_n = 0, max_k = 0, m_req = 0;
  std::vector<std::string> families;

  auto* table = app.add_subcommand("table", "Print a row of a Stirling table");
  table->add_option("--kind", kind, "S, c, SB, cB, So, SBo or sbar")->required()->check(CLI::IsMember({"S", "c", "SB", "cB", "So", "SBo", "sbar"}));
  table->add_option("--n", n, "Row index")->required();
  table->add_option("--k", k, "Single column");
  table->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "List objects in standard form");
  enumerate->add_option("--object", object, "sp, perm, ordA or ordB")->required()->check(CLI::IsMember({"sp", "perm", "ordA", "ordB"}));
  enumerate->add_option("--n", n, "Size")->required();
  enumerate->add_option("--k", k, "Number of block pairs, cycle pairs or blocks");
  enumerate->add_option("--stat", stat, "inv or maj")->check(CLI::IsMember({"inv", "maj"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-n", max_n_opt, "Size bound (suite default when omitted)");
  verify->add_option("--m", m, "Secondary bound");

  auto* conjecture = app.add_subcommand("conjecture", "Scan coefficient sequences for a property");
  conjecture->add_option("--which", which, "logconcave, parity, unimodal, bottomheavy, interlacing or strongqlc")
      ->required()
      ->check(CLI::IsMember({"logconcave", "parity", "unimodal", "bottomheavy", "interlacing", "strongqlc"}));
  conjecture->add_option("--max-n", max_n, "Largest n")->required();
  conjecture->add_option("--max-k", max_k, "Largest k")->required();
  conjecture->add_option("--family", families, "Families to scan (S, c, SB, cB)")->check(CLI::IsMember(map_keys(kind_flags())));
  std::string scan_format = "json";
  conjecture->add_option("--format", scan_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* euler = app.add_subcommand("euler-char", "Alternating ordered-partition sums");
  euler->add_option("--type", type, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  euler->add_option("--m", m_req, "Power of q")->required();
  euler->add_option("--n", n, "Size")->required();

  auto* plot = app.add_subcommand("plotdata", "Coefficient distributions as CSV");
  plot->add_option("--kind", kind, "S, c, SB or cB")->required()->check(CLI::IsMember(map_keys(kind_flags())));
  plot->add_option("--n", n, "Row index")->required();
  plot->add_option("--out", path, "CSV output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table(kind, n, k, format, out);
    if (enumerate->parsed()) return cmd_enumerate(object, n, k, stat, out);
    if (verify->parsed()) return cmd_verify(suite, max_n_opt, m, out);
    if (conjecture->parsed()) return cmd_conjecture(which, max_n, max_k, families, scan_format, out);
    if (euler->parsed()) return cmd_euler(type, m_req, n, out);
    if (plot->parsed()) return cmd_plotdata(kind, n, path, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qstirling::cli
