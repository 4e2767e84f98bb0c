#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cluskit/fqsym.hpp"
#include "cluskit/io.hpp"
#include "cluskit/tables.hpp"
#include "cluskit/word_cluster.hpp"

namespace {

using namespace cluskit;

struct NRange {
  int lo = 0, hi = 0;
};

NRange parse_n_range(const std::string& text) {
  NRange r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected K or A..B, got '" + text + "'");
  }
  if (r.lo < 0 || r.hi < r.lo)
    throw CLI::ValidationError("--n", "empty or negative range '" + text + "'");
  return r;
}

std::optional<Int> parse_s(const std::string& text) {
  if (text.empty() || text == "symbolic") return std::nullopt;
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--s", "expected an integer, got '" + text + "'");
  }
}

std::string set_str(const std::vector<int>& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

// ---- stats -----------------------------------------------------------------

int cmd_stats(const std::string& text) {
  Permutation pi = Permutation::parse(text);
  StatRecord st = stats(pi);
  std::cout << "pi      = " << pi.str() << "\n"
            << "inverse = " << pi.inverse().str() << "\n"
            << "Des     = " << set_str(st.des_set) << "\n"
            << "comp    = " << st.comp.str() << "\n"
            << "des=" << st.des << " maj=" << st.maj << " comaj=" << st.comaj
            << " pk=" << st.pk << " lpk=" << st.lpk << " inv=" << st.inv
            << "\n"
            << "ides=" << st.ides << " imaj=" << st.imaj
            << " icomaj=" << st.icomaj << " ipk=" << st.ipk
            << " ilpk=" << st.ilpk << "\n";
  return 0;
}

// ---- poly ------------------------------------------------------------------

struct PolyArgs {
  std::string pattern;
  std::string family = "ides";
  std::string n = "0..9";
  std::string method = "spec";
  std::string s;
  std::string format = "text";
  std::string cache_dir;
  bool force = false;
  bool allow_big = false;
};

std::vector<Poly> compute_polys(const PatternSet& gamma, Family fam,
                                const std::string& method, int nmax,
                                const std::optional<Int>& s_value) {
  if (method == "brute") {
    if (s_value && *s_value == 0)
      return brute_avoider_distribution(gamma, nmax, fam);
    auto polys = brute_distribution(gamma, nmax, fam);
    if (s_value)
      for (auto& p : polys) p = p.eval_s(*s_value);
    return polys;
  }
  if (method == "spec")
    return specialized_distribution(fam, gamma,
                                    {nmax, ClusterSource::brute, s_value});
  if (method == "closed")
    return closed_distribution(fam, gamma,
                               {nmax, ClusterSource::closed, s_value});
  if (method == "fqsym") return fqsym_distribution(fam, gamma, nmax, s_value);
  throw std::invalid_argument("unknown method: " + method);
}

int cmd_poly(const PolyArgs& args) {
  const PatternSet gamma = PatternSet::parse(args.pattern);
  const Family fam = family_from_name(args.family);
  const NRange range = parse_n_range(args.n);
  const std::optional<Int> s_value = parse_s(args.s);
  if (args.method == "brute" && range.hi > 10 && !args.allow_big)
    throw std::invalid_argument(
        "brute force beyond n = 10 sweeps more than 11! permutations; pass "
        "--allow-big to insist");

  std::optional<PolyCache> cache =
      args.cache_dir.empty() ? PolyCache::from_environment()
                             : std::make_optional(PolyCache(args.cache_dir));

  std::vector<Poly> rows(range.hi + 1);
  std::vector<bool> have(range.hi + 1, false);
  if (cache && !args.force) {
    for (int n = range.lo; n <= range.hi; ++n) {
      auto hit = cache->load(gamma, n, family_name(fam), s_value, args.method);
      if (hit) {
        rows[n] = *hit;
        have[n] = true;
      }
    }
  }
  bool all_hit = true;
  for (int n = range.lo; n <= range.hi; ++n) all_hit = all_hit && have[n];
  if (!all_hit) {
    auto computed = compute_polys(gamma, fam, args.method, range.hi, s_value);
    for (int n = range.lo; n <= range.hi; ++n) {
      if (have[n]) continue;
      rows[n] = computed[n];
      if (cache)
        cache->store(gamma, n, family_name(fam), s_value, args.method,
                     rows[n]);
    }
  }

  if (args.format == "text") {
    for (int n = range.lo; n <= range.hi; ++n)
      std::cout << "n=" << n << ": " << rows[n].str() << "\n";
  } else if (args.format == "csv") {
    std::cout << "n,poly\n";
    for (int n = range.lo; n <= range.hi; ++n)
      std::cout << n << "," << rows[n].str() << "\n";
  } else if (args.format == "json") {
    std::cout << "[\n";
    for (int n = range.lo; n <= range.hi; ++n) {
      PolyRecord rec;
      for (const auto& p : gamma.patterns()) rec.pattern.push_back(p.str());
      rec.family = family_name(fam);
      rec.n = n;
      rec.s_value = s_value;
      rec.poly = rows[n];
      std::istringstream lines(render_poly_json(rec));
      std::string line;
      while (std::getline(lines, line)) std::cout << "  " << line << "\n";
      if (n < range.hi) std::cout << "  ,\n";
    }
    std::cout << "]\n";
  } else {
    throw std::invalid_argument("unknown format: " + args.format);
  }
  return 0;
}

// ---- clusters ----------------------------------------------------------------

int cmd_clusters(const std::string& pattern, const std::string& perm, int n,
                 const std::string& tag_name) {
  const PatternSet gamma = PatternSet::parse(pattern);
  StatTag tag = StatTag::none;
  if (tag_name == "inv")
    tag = StatTag::inv;
  else if (tag_name == "ides")
    tag = StatTag::ides;
  else if (tag_name == "ides-icomaj")
    tag = StatTag::ides_icomaj;
  else if (tag_name == "ipk")
    tag = StatTag::ipk;
  else if (tag_name == "ilpk")
    tag = StatTag::ilpk;
  else if (tag_name != "none")
    throw std::invalid_argument("unknown tag: " + tag_name);

  if (!perm.empty()) {
    Permutation pi = Permutation::parse(perm);
    auto cls = clusters(pi, gamma);
    std::cout << "pi = " << pi.str() << ", patterns {" << gamma.str()
              << "}\n";
    for (const auto& cl : cls) {
      std::cout << "  cluster:";
      for (const auto& mark : cl.marks)
        std::cout << " (" << mark.start << "," << mark.pattern.str() << ")";
      std::cout << "  mk=" << cl.mk() << "\n";
    }
    std::cout << "total clusters: " << cls.size() << "\n";
    return 0;
  }
  std::cout << "cluster polynomial, patterns {" << gamma.str() << "}, length "
            << n << ", tag " << tag_name << ":\n"
            << cluster_polynomial(gamma, n, tag).str() << "\n";
  return 0;
}

// ---- table ---------------------------------------------------------------------

int cmd_table(int id) {
  const GoldenTable& table = golden_table(id);
  std::cout << "table " << table.id << ": " << table.title << " (pattern "
            << table.pattern << ")\n";
  auto expected = golden_rows(table);
  auto brute = computed_table(table, "brute");
  auto closed = computed_table(table, "closed");
  bool all_ok = true;
  for (size_t n = 0; n < expected.size(); ++n) {
    const bool b_ok = brute[n] == expected[n];
    const bool c_ok = closed[n] == expected[n];
    all_ok = all_ok && b_ok && c_ok;
    std::cout << "  n=" << n << ": " << table.rows[n]
              << (b_ok ? "  [brute ok]" : "  [BRUTE DIFFERS: " +
                                              brute[n].str() + "]")
              << (c_ok ? " [closed ok]" : " [CLOSED DIFFERS: " +
                                              closed[n].str() + "]")
              << "\n";
  }
  std::cout << (all_ok ? "table matches: brute force and " + table.formula +
                             " agree with the embedded rows\n"
                       : "TABLE MISMATCH\n");
  return all_ok ? 0 : 1;
}

// ---- verify ----------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string pattern;
  std::string family;
  std::string which = "all";  // claims: ipk | ilpk | all
  int n = -1;                 // per-suite default when negative
  int k = 6;
  int cap = -1;  // --N
  int m = -1;
  int maxlen = 8;
  int nmin = 3;
};

bool report_suite(const std::string& name, const CheckReport& rep) {
  for (const auto& line : rep.lines) std::cout << line << "\n";
  std::cout << (rep.ok ? "PASS " : "FAIL ") << name << "\n";
  return rep.ok;
}

bool verify_word_cluster(const VerifyArgs& args) {
  auto rep = verify_word_cluster_method("abc", {"cab", "bc"}, args.maxlen);
  std::cout << "  alphabet {a,b,c}, bad words {cab, bc}: "
            << rep.words_checked << " words of length <= " << args.maxlen
            << " checked\n";
  if (!rep.ok) std::cout << "  MISMATCH " << rep.detail << "\n";
  std::cout << (rep.ok ? "PASS " : "FAIL ") << "word-cluster\n";
  return rep.ok;
}

bool verify_fqsym_identity(const VerifyArgs& args) {
  std::vector<std::string> sets = {"21", "123", "321", "132,231", "1234",
                                   "13245"};
  if (!args.pattern.empty()) sets = {args.pattern};
  const int cap = args.cap < 0 ? 7 : args.cap;
  bool ok = true;
  for (const auto& text : sets) {
    auto rep = verify_cluster_identity(PatternSet::parse(text), cap);
    ok = ok && rep.ok;
    std::cout << "  {" << text << "} to degree " << cap << ": "
              << (rep.ok ? "identity holds" : "MISMATCH " + rep.detail)
              << "\n";
  }
  std::cout << (ok ? "PASS " : "FAIL ") << "fqsym-identity\n";
  return ok;
}

bool verify_hom_multiplicative(const VerifyArgs& args) {
  const int cap = args.cap < 0 ? 6 : args.cap;
  Trunc tr;
  tr.t = cap + 2;
  tr.q = cap * (cap - 1) / 2 + cap + 2;
  tr.x = cap;
  const std::pair<Hom, std::string> homs[] = {
      {Hom::plain, "plain"},
      {Hom::q_inv, "q-inv"},
      {Hom::ides_icomaj, "ides-icomaj"},
      {Hom::ipk, "ipk"},
      {Hom::ilpk, "ilpk"},
  };
  bool ok = true;
  for (const auto& [hom, name] : homs) {
    std::string detail;
    bool good = hom_is_multiplicative_check(hom, cap, tr, &detail);
    ok = ok && good;
    std::cout << "  " << name << " on all basis pairs of total degree <= "
              << cap << ": "
              << (good ? std::string(hom_is_hadamard(hom)
                                         ? "multiplicative (Hadamard product)"
                                         : "multiplicative")
                       : "MISMATCH " + detail)
              << "\n";
  }
  std::cout << (ok ? "PASS " : "FAIL ") << "hom-multiplicative\n";
  return ok;
}

bool verify_three_way(const VerifyArgs& args) {
  std::vector<std::string> sets = {"123", "321", "1234", "4321", "13245",
                                   "12435"};
  if (!args.pattern.empty()) sets = {args.pattern};
  std::vector<Family> fams = {Family::ides, Family::ipk, Family::ilpk};
  if (!args.family.empty()) fams = {family_from_name(args.family)};
  const int nmax = args.n < 0 ? 8 : args.n;
  bool ok = true;
  for (const auto& text : sets)
    for (Family fam : fams) {
      auto rep = three_way_check(PatternSet::parse(text), fam, nmax);
      ok = ok && rep.ok;
      if (rep.ok)
        std::cout << "  {" << text << "} " << family_name(fam)
                  << ": brute = engine"
                  << (classify_pattern(PatternSet::parse(text)).shape ==
                              PatternShape::other
                          ? ""
                          : " = closed")
                  << " for n <= " << nmax << "\n";
      else
        for (const auto& line : rep.lines) std::cout << line << "\n";
    }
  std::cout << (ok ? "PASS " : "FAIL ") << "three-way\n";
  return ok;
}

bool verify_symmetry(const VerifyArgs& args) {
  const int nmax = args.n < 0 ? 7 : args.n;
  bool ok = true;
  {
    auto rep = symmetry_statistic_check(nmax);
    ok = ok && rep.ok;
    std::cout << "  statistic identities on all of S_n, n <= " << nmax << ": "
              << (rep.ok ? "hold" : "MISMATCH") << "\n";
    if (!rep.ok)
      for (const auto& line : rep.lines) std::cout << line << "\n";
  }
  std::vector<std::string> sets = {"123", "321", "132"};
  if (!args.pattern.empty()) sets = {args.pattern};
  for (const auto& text : sets) {
    auto rep = symmetry_polynomial_check(PatternSet::parse(text), nmax);
    ok = ok && rep.ok;
    std::cout << "  distribution transports for {" << text << "}, n <= "
              << nmax << ": " << (rep.ok ? "hold" : "MISMATCH") << "\n";
    if (!rep.ok)
      for (const auto& line : rep.lines) std::cout << line << "\n";
  }
  std::cout << (ok ? "PASS " : "FAIL ") << "symmetry\n";
  return ok;
}

bool verify_carlitz(const VerifyArgs& args) {
  const int nmax = args.n < 0 ? 5 : args.n;
  return report_suite("carlitz", carlitz_check(nmax, args.k));
}

bool verify_claims(const VerifyArgs& args) {
  const int nmax = args.cap < 0 ? 9 : args.cap;
  bool ok = true;
  if (args.which == "ipk" || args.which == "all") {
    std::vector<int> ms = args.m < 0 ? std::vector<int>{3, 4, 5}
                                     : std::vector<int>{args.m};
    for (int m : ms) {
      auto rep = claim_ipk_check(m, nmax);
      ok = ok && rep.ok;
      for (const auto& line : rep.lines) std::cout << line << "\n";
    }
  }
  if (args.which == "ilpk" || args.which == "all") {
    auto rep = claim_ilpk_check(nmax);
    ok = ok && rep.ok;
    for (const auto& line : rep.lines) std::cout << line << "\n";
  }
  std::cout << (ok ? "PASS " : "FAIL ") << "claims\n";
  return ok;
}

bool verify_prop_123(const VerifyArgs& args) {
  const int nmax = args.n < 0 ? 11 : args.n;
  return report_suite("prop-123", prop_123_check(args.nmin, nmax));
}

bool verify_log_concavity() {
  bool ok = true;
  for (const auto& table : golden_tables()) {
    auto rows = golden_rows(table);
    for (size_t n = 0; n < rows.size(); ++n) {
      std::string why;
      if (!log_concave_no_gaps(rows[n], &why)) {
        ok = false;
        std::cout << "  MISMATCH table " << table.id << " n=" << n << ": "
                  << why << "\n";
      }
    }
    std::cout << "  table " << table.id
              << ": all rows positive, gap-free and log-concave\n";
  }
  std::cout << (ok ? "PASS " : "FAIL ") << "log-concavity\n";
  return ok;
}

int cmd_verify(const VerifyArgs& args) {
  const std::vector<std::string> all = {
      "word-cluster",  "fqsym-identity", "hom-multiplicative",
      "three-way",     "symmetry",       "carlitz",
      "claims",        "prop-123",       "log-concavity"};
  std::vector<std::string> suites;
  if (args.suite.empty())
    suites = all;
  else if (std::find(all.begin(), all.end(), args.suite) != all.end())
    suites = {args.suite};
  else {
    std::ostringstream msg;
    msg << "unknown suite '" << args.suite << "'; valid suites:";
    for (const auto& s : all) msg << " " << s;
    throw std::invalid_argument(msg.str());
  }
  bool ok = true;
  for (const auto& suite : suites) {
    std::cout << "== " << suite << "\n";
    if (suite == "word-cluster")
      ok = verify_word_cluster(args) && ok;
    else if (suite == "fqsym-identity")
      ok = verify_fqsym_identity(args) && ok;
    else if (suite == "hom-multiplicative")
      ok = verify_hom_multiplicative(args) && ok;
    else if (suite == "three-way")
      ok = verify_three_way(args) && ok;
    else if (suite == "symmetry")
      ok = verify_symmetry(args) && ok;
    else if (suite == "carlitz")
      ok = verify_carlitz(args) && ok;
    else if (suite == "claims")
      ok = verify_claims(args) && ok;
    else if (suite == "prop-123")
      ok = verify_prop_123(args) && ok;
    else if (suite == "log-concavity")
      ok = verify_log_concavity() && ok;
  }
  std::cout << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  return ok ? 0 : 1;
}

// ---- series-dump -----------------------------------------------------------------

int cmd_series_dump(const std::string& id, const std::string& pattern, int m,
                    int a, int nmax, const std::string& s) {
  FormulaRequest req;
  req.id = id;
  if (!pattern.empty()) req.gamma = PatternSet::parse(pattern);
  req.m = m;
  req.a = a;
  req.nmax = nmax;
  req.s_value = parse_s(s);
  if (!formula_exists(id)) {
    std::ostringstream msg;
    msg << "unknown formula '" << id << "'; known formulas:";
    for (const auto& f : formula_ids()) msg << " " << f;
    throw std::invalid_argument(msg.str());
  }
  FormulaOutput out = run_formula(req);
  std::cout << "formula " << id << "\n";
  if (out.inner) std::cout << "J = " << out.inner->str() << "\n";
  if (out.hsum) std::cout << "H = " << out.hsum->str() << "\n";
  for (size_t n = 0; n < out.polys.size(); ++n)
    std::cout << "n=" << n << ": " << out.polys[n].str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact distributions of consecutive-pattern occurrences jointly with "
      "inverse descent and peak statistics"};
  app.require_subcommand(1);

  std::string stats_perm;
  auto* stats_cmd =
      app.add_subcommand("stats", "statistics of one permutation");
  stats_cmd->add_option("permutation", stats_perm, "one-line notation")
      ->required();

  PolyArgs poly_args;
  auto* poly_cmd =
      app.add_subcommand("poly", "distribution polynomials for a pattern set");
  poly_cmd->add_option("--pattern", poly_args.pattern,
                       "comma-separated patterns, e.g. 123 or 132,231")
      ->required();
  poly_cmd->add_option("--family", poly_args.family,
                       "plain, q, ides, ides-imaj, ides-icomaj, ipk or ilpk");
  poly_cmd->add_option("--n", poly_args.n, "single n or range A..B");
  poly_cmd->add_option("--method", poly_args.method,
                       "brute, spec, closed or fqsym");
  poly_cmd->add_option("--s", poly_args.s,
                       "fix the occurrence variable (default: symbolic)");
  poly_cmd->add_option("--format", poly_args.format, "text, json or csv");
  poly_cmd->add_option("--cache", poly_args.cache_dir,
                       "cache directory (default: $CLUSKIT_CACHE_DIR)");
  poly_cmd->add_flag("--force", poly_args.force,
                     "recompute and overwrite cached entries");
  poly_cmd->add_flag("--allow-big", poly_args.allow_big,
                     "lift the n <= 10 brute-force cap");

  std::string cl_pattern, cl_perm, cl_tag = "none";
  int cl_n = 0;
  auto* clusters_cmd = app.add_subcommand(
      "clusters", "cluster polynomial, or the clusters of one permutation");
  clusters_cmd->add_option("--pattern", cl_pattern, "pattern set")->required();
  clusters_cmd->add_option("--n", cl_n, "cluster length");
  clusters_cmd->add_option("--perm", cl_perm, "list this permutation's clusters");
  clusters_cmd->add_option("--tag", cl_tag,
                           "refinement: none, inv, ides, ides-icomaj, ipk, ilpk");

  int table_id = 0;
  auto* table_cmd = app.add_subcommand(
      "table", "reproduce an embedded reference table two ways and diff");
  table_cmd->add_option("id", table_id, "table id (1..11)")->required();

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "run one named check suite, or all");
  verify_cmd->add_option("suite", verify_args.suite,
                         "word-cluster, fqsym-identity, hom-multiplicative, "
                         "three-way, symmetry, carlitz, claims, prop-123, "
                         "log-concavity (default: all)");
  verify_cmd->add_option("--pattern", verify_args.pattern,
                         "restrict to one pattern set");
  verify_cmd->add_option("--family", verify_args.family,
                         "restrict three-way to one family");
  verify_cmd->add_option("--which", verify_args.which,
                         "claims: ipk, ilpk or all");
  verify_cmd->add_option("--n", verify_args.n, "bound for n");
  verify_cmd->add_option("--k", verify_args.k, "carlitz: t-degree bound");
  verify_cmd->add_option("--N", verify_args.cap,
                         "degree cap (fqsym-identity, hom-multiplicative, "
                         "claims)");
  verify_cmd->add_option("--m", verify_args.m, "claims: pattern length");
  verify_cmd->add_option("--maxlen", verify_args.maxlen,
                         "word-cluster: word length bound");
  verify_cmd->add_option("--nmin", verify_args.nmin, "prop-123: smallest n");

  std::string dump_id, dump_pattern, dump_s;
  int dump_m = 0, dump_a = 0, dump_nmax = 9;
  auto* dump_cmd = app.add_subcommand(
      "series-dump", "print a named formula's inner series, sum and rows");
  dump_cmd->add_option("--formula", dump_id, "formula id")->required();
  dump_cmd->add_option("--pattern", dump_pattern, "pattern set (spec-*, gj-*)");
  dump_cmd->add_option("--m", dump_m, "monotone length (mono-*, dec-*, trans-*)");
  dump_cmd->add_option("--a", dump_a, "transposed letter (trans-*)");
  dump_cmd->add_option("--nmax", dump_nmax, "degree bound");
  dump_cmd->add_option("--s", dump_s, "fix the occurrence variable");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats_cmd->parsed()) return cmd_stats(stats_perm);
    if (poly_cmd->parsed()) return cmd_poly(poly_args);
    if (clusters_cmd->parsed())
      return cmd_clusters(cl_pattern, cl_perm, cl_n, cl_tag);
    if (table_cmd->parsed()) return cmd_table(table_id);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (dump_cmd->parsed())
      return cmd_series_dump(dump_id, dump_pattern, dump_m, dump_a, dump_nmax,
                             dump_s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
