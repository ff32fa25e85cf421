#include "specht/cli/app.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "specht/analyses.hpp"
#include "specht/cli/cache.hpp"
#include "specht/cli/record.hpp"
#include "specht/cli/verify.hpp"
#include "specht/conm5.hpp"
#include "specht/diagram_ops.hpp"
#include "specht/errors.hpp"
#include "specht/hook_forms.hpp"
#include "specht/hooks.hpp"
#include "specht/large_prime.hpp"
#include "specht/trigonal.hpp"
#include "specht/schaper.hpp"
#include "specht/smith.hpp"
#include "specht/specht_basis.hpp"
#include "specht/two_column.hpp"
#include "specht/two_row.hpp"

namespace specht::cli {

namespace {

// "key:" padded to a fixed width so values line up.
class Table {
 public:
  explicit Table(std::ostream& out) : out_(out) {}
  template <class T>
  Table& row(const std::string& key, const T& value) {
    out_ << std::left << std::setw(14) << (key + ":") << value << '\n';
    return *this;
  }

 private:
  std::ostream& out_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

unsigned long checked_prime(long p) {
  if (p < 2 || !is_prime(static_cast<unsigned long>(p))) throw DomainError(std::to_string(p) + " is not prime");
  return static_cast<unsigned long>(p);
}

template <class V>
std::string join(const V& values, const std::string& sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << sep;
    first = false;
    s << v;
  }
  return s.str();
}

struct EdivArgs {
  std::string partition;
  long prime = 0;
  bool json = false;
  bool no_cache = false;
  std::string cache_dir;
};

int cmd_ediv(const EdivArgs& a, std::ostream& out, std::ostream& err) {
  const Partition lambda = parse_partition(a.partition);
  std::optional<ResultRecord> record;
  std::string source = "computed";
  std::optional<ResultCache> cache;
  if (!a.no_cache) {
    cache.emplace(resolve_cache_dir(a.cache_dir.empty() ? std::nullopt : std::optional<std::string>(a.cache_dir)));
    record = cache->load(lambda);
    if (!cache->last_error().empty()) err << "warning: " << cache->last_error() << '\n';
    if (record) source = "cache";
  }
  if (!record) {
    record = make_record(lambda, gram_chain(lambda));
    if (cache && !cache->store(lambda, *record)) err << "warning: " << cache->last_error() << '\n';
  }
  if (a.json) {
    out << serialize(*record);
    return kExitOk;
  }
  const DivisorChain chain = record_chain(*record);
  Table t(out);
  t.row("partition", record->partition)
      .row("rank", record->rank)
      .row("divisors", join(record->elementary_divisors))
      .row("compact", chain.compact())
      .row("group", assemble_group(chain).to_string())
      .row("det", record->det)
      .row("source", source);
  if (a.prime) {
    const unsigned long p = checked_prime(a.prime);
    t.row(std::to_string(p) + "-valuations", join(p_valuations(chain, p)));
  }
  return kExitOk;
}

int cmd_two_row(int n, int m, long prime, std::ostream& out) {
  const unsigned long p = checked_prime(prime);
  if (m < 0 || 2 * m > n) throw DomainError("need 0 <= m <= n/2");
  const TwoRowContext ctx = two_row_context(n, m, p);
  Table t(out);
  t.row("partition", Partition({n - m, m}).to_string()).row("p-part", two_row_p_part(n, m, p).to_string());
  std::vector<std::string> mu, dims;
  for (int j = 0; j < m; ++j) mu.push_back(std::to_string(j) + ":" + std::to_string(ctx.mu[j]));
  for (const Int& d : ctx.dims_simple) dims.push_back(to_decimal(d));
  t.row("mu", join(mu)).row("dim D", join(dims)).row("schaper", two_row_schaper(n, m, p).to_string());
  if (p > static_cast<unsigned long>(m)) t.row("large-prime", two_row_large_prime_group(n, m).to_string());
  return kExitOk;
}

int cmd_hook(int n, int l, long prime, std::ostream& out) {
  Table t(out);
  t.row("partition", hook_partition(n, l).to_string())
      .row("group", hook_group(n, l).to_string())
      .row("order", to_decimal(hook_order(n, l)));
  if (prime) t.row("layers", hook_layers(n, l, checked_prime(prime)).to_string());
  return kExitOk;
}

int cmd_two_column(int n, int h, const std::string& xi, const std::string& eta, std::ostream& out) {
  Table t(out);
  if (!xi.empty() || !eta.empty()) {
    if (h == 0) throw ParseError("--xi/--eta need --h");
    t.row("entry", to_decimal(two_column_entry(n, h, parse_int_list(xi), parse_int_list(eta))));
    return kExitOk;
  }
  const Partition lambda = two_column_partition(n, 2);
  t.row("partition", lambda.to_string())
      .row("group", two_column_22_group(n).to_string())
      .row("order", to_decimal(two_column_22_order(n)));
  const PairedBases b = two_column_22_bases(n);
  const Int det = determinant(gram_matrix(lambda));
  const TrigonalCheck r = verify_trigonal_pairing(pairing_table(b.x, b.y), det);
  t.row("x", join(b.x_labels, "  ")).row("y", join(b.y_labels, "  "));
  if (!r.ok) {
    t.row("bases", "FAILED " + r.violation);
    return kExitMismatch;
  }
  t.row("bases", "trigonal, diagonal " + r.chain.compact());
  if (!isomorphic(assemble_group(r.chain), two_column_22_group(n))) {
    t.row("consistency", "diagonal disagrees with the closed form");
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_large_prime(const std::string& partition, long prime, std::ostream& out) {
  const Partition lambda = parse_partition(partition);
  const auto r = large_prime_analyze(lambda, checked_prime(prime));
  Table t(out);
  t.row("partition", lambda.to_string());
  if (r.simple) {
    t.row("case", "simple").row("p-part", "trivial");
    return kExitOk;
  }
  std::vector<std::string> strips;
  for (const auto& s : r.strips) strips.push_back("(" + s.to_string() + ")");
  t.row("case", "shifted")
      .row("t", r.t)
      .row("s", r.s)
      .row("shift", "(" + r.shifted.to_string() + ")")
      .row("layer", r.layer)
      .row("strips", join(strips))
      .row("dim shift", r.dim_shift)
      .row("p-part", r.p_part.to_string());
  return kExitOk;
}

int cmd_schaper(const std::string& family, int n, long prime, bool check, std::ostream& out) {
  const SchaperFamily f = parse_schaper_family(family);
  const unsigned long p = checked_prime(prime);
  const FormalSum s = schaper_family(f, n, p);
  const std::int64_t weighted = evaluate(s, [](const Partition& l) { return dim_specht(l); });
  Table t(out);
  t.row("partition", schaper_family_head(f, n).to_string()).row("schaper", s.to_string()).row("weighted", weighted);
  if (check) {
    std::int64_t v = 0;
    for (int x : p_valuations(gram_chain(schaper_family_head(f, n)), p)) v += x;
    t.row("v_p(det)", v);
    if (v != weighted) return kExitMismatch;
  }
  return kExitOk;
}

int cmd_jantzen(const std::string& partition, long prime, bool direct, std::ostream& out) {
  const Partition lambda = parse_partition(partition);
  const unsigned long p = checked_prime(prime);
  const auto profile = layers_from_divisors(gram_chain(lambda), p);
  const auto reg = regularity(lambda, static_cast<int>(p));
  Table t(out);
  t.row("partition", lambda.to_string())
      .row("layers", profile.to_string())
      .row("weighted", profile.weighted())
      .row("p-regular", reg.is_regular ? "yes" : "no")
      .row("regularized", reg.regularized.to_string());
  if (direct) {
    const auto filtration = layers_from_filtration(gram_matrix(lambda), p);
    t.row("direct", filtration.to_string());
    if (!(filtration == profile)) return kExitMismatch;
  }
  return kExitOk;
}

int cmd_symmetric(const std::string& partition, std::ostream& out) {
  const auto r = symmetric_report(parse_partition(partition));
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  Table t(out);
  t.row("partition", r.lambda.to_string())
      .row("rank", r.rank)
      .row("H", to_decimal(r.H))
      .row("m", to_decimal(r.m_jump))
      .row("alpha", to_decimal(r.alpha))
      .row("gamma", to_decimal(r.gamma))
      .row("h", to_decimal(r.h_sq))
      .row("H/m square", yn(r.H_over_m_square))
      .row("H/m integer", yn(r.H_over_m_integer))
      .row(r.signed_H_square ? "gamma|a*rtH" : "gamma|a*h", yn(r.gamma_divides_alpha_h))
      .row("middle sq", yn(r.middle_square));
  return kExitOk;
}

int cmd_unimodular(int n, int m, long prime, std::ostream& out) {
  const auto r = unimodular_test(n, m, prime ? std::optional<unsigned long>(checked_prime(prime)) : std::nullopt);
  Table t(out);
  t.row("partition", Partition({n - m, m}).to_string());
  for (const auto& l : r.local) {
    std::vector<std::string> mult;
    for (const auto& [j, mu] : l.multiplicities) mult.push_back(std::to_string(j) + ":" + std::to_string(mu));
    t.row("p=" + std::to_string(l.p), std::string(l.even ? "even " : "odd  ") + join(mult));
  }
  t.row("unimodular", r.exists() ? "possible" : "excluded");
  return kExitOk;
}

int cmd_conm5(int n, int h, std::ostream& out) {
  const auto r = conm5_check(n, h);
  std::vector<std::string> gammas, indices;
  for (const Int& g : r.gammas) gammas.push_back(to_decimal(g));
  for (const Int& i : r.indices) indices.push_back(to_decimal(i));
  out << (r.holds ? "holds" : "fails") << '\n';
  Table t(out);
  t.row("partition", two_column_partition(n, h).to_string())
      .row("modulus", to_decimal(r.modulus))
      .row("gammas", join(gammas))
      .row("indices", join(indices))
      .row("gram kernel", to_decimal(r.gram_kernel.index()));
  return r.holds ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_suites(suite, opts)) {
    out << std::left << std::setw(12) << r.name << ' ' << (r.ok() ? "PASS" : "FAIL") << "  " << r.cases << " cases, "
        << r.mismatches.size() << " mismatches, max n " << r.max_n << ", " << std::fixed << std::setprecision(2)
        << r.seconds << " s\n";
    for (const auto& m : r.mismatches) out << "  mismatch " << m << '\n';
    for (const auto& n : r.notes)
      if (!n.empty()) out << "  " << n << '\n';
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary divisors of Specht module Gram matrices", "specht"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  int status = kExitOk;

  EdivArgs ediv;
  auto* ediv_cmd = app.add_subcommand("ediv", "elementary divisors of the Gram matrix");
  ediv_cmd->add_option("partition", ediv.partition, "e.g. 3,2,1 or 2^2,1^2")->required();
  ediv_cmd->add_option("--prime", ediv.prime, "also print p-valuations");
  ediv_cmd->add_flag("--json", ediv.json, "print the result record as JSON");
  ediv_cmd->add_flag("--no-cache", ediv.no_cache, "neither read nor write the cache");
  ediv_cmd->add_option("--cache-dir", ediv.cache_dir, "cache directory");

  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  formula->require_subcommand(1);
  int n = 0, m = 0, l = 0, h = 0;
  long prime = 0;
  std::string partition, xi, eta, family;
  bool check = false, direct = false;
  auto* f_two_row = formula->add_subcommand("two-row", "(n-m,m) p-part");
  f_two_row->add_option("--n", n)->required();
  f_two_row->add_option("--m", m)->required();
  f_two_row->add_option("--prime", prime)->required();
  auto* f_hook = formula->add_subcommand("hook", "(n-l,1^l)");
  f_hook->add_option("--n", n)->required();
  f_hook->add_option("--l", l)->required();
  f_hook->add_option("--prime", prime, "also give Jantzen layers");
  auto* f_two_col = formula->add_subcommand("two-column", "(2^2,1^{n-4}) group and bases, or a single pairing");
  f_two_col->add_option("--n", n)->required();
  f_two_col->add_option("--h", h);
  f_two_col->add_option("--xi", xi, "second column, e.g. 3,6");
  f_two_col->add_option("--eta", eta);
  auto* f_large = formula->add_subcommand("large-prime", "p > n - lambda_1");
  f_large->add_option("--partition", partition)->required();
  f_large->add_option("--prime", prime)->required();
  auto* f_schaper = formula->add_subcommand("schaper-family", "Schaper sum of a three- or four-part family");
  f_schaper->add_option("--family", family, "n-3,2,1 | n-4,2^2 | n-4,3,1 | n-4,2,1^2")->required();
  f_schaper->add_option("--n", n)->required();
  f_schaper->add_option("--prime", prime)->required();
  f_schaper->add_flag("--check", check, "compare with the brute-force determinant");

  auto* jantzen = app.add_subcommand("jantzen", "Jantzen layer dimensions");
  jantzen->add_option("partition", partition)->required();
  jantzen->add_option("--prime", prime)->required();
  jantzen->add_flag("--direct", direct, "also build the filtration from its definition");

  auto* symmetric = app.add_subcommand("symmetric", "symmetric-partition report");
  symmetric->add_option("partition", partition)->required();

  auto* unimodular = app.add_subcommand("unimodular", "parity test for unimodular lattices in (n-m,m)");
  unimodular->add_option("--n", n)->required();
  unimodular->add_option("--m", m)->required();
  unimodular->add_option("--prime", prime);

  std::uint64_t bound = 0;
  unsigned threads = 0;
  auto* pell = app.add_subcommand("pell", "solve 2y^2 - x^2 = 1, 3z^2 - x^2 = 2");
  pell->add_option("--bound", bound)->required();
  pell->add_option("--threads", threads);

  auto* conm5 = app.add_subcommand("conm5", "compare lowering-map kernels with the Gram kernel");
  conm5->add_option("--n", n)->required();
  conm5->add_option("--h", h)->required();

  std::string suite;
  SuiteOptions suite_opts;
  int max_n = 0;
  auto* verify = app.add_subcommand("verify", "oracle-vs-closed-form suites");
  verify->add_option("suite", suite, "suite name or all")->required();
  verify->add_option("--max-n", max_n);
  verify->add_flag("--include-reference", suite_opts.include_reference, "print reference-only fixtures");
  verify->add_option("--threads", suite_opts.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ediv_cmd) status = cmd_ediv(ediv, out, err);
    else if (*f_two_row) status = cmd_two_row(n, m, prime, out);
    else if (*f_hook) status = cmd_hook(n, l, prime, out);
    else if (*f_two_col) status = cmd_two_column(n, h, xi, eta, out);
    else if (*f_large) status = cmd_large_prime(partition, prime, out);
    else if (*f_schaper) status = cmd_schaper(family, n, prime, check, out);
    else if (*jantzen) status = cmd_jantzen(partition, prime, direct, out);
    else if (*symmetric) status = cmd_symmetric(partition, out);
    else if (*unimodular) status = cmd_unimodular(n, m, prime, out);
    else if (*pell) {
      for (const auto& s : pell_search(bound, threads)) out << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
    } else if (*conm5) status = cmd_conm5(n, h, out);
    else if (*verify) {
      if (max_n) suite_opts.max_n = max_n;
      status = cmd_verify(suite, suite_opts, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"specht"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace specht::cli
