#include "specht/cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "specht/analyses.hpp"
#include "specht/cli/fixtures.hpp"
#include "specht/conm5.hpp"
#include "specht/diagram_ops.hpp"
#include "specht/errors.hpp"
#include "specht/hook_forms.hpp"
#include "specht/hooks.hpp"
#include "specht/large_prime.hpp"
#include "specht/trigonal.hpp"
#include "specht/rectangular.hpp"
#include "specht/schaper.hpp"
#include "specht/smith.hpp"
#include "specht/specht_basis.hpp"
#include "specht/two_column.hpp"
#include "specht/two_row.hpp"

namespace specht::cli {

namespace {

const std::vector<unsigned long> kSmallPrimes{2, 3, 5, 7};

std::string pn(const Partition& l, unsigned long p) { return "(" + l.to_string() + ") p=" + std::to_string(p); }

std::vector<Case> two_row_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      for (unsigned long p : kSmallPrimes)
        cases.push_back({"two-row n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p),
                         [=]() -> std::optional<std::string> {
                           const Partition lambda({n - m, m});
                           const auto brute = p_part_group(gram_chain(lambda), p);
                           const auto formula = two_row_p_part(n, m, p);
                           if (!(formula == brute)) return "p-part " + formula.to_string() + " vs brute " + brute.to_string();
                           if (p > static_cast<unsigned long>(m)) {
                             const auto large = p_part_group(two_row_large_prime_group(n, m), p);
                             if (!(large == brute)) return "large-prime form " + large.to_string() + " vs brute " + brute.to_string();
                           }
                           const auto ctx = two_row_context(n, m, p);
                           for (int j = 0; 2 * j <= n; ++j) {
                             const auto rank = dim_simple(Partition({n - j, j}), p);
                             if (ctx.dims_simple[j] != static_cast<unsigned long>(rank))
                               return "dim D^(" + std::to_string(n - j) + "," + std::to_string(j) + ") = " +
                                      to_decimal(ctx.dims_simple[j]) + " vs rank " + std::to_string(rank);
                           }
                           return std::nullopt;
                         }});
  return cases;
}

std::vector<Case> hook_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int l = 0; l < n; ++l)
      cases.push_back({"hook n=" + std::to_string(n) + " l=" + std::to_string(l), [=]() -> std::optional<std::string> {
                         const Partition lambda = hook_partition(n, l);
                         const auto& chain = gram_chain(lambda);
                         const auto group = hook_group(n, l);
                         if (!isomorphic(group, assemble_group(chain)))
                           return "group " + group.to_string() + " vs brute " + chain.compact();
                         if (hook_order(n, l) != chain.product()) return "order " + to_decimal(hook_order(n, l));
                         if (group.order() != chain.product()) return "group order differs from determinant";
                         for (unsigned long p : {2ul, 3ul, 5ul}) {
                           const auto want = layers_from_divisors(chain, p);
                           const auto got = predicted_profile(hook_layers(n, l, p), p);
                           if (!(want == got))
                             return "layers at p=" + std::to_string(p) + ": " + got.to_string() + " vs brute " + want.to_string();
                         }
                         return std::nullopt;
                       }});
  return cases;
}

std::vector<Case> large_prime_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (lambda.length() < 2) continue;
      for (unsigned long p : primes_up_to(n)) {
        if (static_cast<int>(p) <= n - lambda.part(1)) continue;
        cases.push_back({"large-prime " + pn(lambda, p), [=]() -> std::optional<std::string> {
                           const auto r = large_prime_analyze(lambda, p);
                           const auto brute = p_part_group(gram_chain(lambda), p);
                           if (r.simple) {
                             if (!brute.terms.empty()) return "predicted simple, brute p-part " + brute.to_string();
                           } else if (!(r.p_part == brute)) {
                             return "predicted " + r.p_part.to_string() + ", brute " + brute.to_string();
                           }
                           return std::nullopt;
                         }});
      }
    }
  return cases;
}

std::vector<Case> duality_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (unsigned long p : kSmallPrimes)
        cases.push_back({"duality " + pn(lambda, p), [=]() -> std::optional<std::string> {
                           const auto r = duality_check(lambda, p);
                           if (r.ok()) return std::nullopt;
                           return std::string("failed:") + (r.positional ? "" : " positional") +
                                  (r.determinant ? "" : " determinant") + (r.mirror ? "" : " mirror");
                         }});
  return cases;
}

std::vector<Case> conm5_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    for (int h = 1; 2 * h <= n; ++h)
      cases.push_back({"conm5 n=" + std::to_string(n) + " h=" + std::to_string(h), [=]() -> std::optional<std::string> {
                         const auto r = conm5_check(n, h);
                         if (r.holds) return std::nullopt;
                         return "kernels differ";
                       }});
  return cases;
}

std::vector<Case> james_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n))
      cases.push_back({"james (" + lambda.to_string() + ")", [=]() -> std::optional<std::string> {
                         const auto r = james_bound(lambda);
                         if (r.ok()) return std::nullopt;
                         return to_decimal(r.factor) + " | " + to_decimal(r.first_divisor) + " | " + to_decimal(r.upper) +
                                " fails";
                       }});
  return cases;
}

std::vector<Case> regularity_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (unsigned long p : kSmallPrimes)
        cases.push_back({"regularity " + pn(lambda, p), [=]() -> std::optional<std::string> {
                           const auto info = regularity(lambda, static_cast<int>(p));
                           const auto d = dim_simple(lambda, p);
                           if ((d > 0) != info.is_regular)
                             return "dim D = " + std::to_string(d) + " but regular = " + (info.is_regular ? "yes" : "no");
                           if (!regularity(info.regularized, static_cast<int>(p)).is_regular)
                             return "regularization (" + info.regularized.to_string() + ") is not regular";
                           return std::nullopt;
                         }});
  return cases;
}

std::vector<Case> schaper_cases(int max_n) {
  std::vector<Case> cases;
  for (auto f : {SchaperFamily::N3_2_1, SchaperFamily::N4_2_2, SchaperFamily::N4_3_1, SchaperFamily::N4_2_1_1})
    for (int n = schaper_family_min_n(f); n <= max_n; ++n)
      for (unsigned long p : kSmallPrimes)
        cases.push_back({"schaper " + schaper_family_name(f) + " n=" + std::to_string(n) + " p=" + std::to_string(p),
                         [=]() -> std::optional<std::string> {
                           const FormalSum s = schaper_family(f, n, p);
                           const std::int64_t weighted = evaluate(s, [](const Partition& l) { return dim_specht(l); });
                           const auto& chain = gram_chain(schaper_family_head(f, n));
                           std::int64_t v = 0;
                           for (int x : p_valuations(chain, p)) v += x;
                           if (weighted == v) return std::nullopt;
                           return "weighted dimension " + std::to_string(weighted) + " vs v_p(det) " + std::to_string(v);
                         }});
  return cases;
}

std::vector<Case> rectangular_cases(int max_n) {
  std::vector<Partition> shapes{Partition({2, 2}), Partition({2, 2, 2}), Partition({3, 3})};
  for (int k = 2; k <= max_n; ++k) shapes.push_back(Partition(std::vector<int>(k, 1)));
  std::vector<Case> cases;
  for (const Partition& mu : shapes)
    cases.push_back({"rectangular (" + mu.to_string() + ")", [=]() -> std::optional<std::string> {
                       const auto s = rectangular_scale(mu);
                       const auto& big = gram_chain(mu);
                       const auto& small = gram_chain(s.smaller);
                       if (big.rank() != small.rank()) return "ranks differ";
                       for (std::size_t i = 0; i < big.rank(); ++i)
                         if (big.divisors[i] != small.divisors[i] * s.factor)
                           return big.compact() + " vs " + std::to_string(s.factor) + " * (" + small.compact() + ")";
                       return std::nullopt;
                     }});
  return cases;
}

std::vector<Case> unimodular_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 6; n <= max_n; ++n)
    for (int m = 3; 2 * m <= n; ++m)
      cases.push_back({"unimodular n=" + std::to_string(n) + " m=" + std::to_string(m), [=]() -> std::optional<std::string> {
                         if (unimodular_test(n, m).exists()) return "every prime passes the parity test";
                         return std::nullopt;
                       }});
  return cases;
}

std::vector<Case> two_column_cases(int max_n) {
  std::vector<Case> cases;
  for (int n = 6; n <= max_n; ++n)
    cases.push_back({"two-column bases n=" + std::to_string(n), [=]() -> std::optional<std::string> {
                       const Partition lambda = two_column_partition(n, 2);
                       const auto& brute = gram_smith(lambda);
                       const auto group = two_column_22_group(n);
                       if (!isomorphic(group, assemble_group(brute.chain)))
                         return "group " + group.to_string() + " vs brute " + brute.chain.compact();
                       if (two_column_22_order(n) != brute.chain.product()) return "order formula differs";
                       const PairedBases b = two_column_22_bases(n);
                       const auto res = verify_trigonal_pairing(pairing_table(b.x, b.y), brute.chain.product());
                       if (!res.ok) return "trigonal bases: " + res.violation;
                       if (!(res.chain == brute.chain)) return "diagonal " + res.chain.compact();
                       return std::nullopt;
                     }});
  for (int n = 2; n <= max_n; ++n)
    for (int h = 1; h <= 3 && 2 * h <= n; ++h)
      cases.push_back({"two-column entries n=" + std::to_string(n) + " h=" + std::to_string(h),
                       [=]() -> std::optional<std::string> {
                         const Partition lambda = two_column_partition(n, h);
                         const SpechtBasis& basis = specht_basis(lambda);
                         const IntMatrix g = basis.gram(true);
                         for (std::size_t i = 0; i < basis.dim(); ++i)
                           for (std::size_t j = 0; j < basis.dim(); ++j) {
                             const auto xi = basis.tableaux()[i].column(1);
                             const auto eta = basis.tableaux()[j].column(1);
                             if (two_column_entry(n, h, xi, eta) != g(i, j))
                               return "entry " + std::to_string(i) + "," + std::to_string(j);
                           }
                         return std::nullopt;
                       }});
  return cases;
}

std::vector<Case> symmetric_cases(int max_n, std::vector<std::string>& notes) {
  std::vector<Case> cases;
  for (int n = 2; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (!lambda.is_symmetric()) continue;
      notes.push_back("");
      const std::size_t slot = notes.size() - 1;
      cases.push_back({"symmetric (" + lambda.to_string() + ")", [=, &notes]() -> std::optional<std::string> {
                         const auto r = symmetric_report(lambda);
                         notes[slot] = "(" + lambda.to_string() + ") H=" + to_decimal(r.H) + " m=" + to_decimal(r.m_jump) +
                                       " H/m integral: " + (r.H_over_m_integer ? "yes" : "no");
                         if (!r.H_over_m_square) return "H/m is not a rational square";
                         if (!r.middle_square) return "(n!/dim)/m is not the square of the middle divisor";
                         if (!r.gamma_divides_alpha_h) return "first divisor does not divide the hook bound";
                         return std::nullopt;
                       }});
    }
  return cases;
}

std::vector<Case> fixture_cases(const SuiteOptions& opts, std::vector<std::string>& notes) {
  std::vector<Case> cases;
  for (const Fixture& f : fixture_corpus()) {
    if (f.reference_only) {
      if (opts.include_reference) notes.push_back("reference-only " + f.id + ": " + f.description + " = " + f.expected);
      continue;
    }
    cases.push_back({"fixture " + f.id, f.check});
  }
  return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"two-row", "hook",       "large-prime", "duality",    "conm5",
                                              "james",   "regularity", "schaper",     "rectangular", "unimodular",
                                              "two-column", "symmetric", "fixtures"};
  return names;
}

int default_max_n(const std::string& suite) {
  static const std::map<std::string, int> defaults{
      {"two-row", 10}, {"hook", 9},    {"large-prime", 9}, {"duality", 7},    {"conm5", 8},     {"james", 8},     {"regularity", 8},
      {"schaper", 9},  {"rectangular", 7}, {"unimodular", 12}, {"two-column", 9}, {"symmetric", 9}, {"fixtures", 0}};
  auto it = defaults.find(suite);
  if (it == defaults.end()) throw ParseError("unknown suite '" + suite + "'");
  return it->second;
}

std::vector<std::string> run_cases(const std::vector<Case>& cases, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, cases.size()));
  std::vector<std::optional<std::string>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i].run();
      } catch (const std::exception& e) {
        results[i] = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (results[i]) out.push_back(cases[i].label + ": " + *results[i]);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteResult r;
  r.name = name;
  r.max_n = opts.max_n.value_or(default_max_n(name));
  const auto start = std::chrono::steady_clock::now();
  std::vector<Case> cases;
  if (name == "two-row") cases = two_row_cases(r.max_n);
  else if (name == "hook") cases = hook_cases(r.max_n);
  else if (name == "large-prime") cases = large_prime_cases(r.max_n);
  else if (name == "duality") cases = duality_cases(r.max_n);
  else if (name == "conm5") cases = conm5_cases(r.max_n);
  else if (name == "james") cases = james_cases(r.max_n);
  else if (name == "regularity") cases = regularity_cases(r.max_n);
  else if (name == "schaper") cases = schaper_cases(r.max_n);
  else if (name == "rectangular") cases = rectangular_cases(r.max_n);
  else if (name == "unimodular") cases = unimodular_cases(r.max_n);
  else if (name == "two-column") cases = two_column_cases(r.max_n);
  else if (name == "symmetric") cases = symmetric_cases(r.max_n, r.notes);
  else if (name == "fixtures") cases = fixture_cases(opts, r.notes);
  else throw ParseError("unknown suite '" + name + "'");
  r.cases = cases.size();
  r.mismatches = run_cases(cases, opts.threads);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opts) {
  if (name != "all") return {run_suite(name, opts)};
  std::vector<SuiteResult> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s, opts));
  return out;
}

}  // namespace specht::cli
