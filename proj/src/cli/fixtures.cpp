#include "specht/cli/fixtures.hpp"

#include "specht/analyses.hpp"
#include "specht/hook_forms.hpp"
#include "specht/hooks.hpp"
#include "specht/specht_basis.hpp"
#include "specht/two_column.hpp"
#include "specht/two_row.hpp"

namespace specht::cli {

namespace {

using Check = std::function<std::optional<std::string>()>;

Check chain_equals(const std::string& shape, const std::string& compact) {
  return [=]() -> std::optional<std::string> {
    const std::string got = gram_chain(parse_partition(shape)).compact();
    if (got == compact) return std::nullopt;
    return "chain of " + shape + " is " + got;
  };
}

// The printed rows list the first half of the chain plus the next block.
Check chain_starts_with(const std::string& shape, const std::string& prefix) {
  return [=]() -> std::optional<std::string> {
    const std::string got = gram_chain(parse_partition(shape)).compact();
    if (got.compare(0, prefix.size(), prefix) == 0 && (got.size() == prefix.size() || got[prefix.size()] == ' '))
      return std::nullopt;
    return "chain of " + shape + " is " + got;
  };
}

Fixture middle_jump_row(const std::string& shape, int m, int H, const std::string& prefix, bool reference_only) {
  Fixture f;
  f.id = "middle-jump-" + shape;
  f.description = "middle jump factor and diagonal hook product of the symmetric partition " + shape;
  f.expected = "m=" + std::to_string(m) + " H=" + std::to_string(H) + " divisors " + prefix + " ...";
  f.reference_only = reference_only;
  if (!reference_only) {
    auto prefix_check = chain_starts_with(shape, prefix);
    f.check = [=]() -> std::optional<std::string> {
      const SymmetricReport r = symmetric_report(parse_partition(shape));
      if (r.m_jump != m || r.H != H)
        return "got m=" + to_decimal(r.m_jump) + " H=" + to_decimal(r.H);
      return prefix_check();
    };
  }
  return f;
}

Fixture alpha_gamma_row(const std::string& shape, int alpha, int gamma) {
  Fixture f;
  f.id = "alpha-gamma-" + shape;
  f.description = "upper-diagonal hook product and first divisor of " + shape;
  f.expected = "alpha=" + std::to_string(alpha) + " gamma=" + std::to_string(gamma);
  f.check = [=]() -> std::optional<std::string> {
    const SymmetricReport r = symmetric_report(parse_partition(shape));
    if (r.alpha == alpha && r.gamma == gamma && r.gamma_divides_alpha_h) return std::nullopt;
    return "got alpha=" + to_decimal(r.alpha) + " gamma=" + to_decimal(r.gamma) +
           (r.gamma_divides_alpha_h ? "" : " (divisibility fails)");
  };
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back({"gram-2-2", "elementary divisors of (2,2)", "2 6", false, chain_equals("2,2", "2 6")});
  out.push_back({"gram-3-2-1", "elementary divisors of (3,2,1)", "1^4 3^4 15^4 45^4", false,
                 chain_equals("3,2,1", "1^4 3^4 15^4 45^4")});
  out.push_back({"gram-2-2-1-1", "elementary divisors of (2^2,1^2)", "4 20^3 40 80^4", false,
                 chain_equals("2,2,1,1", "4 20^3 40 80^4")});
  out.push_back({"gram-2-2-2-first", "first elementary divisor of (2^3)", "12", false,
                 []() -> std::optional<std::string> {
                   const Int d = gram_chain(Partition({2, 2, 2})).divisors.front();
                   if (d == 12) return std::nullopt;
                   return "got " + to_decimal(d);
                 }});
  out.push_back({"two-row-m1", "(n-1,1) has cokernel Z/n, 2 <= n <= 9", "Z/n", false,
                 []() -> std::optional<std::string> {
                   for (int n = 2; n <= 9; ++n) {
                     const auto g = assemble_group(gram_chain(Partition({n - 1, 1})));
                     if (!isomorphic(g, normalize_group({{Int(n), 1}}))) return "n=" + std::to_string(n) + ": " + g.to_string();
                   }
                   return std::nullopt;
                 }});
  out.push_back({"two-row-m2", "(n-2,2): p-part of Z/(n-1) + (Z/(n-2))^{n-1} for odd p, of Z/C(n-1,2) + (Z/(n-2))^{n-2} at p=2, 4 <= n <= 10",
                 "see description", false, []() -> std::optional<std::string> {
                   for (int n = 4; n <= 10; ++n) {
                     const auto& chain = gram_chain(Partition({n - 2, 2}));
                     for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
                       GroupDecomposition want =
                           p == 2 ? normalize_group({{binomial(n - 1, 2), 1}, {Int(n - 2), static_cast<std::uint64_t>(n - 2)}})
                                  : normalize_group({{Int(n - 1), 1}, {Int(n - 2), static_cast<std::uint64_t>(n - 1)}});
                       if (!(p_part_group(want, p) == p_part_group(chain, p)))
                         return "n=" + std::to_string(n) + " p=" + std::to_string(p);
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"hook-4-2-pairing", "pairing table of the trigonalizing bases of (2,1^2)", "[[2,-2,2],[0,8,0],[0,0,8]]", false,
                 []() -> std::optional<std::string> {
                   const HookBases b = hook_trigonal_bases(4, 2);
                   const IntMatrix t = pairing_table(b.x, b.y);
                   const IntMatrix want = IntMatrix::from_rows(std::vector<std::vector<long long>>{{2, -2, 2}, {0, 8, 0}, {0, 0, 8}});
                   if (t == want) return std::nullopt;
                   return "got " + matrix_to_json(t);
                 }});
  out.push_back({"hook-14-8-layers", "Jantzen layers of (6,1^8) at p=2 (formula side only)",
                 "3[14]_7 + 2[13,1]_8 + 2[12,2]_7 + [11,3]_8 + [10,4]_7 + [9,5]_8", false,
                 []() -> std::optional<std::string> {
                   FormalSum want;
                   want.add(3, Partition({14}), 7);
                   want.add(2, Partition({13, 1}), 8);
                   want.add(2, Partition({12, 2}), 7);
                   want.add(1, Partition({11, 3}), 8);
                   want.add(1, Partition({10, 4}), 7);
                   want.add(1, Partition({9, 5}), 8);
                   const FormalSum got = hook_layers(14, 8, 2);
                   for (const auto& t : want.terms)
                     if (got.coefficient(t.label, t.layer) != t.coefficient) return "got " + got.to_string();
                   for (const auto& t : got.terms)
                     if (want.coefficient(t.label, t.layer) != t.coefficient) return "got " + got.to_string();
                   return std::nullopt;
                 }});
  out.push_back({"two-column-6-entries", "scaled pairings of <3,6> and <3,4> with the standard basis of (2^2,1^2)",
                 "<3,6>: -3 3 12 3 2 3 2 -3 -2; <3,4>: 2 3 -3 -2 -3 3 2 12 3", false,
                 []() -> std::optional<std::string> {
                   const std::vector<std::vector<int>> cols{{5, 6}, {4, 6}, {3, 6}, {2, 6}, {4, 5}, {3, 5}, {2, 5}, {3, 4}, {2, 4}};
                   const std::vector<std::pair<std::vector<int>, std::vector<int>>> rows{
                       {{3, 6}, {-3, 3, 12, 3, 2, 3, 2, -3, -2}}, {{3, 4}, {2, 3, -3, -2, -3, 3, 2, 12, 3}}};
                   const Int scale = james_factor(Partition({2, 2, 1, 1}));
                   for (const auto& [xi, want] : rows)
                     for (std::size_t j = 0; j < cols.size(); ++j) {
                       const Int formula = two_column_entry(6, 2, xi, cols[j]);
                       const Int direct = pair(two_column_polytabloid(6, xi), two_column_polytabloid(6, cols[j])) / scale;
                       if (formula != want[j] || direct != want[j])
                         return "entry " + std::to_string(j) + " for <" + std::to_string(xi[0]) + "," + std::to_string(xi[1]) +
                                ">: formula " + to_decimal(formula) + ", direct " + to_decimal(direct);
                     }
                   return std::nullopt;
                 }});
  out.push_back({"two-column-6-group", "closed-form group of (2^2,1^2)", "(Z/4) + (Z/20)^3 + (Z/40) + (Z/80)^4", false,
                 []() -> std::optional<std::string> {
                   const auto g = two_column_22_group(6);
                   if (g.to_string() == "(Z/4) + (Z/20)^3 + (Z/40) + (Z/80)^4") return std::nullopt;
                   return "got " + g.to_string();
                 }});
  out.push_back(alpha_gamma_row("3,2,1", 3, 1));
  out.push_back(alpha_gamma_row("4,1,1,1", 6, 6));
  out.push_back(alpha_gamma_row("4,2,1,1", 8, 2));
  out.push_back(alpha_gamma_row("3,3,2", 8, 8));
  out.push_back(alpha_gamma_row("3,3,3", 24, 24));
  out.push_back(alpha_gamma_row("5,1,1,1,1", 24, 24));
  out.push_back(middle_jump_row("2,2", 3, 3, "2 6", false));
  out.push_back(middle_jump_row("3,2,1", 5, 5, "1^4 3^4 15^4", false));
  out.push_back(middle_jump_row("3,3,2", 15, 15, "8^21 120^21", false));
  out.push_back(middle_jump_row("4,2,1,1", 7, 7, "2^14 8^31 56^31", false));
  out.push_back(middle_jump_row("3,3,3", 15, 15, "24^21 360^21", false));
  out.push_back(middle_jump_row("4,3,2,1", 21, 21, "1^41 3^176 15^167 315^167", true));
  out.push_back(middle_jump_row("4,3,3,1", 21, 21, "8^372 40^222 840^222", true));
  out.push_back(middle_jump_row("4,4,2,2", 35, 35, "8^131 24^353 72^836 2520^836", true));
  out.push_back(middle_jump_row("4,4,3,2", 35, 35, "16^428 48^2081 144^1781 5040^1781", true));
  out.push_back(middle_jump_row("5,2,1,1,1", 9, 9, "6^56 30^168 270^168", true));
  out.push_back(middle_jump_row("5,3,2,1,1", 3, 27, "2^1046 4^460 8^44 16^386 48^1560 144^354 432^354", true));
  out.push_back(middle_jump_row("5,3,3,1,1", 3, 27, "4^2329 20^181 40^857 120^2559 360^2082 1080^2082", true));
  out.push_back(middle_jump_row("6,2,1,1,1,1", 11, 11, "24^208 48^2 144^840 1584^840", true));
  out.push_back(middle_jump_row("7,2,1,1,1,1,1", 13, 13, "120^792 840^3960 10920^3960", true));
  out.push_back({"gram-9-2-2-1", "elementary divisors of (9,2^2,1); outer hook length 12",
                 "4^792 8^3421 120^493 960^714 2880^586", true, nullptr});
  out.push_back({"layers-4-3-2-2-1", "Jantzen layers of (4,3,2^2,1) at p=2",
                 "[8,3,1]_2 + [6,5,1]_3 + [10,2]_4 + [10,2]_7 + 3[12]_4 + 2[12]_7 + [6,4,2]_5 + [6,4,2]_8 + [7,3,2]_5 + "
                 "[8,4]_5 + [7,5]_6 + [7,5]_7 + [11,1]_6 + 4[11,1]_9 + 2[9,3]_7 + [9,3]_9 + [5,4,2,1]_10",
                 true, nullptr});
  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_corpus() {
  static const std::vector<Fixture> corpus = build();
  return corpus;
}

}  // namespace specht::cli
