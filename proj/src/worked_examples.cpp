#include "sgfl/worked_examples.hpp"

#include <functional>
#include <sstream>

#include "sgfl/error.hpp"
#include "sgfl/kunz.hpp"
#include "sgfl/minrepl.hpp"
#include "sgfl/verdict.hpp"

namespace sgfl {

std::string_view to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::Error: return "error";
  }
  return "unknown";
}

namespace {

std::string vec(std::span<const std::int64_t> c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "}";
}

std::string elements(const std::vector<Element>& es) {
  std::vector<std::string> parts;
  for (const auto& e : es) parts.push_back(e.to_string());
  return join(parts);
}

std::string vectors(const std::vector<Exponents>& vs) {
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(vec(v));
  return join(parts);
}

std::string flag(bool b) { return b ? "true" : "false"; }

/// Minimal vectors with their values, in the given coordinate order of atoms.
std::string minrepl_text(const MinReplReport& r) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < r.minimal_vectors.size(); ++i) {
    parts.push_back(vec(r.minimal_vectors[i]) + "->" + r.evaluations[i].to_string());
  }
  return join(parts);
}

std::string verdict_text(const Verdict& v) {
  std::string out = v.holds ? "holds" : "fails";
  for (const auto& c : v.counterexamples) {
    out += " at " + c.element.to_string() + " (" + std::to_string(c.value) + " vs " + std::to_string(c.shifted) + ")";
    break;
  }
  return out;
}

std::string inf_text(const std::vector<InfFactorization>& fs) {
  std::vector<std::string> parts;
  for (const auto& f : fs) parts.push_back(vec(f.c));
  return join(parts);
}

struct Case {
  std::string id;
  std::string expected;
  std::function<std::string()> actual;
};

}  // namespace

std::vector<ExampleRow> run_worked_examples(const WorkedExampleOptions& options) {
  const auto& so = options.search;
  const Semigroup s4 = Semigroup::numerical({10, 12, 21, 38});
  const Semigroup z2 = Semigroup::create({{2, 0}, {3, 1}, {0, 5}}, 2);
  const Semigroup z5 = Semigroup::create({{3, 0}, {7, 0}, {11, 0}, {6, 1}, {0, 3}}, 2);
  const Semigroup s3 = Semigroup::numerical({6, 9, 20});
  const Semigroup s568 = Semigroup::numerical({5, 6, 8});
  const KunzContext ctx5 = numerical_context(5);
  auto point = [&](std::vector<std::int64_t> x) { return KunzPoint(ctx5, std::move(x)); };
  auto with_candidates = [&](const Semigroup& s, const Element& m) {
    auto r = min_repl(s, m, so);
    candidate_sets(s, r);
    return r;
  };
  auto lengths = [&](const Semigroup& s, const Element& v) {
    auto l = length_summary(s, v, std::nullopt, so);
    return "L=" + std::to_string(l.longest) + " l=" + std::to_string(l.shortest);
  };
  auto verdict_at = [&](const Semigroup& s, Formula f) {
    std::vector<std::string> parts;
    for (const auto& g : s.generators()) parts.push_back(g.to_string() + ":" + verdict_text(check_formula(s, g, f, so)));
    return join(parts);
  };
  auto kunz_holds = [&](std::vector<std::int64_t> x) {
    auto v = main_verdict(point(std::move(x)), Formula::Longest);
    std::string out = v.holds ? "holds" : "fails";
    for (const auto& t : v.inequalities) out += "; " + t.text + " (lhs " + std::to_string(t.lhs) + ")";
    return out;
  };

  std::vector<Case> cases{
      {"semigroup.numerical-four.create", "<10, 12, 21, 38> w=1",
       [&] { return s4.to_string() + " w=" + s4.grading().to_string(); }},
      {"semigroup.affine-three.create", "<(2,0), (3,1), (0,5)> w=(1,1)",
       [&] { return z2.to_string() + " w=" + z2.grading().to_string(); }},
      {"semigroup.numerical-four.contains-48", "true", [&] { return flag(s4.contains(Element{48})); }},
      {"semigroup.numerical-four.divides-48-84", "true", [&] { return flag(s4.divides(Element{48}, Element{84})); }},
      {"semigroup.numerical-four.divides-48-42", "false", [&] { return flag(s4.divides(Element{48}, Element{42})); }},
      {"semigroup.five-six-eight.apery-5", "[0,6,12,8,14]",
       [&] {
         auto ap = s568.apery_set(5);
         std::string out = "[";
         for (std::size_t i = 0; i < ap.size(); ++i) out += (i ? "," : "") + std::to_string(ap[i]);
         return out + "]";
       }},
      {"factorization.numerical-four.z-48", "{(0,4,0,0), (1,0,0,1)}",
       [&] { return vectors(factorizations(s4, Element{48}, so)); }},
      {"factorization.numerical-four.L-48", "4", [&] { return std::to_string(longest_factorization(s4, Element{48}, so).length); }},
      {"factorization.numerical-four.l-48", "2", [&] { return std::to_string(shortest_factorization(s4, Element{48}, so).length); }},
      {"factorization.affine-three.lengths-30-10", "L=17 l=10", [&] { return lengths(z2, Element{30, 10}); }},
      {"factorization.affine-three.L-27-9", "9", [&] { return std::to_string(longest_factorization(z2, Element{27, 9}, so).length); }},
      {"factorization.affine-three.z-27-9-has-9e2", "true",
       [&] {
         auto z = factorizations(z2, Element{27, 9}, so);
         return flag(std::find(z.begin(), z.end(), Exponents{0, 9, 0}) != z.end());
       }},
      {"factorization.affine-three.longest-witness-30-10", "(15,0,2)",
       [&] { return vec(length_summary(z2, Element{30, 10}, std::nullopt, so).witness_longest); }},
      {"factorization.affine-three.shortest-witness-30-10", "(0,10,0)",
       [&] { return vec(length_summary(z2, Element{30, 10}, std::nullopt, so).witness_shortest); }},
      {"minrepl.numerical-four.m10", "{(0,0,2)->76, (0,2,0)->42, (1,0,1)->50, (4,0,0)->48}",
       [&] { return minrepl_text(min_repl(s4, Element{10}, so)); }},
      {"minrepl.numerical-four.m38",
       "{(0,0,4)->84, (0,3,2)->78, (0,4,0)->48, (1,2,2)->76, (2,0,2)->62, (4,3,0)->76, (5,0,0)->50}",
       [&] { return minrepl_text(min_repl(s4, Element{38}, so)); }},
      {"minrepl.numerical-four.m10.m1", "{48}", [&] { return elements(with_candidates(s4, Element{10}).m1); }},
      {"minrepl.numerical-four.m10.n1", "{48}", [&] { return elements(with_candidates(s4, Element{10}).n1); }},
      {"minrepl.numerical-four.m38.m2", "{48, 50, 76}", [&] { return elements(with_candidates(s4, Element{38}).m2); }},
      {"minrepl.numerical-four.m38.n2", "{48}", [&] { return elements(with_candidates(s4, Element{38}).n2); }},
      {"minrepl.affine-three.m-2-0", "{(10,0)->(30,10)}", [&] { return minrepl_text(min_repl(z2, Element{2, 0}, so)); }},
      {"minrepl.affine-three.m-3-1", "{(15,2)->(30,10)}", [&] { return minrepl_text(min_repl(z2, Element{3, 1}, so)); }},
      {"minrepl.affine-three.m-0-5", "{(0,10)->(30,10)}", [&] { return minrepl_text(min_repl(z2, Element{0, 5}, so)); }},
      {"minrepl.affine-five.m-3-0",
       "{(0,0,3,0)->(18,3), (0,2,0,0)->(22,0), (1,1,0,0)->(18,0), (2,0,0,0)->(14,0)}",
       [&] { return minrepl_text(min_repl(z5, Element{3, 0}, so)); }},
      {"minrepl.affine-five.m-3-0.m1", "{}", [&] { return elements(with_candidates(z5, Element{3, 0}).m1); }},
      {"verdict.numerical-four.candidate-atoms", "longest {10}, shortest {38}",
       [&] {
         return "longest " + elements(candidate_atoms(s4, Formula::Longest)) + ", shortest " +
                elements(candidate_atoms(s4, Formula::Shortest));
       }},
      {"verdict.numerical-four.longest-m10", "fails at 48 (4 vs 2)",
       [&] { return verdict_text(check_formula(s4, Element{10}, Formula::Longest, so)); }},
      {"verdict.numerical-four.shortest-m38", "holds; l(48)=2, l(10)+1=2",
       [&] {
         auto v = check_formula(s4, Element{38}, Formula::Shortest, so);
         std::string out = verdict_text(v);
         for (const auto& c : v.checked) {
           out += "; l(" + c.element.to_string() + ")=" + std::to_string(c.value) + ", l(" +
                  (c.element - v.m).to_string() + ")+1=" + std::to_string(c.shifted);
         }
         return out;
       }},
      {"verdict.affine-three.longest", "{(2,0):holds, (3,1):fails at (30,10) (17 vs 10), (0,5):holds}",
       [&] { return verdict_at(z2, Formula::Longest); }},
      {"verdict.affine-three.shortest", "{(2,0):fails at (30,10) (10 vs 17), (3,1):holds, (0,5):fails at (30,10) (10 vs 17)}",
       [&] { return verdict_at(z2, Formula::Shortest); }},
      {"verdict.affine-five.longest-m-3-0", "holds",
       [&] { return verdict_text(check_formula(z5, Element{3, 0}, Formula::Longest, so)); }},
      {"verdict.six-nine-twenty.longest-m6", "minrepl holds, embdim3 holds, oracle holds",
       [&] {
         return "minrepl " + verdict_text(check_formula(s3, Element{6}, Formula::Longest, so)) + ", embdim3 " +
                verdict_text(embdim3_check(s3, Formula::Longest, so)) + ", oracle " +
                verdict_text(oracle_scan(s3, Element{6}, Formula::Longest));
       }},
      {"verdict.six-nine-twenty.shortest-m20", "minrepl holds, embdim3 holds, oracle holds",
       [&] {
         return "minrepl " + verdict_text(check_formula(s3, Element{20}, Formula::Shortest, so)) + ", embdim3 " +
                verdict_text(embdim3_check(s3, Formula::Shortest, so)) + ", oracle " +
                verdict_text(oracle_scan(s3, Element{20}, Formula::Shortest));
       }},
      {"verdict.five-six-eight.embdim3-longest", "holds", [&] { return verdict_text(embdim3_check(s568, Formula::Longest, so)); }},
      {"kunz.five-six-eight.point", "(0,1,2,1,2)", [&] { return vec(point_of_semigroup(ctx5, s568).x()); }},
      {"kunz.five-thirteen-sixteen.point", "(0,3,6,2,5)",
       [&] { return vec(point_of_semigroup(ctx5, Semigroup::numerical({5, 13, 16})).x()); }},
      {"kunz.five-six-eight.relations", "{0<1, 0<2, 0<3, 0<4, 1<2, 1<4, 3<4}",
       [&] {
         std::vector<std::string> parts;
         for (const auto& [a, b] : point({0, 1, 2, 1, 2}).relations()) {
           if (a != b) parts.push_back(std::to_string(a) + "<" + std::to_string(b));
         }
         return join(parts);
       }},
      {"kunz.five-six-eight.min-inf", "{(0,2), (2,1), (3,0)}",
       [&] { return inf_text(point({0, 1, 2, 1, 2}).min_inf_factorizations()); }},
      {"kunz.five-six-eight.pseudomin", "{(0,2), (2,1), (3,0)}", [&] { return inf_text(pseudomin(point({0, 1, 2, 1, 2}))); }},
      {"kunz.five-six-eight.minrepl-5", "{(0,2)->16, (2,1)->20, (3,0)->18}",
       [&] { return minrepl_text(min_repl(s568, Element{5}, so)); }},
      {"kunz.b-constant.30-02", "0",
       [&] {
         std::vector<int> atoms{1, 3};
         return std::to_string(structure_constants(ctx5, atoms, Exponents{3, 0}, Exponents{0, 2}).b);
       }},
      {"kunz.b-constant.02-30", "1",
       [&] {
         std::vector<int> atoms{1, 3};
         return std::to_string(structure_constants(ctx5, atoms, Exponents{0, 2}, Exponents{3, 0}).b);
       }},
      {"kunz.verdict.0-1-2-1-2", "holds; -x_0 + 2x_1 + x_3 >= 2 (lhs 3); -x_3 + 3x_1 >= 2 (lhs 2)", [&] { return kunz_holds({0, 1, 2, 1, 2}); }},
      {"kunz.verdict.0-3-6-2-5", "holds; -x_0 + 2x_1 + x_3 >= 2 (lhs 8); -x_3 + 3x_1 >= 2 (lhs 7)", [&] { return kunz_holds({0, 3, 6, 2, 5}); }},
      {"kunz.verdict.0-11-22-32-43", "fails; -x_0 + 2x_1 + x_3 >= 2 (lhs 54); -x_3 + 3x_1 >= 2 (lhs 1)",
       [&] { return kunz_holds({0, 11, 22, 32, 43}); }},
      {"kunz.verdict.0-3-6-8-11", "fails; -x_0 + 2x_1 + x_3 >= 2 (lhs 14); -x_3 + 3x_1 >= 2 (lhs 1)", [&] { return kunz_holds({0, 3, 6, 8, 11}); }},
      {"kunz.rho.0-1-2-1-2", "<5, 6, 8>", [&] { return semigroup_of_point(point({0, 1, 2, 1, 2})).to_string(); }},
      {"kunz.rho.0-3-6-2-5", "<5, 13, 16>", [&] { return semigroup_of_point(point({0, 3, 6, 2, 5})).to_string(); }},
      {"kunz.rho.0-11-22-32-43", "<5, 56, 163>", [&] { return semigroup_of_point(point({0, 11, 22, 32, 43})).to_string(); }},
      {"kunz.rho.0-3-6-8-11", "<5, 16, 43>", [&] { return semigroup_of_point(point({0, 3, 6, 8, 11})).to_string(); }},
      {"kunz.cominimal.0-11-22-32-43", "true",
       [&] { return flag(cominimal(point({0, 1, 2, 1, 2}), point({0, 11, 22, 32, 43}))); }},
      {"kunz.cominimal.0-3-6-2-5", "true", [&] { return flag(cominimal(point({0, 1, 2, 1, 2}), point({0, 3, 6, 2, 5}))); }},
      {"kunz.cominimal.0-3-6-8-11", "true", [&] { return flag(cominimal(point({0, 1, 2, 1, 2}), point({0, 3, 6, 8, 11}))); }},
  };

  std::vector<ExampleRow> rows;
  for (auto& c : cases) {
    ExampleRow row;
    row.id = c.id;
    row.expected = c.expected;
    if (options.perturb.count(c.id)) row.expected += " [perturbed]";
    try {
      row.actual = c.actual();
      row.status = row.actual == row.expected ? RowStatus::Pass : RowStatus::Fail;
    } catch (const Error& e) {
      row.actual = e.what();
      row.status = RowStatus::Error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sgfl
