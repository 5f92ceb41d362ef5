#include <doctest.h>

#include <random>

#include "sgfl/error.hpp"
#include "sgfl/kunz.hpp"
#include "support/oracles.hpp"

using namespace sgfl;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sgfl::Error");
  return ErrorKind::Parse;
}

KunzPoint point5(std::vector<std::int64_t> x) { return KunzPoint(numerical_context(5), std::move(x)); }

Element value_of(const KunzPoint& p, const Exponents& c) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * atom_value(p, p.atoms()[i]);
  return Element{v};
}

/// The two-part inequality system characterizing cominimality, evaluated at q
/// against the pseudominimal set of p.
bool cominimal_system(const KunzPoint& p, const KunzPoint& q) {
  const auto& all = p.min_inf_factorizations();
  auto pmin = pseudomin(p);
  auto in_pmin = [&](const InfFactorization& f) { return std::find(pmin.begin(), pmin.end(), f) != pmin.end(); };
  for (const auto& c : all) {
    if (in_pmin(c)) {
      for (const auto& o : all) {
        if (o == c) continue;
        if (sq_leq(q, o.c, c.c) && !sq_leq(q, c.c, o.c)) return false;
      }
    } else {
      bool witness = std::any_of(all.begin(), all.end(),
                                 [&](const InfFactorization& o) { return sq_leq(q, o.c, c.c) && !sq_leq(q, c.c, o.c); });
      if (!witness) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("numerical contexts") {
  auto c5 = numerical_context(5);
  CHECK(c5.d[1][4] == 1);
  CHECK(c5.d[1][2] == 0);
  CHECK(numerical_context(2).d[1][1] == 1);
  CHECK(kind_of([] { numerical_context(1); }) == ErrorKind::BadModulus);
  for (int a = 0; a < 5; ++a) {
    CHECK(c5.d[a][0] == 0);
    for (int b = 0; b < 5; ++b) CHECK(c5.d[a][b] == c5.d[b][a]);
  }
}

TEST_CASE("points of semigroups and back") {
  auto ctx = numerical_context(5);
  CHECK(point_of_semigroup(ctx, Semigroup::numerical({5, 6, 8})).x() == std::vector<std::int64_t>{0, 1, 2, 1, 2});
  CHECK(point_of_semigroup(ctx, Semigroup::numerical({5, 13, 16})).x() == std::vector<std::int64_t>{0, 3, 6, 2, 5});
  CHECK(point_of_semigroup(numerical_context(2), Semigroup::numerical({2, 3})).x() == std::vector<std::int64_t>{0, 1});
  CHECK(kind_of([&] { point_of_semigroup(ctx, Semigroup::numerical({6, 7})); }) == ErrorKind::MNotInS);
  CHECK(kind_of([&] { point_of_semigroup(ctx, Semigroup::create({{5, 0}, {0, 1}}, 2)); }) == ErrorKind::NotNumerical);
  CHECK(semigroup_of_point(point5({0, 1, 2, 1, 2})).to_string() == "<5, 6, 8>");
  CHECK(semigroup_of_point(point5({0, 11, 22, 32, 43})).to_string() == "<5, 56, 163>");
  CHECK(semigroup_of_point(point5({0, 3, 6, 8, 11})).to_string() == "<5, 16, 43>");
}

TEST_CASE("point validation") {
  CHECK(kind_of([] { point5({0, 1, 2, 1}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { point5({1, 1, 2, 1, 2}); }) == ErrorKind::InequalityViolated);
  CHECK(kind_of([] { point5({0, -1, 2, 1, 2}); }) == ErrorKind::InequalityViolated);
  try {
    point5({0, 1, 5, 1, 2});
    FAIL("expected InequalityViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InequalityViolated);
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
  }
}

TEST_CASE("poset, product and atoms of (0,1,2,1,2)") {
  auto p = point5({0, 1, 2, 1, 2});
  std::vector<std::pair<int, int>> nontrivial;
  for (const auto& r : p.relations()) {
    if (r.first != r.second) nontrivial.push_back(r);
  }
  CHECK(nontrivial == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {3, 4}});
  CHECK(p.oplus(1, 1) == 2);
  CHECK(p.oplus(1, 2) == kInfinity);
  CHECK(p.oplus(3, kInfinity) == kInfinity);
  CHECK(p.oplus(kInfinity, 0) == kInfinity);
  CHECK(p.atoms() == std::vector<int>{1, 3});
  CHECK(atom_value(p, 1) == 6);
  CHECK(atom_value(p, 3) == 8);
  CHECK(p.length_extremes(3) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(p.length_extremes(0) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(p.length_extremes(2) == std::pair<std::int64_t, std::int64_t>{2, 2});
  CHECK(kind_of([&] { p.length_extremes(7); }) == ErrorKind::NoFactorization);

  std::vector<Exponents> inf;
  for (const auto& f : p.min_inf_factorizations()) inf.push_back(f.c);
  CHECK(inf == std::vector<Exponents>{{0, 2}, {2, 1}, {3, 0}});

  auto q = point5({0, 11, 22, 32, 43});
  CHECK(q.relations() == p.relations());
  CHECK(q.equality_set() == p.equality_set());

  auto two = KunzPoint(numerical_context(2), {0, 1});
  CHECK(two.relations() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(two.atoms() == std::vector<int>{1});
}

TEST_CASE("structure constants and the preorder") {
  auto ctx = numerical_context(5);
  std::vector<int> atoms{1, 3};
  CHECK(structure_constants(ctx, atoms, Exponents{3, 0}, Exponents{0, 2}).d == 0);
  CHECK(structure_constants(ctx, atoms, Exponents{3, 0}, Exponents{0, 2}).b == 0);
  CHECK(structure_constants(ctx, atoms, Exponents{0, 2}, Exponents{3, 0}).b == 1);
  auto p = point5({0, 1, 2, 1, 2});
  CHECK_FALSE(sq_leq(p, Exponents{3, 0}, Exponents{0, 2}));
  CHECK_FALSE(sq_leq(p, Exponents{0, 2}, Exponents{3, 0}));
  CHECK(sq_leq(p, Exponents{2, 1}, Exponents{2, 1}));
  CHECK(pseudomin(p).size() == 3);
}

TEST_CASE("cominimality") {
  auto p = point5({0, 1, 2, 1, 2});
  CHECK(cominimal(p, point5({0, 11, 22, 32, 43})));
  CHECK(cominimal(p, point5({0, 3, 6, 8, 11})));
  CHECK(cominimal(p, point5({0, 3, 6, 2, 5})));
  CHECK(cominimal(p, p));
  CHECK(pseudomin(point5({0, 3, 6, 2, 5})) == pseudomin(p));
  CHECK(kind_of([&] { cominimal(p, point5({0, 1, 1, 1, 1})); }) == ErrorKind::DifferentFace);
}

TEST_CASE("reducedness and m as an atom") {
  auto p = point5({0, 1, 2, 1, 2});
  CHECK(is_reduced_point(p));
  CHECK(is_m_atom_point(p).is_atom);
  auto z = point5({0, 0, 0, 0, 0});
  auto check = is_m_atom_point(z);
  CHECK_FALSE(check.is_atom);
  std::int64_t total = 0;
  for (std::size_t a = 0; a < check.witness.size(); ++a) total += check.witness[a] * static_cast<std::int64_t>(a);
  CHECK(total == 5);
  CHECK(kind_of([&] { main_verdict(z, Formula::Longest); }) == ErrorKind::MNotAtomAtPoint);
}

TEST_CASE("main verdict on the face of (0,1,2,1,2)") {
  auto v = main_verdict(point5({0, 1, 2, 1, 2}), Formula::Longest);
  CHECK(v.holds);
  REQUIRE(v.inequalities.size() == 2);
  CHECK(v.inequalities[1].text == "-x_3 + 3x_1 >= 2");
  CHECK(v.inequalities[1].lhs == 2);
  CHECK(v.inequalities[0].text == "-x_0 + 2x_1 + x_3 >= 2");
  CHECK_FALSE(main_verdict(point5({0, 11, 22, 32, 43}), Formula::Longest).holds);
  CHECK(main_verdict(point5({0, 3, 6, 2, 5}), Formula::Longest).holds);
  CHECK_FALSE(main_verdict(point5({0, 3, 6, 8, 11}), Formula::Longest).holds);
  auto s = main_verdict(point5({0, 1, 2, 1, 2}), Formula::Shortest);
  CHECK(s.inequalities.size() == 3);
  for (const auto& t : s.inequalities) CHECK(t.sense == Sense::LessEqual);
}

TEST_CASE("carry identities and the iterated inequality") {
  std::mt19937_64 rng(3);
  for (int m = 3; m <= 6; ++m) {
    auto ctx = numerical_context(m);
    std::vector<int> residues;
    for (int a = 0; a < m; ++a) residues.push_back(a);
    auto points = oracle::kunz_points(m, 3);
    std::uniform_int_distribution<std::int64_t> coord(0, 4);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    for (int k = 0; k < 200; ++k) {
      Exponents c(m), c2(m), sum(m);
      for (int a = 0; a < m; ++a) {
        c[a] = coord(rng);
        c2[a] = coord(rng);
        sum[a] = c[a] + c2[a];
      }
      int b = ctx.sum(residues, c), b2 = ctx.sum(residues, c2);
      CHECK(ctx.carry(residues, c) + ctx.carry(residues, c2) + ctx.d[b][b2] == ctx.carry(residues, sum));
      const auto& x = points[pick(rng)];
      std::int64_t lhs = ctx.carry(residues, c);
      for (int a = 0; a < m; ++a) lhs += c[a] * x[a];
      CHECK(lhs >= x[b]);
    }
  }
}

TEST_CASE("product algebra, translation and the preorder on small points") {
  for (int m = 2; m <= 5; ++m) {
    auto ctx = numerical_context(m);
    for (const auto& x : oracle::kunz_points(m, 4)) {
      KunzPoint p(ctx, x);
      std::vector<int> all{kInfinity};
      for (int a = 0; a < m; ++a) all.push_back(a);
      for (int a : all) {
        for (int b : all) {
          CHECK(p.oplus(a, b) == p.oplus(b, a));
          for (int c : all) CHECK(p.oplus(p.oplus(a, b), c) == p.oplus(a, p.oplus(b, c)));
        }
      }
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          bool divides = false;
          for (int c = 0; c < m && !divides; ++c) divides = p.oplus(a, c) == b;
          CHECK(divides == p.precedes(a, b));
        }
      }
      if (!is_m_atom_point(p).is_atom) continue;
      auto s = semigroup_of_point(p);
      CHECK(point_of_semigroup(ctx, s).x() == x);
      std::vector<Element> expected_atoms;
      for (int a : p.atoms()) expected_atoms.push_back(Element{atom_value(p, a)});
      std::sort(expected_atoms.begin(), expected_atoms.end());
      std::vector<Element> others;
      for (const auto& g : s.generators()) {
        if (g != Element{m}) others.push_back(g);
      }
      REQUIRE(others == expected_atoms);
      auto report = min_repl(s, Element{m});
      std::vector<Exponents> translated;
      for (const auto& f : p.min_inf_factorizations()) {
        Exponents c(report.atom_index.size(), 0);
        for (std::size_t i = 0; i < f.c.size(); ++i) {
          Element g{atom_value(p, p.atoms()[i])};
          for (std::size_t j = 0; j < report.atom_index.size(); ++j) {
            if (s.generators()[report.atom_index[j]] == g) c[j] = f.c[i];
          }
        }
        translated.push_back(c);
      }
      std::sort(translated.begin(), translated.end());
      CHECK(translated == report.minimal_vectors);
      for (const auto& f : p.min_inf_factorizations()) {
        for (const auto& g : p.min_inf_factorizations()) {
          CHECK(sq_leq(p, f.c, g.c) == s.divides(value_of(p, f.c), value_of(p, g.c)));
        }
      }
    }
  }
}

TEST_CASE("face invariance and the cominimality system") {
  std::size_t agreeing = 0, differing = 0;
  for (int m = 3; m <= 5; ++m) {
    auto ctx = numerical_context(m);
    std::map<std::vector<std::pair<int, int>>, std::vector<std::vector<std::int64_t>>> faces;
    for (const auto& x : oracle::kunz_points(m, 5)) {
      KunzPoint p(ctx, x);
      if (is_m_atom_point(p).is_atom) faces[p.equality_set()].push_back(x);
    }
    for (const auto& [face, members] : faces) {
      std::size_t n = std::min<std::size_t>(members.size(), 6);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          KunzPoint p(ctx, members[i]), q(ctx, members[j]);
          bool co = cominimal(p, q);
          CHECK(co == cominimal_system(p, q));
          ++(co ? agreeing : differing);
          CHECK(p.min_inf_factorizations() == q.min_inf_factorizations());
          if (!co) continue;
          for (Formula f : {Formula::Longest, Formula::Shortest}) {
            auto a = main_verdict(p, f), b = main_verdict(q, f);
            REQUIRE(a.inequalities.size() == b.inequalities.size());
            for (std::size_t k = 0; k < a.inequalities.size(); ++k) {
              CHECK(a.inequalities[k].c == b.inequalities[k].c);
              CHECK(a.inequalities[k].coefficients == b.inequalities[k].coefficients);
              CHECK(a.inequalities[k].rhs == b.inequalities[k].rhs);
            }
          }
        }
      }
    }
  }
  CHECK(agreeing > 0);
  CHECK(differing > 0);
}

TEST_CASE("polytope verdicts equal the reduced semigroup criterion on small points") {
  for (int m = 3; m <= 5; ++m) {
    auto ctx = numerical_context(m);
    for (const auto& x : oracle::kunz_points(m, 5)) {
      KunzPoint p(ctx, x);
      if (!is_m_atom_point(p).is_atom) continue;
      auto s = semigroup_of_point(p);
      auto report = min_repl(s, Element{m});
      for (Formula f : {Formula::Longest, Formula::Shortest}) {
        REQUIRE(main_verdict(p, f).holds == check_formula(s, report, f).holds);
      }
    }
  }
}

TEST_CASE("a face holds at most one point whose semigroup has m as its largest atom") {
  for (int m = 3; m <= 6; ++m) {
    auto ctx = numerical_context(m);
    std::map<std::vector<std::pair<int, int>>, int> per_face;
    std::size_t found = 0;
    for (const auto& x : oracle::kunz_points(m, 6)) {
      KunzPoint p(ctx, x);
      if (!is_m_atom_point(p).is_atom) continue;
      auto s = semigroup_of_point(p);
      if (s.generators().back() != Element{m}) continue;
      for (int a : p.atoms()) CHECK(x[a] == 0);
      ++per_face[p.equality_set()];
      ++found;
    }
    CHECK(found > 0);
    for (const auto& [face, count] : per_face) CHECK(count == 1);
  }
}
