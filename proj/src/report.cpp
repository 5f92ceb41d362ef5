#include "sgfl/report.hpp"

namespace sgfl {

Json to_json(const Element& e) {
  if (e.dim() == 1) return e[0];
  Json out = Json::array();
  for (auto c : e.coords()) out.push_back(c);
  return out;
}

namespace {

Json elements_json(const std::vector<Element>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

Json checked_json(const CheckedElement& c) {
  return Json{{"element", to_json(c.element)}, {"value", c.value}, {"shifted", c.shifted}};
}

}  // namespace

Json to_json(const Semigroup& s) {
  return Json{{"dim", s.dim()},
              {"generators", elements_json(s.generators())},
              {"grading", to_json(s.grading())},
              {"numerical", s.is_numerical()}};
}

Json to_json(const LengthSummary& summary) {
  Json out{{"element", to_json(summary.element)},
           {"longest", summary.longest},
           {"shortest", summary.shortest},
           {"lengths", summary.lengths},
           {"witness_longest", summary.witness_longest},
           {"witness_shortest", summary.witness_shortest}};
  if (summary.has_m_in_longest) out["has_m_in_longest"] = *summary.has_m_in_longest;
  if (summary.has_m_in_shortest) out["has_m_in_shortest"] = *summary.has_m_in_shortest;
  return out;
}

Json to_json(const Semigroup& s, const MinReplReport& report) {
  Json atoms = Json::array();
  for (auto i : report.atom_index) atoms.push_back(to_json(s.generators()[i]));
  Json out{{"m", to_json(report.m)},
           {"atom_index", report.atom_index},
           {"atoms", atoms},
           {"min_repl", report.minimal_vectors},
           {"evaluations", elements_json(report.evaluations)}};
  if (report.candidates_computed) {
    out["M1"] = elements_json(report.m1);
    out["M2"] = elements_json(report.m2);
    out["N1"] = elements_json(report.n1);
    out["N2"] = elements_json(report.n2);
  }
  return out;
}

Json to_json(const Verdict& v, bool all) {
  Json out{{"formula", to_string(v.formula)},
           {"m", to_json(v.m)},
           {"method", to_string(v.method)},
           {"holds", v.holds},
           {"exact", v.exact},
           {"note", v.note},
           {"checked_count", v.checked.size()}};
  if (all || v.method != Method::OracleScan) {
    Json checked = Json::array();
    for (const auto& c : v.checked) checked.push_back(checked_json(c));
    out["checked"] = checked;
  }
  Json counter = Json::array();
  for (const auto& c : v.counterexamples) {
    counter.push_back(checked_json(c));
    if (!all) break;
  }
  out["counterexamples"] = counter;
  out["counterexample_count"] = v.counterexamples.size();
  return out;
}

Json to_json(const InfFactorization& f) {
  return Json{{"c", f.c}, {"beta", f.beta}, {"d", f.d_value}};
}

Json to_json(const InequalityTemplate& t) {
  return Json{{"c", t.c},
              {"beta", t.beta},
              {"d", t.d_value},
              {"extreme_length", t.extreme_length},
              {"coefficients", t.coefficients},
              {"sense", t.sense == Sense::GreaterEqual ? ">=" : "<="},
              {"rhs", t.rhs},
              {"lhs", t.lhs},
              {"satisfied", t.satisfied},
              {"text", t.text}};
}

Json to_json(const KunzVerdict& v) {
  Json ineqs = Json::array();
  for (const auto& t : v.inequalities) ineqs.push_back(to_json(t));
  return Json{{"formula", to_string(v.formula)}, {"method", to_string(Method::KunzCriterion)}, {"holds", v.holds},
              {"inequalities", ineqs}};
}

Json to_json(const KunzPoint& p) {
  Json equality = Json::array();
  for (const auto& [a, b] : p.equality_set()) equality.push_back(Json::array({a, b}));
  Json relations = Json::array();
  for (const auto& [a, b] : p.relations()) {
    if (a != b) relations.push_back(Json::array({a, b}));
  }
  Json inf = Json::array();
  for (const auto& f : p.min_inf_factorizations()) inf.push_back(to_json(f));
  Json pmin = Json::array();
  for (const auto& f : pseudomin(p)) pmin.push_back(to_json(f));
  auto atom = is_m_atom_point(p);
  Json out{{"m", p.m()},
           {"x", p.x()},
           {"equality_set", equality},
           {"relations", relations},
           {"atoms", p.atoms()},
           {"min_inf_factorizations", inf},
           {"pseudominimal", pmin},
           {"reduced", is_reduced_point(p)},
           {"m_atom", atom.is_atom}};
  if (!atom.is_atom) out["m_atom_witness"] = atom.witness;
  out["semigroup"] = to_json(semigroup_of_point(p));
  return out;
}

}  // namespace sgfl
