#include "sgfl/kunz.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

#include "sgfl/error.hpp"

namespace sgfl {

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();

std::string point_string(const std::vector<std::int64_t>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

std::string format_inequality(const std::vector<std::pair<int, std::int64_t>>& terms, Sense sense, std::int64_t rhs) {
  std::string out;
  for (const auto& [index, coef] : terms) {
    if (coef == 0) continue;
    std::int64_t mag = coef < 0 ? -coef : coef;
    if (out.empty()) {
      out += coef < 0 ? "-" : "";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += "x_" + std::to_string(index);
  }
  if (out.empty()) out = "0";
  out += sense == Sense::GreaterEqual ? " >= " : " <= ";
  return out + std::to_string(rhs);
}

}  // namespace

int KunzContext::sum(std::span<const int> residues, std::span<const std::int64_t> c) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] * residues[i];
  return static_cast<int>(total % m);
}

std::int64_t KunzContext::carry(std::span<const int> residues, std::span<const std::int64_t> c) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] * residues[i];
  std::int64_t diff = total - sum(residues, c);
  if (diff % m != 0) throw Error(ErrorKind::NonIntegral, "carry is not an integer");
  return diff / m;
}

KunzContext numerical_context(std::int64_t m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus must be at least 2, got " + std::to_string(m));
  KunzContext ctx;
  ctx.m = static_cast<int>(m);
  ctx.d.assign(ctx.m, std::vector<int>(ctx.m, 0));
  for (int a = 0; a < ctx.m; ++a) {
    for (int b = 0; b < ctx.m; ++b) ctx.d[a][b] = (a + b - ctx.add(a, b)) / ctx.m;
  }
  return ctx;
}

KunzPoint::KunzPoint(KunzContext ctx, std::vector<std::int64_t> x) : ctx_(std::move(ctx)), x_(std::move(x)) {
  const int m = ctx_.m;
  if (static_cast<int>(x_.size()) != m) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(x_.size()) + " coordinates, expected " + std::to_string(m));
  }
  if (x_[0] != 0) throw Error(ErrorKind::InequalityViolated, "x_0 must be 0 in " + point_string(x_));
  for (int a = 0; a < m; ++a) {
    if (x_[a] < 0) {
      throw Error(ErrorKind::InequalityViolated, "x_" + std::to_string(a) + " < 0 in " + point_string(x_));
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      std::int64_t lhs = x_[a] + x_[b] + ctx_.d[a][b];
      std::int64_t rhs = x_[ctx_.add(a, b)];
      if (lhs < rhs) {
        throw Error(ErrorKind::InequalityViolated, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                       ") fails x_a + x_b + d >= x_{a+b} in " + point_string(x_));
      }
      if (lhs == rhs) equality_.emplace_back(a, b);
    }
  }

  table_.assign(m, std::vector<int>(m, kInfinity));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int s = ctx_.add(a, b);
      if (precedes(a, s)) table_[a][b] = s;
    }
  }
  for (int a = 1; a < m; ++a) {
    bool atom = true;
    for (int b = 1; b < m && atom; ++b) {
      if (b != a && precedes(b, a)) atom = false;
    }
    if (atom) atoms_.push_back(a);
  }

  // Every vector with a finite product, by depth-first search over atoms; the
  // minimal infinite vectors sit one step above this downward-closed set.
  std::unordered_map<Exponents, int, ExponentsHash> finite;
  longest_.assign(m, kUnset);
  shortest_.assign(m, kUnset);
  const std::size_t n = atoms_.size();
  Exponents c(n, 0);
  auto visit = [&](auto&& self, std::size_t i, int value, std::int64_t len) -> void {
    if (i == n) {
      finite.emplace(c, value);
      if (longest_[value] == kUnset || len > longest_[value]) longest_[value] = len;
      if (shortest_[value] == kUnset || len < shortest_[value]) shortest_[value] = len;
      return;
    }
    int v = value;
    for (std::int64_t k = 0; v != kInfinity; ++k) {
      c[i] = k;
      self(self, i + 1, v, len + k);
      v = oplus(v, atoms_[i]);
    }
    c[i] = 0;
  };
  visit(visit, 0, 0, 0);

  std::set<Exponents> minimal;
  for (const auto& [vec, value] : finite) {
    for (std::size_t i = 0; i < n; ++i) {
      if (oplus(value, atoms_[i]) != kInfinity) continue;
      Exponents up = vec;
      ++up[i];
      bool is_minimal = true;
      for (std::size_t j = 0; j < n && is_minimal; ++j) {
        if (j == i || up[j] == 0) continue;
        --up[j];
        if (!finite.contains(up)) is_minimal = false;
        ++up[j];
      }
      if (is_minimal) minimal.insert(std::move(up));
    }
  }
  for (const auto& v : minimal) {
    min_inf_.push_back({v, ctx_.sum(atoms_, v), ctx_.carry(atoms_, v)});
  }
}

bool KunzPoint::precedes(int a, int b) const {
  int diff = ctx_.sub(b, a);
  return x_[a] + x_[diff] + ctx_.d[a][diff] == x_[b];
}

std::vector<std::pair<int, int>> KunzPoint::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < ctx_.m; ++a) {
    for (int b = 0; b < ctx_.m; ++b) {
      if (precedes(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

int KunzPoint::oplus(int a, int b) const {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  if (table_.empty()) {
    int s = ctx_.add(a, b);
    return precedes(a, s) ? s : kInfinity;
  }
  return table_[a][b];
}

int KunzPoint::product(std::span<const std::int64_t> c) const {
  int value = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::int64_t k = 0; k < c[i] && value != kInfinity; ++k) value = oplus(value, atoms_[i]);
  }
  return value;
}

std::pair<std::int64_t, std::int64_t> KunzPoint::length_extremes(int b) const {
  if (b < 0 || b >= ctx_.m || longest_[b] == kUnset) {
    throw Error(ErrorKind::NoFactorization, std::to_string(b) + " has no factorization into atoms");
  }
  return {longest_[b], shortest_[b]};
}

KunzPoint point_of_semigroup(const KunzContext& ctx, const Semigroup& s) {
  if (!s.is_numerical()) throw Error(ErrorKind::NotNumerical, s.to_string() + " is not a numerical semigroup");
  if (!s.contains(Element{ctx.m})) {
    throw Error(ErrorKind::MNotInS, std::to_string(ctx.m) + " is not in " + s.to_string());
  }
  auto ap = s.apery_set(ctx.m);
  std::vector<std::int64_t> x(ctx.m);
  for (int a = 0; a < ctx.m; ++a) x[a] = (ap[a] - a) / ctx.m;
  return KunzPoint(ctx, std::move(x));
}

std::int64_t atom_value(const KunzPoint& p, int a) { return p.x()[a] * p.m() + a; }

Semigroup semigroup_of_point(const KunzPoint& p) {
  std::vector<Element> gens{Element{p.m()}};
  for (int a = 1; a < p.m(); ++a) gens.push_back(Element{atom_value(p, a)});
  return Semigroup::from_generating_set(std::move(gens), 1);
}

StructureConstants structure_constants(const KunzContext& ctx, std::span<const int> residues,
                                       std::span<const std::int64_t> c, std::span<const std::int64_t> c2) {
  StructureConstants out;
  out.d = ctx.carry(residues, c);
  int shift = ctx.sub(ctx.sum(residues, c2), ctx.sum(residues, c));
  std::int64_t total = shift;
  for (std::size_t i = 0; i < c.size(); ++i) total += (c[i] - c2[i]) * residues[i];
  if (total % ctx.m != 0) throw Error(ErrorKind::NonIntegral, "b constant is not an integer");
  out.b = total / ctx.m;
  return out;
}

bool sq_leq(const KunzPoint& p, std::span<const std::int64_t> c, std::span<const std::int64_t> c2) {
  const auto& ctx = p.context();
  const auto& atoms = p.atoms();
  auto k = structure_constants(ctx, atoms, c, c2);
  int shift = ctx.sub(ctx.sum(atoms, c2), ctx.sum(atoms, c));
  std::int64_t lhs = -p.x()[shift];
  for (std::size_t i = 0; i < c.size(); ++i) lhs += (c2[i] - c[i]) * p.x()[atoms[i]];
  return lhs >= k.b;
}

std::vector<InfFactorization> pseudomin(const KunzPoint& p) {
  const auto& all = p.min_inf_factorizations();
  std::vector<InfFactorization> out;
  for (const auto& c : all) {
    bool keep = std::all_of(all.begin(), all.end(),
                            [&](const InfFactorization& o) { return !sq_leq(p, o.c, c.c) || sq_leq(p, c.c, o.c); });
    if (keep) out.push_back(c);
  }
  return out;
}

bool cominimal(const KunzPoint& p, const KunzPoint& q) {
  if (p.m() != q.m() || p.equality_set() != q.equality_set()) {
    throw Error(ErrorKind::DifferentFace, point_string(p.x()) + " and " + point_string(q.x()) +
                                              " do not lie in the interior of the same face");
  }
  return pseudomin(p) == pseudomin(q);
}

bool is_reduced_point(const KunzPoint& p) {
  const auto& x = p.x();
  const auto& ctx = p.context();
  for (int a = 1; a < p.m(); ++a) {
    int neg = ctx.sub(0, a);
    if (x[a] + x[neg] + ctx.d[a][neg] <= x[0]) return false;
  }
  return true;
}

AtomCheck is_m_atom_point(const KunzPoint& p) {
  // m = sum of nonzero Apery elements exactly when some residues with x_a = 0
  // add up to m as integers.
  const int m = p.m();
  std::vector<int> last(m + 1, -1);
  last[0] = 0;
  for (int total = 1; total <= m; ++total) {
    for (int a = 1; a < m && last[total] < 0; ++a) {
      if (p.x()[a] == 0 && a <= total && last[total - a] >= 0) last[total] = a;
    }
  }
  AtomCheck out;
  if (last[m] < 0) return out;
  out.is_atom = false;
  out.witness.assign(m, 0);
  for (int total = m; total > 0; total -= last[total]) ++out.witness[last[total]];
  return out;
}

KunzVerdict main_verdict(const KunzPoint& p, Formula formula) {
  if (!is_reduced_point(p)) throw Error(ErrorKind::NotReduced, point_string(p.x()) + " is not reduced");
  if (!is_m_atom_point(p).is_atom) {
    throw Error(ErrorKind::MNotAtomAtPoint, std::to_string(p.m()) + " is not an atom at " + point_string(p.x()));
  }
  KunzVerdict out;
  out.formula = formula;
  const auto& atoms = p.atoms();
  for (const auto& f : pseudomin(p)) {
    std::int64_t size = total_length(f.c);
    if (formula == Formula::Longest && size <= 2) continue;
    InequalityTemplate t;
    t.c = f.c;
    t.beta = f.beta;
    t.d_value = f.d_value;
    auto [longest, shortest] = p.length_extremes(f.beta);
    t.extreme_length = formula == Formula::Longest ? longest : shortest;
    t.sense = formula == Formula::Longest ? Sense::GreaterEqual : Sense::LessEqual;
    t.rhs = size - f.d_value - t.extreme_length;

    std::vector<std::pair<int, std::int64_t>> terms{{f.beta, -1}};
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (f.c[i] == 0) continue;
      auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& term) { return term.first == atoms[i]; });
      if (it != terms.end()) {
        it->second += f.c[i];
      } else {
        terms.emplace_back(atoms[i], f.c[i]);
      }
    }
    t.coefficients.assign(p.m(), 0);
    for (const auto& [index, coef] : terms) {
      t.coefficients[index] = coef;
      t.lhs += coef * p.x()[index];
    }
    t.satisfied = t.sense == Sense::GreaterEqual ? t.lhs >= t.rhs : t.lhs <= t.rhs;
    t.text = format_inequality(terms, t.sense, t.rhs);
    out.holds = out.holds && t.satisfied;
    out.inequalities.push_back(std::move(t));
  }
  return out;
}

}  // namespace sgfl
