#include "sgfl/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sgfl/error.hpp"

namespace sgfl {

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Element& Element::operator+=(const Element& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Element operator*(std::int64_t k, const Element& a) {
  Element out = a;
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::string Element::to_string() const {
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::size_t hash_coords(std::span<const std::int64_t> coords) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : coords) {
    h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t dot(const Element& w, const Element& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += w[i] * v[i];
  return s;
}

bool positive_on_all(const Element& w, std::span<const Element> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Element& g) { return dot(w, g) >= 1; });
}

std::optional<Element> search_grading(std::span<const Element> gens, std::size_t dim,
                                      std::int64_t box) {
  Element ones(std::vector<std::int64_t>(dim, 1));
  if (positive_on_all(ones, gens)) return ones;
  // Shells of increasing max-norm, each scanned as an odometer.
  for (std::int64_t r = 1; r <= box; ++r) {
    std::vector<std::int64_t> w(dim, -r);
    while (true) {
      bool on_shell = std::any_of(w.begin(), w.end(), [r](std::int64_t c) { return c == r || c == -r; });
      if (on_shell) {
        Element cand(w);
        if (positive_on_all(cand, gens)) return cand;
      }
      std::size_t i = 0;
      while (i < dim && w[i] == r) w[i++] = -r;
      if (i == dim) break;
      ++w[i];
    }
  }
  return std::nullopt;
}

std::string describe_combination(const Exponents& c, std::span<const Element> gens) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c[i] != 1) os << c[i] << "*";
    os << gens[i].to_string();
  }
  return os.str();
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept { return hash_coords(e.coords()); }

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept { return hash_coords(e); }

std::int64_t total_length(std::span<const std::int64_t> exps) {
  return std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
}

bool dominated_by(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::optional<Exponents> find_combination(const Element& target, std::span<const Element> gens,
                                          const Element& grading) {
  if (gens.empty()) {
    if (target.is_zero()) return Exponents{};
    return std::nullopt;
  }
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dot(grading, gens[a]) > dot(grading, gens[b]);
  });
  std::unordered_set<Element, ElementHash> dead;
  Exponents coeffs(gens.size(), 0);
  std::function<bool(const Element&)> dfs = [&](const Element& residual) -> bool {
    if (residual.is_zero()) return true;
    if (dot(grading, residual) <= 0 || dead.contains(residual)) return false;
    for (std::size_t i : order) {
      ++coeffs[i];
      if (dfs(residual - gens[i])) return true;
      --coeffs[i];
    }
    dead.insert(residual);
    return false;
  };
  if (dfs(target)) return coeffs;
  return std::nullopt;
}

struct Semigroup::Memo {
  std::mutex mu;
  std::unordered_map<Element, bool, ElementHash> table;
};

Semigroup Semigroup::create(std::vector<Element> generators, std::size_t dim,
                            const SemigroupOptions& options) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  if (generators.empty()) throw Error(ErrorKind::NotPointed, "empty generator list");
  for (const auto& g : generators) {
    if (g.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + g.to_string() + " is not in Z^" + std::to_string(dim));
    }
    if (g.is_zero()) throw Error(ErrorKind::NotPointed, "zero generator");
  }

  Semigroup s;
  s.dim_ = dim;
  if (dim == 1) {
    for (const auto& g : generators) {
      if (g[0] <= 0) {
        throw Error(ErrorKind::NotPointed, "numerical generators must be positive, got " + g.to_string());
      }
    }
    std::sort(generators.begin(), generators.end());
    s.grading_ = Element{1};
  } else {
    auto w = search_grading(generators, dim, options.grading_box);
    if (!w) {
      throw Error(ErrorKind::NotPointed, "no positive grading with coordinates in [-" +
                                             std::to_string(options.grading_box) + ", " +
                                             std::to_string(options.grading_box) + "]");
    }
    s.grading_ = *w;
  }

  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators[i] == generators[j]) {
        throw Error(ErrorKind::NotMinimal, "duplicate generator " + generators[i].to_string());
      }
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (j != i) others.push_back(generators[j]);
    }
    if (auto c = find_combination(generators[i], others, s.grading_)) {
      throw Error(ErrorKind::NotMinimal,
                  generators[i].to_string() + " = " + describe_combination(*c, others));
    }
  }

  s.generators_ = std::move(generators);
  s.by_grade_desc_.resize(s.generators_.size());
  std::iota(s.by_grade_desc_.begin(), s.by_grade_desc_.end(), 0);
  std::stable_sort(s.by_grade_desc_.begin(), s.by_grade_desc_.end(), [&](std::size_t a, std::size_t b) {
    return s.grade(s.generators_[a]) > s.grade(s.generators_[b]);
  });
  if (dim == 1) {
    s.gcd_ = 0;
    for (const auto& g : s.generators_) s.gcd_ = std::gcd(s.gcd_, g[0]);
  }
  s.memo_ = std::make_shared<Memo>();
  if (s.is_numerical()) s.apery_min_ = s.apery_set(s.generators_.front()[0]);
  return s;
}

Semigroup Semigroup::numerical(std::vector<std::int64_t> generators) {
  std::vector<Element> gens;
  gens.reserve(generators.size());
  for (auto g : generators) gens.push_back(Element{g});
  return create(std::move(gens), 1);
}

Semigroup Semigroup::from_generating_set(std::vector<Element> generators, std::size_t dim,
                                         const SemigroupOptions& options) {
  std::vector<Element> distinct;
  for (auto& g : generators) {
    if (g.dim() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + g.to_string() + " is not in Z^" + std::to_string(dim));
    }
    if (g.is_zero()) continue;
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
  }
  if (distinct.empty()) throw Error(ErrorKind::NotPointed, "empty generator list");
  Element w;
  if (dim == 1) {
    w = Element{1};
  } else {
    auto found = search_grading(distinct, dim, options.grading_box);
    if (!found) throw Error(ErrorKind::NotPointed, "no positive grading found");
    w = *found;
  }
  // A generator can only factor over generators of strictly smaller grade.
  std::vector<std::size_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dot(w, distinct[a]) < dot(w, distinct[b]); });
  std::vector<Element> kept;
  std::vector<bool> keep(distinct.size(), false);
  for (std::size_t i : order) {
    if (!find_combination(distinct[i], kept, w)) {
      kept.push_back(distinct[i]);
      keep[i] = true;
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (keep[i]) minimal.push_back(distinct[i]);
  }
  return create(std::move(minimal), dim, options);
}

std::int64_t Semigroup::grade(const Element& v) const { return dot(grading_, v); }

bool Semigroup::contains(const Element& v) const {
  if (v.dim() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, v.to_string() + " is not in Z^" + std::to_string(dim_));
  }
  if (!apery_min_.empty()) {
    std::int64_t s = v[0];
    if (s < 0) return false;
    auto n1 = static_cast<std::int64_t>(apery_min_.size());
    return s >= apery_min_[static_cast<std::size_t>(s % n1)];
  }
  if (dim_ == 1 && v[0] % gcd_ != 0) return false;
  return contains_by_search(v);
}

bool Semigroup::contains_value(std::int64_t v) const {
  if (dim_ != 1) throw Error(ErrorKind::DimensionMismatch, "scalar membership needs d = 1");
  if (!apery_min_.empty()) {
    if (v < 0) return false;
    auto n1 = static_cast<std::int64_t>(apery_min_.size());
    return v >= apery_min_[static_cast<std::size_t>(v % n1)];
  }
  return contains(Element{v});
}

bool Semigroup::contains_by_search(const Element& v) const {
  if (v.is_zero()) return true;
  if (grade(v) <= 0) return false;
  {
    std::lock_guard lock(memo_->mu);
    if (auto it = memo_->table.find(v); it != memo_->table.end()) return it->second;
  }
  bool result = false;
  for (std::size_t i : by_grade_desc_) {
    if (contains_by_search(v - generators_[i])) {
      result = true;
      break;
    }
  }
  std::lock_guard lock(memo_->mu);
  memo_->table.emplace(v, result);
  return result;
}

bool Semigroup::divides(const Element& a, const Element& b) const { return contains(b - a); }

std::optional<std::size_t> Semigroup::generator_index(const Element& v) const {
  auto it = std::find(generators_.begin(), generators_.end(), v);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

Element Semigroup::evaluate(std::span<const std::int64_t> exps) const {
  if (exps.size() != generators_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "exponent vector length does not match generator count");
  }
  Element out = Element::zero(dim_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) out += exps[i] * generators_[i];
  }
  return out;
}

Element Semigroup::evaluate(std::span<const std::int64_t> exps, std::span<const std::size_t> atoms) const {
  if (exps.size() != atoms.size()) {
    throw Error(ErrorKind::DimensionMismatch, "exponent vector length does not match atom list");
  }
  Element out = Element::zero(dim_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) out += exps[i] * generators_[atoms[i]];
  }
  return out;
}

std::vector<std::int64_t> Semigroup::apery_set(std::int64_t m) const {
  if (!is_numerical()) throw Error(ErrorKind::NotNumerical, to_string() + " is not a numerical semigroup");
  if (m <= 0 || !contains(Element{m})) {
    throw Error(ErrorKind::MNotInS, std::to_string(m) + " is not a nonzero element of " + to_string());
  }
  // Shortest paths on Z/mZ with generator-weighted edges.
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  auto mod = static_cast<std::size_t>(m);
  std::vector<std::int64_t> dist(mod, kInf);
  dist[0] = 0;
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (const auto& g : generators_) {
      auto next = static_cast<std::size_t>((static_cast<std::int64_t>(r) + g[0]) % m);
      if (d + g[0] < dist[next]) {
        dist[next] = d + g[0];
        queue.emplace(dist[next], next);
      }
    }
  }
  return dist;
}

std::int64_t Semigroup::frobenius() const {
  if (!is_numerical()) throw Error(ErrorKind::NotNumerical, to_string() + " is not a numerical semigroup");
  std::int64_t n1 = generators_.front()[0];
  auto ap = apery_set(n1);
  return *std::max_element(ap.begin(), ap.end()) - n1;
}

std::string Semigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << generators_[i].to_string();
  }
  os << '>';
  return os.str();
}

}  // namespace sgfl
