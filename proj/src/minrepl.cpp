#include "sgfl/minrepl.hpp"

#include <algorithm>

#include "sgfl/error.hpp"

namespace sgfl {

namespace {

std::size_t require_atom(const Semigroup& s, const Element& m) {
  if (m.dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, m.to_string() + " is not in Z^" + std::to_string(s.dim()));
  }
  auto idx = s.generator_index(m);
  if (!idx) throw Error(ErrorKind::MNotAtom, m.to_string() + " is not an atom of " + s.to_string());
  return *idx;
}

std::vector<std::size_t> other_atoms(const Semigroup& s, std::size_t m_index) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.embedding_dimension(); ++i) {
    if (i != m_index) out.push_back(i);
  }
  return out;
}

/// Rows of nonnegative counts; answers "is some row coordinatewise below x",
/// comparing the first `width` coordinates of x.
class Antichain {
 public:
  explicit Antichain(std::size_t width) : width_(width) {}

  void add(const std::int32_t* x) {
    rows_.insert(rows_.end(), x, x + width_);
    masks_.push_back(mask(x));
  }

  bool below(const std::int32_t* x) const {
    std::uint64_t mx = mask(x);
    for (std::size_t r = 0; r < masks_.size(); ++r) {
      if ((masks_[r] & ~mx) != 0) continue;
      const std::int32_t* row = rows_.data() + r * width_;
      bool le = true;
      for (std::size_t i = 0; i < width_ && le; ++i) le = row[i] <= x[i];
      if (le) return true;
    }
    return false;
  }

  std::vector<Exponents> rows() const {
    std::vector<Exponents> out;
    for (std::size_t r = 0; r < masks_.size(); ++r) {
      out.emplace_back(rows_.begin() + static_cast<std::ptrdiff_t>(r * width_),
                       rows_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width_));
    }
    return out;
  }

 private:
  std::uint64_t mask(const std::int32_t* x) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < width_ && i < 64; ++i) {
      if (x[i] > 0) out |= std::uint64_t{1} << i;
    }
    return out;
  }

  std::size_t width_;
  std::vector<std::int32_t> rows_;
  std::vector<std::uint64_t> masks_;
};

/// One level of the frontier search: counts and defects stored flat.
class Frontier {
 public:
  Frontier(std::size_t width, std::size_t dim) : width_(width), dim_(dim) {}

  std::size_t size() const { return defects_.size() / dim_; }
  const std::int32_t* row(std::size_t n) const { return rows_.data() + n * width_; }
  const std::int64_t* defect(std::size_t n) const { return defects_.data() + n * dim_; }

  void push(const std::int32_t* x, const std::int64_t* d) {
    rows_.insert(rows_.end(), x, x + width_);
    defects_.insert(defects_.end(), d, d + dim_);
  }

  void deduplicate() {
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(row(a), row(a) + width_, row(b), row(b) + width_);
    };
    auto equal = [&](std::size_t a, std::size_t b) { return std::equal(row(a), row(a) + width_, row(b)); };
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), equal), order.end());
    Frontier out(width_, dim_);
    for (std::size_t i : order) out.push(row(i), defect(i));
    *this = std::move(out);
  }

 private:
  std::size_t width_;
  std::size_t dim_;
  std::vector<std::int32_t> rows_;
  std::vector<std::int64_t> defects_;
};

}  // namespace

bool is_left_zero(std::span<const std::int64_t> c) {
  std::size_t j = 0;
  while (j < c.size() && c[j] == 0) ++j;
  if (j == c.size()) return false;
  return std::all_of(c.begin() + static_cast<std::ptrdiff_t>(j), c.end(), [](std::int64_t x) { return x > 0; });
}

bool is_right_zero(std::span<const std::int64_t> c) {
  std::size_t j = 0;
  while (j < c.size() && c[j] > 0) ++j;
  if (j == 0) return false;
  return std::all_of(c.begin() + static_cast<std::ptrdiff_t>(j), c.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<Exponents> minimal_elements(std::vector<Exponents> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < vectors.size() && minimal; ++j) {
      if (j != i && dominated_by(vectors[j], vectors[i])) minimal = false;
    }
    if (minimal) out.push_back(vectors[i]);
  }
  return out;
}

bool repl_contains(const Semigroup& s, const Element& m, std::span<const std::int64_t> c) {
  std::size_t m_index = require_atom(s, m);
  auto atoms = other_atoms(s, m_index);
  return s.contains(s.evaluate(c, atoms) - m);
}

MinReplReport min_repl(const Semigroup& s, const Element& m, const SearchOptions& options) {
  MinReplReport report;
  report.m = m;
  report.m_index = require_atom(s, m);
  report.atom_index = other_atoms(s, report.m_index);

  // Unknowns: c over the atoms other than m (column +a), then b over all atoms
  // (column -a). Solutions of value(c) = value(b) with b_m >= 1 carry the
  // replaceable c-parts; those with b_m = 0 are relations used for pruning.
  const std::size_t dim = s.dim();
  const std::size_t nc = report.atom_index.size();
  const std::size_t nb = s.embedding_dimension();
  const std::size_t nv = nc + nb;
  const std::size_t mvar = nc + report.m_index;
  std::vector<std::int64_t> cols(nv * dim);
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t k = 0; k < dim; ++k) cols[j * dim + k] = s.generators()[report.atom_index[j]][k];
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t k = 0; k < dim; ++k) cols[(nc + i) * dim + k] = -s.generators()[i][k];
  }
  // partner[v]: the variable for the same atom on the other side, if any.
  std::vector<std::size_t> partner(nv, nv);
  for (std::size_t j = 0; j < nc; ++j) {
    partner[j] = nc + report.atom_index[j];
    partner[nc + report.atom_index[j]] = j;
  }
  // In dimension 1 every atom has a multiple in m + S, so the c-parts outside
  // the replaceable set are finitely many and no relations are needed.
  const bool need_relations = dim > 1;

  Antichain relations(nv);
  Antichain found(nc);
  std::uint64_t nodes = 0;
  std::vector<std::int32_t> y(nv);
  std::vector<std::int64_t> defect(dim);
  Element value = Element::zero(dim);

  auto replaceable = [&](const std::int32_t* x) {
    for (std::size_t k = 0; k < dim; ++k) value[k] = -m[k];
    for (std::size_t j = 0; j < nc; ++j) {
      if (x[j] == 0) continue;
      for (std::size_t k = 0; k < dim; ++k) value[k] += x[j] * cols[j * dim + k];
    }
    return dim == 1 ? s.contains_value(value[0]) : s.contains(value);
  };

  auto expand = [&](const Frontier& front, bool with_m) {
    Frontier next(nv, dim);
    for (std::size_t n = 0; n < front.size(); ++n) {
      const std::int32_t* x = front.row(n);
      const std::int64_t* d = front.defect(n);
      for (std::size_t v = 0; v < nv; ++v) {
        if (!with_m && v == mvar) continue;
        std::int64_t dp = 0;
        for (std::size_t k = 0; k < dim; ++k) dp += d[k] * cols[v * dim + k];
        if (dp >= 0) continue;
        // c_a > 0 together with b_a > 0 cancels, so it is never minimal.
        if (partner[v] < nv && x[partner[v]] > 0) continue;
        std::copy(x, x + nv, y.begin());
        ++y[v];
        if (need_relations && relations.below(y.data())) continue;
        if (with_m && found.below(y.data())) continue;
        if (++nodes > options.budget) {
          throw Error(ErrorKind::BudgetExceeded, "minimal solution search exceeded " +
                                                     std::to_string(options.budget) + " nodes");
        }
        bool zero = true;
        for (std::size_t k = 0; k < dim; ++k) {
          defect[k] = d[k] + cols[v * dim + k];
          zero = zero && defect[k] == 0;
        }
        // A c-part in the replaceable set is the c-part of some solution
        // below every completion of this node; record it and stop here.
        if (with_m && (zero || (v < nc && replaceable(y.data())))) {
          found.add(y.data());
          continue;
        }
        if (zero) {
          relations.add(y.data());
          continue;
        }
        next.push(y.data(), defect.data());
      }
    }
    next.deduplicate();
    return next;
  };

  Frontier inhomogeneous(nv, dim);
  Frontier homogeneous(nv, dim);
  for (std::size_t v = 0; v < nv; ++v) {
    if (v != mvar && !need_relations) continue;
    std::fill(y.begin(), y.end(), 0);
    y[v] = 1;
    for (std::size_t k = 0; k < dim; ++k) defect[k] = cols[v * dim + k];
    (v == mvar ? inhomogeneous : homogeneous).push(y.data(), defect.data());
  }
  while (inhomogeneous.size() > 0 || homogeneous.size() > 0) {
    if (homogeneous.size() > 0) homogeneous = expand(homogeneous, false);
    if (inhomogeneous.size() > 0) inhomogeneous = expand(inhomogeneous, true);
  }

  report.minimal_vectors = minimal_elements(found.rows());
  for (const auto& c : report.minimal_vectors) report.evaluations.push_back(s.evaluate(c, report.atom_index));
  return report;
}

void candidate_sets(const Semigroup& s, MinReplReport& report) {
  auto idx = s.generator_index(report.m);
  if (!idx || *idx != report.m_index || report.evaluations.size() != report.minimal_vectors.size() ||
      report.atom_index.size() + 1 != s.embedding_dimension()) {
    throw Error(ErrorKind::ReportMismatch, "report was not produced for " + s.to_string());
  }
  for (std::size_t i = 0; i < report.minimal_vectors.size(); ++i) {
    if (s.evaluate(report.minimal_vectors[i], report.atom_index) != report.evaluations[i]) {
      throw Error(ErrorKind::ReportMismatch, "evaluation mismatch in report");
    }
  }

  // Distinct evaluations; S is reduced, so associates coincide.
  std::vector<Element> values = report.evaluations;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  auto witnesses = [&](const Element& v) {
    std::vector<const Exponents*> out;
    for (std::size_t i = 0; i < report.evaluations.size(); ++i) {
      if (report.evaluations[i] == v) out.push_back(&report.minimal_vectors[i]);
    }
    return out;
  };

  report.m1.clear();
  report.m2.clear();
  report.n1.clear();
  report.n2.clear();
  for (const auto& v : values) {
    bool minimal = std::none_of(values.begin(), values.end(),
                                [&](const Element& t) { return t != v && s.divides(t, v); });
    if (minimal) report.m2.push_back(v);
  }
  for (const auto& v : report.m2) {
    auto ws = witnesses(v);
    if (std::any_of(ws.begin(), ws.end(), [](const Exponents* c) { return total_length(*c) > 2; })) {
      report.m1.push_back(v);
    }
  }

  report.n1_applicable = s.is_numerical() && report.m_index == 0;
  report.n2_applicable = s.is_numerical() && report.m_index + 1 == s.embedding_dimension();
  if (report.n1_applicable) {
    for (const auto& v : report.m1) {
      auto ws = witnesses(v);
      if (std::any_of(ws.begin(), ws.end(), [](const Exponents* c) { return !is_left_zero(*c); })) {
        report.n1.push_back(v);
      }
    }
  }
  if (report.n2_applicable) {
    for (const auto& v : report.m2) {
      auto ws = witnesses(v);
      if (std::any_of(ws.begin(), ws.end(), [](const Exponents* c) { return !is_right_zero(*c); })) {
        report.n2.push_back(v);
      }
    }
  }
  report.candidates_computed = true;
}

}  // namespace sgfl
