#include "brace_forge/diagram.hpp"

#include <algorithm>

#include "brace_forge/error.hpp"

namespace brace_forge {

namespace {

void sort_and_merge(SparseVector &terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Scalar sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].index == terms[i].index)
      sum += terms[j++].coeff;
    if (!sum.is_zero())
      terms[out++] = Term{terms[i].index, std::move(sum)};
    i = j;
  }
  terms.resize(out);
}

bool layer_is_identity(const std::vector<std::optional<LinMap>> &maps) {
  return std::all_of(maps.begin(), maps.end(), [](const auto &m) { return !m.has_value(); });
}

} // namespace

Diagram::Diagram(Field field, std::size_t dim)
    : field_(field), domain_dim_(dim), codomain_dim_(dim) {}

Diagram::Diagram(const LinMap &map)
    : field_(map.field()), domain_dim_(map.cols()), codomain_dim_(map.rows()) {
  if (!map.is_identity())
    layers_.push_back(Layer{Factor{map, map.cols(), map.rows()}});
}

Diagram Diagram::identity(Field field, std::size_t dim) { return Diagram(field, dim); }

std::string Diagram::shape() const {
  return std::to_string(domain_dim_) + "->" + std::to_string(codomain_dim_);
}

Diagram::Layer Diagram::pad(const Layer &layer, std::size_t left, std::size_t right) {
  Layer out;
  auto push = [&out](Factor f) {
    if (!f.map && f.in == 1)
      return;
    if (!f.map && !out.empty() && !out.back().map) {
      out.back().in *= f.in;
      out.back().out *= f.out;
      return;
    }
    out.push_back(std::move(f));
  };
  push(Factor{std::nullopt, left, left});
  for (const auto &f : layer)
    push(f);
  push(Factor{std::nullopt, right, right});
  return out;
}

Diagram circ(const Diagram &f, const Diagram &g) {
  if (f.field_ != g.field_)
    throw Error(ErrorKind::FieldMismatch,
                "circ over " + f.field_.to_string() + " and " + g.field_.to_string());
  if (g.codomain_dim_ != f.domain_dim_)
    throw Error(ErrorKind::DimensionMismatch, "circ: f is " + f.shape() + ", g is " + g.shape());
  Diagram out(f.field_, g.domain_dim_);
  out.codomain_dim_ = f.codomain_dim_;
  out.layers_ = g.layers_;
  out.layers_.insert(out.layers_.end(), f.layers_.begin(), f.layers_.end());
  return out;
}

Diagram otimes(const Diagram &f, const Diagram &g) {
  if (f.field_ != g.field_)
    throw Error(ErrorKind::FieldMismatch,
                "otimes over " + f.field_.to_string() + " and " + g.field_.to_string());
  Diagram out(f.field_, f.domain_dim_ * g.domain_dim_);
  out.codomain_dim_ = f.codomain_dim_ * g.codomain_dim_;
  // Interchange law: (F_k o ... o F_1) (x) (G_k o ... o G_1) = (F_k (x) G_k) o ...,
  // padding the shorter side with identities on its codomain.
  const std::size_t depth = std::max(f.layers_.size(), g.layers_.size());
  for (std::size_t i = 0; i < depth; ++i) {
    Diagram::Layer layer;
    if (i < f.layers_.size())
      layer = f.layers_[i];
    else
      layer = Diagram::Layer{Diagram::Factor{std::nullopt, f.codomain_dim_, f.codomain_dim_}};
    if (i < g.layers_.size()) {
      layer.insert(layer.end(), g.layers_[i].begin(), g.layers_[i].end());
      layer = Diagram::pad(layer, 1, 1);
    } else {
      layer = Diagram::pad(layer, 1, g.codomain_dim_);
    }
    std::vector<std::optional<LinMap>> maps;
    for (const auto &factor : layer)
      maps.push_back(factor.map);
    if (!layer_is_identity(maps))
      out.layers_.push_back(std::move(layer));
  }
  return out;
}

SparseVector Diagram::apply_layer(const Layer &layer, const SparseVector &v) {
  SparseVector out;
  std::vector<std::size_t> sub(layer.size());
  std::vector<std::pair<std::size_t, Scalar>> partial;
  std::vector<std::pair<std::size_t, Scalar>> next;
  for (const Term &t : v) {
    std::size_t idx = t.index;
    for (std::size_t k = layer.size(); k-- > 0;) {
      sub[k] = idx % layer[k].in;
      idx /= layer[k].in;
    }
    partial.clear();
    partial.emplace_back(0, t.coeff);
    for (std::size_t k = 0; k < layer.size(); ++k) {
      const Factor &factor = layer[k];
      if (!factor.map) {
        for (auto &p : partial)
          p.first = p.first * factor.out + sub[k];
        continue;
      }
      next.clear();
      for (const auto &p : partial)
        for (const Term &e : factor.map->column(sub[k]))
          next.emplace_back(p.first * factor.out + e.index, p.second * e.coeff);
      std::swap(partial, next);
      if (partial.empty())
        break;
    }
    for (auto &p : partial)
      out.push_back(Term{p.first, std::move(p.second)});
  }
  sort_and_merge(out);
  return out;
}

SparseVector Diagram::apply(const SparseVector &v) const {
  SparseVector current = v;
  for (const auto &layer : layers_) {
    if (current.empty())
      break;
    current = apply_layer(layer, current);
  }
  return current;
}

SparseVector Diagram::image(std::size_t j) const {
  if (j >= domain_dim_)
    throw Error(ErrorKind::DimensionMismatch,
                "basis index " + std::to_string(j) + " outside domain of " + shape());
  return apply(SparseVector{Term{j, Scalar::one(field_)}});
}

LinMap Diagram::materialize() const {
  std::vector<SparseVector> columns;
  columns.reserve(domain_dim_);
  for (std::size_t j = 0; j < domain_dim_; ++j)
    columns.push_back(image(j));
  return LinMap::from_columns(field_, domain_dim_, codomain_dim_, columns);
}

Diagram braid(Field field, std::size_t a, std::size_t b) {
  if (a == 1 || b == 1)
    return Diagram::identity(field, a * b);
  return Diagram(braiding(field, Space(a), Space(b)));
}

std::optional<Mismatch> first_mismatch(const Diagram &lhs, const Diagram &rhs) {
  if (lhs.field() != rhs.field())
    return Mismatch::noted("field " + lhs.field().to_string() + " vs " + rhs.field().to_string());
  if (lhs.domain_dim() != rhs.domain_dim() || lhs.codomain_dim() != rhs.codomain_dim())
    return Mismatch::noted("shape " + lhs.shape() + " vs " + rhs.shape());
  const Scalar zero = Scalar::zero(lhs.field());
  for (std::size_t j = 0; j < lhs.domain_dim(); ++j) {
    const SparseVector a = lhs.image(j);
    const SparseVector b = rhs.image(j);
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < a.size() || q < b.size()) {
      const std::size_t ia = p < a.size() ? a[p].index : SIZE_MAX;
      const std::size_t ib = q < b.size() ? b[q].index : SIZE_MAX;
      const std::size_t row = std::min(ia, ib);
      const Scalar &va = ia == row ? a[p].coeff : zero;
      const Scalar &vb = ib == row ? b[q].coeff : zero;
      if (!(va == vb))
        return Mismatch{row, j, va.to_string(), vb.to_string(), {}};
      if (ia == row)
        ++p;
      if (ib == row)
        ++q;
    }
  }
  return std::nullopt;
}

AxiomEntry verify(std::string name, std::string description,
                  const std::vector<Equation> &equations, bool derived) {
  AxiomEntry entry{std::move(name), std::move(description), true, derived, std::nullopt};
  for (const auto &eq : equations) {
    if (auto mm = first_mismatch(eq.lhs, eq.rhs)) {
      entry.passed = false;
      entry.witness = Witness{eq.label, mm->col.value_or(0), mm->row, mm->lhs, mm->rhs, mm->note};
      break;
    }
  }
  return entry;
}

} // namespace brace_forge
