#include "brace_forge/linmap.hpp"

#include "brace_forge/error.hpp"

namespace brace_forge {

namespace {

void require_same_field(Field a, Field b) {
  if (a != b)
    throw Error(ErrorKind::FieldMismatch, "maps over " + a.to_string() + " and " + b.to_string());
}

} // namespace

Space::Space(std::size_t dim, std::string label) : dim_(dim), label_(std::move(label)) {
  if (dim == 0)
    throw Error(ErrorKind::DimensionMismatch, "space of dimension 0");
}

LinMap::LinMap(Field field, Space domain, Space codomain)
    : LinMap(field, domain, codomain,
             std::vector<Scalar>(domain.dim() * codomain.dim(), Scalar::zero(field))) {}

LinMap::LinMap(Field field, Space domain, Space codomain, std::vector<Scalar> entries)
    : field_(field), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  const std::size_t rows = codomain_.dim();
  const std::size_t cols = domain_.dim();
  if (entries.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(entries.size()) + " entries for a " + shape() + " map");
  auto storage = std::make_shared<Storage>();
  storage->column_offsets.reserve(cols + 1);
  storage->column_offsets.push_back(0);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      const Scalar &s = entries[r * cols + c];
      require_same_field(field_, s.field());
      if (!s.is_zero())
        storage->column_terms.push_back(Term{r, s});
    }
    storage->column_offsets.push_back(storage->column_terms.size());
  }
  storage->entries = std::move(entries);
  storage_ = std::move(storage);
}

LinMap LinMap::identity(Field field, std::size_t dim) {
  std::vector<Scalar> entries(dim * dim, Scalar::zero(field));
  for (std::size_t i = 0; i < dim; ++i)
    entries[i * dim + i] = Scalar::one(field);
  return LinMap(field, Space(dim), Space(dim), std::move(entries));
}

LinMap LinMap::from_columns(Field field, std::size_t domain_dim, std::size_t codomain_dim,
                            const std::vector<SparseVector> &columns) {
  if (columns.size() != domain_dim)
    throw Error(ErrorKind::DimensionMismatch, "column count " + std::to_string(columns.size()) +
                                                  " != domain dim " + std::to_string(domain_dim));
  std::vector<Scalar> entries(domain_dim * codomain_dim, Scalar::zero(field));
  for (std::size_t c = 0; c < domain_dim; ++c)
    for (const auto &t : columns[c]) {
      if (t.index >= codomain_dim)
        throw Error(ErrorKind::DimensionMismatch, "row index out of range");
      entries[t.index * domain_dim + c] = t.coeff;
    }
  return LinMap(field, Space(domain_dim), Space(codomain_dim), std::move(entries));
}

const Scalar &LinMap::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols())
    throw Error(ErrorKind::DimensionMismatch, "entry (" + std::to_string(row) + ", " +
                                                  std::to_string(col) + ") outside " + shape());
  return storage_->entries[row * cols() + col];
}

std::span<const Term> LinMap::column(std::size_t col) const {
  const auto begin = storage_->column_offsets[col];
  const auto end = storage_->column_offsets[col + 1];
  return {storage_->column_terms.data() + begin, end - begin};
}

bool LinMap::is_identity() const {
  if (rows() != cols())
    return false;
  for (std::size_t c = 0; c < cols(); ++c) {
    auto col = column(c);
    if (col.size() != 1 || col[0].index != c || !col[0].coeff.is_one())
      return false;
  }
  return true;
}

LinMap LinMap::with_entry(std::size_t row, std::size_t col, Scalar value) const {
  (void)at(row, col);
  std::vector<Scalar> entries = storage_->entries;
  entries[row * cols() + col] = std::move(value);
  return LinMap(field_, domain_, codomain_, std::move(entries));
}

LinMap LinMap::relabel(Space domain, Space codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows())
    throw Error(ErrorKind::DimensionMismatch, "relabel of " + shape());
  LinMap out = *this;
  out.domain_ = std::move(domain);
  out.codomain_ = std::move(codomain);
  return out;
}

std::string LinMap::shape() const {
  return std::to_string(domain_.dim()) + "->" + std::to_string(codomain_.dim());
}

LinMap compose(const LinMap &f, const LinMap &g) {
  require_same_field(f.field(), g.field());
  if (g.codomain().dim() != f.domain().dim())
    throw Error(ErrorKind::DimensionMismatch,
                "compose: f is " + f.shape() + ", g is " + g.shape());
  const Field field = f.field();
  const std::size_t rows = f.rows();
  const std::size_t cols = g.cols();
  std::vector<Scalar> entries(rows * cols, Scalar::zero(field));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto &gk : g.column(j))
      for (const auto &fi : f.column(gk.index))
        entries[fi.index * cols + j] += fi.coeff * gk.coeff;
  return LinMap(field, g.domain(), f.codomain(), std::move(entries));
}

LinMap tensor(const LinMap &f, const LinMap &g) {
  require_same_field(f.field(), g.field());
  const Field field = f.field();
  const std::size_t rows = f.rows() * g.rows();
  const std::size_t cols = f.cols() * g.cols();
  std::vector<Scalar> entries(rows * cols, Scalar::zero(field));
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (std::size_t l = 0; l < g.cols(); ++l)
      for (const auto &fi : f.column(j))
        for (const auto &gk : g.column(l))
          entries[(fi.index * g.rows() + gk.index) * cols + (j * g.cols() + l)] =
              fi.coeff * gk.coeff;
  return LinMap(field, Space(cols), Space(rows), std::move(entries));
}

LinMap braiding(Field field, const Space &a, const Space &b) {
  const std::size_t n = a.dim() * b.dim();
  std::vector<Scalar> entries(n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      entries[(j * a.dim() + i) * n + (i * b.dim() + j)] = Scalar::one(field);
  return LinMap(field, Space(n), Space(n), std::move(entries));
}

Comparison equal(const LinMap &f, const LinMap &g) {
  if (f.field() != g.field())
    return {false, Mismatch::noted("field " + f.field().to_string() + " vs " +
                                    g.field().to_string())};
  if (f.rows() != g.rows() || f.cols() != g.cols())
    return {false, Mismatch::noted("shape " + f.shape() + " vs " + g.shape())};
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r)
      if (!(f.at(r, c) == g.at(r, c)))
        return {false, Mismatch{r, c, f.at(r, c).to_string(), g.at(r, c).to_string(), {}}};
  return {true, std::nullopt};
}

} // namespace brace_forge
