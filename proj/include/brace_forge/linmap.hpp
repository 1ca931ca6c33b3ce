#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brace_forge/scalar.hpp"

namespace brace_forge {

/// Finite-dimensional object of the base category. The unit object K is the
/// one-dimensional space.
class Space {
public:
  /// Throws Error(DimensionMismatch) when dim == 0.
  explicit Space(std::size_t dim, std::string label = {});

  static Space unit() { return Space(1, "K"); }

  std::size_t dim() const { return dim_; }
  const std::string &label() const { return label_; }

  friend bool operator==(const Space &a, const Space &b) { return a.dim_ == b.dim_; }

private:
  std::size_t dim_;
  std::string label_;
};

/// One nonzero coordinate of a sparse vector.
struct Term {
  std::size_t index;
  Scalar coeff;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

/// Immutable dense matrix of a linear map domain -> codomain, stored as
/// codomain.dim x domain.dim. Copies share storage.
///
/// Tensor index convention: the basis of A (x) B is lexicographic with the
/// left factor major, index(i, j) = i * dim(B) + j.
class LinMap {
public:
  /// Zero map.
  LinMap(Field field, Space domain, Space codomain);
  /// Row-major entries, size codomain.dim * domain.dim.
  LinMap(Field field, Space domain, Space codomain, std::vector<Scalar> entries);

  static LinMap identity(Field field, std::size_t dim);
  /// Columns given as sparse vectors; column j is the image of e_j.
  static LinMap from_columns(Field field, std::size_t domain_dim, std::size_t codomain_dim,
                             const std::vector<SparseVector> &columns);

  Field field() const { return field_; }
  const Space &domain() const { return domain_; }
  const Space &codomain() const { return codomain_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }

  const Scalar &at(std::size_t row, std::size_t col) const;
  /// Nonzero entries of column `col`, ascending row order.
  std::span<const Term> column(std::size_t col) const;
  bool is_identity() const;

  /// Copy with one entry replaced.
  LinMap with_entry(std::size_t row, std::size_t col, Scalar value) const;
  /// Copy with domain/codomain relabelled.
  LinMap relabel(Space domain, Space codomain) const;

  std::string shape() const;

private:
  struct Storage {
    std::vector<Scalar> entries;
    std::vector<std::size_t> column_offsets;
    std::vector<Term> column_terms;
  };

  Field field_;
  Space domain_;
  Space codomain_;
  std::shared_ptr<const Storage> storage_;
};

/// f o g. Throws DimensionMismatch (both shapes in the message) or FieldMismatch.
LinMap compose(const LinMap &f, const LinMap &g);
/// Kronecker product under the left-major convention.
LinMap tensor(const LinMap &f, const LinMap &g);
/// Symmetric braiding c_{A,B}: e_i (x) e_j -> e_j (x) e_i.
LinMap braiding(Field field, const Space &a, const Space &b);

struct Mismatch {
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::string lhs;
  std::string rhs;
  std::string note;

  static Mismatch noted(std::string note) {
    Mismatch m;
    m.note = std::move(note);
    return m;
  }
};

struct Comparison {
  bool equal = true;
  std::optional<Mismatch> witness;

  explicit operator bool() const { return equal; }
};

/// Exact comparison. The witness is the first differing entry scanning
/// column by column, or a shape/field description.
Comparison equal(const LinMap &f, const LinMap &g);

} // namespace brace_forge
