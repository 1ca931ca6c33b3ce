#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brace_forge/report.hpp"

namespace brace_forge {

/// Binary operation on the index set {0, ..., n-1} with a designated
/// identity index. Closure holds by construction; group axioms are checked
/// separately by check_group.
class CayleyTable {
public:
  /// `table` is row-major: table[a * n + b] = a . b. Throws
  /// Error(NotAGroup) if sizes or entries are out of range.
  CayleyTable(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
              std::string label = {});

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  const std::string &label() const { return label_; }
  const std::vector<std::size_t> &table() const { return table_; }

  std::size_t operator()(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  /// Two-sided inverse, if one exists.
  std::optional<std::size_t> inverse(std::size_t a) const;

  /// a . b := b . a
  CayleyTable opposite() const;
  /// Transport along the bijection `perm` (new index of old element x is perm[x]).
  CayleyTable relabel(const std::vector<std::size_t> &perm) const;
  CayleyTable with_label(std::string label) const;

  friend bool operator==(const CayleyTable &a, const CayleyTable &b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }
  friend std::strong_ordering operator<=>(const CayleyTable &a, const CayleyTable &b) {
    if (auto c = a.order_ <=> b.order_; c != 0)
      return c;
    if (auto c = a.identity_ <=> b.identity_; c != 0)
      return c;
    return a.table_ <=> b.table_;
  }

private:
  std::size_t order_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::string label_;
};

/// Identity law, existence of inverses and associativity; witnesses carry
/// the offending elements.
AxiomReport check_group(const CayleyTable &t);

} // namespace brace_forge
