#include "brace_forge/cayley.hpp"

#include "brace_forge/error.hpp"

namespace brace_forge {

CayleyTable::CayleyTable(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
                         std::string label)
    : order_(order), table_(std::move(table)), identity_(identity), label_(std::move(label)) {
  if (order_ == 0)
    throw Error(ErrorKind::NotAGroup, "empty index set");
  if (table_.size() != order_ * order_)
    throw Error(ErrorKind::NotAGroup, "table has " + std::to_string(table_.size()) +
                                          " entries, expected " +
                                          std::to_string(order_ * order_));
  if (identity_ >= order_)
    throw Error(ErrorKind::NotAGroup, "identity index out of range");
  for (std::size_t x : table_)
    if (x >= order_)
      throw Error(ErrorKind::NotAGroup, "table entry " + std::to_string(x) + " out of range");
}

std::optional<std::size_t> CayleyTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order_; ++b)
    if ((*this)(a, b) == identity_ && (*this)(b, a) == identity_)
      return b;
  return std::nullopt;
}

CayleyTable CayleyTable::opposite() const {
  std::vector<std::size_t> t(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      t[a * order_ + b] = (*this)(b, a);
  return CayleyTable(order_, std::move(t), identity_, label_.empty() ? label_ : label_ + "^op");
}

CayleyTable CayleyTable::relabel(const std::vector<std::size_t> &perm) const {
  if (perm.size() != order_)
    throw Error(ErrorKind::NotAGroup, "relabelling of the wrong size");
  std::vector<std::size_t> t(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      t[perm[a] * order_ + perm[b]] = perm[(*this)(a, b)];
  return CayleyTable(order_, std::move(t), perm[identity_], label_);
}

CayleyTable CayleyTable::with_label(std::string label) const {
  CayleyTable out = *this;
  out.label_ = std::move(label);
  return out;
}

AxiomReport check_group(const CayleyTable &t) {
  const std::size_t n = t.order();
  const std::size_t e = t.identity();
  AxiomReport report;

  AxiomEntry identity{"group.identity", "e . a = a = a . e", true, false, std::nullopt};
  for (std::size_t a = 0; a < n && identity.passed; ++a)
    if (t(e, a) != a || t(a, e) != a) {
      identity.passed = false;
      identity.witness = Witness{"identity", a, std::nullopt, {}, {},
                                 "a=" + std::to_string(a) + ": e.a=" + std::to_string(t(e, a)) +
                                     ", a.e=" + std::to_string(t(a, e))};
    }
  report.add(std::move(identity));

  AxiomEntry inverses{"group.inverses", "every a has a two-sided inverse", true, false,
                      std::nullopt};
  for (std::size_t a = 0; a < n && inverses.passed; ++a)
    if (!t.inverse(a)) {
      inverses.passed = false;
      inverses.witness =
          Witness{"inverses", a, std::nullopt, {}, {}, "a=" + std::to_string(a) + " has no inverse"};
    }
  report.add(std::move(inverses));

  AxiomEntry assoc{"group.associativity", "(a . b) . c = a . (b . c)", true, false, std::nullopt};
  for (std::size_t a = 0; a < n && assoc.passed; ++a)
    for (std::size_t b = 0; b < n && assoc.passed; ++b)
      for (std::size_t c = 0; c < n && assoc.passed; ++c) {
        const std::size_t lhs = t(t(a, b), c);
        const std::size_t rhs = t(a, t(b, c));
        if (lhs != rhs) {
          assoc.passed = false;
          assoc.witness = Witness{"associativity", (a * n + b) * n + c, std::nullopt,
                                  std::to_string(lhs), std::to_string(rhs),
                                  "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ")"};
        }
      }
  report.add(std::move(assoc));
  return report;
}

} // namespace brace_forge
