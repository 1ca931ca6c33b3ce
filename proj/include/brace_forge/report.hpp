#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace brace_forge {

/// Counterexample for a failed equation: the first domain basis column on
/// which the two sides differ, and the first differing codomain row.
struct Witness {
  std::string equation;
  std::size_t column = 0;
  std::optional<std::size_t> row;
  std::string lhs;
  std::string rhs;
  std::string note;

  /// Witness carrying only a note (shape, field or consistency failures).
  static Witness noted(std::string note) {
    Witness w;
    w.note = std::move(note);
    return w;
  }

  std::string to_string() const;
};

struct AxiomEntry {
  std::string name;
  std::string description;
  bool passed = true;
  /// Consequence that must hold whenever the primary entries pass.
  bool derived = false;
  std::optional<Witness> witness;
};

/// Ordered list of axiom verdicts. Failed entries always carry a witness.
class AxiomReport {
public:
  AxiomReport() = default;

  void add(AxiomEntry entry);
  void add_pass(std::string name, std::string description, bool derived = false);
  void add_fail(std::string name, std::string description, Witness witness,
                bool derived = false);
  /// Appends every entry of `other`, prefixing names with `prefix`.
  void merge(const AxiomReport &other, std::string_view prefix = {});

  bool all_passed() const;
  bool primary_passed() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<AxiomEntry> &entries() const { return entries_; }
  std::vector<const AxiomEntry *> failures() const;
  const AxiomEntry *find(std::string_view name) const;
  /// Names of failed entries, in report order.
  std::vector<std::string> failed_names() const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

private:
  std::vector<AxiomEntry> entries_;
};

} // namespace brace_forge
