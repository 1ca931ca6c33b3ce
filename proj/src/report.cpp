#include "brace_forge/report.hpp"

#include <sstream>

namespace brace_forge {

std::string Witness::to_string() const {
  std::ostringstream out;
  if (!equation.empty())
    out << equation << ": ";
  out << "column " << column;
  if (row)
    out << ", row " << *row << ": lhs=" << lhs << " rhs=" << rhs;
  if (!note.empty())
    out << (row ? " " : ": ") << note;
  return out.str();
}

void AxiomReport::add(AxiomEntry entry) {
  if (!entry.passed && !entry.witness)
    entry.witness = Witness::noted("no witness supplied");
  entries_.push_back(std::move(entry));
}

void AxiomReport::add_pass(std::string name, std::string description, bool derived) {
  add(AxiomEntry{std::move(name), std::move(description), true, derived, std::nullopt});
}

void AxiomReport::add_fail(std::string name, std::string description, Witness witness,
                           bool derived) {
  add(AxiomEntry{std::move(name), std::move(description), false, derived, std::move(witness)});
}

void AxiomReport::merge(const AxiomReport &other, std::string_view prefix) {
  for (auto entry : other.entries_) {
    entry.name = std::string(prefix) + entry.name;
    entries_.push_back(std::move(entry));
  }
}

bool AxiomReport::all_passed() const {
  for (const auto &e : entries_)
    if (!e.passed)
      return false;
  return true;
}

bool AxiomReport::primary_passed() const {
  for (const auto &e : entries_)
    if (!e.passed && !e.derived)
      return false;
  return true;
}

std::vector<const AxiomEntry *> AxiomReport::failures() const {
  std::vector<const AxiomEntry *> out;
  for (const auto &e : entries_)
    if (!e.passed)
      out.push_back(&e);
  return out;
}

const AxiomEntry *AxiomReport::find(std::string_view name) const {
  for (const auto &e : entries_)
    if (e.name == name)
      return &e;
  return nullptr;
}

std::vector<std::string> AxiomReport::failed_names() const {
  std::vector<std::string> out;
  for (const auto &e : entries_)
    if (!e.passed)
      out.push_back(e.name);
  return out;
}

std::string AxiomReport::to_text() const {
  std::ostringstream out;
  for (const auto &e : entries_) {
    out << (e.passed ? "PASS " : "FAIL ") << e.name;
    if (e.derived)
      out << " [derived]";
    if (!e.description.empty())
      out << "  " << e.description;
    out << '\n';
    if (e.witness)
      out << "     witness: " << e.witness->to_string() << '\n';
  }
  return out.str();
}

nlohmann::ordered_json AxiomReport::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto &e : entries_) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["passed"] = e.passed;
    j["derived"] = e.derived;
    if (e.witness) {
      nlohmann::ordered_json w;
      w["equation"] = e.witness->equation;
      w["column"] = e.witness->column;
      if (e.witness->row)
        w["row"] = *e.witness->row;
      else
        w["row"] = nullptr;
      w["lhs"] = e.witness->lhs;
      w["rhs"] = e.witness->rhs;
      w["note"] = e.witness->note;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["passed"] = all_passed();
  out["entries"] = std::move(entries);
  return out;
}

} // namespace brace_forge
