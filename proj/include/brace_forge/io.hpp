#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "brace_forge/matched_pair.hpp"
#include "brace_forge/obt.hpp"
#include "brace_forge/set_braces.hpp"

namespace brace_forge::io {

inline constexpr std::string_view kFormat = "brace-forge/1";

using Structure = std::variant<HopfAlgebraData, HopfBraceData, OppBraceTripleData,
                               MatchedPairData, CayleyTable, SkewBraceData>;

/// A structure plus free-form string metadata (labels, provenance).
struct StructureFile {
  Structure value;
  std::map<std::string, std::string> metadata;

  /// "hopf", "brace", "obt", "matched_pair", "group" or "skew_brace".
  std::string_view kind() const;
};

/// Canonical text: fixed key order, one matrix row per line, scalars as
/// canonical strings, sorted metadata, trailing newline. parse(serialize(x))
/// reproduces x and serialize(parse(s)) == s for canonical s.
std::string serialize(const StructureFile &file);

/// Throws Error(ParseError) with the byte offset for malformed JSON,
/// Error(SchemaError) for missing/unknown keys or a bad kind/field,
/// Error(ShapeError) for arrays of the wrong shape and
/// Error(CanonicalFormError) for non-canonical scalars. Messages carry the
/// JSON path of the offending value.
StructureFile parse(std::string_view text);

/// Throws Error(IoError) if the file cannot be read, then as parse.
StructureFile load(const std::filesystem::path &path);
/// Throws Error(IoError) if the file cannot be written.
void save(const StructureFile &file, const std::filesystem::path &path);

[[noreturn]] void throw_kind_mismatch(std::string_view expected, std::string_view actual);

/// The structure of the expected kind, or Error(SchemaError).
template <class T> const T &expect(const StructureFile &file, std::string_view kind) {
  if (const T *v = std::get_if<T>(&file.value))
    return *v;
  throw_kind_mismatch(kind, file.kind());
}

} // namespace brace_forge::io
