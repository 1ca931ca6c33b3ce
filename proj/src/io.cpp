#include "brace_forge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brace_forge/error.hpp"

namespace brace_forge::io {

using nlohmann::json;

namespace {

using NamedMaps = std::vector<std::pair<std::string, LinMap>>;

struct MapSpec {
  std::string key;
  std::size_t rows;
  std::size_t cols;
};

std::vector<MapSpec> hopf_specs(const std::string &prefix, std::size_t n) {
  return {{prefix + "eta", n, 1},
          {prefix + "mu", n, n * n},
          {prefix + "eps", 1, n},
          {prefix + "delta", n * n, n},
          {prefix + "lambda", n, n}};
}

std::vector<MapSpec> brace_specs(std::size_t n) {
  return {{"eta", n, 1},     {"eps", 1, n},     {"delta", n * n, n}, {"mu1", n, n * n},
          {"lambda1", n, n}, {"mu2", n, n * n}, {"lambda2", n, n}};
}

std::vector<MapSpec> obt_specs(std::size_t n) {
  auto specs = hopf_specs("", n);
  specs.push_back({"m", n, n * n});
  specs.push_back({"u", n, n});
  return specs;
}

std::vector<MapSpec> mp_specs(std::size_t na, std::size_t nh) {
  auto specs = hopf_specs("A.", na);
  for (auto &s : hopf_specs("H.", nh))
    specs.push_back(std::move(s));
  specs.push_back({"phi_A", na, nh * na});
  specs.push_back({"phi_H", nh, nh * na});
  return specs;
}

NamedMaps named(const std::string &prefix, const HopfAlgebraData &h) {
  return {{prefix + "eta", h.eta()},
          {prefix + "mu", h.mu()},
          {prefix + "eps", h.eps()},
          {prefix + "delta", h.delta()},
          {prefix + "lambda", h.lambda()}};
}

// ---- writing ----

std::string quoted(const std::string &s) { return json(s).dump(); }

class Writer {
public:
  explicit Writer(std::string_view kind) {
    out_ << "{\n  \"format\": " << quoted(std::string(kFormat)) << ",\n";
    out_ << "  \"kind\": " << quoted(std::string(kind));
  }

  void field(const std::string &key, const std::string &raw_value) {
    out_ << ",\n  " << quoted(key) << ": " << raw_value;
  }

  void maps(const NamedMaps &maps) {
    out_ << ",\n  \"maps\": {\n";
    for (std::size_t i = 0; i < maps.size(); ++i) {
      out_ << "    " << quoted(maps[i].first) << ": ";
      matrix(maps[i].second);
      out_ << (i + 1 < maps.size() ? ",\n" : "\n");
    }
    out_ << "  }";
  }

  void table(const std::string &key, const CayleyTable &t) {
    const std::size_t n = t.order();
    out_ << ",\n  " << quoted(key) << ": [\n";
    for (std::size_t a = 0; a < n; ++a) {
      out_ << "    [";
      for (std::size_t b = 0; b < n; ++b)
        out_ << (b ? ", " : "") << t(a, b);
      out_ << "]" << (a + 1 < n ? ",\n" : "\n");
    }
    out_ << "  ]";
  }

  std::string finish(const std::map<std::string, std::string> &metadata) {
    if (!metadata.empty()) {
      out_ << ",\n  \"metadata\": {\n";
      std::size_t i = 0;
      for (const auto &[k, v] : metadata)
        out_ << "    " << quoted(k) << ": " << quoted(v) << (++i < metadata.size() ? ",\n" : "\n");
      out_ << "  }";
    }
    out_ << "\n}\n";
    return out_.str();
  }

private:
  void matrix(const LinMap &f) {
    out_ << "[\n";
    for (std::size_t r = 0; r < f.rows(); ++r) {
      out_ << "      [";
      for (std::size_t c = 0; c < f.cols(); ++c)
        out_ << (c ? ", " : "") << quoted(f.at(r, c).to_string());
      out_ << "]" << (r + 1 < f.rows() ? ",\n" : "\n");
    }
    out_ << "    ]";
  }

  std::ostringstream out_;
};

struct Serializer {
  const std::map<std::string, std::string> &metadata;

  std::string linear(std::string_view kind, Field f, std::size_t dim, const NamedMaps &maps) {
    Writer w(kind);
    w.field("field", quoted(f.to_string()));
    w.field("dim", std::to_string(dim));
    w.maps(maps);
    return w.finish(metadata);
  }

  std::string operator()(const HopfAlgebraData &h) {
    return linear("hopf", h.field(), h.dim(), named("", h));
  }
  std::string operator()(const HopfBraceData &b) {
    return linear("brace", b.field(), b.dim(),
                  {{"eta", b.unit},
                   {"eps", b.counit},
                   {"delta", b.coproduct},
                   {"mu1", b.product1},
                   {"lambda1", b.antipode1},
                   {"mu2", b.product2},
                   {"lambda2", b.antipode2}});
  }
  std::string operator()(const OppBraceTripleData &t) {
    NamedMaps maps = named("", t.hopf);
    maps.emplace_back("m", t.m);
    maps.emplace_back("u", t.u);
    return linear("obt", t.field(), t.dim(), maps);
  }
  std::string operator()(const MatchedPairData &m) {
    NamedMaps maps = named("A.", m.a);
    for (auto &p : named("H.", m.h))
      maps.push_back(std::move(p));
    maps.emplace_back("phi_A", m.phi_a);
    maps.emplace_back("phi_H", m.phi_h);
    Writer w("matched_pair");
    w.field("field", quoted(m.field().to_string()));
    w.field("dim", std::to_string(m.a.dim()));
    w.field("dim_h", std::to_string(m.h.dim()));
    w.maps(maps);
    return w.finish(metadata);
  }
  std::string operator()(const CayleyTable &t) {
    Writer w("group");
    w.field("order", std::to_string(t.order()));
    w.field("identity", std::to_string(t.identity()));
    w.table("table", t);
    return w.finish(metadata);
  }
  std::string operator()(const SkewBraceData &s) {
    Writer w("skew_brace");
    w.field("order", std::to_string(s.order()));
    w.field("identity", std::to_string(s.dot.identity()));
    w.table("dot", s.dot);
    w.table("circ", s.circ);
    return w.finish(metadata);
  }
};

// ---- reading ----

[[noreturn]] void fail(ErrorKind kind, const std::string &path, const std::string &msg) {
  throw Error(kind, path + ": " + msg);
}

const json &member(const json &obj, const std::string &key, const std::string &path) {
  const auto it = obj.find(key);
  if (it == obj.end())
    fail(ErrorKind::SchemaError, path, "missing key \"" + key + "\"");
  return *it;
}

void only_keys(const json &obj, const std::set<std::string> &allowed, const std::string &path) {
  for (const auto &[k, v] : obj.items())
    if (!allowed.contains(k))
      fail(ErrorKind::SchemaError, path, "unknown key \"" + k + "\"");
}

std::size_t positive(const json &obj, const std::string &key, const std::string &path,
                     std::size_t min = 1) {
  const json &v = member(obj, key, path);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() < min || v.get<std::uint64_t>() > 4096)
    fail(ErrorKind::SchemaError, path + "." + key,
         "expected an integer in [" + std::to_string(min) + ", 4096]");
  return v.get<std::size_t>();
}

LinMap read_matrix(const json &v, const MapSpec &spec, Field field, const std::string &path) {
  const std::string where = path + "." + spec.key;
  const std::string expected = std::to_string(spec.rows) + "x" + std::to_string(spec.cols);
  if (!v.is_array())
    fail(ErrorKind::ShapeError, where, "expected an array of rows (" + expected + ")");
  if (v.size() != spec.rows)
    fail(ErrorKind::ShapeError, where,
         std::to_string(v.size()) + " rows, expected " + std::to_string(spec.rows) + " (" +
             expected + ")");
  std::vector<Scalar> entries;
  entries.reserve(spec.rows * spec.cols);
  for (std::size_t r = 0; r < spec.rows; ++r) {
    const json &row = v[r];
    const std::string rpath = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != spec.cols)
      fail(ErrorKind::ShapeError, rpath,
           (row.is_array() ? std::to_string(row.size()) + " entries" : std::string("not an array")) +
               ", expected " + std::to_string(spec.cols));
    for (std::size_t c = 0; c < spec.cols; ++c) {
      const std::string epath = rpath + "[" + std::to_string(c) + "]";
      if (!row[c].is_string())
        fail(ErrorKind::SchemaError, epath, "scalars are written as strings");
      try {
        entries.push_back(Scalar::parse(field, row[c].get<std::string>()));
      } catch (const Error &e) {
        fail(e.kind(), epath, e.detail());
      }
    }
  }
  return LinMap(field, Space(spec.cols), Space(spec.rows), std::move(entries));
}

std::map<std::string, LinMap> read_maps(const json &doc, const std::vector<MapSpec> &specs,
                                        Field field, std::set<std::string> optional_keys = {}) {
  const json &maps = member(doc, "maps", "$");
  if (!maps.is_object())
    fail(ErrorKind::SchemaError, "$.maps", "expected an object");
  std::set<std::string> allowed = optional_keys;
  for (const auto &s : specs)
    allowed.insert(s.key);
  only_keys(maps, allowed, "$.maps");
  std::map<std::string, LinMap> out;
  for (const auto &s : specs)
    out.emplace(s.key, read_matrix(member(maps, s.key, "$.maps"), s, field, "$.maps"));
  return out;
}

HopfAlgebraData hopf_from(const std::map<std::string, LinMap> &maps, const std::string &prefix,
                          std::size_t n) {
  const Space space(n);
  return HopfAlgebraData{AlgebraData{space, maps.at(prefix + "eta"), maps.at(prefix + "mu")},
                         CoalgebraData{space, maps.at(prefix + "eps"), maps.at(prefix + "delta")},
                         maps.at(prefix + "lambda")};
}

Field read_field(const json &doc) {
  const json &f = member(doc, "field", "$");
  if (!f.is_string())
    fail(ErrorKind::SchemaError, "$.field", "expected \"Q\" or \"Fp:<p>\"");
  try {
    return Field::parse(f.get<std::string>());
  } catch (const Error &e) {
    fail(ErrorKind::SchemaError, "$.field", e.detail());
  }
}

CayleyTable read_table(const json &doc, const std::string &key, std::size_t n, std::size_t e) {
  const std::string where = "$." + key;
  const json &t = member(doc, key, "$");
  if (!t.is_array() || t.size() != n)
    fail(ErrorKind::ShapeError, where, "expected " + std::to_string(n) + " rows");
  std::vector<std::size_t> entries;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rpath = where + "[" + std::to_string(a) + "]";
    if (!t[a].is_array() || t[a].size() != n)
      fail(ErrorKind::ShapeError, rpath, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      const json &x = t[a][b];
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= n)
        fail(ErrorKind::SchemaError, rpath + "[" + std::to_string(b) + "]",
             "expected an index in [0, " + std::to_string(n) + ")");
      entries.push_back(x.get<std::size_t>());
    }
  }
  return CayleyTable(n, std::move(entries), e);
}

} // namespace

std::string_view StructureFile::kind() const {
  static constexpr std::string_view kNames[] = {"hopf",         "brace", "obt",
                                                "matched_pair", "group", "skew_brace"};
  return kNames[value.index()];
}

void throw_kind_mismatch(std::string_view expected, std::string_view actual) {
  throw Error(ErrorKind::SchemaError, "expected a " + std::string(expected) +
                                          " file, got kind \"" + std::string(actual) + "\"");
}

std::string serialize(const StructureFile &file) {
  return std::visit(Serializer{file.metadata}, file.value);
}

StructureFile parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::ParseError,
                "byte " + std::to_string(e.byte) + ": " + std::string(e.what()));
  }
  if (!doc.is_object())
    fail(ErrorKind::SchemaError, "$", "expected a JSON object");
  const json &format = member(doc, "format", "$");
  if (format != json(std::string(kFormat)))
    fail(ErrorKind::SchemaError, "$.format", "expected \"" + std::string(kFormat) + "\"");
  const json &kind_json = member(doc, "kind", "$");
  if (!kind_json.is_string())
    fail(ErrorKind::SchemaError, "$.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();

  StructureFile out{CayleyTable(1, {0}, 0), {}};
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object())
      fail(ErrorKind::SchemaError, "$.metadata", "expected an object of strings");
    for (const auto &[k, v] : it->items()) {
      if (!v.is_string())
        fail(ErrorKind::SchemaError, "$.metadata." + k, "expected a string");
      out.metadata.emplace(k, v.get<std::string>());
    }
  }

  if (kind == "group" || kind == "skew_brace") {
    const bool group = kind == "group";
    only_keys(doc,
              group ? std::set<std::string>{"format", "kind", "order", "identity", "table",
                                            "metadata"}
                    : std::set<std::string>{"format", "kind", "order", "identity", "dot", "circ",
                                            "metadata"},
              "$");
    const std::size_t n = positive(doc, "order", "$");
    const std::size_t e = positive(doc, "identity", "$", 0);
    if (e >= n)
      fail(ErrorKind::SchemaError, "$.identity", "must be smaller than the order");
    const auto label = out.metadata.contains("label") ? out.metadata.at("label") : std::string{};
    if (group)
      out.value = read_table(doc, "table", n, e).with_label(label);
    else
      out.value = SkewBraceData{read_table(doc, "dot", n, e), read_table(doc, "circ", n, e)};
    return out;
  }

  const bool mp = kind == "matched_pair";
  only_keys(doc,
            mp ? std::set<std::string>{"format", "kind", "field", "dim", "dim_h", "maps",
                                       "metadata"}
               : std::set<std::string>{"format", "kind", "field", "dim", "maps", "metadata"},
            "$");
  const Field field = read_field(doc);
  const std::size_t n = positive(doc, "dim", "$");
  if (kind == "hopf") {
    out.value = hopf_from(read_maps(doc, hopf_specs("", n), field), "", n);
  } else if (kind == "brace") {
    // A second unit is accepted only if it equals the shared one.
    const auto maps = read_maps(doc, brace_specs(n), field, {"eta2"});
    if (const auto it = doc.at("maps").find("eta2"); it != doc.at("maps").end()) {
      const LinMap eta2 = read_matrix(*it, {"eta2", n, 1}, field, "$.maps");
      if (!equal(eta2, maps.at("eta")))
        fail(ErrorKind::SchemaError, "$.maps.eta2", "a Hopf brace has a single shared unit");
    }
    out.value = HopfBraceData{Space(n),           maps.at("eta"),     maps.at("eps"),
                              maps.at("delta"),   maps.at("mu1"),     maps.at("lambda1"),
                              maps.at("mu2"),     maps.at("lambda2")};
  } else if (kind == "obt") {
    const auto maps = read_maps(doc, obt_specs(n), field);
    out.value = OppBraceTripleData{hopf_from(maps, "", n), maps.at("m"), maps.at("u")};
  } else if (mp) {
    const std::size_t nh = positive(doc, "dim_h", "$");
    const auto maps = read_maps(doc, mp_specs(n, nh), field);
    out.value = MatchedPairData{hopf_from(maps, "A.", n), hopf_from(maps, "H.", nh),
                                maps.at("phi_A"), maps.at("phi_H")};
  } else {
    fail(ErrorKind::SchemaError, "$.kind", "unknown kind \"" + kind + "\"");
  }
  return out;
}

StructureFile load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const Error &e) {
    throw Error(e.kind(), path.string() + ": " + e.detail(), e.report() ? *e.report() : AxiomReport{});
  }
}

void save(const StructureFile &file, const std::filesystem::path &path) {
  const std::string text = serialize(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush())
    throw Error(ErrorKind::IoError, "cannot write " + path.string());
}

} // namespace brace_forge::io
