#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "brace_forge/io.hpp"
#include "brace_forge/matched_pair.hpp"
#include "brace_forge/obt.hpp"
#include "brace_forge/set_braces.hpp"
#include "brace_forge/suite.hpp"

namespace brace_forge::cli {

namespace {

namespace fs = std::filesystem;

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::PrereqFailed:
  case ErrorKind::NotCocommutative:
  case ErrorKind::NotDiagonal:
  case ErrorKind::NotAGroup:
  case ErrorKind::ObtAxiomsFailed:
  case ErrorKind::BraceAxiomsFailed:
  case ErrorKind::MpAxiomsFailed:
  case ErrorKind::SkewBraceAxiomsFailed:
  case ErrorKind::OrderTooLarge:
    return kPrecondition;
  default:
    return kIoError;
  }
}

int print_report(const AxiomReport &report, bool as_json, std::ostream &out) {
  if (as_json)
    out << report.to_json().dump(2) << "\n";
  else
    out << report.to_text();
  return report.all_passed() ? kOk : kAxiomFailure;
}

AxiomReport check_file(const std::string &kind, const io::StructureFile &file) {
  if (kind == "hopf")
    return check_hopf(io::expect<HopfAlgebraData>(file, kind));
  if (kind == "brace")
    return check_hopf_brace(io::expect<HopfBraceData>(file, kind));
  if (kind == "obt")
    return check_obt(io::expect<OppBraceTripleData>(file, kind));
  if (kind == "matched_pair")
    return check_matched_pair(io::expect<MatchedPairData>(file, "matched_pair"));
  if (kind == "mp_over_a")
    return check_mp_over_A(io::expect<MatchedPairData>(file, "matched_pair"));
  if (kind == "group")
    return check_group(io::expect<CayleyTable>(file, kind));
  if (kind == "skew_brace")
    return check_skew_brace(io::expect<SkewBraceData>(file, kind));
  throw Error(ErrorKind::SchemaError, "unknown kind \"" + kind + "\"");
}

CayleyTable group_source(const std::string &spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.starts_with(prefix))
    return groups::builtin(std::string_view(spec).substr(prefix.size()));
  return io::expect<CayleyTable>(io::load(spec), "group");
}

io::StructureFile construct(const std::string &what, const std::string &input,
                            const std::string &field_spec) {
  io::StructureFile out{CayleyTable(1, {0}, 0), {{"construction", what}}};
  if (what == "group-algebra") {
    const CayleyTable g = group_source(input);
    out.value = group_algebra(g, Field::parse(field_spec));
    if (!g.label().empty())
      out.metadata["label"] = "K[" + g.label() + "]";
    return out;
  }
  const io::StructureFile in = io::load(input);
  if (what == "P")
    out.value = functor_P(io::expect<OppBraceTripleData>(in, "obt"));
  else if (what == "Q")
    out.value = functor_Q(io::expect<HopfBraceData>(in, "brace"));
  else if (what == "F")
    out.value = functor_F(io::expect<HopfBraceData>(in, "brace"));
  else if (what == "G")
    out.value = functor_G(io::expect<MatchedPairData>(in, "matched_pair"));
  else if (what == "obt-from-mp")
    out.value = obt_from_matched_pair(io::expect<MatchedPairData>(in, "matched_pair"));
  else if (what == "trivial-brace")
    out.value = trivial_brace(io::expect<HopfAlgebraData>(in, "hopf"));
  else
    throw Error(ErrorKind::SchemaError, "unknown construction \"" + what + "\"");
  return out;
}

AxiomReport roundtrip(const std::string &which, const io::StructureFile &file) {
  if (which == "PQ")
    return roundtrip_PQ(io::expect<HopfBraceData>(file, "brace"));
  if (which == "QP")
    return roundtrip_QP(io::expect<OppBraceTripleData>(file, "obt"));
  if (which == "FG")
    return roundtrip_FG(io::expect<MatchedPairData>(file, "matched_pair"));
  if (which == "GF")
    return roundtrip_GF(io::expect<HopfBraceData>(file, "brace"));
  throw Error(ErrorKind::SchemaError, "unknown round trip \"" + which + "\"");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact checker for Hopf algebras, Hopf braces, opposite brace triples and "
               "matched pairs",
               "brace-forge"};
  app.require_subcommand(1);

  std::string kind, file, output, what, which, group, field_spec = "Q";
  bool as_json = false;

  auto *check = app.add_subcommand("check", "Check the axioms of a structure file");
  check->add_option("kind", kind, "hopf|brace|obt|matched_pair|mp_over_a|group|skew_brace")
      ->required();
  check->add_option("file", file)->required();
  check->add_flag("--json", as_json, "Machine-readable report");

  auto *cons = app.add_subcommand("construct", "Apply a functor or constructor");
  cons->add_option("what", what, "P|Q|F|G|obt-from-mp|group-algebra|trivial-brace")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "F", "G", "obt-from-mp", "group-algebra",
                             "trivial-brace"}));
  cons->add_option("file", file, "Input file (builtin:<name> for group-algebra)")->required();
  cons->add_option("-o,--output", output)->required();
  cons->add_option("--field", field_spec, "Field for group-algebra: Q or Fp:<p>");

  auto *rt = app.add_subcommand("roundtrip", "Exact round trip through two functors");
  rt->add_option("which", which)->required()->check(CLI::IsMember({"PQ", "QP", "FG", "GF"}));
  rt->add_option("file", file)->required();
  rt->add_flag("--json", as_json);

  std::size_t max_order = 8;
  auto *en = app.add_subcommand("enumerate", "Enumerate structures");
  en->require_subcommand(1);
  auto *sb = en->add_subcommand("skew-braces", "All skew braces over a group");
  sb->add_option("--group", group, "Group file, builtin:Zn, builtin:S3, ...")->required();
  sb->add_option("--max-order", max_order, "Refuse groups above this order")
      ->check(CLI::Range(1, 8));
  sb->add_option("-o,--output", output, "Directory for one file per skew brace");

  auto *lin = app.add_subcommand("linearize", "Linearize a skew brace into a Hopf brace");
  lin->add_option("file", file)->required();
  lin->add_option("--field", field_spec)->required();
  lin->add_option("-o,--output", output)->required();

  std::size_t suite_order = 6;
  std::vector<std::string> suite_fields;
  unsigned threads = 0;
  bool no_morphisms = false;
  auto *su = app.add_subcommand("suite", "Run the corpus acceptance sweep");
  su->add_option("--max-order", suite_order)->check(CLI::Range(1, 8));
  su->add_option("--field", suite_fields, "Q or Fp:<p>; repeat for several fields");
  su->add_option("--threads", threads, "Worker threads (default BRACE_FORGE_THREADS or all)");
  su->add_flag("--no-morphisms", no_morphisms, "Skip the endomorphism sweep");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n" << "Run with --help for usage.\n";
    return kIoError;
  }

  try {
    if (*check)
      return print_report(check_file(kind, io::load(file)), as_json, out);

    if (*cons) {
      io::save(construct(what, file, field_spec), output);
      out << "wrote " << output << "\n";
      return kOk;
    }

    if (*rt) {
      const AxiomReport report = roundtrip(which, io::load(file));
      if (as_json)
        return print_report(report, true, out);
      if (report.all_passed()) {
        out << "roundtrip " << which << ": exact\n";
        return kOk;
      }
      const AxiomEntry *first = report.failures().front();
      out << "roundtrip " << which << ": component " << first->name << " differs: "
          << first->witness->to_string() << "\n";
      return kAxiomFailure;
    }

    if (*sb) {
      const CayleyTable dot = group_source(group);
      if (dot.order() > max_order)
        throw Error(ErrorKind::OrderTooLarge, "group of order " + std::to_string(dot.order()) +
                                                  " exceeds --max-order " +
                                                  std::to_string(max_order));
      const Enumeration e = enumerate_skew_braces(dot);
      const std::string label = dot.label().empty() ? "group" : dot.label();
      if (!output.empty()) {
        fs::create_directories(output);
        for (std::size_t i = 0; i < e.braces.size(); ++i) {
          const std::string name = label + "_" + std::to_string(i);
          io::save(io::StructureFile{e.braces[i], {{"label", name}}},
                   fs::path(output) / (name + ".json"));
        }
      }
      out << label << ": order " << dot.order() << ", " << e.candidates
          << " labelled group tables tried, " << e.braces.size() << " labelled skew braces\n";
      return kOk;
    }

    if (*lin) {
      const io::StructureFile in = io::load(file);
      io::StructureFile result{linearize(io::expect<SkewBraceData>(in, "skew_brace"),
                                         Field::parse(field_spec)),
                               {{"construction", "linearize"}}};
      if (const auto it = in.metadata.find("label"); it != in.metadata.end())
        result.metadata["label"] = it->second;
      io::save(result, output);
      out << "wrote " << output << "\n";
      return kOk;
    }

    if (*su) {
      suite::Options opts;
      opts.max_order = suite_order;
      opts.threads = threads;
      opts.morphisms = !no_morphisms;
      if (!suite_fields.empty()) {
        opts.fields.clear();
        for (const auto &f : suite_fields)
          opts.fields.push_back(Field::parse(f));
      }
      const suite::Result r = suite::run(opts);
      out << r.to_text();
      return r.passed() ? kOk : kAxiomFailure;
    }
  } catch (const Error &e) {
    err << e.what() << "\n";
    if (e.report())
      err << e.report()->to_text();
    return exit_code(e.kind());
  } catch (const fs::filesystem_error &e) {
    err << "IoError: " << e.what() << "\n";
    return kIoError;
  }
  return kIoError;
}

} // namespace brace_forge::cli
