#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "brace_forge/set_braces.hpp"

namespace brace_forge::suite {

/// One linearized skew brace of the corpus.
struct CorpusItem {
  std::string label; ///< e.g. "S3#4/Q"
  SkewBraceData skew;
  Field field;
};

/// Every skew brace on every group of order <= max_order, linearized over
/// each field, in deterministic order.
std::vector<CorpusItem> build_corpus(std::size_t max_order, const std::vector<Field> &fields);

struct Tally {
  std::string id;
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures; ///< one line per failed check

  bool passed() const { return failures.empty(); }
  void record(bool ok, const std::string &what);
  /// One check per report; failures list every failed entry.
  void record(const AxiomReport &report, const std::string &what);
  void merge(const Tally &other);
};

struct Options {
  std::size_t max_order = 6;
  std::vector<Field> fields{Field::rationals()};
  /// 0: BRACE_FORGE_THREADS if set, else hardware concurrency.
  unsigned threads = 0;
  bool morphisms = true;
};

struct Result {
  std::vector<Tally> criteria;
  std::size_t corpus_size = 0;

  bool passed() const;
  const Tally *find(const std::string &id) const;
  std::string to_text() const;
};

/// Group algebras of every builtin group of order <= 8 over each field:
/// check_hopf and check_antipode_properties.
Tally hopf_foundation(const std::vector<Field> &fields);

/// Theorem sweep over the corpus. Criteria, in order: C1 (Hopf foundation),
/// C2 (deformed Hopf algebra), C3 (functor P and Gamma recovery), C4
/// (corpus generation), C5 (P/Q round trips), C6 (F/G and Gamma of G), C7
/// (triples from matched pairs), C8 (derived identities on objects and
/// endomorphisms), C9 (module structures).
Result run(const Options &opts);

/// Worker count honouring BRACE_FORGE_THREADS.
unsigned thread_count(unsigned requested);

/// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &f);

} // namespace brace_forge::suite
