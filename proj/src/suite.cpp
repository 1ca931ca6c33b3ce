#include "brace_forge/suite.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "brace_forge/actions.hpp"
#include "brace_forge/error.hpp"
#include "brace_forge/matched_pair.hpp"
#include "brace_forge/obt.hpp"
#include "composites.hpp"

namespace brace_forge::suite {

void Tally::record(bool ok, const std::string &what) {
  ++checks;
  if (!ok)
    failures.push_back(what);
}

void Tally::record(const AxiomReport &report, const std::string &what) {
  ++checks;
  for (const AxiomEntry *e : report.failures())
    failures.push_back(what + ": " + e->name + (e->witness ? " [" + e->witness->to_string() + "]" : ""));
}

void Tally::merge(const Tally &other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

bool Result::passed() const {
  for (const Tally &t : criteria)
    if (!t.passed())
      return false;
  return !criteria.empty();
}

const Tally *Result::find(const std::string &id) const {
  for (const Tally &t : criteria)
    if (t.id == id)
      return &t;
  return nullptr;
}

std::string Result::to_text() const {
  std::ostringstream out;
  out << "corpus: " << corpus_size << " linearized skew braces\n";
  for (const Tally &t : criteria) {
    out << t.id << "  " << (t.passed() ? "PASS" : "FAIL") << "  " << t.checks << " checks  "
        << t.title << "\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 10; ++i)
      out << "      " << t.failures[i] << "\n";
    if (t.failures.size() > 10)
      out << "      ... " << t.failures.size() - 10 << " more\n";
  }
  out << (passed() ? "suite: PASS" : "suite: FAIL") << "\n";
  return out.str();
}

unsigned thread_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("BRACE_FORGE_THREADS")) {
      const long cap = std::strtol(env, nullptr, 10);
      if (cap >= 1)
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
  }
  return n;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &f) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++)
        f(i);
    });
}

std::vector<CorpusItem> build_corpus(std::size_t max_order, const std::vector<Field> &fields) {
  std::vector<CorpusItem> out;
  for (const Field &field : fields)
    for (const CayleyTable &g : groups::up_to(max_order)) {
      const Enumeration e = enumerate_skew_braces(g);
      for (std::size_t i = 0; i < e.braces.size(); ++i)
        out.push_back({g.label() + "#" + std::to_string(i) + "/" + field.to_string(), e.braces[i],
                       field});
    }
  return out;
}

Tally hopf_foundation(const std::vector<Field> &fields) {
  Tally t{"C1", "Hopf foundation: group algebras of order <= 8", 0, {}};
  for (const Field &field : fields)
    for (const CayleyTable &g : groups::up_to(8)) {
      const std::string at = g.label() + "/" + field.to_string();
      try {
        const HopfAlgebraData h = group_algebra(g, field);
        const AxiomReport hopf = check_hopf(h);
        t.record(hopf, at + " check_hopf");
        if (hopf.all_passed())
          t.record(check_antipode_properties(h), at + " antipode properties");
      } catch (const Error &e) {
        t.record(false, at + ": " + e.what());
      }
    }
  return t;
}

namespace {

constexpr std::size_t kCriteria = 9;
using Tallies = std::array<Tally, kCriteria>;

Tallies empty_tallies() {
  return {Tally{"C1", "Hopf foundation: group algebras of order <= 8", 0, {}},
          Tally{"C2", "deformed product A~ is a Hopf algebra", 0, {}},
          Tally{"C3", "P(t) is a Hopf brace, Gamma(P(t)) = m o (lambda (x) id)", 0, {}},
          Tally{"C4", "skew brace corpus and linearization", 0, {}},
          Tally{"C5", "round trips PQ and QP", 0, {}},
          Tally{"C6", "F-images in MP(A), round trips FG and GF, Gamma(G(m)) = phi_A", 0, {}},
          Tally{"C7", "obt_from_matched_pair(m) = Q(G(m))", 0, {}},
          Tally{"C8", "derived identities on objects and morphisms", 0, {}},
          Tally{"C9", "module structures of Gamma, Phi and m", 0, {}}};
}

/// Runs `body`, recording any library error as a failure of `tally`.
template <class F> bool guarded(Tally &tally, const std::string &at, F &&body) {
  try {
    body();
    return true;
  } catch (const Error &e) {
    tally.record(false, at + ": " + e.what());
    return false;
  }
}

AxiomReport compare_triples(const OppBraceTripleData &x, const OppBraceTripleData &y) {
  AxiomReport r;
  r.add(detail::component("triple.", "eta", x.hopf.eta(), y.hopf.eta()));
  r.add(detail::component("triple.", "mu", x.hopf.mu(), y.hopf.mu()));
  r.add(detail::component("triple.", "eps", x.hopf.eps(), y.hopf.eps()));
  r.add(detail::component("triple.", "delta", x.hopf.delta(), y.hopf.delta()));
  r.add(detail::component("triple.", "lambda", x.hopf.lambda(), y.hopf.lambda()));
  r.add(detail::component("triple.", "m", x.m, y.m));
  r.add(detail::component("triple.", "u", x.u, y.u));
  return r;
}

LinMap m_lambda(const OppBraceTripleData &t) {
  return compose(t.m, tensor(t.hopf.lambda(), LinMap::identity(t.field(), t.dim())));
}

void deformed_checks(Tallies &t, const OppBraceTripleData &triple, const std::string &at) {
  guarded(t[1], at, [&] {
    t[1].record(check_obt(triple), at + " check_obt");
    t[1].record(check_hopf(build_deformed_hopf(triple)), at + " A~ check_hopf");
  });
  guarded(t[2], at, [&] {
    const HopfBraceData p = functor_P(triple);
    t[2].record(check_hopf_brace(p), at + " P(t) check_hopf_brace");
    t[2].record(equal(gamma(p), m_lambda(triple)).equal, at + " Gamma(P(t)) = m o (lambda (x) id)");
  });
}

void check_item(const CorpusItem &item, bool morphisms, Tallies &t) {
  const std::string &at = item.label;
  std::optional<HopfBraceData> lin;
  guarded(t[3], at, [&] {
    t[3].record(check_skew_brace(item.skew), at + " skew brace law");
    lin = linearize(item.skew, item.field);
    t[3].record(check_hopf_brace(*lin), at + " linearized check_hopf_brace");
    t[3].record(is_cocommutative(*lin), at + " cocommutative");
  });
  if (!lin)
    return;
  const HopfBraceData &b = *lin;

  std::optional<OppBraceTripleData> q;
  guarded(t[1], at, [&] { q = functor_Q(b); });
  if (q) {
    deformed_checks(t, *q, at + " Q(b)");
    guarded(t[4], at, [&] {
      t[4].record(roundtrip_PQ(b), at + " roundtrip PQ");
      t[4].record(roundtrip_QP(*q), at + " roundtrip QP");
    });
  }

  std::optional<MatchedPairData> mp;
  guarded(t[5], at, [&] {
    mp = functor_F(b);
    t[5].record(check_mp_over_A(*mp), at + " F(b) check_mp_over_A");
    t[5].record(roundtrip_FG(*mp), at + " roundtrip FG");
    t[5].record(roundtrip_GF(b), at + " roundtrip GF");
    t[5].record(equal(gamma(functor_G(*mp)), mp->phi_a).equal, at + " Gamma(G(m)) = phi_A");
  });
  if (mp) {
    std::optional<OppBraceTripleData> from_mp;
    guarded(t[6], at, [&] {
      from_mp = obt_from_matched_pair(*mp);
      t[6].record(compare_triples(*from_mp, functor_Q(functor_G(*mp))),
                  at + " obt_from_matched_pair = Q o G");
    });
    if (from_mp)
      deformed_checks(t, *from_mp, at + " obt_from_mp(F(b))");
  }

  guarded(t[7], at, [&] {
    t[7].record(check_brace_identities(b), at + " brace identities");
    if (!q)
      return;
    t[7].record(check_lemma_mu_recovery(*q), at + " mu recovery");
    t[7].record(equal(mu_tilde(*q), b.product1).equal, at + " mu~ of Q(b) = mu1");
    if (!morphisms || !mp)
      return;
    for (const auto &images : skew_brace_morphisms(item.skew, item.skew)) {
      const LinMap f = linearize_map(images, b.dim(), item.field);
      std::string name = at + " endomorphism (";
      for (std::size_t i = 0; i < images.size(); ++i)
        name += (i ? "," : "") + std::to_string(images[i]);
      name += ")";
      t[7].record(check_brace_morphism(f, b, b), name + " brace morphism");
      t[7].record(check_obt_morphism(f, *q, *q), name + " Q(f)");
      t[7].record(check_mp_morphism(f, f, *mp, *mp), name + " F(f)");
    }
  });

  guarded(t[8], at, [&] {
    const LeftModuleData gamma_module{b.second(), b.space, gamma(b)};
    const AxiomReport left = check_left_module(gamma_module);
    t[8].record(left, at + " (H1, Gamma) left module");
    if (left.all_passed()) {
      t[8].record(check_module_algebra(gamma_module, b.first().algebra),
                  at + " (H1, Gamma) module algebra");
      t[8].record(check_module_coalgebra(gamma_module, b.coalgebra()),
                  at + " (H1, Gamma) module coalgebra");
    }
    const RightModuleData phi_module{b.second(), b.space, phi(b)};
    const AxiomReport right = check_right_module(phi_module);
    t[8].record(right, at + " (H, Phi) right module");
    if (right.all_passed())
      t[8].record(check_right_module_coalgebra(phi_module, b.coalgebra()),
                  at + " (H, Phi) right module coalgebra");
    if (q)
      t[8].record(check_obt_modules(*q), at + " module structures of Q(b)");
  });
}

} // namespace

Result run(const Options &opts) {
  Result result;
  Tallies total = empty_tallies();
  total[0] = hopf_foundation(opts.fields);

  std::vector<CorpusItem> corpus;
  guarded(total[3], "corpus", [&] { corpus = build_corpus(opts.max_order, opts.fields); });
  result.corpus_size = corpus.size();
  total[3].record(!corpus.empty(), "corpus is non-empty");

  std::vector<Tallies> per_item(corpus.size(), empty_tallies());
  parallel_for(corpus.size(), thread_count(opts.threads),
               [&](std::size_t i) { check_item(corpus[i], opts.morphisms, per_item[i]); });
  for (const Tallies &item : per_item)
    for (std::size_t c = 1; c < kCriteria; ++c)
      total[c].merge(item[c]);

  guarded(total[8], "adjoint action", [&] {
    const HopfAlgebraData s3 = group_algebra(groups::builtin("S3"), Field::rationals());
    const LeftModuleData ad = adjoint_action(s3);
    total[8].record(check_left_module(ad), "S3/Q adjoint action left module");
    total[8].record(check_module_algebra(ad, s3.algebra), "S3/Q adjoint action module algebra");
  });

  result.criteria.assign(total.begin(), total.end());
  return result;
}

} // namespace brace_forge::suite
