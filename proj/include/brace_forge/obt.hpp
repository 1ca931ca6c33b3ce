#pragma once

#include "brace_forge/brace.hpp"

namespace brace_forge {

/// Hopf algebra A with m: A (x) A -> A and u: A -> A.
struct OppBraceTripleData {
  HopfAlgebraData hopf;
  LinMap m;
  LinMap u;

  Field field() const { return hopf.field(); }
  std::size_t dim() const { return hopf.dim(); }
  void validate_shapes() const;
};

/// mu~ = mu o (A (x) m) o (delta (x) A).
LinMap mu_tilde(const OppBraceTripleData &t);

/// Entries obt.i ... obt.viii:
///   i    m is a coalgebra morphism A (x) A -> A
///   ii   m o (eta (x) A) = id
///   iii  m o (A (x) eta) = eps (x) eta
///   iv   m o (A (x) m) = m o ((mu o c) (x) A)
///   v    m o (A (x) mu~) = mu~ o (m (x) m) o (A (x) c (x) A) o (delta (x) A (x) A)
///   vi   u is a coalgebra morphism
///   vii  u o u = id
///   viii m o (A (x) u) o delta = lambda
/// Throws Error(PrereqFailed) if A fails check_hopf.
AxiomReport check_obt(const OppBraceTripleData &t);

/// A~ = (A, eta, mu~, eps, delta, u). Throws Error(NotCocommutative) or
/// Error(ObtAxiomsFailed).
HopfAlgebraData build_deformed_hopf(const OppBraceTripleData &t);

/// (A~, A). Same errors as build_deformed_hopf.
HopfBraceData functor_P(const OppBraceTripleData &t);

/// (H2, Gamma o (lambda2 (x) H), lambda1). Throws Error(BraceAxiomsFailed)
/// or Error(NotCocommutative).
OppBraceTripleData functor_Q(const HopfBraceData &b);

/// Entry lemma.mu_recovery: mu = mu~ o (A (x) (m o (lambda (x) A))) o (delta (x) A).
/// The obt report is merged in front (prefix "prereq."), so a broken
/// triple yields a report instead of an exception. Throws
/// Error(PrereqFailed) if A fails check_hopf, Error(NotCocommutative) if
/// A is not cocommutative.
AxiomReport check_lemma_mu_recovery(const OppBraceTripleData &t);

/// (A, m) is a left A^op-module and (A~, m o (lambda (x) A)) is a left
/// A-module algebra and module coalgebra. Throws Error(ObtAxiomsFailed) or
/// Error(NotCocommutative).
AxiomReport check_obt_modules(const OppBraceTripleData &t);

/// Hopf morphism entries plus morphism.m: f o m = m' o (f (x) f); derived
/// entries morphism.mu_tilde and morphism.u.
AxiomReport check_obt_morphism(const LinMap &f, const OppBraceTripleData &src,
                               const OppBraceTripleData &dst);

/// b against P(Q(b)), one entry per component (eta, eps, delta, mu1,
/// lambda1, mu2, lambda2).
AxiomReport roundtrip_PQ(const HopfBraceData &b);
/// t against Q(P(t)), one entry per component (eta, mu, eps, delta,
/// lambda, m, u).
AxiomReport roundtrip_QP(const OppBraceTripleData &t);

/// (A, eps (x) id, lambda).
OppBraceTripleData trivial_triple(const HopfAlgebraData &a);

} // namespace brace_forge
