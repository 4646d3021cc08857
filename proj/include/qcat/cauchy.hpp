#pragma once

#include "qcat/module.hpp"

namespace qcat {

/** Presheaf psi: X -|-> E (one value per object, contravariant action). */
struct Presheaf {
  VCategory base;
  std::vector<QValue> values;
  bool operator==(const Presheaf&) const = default;
};

/** Copresheaf phi: E -|-> X (one value per object, covariant action). */
struct Copresheaf {
  VCategory base;
  std::vector<QValue> values;
  bool operator==(const Copresheaf&) const = default;
};

ModuleCheck validate_presheaf(const Presheaf& p);
ModuleCheck validate_copresheaf(const Copresheaf& p);
VModule to_module(const Presheaf& p);
VModule to_module(const Copresheaf& p);

/** yoneda(x): y -> a(y, x). */
Presheaf yoneda(const VCategory& c, size_t x);

/** meet over x of hom(psi(x), psi2(x)). */
QValue presheaf_dist(const Presheaf& psi, const Presheaf& psi2);

/** The only possible left adjoint: phi(x) = meet_y hom(psi(y), a(y,x)). */
Copresheaf candidate_left_adjoint(const Presheaf& psi);

struct AdjointPresheafResult {
  bool adjoint = false;
  Copresheaf candidate;
  std::optional<LawViolation> refutation;  // cites the maximal candidate
};

AdjointPresheafResult is_right_adjoint(const Presheaf& psi);

/** Object whose yoneda presheaf equals psi exactly, if any. */
std::optional<size_t> is_representable(const Presheaf& psi);

struct CompletenessReport {
  bool complete = false;
  size_t presheaf_count = 0;          // valid presheaves enumerated
  std::vector<Presheaf> witnesses;    // adjoint but unrepresentable
};

/** Exhaustive over all 2^|X| candidate vectors; bool2 only. */
CompletenessReport is_cauchy_complete_bool2(const VCategory& c);

/** meet over all ordered pairs of cycle entries of a(c, c'). */
QValue cauchy_measure(const EPSequence& s);
bool is_cauchy(const EPSequence& s);

/** (phi_s, psi_s): phi_s(x) = meet_c a(c, x), psi_s(x) = meet_c a(x, c). */
std::pair<Copresheaf, Presheaf> sequence_modules(const EPSequence& s);

struct ConvergenceResult {
  bool converges = false;
  bool cauchy = false;  // informational; non-Cauchy input is reported, not rejected
};

/** s converges to x iff phi_s = lower graph of x and psi_s = upper graph of x. */
ConvergenceResult converges_module(const EPSequence& s, size_t x);

struct CandidateVerdict {
  bool valid_presheaf = false;
  bool adjoint = false;
  std::optional<size_t> representable;
};

struct CompletionCertificate {
  std::vector<CandidateVerdict> candidates;
  VCategory distances;                  // category of yoneda images + adjoint candidates
  std::vector<std::string> labels;      // object labels of `distances`
  std::vector<size_t> yoneda_objects;   // indices of yoneda images in `distances`
  bool yoneda_closed_dense = false;
  bool symmetric = false;
  std::optional<bool> finitary;         // delta only
  bool incomplete_witness = false;      // some candidate is adjoint & unrepresentable
};

CompletionCertificate completion_certificate(const VCategory& c,
                                             const std::vector<Presheaf>& candidates);

}  // namespace qcat
