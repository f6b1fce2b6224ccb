#pragma once

#include "sperp/partition.hpp"
#include "sperp/rational.hpp"
#include "sperp/symfunc.hpp"

// Transition data between the classical bases: Kostka numbers and the
// Murnaghan–Nakayama rule. All caches are process-wide and internally locked.
namespace sperp::transition {

/// Adds coeff · p_k · s_λ to `out` by the Murnaghan–Nakayama border-strip rule.
void add_ribbons(const Partition& lambda, int k, const Rational& coeff, TermAccumulator& out);
/// p_k · f for f in the Schur basis.
SymFunc powersum_times(int k, const SymFunc& f);

/// p_ρ in the Schur basis (cached).
const SymFunc& powersum_in_schur(const Partition& rho);
/// Irreducible character value χ^λ(ρ).
Rational character(const Partition& lambda, const Partition& rho);

/// Number of SSYT of shape λ and content μ (cached).
Rational kostka(const Partition& lambda, const Partition& mu);

SymFunc schur_in_monomial(const Partition& lambda);
SymFunc schur_in_powersum(const Partition& lambda);
SymFunc homogeneous_in_schur(const Partition& mu);
SymFunc elementary_in_schur(const Partition& mu);

}  // namespace sperp::transition
