#pragma once

#include "sperp/lr.hpp"
#include "sperp/symfunc.hpp"

// Data-parallel kernels behind the two hot paths: Schur-basis products of
// whole expansions (s-perp recursion) and power-sum to Schur conversion
// (plethysm oracle). Each has a serial reference and an OpenMP variant; the
// two must agree exactly and the serial one is what timings are reported on.
namespace sperp::kernels {

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

SymFunc schur_product_serial(LRContext& ctx, const SymFunc& f, const SymFunc& g);
SymFunc schur_product_parallel(LRContext& ctx, const SymFunc& f, const SymFunc& g);

/// f given in the power-sum basis, result in the Schur basis. Shares
/// Murnaghan–Nakayama work between indices with a common prefix.
SymFunc powersum_to_schur_serial(const SymFunc& f);
SymFunc powersum_to_schur_parallel(const SymFunc& f);

inline SymFunc powersum_to_schur(const SymFunc& f, Exec exec) {
    return exec == Exec::parallel ? powersum_to_schur_parallel(f) : powersum_to_schur_serial(f);
}

}  // namespace sperp::kernels
