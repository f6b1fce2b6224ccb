#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sperp/symfunc.hpp"

namespace sperp::app {

/// Unset bounds take the per-suite defaults listed by `sperp verify --help`.
struct VerifyOptions {
    std::optional<int> max_product;  // oracle: |λ|·|μ| bound (12)
    std::optional<int> max_k;        // deg3: k bound (5); lemmas: works123 upper k (8)
    std::optional<int> max_h;        // rowcol (8), hooks (7)
    std::uint64_t seed = 20240901;
    std::ostream* log = nullptr;     // one line per checked family when set
};

struct VerifyResult {
    std::string suite;
    bool passed = true;
    std::size_t cases = 0;
    std::string counterexample;  // first failure, empty on success
    double millis = 0;
};

/// oracle, deg3, rowcol, hooks, lemmas.
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite.
VerifyResult run_verify(std::string_view suite, const VerifyOptions& options = {});

/// Homogeneous Schur-basis function of the given degree with up to `max_terms`
/// terms and non-zero integer coefficients in [−coeff_bound, coeff_bound].
SymFunc random_homogeneous(std::mt19937_64& rng, int degree, int max_terms, int coeff_bound);

}  // namespace sperp::app
