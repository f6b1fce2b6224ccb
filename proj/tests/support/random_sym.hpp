#pragma once

#include <random>

#include "sperp/symfunc.hpp"

namespace testing_support {

/// Homogeneous value in `basis` with up to `max_terms` terms and non-zero
/// integer coefficients in [−bound, bound].
inline sperp::SymFunc random_sym(std::mt19937_64& rng, sperp::Basis basis, int degree, int max_terms, int bound = 5) {
    const auto shapes = sperp::partitions_of(degree);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 2 * bound);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<sperp::SymFunc::Term> terms;
    for (int i = count(rng); i > 0; --i) {
        int c = coeff(rng) - bound;
        if (c <= 0) --c;
        terms.emplace_back(shapes[pick(rng)], c);
    }
    return sperp::SymFunc::from_terms(basis, std::move(terms));
}

inline constexpr sperp::Basis kBases[] = {sperp::Basis::schur, sperp::Basis::monomial, sperp::Basis::homogeneous,
                                          sperp::Basis::elementary, sperp::Basis::powersum};

}  // namespace testing_support
