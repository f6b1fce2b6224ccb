#include <doctest.h>

#include "sperp/lr.hpp"
#include "sperp/symfunc.hpp"
#include "sperp/transition.hpp"
#include "support/poly_oracle.hpp"
#include "support/random_sym.hpp"

using namespace sperp;
using testing_support::kBases;
using testing_support::random_sym;

namespace {

SymFunc s(Partition p, Rational c = 1) { return SymFunc::schur(std::move(p), std::move(c)); }
SymFunc in(Basis b, Partition p, Rational c = 1) { return SymFunc::term(b, std::move(p), std::move(c)); }

}  // namespace

TEST_CASE("linear structure") {
    CHECK(s({2}) + s({2}) == s({2}, 2));
    CHECK((s({2}) - s({2})).is_zero());
    CHECK(scale(Rational(1, 2), s({1, 1}, 2)) == s({1, 1}));
    CHECK(scale(0, s({1})).is_zero());
    const SymFunc f = SymFunc::from_terms(Basis::schur, {{{1}, 1}, {{2}, 3}, {{1}, -1}, {{1, 1}, 0}});
    CHECK(f == s({2}, 3));
    CHECK(f.degree() == 2);
    CHECK((s({2}) + s({1})).degree() == std::nullopt);
    CHECK((s({2}) + s({1})).homogeneous_part(1) == s({1}));
    CHECK(SymFunc().is_homogeneous());
}

TEST_CASE("canonical term order") {
    const SymFunc f = s({1}) + s({1, 1}) + s({2}) + s({3});
    std::vector<Partition> order;
    for (const auto& [p, c] : f.terms()) order.push_back(p);
    CHECK(order == std::vector<Partition>{{3}, {2}, {1, 1}, {1}});
}

TEST_CASE("basis letters") {
    for (Basis b : kBases) CHECK(basis_from_letter(basis_letter(b)) == b);
    CHECK_FALSE(basis_from_letter('q').has_value());
}

TEST_CASE("to_basis examples") {
    CHECK(to_basis(s({2}), Basis::monomial) == in(Basis::monomial, {2}) + in(Basis::monomial, {1, 1}));
    CHECK(to_basis(s({1, 1}), Basis::powersum) ==
          in(Basis::powersum, {1, 1}, Rational(1, 2)) - in(Basis::powersum, {2}, Rational(1, 2)));
    CHECK(to_basis(in(Basis::monomial, {1}), Basis::schur) == s({1}));
    CHECK(to_basis(in(Basis::homogeneous, {2, 1}), Basis::schur) == s({3}) + s({2, 1}));
    CHECK(to_basis(in(Basis::elementary, {2}), Basis::schur) == s({1, 1}));
    CHECK(to_basis(SymFunc::one(Basis::powersum), Basis::schur) == SymFunc::one());
}

TEST_CASE("to_basis agrees with brute-force polynomial evaluation") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (Basis from : kBases) {
                const SymFunc f = in(from, lambda);
                const oracle::Poly ref = oracle::eval(f, n);
                for (Basis to : kBases) {
                    CAPTURE(lambda.str());
                    CAPTURE(basis_name(from));
                    CAPTURE(basis_name(to));
                    const SymFunc g = to_basis(f, to);
                    CHECK(g.basis() == to);
                    CHECK(oracle::eval(g, n) == ref);
                }
            }
        }
    }
}

TEST_CASE("Kostka numbers count tableaux") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const oracle::Poly poly = oracle::schur(lambda.parts(), n);
            for (const auto& mu : partitions_of(n)) {
                oracle::Exps e(static_cast<std::size_t>(n), 0);
                std::copy(mu.parts().begin(), mu.parts().end(), e.begin());
                const auto it = poly.find(e);
                const mpq_class want = it == poly.end() ? mpq_class(0) : it->second;
                CHECK(transition::kostka(lambda, mu).to_mpq() == want);
            }
        }
    }
}

TEST_CASE("to_basis round trips on random values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int degree = 1 + trial % 8;
        const Basis a = kBases[trial % 5];
        const Basis b = kBases[(trial / 5 + trial + 1) % 5];
        const SymFunc f = random_sym(rng, a, degree, 6);
        CHECK(to_basis(to_basis(f, b), a) == f);
        CHECK(equal(f, to_basis(f, b)));
    }
}

TEST_CASE("multiply examples") {
    CHECK(in(Basis::powersum, {2}) * in(Basis::powersum, {3}) == in(Basis::powersum, {3, 2}));
    CHECK(s({1}) * s({1}) == s({2}) + s({1, 1}));
    CHECK(s({2}) * s({1, 1}) == s({3, 1}) + s({2, 1, 1}));
    CHECK(SymFunc::one() * s({2, 1}) == s({2, 1}));
    CHECK((s({1}) * in(Basis::powersum, {1})).basis() == Basis::schur);
}

TEST_CASE("multiply matches polynomial products") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            const int n = a + b;
            for (const auto& la : partitions_of(a)) {
                for (const auto& mu : partitions_of(b)) {
                    for (Basis basis : kBases) {
                        const SymFunc prod = in(basis, la) * in(basis, mu);
                        CHECK(oracle::eval(prod, n) == oracle::mul(oracle::eval(in(basis, la), n), oracle::eval(in(basis, mu), n)));
                    }
                }
            }
        }
    }
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        const Basis basis = kBases[trial % 5];
        const SymFunc f = random_sym(rng, basis, 1 + trial % 3, 3);
        const SymFunc g = random_sym(rng, basis, 1 + (trial + 1) % 2, 3);
        const SymFunc h = random_sym(rng, basis, 1 + (trial + 2) % 2, 3);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("Hall inner product") {
    CHECK(hall_inner_product(s({2, 1}), s({2, 1})) == 1);
    CHECK(hall_inner_product(s({2, 1}), s({3})) == 0);
    CHECK(hall_inner_product(in(Basis::homogeneous, {2}), in(Basis::monomial, {1, 1})) == 0);
    CHECK(hall_inner_product(in(Basis::homogeneous, {2, 1}), in(Basis::monomial, {2, 1})) == 1);
    CHECK(hall_inner_product(in(Basis::powersum, {2, 1}), in(Basis::powersum, {2, 1})) == 2);
    CHECK(hall_inner_product(s({2}), s({1})) == 0);
}

TEST_CASE("inner product of a product agrees in two bases") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int dg = 1 + trial % 3;
        const int dh = 1 + (trial + 1) % 3;
        const SymFunc f = random_sym(rng, Basis::schur, dg + dh, 5);
        const SymFunc g = random_sym(rng, Basis::schur, dg, 3);
        const SymFunc h = random_sym(rng, Basis::schur, dh, 3);
        const Rational via_lr = hall_inner_product(f, g * h);
        const SymFunc fp = to_basis(f, Basis::powersum);
        const SymFunc gh = to_basis(g, Basis::powersum) * to_basis(h, Basis::powersum);
        CHECK(hall_inner_product_powersum(fp, gh) == via_lr);
        CHECK(hall_inner_product_powersum(f, g * h) == via_lr);
    }
}

TEST_CASE("omega") {
    CHECK(omega(s({3, 1})) == s({2, 1, 1}));
    CHECK(omega(in(Basis::powersum, {2})) == in(Basis::powersum, {2}, -1));
    CHECK(omega(s({2, 1})) == s({2, 1}));
    CHECK(omega(in(Basis::homogeneous, {2, 1})).basis() == Basis::homogeneous);
    CHECK(equal(omega(in(Basis::homogeneous, {2, 1})), in(Basis::elementary, {2, 1})));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Basis basis = kBases[trial % 5];
        const int degree = 1 + trial % 6;
        const SymFunc f = random_sym(rng, basis, degree, 4);
        const SymFunc g = random_sym(rng, kBases[(trial + 2) % 5], degree, 4);
        CHECK(omega(omega(f)) == f);
        CHECK(equal(omega(f), omega(to_basis(f, Basis::schur))));
        CHECK(hall_inner_product(omega(f), omega(g)) == hall_inner_product(f, g));
    }
}

TEST_CASE("down_k") {
    CHECK(down_k(s({3, 1}) + s({2, 1, 1}), 2) == s({3, 1}));
    CHECK(down_k(s({3, 1}) + s({}, 4), 0) == s({}, 4));
    CHECK(down_k(s({3, 1}) + s({1}, 4), 0).is_zero());
    CHECK_THROWS_AS(down_k(in(Basis::powersum, {1}), 1), std::invalid_argument);
}

TEST_CASE("odot") {
    CHECK(odot(s({2, 1}), s({1, 1})) == s({3, 2}));
    CHECK(odot(s({6, 6}), s({3})) == s({9, 6}));
    CHECK(odot(s({1}) + s({2}), s({1})) == s({2}) + s({3}));
    CHECK_THROWS_AS(odot(in(Basis::monomial, {1}), s({1})), std::invalid_argument);
}

TEST_CASE("nonnegative integrality") {
    CHECK(is_nonnegative_integral(s({2}, 3) + s({1, 1})));
    CHECK_FALSE(is_nonnegative_integral(s({2}, -1)));
    CHECK_FALSE(is_nonnegative_integral(s({2}, Rational(1, 2))));
}
