#include <doctest.h>

#include <map>

#include "sperp/plethysm.hpp"
#include "sperp/tableaux.hpp"
#include "sperp/transition.hpp"
#include "support/poly_oracle.hpp"

using namespace sperp;

TEST_CASE("SSYT validation and accessors") {
    const SSYT t({{1, 1, 2}, {2, 3}});
    CHECK(t.shape() == Partition{3, 2});
    CHECK(t.size() == 5);
    CHECK(t.weight(3) == std::vector<int>{2, 2, 1});
    CHECK(t.max_letter() == 3);
    CHECK(t.count_in_row(2, 2) == 1);
    CHECK(t.str() == "[[1,1,2],[2,3]]");
    CHECK(t.without_first_column() == SSYT({{1, 2}, {3}}));
    CHECK_THROWS_AS(SSYT({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SSYT({{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(SSYT({{1}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("enumerate_ssyt counts") {
    const auto two = enumerate_ssyt({2}, 2);
    CHECK(two.size() == 3);
    CHECK(two == std::vector<SSYT>{SSYT({{1, 1}}), SSYT({{1, 2}}), SSYT({{2, 2}})});
    CHECK(enumerate_ssyt({1, 1}, 1).empty());
    CHECK(enumerate_ssyt({2, 1}, 3).size() == 8);
}

TEST_CASE("SSYT weights reproduce Schur polynomials") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int letters = 1; letters <= 4; ++letters) {
                oracle::Poly poly;
                for (const auto& t : enumerate_ssyt(lambda, letters)) oracle::add_to(poly, t.weight(letters), 1);
                CHECK(poly == oracle::schur(lambda.parts(), letters));
            }
        }
    }
}

TEST_CASE("content-restricted enumeration matches Kostka numbers") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                const auto ts = enumerate_ssyt_with_content(lambda, mu.parts());
                CHECK(Rational(static_cast<long long>(ts.size())) == transition::kostka(lambda, mu));
                for (const auto& t : ts) CHECK(t.weight(mu.length()) == mu.parts());
            }
        }
    }
}

TEST_CASE("weight (k,k,k) enumeration") {
    const auto one = enumerate_weight_kkk(1);
    CHECK(one.size() == 4);
    for (TypeLabel t : kAllTypes) CHECK(std::find(one.begin(), one.end(), type_tableau(t)) != one.end());
    for (int k = 1; k <= 4; ++k) {
        std::map<std::vector<int>, long> by_shape;
        for (const auto& t : enumerate_weight_kkk(k)) {
            CHECK(t.rows().size() <= 3);
            CHECK(t.weight(3) == std::vector<int>{k, k, k});
            ++by_shape[t.shape().parts()];
        }
        for (const auto& lambda : partitions_of(3 * k)) {
            const mpq_class want = transition::kostka(lambda, {k, k, k}).to_mpq();
            CHECK(by_shape[lambda.parts()] == want.get_num().get_si());
        }
    }
}

TEST_CASE("type labels") {
    CHECK(type_shape(TypeLabel::row) == Partition{3});
    CHECK(type_shape(TypeLabel::hook_12_3) == Partition{2, 1});
    CHECK(type_shape(TypeLabel::column) == Partition{1, 1, 1});
    CHECK(transpose(TypeLabel::row) == TypeLabel::column);
    CHECK(transpose(TypeLabel::hook_12_3) == TypeLabel::hook_13_2);
    for (TypeLabel t : kAllTypes) {
        CHECK(transpose(transpose(t)) == t);
        CHECK(type_of(type_tableau(t)) == t);
        CHECK(type_tableau(t).shape() == type_shape(t));
    }
    CHECK(type_tableau(TypeLabel::hook_13_2) == SSYT({{1, 3}, {2}}));
}

TEST_CASE("type_of examples") {
    CHECK(type_of(SSYT({{1, 2, 3}})) == TypeLabel::row);
    CHECK(type_of(SSYT({{1, 1, 2, 2}, {3, 3}})) == TypeLabel::row);
    CHECK_THROWS_AS(type_of(SSYT({{1, 1, 2}})), std::invalid_argument);
    for (int k = 2; k <= 4; ++k) {
        for (const auto& s : enumerate_weight_kkk(k)) {
            if (s.rows().size() == 3) CHECK(type_of(s) == transpose(type_of(s.without_first_column())));
        }
    }
}

TEST_CASE("tab_sum small cases") {
    CHECK(tab_sum(TypeLabel::row, 1) == SymFunc::schur({3}));
    CHECK(tab_sum(TypeLabel::column, 1) == SymFunc::schur({1, 1, 1}));
    const SymFunc want =
        plethysm_powersum(SymFunc::schur({1, 1, 1}), SymFunc::schur({2}));
    CHECK(tab_sum(TypeLabel::column, 2) == want);
    CHECK(want == SymFunc::schur({4, 1, 1}) + SymFunc::schur({3, 3}));
}

TEST_CASE("tab_sum equals the plethysm oracle for k <= 4") {
    for (int k = 1; k <= 4; ++k) {
        for (TypeLabel t : kAllTypes) {
            CAPTURE(type_name(t));
            CAPTURE(k);
            CHECK(tab_sum(t, k) == plethysm_powersum(SymFunc::schur(type_shape(t)), SymFunc::schur(Partition::row(k))));
        }
    }
}

TEST_CASE("types partition the (k,k,k) tableaux and the hook types share shapes") {
    for (int k = 1; k <= 6; ++k) {
        std::map<Partition, int, CanonicalOrder> all;
        for (const auto& s : enumerate_weight_kkk(k)) ++all[s.shape()];
        std::map<Partition, int, CanonicalOrder> joined;
        for (TypeLabel t : kAllTypes) {
            for (const auto& [shape, n] : tab_shape_counts(t, k)) joined[shape] += n;
        }
        CHECK(joined == all);
        CHECK(tab_shape_counts(TypeLabel::hook_12_3, k) == tab_shape_counts(TypeLabel::hook_13_2, k));
    }
}
