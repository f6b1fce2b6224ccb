#include <doctest.h>

#include "sperp/closed_forms.hpp"
#include "sperp/plethysm.hpp"

using namespace sperp;
namespace cf = sperp::closed_forms;

namespace {

SymFunc s(Partition p, Rational c = 1) { return SymFunc::schur(std::move(p), std::move(c)); }

SymFunc oracle_of(const Partition& lambda, const Partition& mu) {
    return plethysm_powersum(SymFunc::schur(lambda), SymFunc::schur(mu));
}

const Partition kRow2{2};
const Partition kCol2{1, 1};

}  // namespace

TEST_CASE("even and threshold sums") {
    CHECK(cf::even_sum(4) == s({2, 2}) + s({1, 1, 1, 1}));
    CHECK(cf::threshold_sum(4) == s({2, 1, 1}));
    CHECK(cf::threshold_sum(6) == s({3, 1, 1, 1}) + s({2, 2, 2}));
    CHECK(cf::even_sum(0) == SymFunc::one());
    CHECK(cf::even_sum(3).is_zero());
    CHECK(cf::conjugate_indices(s({3, 1}, 2) + s({2})) == s({2, 1, 1}, 2) + s({1, 1}));
}

TEST_CASE("closed-form examples") {
    const SymFunc want = s({2, 1, 1, 1, 1, 1, 1}) + s({2, 2, 1, 1, 1, 1}) + s({2, 2, 2, 1, 1}) + s({3, 2, 1, 1, 1}) +
                         s({3, 2, 2, 1}) + s({3, 3, 1, 1}) + s({4, 3, 1});
    CHECK(cf::hook_leg_one(4, kCol2) == want);
    CHECK(closed_form({3, 1}, kCol2) == want);
    CHECK(cf::row_plethysm(2, kRow2) == s({4}) + s({2, 2}));
    CHECK(cf::row_plethysm(0, kRow2) == SymFunc::one());
    CHECK(cf::column_plethysm(3, kCol2) == s({3, 1, 1, 1}) + s({2, 2, 2}));
    const SymFunc big = cf::hook_inclusion_exclusion(7, 4, kCol2);
    CHECK(big.coefficient({3, 3, 2, 2, 1, 1, 1, 1}) == 1);
    CHECK(big.coefficient({4, 4, 2, 2, 1, 1}) == 2);
}

TEST_CASE("closed-form parameter checks") {
    CHECK_THROWS_AS(cf::row_plethysm(-1, kRow2), std::invalid_argument);
    CHECK_THROWS_AS(cf::row_plethysm(2, Partition{3}), std::invalid_argument);
    CHECK_THROWS_AS(cf::hook_leg_one(1, kRow2), std::invalid_argument);
    CHECK_THROWS_AS(cf::hook_arm_two(1, kRow2), std::invalid_argument);
    CHECK_THROWS_AS(cf::hook_leg_two(2, kRow2), std::invalid_argument);
    CHECK_THROWS_AS(cf::hook_inclusion_exclusion(3, 3, kRow2), std::invalid_argument);
    CHECK_THROWS_AS(cf::degree_three(TypeLabel::row, 0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form({2, 2}, {3}), UnsupportedMethod);
}

TEST_CASE("closed-form dispatch") {
    CHECK(closed_form_kind({4}, kCol2) == ClosedFormKind::row);
    CHECK(closed_form_kind({1, 1, 1, 1}, kRow2) == ClosedFormKind::column);
    CHECK(closed_form_kind({3, 1}, kCol2) == ClosedFormKind::hook_leg_one);
    CHECK(closed_form_kind({2, 1, 1, 1}, kCol2) == ClosedFormKind::hook_arm_two);
    CHECK(closed_form_kind({4, 1, 1}, kCol2) == ClosedFormKind::hook_leg_two);
    CHECK(closed_form_kind({4, 1, 1, 1}, kCol2) == ClosedFormKind::hook_general);
    CHECK(closed_form_kind({2, 1}, Partition{4}) == ClosedFormKind::degree_three);
    CHECK(closed_form_kind({3}, Partition{1, 1, 1}) == std::nullopt);
    CHECK(closed_form_kind({2, 2}, kCol2) == std::nullopt);
    CHECK(closed_form_name(ClosedFormKind::hook_general) != closed_form_name(ClosedFormKind::row));
}

TEST_CASE("row and column closed forms equal the oracle for h <= 6") {
    for (int h = 0; h <= 6; ++h) {
        for (const Partition& mu : {kRow2, kCol2}) {
            CHECK(cf::row_plethysm(h, mu) == oracle_of(Partition::row(h), mu));
            CHECK(cf::column_plethysm(h, mu) == oracle_of(Partition::column(h), mu));
        }
    }
    CHECK(cf::row_plethysm(3, kCol2) == cf::even_sum(6));
    CHECK(cf::column_plethysm(3, kCol2) == cf::threshold_sum(6));
}

TEST_CASE("hook closed forms equal the oracle for h <= 6") {
    for (int h = 2; h <= 6; ++h) {
        for (const Partition& mu : {kRow2, kCol2}) {
            CAPTURE(h);
            CAPTURE(mu.str());
            CHECK(cf::hook_leg_one(h, mu) == oracle_of(Partition::hook(h - 1, 1), mu));
            CHECK(cf::hook_arm_two(h, mu) == oracle_of(Partition::hook(2, h - 2), mu));
            if (h >= 3) CHECK(cf::hook_leg_two(h, mu) == oracle_of(Partition::hook(h - 2, 2), mu));
            for (int k = 0; k < h; ++k) CHECK(cf::hook_inclusion_exclusion(h, k, mu) == oracle_of(Partition::hook(h - k, k), mu));
        }
    }
}

TEST_CASE("degree-three closed form") {
    for (int k = 1; k <= 4; ++k) {
        for (TypeLabel t : kAllTypes) CHECK(cf::degree_three(t, k) == oracle_of(type_shape(t), Partition::row(k)));
        CHECK(closed_form({2, 1}, Partition::row(k)) == oracle_of({2, 1}, Partition::row(k)));
    }
}
