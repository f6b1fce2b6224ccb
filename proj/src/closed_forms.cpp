#include "sperp/closed_forms.hpp"

#include "sperp/plethysm.hpp"

namespace sperp {
namespace closed_forms {
namespace {

bool is_two_cell(const Partition& mu) { return mu == Partition{2} || mu == Partition{1, 1}; }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// The closed forms are stated for s_{1²}; s_2 is the conjugate-indexed version.
SymFunc orient(SymFunc f, const Partition& mu) {
    require(is_two_cell(mu), "closed form needs μ = (2) or (1,1), got " + mu.str());
    return mu == Partition{2} ? conjugate_indices(f) : f;
}

SymFunc sum_where(int n, bool (*pred)(const Partition&)) {
    std::vector<SymFunc::Term> terms;
    for (const auto& lambda : partitions_of(n)) {
        if (pred(lambda)) terms.emplace_back(lambda, 1);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

std::vector<Partition> filtered(int n, bool (*pred)(const Partition&)) {
    std::vector<Partition> out;
    for (const auto& lambda : partitions_of(n)) {
        if (pred(lambda)) out.push_back(lambda);
    }
    return out;
}

}  // namespace

SymFunc even_sum(int n) { return sum_where(n, is_even); }
SymFunc threshold_sum(int n) { return sum_where(n, is_threshold); }

SymFunc conjugate_indices(const SymFunc& f) {
    std::vector<SymFunc::Term> terms;
    terms.reserve(f.size());
    for (const auto& [lambda, c] : f.terms()) terms.emplace_back(conjugate(lambda), c);
    return SymFunc::from_terms(f.basis(), std::move(terms));
}

SymFunc row_plethysm(int h, const Partition& mu) {
    require(h >= 0, "row_plethysm: h must be non-negative");
    return orient(even_sum(2 * h), mu);
}

SymFunc column_plethysm(int h, const Partition& mu) {
    require(h >= 0, "column_plethysm: h must be non-negative");
    return orient(threshold_sum(2 * h), mu);
}

SymFunc hook_leg_one(int h, const Partition& mu) {
    require(h >= 2, "hook_leg_one: h must be at least 2");
    std::vector<SymFunc::Term> terms;
    for (const auto& nu : partitions_of(2 * h)) {
        if (in_P2h(nu)) terms.emplace_back(nu, 1);
        else if (is_even(nu)) terms.emplace_back(nu, corner_count(nu) - 1);
    }
    return orient(SymFunc::from_terms(Basis::schur, std::move(terms)), mu);
}

SymFunc hook_arm_two(int h, const Partition& mu) {
    require(h >= 2, "hook_arm_two: h must be at least 2");
    std::vector<SymFunc::Term> terms;
    for (const auto& nu : partitions_of(2 * h)) {
        if (in_T2h(nu)) terms.emplace_back(nu, 1);
        if (is_threshold(nu)) terms.emplace_back(nu, (corner_count(nu) - 1) / 2);
    }
    return orient(SymFunc::from_terms(Basis::schur, std::move(terms)), mu);
}

SymFunc hook_leg_two(int h, const Partition& mu, LRContext& ctx) {
    require(h >= 3, "hook_leg_two: h must be at least 3");
    const Partition tail{2, 1, 1};
    const auto evens = filtered(2 * (h - 2), is_even);
    std::vector<SymFunc::Term> terms;
    for (const auto& m : partitions_of(2 * h)) {
        if (is_even(m)) {
            const long b = corner_count(m) - 1;
            terms.emplace_back(m, b * (b - 1) / 2);
            continue;
        }
        long a = 0;
        for (const auto& nu : evens) {
            if (m.contains(nu)) a += static_cast<long>(ctx.lr_coefficient(m, nu, tail));
        }
        if (in_P2h(m)) a -= 1;
        terms.emplace_back(m, a);
    }
    return orient(SymFunc::from_terms(Basis::schur, std::move(terms)), mu);
}

SymFunc hook_inclusion_exclusion(int h, int k, const Partition& mu, LRContext& ctx) {
    require(h > k && k >= 0, "hook_inclusion_exclusion: needs h > k >= 0");
    std::vector<std::vector<Partition>> evens, thresholds;
    for (int i = 0; i <= k; ++i) {
        evens.push_back(filtered(2 * (h - k + i), is_even));
        thresholds.push_back(filtered(2 * (k - i), is_threshold));
    }
    std::vector<SymFunc::Term> terms;
    for (const auto& m : partitions_of(2 * h)) {
        long total = 0;
        for (int i = 0; i <= k; ++i) {
            long sum = 0;
            for (const auto& nu : evens[static_cast<std::size_t>(i)]) {
                if (!m.contains(nu)) continue;
                for (const auto& rho : thresholds[static_cast<std::size_t>(i)]) {
                    if (m.contains(rho)) sum += static_cast<long>(ctx.lr_coefficient(m, nu, rho));
                }
            }
            total += i % 2 == 0 ? sum : -sum;
        }
        terms.emplace_back(m, total);
    }
    return orient(SymFunc::from_terms(Basis::schur, std::move(terms)), mu);
}

SymFunc degree_three(TypeLabel t, int k) {
    require(k >= 1, "degree_three: k must be positive");
    return tab_sum(t, k);
}

}  // namespace closed_forms

std::string closed_form_name(ClosedFormKind kind) {
    switch (kind) {
        case ClosedFormKind::row: return "row";
        case ClosedFormKind::column: return "column";
        case ClosedFormKind::hook_leg_one: return "hook (h-1,1)";
        case ClosedFormKind::hook_arm_two: return "hook (2,1^(h-2))";
        case ClosedFormKind::hook_leg_two: return "hook (h-2,1,1)";
        case ClosedFormKind::hook_general: return "hook inclusion-exclusion";
        case ClosedFormKind::degree_three: return "degree three";
    }
    return "?";
}

std::optional<ClosedFormKind> closed_form_kind(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return std::nullopt;
    if ((mu == Partition{2} || mu == Partition{1, 1}) && lambda.is_hook()) {
        const int h = lambda.size();
        const int k = lambda.length() - 1;
        if (k == 0) return ClosedFormKind::row;
        if (k == h - 1) return ClosedFormKind::column;
        if (k == 1) return ClosedFormKind::hook_leg_one;
        if (k == h - 2) return ClosedFormKind::hook_arm_two;
        if (k == 2) return ClosedFormKind::hook_leg_two;
        return ClosedFormKind::hook_general;
    }
    if (lambda.size() == 3 && !mu.empty() && mu.is_row()) return ClosedFormKind::degree_three;
    return std::nullopt;
}

SymFunc closed_form(const Partition& lambda, const Partition& mu, LRContext& ctx) {
    const auto kind = closed_form_kind(lambda, mu);
    if (!kind) throw UnsupportedMethod("no closed form for s_" + lambda.str() + "[s_" + mu.str() + "]");
    const int h = lambda.size();
    switch (*kind) {
        case ClosedFormKind::row: return closed_forms::row_plethysm(h, mu);
        case ClosedFormKind::column: return closed_forms::column_plethysm(h, mu);
        case ClosedFormKind::hook_leg_one: return closed_forms::hook_leg_one(h, mu);
        case ClosedFormKind::hook_arm_two: return closed_forms::hook_arm_two(h, mu);
        case ClosedFormKind::hook_leg_two: return closed_forms::hook_leg_two(h, mu, ctx);
        case ClosedFormKind::hook_general:
            return closed_forms::hook_inclusion_exclusion(h, lambda.length() - 1, mu, ctx);
        case ClosedFormKind::degree_three: {
            const TypeLabel t = lambda == Partition{3}       ? TypeLabel::row
                                : lambda == Partition{1, 1, 1} ? TypeLabel::column
                                                               : TypeLabel::hook_12_3;
            return closed_forms::degree_three(t, mu.size());
        }
    }
    throw UnsupportedMethod("no closed form for s_" + lambda.str() + "[s_" + mu.str() + "]");
}

}  // namespace sperp
