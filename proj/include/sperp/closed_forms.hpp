#pragma once

#include <optional>
#include <string>

#include "sperp/lr.hpp"
#include "sperp/partition.hpp"
#include "sperp/symfunc.hpp"
#include "sperp/tableaux.hpp"

namespace sperp {

/// Families of s_λ[s_μ] with a combinatorial Schur expansion.
enum class ClosedFormKind {
    row,                // s_h[s_2], s_h[s_{1²}]
    column,             // s_{1^h}[s_2], s_{1^h}[s_{1²}]
    hook_leg_one,       // s_{(h−1,1)}
    hook_arm_two,       // s_{(2,1^{h−2})}
    hook_leg_two,       // s_{(h−2,1,1)}
    hook_general,       // s_{(h−k,1^k)} by inclusion–exclusion
    degree_three,       // s_λ[s_k], |λ| = 3
};

std::string closed_form_name(ClosedFormKind kind);

/// The family used for (λ, μ), if any. Hooks with μ ∈ {(2),(1,1)} take
/// precedence over the degree-three family.
std::optional<ClosedFormKind> closed_form_kind(const Partition& lambda, const Partition& mu);
/// Throws UnsupportedMethod when no family applies.
SymFunc closed_form(const Partition& lambda, const Partition& mu, LRContext& ctx = LRContext::shared());

namespace closed_forms {

/// Σ_{λ⊢n, λ even} s_λ (every column of even length).
SymFunc even_sum(int n);
/// Σ_{λ⊢n, λ threshold} s_λ.
SymFunc threshold_sum(int n);
/// Replaces every index by its conjugate.
SymFunc conjugate_indices(const SymFunc& f);

// μ must be (2) or (1,1); the (2) versions are the conjugate-indexed (1,1) ones.
// All functions throw std::invalid_argument outside their parameter range.

/// s_h[s_μ], h >= 0.
SymFunc row_plethysm(int h, const Partition& mu);
/// s_{1^h}[s_μ], h >= 0.
SymFunc column_plethysm(int h, const Partition& mu);
/// s_{(h−1,1)}[s_μ] = Σ_{P_{2h}} s + Σ_{even ν} (b_ν − 1) s_ν, h >= 2.
SymFunc hook_leg_one(int h, const Partition& mu);
/// s_{(2,1^{h−2})}[s_μ] = Σ_{T_{2h}} s + Σ_{threshold ν} ⌊(b_ν − 1)/2⌋ s_ν, h >= 2.
SymFunc hook_arm_two(int h, const Partition& mu);
/// s_{(h−2,1,1)}[s_μ] = Σ_μ a_μ s_μ, h >= 3.
SymFunc hook_leg_two(int h, const Partition& mu, LRContext& ctx = LRContext::shared());
/// s_{(h−k,1^k)}[s_μ] = Σ_i (−1)^i Σ c^μ_{νρ} s_μ over ν ⊢ 2(h−k+i) even, ρ ⊢ 2(k−i) threshold; h > k >= 0.
SymFunc hook_inclusion_exclusion(int h, int k, const Partition& mu, LRContext& ctx = LRContext::shared());

/// s_{shape(T)}[s_k] as the shape sum over SSYT_{(k,k,k)} of type T, k >= 1.
SymFunc degree_three(TypeLabel t, int k);

}  // namespace closed_forms
}  // namespace sperp
