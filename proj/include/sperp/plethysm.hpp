#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sperp/lr.hpp"
#include "sperp/partition.hpp"
#include "sperp/symfunc.hpp"

namespace sperp {

enum class Method { powersum_oracle, sperp_recursive, closed_form, auto_select };

/// CLI spellings: powersum, sperp, closed, auto.
std::string method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

enum class PerpMode { row, column };

/// Raised when a method cannot handle the requested (λ, μ).
class UnsupportedMethod : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by expand_schur when its input cannot be the perp sequence of any f.
class InconsistentPerpSequence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A[r] = s_r^⊥ f (row mode) or s_{1^r}^⊥ f (column mode) for r = 1..degree(f).
struct PerpSequence {
    PerpMode mode = PerpMode::row;
    std::vector<SymFunc> entries;

    int degree() const noexcept { return static_cast<int>(entries.size()); }
    /// 1-based access.
    const SymFunc& at(int r) const { return entries.at(static_cast<std::size_t>(r - 1)); }
    friend bool operator==(const PerpSequence&, const PerpSequence&) = default;
};

/// Exponent vector (x_1..x_n) → coefficient.
using Monomials = std::map<std::vector<int>, Rational>;

// --- power-sum oracle and plethystic identities --------------------------------

/// f[g] through the power-sum basis: p_r[g] multiplies every p-index of g by r.
SymFunc plethysm_powersum(const SymFunc& f, const SymFunc& g, Basis out = Basis::schur, Exec exec = Exec::serial);

/// f[−X] = (−1)^{deg f} (ω f)[X]. Throws std::invalid_argument for non-homogeneous f.
SymFunc negate_alphabet(const SymFunc& f);
/// Exponent d in f[tX] = t^d f[X]. Throws std::invalid_argument for non-homogeneous f.
int alphabet_scale_exponent(const SymFunc& f);

// --- the s-perp trick -------------------------------------------------------------

/// Throws std::invalid_argument unless f is homogeneous of degree >= 1.
PerpSequence perp_sequence(const SymFunc& f, PerpMode mode, LRContext& ctx = LRContext::shared());

/// Appends a row of length r to every index; zero unless every first part is <= r.
SymFunc add_row(const SymFunc& f, int r);
/// Appends a column of length r to every index; zero unless every length is <= r.
SymFunc add_col(const SymFunc& f, int r);

struct ExpandOptions {
    /// Reject a negative coefficient in A[r] − s_r^⊥(out). Only valid when f is Schur-positive.
    bool expect_nonnegative = false;
    /// Recompute the perp sequence of the result and compare with the input.
    bool verify = false;
};

/// Reconstructs f from its perp sequence: for r from degree down to 1,
/// out += addrow(A[r] − s_r^⊥(out), r) (addcol / s_{1^r}^⊥ in column mode).
SymFunc expand_schur(const PerpSequence& a, const ExpandOptions& options = {}, LRContext& ctx = LRContext::shared());

/// f(x_1..x_n) = Σ_r (s_r^⊥ f)(x_1..x_{n−1}) x_n^r.
Monomials monomial_expansion_sperp(const SymFunc& f, int n, LRContext& ctx = LRContext::shared());
/// Specialization of the monomial-basis expansion of f to n variables.
Monomials monomial_expansion_direct(const SymFunc& f, int n);

// --- plethysm engine ----------------------------------------------------------------

/// Computes s_λ[s_μ] and friends, memoizing every (λ, μ) it sees.
///
/// The memo is shared by the recursive s-perp engine and the sequence-sum
/// evaluations of s_r^⊥ s_λ[s_μ]; it is guarded for concurrent use. A fresh
/// engine and a fresh LRContext give cold-cache timings.
class PlethysmEngine {
public:
    explicit PlethysmEngine(LRContext& ctx = LRContext::shared(), Exec exec = Exec::serial)
        : ctx_(ctx), exec_(exec) {}
    PlethysmEngine(const PlethysmEngine&) = delete;
    PlethysmEngine& operator=(const PlethysmEngine&) = delete;

    LRContext& context() noexcept { return ctx_; }
    Exec exec() const noexcept { return exec_; }

    /// s_λ[s_μ] in the Schur basis.
    SymFunc plethysm(const Partition& lambda, const Partition& mu, Method method = Method::auto_select);
    /// f[g] in the Schur basis. Non-oracle methods need g to be a single Schur function.
    SymFunc plethysm(const SymFunc& f, const SymFunc& g, Method method = Method::auto_select);

    /// s_λ[s_μ] for μ a row or a column, from the perp recursions and expand_schur.
    /// Throws UnsupportedMethod for any other μ.
    SymFunc plethysm_sperp(const Partition& lambda, const Partition& mu);

    /// s_r^⊥ s_λ[s_μ] as a sum over partition sequences (ν^(0), …, ν^(r′)), r′ = min(r, μ₁).
    SymFunc sperp_of_plethysm_row(const Partition& lambda, const Partition& mu, int r);
    /// s_{1^r}^⊥ s_λ[s_μ], with ω on the odd-indexed factors, r′ = min(r, ℓ(μ)).
    SymFunc sperp_of_plethysm_col(const Partition& lambda, const Partition& mu, int r);

    /// f[g₁+⋯+g_k] = Σ Π s_{ν^(i)}[g_i] ⟨f, Π s_{ν^(i)}⟩ over sequences with Σ|ν^(i)| = deg f.
    SymFunc plethysm_sum_alphabets(const SymFunc& f, std::span<const SymFunc> gs);

    std::size_t memo_size() const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept;
    };

    SymFunc sperp_rec(const Partition& lambda, const Partition& mu);
    SymFunc sperp_of_plethysm(const Partition& lambda, const Partition& mu, int r, PerpMode mode);
    /// s_ν[g] for arbitrary Schur-basis g.
    SymFunc inner_plethysm(const Partition& nu, const SymFunc& g);
    std::optional<SymFunc> memo_find(const std::pair<Partition, Partition>& key) const;
    void memo_store(const std::pair<Partition, Partition>& key, const SymFunc& value);

    LRContext& ctx_;
    Exec exec_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, SymFunc, PairHash> memo_;
};

}  // namespace sperp
