#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

#include "sperp/partition.hpp"
#include "sperp/symfunc.hpp"

namespace sperp {

enum class Exec { serial, parallel };

/// Littlewood–Richardson machinery with memoized products, skew expansions and
/// coefficients.
///
/// Every query is logically read-only and may be issued from several threads;
/// the caches are guarded by a shared mutex. Cached products are bounded by
/// `max_cached_terms`; beyond it results are computed but not retained.
class LRContext {
public:
    explicit LRContext(std::size_t max_cached_terms = 4'000'000) : max_cached_terms_(max_cached_terms) {}
    LRContext(const LRContext&) = delete;
    LRContext& operator=(const LRContext&) = delete;

    static LRContext& shared();

    /// c^λ_{μν}: number of LR fillings of λ/μ with content ν.
    std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

    /// s_a · s_b.
    SymFunc product(const Partition& a, const Partition& b);
    /// Adds coeff · s_a · s_b to `out`.
    void add_product(const Partition& a, const Partition& b, const Rational& coeff, TermAccumulator& out);

    /// s_{outer/inner} = Σ_ν c^{outer}_{inner,ν} s_ν.
    SymFunc skew(const Partition& outer, const Partition& inner);
    void add_skew(const Partition& outer, const Partition& inner, const Rational& coeff, TermAccumulator& out);

    /// s_λ^⊥ f, termwise on Schur-basis f.
    SymFunc schur_perp(const Partition& lambda, const SymFunc& f);
    /// Schur-basis product of two expansions.
    SymFunc multiply(const SymFunc& f, const SymFunc& g, Exec exec = Exec::serial);

    std::size_t cached_products() const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept;
    };
    struct TripleHash {
        std::size_t operator()(const std::tuple<Partition, Partition, Partition>& t) const noexcept;
    };
    using Shared = std::shared_ptr<const SymFunc>;

    Shared cached(std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash>& map,
                  const std::pair<Partition, Partition>& key) const;
    void store(std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash>& map,
               std::pair<Partition, Partition> key, const Shared& value);

    std::size_t max_cached_terms_;
    std::size_t cached_terms_ = 0;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash> products_;
    std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash> skews_;
    std::unordered_map<std::tuple<Partition, Partition, Partition>, std::uint64_t, TripleHash> coefficients_;
};

// --- uncached primitives ------------------------------------------------------

/// s_λ · s_r: add horizontal r-strips.
SymFunc pieri_row(const Partition& lambda, int r);
/// s_λ · s_{1^r}: add vertical r-strips.
SymFunc pieri_col(const Partition& lambda, int r);
/// s_r^⊥ s_λ: remove horizontal r-strips.
SymFunc perp_row(const Partition& lambda, int r);
/// s_{1^r}^⊥ s_λ: remove vertical r-strips.
SymFunc perp_col(const Partition& lambda, int r);

void add_pieri_row(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out);
void add_pieri_col(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out);
void add_perp_row(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out);
void add_perp_col(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out);

/// s_a · s_b by enumerating a-dominant tableaux of shape b (reading order:
/// rows top to bottom, each right to left). Independent of the skew-filling
/// route used by lr_coefficient.
void add_product_by_dominant_tableaux(const Partition& a, const Partition& b, const Rational& coeff,
                                      TermAccumulator& out);
/// s_{outer/inner} by enumerating lattice fillings of the skew shape.
void add_skew_by_lattice_fillings(const Partition& outer, const Partition& inner, const Rational& coeff,
                                  TermAccumulator& out);
/// c^λ_{μν} by enumerating LR fillings of λ/μ with content ν.
std::uint64_t count_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu);

/// f^⊥(g) = Σ_μ ⟨g, f s_μ⟩ s_μ, returned in the basis of g.
SymFunc f_perp(const SymFunc& f, const SymFunc& g, LRContext& ctx = LRContext::shared());

}  // namespace sperp
