#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sperp/partition.hpp"
#include "sperp/rational.hpp"

namespace sperp {

enum class Basis { schur, monomial, homogeneous, elementary, powersum };

char basis_letter(Basis b) noexcept;
std::string basis_name(Basis b);
/// Accepts the single letters s, m, h, e, p.
std::optional<Basis> basis_from_letter(char c) noexcept;

/// Finite rational linear combination of basis elements of one basis.
///
/// Terms are kept sorted in canonical order (degree descending, then
/// descending lexicographic) with no stored zeros, so equality is structural.
class SymFunc {
public:
    using Term = std::pair<Partition, Rational>;

    SymFunc() = default;
    explicit SymFunc(Basis basis) : basis_(basis) {}

    static SymFunc term(Basis basis, Partition index, Rational coeff = 1);
    static SymFunc schur(Partition index, Rational coeff = 1) { return term(Basis::schur, std::move(index), std::move(coeff)); }
    static SymFunc one(Basis basis = Basis::schur) { return term(basis, Partition{}); }
    /// Combines duplicate indices and drops zeros.
    static SymFunc from_terms(Basis basis, std::vector<Term> terms);

    Basis basis() const noexcept { return basis_; }
    std::span<const Term> terms() const& noexcept { return terms_; }
    /// Owning overload so `for (auto& t : make().terms())` does not dangle.
    std::vector<Term> terms() && noexcept { return std::move(terms_); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Partition& index) const;
    /// Common size of all indices; nullopt for zero or mixed-degree values.
    std::optional<int> degree() const;
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }
    int max_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().first.size(); }

    /// Terms of a single degree.
    SymFunc homogeneous_part(int degree) const;

    friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

private:
    Basis basis_ = Basis::schur;
    std::vector<Term> terms_;
};

/// Hash-map accumulator used by every kernel that builds an expansion term by term.
class TermAccumulator {
public:
    explicit TermAccumulator(Basis basis = Basis::schur) : basis_(basis) {}

    void add(const Partition& index, const Rational& coeff);
    void add(Partition&& index, const Rational& coeff);
    void add(const SymFunc& f, const Rational& scale = 1);
    void merge(TermAccumulator&& other);
    std::size_t size() const noexcept { return terms_.size(); }
    SymFunc finish() &&;

private:
    Basis basis_;
    std::unordered_map<Partition, Rational, PartitionHash> terms_;
};

// --- linear structure -------------------------------------------------------
// Mixed-basis operands are converted to the basis of the left operand.

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc subtract(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Rational& c, const SymFunc& f);

inline SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }
inline SymFunc operator-(const SymFunc& f, const SymFunc& g) { return subtract(f, g); }
inline SymFunc operator-(const SymFunc& f) { return scale(-1, f); }
inline SymFunc operator*(const Rational& c, const SymFunc& f) { return scale(c, f); }

// --- ring structure ---------------------------------------------------------

/// Product in Λ. Schur products go through the shared LR context.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return multiply(f, g); }

SymFunc to_basis(const SymFunc& f, Basis target);
/// Mathematical equality regardless of the bases the operands are written in.
bool equal(const SymFunc& f, const SymFunc& g);

Rational hall_inner_product(const SymFunc& f, const SymFunc& g);
/// Inner product evaluated through the power-sum diagonal form ⟨p_λ,p_μ⟩ = z_λ δ_{λμ}.
Rational hall_inner_product_powersum(const SymFunc& f, const SymFunc& g);

/// The standard involution, applied in the operand's own basis.
SymFunc omega(const SymFunc& f);

/// Keeps Schur terms s_μ with ℓ(μ) <= k. Throws std::invalid_argument for non-Schur input.
SymFunc down_k(const SymFunc& f, int k);
/// Bilinear extension of s_μ ⊙ s_λ = s_{μ+λ}. Schur basis only.
SymFunc odot(const SymFunc& f, const SymFunc& g);

/// True when every coefficient is a non-negative integer.
bool is_nonnegative_integral(const SymFunc& f);

}  // namespace sperp
