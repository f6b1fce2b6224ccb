#include "sperp/symfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sperp/kernels.hpp"
#include "sperp/lr.hpp"
#include "sperp/transition.hpp"

namespace sperp {

char basis_letter(Basis b) noexcept {
    switch (b) {
        case Basis::schur: return 's';
        case Basis::monomial: return 'm';
        case Basis::homogeneous: return 'h';
        case Basis::elementary: return 'e';
        case Basis::powersum: return 'p';
    }
    return '?';
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::schur: return "schur";
        case Basis::monomial: return "monomial";
        case Basis::homogeneous: return "homogeneous";
        case Basis::elementary: return "elementary";
        case Basis::powersum: return "powersum";
    }
    return "?";
}

std::optional<Basis> basis_from_letter(char c) noexcept {
    switch (c) {
        case 's': return Basis::schur;
        case 'm': return Basis::monomial;
        case 'h': return Basis::homogeneous;
        case 'e': return Basis::elementary;
        case 'p': return Basis::powersum;
        default: return std::nullopt;
    }
}

// --- SymFunc ------------------------------------------------------------------------

SymFunc SymFunc::term(Basis basis, Partition index, Rational coeff) {
    SymFunc out(basis);
    if (!coeff.is_zero()) out.terms_.emplace_back(std::move(index), std::move(coeff));
    return out;
}

SymFunc SymFunc::from_terms(Basis basis, std::vector<Term> terms) {
    SymFunc out(basis);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return CanonicalOrder{}(a.first, b.first); });
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Rational SymFunc::coefficient(const Partition& index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, const Partition& p) { return CanonicalOrder{}(t.first, p); });
    if (it != terms_.end() && it->first == index) return it->second;
    return 0;
}

std::optional<int> SymFunc::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.front().first.size();
    if (terms_.back().first.size() != d) return std::nullopt;
    return d;
}

SymFunc SymFunc::homogeneous_part(int degree) const {
    SymFunc out(basis_);
    for (const auto& t : terms_) {
        if (t.first.size() == degree) out.terms_.push_back(t);
    }
    return out;
}

// --- TermAccumulator -------------------------------------------------------------

void TermAccumulator::add(const Partition& index, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) it->second += coeff;
}

void TermAccumulator::add(Partition&& index, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(index), coeff);
    if (!inserted) it->second += coeff;
}

void TermAccumulator::add(const SymFunc& f, const Rational& scale) {
    if (scale.is_one()) {
        for (const auto& [p, c] : f.terms()) add(p, c);
    } else {
        for (const auto& [p, c] : f.terms()) add(p, c * scale);
    }
}

void TermAccumulator::merge(TermAccumulator&& other) {
    if (terms_.empty()) {
        terms_ = std::move(other.terms_);
        return;
    }
    for (auto& [p, c] : other.terms_) add(p, c);
    other.terms_.clear();
}

SymFunc TermAccumulator::finish() && {
    std::vector<SymFunc::Term> terms;
    terms.reserve(terms_.size());
    for (auto& [p, c] : terms_) {
        if (!c.is_zero()) terms.emplace_back(p, std::move(c));
    }
    terms_.clear();
    return SymFunc::from_terms(basis_, std::move(terms));
}

// --- linear structure -----------------------------------------------------------

namespace {

SymFunc merge_linear(const SymFunc& f, const SymFunc& g, const Rational& g_scale) {
    const SymFunc gb = g.basis() == f.basis() ? g : to_basis(g, f.basis());
    std::vector<SymFunc::Term> terms(f.terms().begin(), f.terms().end());
    for (const auto& [p, c] : gb.terms()) terms.emplace_back(p, c * g_scale);
    return SymFunc::from_terms(f.basis(), std::move(terms));
}

}  // namespace

SymFunc add(const SymFunc& f, const SymFunc& g) { return merge_linear(f, g, 1); }

SymFunc subtract(const SymFunc& f, const SymFunc& g) { return merge_linear(f, g, -1); }

SymFunc scale(const Rational& c, const SymFunc& f) {
    std::vector<SymFunc::Term> terms;
    if (!c.is_zero()) {
        for (const auto& [p, a] : f.terms()) terms.emplace_back(p, a * c);
    }
    return SymFunc::from_terms(f.basis(), std::move(terms));
}

// --- conversions ------------------------------------------------------------------

namespace {

SymFunc to_schur(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::schur: return f;
        case Basis::powersum: return kernels::powersum_to_schur_serial(f);
        case Basis::homogeneous: {
            TermAccumulator acc;
            for (const auto& [mu, c] : f.terms()) acc.add(transition::homogeneous_in_schur(mu), c);
            return std::move(acc).finish();
        }
        case Basis::elementary: {
            TermAccumulator acc;
            for (const auto& [mu, c] : f.terms()) acc.add(transition::elementary_in_schur(mu), c);
            return std::move(acc).finish();
        }
        case Basis::monomial: {
            // s_μ = m_μ + (terms lex-smaller), so peel off the lex-largest index.
            std::map<Partition, Rational, CanonicalOrder> rest;
            for (const auto& [p, c] : f.terms()) rest.emplace(p, c);
            std::vector<SymFunc::Term> out;
            while (!rest.empty()) {
                auto [mu, c] = *rest.begin();
                out.emplace_back(mu, c);
                for (const auto& [nu, k] : transition::schur_in_monomial(mu).terms()) {
                    auto& slot = rest[nu];
                    slot -= c * k;
                    if (slot.is_zero()) rest.erase(nu);
                }
            }
            return SymFunc::from_terms(Basis::schur, std::move(out));
        }
    }
    throw std::logic_error("unknown basis");
}

SymFunc from_schur(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::schur: return f;
        case Basis::monomial: {
            TermAccumulator acc(Basis::monomial);
            for (const auto& [lambda, c] : f.terms()) acc.add(transition::schur_in_monomial(lambda), c);
            return std::move(acc).finish();
        }
        case Basis::powersum: {
            TermAccumulator acc(Basis::powersum);
            for (const auto& [lambda, c] : f.terms()) acc.add(transition::schur_in_powersum(lambda), c);
            return std::move(acc).finish();
        }
        case Basis::homogeneous: {
            // h_μ = s_μ + (terms dominating μ): peel off the lex-smallest index.
            std::map<Partition, Rational, CanonicalOrder> rest;
            for (const auto& [p, c] : f.terms()) rest.emplace(p, c);
            std::vector<SymFunc::Term> out;
            while (!rest.empty()) {
                auto last = std::prev(rest.end());
                Partition mu = last->first;
                Rational c = last->second;
                out.emplace_back(mu, c);
                for (const auto& [nu, k] : transition::homogeneous_in_schur(mu).terms()) {
                    auto& slot = rest[nu];
                    slot -= c * k;
                    if (slot.is_zero()) rest.erase(nu);
                }
            }
            return SymFunc::from_terms(Basis::homogeneous, std::move(out));
        }
        case Basis::elementary: {
            // e_μ = s_{μ'} + (terms lex-smaller than μ'): peel off the lex-largest index.
            std::map<Partition, Rational, CanonicalOrder> rest;
            for (const auto& [p, c] : f.terms()) rest.emplace(p, c);
            std::vector<SymFunc::Term> out;
            while (!rest.empty()) {
                auto [lambda, c] = *rest.begin();
                Partition mu = conjugate(lambda);
                out.emplace_back(mu, c);
                for (const auto& [nu, k] : transition::elementary_in_schur(mu).terms()) {
                    auto& slot = rest[nu];
                    slot -= c * k;
                    if (slot.is_zero()) rest.erase(nu);
                }
            }
            return SymFunc::from_terms(Basis::elementary, std::move(out));
        }
    }
    throw std::logic_error("unknown basis");
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    return from_schur(to_schur(f), target);
}

bool equal(const SymFunc& f, const SymFunc& g) {
    if (f.basis() == g.basis()) return f == g;
    return to_basis(f, Basis::schur) == to_basis(g, Basis::schur);
}

// --- ring structure ----------------------------------------------------------------

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    const SymFunc gb = g.basis() == f.basis() ? g : to_basis(g, f.basis());
    switch (f.basis()) {
        case Basis::schur: return LRContext::shared().multiply(f, gb);
        case Basis::powersum:
        case Basis::homogeneous:
        case Basis::elementary: {
            // Multiplicative bases: indices concatenate.
            TermAccumulator acc(f.basis());
            for (const auto& [a, ca] : f.terms()) {
                for (const auto& [b, cb] : gb.terms()) acc.add(join(a, b), ca * cb);
            }
            return std::move(acc).finish();
        }
        case Basis::monomial:
            return to_basis(LRContext::shared().multiply(to_basis(f, Basis::schur), to_basis(gb, Basis::schur)),
                            Basis::monomial);
    }
    throw std::logic_error("unknown basis");
}

Rational hall_inner_product(const SymFunc& f, const SymFunc& g) {
    const SymFunc fs = to_basis(f, Basis::schur);
    const SymFunc gs = to_basis(g, Basis::schur);
    Rational total = 0;
    for (const auto& [lambda, c] : fs.terms()) {
        Rational d = gs.coefficient(lambda);
        if (!d.is_zero()) total += c * d;
    }
    return total;
}

Rational hall_inner_product_powersum(const SymFunc& f, const SymFunc& g) {
    const SymFunc fp = to_basis(f, Basis::powersum);
    const SymFunc gp = to_basis(g, Basis::powersum);
    Rational total = 0;
    for (const auto& [rho, c] : fp.terms()) {
        Rational d = gp.coefficient(rho);
        if (!d.is_zero()) total += c * d * Rational(z_lambda(rho));
    }
    return total;
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::schur: {
            std::vector<SymFunc::Term> terms;
            for (const auto& [lambda, c] : f.terms()) terms.emplace_back(conjugate(lambda), c);
            return SymFunc::from_terms(Basis::schur, std::move(terms));
        }
        case Basis::powersum: {
            std::vector<SymFunc::Term> terms;
            for (const auto& [rho, c] : f.terms()) {
                bool odd = (rho.size() + rho.length()) % 2 != 0;
                terms.emplace_back(rho, odd ? -c : c);
            }
            return SymFunc::from_terms(Basis::powersum, std::move(terms));
        }
        case Basis::homogeneous:
        case Basis::elementary: {
            // ω swaps h_λ and e_λ; re-express in the original basis.
            Basis swapped = f.basis() == Basis::homogeneous ? Basis::elementary : Basis::homogeneous;
            std::vector<SymFunc::Term> terms(f.terms().begin(), f.terms().end());
            return to_basis(SymFunc::from_terms(swapped, std::move(terms)), f.basis());
        }
        case Basis::monomial: return to_basis(omega(to_basis(f, Basis::schur)), Basis::monomial);
    }
    throw std::logic_error("unknown basis");
}

SymFunc down_k(const SymFunc& f, int k) {
    if (f.basis() != Basis::schur) throw std::invalid_argument("down_k requires a Schur-basis argument");
    std::vector<SymFunc::Term> terms;
    for (const auto& t : f.terms()) {
        if (t.first.length() <= k) terms.push_back(t);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

SymFunc odot(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::schur || g.basis() != Basis::schur)
        throw std::invalid_argument("odot requires Schur-basis arguments");
    TermAccumulator acc;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) acc.add(add_componentwise(a, b), ca * cb);
    }
    return std::move(acc).finish();
}

bool is_nonnegative_integral(const SymFunc& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const SymFunc::Term& t) { return t.second.sign() > 0 && t.second.is_integer(); });
}

}  // namespace sperp
