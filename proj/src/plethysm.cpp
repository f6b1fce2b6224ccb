#include "sperp/plethysm.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "sperp/closed_forms.hpp"
#include "sperp/kernels.hpp"

namespace sperp {

std::string method_name(Method m) {
    switch (m) {
        case Method::powersum_oracle: return "powersum";
        case Method::sperp_recursive: return "sperp";
        case Method::closed_form: return "closed";
        case Method::auto_select: return "auto";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "powersum" || name == "oracle") return Method::powersum_oracle;
    if (name == "sperp") return Method::sperp_recursive;
    if (name == "closed") return Method::closed_form;
    if (name == "auto") return Method::auto_select;
    return std::nullopt;
}

// --- power-sum oracle ------------------------------------------------------------

namespace {

SymFunc scale_indices(const SymFunc& g, int k) {
    std::vector<SymFunc::Term> terms;
    terms.reserve(g.size());
    for (const auto& [rho, c] : g.terms()) {
        std::vector<int> parts = rho.parts();
        for (int& x : parts) x *= k;
        terms.emplace_back(Partition(std::move(parts)), c);
    }
    return SymFunc::from_terms(Basis::powersum, std::move(terms));
}

int homogeneous_degree(const SymFunc& f, const char* what) {
    if (f.is_zero()) return 0;
    const auto d = f.degree();
    if (!d) throw std::invalid_argument(std::string(what) + ": input must be homogeneous");
    return *d;
}

}  // namespace

SymFunc plethysm_powersum(const SymFunc& f, const SymFunc& g, Basis out, Exec exec) {
    const SymFunc fp = to_basis(f, Basis::powersum);
    const SymFunc gp = to_basis(g, Basis::powersum);

    std::unordered_map<int, SymFunc> scaled;
    auto pk = [&](int k) -> const SymFunc& {
        auto it = scaled.find(k);
        if (it == scaled.end()) it = scaled.emplace(k, scale_indices(gp, k)).first;
        return it->second;
    };

    // p_ρ[g] for every prefix of every ρ; indices are sorted so prefixes are shared.
    std::unordered_map<Partition, SymFunc, PartitionHash> prefix_products;
    prefix_products.emplace(Partition{}, SymFunc::one(Basis::powersum));
    TermAccumulator acc(Basis::powersum);
    for (const auto& [rho, c] : fp.terms()) {
        const auto& parts = rho.parts();
        const SymFunc* current = &prefix_products.at(Partition{});
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Partition prefix(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(i) + 1));
            auto it = prefix_products.find(prefix);
            if (it == prefix_products.end())
                it = prefix_products.emplace(std::move(prefix), multiply(*current, pk(parts[i]))).first;
            current = &it->second;
        }
        acc.add(*current, c);
    }
    SymFunc schur = kernels::powersum_to_schur(std::move(acc).finish(), exec);
    return out == Basis::schur ? schur : to_basis(schur, out);
}

SymFunc negate_alphabet(const SymFunc& f) {
    const int d = homogeneous_degree(f, "negate_alphabet");
    SymFunc w = omega(f);
    return d % 2 == 0 ? w : -w;
}

int alphabet_scale_exponent(const SymFunc& f) { return homogeneous_degree(f, "alphabet_scale_exponent"); }

// --- the s-perp trick ---------------------------------------------------------------

PerpSequence perp_sequence(const SymFunc& f, PerpMode mode, LRContext& ctx) {
    const auto d = f.degree();
    if (!d || *d < 1) throw std::invalid_argument("perp_sequence: f must be homogeneous of degree >= 1");
    const SymFunc fs = to_basis(f, Basis::schur);
    PerpSequence a{mode, {}};
    a.entries.reserve(static_cast<std::size_t>(*d));
    for (int r = 1; r <= *d; ++r)
        a.entries.push_back(ctx.schur_perp(mode == PerpMode::row ? Partition::row(r) : Partition::column(r), fs));
    return a;
}

SymFunc add_row(const SymFunc& f, int r) {
    std::vector<SymFunc::Term> terms;
    for (const auto& [lambda, c] : f.terms()) {
        if (!lambda.empty() && lambda.first() > r) return SymFunc(Basis::schur);
        std::vector<int> parts{r};
        parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
        terms.emplace_back(Partition(std::move(parts)), c);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

SymFunc add_col(const SymFunc& f, int r) {
    std::vector<SymFunc::Term> terms;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.length() > r) return SymFunc(Basis::schur);
        std::vector<int> parts(static_cast<std::size_t>(r), 1);
        for (int i = 0; i < lambda.length(); ++i) parts[static_cast<std::size_t>(i)] += lambda.parts()[static_cast<std::size_t>(i)];
        terms.emplace_back(Partition(std::move(parts)), c);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

SymFunc expand_schur(const PerpSequence& a, const ExpandOptions& options, LRContext& ctx) {
    const bool row = a.mode == PerpMode::row;
    SymFunc out(Basis::schur);
    for (int r = a.degree(); r >= 1; --r) {
        TermAccumulator removed;
        for (const auto& [lambda, c] : out.terms()) {
            if (row) add_perp_row(lambda, r, c, removed);
            else add_perp_col(lambda, r, c, removed);
        }
        const SymFunc diff = to_basis(a.at(r), Basis::schur) - std::move(removed).finish();
        for (const auto& [lambda, c] : diff.terms()) {
            const bool fits = row ? (lambda.empty() || lambda.first() <= r) : lambda.length() <= r;
            if (!fits)
                throw InconsistentPerpSequence("expand_schur: " + lambda.str() + " cannot receive a " +
                                               (row ? "row" : "column") + " of length " + std::to_string(r));
            if (options.expect_nonnegative && c.sign() < 0)
                throw InconsistentPerpSequence("expand_schur: negative coefficient " + c.str() + " at " + lambda.str() +
                                               " for r = " + std::to_string(r));
        }
        out = out + (row ? add_row(diff, r) : add_col(diff, r));
    }
    if (options.verify && a.degree() > 0) {
        PerpSequence expected = a;
        for (auto& e : expected.entries) e = to_basis(e, Basis::schur);
        if (out.is_zero() || !(perp_sequence(out, a.mode, ctx) == expected))
            throw InconsistentPerpSequence("expand_schur: result does not reproduce its perp sequence");
    }
    return out;
}

namespace {

Monomials monomials_rec(const SymFunc& f, int n, LRContext& ctx) {
    Monomials out;
    if (n == 0) {
        const Rational c = f.coefficient(Partition{});
        if (!c.is_zero()) out.emplace(std::vector<int>{}, c);
        return out;
    }
    // Schur functions with more than n−1 rows vanish in n−1 variables.
    auto restrict = [n](const SymFunc& g) {
        std::vector<SymFunc::Term> terms;
        for (const auto& t : g.terms()) {
            if (t.first.length() <= n - 1) terms.push_back(t);
        }
        return SymFunc::from_terms(Basis::schur, std::move(terms));
    };
    for (int r = 0; r <= f.max_degree(); ++r) {
        const SymFunc g = restrict(r == 0 ? f : ctx.schur_perp(Partition::row(r), f));
        if (g.is_zero()) continue;
        for (const auto& [sub, c] : monomials_rec(g, n - 1, ctx)) {
            std::vector<int> exps = sub;
            exps.push_back(r);
            out[std::move(exps)] += c;
        }
    }
    return out;
}

}  // namespace

Monomials monomial_expansion_sperp(const SymFunc& f, int n, LRContext& ctx) {
    if (n < 0) throw std::invalid_argument("monomial_expansion_sperp: n must be non-negative");
    std::vector<SymFunc::Term> terms;
    for (const auto& t : to_basis(f, Basis::schur).terms()) {
        if (t.first.length() <= n) terms.push_back(t);
    }
    Monomials out = monomials_rec(SymFunc::from_terms(Basis::schur, std::move(terms)), n, ctx);
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Monomials monomial_expansion_direct(const SymFunc& f, int n) {
    if (n < 0) throw std::invalid_argument("monomial_expansion_direct: n must be non-negative");
    Monomials out;
    for (const auto& [lambda, c] : to_basis(f, Basis::monomial).terms()) {
        if (lambda.length() > n) continue;
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
        std::sort(exps.begin(), exps.end());
        do {
            out[exps] += c;
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// --- engine ---------------------------------------------------------------------------

std::size_t PlethysmEngine::PairHash::operator()(const std::pair<Partition, Partition>& p) const noexcept {
    const PartitionHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
}

std::optional<SymFunc> PlethysmEngine::memo_find(const std::pair<Partition, Partition>& key) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void PlethysmEngine::memo_store(const std::pair<Partition, Partition>& key, const SymFunc& value) {
    std::unique_lock lock(mutex_);
    memo_.emplace(key, value);
}

std::size_t PlethysmEngine::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

SymFunc PlethysmEngine::plethysm(const Partition& lambda, const Partition& mu, Method method) {
    switch (method) {
        case Method::powersum_oracle:
            return plethysm_powersum(SymFunc::schur(lambda), SymFunc::schur(mu), Basis::schur, exec_);
        case Method::sperp_recursive: return plethysm_sperp(lambda, mu);
        case Method::closed_form: return closed_form(lambda, mu, ctx_);
        case Method::auto_select:
            if (closed_form_kind(lambda, mu)) return closed_form(lambda, mu, ctx_);
            if (mu.empty() || mu.is_row() || mu.is_column()) return plethysm_sperp(lambda, mu);
            return plethysm_powersum(SymFunc::schur(lambda), SymFunc::schur(mu), Basis::schur, exec_);
    }
    throw UnsupportedMethod("unknown plethysm method");
}

SymFunc PlethysmEngine::plethysm(const SymFunc& f, const SymFunc& g, Method method) {
    if (method == Method::powersum_oracle) return plethysm_powersum(f, g, Basis::schur, exec_);
    const SymFunc gs = to_basis(g, Basis::schur);
    if (gs.size() == 1 && gs.terms().front().second.is_one()) {
        const Partition& mu = gs.terms().front().first;
        TermAccumulator acc;
        for (const auto& [lambda, c] : to_basis(f, Basis::schur).terms()) acc.add(plethysm(lambda, mu, method), c);
        return std::move(acc).finish();
    }
    if (method == Method::auto_select) return plethysm_powersum(f, g, Basis::schur, exec_);
    throw UnsupportedMethod("method " + method_name(method) + " needs the inner function to be a single Schur function");
}

SymFunc PlethysmEngine::plethysm_sperp(const Partition& lambda, const Partition& mu) {
    if (!(mu.empty() || mu.is_row() || mu.is_column()))
        throw UnsupportedMethod("sperp method needs the inner partition to be a row or a column, got " + mu.str());
    return sperp_rec(lambda, mu);
}

SymFunc PlethysmEngine::sperp_rec(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return SymFunc::one();
    if (mu.empty()) return lambda.is_row() ? SymFunc::one() : SymFunc(Basis::schur);
    if (mu.size() == 1) return SymFunc::schur(lambda);
    if (lambda.size() == 1) return SymFunc::schur(mu);

    const auto key = std::make_pair(lambda, mu);
    if (auto hit = memo_find(key)) return *std::move(hit);

    const int h = lambda.size();
    const int w = mu.size();
    // μ = (1^w) yields the row-mode sequence and μ = (w) the column-mode one.
    const bool column_inner = mu.is_column();
    const Partition smaller = column_inner ? Partition::column(w - 1) : Partition::row(w - 1);
    PerpSequence a{column_inner ? PerpMode::row : PerpMode::column,
                   std::vector<SymFunc>(static_cast<std::size_t>(h * w), SymFunc(Basis::schur))};
    for (int r = 1; r <= h; ++r) {
        TermAccumulator acc;
        for (const auto& gamma : partitions_of(r)) {
            const Partition removed = column_inner ? gamma : conjugate(gamma);
            if (!lambda.contains(removed)) continue;
            TermAccumulator outer;
            for (const auto& [nu, c] : ctx_.skew(lambda, removed).terms()) outer.add(sperp_rec(nu, mu), c);
            const SymFunc x = std::move(outer).finish();
            if (x.is_zero()) continue;
            const SymFunc y = sperp_rec(gamma, smaller);
            if (y.is_zero()) continue;
            acc.add(ctx_.multiply(x, y, exec_));
        }
        a.entries[static_cast<std::size_t>(r - 1)] = std::move(acc).finish();
    }
    SymFunc result = expand_schur(a, {.expect_nonnegative = true}, ctx_);
    memo_store(key, result);
    return result;
}

SymFunc PlethysmEngine::inner_plethysm(const Partition& nu, const SymFunc& g) {
    if (nu.empty()) return SymFunc::one();
    if (g.is_zero()) return SymFunc(Basis::schur);
    if (g.size() == 1 && g.terms().front().second.is_one())
        return plethysm(nu, g.terms().front().first, Method::auto_select);
    return plethysm_powersum(SymFunc::schur(nu), g, Basis::schur, exec_);
}

SymFunc PlethysmEngine::sperp_of_plethysm_row(const Partition& lambda, const Partition& mu, int r) {
    return sperp_of_plethysm(lambda, mu, r, PerpMode::row);
}

SymFunc PlethysmEngine::sperp_of_plethysm_col(const Partition& lambda, const Partition& mu, int r) {
    return sperp_of_plethysm(lambda, mu, r, PerpMode::column);
}

SymFunc PlethysmEngine::sperp_of_plethysm(const Partition& lambda, const Partition& mu, int r, PerpMode mode) {
    if (r < 1) throw std::invalid_argument("sperp_of_plethysm: r must be positive");
    const bool row = mode == PerpMode::row;
    const int rp = std::min(r, row ? (mu.empty() ? 0 : mu.first()) : mu.length());

    std::vector<SymFunc> inner;  // inner[i] = s_i^⊥ s_μ or s_{1^i}^⊥ s_μ
    for (int i = 0; i <= rp; ++i)
        inner.push_back(i == 0 ? SymFunc::schur(mu) : (row ? perp_row(mu, i) : perp_col(mu, i)));

    TermAccumulator total;
    std::vector<Partition> chosen(static_cast<std::size_t>(rp + 1));
    // Chooses ν^(i) from i = r′ down to 1; `rest` is s_{ν^(r′)}^⊥⋯s_{ν^(i+1)}^⊥ s_λ, so
    // at the end its s_{ν^(0)} coefficients are ⟨s_λ, Π s_{ν^(i)}⟩.
    auto rec = [&](auto&& self, int i, int budget, const SymFunc& rest) -> void {
        if (i == 0) {
            if (budget != 0) return;
            SymFunc prefix = SymFunc::one();
            for (int k = 1; k <= rp; ++k) {
                const Partition& nu = chosen[static_cast<std::size_t>(k)];
                if (nu.empty()) continue;
                const Partition applied = (!row && k % 2 == 1) ? conjugate(nu) : nu;
                prefix = ctx_.multiply(prefix, inner_plethysm(applied, inner[static_cast<std::size_t>(k)]), exec_);
                if (prefix.is_zero()) return;
            }
            for (const auto& [nu0, c] : rest.terms()) {
                const SymFunc factor = inner_plethysm(nu0, inner[0]);
                if (factor.is_zero()) continue;
                total.add(ctx_.multiply(prefix, factor, exec_), c);
            }
            return;
        }
        const int deg = rest.max_degree();
        for (int n = 0; n * i <= budget && n <= deg; ++n) {
            for (const auto& nu : partitions_of(n)) {
                const SymFunc next = n == 0 ? rest : ctx_.schur_perp(nu, rest);
                if (next.is_zero()) continue;
                chosen[static_cast<std::size_t>(i)] = nu;
                self(self, i - 1, budget - n * i, next);
            }
        }
        chosen[static_cast<std::size_t>(i)] = Partition{};
    };
    rec(rec, rp, r, SymFunc::schur(lambda));
    return std::move(total).finish();
}

SymFunc PlethysmEngine::plethysm_sum_alphabets(const SymFunc& f, std::span<const SymFunc> gs) {
    const SymFunc fs = to_basis(f, Basis::schur);
    homogeneous_degree(fs, "plethysm_sum_alphabets");
    if (gs.empty()) return SymFunc::from_terms(Basis::schur, {{Partition{}, fs.coefficient(Partition{})}});
    std::vector<SymFunc> inner;
    for (const auto& g : gs) inner.push_back(to_basis(g, Basis::schur));

    TermAccumulator total;
    const int k = static_cast<int>(inner.size());
    // Same peeling as above: the last alphabet's partition is read off the remainder.
    auto rec = [&](auto&& self, int i, const SymFunc& rest, const SymFunc& prefix) -> void {
        if (i == k - 1) {
            for (const auto& [nu, c] : rest.terms())
                total.add(ctx_.multiply(prefix, inner_plethysm(nu, inner[static_cast<std::size_t>(i)]), exec_), c);
            return;
        }
        for (int n = 0; n <= rest.max_degree(); ++n) {
            for (const auto& nu : partitions_of(n)) {
                const SymFunc next = n == 0 ? rest : ctx_.schur_perp(nu, rest);
                if (next.is_zero()) continue;
                const SymFunc p =
                    n == 0 ? prefix : ctx_.multiply(prefix, inner_plethysm(nu, inner[static_cast<std::size_t>(i)]), exec_);
                if (p.is_zero()) continue;
                self(self, i + 1, next, p);
            }
        }
    };
    rec(rec, 0, fs, SymFunc::one());
    return std::move(total).finish();
}

}  // namespace sperp
