#include "sperp/app/verify.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "sperp/app/format.hpp"
#include "sperp/closed_forms.hpp"
#include "sperp/plethysm.hpp"
#include "sperp/tableaux.hpp"

namespace sperp::app {
namespace {

class Checker {
public:
    Checker(VerifyResult& result, std::ostream* log) : result_(result), log_(log) {}

    /// Records one case; returns false once any case has failed.
    bool check(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
        return result_.passed;
    }
    bool ok() const { return result_.passed; }
    void note(const std::string& line) {
        if (log_) *log_ << "  " << line << '\n';
    }

private:
    VerifyResult& result_;
    std::ostream* log_;
};

std::string pleth_name(const Partition& lambda, const Partition& mu) {
    return "s" + lambda.str() + "[s" + mu.str() + "]";
}

std::function<std::string()> mismatch(std::string what, const SymFunc& got, const SymFunc& want) {
    return [=] { return what + ": got " + to_text(got) + ", expected " + to_text(want); };
}

SymFunc oracle(const Partition& lambda, const Partition& mu) {
    return plethysm_powersum(SymFunc::schur(lambda), SymFunc::schur(mu));
}

void suite_oracle(Checker& c, const VerifyOptions& o) {
    const int bound = o.max_product.value_or(12);
    PlethysmEngine engine;
    for (int n = 1; n <= bound && c.ok(); ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int w = 1; n * w <= bound; ++w) {
                std::vector<Partition> inner{Partition::row(w)};
                if (w > 1) inner.push_back(Partition::column(w));
                for (const auto& mu : inner) {
                    const SymFunc want = oracle(lambda, mu);
                    const auto name = pleth_name(lambda, mu);
                    if (!c.check(want.degree() == n * w && is_nonnegative_integral(want),
                                 [&] { return name + ": oracle result is not a degree-" + std::to_string(n * w) +
                                              " Schur-positive integral expansion"; }))
                        return;
                    const SymFunc got = engine.plethysm(lambda, mu, Method::sperp_recursive);
                    if (!c.check(got == want, mismatch(name + " sperp", got, want))) return;
                    if (closed_form_kind(lambda, mu)) {
                        const SymFunc closed = closed_form(lambda, mu);
                        if (!c.check(closed == want, mismatch(name + " closed form", closed, want))) return;
                    }
                }
            }
        }
        c.note("|lambda| = " + std::to_string(n) + " done");
    }
}

void suite_deg3(Checker& c, const VerifyOptions& o) {
    const int bound = o.max_k.value_or(5);
    for (int k = 1; k <= bound && c.ok(); ++k) {
        SymFunc total(Basis::schur);
        for (TypeLabel t : kAllTypes) {
            const SymFunc got = tab_sum(t, k);
            const SymFunc want = oracle(type_shape(t), Partition::row(k));
            const auto name = "type " + type_name(t) + ", k = " + std::to_string(k);
            if (!c.check(got == want, mismatch(name, got, want))) return;
            total = total + got;
        }
        // Every tableau has exactly one type, so the four sums add up to Σ_λ K_{λ,(k,k,k)} s_λ = s_k³.
        const SymFunc all = multiply(multiply(SymFunc::schur(Partition::row(k)), SymFunc::schur(Partition::row(k))),
                                     SymFunc::schur(Partition::row(k)));
        if (!c.check(total == all, mismatch("type sums, k = " + std::to_string(k), total, all))) return;
        std::size_t classified = 0;
        for (TypeLabel t : kAllTypes) {
            for (const auto& [shape, n] : tab_shape_counts(t, k)) classified += static_cast<std::size_t>(n);
        }
        const std::size_t tableaux = enumerate_weight_kkk(k).size();
        if (!c.check(classified == tableaux, [&] {
                return "k = " + std::to_string(k) + ": " + std::to_string(classified) + " typed tableaux out of " +
                       std::to_string(tableaux);
            }))
            return;
        c.note("k = " + std::to_string(k) + " done");
    }
}

void suite_rowcol(Checker& c, const VerifyOptions& o) {
    const int bound = o.max_h.value_or(8);
    for (int h = 1; h <= bound && c.ok(); ++h) {
        for (const Partition& mu : {Partition{2}, Partition{1, 1}}) {
            const SymFunc row = closed_forms::row_plethysm(h, mu);
            const SymFunc row_want = oracle(Partition::row(h), mu);
            if (!c.check(row == row_want, mismatch(pleth_name(Partition::row(h), mu), row, row_want))) return;
            const SymFunc col = closed_forms::column_plethysm(h, mu);
            const SymFunc col_want = oracle(Partition::column(h), mu);
            if (!c.check(col == col_want, mismatch(pleth_name(Partition::column(h), mu), col, col_want))) return;
        }
        c.note("h = " + std::to_string(h) + " done");
    }
}

void suite_hooks(Checker& c, const VerifyOptions& o) {
    const int bound = o.max_h.value_or(7);
    const Partition pair{1, 1};
    for (int h = 2; h <= bound && c.ok(); ++h) {
        for (int k = 0; k < h; ++k) {
            const Partition lambda = Partition::hook(h - k, k);
            for (const Partition& mu : {Partition{2}, Partition{1, 1}}) {
                const SymFunc want = oracle(lambda, mu);
                const auto name = pleth_name(lambda, mu);
                std::vector<std::pair<std::string, SymFunc>> forms{
                    {"dispatch", closed_form(lambda, mu)},
                    {"inclusion-exclusion", closed_forms::hook_inclusion_exclusion(h, k, mu)}};
                if (k == 1) forms.emplace_back("leg one", closed_forms::hook_leg_one(h, mu));
                if (k == h - 2) forms.emplace_back("arm two", closed_forms::hook_arm_two(h, mu));
                if (k == 2) forms.emplace_back("leg two", closed_forms::hook_leg_two(h, mu));
                for (const auto& [label, got] : forms) {
                    if (!c.check(got == want, mismatch(name + " " + label, got, want))) return;
                }
            }
        }
        // Dual Pieri: s_{h−r}[s_{1²}]·s_{1^r}[s_{1²}] = s_{(h−r,1^r)}[s_{1²}] + s_{(h−r+1,1^{r−1})}[s_{1²}].
        for (int r = 1; r < h; ++r) {
            const SymFunc lhs = multiply(oracle(Partition::row(h - r), pair), oracle(Partition::column(r), pair));
            const SymFunc rhs = oracle(Partition::hook(h - r, r), pair) + oracle(Partition::hook(h - r + 1, r - 1), pair);
            if (!c.check(lhs == rhs, mismatch("hook recurrence h = " + std::to_string(h) + ", r = " + std::to_string(r),
                                              lhs, rhs)))
                return;
        }
        // Coefficients of s_γ and s_{w(γ)} agree on S_{2h} = P_{2h} ∪ {even}.
        for (const Partition& lambda : {Partition::row(h), Partition::hook(h - 1, 1)}) {
            const SymFunc f = oracle(lambda, pair);
            for (const auto& gamma : partitions_of(2 * h)) {
                if (!(in_P2h(gamma) || is_even(gamma))) continue;
                const Partition image = w_involution(gamma);
                if (!c.check(f.coefficient(gamma) == f.coefficient(image), [&] {
                        return pleth_name(lambda, pair) + ": coefficient of s" + gamma.str() + " is " +
                               f.coefficient(gamma).str() + " but of s" + image.str() + " is " +
                               f.coefficient(image).str();
                    }))
                    return;
            }
        }
        c.note("h = " + std::to_string(h) + " done");
    }
}

void suite_lemmas(Checker& c, const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed);
    PlethysmEngine engine;

    // Conjugation duality, and its general ω form.
    for (int a = 1; a <= 3; ++a) {
        for (const auto& lambda : partitions_of(a)) {
            for (int b = 1; b <= 3; ++b) {
                for (const auto& mu : partitions_of(b)) {
                    const SymFunc f = oracle(lambda, mu);
                    const Partition mu_c = conjugate(mu);
                    const Partition outer = b % 2 == 0 ? lambda : conjugate(lambda);
                    const SymFunc want = oracle(outer, mu_c);
                    if (!c.check(omega(f) == want, mismatch("omega of " + pleth_name(lambda, mu), omega(f), want)))
                        return;
                }
            }
        }
    }
    c.note("conjugation duality done");

    // s_r^⊥ and s_{1^r}^⊥ of a plethysm as sums over partition sequences.
    for (int a = 1; a <= 3; ++a) {
        for (const auto& lambda : partitions_of(a)) {
            for (int b = 1; b <= 3; ++b) {
                for (const auto& mu : partitions_of(b)) {
                    const SymFunc f = oracle(lambda, mu);
                    for (int r = 1; r <= a * b; ++r) {
                        const auto tag = pleth_name(lambda, mu) + ", r = " + std::to_string(r);
                        const SymFunc row = engine.sperp_of_plethysm_row(lambda, mu, r);
                        const SymFunc row_want = LRContext::shared().schur_perp(Partition::row(r), f);
                        if (!c.check(row == row_want, mismatch("row perp of " + tag, row, row_want))) return;
                        const SymFunc col = engine.sperp_of_plethysm_col(lambda, mu, r);
                        const SymFunc col_want = LRContext::shared().schur_perp(Partition::column(r), f);
                        if (!c.check(col == col_want, mismatch("column perp of " + tag, col, col_want))) return;
                    }
                }
            }
        }
    }
    c.note("perp of plethysm sequence sums done");

    // Multi-alphabet expansion.
    std::uniform_int_distribution<int> deg_f(1, 4), deg_g(1, 2), count(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const SymFunc f = random_homogeneous(rng, deg_f(rng), 3, 3);
        std::vector<SymFunc> gs;
        SymFunc sum(Basis::schur);
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            gs.push_back(random_homogeneous(rng, deg_g(rng), 2, 2));
            sum = sum + gs.back();
        }
        const SymFunc got = engine.plethysm_sum_alphabets(f, gs);
        const SymFunc want = plethysm_powersum(f, sum);
        if (!c.check(got == want, mismatch("(" + to_text(f) + ")[" + to_text(sum) + "] by alphabets", got, want)))
            return;
    }
    c.note("multi-alphabet expansion done");

    // f[−X] = (−1)^{deg f} (ω f)[X].
    std::uniform_int_distribution<int> deg_small(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const SymFunc f = random_homogeneous(rng, deg_small(rng), 4, 5);
        const SymFunc got = negate_alphabet(f);
        const SymFunc want = plethysm_powersum(f, -SymFunc::schur(Partition{1}));
        if (!c.check(got == want, mismatch("(" + to_text(f) + ")[-X]", got, want))) return;
    }
    c.note("negated alphabet done");

    // s_3[s_k]↓₂ = s_{66} ⊙ s_3[s_{k−4}]↓₂ + Σ_{r=2}^k s_{(3k−r,r)} + s_{3k}, and the ℓ <= 2 part of Tab_{123,k}.
    const int kmax = o.max_k.value_or(8);
    for (int k = 5; k <= kmax; ++k) {
        const SymFunc lhs = down_k(engine.plethysm(Partition{3}, Partition::row(k), Method::sperp_recursive), 2);
        TermAccumulator acc;
        acc.add(odot(SymFunc::schur(Partition{6, 6}),
                     down_k(engine.plethysm(Partition{3}, Partition::row(k - 4), Method::sperp_recursive), 2)));
        for (int r = 2; r <= k; ++r) acc.add(Partition{3 * k - r, r}, 1);
        acc.add(Partition{3 * k}, 1);
        const SymFunc rhs = std::move(acc).finish();
        if (!c.check(lhs == rhs, mismatch("two-row recurrence k = " + std::to_string(k), lhs, rhs))) return;
        const SymFunc tab = down_k(tab_sum(TypeLabel::row, k), 2);
        if (!c.check(lhs == tab, mismatch("two-row tableaux k = " + std::to_string(k), tab, lhs))) return;
    }
    c.note("two-row recurrence done");

    // Perp-sequence round trip and monomial expansion.
    std::uniform_int_distribution<int> deg_rt(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const SymFunc f = random_homogeneous(rng, deg_rt(rng), 6, 5);
        for (PerpMode mode : {PerpMode::row, PerpMode::column}) {
            const SymFunc back = expand_schur(perp_sequence(f, mode));
            if (!c.check(back == f, mismatch(std::string(mode == PerpMode::row ? "row" : "column") + " round trip",
                                             back, f)))
                return;
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        const SymFunc f = random_homogeneous(rng, deg_small(rng), 4, 5);
        for (int n = 0; n <= 4; ++n) {
            const bool same = monomial_expansion_sperp(f, n) == monomial_expansion_direct(f, n);
            if (!c.check(same, [&] { return "monomial expansion of " + to_text(f) + " in " + std::to_string(n) + " variables"; }))
                return;
        }
    }
    c.note("round trips done");
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"oracle", "deg3", "rowcol", "hooks", "lemmas"};
    return names;
}

VerifyResult run_verify(std::string_view suite, const VerifyOptions& options) {
    VerifyResult result;
    result.suite = std::string(suite);
    Checker checker(result, options.log);
    const auto start = std::chrono::steady_clock::now();
    if (suite == "oracle") suite_oracle(checker, options);
    else if (suite == "deg3") suite_deg3(checker, options);
    else if (suite == "rowcol") suite_rowcol(checker, options);
    else if (suite == "hooks") suite_hooks(checker, options);
    else if (suite == "lemmas") suite_lemmas(checker, options);
    else throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SymFunc random_homogeneous(std::mt19937_64& rng, int degree, int max_terms, int coeff_bound) {
    const auto shapes = partitions_of(degree);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> terms(1, std::max(1, max_terms));
    std::uniform_int_distribution<int> coeff(1, std::max(1, coeff_bound));
    std::bernoulli_distribution negative(0.5);
    TermAccumulator acc;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        const int c = coeff(rng);
        acc.add(shapes[pick(rng)], negative(rng) ? -c : c);
    }
    SymFunc f = std::move(acc).finish();
    // Duplicate picks can cancel; fall back to a single term.
    if (f.is_zero()) f = SymFunc::schur(shapes[pick(rng)], coeff(rng));
    return f;
}

}  // namespace sperp::app
