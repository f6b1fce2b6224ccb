#include "sperp/lr.hpp"

#include <algorithm>

#include "sperp/kernels.hpp"

namespace sperp {
namespace {

// Row-major tableau scratch indexed by 1-based (row, col).
class Grid {
public:
    Grid(int rows, int cols) : cols_(cols + 2), cells_(static_cast<std::size_t>((rows + 2) * (cols + 2)), 0) {}
    int& at(int r, int c) { return cells_[static_cast<std::size_t>(r * cols_ + c)]; }

private:
    int cols_;
    std::vector<int> cells_;
};

std::vector<Cell> skew_cells_in_reading_order(const Partition& outer, const Partition& inner) {
    std::vector<Cell> cells;
    for (int r = 1; r <= outer.length(); ++r) {
        for (int c = outer.part(r); c > inner.part(r); --c) cells.push_back({r, c});
    }
    return cells;
}

}  // namespace

// --- Pieri and strip removal ---------------------------------------------------

void add_pieri_row(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out) {
    if (r < 0) return;
    const int len = lambda.length();
    std::vector<int> nu(static_cast<std::size_t>(len + 1), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == len + 1) {
            if (len == 0 || remaining <= lambda.part(len)) {
                nu[static_cast<std::size_t>(len)] = remaining;
                out.add(Partition(nu), coeff);
            }
            return;
        }
        int room = row == 1 ? remaining : std::min(remaining, lambda.part(row - 1) - lambda.part(row));
        for (int a = 0; a <= room; ++a) {
            nu[static_cast<std::size_t>(row - 1)] = lambda.part(row) + a;
            self(self, row + 1, remaining - a);
        }
    };
    rec(rec, 1, r);
}

void add_perp_row(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out) {
    if (r < 0 || r > lambda.size()) return;
    const int len = lambda.length();
    std::vector<int> nu(lambda.parts());
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row > len) {
            if (remaining == 0) out.add(Partition(nu), coeff);
            return;
        }
        int hi = lambda.part(row);
        int lo = std::max(lambda.part(row + 1), hi - remaining);
        for (int v = hi; v >= lo; --v) {
            nu[static_cast<std::size_t>(row - 1)] = v;
            self(self, row + 1, remaining - (hi - v));
        }
        nu[static_cast<std::size_t>(row - 1)] = hi;
    };
    rec(rec, 1, r);
}

void add_pieri_col(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out) {
    TermAccumulator tmp;
    add_pieri_row(conjugate(lambda), r, 1, tmp);
    for (const auto& [nu, c] : std::move(tmp).finish().terms()) out.add(conjugate(nu), c * coeff);
}

void add_perp_col(const Partition& lambda, int r, const Rational& coeff, TermAccumulator& out) {
    TermAccumulator tmp;
    add_perp_row(conjugate(lambda), r, 1, tmp);
    for (const auto& [nu, c] : std::move(tmp).finish().terms()) out.add(conjugate(nu), c * coeff);
}

SymFunc pieri_row(const Partition& lambda, int r) {
    TermAccumulator acc;
    add_pieri_row(lambda, r, 1, acc);
    return std::move(acc).finish();
}

SymFunc pieri_col(const Partition& lambda, int r) {
    TermAccumulator acc;
    add_pieri_col(lambda, r, 1, acc);
    return std::move(acc).finish();
}

SymFunc perp_row(const Partition& lambda, int r) {
    TermAccumulator acc;
    add_perp_row(lambda, r, 1, acc);
    return std::move(acc).finish();
}

SymFunc perp_col(const Partition& lambda, int r) {
    TermAccumulator acc;
    add_perp_col(lambda, r, 1, acc);
    return std::move(acc).finish();
}

// --- tableau enumerations ------------------------------------------------------

void add_product_by_dominant_tableaux(const Partition& a, const Partition& b, const Rational& coeff,
                                      TermAccumulator& out) {
    std::vector<Cell> cells;
    for (int r = 1; r <= b.length(); ++r) {
        for (int c = b.part(r); c >= 1; --c) cells.push_back({r, c});
    }
    const int max_len = a.length() + b.length();
    std::vector<int> shape(static_cast<std::size_t>(max_len + 1), 0);
    for (int i = 1; i <= a.length(); ++i) shape[static_cast<std::size_t>(i - 1)] = a.part(i);
    int shape_len = a.length();
    Grid t(b.length(), b.first());

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.add(Partition(std::vector<int>(shape.begin(), shape.begin() + shape_len)), coeff);
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = r > 1 ? t.at(r - 1, c) + 1 : 1;
        int hi = c < b.part(r) ? t.at(r, c + 1) : shape_len + 1;
        hi = std::min(hi, shape_len + 1);
        for (int x = lo; x <= hi; ++x) {
            auto& row_len = shape[static_cast<std::size_t>(x - 1)];
            if (x > 1 && shape[static_cast<std::size_t>(x - 2)] <= row_len) continue;
            ++row_len;
            int saved_len = shape_len;
            if (x > shape_len) shape_len = x;
            t.at(r, c) = x;
            self(self, idx + 1);
            shape_len = saved_len;
            --row_len;
        }
    };
    rec(rec, 0);
}

void add_skew_by_lattice_fillings(const Partition& outer, const Partition& inner, const Rational& coeff,
                                  TermAccumulator& out) {
    if (!outer.contains(inner)) return;
    const auto cells = skew_cells_in_reading_order(outer, inner);
    Grid t(outer.length(), outer.first());
    std::vector<int> count(cells.size() + 2, 0);
    int letters = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.add(Partition(std::vector<int>(count.begin(), count.begin() + letters)), coeff);
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = (r > 1 && c > inner.part(r - 1)) ? t.at(r - 1, c) + 1 : 1;
        int hi = c < outer.part(r) ? t.at(r, c + 1) : letters + 1;
        hi = std::min(hi, letters + 1);
        for (int x = lo; x <= hi; ++x) {
            auto& cnt = count[static_cast<std::size_t>(x - 1)];
            if (x > 1 && count[static_cast<std::size_t>(x - 2)] <= cnt) continue;
            ++cnt;
            int saved = letters;
            if (x > letters) letters = x;
            t.at(r, c) = x;
            self(self, idx + 1);
            letters = saved;
            --cnt;
        }
    };
    rec(rec, 0);
}

std::uint64_t count_lr_fillings(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu)) return 0;
    const auto cells = skew_cells_in_reading_order(lambda, mu);
    Grid t(lambda.length(), lambda.first());
    std::vector<int> count(static_cast<std::size_t>(nu.length() + 1), 0);
    std::uint64_t total = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = (r > 1 && c > mu.part(r - 1)) ? t.at(r - 1, c) + 1 : 1;
        int hi = c < lambda.part(r) ? t.at(r, c + 1) : nu.length();
        hi = std::min(hi, nu.length());
        for (int x = lo; x <= hi; ++x) {
            auto& cnt = count[static_cast<std::size_t>(x - 1)];
            if (cnt >= nu.part(x)) continue;
            if (x > 1 && count[static_cast<std::size_t>(x - 2)] <= cnt) continue;
            ++cnt;
            t.at(r, c) = x;
            self(self, idx + 1);
            --cnt;
        }
    };
    rec(rec, 0);
    return total;
}

// --- LRContext -------------------------------------------------------------------

std::size_t LRContext::PairHash::operator()(const std::pair<Partition, Partition>& p) const noexcept {
    PartitionHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
}

std::size_t LRContext::TripleHash::operator()(const std::tuple<Partition, Partition, Partition>& t) const noexcept {
    PartitionHash h;
    return (h(std::get<0>(t)) * 0x9e3779b97f4a7c15ULL ^ h(std::get<1>(t))) * 0xff51afd7ed558ccdULL ^ h(std::get<2>(t));
}

LRContext& LRContext::shared() {
    static LRContext ctx;
    return ctx;
}

LRContext::Shared LRContext::cached(std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash>& map,
                                    const std::pair<Partition, Partition>& key) const {
    std::shared_lock lock(mutex_);
    auto it = map.find(key);
    return it == map.end() ? nullptr : it->second;
}

void LRContext::store(std::unordered_map<std::pair<Partition, Partition>, Shared, PairHash>& map,
                      std::pair<Partition, Partition> key, const Shared& value) {
    std::unique_lock lock(mutex_);
    if (cached_terms_ + value->size() > max_cached_terms_) return;
    if (map.try_emplace(std::move(key), value).second) cached_terms_ += value->size();
}

std::size_t LRContext::cached_products() const {
    std::shared_lock lock(mutex_);
    return products_.size();
}

std::uint64_t LRContext::lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
    // c^λ_{μν} = c^λ_{νμ} = c^{λ'}_{μ'ν'}: cache under one representative.
    auto key = std::make_tuple(lambda, mu, nu);
    auto swapped = std::make_tuple(lambda, nu, mu);
    if (CanonicalOrder{}(std::get<1>(swapped), std::get<1>(key))) key = swapped;
    auto conj = std::make_tuple(conjugate(lambda), conjugate(std::get<1>(key)), conjugate(std::get<2>(key)));
    auto conj_swapped = std::make_tuple(std::get<0>(conj), std::get<2>(conj), std::get<1>(conj));
    if (CanonicalOrder{}(std::get<1>(conj_swapped), std::get<1>(conj))) conj = conj_swapped;
    if (CanonicalOrder{}(std::get<0>(conj), std::get<0>(key)) ||
        (std::get<0>(conj) == std::get<0>(key) && CanonicalOrder{}(std::get<1>(conj), std::get<1>(key)))) {
        key = conj;
    }
    {
        std::shared_lock lock(mutex_);
        auto it = coefficients_.find(key);
        if (it != coefficients_.end()) return it->second;
    }
    // Enumerate with the larger partition removed so the skew shape is small.
    const auto& [l, m, n] = key;
    std::uint64_t value = count_lr_fillings(l, m, n);
    std::unique_lock lock(mutex_);
    coefficients_.try_emplace(key, value);
    return value;
}

void LRContext::add_product(const Partition& a, const Partition& b, const Rational& coeff, TermAccumulator& out) {
    if (a.empty()) return out.add(b, coeff);
    if (b.empty()) return out.add(a, coeff);
    if (b.is_row()) return add_pieri_row(a, b.size(), coeff, out);
    if (a.is_row()) return add_pieri_row(b, a.size(), coeff, out);
    if (b.is_column()) return add_pieri_col(a, b.size(), coeff, out);
    if (a.is_column()) return add_pieri_col(b, a.size(), coeff, out);

    // The smaller partition is the content; its cells drive the enumeration depth.
    bool a_first = a.size() > b.size() || (a.size() == b.size() && CanonicalOrder{}(a, b));
    std::pair<Partition, Partition> key = a_first ? std::make_pair(a, b) : std::make_pair(b, a);
    Shared hit = cached(products_, key);
    if (!hit) {
        TermAccumulator acc;
        add_product_by_dominant_tableaux(key.first, key.second, 1, acc);
        hit = std::make_shared<const SymFunc>(std::move(acc).finish());
        store(products_, std::move(key), hit);
    }
    out.add(*hit, coeff);
}

SymFunc LRContext::product(const Partition& a, const Partition& b) {
    TermAccumulator acc;
    add_product(a, b, 1, acc);
    return std::move(acc).finish();
}

void LRContext::add_skew(const Partition& outer, const Partition& inner, const Rational& coeff, TermAccumulator& out) {
    if (!outer.contains(inner)) return;
    if (inner.empty()) return out.add(outer, coeff);
    if (inner.is_row()) return add_perp_row(outer, inner.size(), coeff, out);
    if (inner.is_column()) return add_perp_col(outer, inner.size(), coeff, out);
    std::pair<Partition, Partition> key(outer, inner);
    Shared hit = cached(skews_, key);
    if (!hit) {
        TermAccumulator acc;
        add_skew_by_lattice_fillings(outer, inner, 1, acc);
        hit = std::make_shared<const SymFunc>(std::move(acc).finish());
        store(skews_, std::move(key), hit);
    }
    out.add(*hit, coeff);
}

SymFunc LRContext::skew(const Partition& outer, const Partition& inner) {
    TermAccumulator acc;
    add_skew(outer, inner, 1, acc);
    return std::move(acc).finish();
}

SymFunc LRContext::schur_perp(const Partition& lambda, const SymFunc& f) {
    if (f.basis() != Basis::schur) return schur_perp(lambda, to_basis(f, Basis::schur));
    TermAccumulator acc;
    for (const auto& [mu, c] : f.terms()) add_skew(mu, lambda, c, acc);
    return std::move(acc).finish();
}

SymFunc LRContext::multiply(const SymFunc& f, const SymFunc& g, Exec exec) {
    const SymFunc fs = f.basis() == Basis::schur ? f : to_basis(f, Basis::schur);
    const SymFunc gs = g.basis() == Basis::schur ? g : to_basis(g, Basis::schur);
    return exec == Exec::parallel ? kernels::schur_product_parallel(*this, fs, gs)
                                  : kernels::schur_product_serial(*this, fs, gs);
}

SymFunc f_perp(const SymFunc& f, const SymFunc& g, LRContext& ctx) {
    const SymFunc fs = to_basis(f, Basis::schur);
    const SymFunc gs = to_basis(g, Basis::schur);
    TermAccumulator acc;
    for (const auto& [lambda, a] : fs.terms()) {
        for (const auto& [mu, b] : gs.terms()) ctx.add_skew(mu, lambda, a * b, acc);
    }
    return to_basis(std::move(acc).finish(), g.basis());
}

}  // namespace sperp
