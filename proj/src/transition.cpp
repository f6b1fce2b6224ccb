#include "sperp/transition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sperp::transition {
namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
        PartitionHash h;
        return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
    }
};

template <class Key, class Value, class Hash>
class LockedCache {
public:
    template <class Make>
    const Value& get(const Key& key, Make&& make) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(make());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Key, std::unique_ptr<Value>, Hash> map_;
};

// Remove a horizontal strip of size r from λ, calling emit(ν) for every ν.
template <class Emit>
void remove_horizontal_strip(const Partition& lambda, int r, Emit&& emit) {
    const int len = lambda.length();
    std::vector<int> nu(lambda.parts());
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row > len) {
            if (remaining == 0) emit(Partition(nu));
            return;
        }
        int lo = lambda.part(row + 1);
        int hi = lambda.part(row);
        for (int v = hi; v >= lo; --v) {
            int taken = hi - v;
            if (taken > remaining) break;
            nu[static_cast<std::size_t>(row - 1)] = v;
            self(self, row + 1, remaining - taken);
        }
        nu[static_cast<std::size_t>(row - 1)] = hi;
    };
    rec(rec, 1, r);
}

}  // namespace

void add_ribbons(const Partition& lambda, int k, const Rational& coeff, TermAccumulator& out) {
    const int n_beads = lambda.length() + k;
    // Beta numbers β_i = λ_i + n_beads − i, strictly decreasing.
    std::vector<int> beta(static_cast<std::size_t>(n_beads));
    int top = 0;
    for (int i = 1; i <= n_beads; ++i) {
        beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) + n_beads - i;
        top = std::max(top, beta[static_cast<std::size_t>(i - 1)]);
    }
    std::vector<char> occupied(static_cast<std::size_t>(top + k + 1), 0);
    for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;

    std::vector<int> moved(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int from = beta[i];
        int to = from + k;
        if (occupied[static_cast<std::size_t>(to)]) continue;
        int between = 0;
        for (int pos = from + 1; pos < to; ++pos) between += occupied[static_cast<std::size_t>(pos)];
        moved = beta;
        moved[i] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(moved.size());
        for (int j = 1; j <= n_beads; ++j) parts[static_cast<std::size_t>(j - 1)] = moved[static_cast<std::size_t>(j - 1)] - (n_beads - j);
        out.add(Partition(std::move(parts)), between % 2 == 0 ? coeff : -coeff);
    }
}

SymFunc powersum_times(int k, const SymFunc& f) {
    TermAccumulator acc(Basis::schur);
    for (const auto& [lambda, c] : f.terms()) add_ribbons(lambda, k, c, acc);
    return std::move(acc).finish();
}

const SymFunc& powersum_in_schur(const Partition& rho) {
    static LockedCache<Partition, SymFunc, PartitionHash> cache;
    return cache.get(rho, [&] {
        if (rho.empty()) return SymFunc::one();
        // p_ρ = p_{ρ_last} · p_{ρ without its last part}
        std::vector<int> rest(rho.parts().begin(), rho.parts().end() - 1);
        return powersum_times(rho.parts().back(), powersum_in_schur(Partition(std::move(rest))));
    });
}

Rational character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) return 0;
    return powersum_in_schur(rho).coefficient(lambda);
}

Rational kostka(const Partition& lambda, const Partition& mu) {
    static LockedCache<std::pair<Partition, Partition>, Rational, PairHash> cache;
    if (lambda.size() != mu.size()) return 0;
    if (mu.empty()) return 1;
    return cache.get({lambda, mu}, [&] {
        // The largest letter fills a horizontal strip of size μ_last.
        std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
        Partition shorter(std::move(rest));
        Rational total = 0;
        remove_horizontal_strip(lambda, mu.parts().back(), [&](const Partition& nu) {
            if (nu.length() <= shorter.length()) total += kostka(nu, shorter);
        });
        return total;
    });
}

SymFunc schur_in_monomial(const Partition& lambda) {
    std::vector<SymFunc::Term> terms;
    for (const auto& mu : partitions_of(lambda.size())) {
        Rational k = kostka(lambda, mu);
        if (!k.is_zero()) terms.emplace_back(mu, k);
    }
    return SymFunc::from_terms(Basis::monomial, std::move(terms));
}

SymFunc schur_in_powersum(const Partition& lambda) {
    std::vector<SymFunc::Term> terms;
    for (const auto& rho : partitions_of(lambda.size())) {
        Rational chi = character(lambda, rho);
        if (!chi.is_zero()) terms.emplace_back(rho, chi / Rational(z_lambda(rho)));
    }
    return SymFunc::from_terms(Basis::powersum, std::move(terms));
}

SymFunc homogeneous_in_schur(const Partition& mu) {
    std::vector<SymFunc::Term> terms;
    for (const auto& lambda : partitions_of(mu.size())) {
        Rational k = kostka(lambda, mu);
        if (!k.is_zero()) terms.emplace_back(lambda, k);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

SymFunc elementary_in_schur(const Partition& mu) {
    std::vector<SymFunc::Term> terms;
    for (const auto& lambda : partitions_of(mu.size())) {
        Rational k = kostka(conjugate(lambda), mu);
        if (!k.is_zero()) terms.emplace_back(lambda, k);
    }
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

}  // namespace sperp::transition
