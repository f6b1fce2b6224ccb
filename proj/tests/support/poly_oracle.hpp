#pragma once

// Brute-force symmetric polynomials in finitely many variables. Shares no code
// with the library beyond reading SymFunc terms, so it can referee basis
// changes, LR products and small plethysms.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "sperp/symfunc.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;

inline void add_to(Poly& p, const Exps& e, const mpq_class& c) {
    auto& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

inline Poly add(const Poly& a, const Poly& b, const mpq_class& scale_b = 1) {
    Poly out = a;
    for (const auto& [e, c] : b) add_to(out, e, c * scale_b);
    return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_to(out, e, ca * cb);
        }
    }
    return out;
}

inline Poly one(int n) { return {{Exps(static_cast<std::size_t>(n), 0), 1}}; }

/// All partitions of m as plain vectors, descending parts.
inline std::vector<std::vector<int>> partitions(int m, int max_part = -1) {
    if (max_part < 0) max_part = m;
    if (m == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = std::min(m, max_part); first >= 1; --first) {
        for (auto rest : partitions(m - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

/// Calls visit(filling) for every SSYT of `shape` over letters 0..letters−1,
/// with `filling` listing entries row by row.
inline void for_each_ssyt(const std::vector<int>& shape, int letters, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    }
    std::vector<std::vector<int>> grid;
    for (int len : shape) grid.emplace_back(static_cast<std::size_t>(len), -1);
    std::vector<int> filling(cells.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            visit(filling);
            return;
        }
        const auto [r, c] = cells[i];
        int lo = 0;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int x = lo; x < letters; ++x) {
            grid[r][c] = x;
            filling[i] = x;
            rec(i + 1);
        }
        grid[r][c] = -1;
    };
    rec(0);
}

inline Poly schur(const std::vector<int>& shape, int n) {
    Poly out;
    for_each_ssyt(shape, n, [&](const std::vector<int>& filling) {
        Exps e(static_cast<std::size_t>(n), 0);
        for (int x : filling) ++e[static_cast<std::size_t>(x)];
        add_to(out, e, 1);
    });
    return out;
}

inline Poly monomial(const std::vector<int>& shape, int n) {
    Poly out;
    if (static_cast<int>(shape.size()) > n) return out;
    Exps e(static_cast<std::size_t>(n), 0);
    std::copy(shape.begin(), shape.end(), e.begin());
    std::sort(e.begin(), e.end());
    do {
        out[e] = 1;
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline Poly power(const std::vector<int>& shape, int n) {
    Poly out = one(n);
    for (int k : shape) {
        Poly pk;
        for (int i = 0; i < n; ++i) {
            Exps e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = k;
            pk[e] = 1;
        }
        out = mul(out, pk);
    }
    return out;
}

inline Poly complete(const std::vector<int>& shape, int n) {
    Poly out = one(n);
    for (int k : shape) out = mul(out, schur({k}, n));
    return out;
}

inline Poly elementary(const std::vector<int>& shape, int n) {
    Poly out = one(n);
    for (int k : shape) out = mul(out, schur(std::vector<int>(static_cast<std::size_t>(k), 1), n));
    return out;
}

inline mpq_class to_mpq(const sperp::Rational& r) { return r.to_mpq(); }

/// f(x_1..x_n) for a library value in any basis.
inline Poly eval(const sperp::SymFunc& f, int n) {
    Poly out;
    for (const auto& [lambda, c] : f.terms()) {
        const auto& parts = lambda.parts();
        Poly term;
        switch (f.basis()) {
            case sperp::Basis::schur: term = schur(parts, n); break;
            case sperp::Basis::monomial: term = monomial(parts, n); break;
            case sperp::Basis::homogeneous: term = complete(parts, n); break;
            case sperp::Basis::elementary: term = elementary(parts, n); break;
            case sperp::Basis::powersum: term = power(parts, n); break;
        }
        out = add(out, term, to_mpq(c));
    }
    return out;
}

/// Schur expansion of a symmetric polynomial in n >= degree variables, by
/// repeatedly removing the lexicographically leading monomial.
inline std::map<std::vector<int>, mpq_class> schur_expand(Poly p, int n) {
    std::map<std::vector<int>, mpq_class> out;
    while (!p.empty()) {
        const auto lead = p.rbegin();
        std::vector<int> shape(lead->first.begin(), lead->first.end());
        if (!std::is_sorted(shape.rbegin(), shape.rend())) throw std::logic_error("schur_expand: not symmetric");
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        const mpq_class c = lead->second;
        out[shape] = c;
        p = add(p, schur(shape, n), -c);
    }
    return out;
}

/// The library value as a plain map, for comparing with schur_expand.
inline std::map<std::vector<int>, mpq_class> as_map(const sperp::SymFunc& f) {
    std::map<std::vector<int>, mpq_class> out;
    for (const auto& [lambda, c] : f.terms()) out[lambda.parts()] = to_mpq(c);
    return out;
}

/// s_λ[g](x_1..x_n) for g with non-negative integer monomial coefficients:
/// the monomials of g, repeated by coefficient, become the letters.
inline Poly schur_plethysm(const std::vector<int>& lambda, const Poly& g, int n) {
    std::vector<Exps> letters;
    for (const auto& [e, c] : g) {
        if (c < 0 || c.get_den() != 1) throw std::invalid_argument("schur_plethysm: g must be N-valued");
        for (long i = 0; i < c.get_num().get_si(); ++i) letters.push_back(e);
    }
    Poly out;
    for_each_ssyt(lambda, static_cast<int>(letters.size()), [&](const std::vector<int>& filling) {
        Exps e(static_cast<std::size_t>(n), 0);
        for (int x : filling) {
            for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] += letters[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
        }
        add_to(out, e, 1);
    });
    return out;
}

}  // namespace oracle
