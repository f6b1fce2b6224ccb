#include "sperp/kernels.hpp"

#include <map>

#include "sperp/transition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sperp::kernels {
namespace {

int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

TermAccumulator merge_all(std::vector<TermAccumulator>& locals) {
    TermAccumulator out;
    for (auto& local : locals) out.merge(std::move(local));
    return out;
}

// Trie over power-sum indices written with parts in decreasing order.
struct PrefixNode {
    Rational coeff;
    std::map<int, PrefixNode, std::greater<>> children;
};

PrefixNode build_trie(const SymFunc& f) {
    PrefixNode root;
    for (const auto& [rho, c] : f.terms()) {
        PrefixNode* node = &root;
        for (int part : rho.parts()) node = &node->children[part];
        node->coeff += c;
    }
    return root;
}

void walk(const PrefixNode& node, const SymFunc& prefix, TermAccumulator& out) {
    if (!node.coeff.is_zero()) out.add(prefix, node.coeff);
    for (const auto& [k, child] : node.children) walk(child, transition::powersum_times(k, prefix), out);
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

SymFunc schur_product_serial(LRContext& ctx, const SymFunc& f, const SymFunc& g) {
    TermAccumulator acc;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) ctx.add_product(a, b, ca * cb, acc);
    }
    return std::move(acc).finish();
}

SymFunc schur_product_parallel(LRContext& ctx, const SymFunc& f, const SymFunc& g) {
    const auto fterms = f.terms();
    const auto gterms = g.terms();
    std::vector<TermAccumulator> locals(static_cast<std::size_t>(max_threads()));
    const long n = static_cast<long>(fterms.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        auto& acc = locals[static_cast<std::size_t>(thread_id())];
        const auto& [a, ca] = fterms[static_cast<std::size_t>(i)];
        for (const auto& [b, cb] : gterms) ctx.add_product(a, b, ca * cb, acc);
    }
    return merge_all(locals).finish();
}

SymFunc powersum_to_schur_serial(const SymFunc& f) {
    PrefixNode root = build_trie(f);
    TermAccumulator acc;
    walk(root, SymFunc::one(), acc);
    return std::move(acc).finish();
}

SymFunc powersum_to_schur_parallel(const SymFunc& f) {
    PrefixNode root = build_trie(f);
    TermAccumulator shallow;
    struct Task {
        const PrefixNode* node;
        SymFunc prefix;
    };
    std::vector<Task> tasks;
    const SymFunc one = SymFunc::one();
    if (!root.coeff.is_zero()) shallow.add(one, root.coeff);
    for (const auto& [k1, n1] : root.children) {
        SymFunc e1 = transition::powersum_times(k1, one);
        if (!n1.coeff.is_zero()) shallow.add(e1, n1.coeff);
        for (const auto& [k2, n2] : n1.children) tasks.push_back({&n2, transition::powersum_times(k2, e1)});
    }
    std::vector<TermAccumulator> locals(static_cast<std::size_t>(max_threads()));
    const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        const auto& task = tasks[static_cast<std::size_t>(i)];
        walk(*task.node, task.prefix, locals[static_cast<std::size_t>(thread_id())]);
    }
    TermAccumulator out = merge_all(locals);
    out.merge(std::move(shallow));
    return std::move(out).finish();
}

}  // namespace sperp::kernels
