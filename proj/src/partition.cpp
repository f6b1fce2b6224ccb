#include "sperp/partition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sperp {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            std::ostringstream os;
            os << "not a partition: [";
            for (std::size_t j = 0; j < parts_.size(); ++j) os << (j ? "," : "") << parts_[j];
            os << "]";
            throw std::invalid_argument(os.str());
        }
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative part in partition");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition{n}; }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::hook(int arm_plus_one, int leg) {
    std::vector<int> parts;
    if (arm_plus_one > 0) parts.push_back(arm_plus_one);
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const noexcept {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(i) > part(i)) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, max_part, max_length, cur, out);
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
    for (int part : lambda.parts()) {
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(out));
}

Partition without_first(const Partition& lambda) {
    if (lambda.empty()) return lambda;
    return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

Partition add_componentwise(const Partition& a, const Partition& b) {
    std::vector<int> out(static_cast<std::size_t>(std::max(a.length(), b.length())), 0);
    for (int i = 1; i <= static_cast<int>(out.size()); ++i) out[static_cast<std::size_t>(i - 1)] = a.part(i) + b.part(i);
    return Partition(std::move(out));
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> out(a.parts());
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(out));
}

int durfee(const Partition& lambda) {
    int d = 0;
    while (lambda.part(d + 1) >= d + 1) ++d;
    return d;
}

std::vector<Cell> corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (int r = 1; r <= lambda.length(); ++r) {
        if (lambda.part(r + 1) < lambda.part(r)) out.push_back({r, lambda.part(r)});
    }
    return out;
}

int corner_count(const Partition& lambda) { return static_cast<int>(corners(lambda).size()); }

mpz_class z_lambda(const Partition& lambda) {
    mpz_class z = 1;
    const auto& p = lambda.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        unsigned long m = j - i;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
        z *= f * pw;
        i = j;
    }
    return z;
}

bool is_even(const Partition& lambda) {
    for (int c : conjugate(lambda).parts()) {
        if (c % 2 != 0) return false;
    }
    return true;
}

bool is_threshold(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    int d = durfee(lambda);
    for (int i = 1; i <= d; ++i) {
        if (conj.part(i) != lambda.part(i) + 1) return false;
    }
    return true;
}

Cell opposite_cell(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("opposite_cell: indices must be positive");
    return s <= t ? Cell{t + 1, s} : Cell{t, s - 1};
}

Partition w_involution(const Partition& nu) {
    std::vector<int> padded = nu.parts();
    if (padded.size() % 2 != 0) padded.push_back(0);
    std::vector<int> paired;
    for (std::size_t i = 0; i < padded.size(); i += 2) paired.push_back(padded[i] + padded[i + 1]);
    return conjugate(Partition(std::move(paired)));
}

bool in_P2h(const Partition& lambda) {
    if (lambda.size() % 2 != 0) throw std::invalid_argument("in_P2h: |lambda| must be even");
    std::vector<int> odd;
    for (int c : conjugate(lambda).parts()) {
        if (c % 2 != 0) odd.push_back(c);
    }
    return odd.size() == 2 && odd[0] != odd[1];
}

bool in_T2h(const Partition& lambda) {
    if (lambda.size() % 2 != 0) throw std::invalid_argument("in_T2h: |lambda| must be even");
    Partition conj = conjugate(lambda);
    int d = durfee(lambda);
    std::vector<int> exceptions;
    for (int i = 1; i <= d; ++i) {
        if (conj.part(i) != lambda.part(i) + 1) exceptions.push_back(i);
    }
    if (exceptions.size() == 1) {
        int i = exceptions[0];
        return conj.part(i) == lambda.part(i) + 3;
    }
    if (exceptions.size() == 2) {
        for (int i : exceptions) {
            // (λ'_i, i) is a corner iff row λ'_i has length exactly i.
            bool corner_case = conj.part(i) == lambda.part(i) + 2 && lambda.part(conj.part(i)) == i;
            bool equal_case = conj.part(i) == lambda.part(i);
            if (!corner_case && !equal_case) return false;
        }
        return true;
    }
    return false;
}

}  // namespace sperp
