#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sperp {

/// A cell (row, column) of a Young diagram, 1-based, English convention.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition stored as a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction; any other violation of the
/// weakly-decreasing-positive rule throws std::invalid_argument.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Sorts and drops zeros instead of validating. Negative parts still throw.
    static Partition from_unsorted(std::vector<int> parts);
    static Partition row(int n);
    static Partition column(int n);
    static Partition hook(int arm_plus_one, int leg);  // (a, 1^leg)

    const std::vector<int>& parts() const& noexcept { return parts_; }
    std::vector<int> parts() && noexcept { return std::move(parts_); }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// λ_i with 1-based i; zero beyond the length.
    int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool is_row() const noexcept { return parts_.size() <= 1; }
    bool is_column() const noexcept { return first() <= 1; }
    bool is_hook() const noexcept { return length() <= 1 || part(2) <= 1; }
    bool contains(const Cell& c) const noexcept { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }
    /// Diagram containment μ ⊆ λ.
    bool contains(const Partition& mu) const noexcept;

    std::string str() const;  // "[3,1]"

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Degree descending, then descending lexicographic: the canonical output order.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.parts() > b.parts();
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// --- enumeration -----------------------------------------------------------

/// All partitions of n, in canonical (descending lexicographic) order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n with at most `max_length` parts and parts at most `max_part`.
std::vector<Partition> partitions_of(int n, int max_length, int max_part);

// --- transforms and statistics ---------------------------------------------

Partition conjugate(const Partition& lambda);
/// λ with its first part removed.
Partition without_first(const Partition& lambda);
/// Componentwise sum, padding the shorter with zeros.
Partition add_componentwise(const Partition& a, const Partition& b);
/// Parts of both, merged and sorted.
Partition join(const Partition& a, const Partition& b);

/// Durfee size: largest i with (i,i) a cell.
int durfee(const Partition& lambda);
std::vector<Cell> corners(const Partition& lambda);
int corner_count(const Partition& lambda);

/// z_λ = Π i^{m_i} m_i!, the centralizer size; ⟨p_λ, p_λ⟩ = z_λ.
mpz_class z_lambda(const Partition& lambda);

// --- predicates used by the closed forms ------------------------------------

bool is_even(const Partition& lambda);
bool is_threshold(const Partition& lambda);

/// Opposite cell: (t+1, s) if s <= t, otherwise (t, s-1).
Cell opposite_cell(int s, int t);

/// ν ↦ (ν₁+ν₂, ν₃+ν₄, …)′ after padding ν to even length with a zero.
Partition w_involution(const Partition& nu);

/// All columns even except exactly two columns of distinct odd length.
/// Throws std::invalid_argument when |λ| is odd.
bool in_P2h(const Partition& lambda);
/// Near-threshold partitions indexing the multiplicity-one part of s_{(2,1^{h-2})}[s_{1^2}].
/// Throws std::invalid_argument when |λ| is odd.
bool in_T2h(const Partition& lambda);

}  // namespace sperp

template <>
struct std::hash<sperp::Partition> : sperp::PartitionHash {};
