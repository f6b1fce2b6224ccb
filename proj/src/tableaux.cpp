#include "sperp/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sperp {

SSYT::SSYT(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty() || (r > 0 && row.size() > rows_[r - 1].size()))
            throw std::invalid_argument("SSYT rows must have weakly decreasing nonzero lengths");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw std::invalid_argument("SSYT letters must be positive");
            if (c > 0 && row[c - 1] > row[c]) throw std::invalid_argument("SSYT rows must weakly increase");
            if (r > 0 && rows_[r - 1][c] >= row[c]) throw std::invalid_argument("SSYT columns must strictly increase");
        }
    }
}

Partition SSYT::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int SSYT::size() const { return shape().size(); }

std::vector<int> SSYT::weight(int max_letter) const {
    std::vector<int> w(static_cast<std::size_t>(std::max(max_letter, 0)), 0);
    for (const auto& row : rows_) {
        for (int x : row) {
            if (x <= max_letter) ++w[static_cast<std::size_t>(x - 1)];
        }
    }
    return w;
}

int SSYT::max_letter() const {
    int m = 0;
    for (const auto& row : rows_) {
        if (!row.empty()) m = std::max(m, row.back());
    }
    return m;
}

int SSYT::count_in_row(int row, int letter) const {
    if (row < 1 || row > static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    return static_cast<int>(std::count(r.begin(), r.end(), letter));
}

SSYT SSYT::without_first_column() const {
    std::vector<std::vector<int>> rows;
    for (const auto& row : rows_) rows.emplace_back(row.begin() + 1, row.end());
    return SSYT(std::move(rows));
}

std::string SSYT::str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(rows_[r][c]);
        }
        out += ']';
    }
    return out + "]";
}

namespace {

// Fills the shape cell by cell in row-major order. `remaining` bounds the
// supply of each letter when non-empty.
void fill(const Partition& shape, int max_letter, std::vector<int> remaining, std::vector<SSYT>& out) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<Cell> cells;
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) cells.push_back({r, c});
    }
    const bool bounded = !remaining.empty();
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.emplace_back(rows);
            return;
        }
        const auto [r, c] = cells[idx];
        auto& slot = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        int lo = 1;
        if (c > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)]);
        if (r > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
        for (int x = lo; x <= max_letter; ++x) {
            if (bounded && remaining[static_cast<std::size_t>(x - 1)] == 0) continue;
            if (bounded) --remaining[static_cast<std::size_t>(x - 1)];
            slot = x;
            self(self, idx + 1);
            if (bounded) ++remaining[static_cast<std::size_t>(x - 1)];
        }
        slot = 0;
    };
    rec(rec, 0);
}

}  // namespace

std::vector<SSYT> enumerate_ssyt(const Partition& shape, int max_letter) {
    if (max_letter < 1) throw std::invalid_argument("enumerate_ssyt: max_letter must be positive");
    std::vector<SSYT> out;
    if (shape.length() > max_letter) return out;
    fill(shape, max_letter, {}, out);
    return out;
}

std::vector<SSYT> enumerate_ssyt_with_content(const Partition& shape, const std::vector<int>& content) {
    std::vector<SSYT> out;
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("content entries must be non-negative");
        total += c;
    }
    if (total != shape.size() || shape.length() > static_cast<int>(content.size())) return out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    fill(shape, static_cast<int>(content.size()), content, out);
    return out;
}

std::vector<SSYT> enumerate_weight_kkk(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_weight_kkk: k must be positive");
    std::vector<SSYT> out;
    for (const auto& shape : partitions_of(3 * k, 3, 3 * k)) {
        auto part = enumerate_ssyt_with_content(shape, {k, k, k});
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::string type_name(TypeLabel t) {
    switch (t) {
        case TypeLabel::row: return "123";
        case TypeLabel::hook_12_3: return "12/3";
        case TypeLabel::hook_13_2: return "13/2";
        case TypeLabel::column: return "1/2/3";
    }
    return "?";
}

Partition type_shape(TypeLabel t) {
    switch (t) {
        case TypeLabel::row: return {3};
        case TypeLabel::hook_12_3:
        case TypeLabel::hook_13_2: return {2, 1};
        case TypeLabel::column: return {1, 1, 1};
    }
    return {};
}

TypeLabel transpose(TypeLabel t) {
    switch (t) {
        case TypeLabel::row: return TypeLabel::column;
        case TypeLabel::column: return TypeLabel::row;
        case TypeLabel::hook_12_3: return TypeLabel::hook_13_2;
        case TypeLabel::hook_13_2: return TypeLabel::hook_12_3;
    }
    return t;
}

SSYT type_tableau(TypeLabel t) {
    switch (t) {
        case TypeLabel::row: return SSYT({{1, 2, 3}});
        case TypeLabel::hook_12_3: return SSYT({{1, 2}, {3}});
        case TypeLabel::hook_13_2: return SSYT({{1, 3}, {2}});
        case TypeLabel::column: return SSYT({{1}, {2}, {3}});
    }
    return {};
}

TypeLabel type_of(const SSYT& s) {
    const auto w = s.weight(std::max(3, s.max_letter()));
    const int k = w[0];
    if (k < 1 || s.max_letter() > 3 || w[1] != k || w[2] != k)
        throw std::invalid_argument("type_of: tableau must have weight (k,k,k), got " + s.str());

    if (k == 1) {
        for (TypeLabel t : kAllTypes) {
            if (type_tableau(t) == s) return t;
        }
    }
    const auto rows = s.rows().size();
    if (rows <= 2) {
        const int n2 = s.count_in_row(2, 2);
        const int n3 = s.count_in_row(2, 3);
        const bool even = n2 % 2 == 0;
        // Test N₃ = 2N₂+1 before N₃ ≥ 2N₂.
        const bool hook = n3 == 2 * n2 + 1 || n3 < 2 * n2;
        if (hook) return even ? TypeLabel::hook_12_3 : TypeLabel::hook_13_2;
        return even ? TypeLabel::row : TypeLabel::column;
    }
    // Three rows: the first column is necessarily 1/2/3.
    const auto& r = s.rows();
    if (r[0][0] != 1 || r[1][0] != 2 || r[2][0] != 3)
        throw std::logic_error("type_of: first column of a three-row tableau must be 1/2/3");
    return transpose(type_of(s.without_first_column()));
}

std::map<Partition, int, CanonicalOrder> tab_shape_counts(TypeLabel t, int k) {
    std::map<Partition, int, CanonicalOrder> counts;
    for (const auto& s : enumerate_weight_kkk(k)) {
        if (type_of(s) == t) ++counts[s.shape()];
    }
    return counts;
}

SymFunc tab_sum(TypeLabel t, int k) {
    std::vector<SymFunc::Term> terms;
    for (const auto& [shape, n] : tab_shape_counts(t, k)) terms.emplace_back(shape, n);
    return SymFunc::from_terms(Basis::schur, std::move(terms));
}

}  // namespace sperp
