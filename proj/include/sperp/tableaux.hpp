#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sperp/partition.hpp"
#include "sperp/symfunc.hpp"

namespace sperp {

/// Semistandard Young tableau, rows listed top to bottom (English convention).
class SSYT {
public:
    SSYT() = default;
    /// Validates row weakness and column strictness; throws std::invalid_argument.
    explicit SSYT(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    Partition shape() const;
    int size() const;
    /// weight[i] = multiplicity of letter i+1, for letters 1..max_letter.
    std::vector<int> weight(int max_letter) const;
    int max_letter() const;
    /// Number of cells labelled `letter` in row `row` (1-based).
    int count_in_row(int row, int letter) const;
    /// The tableau with its first column removed.
    SSYT without_first_column() const;

    std::string str() const;  // "[[1,1,2],[3]]"
    friend bool operator==(const SSYT&, const SSYT&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// All SSYT of the given shape over the alphabet {1..max_letter}.
std::vector<SSYT> enumerate_ssyt(const Partition& shape, int max_letter);
/// SSYT of the given shape and content.
std::vector<SSYT> enumerate_ssyt_with_content(const Partition& shape, const std::vector<int>& content);
/// All SSYT with k 1s, k 2s and k 3s.
std::vector<SSYT> enumerate_weight_kkk(int k);

/// The four standard tableaux of size 3.
enum class TypeLabel {
    row,       // [1 2 3]
    hook_12_3, // [1 2 / 3]
    hook_13_2, // [1 3 / 2]
    column,    // [1 / 2 / 3]
};
inline constexpr std::array<TypeLabel, 4> kAllTypes{TypeLabel::row, TypeLabel::hook_12_3, TypeLabel::hook_13_2,
                                                    TypeLabel::column};

std::string type_name(TypeLabel t);
/// Shape of the standard tableau: (3), (2,1), (2,1), (1,1,1).
Partition type_shape(TypeLabel t);
/// Standard-tableau transpose: row ↔ column, [12/3] ↔ [13/2].
TypeLabel transpose(TypeLabel t);
SSYT type_tableau(TypeLabel t);

/// Type classification of SSYT of weight (k,k,k). Throws std::invalid_argument otherwise.
TypeLabel type_of(const SSYT& s);

/// Σ_{S ∈ Tab_{T,k}} s_{shape(S)}.
SymFunc tab_sum(TypeLabel t, int k);
/// Multiplicity of each shape in Tab_{T,k}.
std::map<Partition, int, CanonicalOrder> tab_shape_counts(TypeLabel t, int k);

}  // namespace sperp
