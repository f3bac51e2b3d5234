#pragma once

#include "schurcoh/schur_calculus.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace schurcoh {

inline constexpr int kWedgeRank = 6;      // GL(6), the tautological side
inline constexpr int kWedgeDegree = 3;    // wedge^3
inline constexpr int kKoszulLength = 20;  // C(6,3)

/// Weight -> multiplicity in the character of wedge^p(wedge^3 C^6).
using WeightMultiplicityMap = std::map<Weight, std::int64_t>;

/// The 20 weights of wedge^3 C^6 (0/1 indicator vectors of 3-subsets of
/// {1..6}) in lexicographic subset order, starting with (1,1,1,0,0,0).
std::vector<Weight> wedge3_weights();

/// Character of wedge^p(wedge^3 C^6). With dominant_only, only weights that
/// are weakly decreasing are kept (one representative per Weyl orbit).
WeightMultiplicityMap wedge_power_weights(int p, bool dominant_only = true, int jobs = 1);

/// Greedy decomposition of a character given on its dominant weights: peel off
/// the lexicographically largest weight and subtract its Kostka row.
/// Throws std::logic_error if a residual multiplicity goes negative.
Decomposition decompose_dominant_character(const WeightMultiplicityMap& dominant);

/// Irreducible GL(6) decomposition of wedge^p(wedge^3 C^6), 0 <= p <= 20.
Decomposition decompose_wedge_power(int p, int jobs = 1);

/// Columns p = 0..20 of the Koszul complex of the Debarre-Voisin fourfold.
struct KoszulFactorTable {
    std::array<Decomposition, kKoszulLength + 1> columns;

    const Decomposition& column(int p) const { return columns.at(static_cast<std::size_t>(p)); }
};

/// All 21 columns computed directly from the character.
KoszulFactorTable compute_koszul_factor_table(int jobs = 1);

/// Process-wide table, computed on first use.
const KoszulFactorTable& koszul_factor_table();

/// Column 10+k predicted from column 10-k: every weight raised by k.
Decomposition shifted_column(const KoszulFactorTable& table, int k);

} // namespace schurcoh
