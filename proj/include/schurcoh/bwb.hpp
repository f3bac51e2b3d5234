#pragma once

#include "schurcoh/numeric.hpp"
#include "schurcoh/partitions.hpp"

#include <optional>

namespace schurcoh {

inline constexpr int kQuotientRank = 4;
inline constexpr int kTautologicalRank = 6;
inline constexpr int kAmbientDim = kQuotientRank + kTautologicalRank;   // GL(10)
inline constexpr int kGrassmannianDim = kQuotientRank * kTautologicalRank; // 24

/// The single nonzero cohomology group of an irreducible homogeneous bundle on
/// Gr(6,10), or nothing when the bundle is acyclic.
struct BwbCohomology {
    int degree = 0;
    Weight gl10_weight;
    BigInt dim;

    bool operator==(const BwbCohomology&) const = default;
};

using BwbResult = std::optional<BwbCohomology>;

/// Cohomology of Sigma_lambda Q (x) Sigma_mu U on Gr(6,10), lambda of length 4
/// and mu of length 6, both dominant. A twist O(-d) is encoded as mu + d.
///
/// The vector (lambda | mu) + (9,8,...,0) is acyclic if it has a repeated
/// entry; otherwise the degree is its inversion count and the GL(10) weight
/// is its decreasing sort minus (9,...,0).
BwbResult bott(const Weight& lambda, const Weight& mu);

/// Dual bundle twisted by the canonical bundle O(-10): the Serre-dual
/// partner of (lambda | mu).
std::pair<Weight, Weight> serre_dual_pair(const Weight& lambda, const Weight& mu);

} // namespace schurcoh
