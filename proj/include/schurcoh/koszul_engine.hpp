#pragma once

#include "schurcoh/numeric.hpp"
#include "schurcoh/partitions.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schurcoh {

inline constexpr int kMaxDegree = 4; // dim X

/// Sigma_q Q (x) O(twist) up to the identity Sigma_{l+c|m+c} = Sigma_{l|m}:
/// representatives have q_weight[3] == 0.
struct SummandKey {
    Weight q_weight;
    int twist = 0;

    auto operator<=>(const SummandKey&) const = default;
    bool operator==(const SummandKey&) const = default;
};

SummandKey normalize_summand(const Weight& q_weight, int twist);

struct KoszulFactor {
    Weight u_weight;
    std::int64_t multiplicity = 0;
};

/// The Koszul resolution of Sigma_q Q (x) O(twist) restricted to X: term p is
/// Sigma_q Q~ (x) wedge^p(wedge^3 U~) (x) O(twist), whose irreducible factors
/// are Sigma_{q | mu - twist} for mu in column p of the Koszul factor table.
struct TwistedComplex {
    Weight q_weight;
    int twist = 0;
    std::array<std::vector<KoszulFactor>, 21> terms;
};

/// `twist` is the power of O(1); O(-d) means twist = -d.
TwistedComplex build_complex(const Weight& q_weight, int twist);

struct GridPos {
    int p = 0;
    int q = 0;

    auto operator<=>(const GridPos&) const = default;
    bool operator==(const GridPos&) const = default;
};

struct E1Constituent {
    Weight gl10_weight;
    std::int64_t multiplicity = 0;
};

/// Nonzero H^q of term p.
struct E1Entry {
    GridPos pos;
    BigInt dim;
    std::vector<E1Constituent> constituents;

    /// Degree of H^n(X, E) this entry contributes to.
    int total_degree() const { return pos.q - pos.p; }
};

struct E1Page {
    std::map<GridPos, E1Entry> entries;

    const E1Entry* find(GridPos pos) const;
    /// sum over entries of (-1)^(q-p) dim
    BigInt euler_characteristic() const;
};

E1Page e1_page(const TwistedComplex& complex);

/// Externally asserted rank of the differential source -> target, which must
/// be a legal d_r position: r = source.p - target.p > 0 and
/// target.q = source.q - r + 1.
struct RankOverride {
    Weight q_weight;
    int twist = 0;
    GridPos source;
    GridPos target;
    BigInt rank;
    std::string note;

    int page() const { return source.p - target.p; }
    /// Throws std::invalid_argument for an illegal position or negative rank.
    void validate() const;
    bool applies_to(const SummandKey& key) const;
};

/// An override contradicting the page it is applied to.
class InconsistentOverride : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [lo, hi]; exact when lo == hi.
struct DegreeValue {
    BigInt lo = 0;
    BigInt hi = 0;

    static DegreeValue exact(BigInt v) { return DegreeValue{v, v}; }
    bool is_exact() const { return lo == hi; }

    DegreeValue& operator+=(const DegreeValue& o)
    {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    DegreeValue scaled(std::int64_t k) const
    {
        return DegreeValue{lo * BigInt(static_cast<long>(k)), hi * BigInt(static_cast<long>(k))};
    }
    bool operator==(const DegreeValue&) const = default;
};

/// A potential differential between two live entries with no known rank.
struct Conflict {
    int page = 0;
    GridPos source;
    GridPos target;
    BigInt source_dim;
    BigInt target_dim;
};

struct ChaseResult {
    std::array<DegreeValue, kMaxDegree + 1> degrees;
    std::vector<Conflict> conflicts;
    /// Euler characteristic of the E1 page (fixed by the data).
    BigInt euler;

    bool is_exact() const;
};

/// Runs the spectral sequence of the resolution page by page. A differential
/// d_r goes (p,q) -> (p-r, q-r+1); an override fixes its rank, an endpoint
/// of dimension zero makes it vanish, and anything else is a conflict whose
/// rank is relaxed to [0, min(dims)]. `overrides` must already be restricted
/// to this summand. Throws InconsistentOverride when an override rank exceeds
/// the live dimensions or refers to an entry that does not exist.
ChaseResult chase(const E1Page& page, std::span<const RankOverride> overrides);

/// Overrides whose (q_weight, twist) normalizes to `key`.
std::vector<RankOverride> overrides_for(std::span<const RankOverride> all, const SummandKey& key);

/// The summand of E^vee. With trivial canonical bundle H^n(E^vee) is dual to
/// H^(4-n)(E).
SummandKey serre_dual_summand(const SummandKey& key);

/// The same map seen on the dual summand. Term p of the resolution of E
/// dualizes to term 20-p of the resolution of E^vee, so
/// (p,q) -> (p-r,q-r+1) becomes (20-p+r, 23-q+r) -> (20-p, 24-q), same rank.
RankOverride serre_dual_override(const RankOverride& o);

/// Adds the dual of every override that is missing from the set. Throws
/// InconsistentOverride if a dual is present with a different rank.
std::vector<RankOverride> close_under_duality(std::vector<RankOverride> overrides);

/// build_complex + e1_page + chase for one summand.
ChaseResult cohomology(const Weight& q_weight, int twist, std::span<const RankOverride> all_overrides);

// --- override files ---

std::vector<RankOverride> overrides_from_json(const nlohmann::json& j);
nlohmann::json overrides_to_json(std::span<const RankOverride> overrides);

/// Known preset names ("none", "paper-4.2").
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
/// Closed under duality. Throws std::invalid_argument for an unknown name.
std::vector<RankOverride> preset_overrides(const std::string& name);

/// Preset name, or else a path to a JSON override file; closed under duality.
std::vector<RankOverride> load_overrides(const std::string& preset_or_path);

} // namespace schurcoh
