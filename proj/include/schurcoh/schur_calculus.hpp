#pragma once

#include "schurcoh/numeric.hpp"
#include "schurcoh/partitions.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace schurcoh {

/// Irreducible decomposition: highest weight -> multiplicity (>= 1).
class Decomposition {
public:
    using Map = std::map<Weight, std::int64_t>;

    Decomposition() = default;
    explicit Decomposition(Map terms);

    void add(const Weight& w, std::int64_t mult);
    std::int64_t multiplicity(const Weight& w) const;
    bool contains(const Weight& w) const { return multiplicity(w) > 0; }

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Sum of mult * weyl_dim over all terms.
    BigInt dimension() const;

    /// Every weight raised by d.
    Decomposition shifted(int d) const;

    bool operator==(const Decomposition&) const = default;

private:
    Map terms_;
};

/// N^nu_{lambda,mu} for all nu with at most `rank` rows, by counting
/// Littlewood-Richardson fillings of nu/lambda with content mu. Inputs may
/// have negative entries (both are shifted to nonnegative internally); the
/// shorter weight is padded with zeros to `rank`.
Decomposition lr_coefficients(const Weight& lambda, const Weight& mu, int rank);

/// Pieri rule: lambda tensor Sym^m, i.e. all horizontal strips of size m.
Decomposition pieri(const Weight& lambda, int m, int rank);

/// Number of semistandard tableaux of shape lambda and content mu. Both
/// nonnegative; mu need not be dominant. Zero when |lambda| != |mu|.
std::int64_t kostka(const Weight& lambda, const Weight& content);

/// One irreducible summand Sigma_qweight Q (x) O(twist) of End(Sigma_lambda Q).
struct EndSummand {
    Weight q_weight;
    int twist = 0;
    std::int64_t multiplicity = 0;

    bool operator==(const EndSummand&) const = default;
};

/// LR decomposition of Sigma_(m,t,s,0) (x) Sigma_(m,m-s,m-t,0) with uniform
/// twist -m. Ordered by weight, descending lexicographically.
std::vector<EndSummand> end_decomposition(const CanonicalQPartition& c);

/// Drops cached LR and Kostka results (tests use this to time cold runs).
void clear_schur_caches();

} // namespace schurcoh
