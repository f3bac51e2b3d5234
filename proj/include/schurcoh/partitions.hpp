#pragma once

#include "schurcoh/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schurcoh {

/// Integer weight of GL(n). Entries may be negative. Most operations require
/// the weight to be dominant (weakly decreasing); that is checked where it
/// matters rather than at construction, since Kostka content vectors and
/// Borel-Weil-Bott shifted vectors are weights that are not dominant.
class Weight {
public:
    Weight() = default;
    Weight(std::initializer_list<int> entries) : entries_(entries) {}
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries)) {}

    /// Throws std::invalid_argument unless the entries are weakly decreasing.
    static Weight dominant(std::vector<int> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& vec() const { return entries_; }

    bool is_dominant() const;
    bool is_nonnegative() const;
    long total() const;
    int min_entry() const;

    /// lambda + d, entrywise.
    Weight shifted(int d) const;

    /// "3,2,1,0"
    std::string str() const;

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    std::vector<int> entries_;
};

/// Parses "3,2,1,0" (whitespace tolerated). Throws std::invalid_argument on
/// malformed input. Dominance is not checked here.
Weight parse_weight(std::string_view text);

/// The triple (m,t,s) of a rank-4 weight (m,t,s,0) with m >= t+s.
///
/// The input weight is recovered as (dualized ? dual(weight()) : weight())
/// shifted by -twist; End of either bundle is the same.
struct CanonicalQPartition {
    int m = 0;
    int t = 0;
    int s = 0;
    int twist = 0;
    bool dualized = false;

    Weight weight() const { return Weight{m, t, s, 0}; }
    /// (m, m-s, m-t, 0): the dual partition shifted back to nonnegative.
    Weight dual_weight() const { return Weight{m, m - s, m - t, 0}; }

    bool operator==(const CanonicalQPartition&) const = default;
};

/// Normalizes a dominant length-4 weight to (m,t,s,0) with m >= t+s.
/// Throws std::invalid_argument for non-dominant input or wrong length.
CanonicalQPartition canonicalize(const Weight& lambda);

/// (-l_n, ..., -l_1)
Weight dual(const Weight& lambda);

/// dual(lambda) shifted so its last entry is zero.
Weight shifted_dual(const Weight& lambda);

/// Weyl dimension of the irreducible GL(n) representation with highest
/// weight lambda, n = lambda.size(). Throws std::invalid_argument if lambda is
/// not dominant.
BigInt weyl_dim(const Weight& lambda);

/// Binomial coefficient as an exact integer; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

} // namespace schurcoh
