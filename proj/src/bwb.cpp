#include "schurcoh/bwb.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace schurcoh {

BwbResult bott(const Weight& lambda, const Weight& mu)
{
    if (lambda.size() != kQuotientRank || mu.size() != kTautologicalRank)
        throw std::invalid_argument("bott: expected weights of length 4 and 6, got " + lambda.str() + " | " +
                                    mu.str());
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw std::invalid_argument("bott: non-dominant input " + lambda.str() + " | " + mu.str());

    std::vector<int> w;
    w.reserve(kAmbientDim);
    w.insert(w.end(), lambda.vec().begin(), lambda.vec().end());
    w.insert(w.end(), mu.vec().begin(), mu.vec().end());
    for (int i = 0; i < kAmbientDim; ++i)
        w[static_cast<std::size_t>(i)] += kAmbientDim - 1 - i;

    int inversions = 0;
    for (int i = 0; i < kAmbientDim; ++i)
        for (int j = i + 1; j < kAmbientDim; ++j) {
            if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j)])
                return std::nullopt;
            if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(j)])
                ++inversions;
        }

    std::sort(w.begin(), w.end(), std::greater<>());
    for (int i = 0; i < kAmbientDim; ++i)
        w[static_cast<std::size_t>(i)] -= kAmbientDim - 1 - i;
    Weight nu(std::move(w));
    BigInt dim = weyl_dim(nu);
    return BwbCohomology{inversions, std::move(nu), std::move(dim)};
}

std::pair<Weight, Weight> serre_dual_pair(const Weight& lambda, const Weight& mu)
{
    return {dual(lambda), dual(mu).shifted(kAmbientDim)};
}

} // namespace schurcoh
