#include "schurcoh/plethysm.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace schurcoh {

std::vector<Weight> wedge3_weights()
{
    std::vector<Weight> out;
    for (int a = 0; a < kWedgeRank; ++a)
        for (int b = a + 1; b < kWedgeRank; ++b)
            for (int c = b + 1; c < kWedgeRank; ++c) {
                std::vector<int> w(kWedgeRank, 0);
                w[a] = w[b] = w[c] = 1;
                out.emplace_back(std::move(w));
            }
    return out;
}

namespace {

using Packed = std::array<std::int8_t, kWedgeRank>;

struct SubsetScan {
    // per popcount: packed weight -> multiplicity
    std::array<std::map<Packed, std::int64_t>, kKoszulLength + 1> by_degree;
};

void scan_block(const std::vector<Packed>& base, std::uint32_t begin, std::uint32_t end,
                int only_degree, bool dominant_only, SubsetScan& out)
{
    for (std::uint32_t mask = begin; mask < end; ++mask) {
        const int degree = std::popcount(mask);
        if (only_degree >= 0 && degree != only_degree)
            continue;
        Packed sum{};
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
            const auto& w = base[static_cast<std::size_t>(std::countr_zero(bits))];
            for (int i = 0; i < kWedgeRank; ++i)
                sum[i] = static_cast<std::int8_t>(sum[i] + w[i]);
        }
        if (dominant_only && !std::is_sorted(sum.begin(), sum.end(), std::greater<>()))
            continue;
        ++out.by_degree[static_cast<std::size_t>(degree)][sum];
    }
}

SubsetScan scan_subsets(int only_degree, bool dominant_only, int jobs)
{
    std::vector<Packed> base;
    for (const Weight& w : wedge3_weights()) {
        Packed p{};
        for (int i = 0; i < kWedgeRank; ++i)
            p[i] = static_cast<std::int8_t>(w[i]);
        base.push_back(p);
    }
    const std::uint32_t total = 1u << kKoszulLength;
    jobs = std::clamp(jobs, 1, 64);
    std::vector<SubsetScan> partial(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        scan_block(base, 0, total, only_degree, dominant_only, partial[0]);
    } else {
        std::vector<std::thread> workers;
        const std::uint32_t chunk = (total + static_cast<std::uint32_t>(jobs) - 1) / static_cast<std::uint32_t>(jobs);
        for (int j = 0; j < jobs; ++j) {
            const std::uint32_t begin = std::min(total, chunk * static_cast<std::uint32_t>(j));
            const std::uint32_t end = std::min(total, begin + chunk);
            workers.emplace_back(scan_block, std::cref(base), begin, end, only_degree, dominant_only,
                                 std::ref(partial[static_cast<std::size_t>(j)]));
        }
        for (auto& t : workers)
            t.join();
    }
    // addition is commutative, so the merged result is independent of block layout
    SubsetScan merged = std::move(partial[0]);
    for (std::size_t j = 1; j < partial.size(); ++j)
        for (std::size_t d = 0; d < merged.by_degree.size(); ++d)
            for (const auto& [w, mult] : partial[j].by_degree[d])
                merged.by_degree[d][w] += mult;
    return merged;
}

WeightMultiplicityMap unpack(const std::map<Packed, std::int64_t>& packed)
{
    WeightMultiplicityMap out;
    for (const auto& [p, mult] : packed)
        out.emplace(Weight(std::vector<int>(p.begin(), p.end())), mult);
    return out;
}

void check_degree(int p)
{
    if (p < 0 || p > kKoszulLength)
        throw std::invalid_argument("exterior power degree must lie in 0.." + std::to_string(kKoszulLength));
}

} // namespace

WeightMultiplicityMap wedge_power_weights(int p, bool dominant_only, int jobs)
{
    check_degree(p);
    return unpack(scan_subsets(p, dominant_only, jobs).by_degree[static_cast<std::size_t>(p)]);
}

namespace {

// Dominant weights of the same length and size as `top` that it dominates,
// i.e. the dominant weights of the irreducible with highest weight `top`.
std::vector<Weight> dominated_weights(const Weight& top)
{
    const std::size_t n = top.size();
    std::vector<long> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + top[i];
    const int floor = top.min_entry();
    std::vector<Weight> out;
    std::vector<int> cur;
    long sum = 0;
    auto rec = [&](auto&& self, int cap) -> void {
        const std::size_t i = cur.size();
        if (i == n) {
            if (sum == prefix[n])
                out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= floor; --v) {
            if (sum + v > prefix[i + 1])
                continue;
            // the remaining entries can add at most v each
            if (sum + v + static_cast<long>(n - i - 1) * v < prefix[n])
                break;
            cur.push_back(v);
            sum += v;
            self(self, v);
            sum -= v;
            cur.pop_back();
        }
    };
    rec(rec, top[0]);
    return out;
}

} // namespace

Decomposition decompose_dominant_character(const WeightMultiplicityMap& dominant)
{
    WeightMultiplicityMap residual = dominant;
    std::erase_if(residual, [](const auto& kv) { return kv.second == 0; });
    Decomposition out;
    while (!residual.empty()) {
        // std::map orders lexicographically, so the last key is the largest
        const auto top = std::prev(residual.end());
        const Weight highest = top->first;
        const std::int64_t mult = top->second;
        if (mult < 0)
            throw std::logic_error("character decomposition: negative residual at " + highest.str());
        out.add(highest, mult);
        const int shift = std::min(0, highest.min_entry());
        for (const Weight& w : dominated_weights(highest)) {
            auto it = residual.find(w);
            const std::int64_t have = it == residual.end() ? 0 : it->second;
            const std::int64_t left = have - mult * kostka(highest.shifted(-shift), w.shifted(-shift));
            if (left < 0)
                throw std::logic_error("character decomposition: negative residual at " + w.str());
            if (left == 0)
                residual.erase(w);
            else
                it->second = left;
        }
    }
    return out;
}

Decomposition decompose_wedge_power(int p, int jobs)
{
    return decompose_dominant_character(wedge_power_weights(p, true, jobs));
}

KoszulFactorTable compute_koszul_factor_table(int jobs)
{
    SubsetScan scan = scan_subsets(-1, true, jobs);
    KoszulFactorTable table;
    for (int p = 0; p <= kKoszulLength; ++p)
        table.columns[static_cast<std::size_t>(p)] =
            decompose_dominant_character(unpack(scan.by_degree[static_cast<std::size_t>(p)]));
    return table;
}

const KoszulFactorTable& koszul_factor_table()
{
    static const KoszulFactorTable table =
        compute_koszul_factor_table(static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
    return table;
}

Decomposition shifted_column(const KoszulFactorTable& table, int k)
{
    if (k < 0 || k > kKoszulLength / 2)
        throw std::invalid_argument("shift index must lie in 0..10");
    return table.column(kKoszulLength / 2 - k).shifted(k);
}

} // namespace schurcoh
