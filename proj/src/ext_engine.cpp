#include "schurcoh/ext_engine.hpp"

#include "schurcoh/intersection_ring.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace schurcoh {

bool ExtReport::is_exact() const
{
    return std::all_of(ext.begin(), ext.end(), [](const DegreeValue& v) { return v.is_exact(); });
}

BigInt ExtReport::alternating_sum() const
{
    BigInt sum = 0;
    for (int n = 0; n <= kMaxDegree; ++n) {
        if (n % 2 == 0)
            sum += ext[static_cast<std::size_t>(n)].lo;
        else
            sum -= ext[static_cast<std::size_t>(n)].lo;
    }
    return sum;
}

std::size_t ExtReport::conflict_count() const
{
    std::size_t n = 0;
    for (const SummandChase& s : breakdown)
        n += s.result.conflicts.size();
    return n;
}

ExtEngine::ExtEngine(std::vector<RankOverride> overrides, int jobs)
    : overrides_(std::move(overrides)), jobs_(std::max(1, jobs))
{
    for (const RankOverride& o : overrides_)
        o.validate();
}

ChaseResult ExtEngine::chase_summand(const Weight& q_weight, int twist)
{
    const SummandKey key = normalize_summand(q_weight, twist);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    ChaseResult r = cohomology(key.q_weight, key.twist, overrides_);
    std::lock_guard lock(mutex_);
    return cache_.emplace(key, std::move(r)).first->second;
}

void ExtEngine::warm(const std::vector<SummandKey>& keys)
{
    std::vector<SummandKey> missing;
    {
        std::lock_guard lock(mutex_);
        for (const SummandKey& k : keys)
            if (!cache_.contains(k) && std::find(missing.begin(), missing.end(), k) == missing.end())
                missing.push_back(k);
    }
    if (missing.size() < 2 || jobs_ == 1) {
        for (const SummandKey& k : missing)
            chase_summand(k.q_weight, k.twist);
        return;
    }
    // errors from workers are rethrown on the calling thread
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < missing.size(); i = next++) {
            try {
                chase_summand(missing[i].q_weight, missing[i].twist);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> workers;
    const int n = std::min<int>(jobs_, static_cast<int>(missing.size()));
    for (int i = 0; i < n; ++i)
        workers.emplace_back(work);
    for (auto& t : workers)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

ExtReport ExtEngine::assemble(const Weight& input, const CanonicalQPartition& c,
                              const std::vector<EndSummand>& summands)
{
    std::vector<SummandKey> keys;
    for (const EndSummand& e : summands)
        keys.push_back(normalize_summand(e.q_weight, e.twist));
    warm(keys);

    ExtReport rep;
    rep.input = input;
    rep.lambda = c;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        ChaseResult r = chase_summand(keys[i].q_weight, keys[i].twist);
        for (int n = 0; n <= kMaxDegree; ++n)
            rep.ext[static_cast<std::size_t>(n)] += r.degrees[static_cast<std::size_t>(n)].scaled(summands[i].multiplicity);
        rep.breakdown.push_back(SummandChase{summands[i], keys[i], std::move(r)});
    }
    rep.chi_check = chi_endo(c.weight());
    return rep;
}

ExtReport ExtEngine::ext_groups(const Weight& lambda)
{
    const CanonicalQPartition c = canonicalize(lambda);
    return assemble(lambda, c, end_decomposition(c));
}

ExtReport ExtEngine::sym_ext(int m)
{
    if (m < 1)
        throw std::invalid_argument("sym_ext: m must be positive");
    {
        std::lock_guard lock(mutex_);
        if (auto it = sym_cache_.find(m); it != sym_cache_.end())
            return it->second;
    }
    ExtReport rep;
    const EndSummand top{Weight{2 * m, m, m, 0}, -m, 1};
    if (m == 1) {
        rep = assemble(Weight{1, 0, 0, 0}, canonicalize(Weight{1, 0, 0, 0}),
                       {EndSummand{Weight{2, 1, 1, 0}, -1, 1}, EndSummand{Weight{0, 0, 0, 0}, 0, 1}});
    } else {
        rep = sym_ext(m - 1);
        const SummandKey key = normalize_summand(top.q_weight, top.twist);
        ChaseResult r = chase_summand(key.q_weight, key.twist);
        for (int n = 0; n <= kMaxDegree; ++n)
            rep.ext[static_cast<std::size_t>(n)] += r.degrees[static_cast<std::size_t>(n)];
        rep.breakdown.insert(rep.breakdown.begin(), SummandChase{top, key, std::move(r)});
        rep.input = Weight{m, 0, 0, 0};
        rep.lambda = canonicalize(rep.input);
        rep.chi_check = chi_endo(rep.input);
    }
    std::lock_guard lock(mutex_);
    sym_cache_.emplace(m, rep);
    return rep;
}

std::vector<Weight> table1_partitions()
{
    std::vector<Weight> out;
    for (int m = 1; m <= 4; ++m)
        for (int t = 0; t <= m; ++t)
            for (int s = 0; s <= t; ++s)
                if (t + s <= m)
                    out.push_back(Weight{m, t, s, 0});
    return out;
}

std::vector<ExtReport> reproduce_table1(ExtEngine& engine)
{
    std::vector<ExtReport> out;
    for (const Weight& w : table1_partitions())
        out.push_back(engine.ext_groups(w));
    return out;
}

} // namespace schurcoh
