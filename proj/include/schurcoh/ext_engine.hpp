#pragma once

#include "schurcoh/koszul_engine.hpp"
#include "schurcoh/schur_calculus.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace schurcoh {

struct SummandChase {
    EndSummand summand;
    SummandKey key;
    ChaseResult result;
};

struct ExtReport {
    Weight input;
    CanonicalQPartition lambda;
    std::array<DegreeValue, kMaxDegree + 1> ext;
    std::vector<SummandChase> breakdown;
    /// Hirzebruch-Riemann-Roch chi(Sigma_lambda Q, Sigma_lambda Q).
    BigInt chi_check;

    bool is_exact() const;
    /// Alternating sum of the ext dimensions; only meaningful when exact.
    BigInt alternating_sum() const;
    /// Total number of conflicts over all summands.
    std::size_t conflict_count() const;
};

/// Chases End(Sigma_lambda Q) summand by summand under one fixed override
/// set. Chase results are cached per normalized summand, so reports that
/// share summands (the Sym^m nesting, the stored Ext rows) reuse them.
class ExtEngine {
public:
    explicit ExtEngine(std::vector<RankOverride> overrides = {}, int jobs = 1);

    const std::vector<RankOverride>& overrides() const { return overrides_; }

    ExtReport ext_groups(const Weight& lambda);

    /// Ext of Sym^m Q, built from Sym^(m-1) Q by adding Sigma_(2m,m,m,0) (x) O(-m).
    ExtReport sym_ext(int m);

    /// ChaseResult of one summand, through the cache.
    ChaseResult chase_summand(const Weight& q_weight, int twist);

private:
    void warm(const std::vector<SummandKey>& keys);
    ExtReport assemble(const Weight& input, const CanonicalQPartition& c, const std::vector<EndSummand>& summands);

    std::vector<RankOverride> overrides_;
    int jobs_;
    std::mutex mutex_;
    std::map<SummandKey, ChaseResult> cache_;
    std::map<int, ExtReport> sym_cache_;
};

/// The 21 rows of the published Ext table, lambda_1 < 5, in table order.
std::vector<Weight> table1_partitions();

/// ext_groups for every row of table1_partitions().
std::vector<ExtReport> reproduce_table1(ExtEngine& engine);

} // namespace schurcoh
