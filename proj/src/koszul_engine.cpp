#include "schurcoh/koszul_engine.hpp"

#include "embedded_data.hpp"
#include "schurcoh/bwb.hpp"
#include "schurcoh/plethysm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

namespace schurcoh {

SummandKey normalize_summand(const Weight& q_weight, int twist)
{
    if (q_weight.size() != kQuotientRank)
        throw std::invalid_argument("expected a length-4 weight, got " + q_weight.str());
    const int c = q_weight[kQuotientRank - 1];
    return SummandKey{q_weight.shifted(-c), twist + c};
}

TwistedComplex build_complex(const Weight& q_weight, int twist)
{
    if (q_weight.size() != kQuotientRank || !q_weight.is_dominant())
        throw std::invalid_argument("build_complex: expected a dominant length-4 weight, got " + q_weight.str());
    const KoszulFactorTable& table = koszul_factor_table();
    TwistedComplex out;
    out.q_weight = q_weight;
    out.twist = twist;
    for (int p = 0; p <= kKoszulLength; ++p)
        for (const auto& [mu, mult] : table.column(p))
            out.terms[static_cast<std::size_t>(p)].push_back(KoszulFactor{mu.shifted(-twist), mult});
    return out;
}

const E1Entry* E1Page::find(GridPos pos) const
{
    auto it = entries.find(pos);
    return it == entries.end() ? nullptr : &it->second;
}

BigInt E1Page::euler_characteristic() const
{
    BigInt chi = 0;
    for (const auto& [pos, e] : entries) {
        if ((e.total_degree() % 2 + 2) % 2 == 0)
            chi += e.dim;
        else
            chi -= e.dim;
    }
    return chi;
}

E1Page e1_page(const TwistedComplex& complex)
{
    E1Page page;
    for (int p = 0; p <= kKoszulLength; ++p) {
        for (const KoszulFactor& f : complex.terms[static_cast<std::size_t>(p)]) {
            BwbResult h = bott(complex.q_weight, f.u_weight);
            if (!h)
                continue;
            GridPos pos{p, h->degree};
            auto [it, inserted] = page.entries.try_emplace(pos, E1Entry{pos, 0, {}});
            it->second.dim += h->dim * BigInt(static_cast<long>(f.multiplicity));
            it->second.constituents.push_back(E1Constituent{h->gl10_weight, f.multiplicity});
        }
    }
    return page;
}

void RankOverride::validate() const
{
    const int r = page();
    if (r <= 0 || target.q != source.q - r + 1)
        throw std::invalid_argument("override position (" + std::to_string(source.p) + "," +
                                    std::to_string(source.q) + ") -> (" + std::to_string(target.p) + "," +
                                    std::to_string(target.q) + ") is not a differential");
    if (sgn(rank) < 0)
        throw std::invalid_argument("override rank must be nonnegative");
}

bool RankOverride::applies_to(const SummandKey& key) const
{
    return normalize_summand(q_weight, twist) == key;
}

bool ChaseResult::is_exact() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeValue& v) { return v.is_exact(); });
}

namespace {

std::string pos_str(GridPos g)
{
    return "(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
}

} // namespace

ChaseResult chase(const E1Page& page, std::span<const RankOverride> overrides)
{
    for (const RankOverride& o : overrides)
        o.validate();

    std::map<GridPos, DegreeValue> live;
    for (const auto& [pos, e] : page.entries)
        live.emplace(pos, DegreeValue::exact(e.dim));

    std::vector<bool> used(overrides.size(), false);
    ChaseResult result;
    result.euler = page.euler_characteristic();

    // higher p first, so an entry absorbs its incoming d_r before its outgoing one
    std::vector<GridPos> order;
    for (const auto& [pos, v] : live)
        order.push_back(pos);
    std::sort(order.begin(), order.end(), [](GridPos a, GridPos b) { return a.p != b.p ? a.p > b.p : a.q < b.q; });

    for (int r = 1; r <= kKoszulLength; ++r) {
        for (GridPos src : order) {
            const GridPos dst{src.p - r, src.q - r + 1};
            auto target = live.find(dst);
            if (target == live.end())
                continue;
            DegreeValue& s = live.at(src);
            DegreeValue& t = target->second;

            auto ov = std::find_if(overrides.begin(), overrides.end(), [&](const RankOverride& o) {
                return o.source == src && o.target == dst;
            });
            if (ov != overrides.end()) {
                const BigInt& rank = ov->rank;
                if (rank > s.hi || rank > t.hi)
                    throw InconsistentOverride("override rank " + to_string(rank) + " for " + pos_str(src) +
                                               " -> " + pos_str(dst) + " exceeds live dimensions " +
                                               to_string(s.hi) + " and " + to_string(t.hi));
                for (DegreeValue* v : {&s, &t}) {
                    v->hi -= rank;
                    v->lo = std::max(BigInt(0), BigInt(v->lo - rank));
                }
                used[static_cast<std::size_t>(ov - overrides.begin())] = true;
                continue;
            }
            if (sgn(s.hi) == 0 || sgn(t.hi) == 0)
                continue;
            const BigInt bound = std::min(s.hi, t.hi);
            result.conflicts.push_back(Conflict{r, src, dst, s.hi, t.hi});
            s.lo = std::max(BigInt(0), BigInt(s.lo - bound));
            t.lo = std::max(BigInt(0), BigInt(t.lo - bound));
        }
    }

    for (std::size_t i = 0; i < overrides.size(); ++i)
        if (!used[i] && sgn(overrides[i].rank) != 0)
            throw InconsistentOverride("override " + pos_str(overrides[i].source) + " -> " +
                                       pos_str(overrides[i].target) + " does not match two E1 entries");

    for (const auto& [pos, v] : live) {
        const int n = pos.q - pos.p;
        if (n < 0 || n > kMaxDegree) {
            if (sgn(v.lo) > 0)
                throw InconsistentOverride("entry " + pos_str(pos) + " survives in total degree " +
                                           std::to_string(n) + ", outside 0.." + std::to_string(kMaxDegree));
            continue;
        }
        result.degrees[static_cast<std::size_t>(n)] += v;
    }
    return result;
}

SummandKey serre_dual_summand(const SummandKey& key)
{
    return normalize_summand(dual(key.q_weight), -key.twist);
}

RankOverride serre_dual_override(const RankOverride& o)
{
    o.validate();
    const int r = o.page();
    const SummandKey key = serre_dual_summand(normalize_summand(o.q_weight, o.twist));
    RankOverride d;
    d.q_weight = key.q_weight;
    d.twist = key.twist;
    d.source = GridPos{kKoszulLength - o.source.p + r, kGrassmannianDim - 1 - o.source.q + r};
    d.target = GridPos{kKoszulLength - o.source.p, kGrassmannianDim - o.source.q};
    d.rank = o.rank;
    d.note = "Serre dual of " + o.q_weight.str() + "|" + std::to_string(o.twist) + " " + pos_str(o.source) +
             " -> " + pos_str(o.target) + ".";
    return d;
}

std::vector<RankOverride> close_under_duality(std::vector<RankOverride> overrides)
{
    const std::size_t n = overrides.size();
    for (std::size_t i = 0; i < n; ++i) {
        RankOverride d = serre_dual_override(overrides[i]);
        const SummandKey key = normalize_summand(d.q_weight, d.twist);
        auto same = std::find_if(overrides.begin(), overrides.end(), [&](const RankOverride& o) {
            return o.applies_to(key) && o.source == d.source && o.target == d.target;
        });
        if (same == overrides.end()) {
            overrides.push_back(std::move(d));
        } else if (same->rank != d.rank) {
            throw InconsistentOverride("override " + pos_str(same->source) + " -> " + pos_str(same->target) +
                                       " on " + same->q_weight.str() + " has rank " + to_string(same->rank) +
                                       " but its dual has rank " + to_string(d.rank));
        }
    }
    return overrides;
}

std::vector<RankOverride> overrides_for(std::span<const RankOverride> all, const SummandKey& key)
{
    std::vector<RankOverride> out;
    for (const RankOverride& o : all)
        if (o.applies_to(key))
            out.push_back(o);
    return out;
}

ChaseResult cohomology(const Weight& q_weight, int twist, std::span<const RankOverride> all_overrides)
{
    const SummandKey key = normalize_summand(q_weight, twist);
    const std::vector<RankOverride> mine = overrides_for(all_overrides, key);
    return chase(e1_page(build_complex(key.q_weight, key.twist)), mine);
}

namespace {

GridPos pos_from_json(const nlohmann::json& j)
{
    return GridPos{j.at("p").get<int>(), j.at("q").get<int>()};
}

BigInt bigint_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

} // namespace

std::vector<RankOverride> overrides_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("override file must be a JSON array");
    std::vector<RankOverride> out;
    for (const auto& item : j) {
        try {
            RankOverride o;
            o.q_weight = Weight::dominant(item.at("q_weight").get<std::vector<int>>());
            if (o.q_weight.size() != kQuotientRank)
                throw std::invalid_argument("q_weight must have length 4");
            o.twist = item.at("twist").get<int>();
            o.source = pos_from_json(item.at("source"));
            o.target = pos_from_json(item.at("target"));
            o.rank = bigint_from_json(item.at("rank"));
            o.note = item.value("note", std::string());
            o.validate();
            out.push_back(std::move(o));
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed override entry: ") + e.what());
        }
    }
    return out;
}

nlohmann::json overrides_to_json(std::span<const RankOverride> overrides)
{
    nlohmann::json out = nlohmann::json::array();
    for (const RankOverride& o : overrides) {
        out.push_back({{"q_weight", o.q_weight.vec()},
                       {"twist", o.twist},
                       {"source", {{"p", o.source.p}, {"q", o.source.q}}},
                       {"target", {{"p", o.target.p}, {"q", o.target.q}}},
                       {"rank", o.rank.fits_slong_p() ? nlohmann::json(o.rank.get_si())
                                                      : nlohmann::json(o.rank.get_str())},
                       {"note", o.note}});
    }
    return out;
}

std::vector<std::string> preset_names()
{
    return {"none", "paper-4.2"};
}

bool is_preset(const std::string& name)
{
    auto names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<RankOverride> preset_overrides(const std::string& name)
{
    if (name == "none")
        return {};
    if (name == "paper-4.2")
        return close_under_duality(overrides_from_json(nlohmann::json::parse(embedded::kPresetResolved).at("overrides")));
    throw std::invalid_argument("unknown override preset '" + name + "'");
}

std::vector<RankOverride> load_overrides(const std::string& preset_or_path)
{
    if (is_preset(preset_or_path))
        return preset_overrides(preset_or_path);
    std::ifstream in(preset_or_path);
    if (!in)
        throw std::invalid_argument("'" + preset_or_path + "' is neither a preset nor a readable file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("override file '" + preset_or_path + "': " + e.what());
    }
    return close_under_duality(overrides_from_json(j.is_object() && j.contains("overrides") ? j.at("overrides") : j));
}

} // namespace schurcoh
