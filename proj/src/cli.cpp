#include "schurcoh/cli.hpp"

#include "schurcoh/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schurcoh {

OutputFormat parse_format(const std::string& s)
{
    if (s == "json")
        return OutputFormat::json;
    if (s == "markdown" || s == "md")
        return OutputFormat::markdown;
    if (s == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "' (json, markdown, csv)");
}

std::vector<std::string> subcommand_names()
{
    return {"lr", "pieri", "bwb", "koszul-table", "cohomology", "ext", "table1", "sym", "chern", "atomic"};
}

namespace {

Weight required_weight(const std::optional<std::string>& text, const char* flag)
{
    if (!text)
        throw std::invalid_argument(std::string("missing --") + flag);
    return parse_weight(*text);
}

Weight dominant_weight(const std::optional<std::string>& text, const char* flag, std::size_t length)
{
    Weight w = required_weight(text, flag);
    if (length != 0 && w.size() != length)
        throw std::invalid_argument(std::string("--") + flag + " must have " + std::to_string(length) +
                                    " entries, got " + w.str());
    if (!w.is_dominant())
        throw std::invalid_argument(std::string("--") + flag + " must be weakly decreasing, got " + w.str());
    return w;
}

std::vector<RankOverride> resolve_overrides(const RunConfig& c, const std::string& fallback)
{
    return load_overrides(c.overrides.empty() ? fallback : c.overrides);
}

// Dotted key/value lines for reports without a dedicated table layout.
void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string key_values(const nlohmann::json& j, OutputFormat f)
{
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(j, "", kv);
    std::ostringstream out;
    if (f == OutputFormat::csv) {
        out << "key,value\n";
        for (const auto& [k, v] : kv)
            out << k << ",\"" << v << "\"\n";
    } else {
        for (const auto& [k, v] : kv)
            out << "- " << k << ": " << v << "\n";
    }
    return out.str();
}

void emit(std::ostream& out, OutputFormat f, const nlohmann::json& j, const std::string& md = {},
          const std::string& csv = {})
{
    if (f == OutputFormat::json)
        out << j.dump(2) << "\n";
    else if (f == OutputFormat::markdown)
        out << (md.empty() ? key_values(j, f) : md);
    else
        out << (csv.empty() ? key_values(j, f) : csv);
}

std::string markdown_decomposition(const Decomposition& d)
{
    std::ostringstream out;
    out << "| weight | multiplicity | dim |\n|---|---|---|\n";
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
        out << "| (" << it->first.str() << ") | " << it->second << " | " << weyl_dim(it->first) << " |\n";
    return out.str();
}

int cmd_lr(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", 0);
    const Weight mu = dominant_weight(c.mu, "mu", 0);
    const int rank = c.rank.value_or(static_cast<int>(std::max(lambda.size(), mu.size())));
    const Decomposition d = lr_coefficients(lambda, mu, rank);
    emit(out, c.format,
         {{"lambda", lambda.vec()}, {"mu", mu.vec()}, {"rank", rank}, {"decomposition", to_json(d)},
          {"dimension", bigint_json(d.dimension())}},
         markdown_decomposition(d), csv_decomposition(d));
    return kExitOk;
}

int cmd_pieri(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", 0);
    const Weight mu = required_weight(c.mu, "mu");
    if (mu.empty() || !mu.is_nonnegative() ||
        std::any_of(mu.vec().begin() + 1, mu.vec().end(), [](int v) { return v != 0; }))
        throw std::invalid_argument("pieri: --mu must be a single row m (or m,0,...), got " + mu.str());
    const int rank = c.rank.value_or(static_cast<int>(lambda.size()));
    const Decomposition d = pieri(lambda, mu[0], rank);
    emit(out, c.format,
         {{"lambda", lambda.vec()}, {"m", mu[0]}, {"rank", rank}, {"decomposition", to_json(d)},
          {"dimension", bigint_json(d.dimension())}},
         markdown_decomposition(d), csv_decomposition(d));
    return kExitOk;
}

int cmd_bwb(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", kQuotientRank);
    const Weight mu = dominant_weight(c.mu, "mu", kTautologicalRank).shifted(-c.twist.value_or(0));
    const BwbResult r = bott(lambda, mu);
    const auto [dl, dm] = serre_dual_pair(lambda, mu);
    nlohmann::json j = to_json(r);
    j["lambda"] = lambda.vec();
    j["mu"] = mu.vec();
    j["serre_dual"] = {{"lambda", dl.vec()}, {"mu", dm.vec()}, {"cohomology", to_json(bott(dl, dm))}};
    std::ostringstream md, csv;
    md << "(" << lambda.str() << " | " << mu.str() << "): ";
    if (r)
        md << "H^" << r->degree << " = Sigma_(" << r->gl10_weight.str() << ") V10, dim " << r->dim << "\n";
    else
        md << "acyclic\n";
    csv << "degree,gl10_weight,dim\n";
    if (r)
        csv << r->degree << ",\"" << r->gl10_weight.str() << "\"," << r->dim << "\n";
    emit(out, c.format, j, md.str(), csv.str());
    return kExitOk;
}

int cmd_koszul_table(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    err << "enumerating wedge^p(wedge^3 C^6), 2^20 subsets\n";
    const KoszulFactorTable t = compute_koszul_factor_table(c.jobs);
    const DiffListing diff = diff_koszul(t);
    nlohmann::json j = to_json(t);
    j["diff"] = to_json(diff);
    emit(out, c.format, j, markdown_koszul(t, diff), csv_koszul(t));
    return kExitOk;
}

int cmd_cohomology(const RunConfig& c, std::ostream& out)
{
    const Weight q = dominant_weight(c.lambda, "lambda", kQuotientRank);
    const int twist = c.twist.value_or(0);
    const std::vector<RankOverride> overrides = resolve_overrides(c, "none");
    const SummandKey key = normalize_summand(q, twist);
    const E1Page page = e1_page(build_complex(key.q_weight, key.twist));
    const ChaseResult r = chase(page, overrides_for(overrides, key));
    nlohmann::json j = to_json(r);
    j["q_weight"] = q.vec();
    j["twist"] = twist;
    j["normalized"] = {{"q_weight", key.q_weight.vec()}, {"twist", key.twist}};
    j["e1_page"] = to_json(page);
    std::ostringstream md;
    md << "Sigma_(" << q.str() << ") Q (x) O(" << twist << ")\n\n| (p,q) | H^n | dim |\n|---|---|---|\n";
    for (const auto& [pos, e] : page.entries)
        md << "| (" << pos.p << "," << pos.q << ") | " << e.total_degree() << " | " << e.dim << " |\n";
    md << "\nH^0..H^4:";
    for (const DegreeValue& d : r.degrees)
        md << " " << degree_str(d);
    md << "\nconflicts: " << r.conflicts.size() << "\n";
    std::ostringstream csv;
    csv << "degree,lo,hi\n";
    for (int n = 0; n <= kMaxDegree; ++n)
        csv << n << "," << r.degrees[static_cast<std::size_t>(n)].lo << "," << r.degrees[static_cast<std::size_t>(n)].hi
            << "\n";
    emit(out, c.format, j, md.str(), csv.str());
    return r.is_exact() ? kExitOk : kExitBounded;
}

int cmd_ext(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", kQuotientRank);
    ExtEngine engine(resolve_overrides(c, "none"), c.jobs);
    const ExtReport r = engine.ext_groups(lambda);
    emit(out, c.format, to_json(r), markdown_ext(r), csv_ext(r));
    return r.is_exact() ? kExitOk : kExitBounded;
}

int cmd_sym(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    if (!c.m)
        throw std::invalid_argument("sym: missing --m");
    if (*c.m < 1)
        throw std::invalid_argument("sym: --m must be positive");
    ExtEngine engine(resolve_overrides(c, "none"), c.jobs);
    ExtReport r;
    for (int k = 1; k <= *c.m; ++k) {
        err << "Sym^" << k << "\n";
        r = engine.sym_ext(k);
    }
    emit(out, c.format, to_json(r), markdown_ext(r), csv_ext(r));
    return r.is_exact() ? kExitOk : kExitBounded;
}

int cmd_table1(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    ExtEngine engine(resolve_overrides(c, "paper-4.2"), c.jobs);
    std::vector<ExtReport> reports;
    const std::vector<Weight> rows = table1_partitions();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        err << "[" << i + 1 << "/" << rows.size() << "] " << rows[i].str() << "\n";
        reports.push_back(engine.ext_groups(rows[i]));
    }
    const DiffListing diff = diff_table1(reports);
    nlohmann::json rj = nlohmann::json::array();
    for (const ExtReport& r : reports)
        rj.push_back(to_json(r));
    emit(out, c.format, {{"rows", rj}, {"diff", to_json(diff)}}, markdown_table1(reports, diff), csv_table1(reports));
    const bool bounded = std::any_of(reports.begin(), reports.end(), [](const ExtReport& r) { return !r.is_exact(); });
    return bounded ? kExitBounded : kExitOk;
}

int cmd_chern(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", kQuotientRank);
    emit(out, c.format, chern_json(lambda));
    return kExitOk;
}

int cmd_atomic(const RunConfig& c, std::ostream& out)
{
    const Weight lambda = dominant_weight(c.lambda, "lambda", kQuotientRank);
    emit(out, c.format, to_json(atomicity_report(lambda)));
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.jobs < 1)
            throw std::invalid_argument("--jobs must be at least 1");
        // reject unknown presets and unreadable files before any computation
        if (!config.overrides.empty())
            load_overrides(config.overrides);
        const std::string& cmd = config.subcommand;
        if (cmd == "lr")
            return cmd_lr(config, out);
        if (cmd == "pieri")
            return cmd_pieri(config, out);
        if (cmd == "bwb")
            return cmd_bwb(config, out);
        if (cmd == "koszul-table")
            return cmd_koszul_table(config, out, err);
        if (cmd == "cohomology")
            return cmd_cohomology(config, out);
        if (cmd == "ext")
            return cmd_ext(config, out);
        if (cmd == "table1")
            return cmd_table1(config, out, err);
        if (cmd == "sym")
            return cmd_sym(config, out, err);
        if (cmd == "chern")
            return cmd_chern(config, out);
        if (cmd == "atomic")
            return cmd_atomic(config, out);
        throw std::invalid_argument("unknown subcommand '" + cmd + "'");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const InconsistentOverride& e) {
        err << "error: inconsistent override: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

} // namespace schurcoh
