#include "schurcoh/report.hpp"

#include "embedded_data.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schurcoh {

namespace {

std::optional<long> optional_long(const nlohmann::json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<long>();
}

std::string optional_str(const std::optional<long>& v)
{
    return v ? std::to_string(*v) : "-";
}

} // namespace

std::vector<Table1Row> table1_golden()
{
    const nlohmann::json j = nlohmann::json::parse(embedded::kGoldenExtTable);
    std::vector<Table1Row> out;
    for (const auto& row : j.at("rows")) {
        Table1Row r;
        r.lambda = Weight(row.at("lambda").get<std::vector<int>>());
        r.hom = optional_long(row.at("hom"));
        r.ext1 = optional_long(row.at("ext1"));
        r.ext2 = optional_long(row.at("ext2"));
        if (row.contains("known_discrepancy")) {
            r.discrepancy_cell = row["known_discrepancy"].at("cell").get<std::string>();
            r.discrepancy_note = row["known_discrepancy"].at("note").get<std::string>();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::map<int, std::vector<Weight>> koszul_golden()
{
    const nlohmann::json j = nlohmann::json::parse(embedded::kGoldenKoszulTable);
    std::map<int, std::vector<Weight>> out;
    for (const auto& [key, col] : j.at("columns").items()) {
        std::vector<Weight> ws;
        for (const auto& w : col)
            ws.emplace_back(w.get<std::vector<int>>());
        out.emplace(std::stoi(key), std::move(ws));
    }
    return out;
}

std::string to_string(CellStatus s)
{
    switch (s) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::annotated: return "annotated";
    case CellStatus::undetermined: return "undetermined";
    case CellStatus::engine_only: return "engine_only";
    case CellStatus::bounded: return "bounded";
    }
    return "?";
}

std::size_t DiffListing::unannotated_mismatches() const
{
    return count(CellStatus::mismatch) + count(CellStatus::bounded);
}

std::size_t DiffListing::count(CellStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [s](const CellDiff& c) { return c.status == s; }));
}

std::string degree_str(const DegreeValue& v)
{
    if (v.is_exact())
        return to_string(v.lo);
    return "[" + to_string(v.lo) + "," + to_string(v.hi) + "]";
}

DiffListing diff_table1(const std::vector<ExtReport>& reports)
{
    DiffListing out;
    for (const Table1Row& row : table1_golden()) {
        const CanonicalQPartition c = canonicalize(row.lambda);
        auto rep = std::find_if(reports.begin(), reports.end(), [&](const ExtReport& r) {
            return r.lambda.m == c.m && r.lambda.t == c.t && r.lambda.s == c.s;
        });
        if (rep == reports.end())
            continue;
        const std::array<std::pair<const char*, std::optional<long>>, 3> cols{
            {{"hom", row.hom}, {"ext1", row.ext1}, {"ext2", row.ext2}}};
        for (std::size_t n = 0; n < cols.size(); ++n) {
            const DegreeValue& v = rep->ext[n];
            CellDiff cell{row.lambda.str(), cols[n].first, optional_str(cols[n].second), degree_str(v),
                          CellStatus::match, ""};
            if (!cols[n].second)
                cell.status = v.is_exact() ? CellStatus::engine_only : CellStatus::undetermined;
            else if (!v.is_exact())
                cell.status = CellStatus::bounded;
            else if (v.lo != *cols[n].second) {
                if (row.discrepancy_cell == cols[n].first) {
                    cell.status = CellStatus::annotated;
                    cell.note = row.discrepancy_note;
                } else {
                    cell.status = CellStatus::mismatch;
                }
            }
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

DiffListing diff_koszul(const KoszulFactorTable& table)
{
    DiffListing out;
    for (const auto& [p, printed] : koszul_golden()) {
        const Decomposition& col = table.column(p);
        const std::set<Weight> want(printed.begin(), printed.end());
        std::set<Weight> have;
        for (const auto& [w, mult] : col)
            have.insert(w);
        for (const Weight& w : want) {
            const std::int64_t mult = col.multiplicity(w);
            CellDiff cell{"p=" + std::to_string(p), w.str(), "1", std::to_string(mult), CellStatus::match, ""};
            if (mult != 1)
                cell.status = CellStatus::mismatch;
            out.cells.push_back(std::move(cell));
        }
        for (const Weight& w : have)
            if (!want.contains(w))
                out.cells.push_back(CellDiff{"p=" + std::to_string(p), w.str(), "-",
                                             std::to_string(col.multiplicity(w)), CellStatus::mismatch,
                                             "not in the printed column"});
    }
    return out;
}

// --- JSON ---

nlohmann::json bigint_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

nlohmann::json rational_json(const Rational& v)
{
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return bigint_json(c.get_num());
    return c.get_str();
}

nlohmann::json degree_json(const DegreeValue& v)
{
    if (v.is_exact())
        return bigint_json(v.lo);
    return {{"lo", bigint_json(v.lo)}, {"hi", bigint_json(v.hi)}};
}

namespace {

nlohmann::json pos_json(GridPos g)
{
    return nlohmann::json::array({g.p, g.q});
}

nlohmann::json degrees_json(const std::array<DegreeValue, kMaxDegree + 1>& ds)
{
    nlohmann::json out = nlohmann::json::array();
    for (const DegreeValue& d : ds)
        out.push_back(degree_json(d));
    return out;
}

} // namespace

nlohmann::json to_json(const Decomposition& d)
{
    nlohmann::json out = nlohmann::json::array();
    // descending, highest weight first
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
        out.push_back({{"weight", it->first.vec()},
                       {"multiplicity", it->second},
                       {"dim", bigint_json(weyl_dim(it->first))}});
    return out;
}

nlohmann::json to_json(const BwbResult& r)
{
    if (!r)
        return {{"acyclic", true}};
    return {{"acyclic", false}, {"degree", r->degree}, {"gl10_weight", r->gl10_weight.vec()},
            {"dim", bigint_json(r->dim)}};
}

nlohmann::json to_json(const KoszulFactorTable& t)
{
    nlohmann::json cols = nlohmann::json::array();
    for (int p = 0; p <= kKoszulLength; ++p) {
        const Decomposition& col = t.column(p);
        cols.push_back({{"p", p},
                        {"factors", to_json(col)},
                        {"dim", bigint_json(col.dimension())},
                        {"binomial", bigint_json(binomial(kKoszulLength, p))}});
    }
    return {{"columns", cols}};
}

nlohmann::json to_json(const E1Page& page)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [pos, e] : page.entries) {
        nlohmann::json cons = nlohmann::json::array();
        for (const E1Constituent& c : e.constituents)
            cons.push_back({{"gl10_weight", c.gl10_weight.vec()}, {"multiplicity", c.multiplicity}});
        out.push_back({{"pos", pos_json(pos)},
                       {"total_degree", e.total_degree()},
                       {"dim", bigint_json(e.dim)},
                       {"constituents", cons}});
    }
    return out;
}

nlohmann::json to_json(const ChaseResult& r)
{
    nlohmann::json conflicts = nlohmann::json::array();
    for (const Conflict& c : r.conflicts)
        conflicts.push_back({{"page", c.page},
                             {"source", pos_json(c.source)},
                             {"target", pos_json(c.target)},
                             {"source_dim", bigint_json(c.source_dim)},
                             {"target_dim", bigint_json(c.target_dim)}});
    return {{"cohomology", degrees_json(r.degrees)},
            {"exact", r.is_exact()},
            {"euler", bigint_json(r.euler)},
            {"conflicts", conflicts}};
}

nlohmann::json to_json(const ExtReport& r)
{
    nlohmann::json summands = nlohmann::json::array();
    for (const SummandChase& s : r.breakdown) {
        nlohmann::json j = to_json(s.result);
        j["q_weight"] = s.summand.q_weight.vec();
        j["twist"] = s.summand.twist;
        j["multiplicity"] = s.summand.multiplicity;
        j["normalized"] = {{"q_weight", s.key.q_weight.vec()}, {"twist", s.key.twist}};
        summands.push_back(std::move(j));
    }
    const bool exact = r.is_exact();
    return {{"lambda", r.input.vec()},
            {"canonical",
             {{"m", r.lambda.m}, {"t", r.lambda.t}, {"s", r.lambda.s}, {"twist", r.lambda.twist},
              {"dualized", r.lambda.dualized}}},
            {"ext", degrees_json(r.ext)},
            {"exact", exact},
            {"chi_check", bigint_json(r.chi_check)},
            {"alternating_sum", exact ? bigint_json(r.alternating_sum()) : nlohmann::json(nullptr)},
            {"conflict_count", r.conflict_count()},
            {"summands", summands}};
}

nlohmann::json to_json(const DiffListing& d)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const CellDiff& c : d.cells) {
        nlohmann::json j{{"row", c.row}, {"column", c.column}, {"printed", c.printed},
                         {"computed", c.computed}, {"status", to_string(c.status)}};
        if (!c.note.empty())
            j["note"] = c.note;
        cells.push_back(std::move(j));
    }
    return {{"cells", cells},
            {"unannotated_mismatches", d.unannotated_mismatches()},
            {"annotated", d.count(CellStatus::annotated)}};
}

nlohmann::json to_json(const RingElement& e)
{
    return {{"1", rational_json(e[Basis::one])},   {"h", rational_json(e[Basis::h])},
            {"h^2", rational_json(e[Basis::h2])},  {"ch2", rational_json(e[Basis::ch2])},
            {"ch3", rational_json(e[Basis::ch3])}, {"pt", rational_json(e[Basis::point])}};
}

nlohmann::json to_json(const AtomicityReport& a)
{
    nlohmann::json j{{"canonical", {a.canonical.m, a.canonical.t, a.canonical.s, 0}},
                     {"rank", bigint_json(a.rank)},
                     {"chi", bigint_json(a.chi)},
                     {"chi_over_3r2", rational_json(a.chi_over_3r2)},
                     {"necessary_test", a.necessary_test ? "pass" : "fail"},
                     {"certificate_verified", a.certificate_verified},
                     {"atomic", a.atomic}};
    if (a.certificate)
        j["certificate"] = {{"r", rational_json(a.certificate->r)},
                            {"ell_h", rational_json(a.certificate->a)},
                            {"s", rational_json(a.certificate->s)},
                            {"q_tilde", rational_json(a.certificate->q_tilde())}};
    else
        j["certificate"] = nullptr;
    return j;
}

nlohmann::json chern_json(const Weight& lambda)
{
    const RingElement ch = ch_oracle(lambda);
    nlohmann::json by_degree = nlohmann::json::array();
    for (int d = 0; d <= kMaxDegree; ++d)
        by_degree.push_back(to_json(ch.degree_part(d)));
    const std::optional<Rational> delta = as_c2X_multiple(discriminant(ch));
    return {{"lambda", lambda.vec()},
            {"rank", rational_json(ch[Basis::one])},
            {"ch", by_degree},
            {"ch_text", ch.str()},
            {"delta_c2X", delta ? rational_json(*delta) : nlohmann::json(nullptr)},
            {"xi_integral", rational_json(integrate(xi_class(lambda)))},
            {"chi", bigint_json(chi_endo(lambda))},
            {"atomic", to_json(atomicity_report(lambda))}};
}

// --- markdown / csv ---

std::string markdown_diff(const DiffListing& d)
{
    std::ostringstream out;
    out << "unannotated mismatches: " << d.unannotated_mismatches()
        << ", annotated: " << d.count(CellStatus::annotated) << "\n";
    for (const CellDiff& c : d.cells) {
        if (c.status == CellStatus::match || c.status == CellStatus::undetermined)
            continue;
        out << "- " << c.row << " " << c.column << ": printed " << c.printed << ", computed " << c.computed << " ("
            << to_string(c.status) << ")";
        if (!c.note.empty())
            out << " " << c.note;
        out << "\n";
    }
    return out.str();
}

std::string markdown_table1(const std::vector<ExtReport>& reports, const DiffListing& diff)
{
    std::ostringstream out;
    out << "| lambda | hom | ext1 | ext2 | chi | conflicts |\n|---|---|---|---|---|---|\n";
    for (const ExtReport& r : reports)
        out << "| (" << r.input.str() << ") | " << degree_str(r.ext[0]) << " | " << degree_str(r.ext[1]) << " | "
            << degree_str(r.ext[2]) << " | " << r.chi_check << " | " << r.conflict_count() << " |\n";
    out << "\n" << markdown_diff(diff);
    return out.str();
}

std::string markdown_koszul(const KoszulFactorTable& t, const DiffListing& diff)
{
    std::ostringstream out;
    std::size_t rows = 0;
    for (int p = 0; p <= kKoszulLength / 2; ++p)
        rows = std::max(rows, t.column(p).size());
    out << "|";
    for (int p = 0; p <= kKoszulLength / 2; ++p)
        out << " p=" << p << " |";
    out << "\n|";
    for (int p = 0; p <= kKoszulLength / 2; ++p)
        out << "---|";
    out << "\n";
    std::vector<std::vector<std::string>> cols;
    for (int p = 0; p <= kKoszulLength / 2; ++p) {
        std::vector<std::string> col;
        const Decomposition& d = t.column(p);
        for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
            col.push_back("(" + it->first.str() + ")" + (it->second == 1 ? "" : " x" + std::to_string(it->second)));
        cols.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < rows; ++i) {
        out << "|";
        for (const auto& col : cols)
            out << " " << (i < col.size() ? col[i] : "-") << " |";
        out << "\n";
    }
    out << "\n| p | dim | C(20,p) |\n|---|---|---|\n";
    for (int p = 0; p <= kKoszulLength; ++p)
        out << "| " << p << " | " << t.column(p).dimension() << " | " << binomial(kKoszulLength, p) << " |\n";
    out << "\n" << markdown_diff(diff);
    return out.str();
}

std::string markdown_ext(const ExtReport& r)
{
    std::ostringstream out;
    out << "Ext(Sigma_(" << r.input.str() << ") Q, same), canonical (" << r.lambda.weight().str() << ")\n\n";
    out << "| n | ext^n |\n|---|---|\n";
    for (int n = 0; n <= kMaxDegree; ++n)
        out << "| " << n << " | " << degree_str(r.ext[static_cast<std::size_t>(n)]) << " |\n";
    out << "\nchi (HRR): " << r.chi_check << "\n\n";
    out << "| summand | mult | H^0..H^4 | conflicts |\n|---|---|---|---|\n";
    for (const SummandChase& s : r.breakdown) {
        out << "| (" << s.summand.q_weight.str() << ")|" << s.summand.twist << " | " << s.summand.multiplicity << " |";
        for (const DegreeValue& d : s.result.degrees)
            out << " " << degree_str(d);
        out << " | " << s.result.conflicts.size() << " |\n";
    }
    return out.str();
}

std::string csv_table1(const std::vector<ExtReport>& reports)
{
    std::ostringstream out;
    out << "lambda,hom,ext1,ext2,ext3,ext4,chi,exact\n";
    for (const ExtReport& r : reports) {
        out << "\"" << r.input.str() << "\"";
        for (const DegreeValue& d : r.ext)
            out << "," << degree_str(d);
        out << "," << r.chi_check << "," << (r.is_exact() ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string csv_koszul(const KoszulFactorTable& t)
{
    std::ostringstream out;
    out << "p,weight,multiplicity,dim\n";
    for (int p = 0; p <= kKoszulLength; ++p) {
        const Decomposition& d = t.column(p);
        for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
            out << p << ",\"" << it->first.str() << "\"," << it->second << "," << weyl_dim(it->first) << "\n";
    }
    return out.str();
}

std::string csv_ext(const ExtReport& r)
{
    std::ostringstream out;
    out << "degree,lo,hi\n";
    for (int n = 0; n <= kMaxDegree; ++n) {
        const DegreeValue& d = r.ext[static_cast<std::size_t>(n)];
        out << n << "," << d.lo << "," << d.hi << "\n";
    }
    return out.str();
}

std::string csv_decomposition(const Decomposition& d)
{
    std::ostringstream out;
    out << "weight,multiplicity,dim\n";
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
        out << "\"" << it->first.str() << "\"," << it->second << "," << weyl_dim(it->first) << "\n";
    return out.str();
}

} // namespace schurcoh
