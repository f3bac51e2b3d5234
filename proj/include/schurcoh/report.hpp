#pragma once

#include "schurcoh/bwb.hpp"
#include "schurcoh/ext_engine.hpp"
#include "schurcoh/intersection_ring.hpp"
#include "schurcoh/plethysm.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schurcoh {

// --- golden tables ---

struct Table1Row {
    Weight lambda;
    // nothing where the table prints "-"
    std::optional<long> hom;
    std::optional<long> ext1;
    std::optional<long> ext2;
    std::string discrepancy_cell;
    std::string discrepancy_note;
};

std::vector<Table1Row> table1_golden();

/// Printed Koszul factor columns p = 0..10.
std::map<int, std::vector<Weight>> koszul_golden();

enum class CellStatus {
    match,
    mismatch,
    annotated,      // mismatch listed as a known discrepancy
    undetermined,   // printed "-" and the engine is Bounded
    engine_only,    // printed "-" but the engine is Exact
    bounded,        // printed a value but the engine is Bounded
};

std::string to_string(CellStatus s);

struct CellDiff {
    std::string row;
    std::string column;
    std::string printed;
    std::string computed;
    CellStatus status = CellStatus::match;
    std::string note;
};

struct DiffListing {
    std::vector<CellDiff> cells;

    /// mismatch or bounded cells; annotated ones are not counted
    std::size_t unannotated_mismatches() const;
    std::size_t count(CellStatus s) const;
};

/// Cell by cell against the published Ext table. Reports are matched to rows
/// by canonical partition; rows without a report are skipped.
DiffListing diff_table1(const std::vector<ExtReport>& reports);

/// Columns 0..10 against the published factor table: same weight sets, every
/// multiplicity 1.
DiffListing diff_koszul(const KoszulFactorTable& table);

// --- serialization ---

nlohmann::json bigint_json(const BigInt& v);
nlohmann::json rational_json(const Rational& v);
nlohmann::json degree_json(const DegreeValue& v);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const BwbResult& r);
nlohmann::json to_json(const KoszulFactorTable& t);
nlohmann::json to_json(const E1Page& page);
nlohmann::json to_json(const ChaseResult& r);
nlohmann::json to_json(const ExtReport& r);
nlohmann::json to_json(const DiffListing& d);
nlohmann::json to_json(const RingElement& e);
nlohmann::json to_json(const AtomicityReport& a);
/// rank, ch by degree, Delta / c2(X), integral of Xi, chi, atomicity
nlohmann::json chern_json(const Weight& lambda);

std::string degree_str(const DegreeValue& v);

std::string markdown_table1(const std::vector<ExtReport>& reports, const DiffListing& diff);
std::string markdown_koszul(const KoszulFactorTable& t, const DiffListing& diff);
std::string markdown_ext(const ExtReport& r);
std::string markdown_diff(const DiffListing& d);

std::string csv_table1(const std::vector<ExtReport>& reports);
std::string csv_koszul(const KoszulFactorTable& t);
std::string csv_ext(const ExtReport& r);
std::string csv_decomposition(const Decomposition& d);

} // namespace schurcoh
