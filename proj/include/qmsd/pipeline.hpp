#pragma once

// Batch screening: ingestion of code files, the per-code screening record,
// dedup by enumerator digest, and CSV/JSON report emission.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmsd/classical.hpp"
#include "qmsd/distill.hpp"
#include "qmsd/enumerators.hpp"
#include "qmsd/stabilizer.hpp"

namespace qmsd {

std::string sha256_hex(const std::string& data);

struct IngestedCode {
    std::variant<ClassicalTernaryCode, StabilizerCode> code;
    std::string source;  // file path
};

struct IngestError {
    std::string source;
    std::size_t line = 0;
    std::string message;
};

struct IngestResult {
    std::vector<IngestedCode> codes;
    std::vector<IngestError> errors;
};

// path may be a file or a directory (scanned in sorted order, non-recursive
// for files of known header). Malformed entries produce error records.
// Throws when the path is unreadable or no valid code is found.
IngestResult ingest(const std::string& path);

struct ScreeningRecord {
    std::string id;
    std::size_t n = 0;
    int k = 0;
    std::optional<std::size_t> distance;
    BigRat b_at_minus_half;
    bool distills = false;
    std::string classification;
    std::optional<std::size_t> delta;
    BigRat leading;
    double threshold = 0.0;
    BigRat success_at_zero;
    std::string enumerator_digest;
    std::int64_t wall_time_ms = 0;
};

struct ScreenOptions {
    std::uint64_t mem_cap = kDefaultMemCap;
};

ScreeningRecord screen(const IngestedCode& code, const ScreenOptions& opt = {});

// Digest of the canonical A(z) serialization (with the n= header), so equal
// digests imply an identical enumerator at the same length.
std::string enumerator_digest(const WeightEnumerator& a);

struct SearchReport {
    std::vector<ScreeningRecord> records;          // canonical order
    std::map<std::string, std::size_t> summary;    // classification -> count
    std::size_t distinct_enumerators = 0;
    std::optional<double> spearman;  // success vs threshold rank correlation
};

// Groups by digest, orders records by (n, threshold desc, id).
SearchReport dedupe(std::vector<ScreeningRecord> records);

// CSV columns:
// id,n,k,distance,b_num,b_den,distills,classification,delta,leading_num,
// leading_den,threshold,success_num,success_den,enumerator_digest,wall_time_ms
void write_report_csv(const SearchReport& report, std::ostream& out);
void write_report_json(const SearchReport& report, std::ostream& out);
SearchReport read_report_json(std::istream& in);

struct SearchOptions {
    int jobs = 1;
    std::uint64_t mem_cap = kDefaultMemCap;
};

// Parallel screen of everything under path, merged in canonical order.
SearchReport run_search(const std::string& path, const SearchOptions& opt = {});

// Spearman rank correlation with tie-averaged ranks; nullopt for fewer than
// two points or zero variance.
std::optional<double> spearman_rank(const std::vector<std::pair<double, double>>& xy);

}  // namespace qmsd
