#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <cubictorsion/elliptic.hpp>
#include <cubictorsion/rational.hpp>

namespace ct {

// One parsed dataset row: a labelled curve in long Weierstrass form.
struct CurveRecord {
    std::string label;
    std::array<Int, 5> a{};  // a1, a2, a3, a4, a6

    Curve curve() const;  // throws std::invalid_argument when singular
};

struct IngestError {
    int line{};  // 1-based line number in the input
    std::string message;
};

struct IngestResult {
    std::vector<CurveRecord> records;
    std::vector<IngestError> errors;
    bool ok() const { return errors.empty(); }
};

// Parses CSV rows `label,a1,a2,a3,a4,a6`.  An optional header row, blank
// lines and `#` comments are skipped.  Malformed rows (wrong arity,
// non-integer coefficients), duplicate labels and singular curves are
// reported with their line numbers; parsing continues past errors.
IngestResult ingest(std::istream& in);

// Same, reading from a file; throws std::runtime_error when the file cannot
// be opened.
IngestResult ingest(const std::string& path);

// Serializes records in the ingestion format (with header); re-ingesting the
// output reproduces the records exactly.
std::string emit_csv(const std::vector<CurveRecord>& records);

}  // namespace ct
