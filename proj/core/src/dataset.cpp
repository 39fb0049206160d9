#include <cubictorsion/dataset.hpp>

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ct {

namespace {

// strict integer literal: optional sign, one or more digits
bool parse_int(const std::string& s, Int& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = Int(s);
    return true;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Curve CurveRecord::curve() const {
    return Curve::from_long(a[0], a[1], a[2], a[3], a[4], label);
}

IngestResult ingest(std::istream& in) {
    IngestResult out;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<std::string> cells;
        std::stringstream ss(body);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
        if (!body.empty() && body.back() == ',') cells.push_back("");

        bool was_first = first_row;
        first_row = false;
        if (cells.size() != 6) {
            out.errors.push_back(
                {lineno, "expected 6 comma-separated fields, got " +
                             std::to_string(cells.size())});
            continue;
        }
        CurveRecord rec;
        rec.label = cells[0];
        bool numeric = true;
        for (int i = 0; i < 5; ++i)
            if (!parse_int(cells[i + 1], rec.a[i])) numeric = false;
        if (!numeric) {
            // tolerate a single header row like `label,a1,a2,a3,a4,a6`
            if (was_first && cells[0] == "label") continue;
            out.errors.push_back({lineno, "non-integer coefficient"});
            continue;
        }
        if (rec.label.empty()) {
            out.errors.push_back({lineno, "empty label"});
            continue;
        }
        if (!seen.insert(rec.label).second) {
            out.errors.push_back({lineno, "duplicate label " + rec.label});
            continue;
        }
        try {
            (void)rec.curve();
        } catch (const std::invalid_argument&) {
            out.errors.push_back(
                {lineno, "singular curve " + rec.label + " (disc = 0)"});
            continue;
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

IngestResult ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    return ingest(in);
}

std::string emit_csv(const std::vector<CurveRecord>& records) {
    std::ostringstream os;
    os << "label,a1,a2,a3,a4,a6\n";
    for (const auto& r : records) {
        os << r.label;
        for (const auto& ai : r.a) os << "," << ai.get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace ct
