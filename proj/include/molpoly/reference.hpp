#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "molpoly/polyring.hpp"

namespace molpoly::reference {

// Embedded reference data. `text` is CSV with a header row (OBJ holds the polynomial).
struct ReferenceTable {
    std::string id;  // T1, T2, T4, T5, T6, T7, T8, OBJ
    std::string title;
    std::string text;
    std::vector<double> tolerance;  // per column; 0 for labels and exact columns
    std::uint64_t checksum = 0;     // FNV-1a of text as shipped

    std::vector<std::string> columns() const;
    std::vector<std::vector<std::string>> rows() const;
    bool intact() const;
};

std::uint64_t fnv1a(std::string_view s);

const std::vector<ReferenceTable>& tables();
const ReferenceTable& table(const std::string& id);
// Replaces the text of a table for this process, keeping the shipped checksum.
void override_text(const std::string& id, std::string text);

// "0.4050-0.0000j", "-1.1482", "1.938105e-24"
cplx parse_complex(const std::string& s);

// Column `name` of every row, parsed as complex.
std::vector<cplx> column(const ReferenceTable& t, const std::string& name);

// Row-by-row comparison of two CSV texts with the same header; names the first differing cell.
std::string locate_diff(const std::string& expected, const std::string& actual);

// Rows keyed by their first cell, compared column by column under the table's tolerances.
// Each entry names the table, row key and column of one mismatch.
std::vector<std::string> compare(const ReferenceTable& t, const std::vector<std::vector<std::string>>& actual);

Polynomial obj();

}  // namespace molpoly::reference
