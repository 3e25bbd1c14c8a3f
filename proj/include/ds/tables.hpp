#pragma once

#include "ds/arith.hpp"

#include <string>
#include <vector>

namespace ds {

// Generic stringly-typed table: a header plus rows, rendered to CSV,
// Markdown or JSON.  All cell values are already formatted.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// The six reference tables.  `bound` limits the leading parameter of each
// table (n for tables 1 and 6, c3 for 2, 4, 5, s for 3); bound <= 0 selects
// the reference default range.
Table make_table(int id, i64 bound = 0);

i64 default_table_bound(int id);

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
std::string to_json(const Table& t);

// Result of comparing the structured solver union against the brute-force
// enumeration.
struct CrosscheckReport {
    i64 c3_max = 0;
    i64 enumerated = 0;
    i64 solved = 0;
    std::vector<std::string> missing;  // in enumeration, not produced
    std::vector<std::string> extra;    // produced, not in enumeration
    bool ok() const { return missing.empty() && extra.empty(); }
};

CrosscheckReport crosscheck(i64 c3_max);

}  // namespace ds
