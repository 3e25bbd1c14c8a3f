#include "ds/tables.hpp"

#include "ds/descartes.hpp"
#include "ds/solvers.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ds {

namespace {

std::string num(i64 v) { return std::to_string(v); }

std::string join_tuple(const std::vector<i64>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); i++) {
        if (i) s += " ";
        s += num(t[i]);
    }
    return s;
}

Table table_equal_pairs(i64 n_max) {
    Table t{"equal_pair_triples",
            {"n", "m", "type", "c1", "c2", "c3", "q", "c4m", "c4p"},
            {}};
    for (const auto& p : m_pairs(n_max)) {
        for (const auto& e : equal_pair_triples(p)) {
            t.rows.push_back({num(p.n), num(p.m), num(e.type), num(e.q5.t.c1),
                              num(e.q5.t.c2), num(e.q5.t.c3), num(e.q5.q),
                              num(e.q5.c4m), num(e.q5.c4p)});
        }
    }
    return t;
}

bool distinct(const CurvatureTriple& t) { return t.c1 < t.c2 && t.c2 < t.c3; }

Table table_distinct(i64 c3_max) {
    Table t{"distinct_triples", {"c3", "c1", "c2", "q", "c4m", "c4p"}, {}};
    for (const auto& q5 : enumerate_primitive_ds(c3_max)) {
        if (!distinct(q5.t)) continue;
        t.rows.push_back({num(q5.t.c3), num(q5.t.c1), num(q5.t.c2), num(q5.q),
                          num(q5.c4m), num(q5.c4p)});
    }
    return t;
}

Table table_case_i(i64 s_max) {
    Table t{"q_equals_c3", {"s", "x", "y", "X", "Y", "q", "t_I", "t_II"}, {}};
    for (const auto& row : solve_case_i(s_max)) {
        t.rows.push_back({num(row.s), num(row.x), num(row.y), num(row.XY.X),
                          num(row.XY.Y), num(row.q), join_tuple(row.t_I),
                          join_tuple(row.t_II)});
    }
    return t;
}

// Tables of the q = c3 -+ k cases; every column is determined by the triple
// via the table legend parametrization: k = |c3 - q|, X = c2 - c1,
// Yhat = c1 + c2 +- k, t = c3 + q - Yhat, a = t^2 + 2 k^2.
Table table_case_ii_iii(i64 c3_max, int sign) {
    Table t{sign < 0 ? "q_below_c3" : "q_above_c3",
            {"c3", "X", "Yhat", "c1", "c2", "q", "k", "t", "a", "c4m", "c4p"},
            {}};
    for (const auto& q5 : enumerate_primitive_ds(c3_max)) {
        if (!distinct(q5.t)) continue;
        i64 k = sign * (q5.q - q5.t.c3);
        if (k < 1) continue;
        i64 X = q5.t.c2 - q5.t.c1;
        i64 Yhat = q5.t.c1 + q5.t.c2 + (sign < 0 ? k : -k);
        i64 tt = q5.t.c3 + q5.q - Yhat;
        i64 a = tt * tt + 2 * k * k;
        if (X * X - 2 * Yhat * Yhat != -a)
            throw std::logic_error("table_case_ii_iii: parametrization failed");
        t.rows.push_back({num(q5.t.c3), num(X), num(Yhat), num(q5.t.c1),
                          num(q5.t.c2), num(q5.q), num(k), num(tt), num(a),
                          num(q5.c4m), num(q5.c4p)});
    }
    return t;
}

Table table_zero_c4(i64 n_max) {
    Table t{"zero_c4_triples", {"n", "c1", "c2", "c3", "q", "c4m", "c4p"}, {}};
    for (i64 n = 2; n <= n_max; n++) {
        for (const auto& q5 : zero_c4_triples(n)) {
            t.rows.push_back({num(n), num(q5.t.c1), num(q5.t.c2), num(q5.t.c3),
                              num(q5.q), num(q5.c4m), num(q5.c4p)});
        }
    }
    return t;
}

}  // namespace

i64 default_table_bound(int id) {
    switch (id) {
        case 1: return 17;   // n
        case 2: return 38;   // c3
        case 3: return 313;  // s
        case 4: return 37;   // c3
        case 5: return 35;   // c3
        case 6: return 24;   // n
    }
    throw std::invalid_argument("unknown table id " + std::to_string(id));
}

Table make_table(int id, i64 bound) {
    if (bound <= 0) bound = default_table_bound(id);
    switch (id) {
        case 1: return table_equal_pairs(bound);
        case 2: return table_distinct(bound);
        case 3: return table_case_i(bound);
        case 4: return table_case_ii_iii(bound, -1);
        case 5: return table_case_ii_iii(bound, +1);
        case 6: return table_zero_c4(bound);
    }
    throw std::invalid_argument("unknown table id " + std::to_string(id));
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); i++) {
        if (i) line += ",";
        line += csv_field(cells[i]);
    }
    return line + "\r\n";
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out = csv_row(t.columns);
    for (const auto& r : t.rows) out += csv_row(r);
    return out;
}

std::string to_markdown(const Table& t) {
    auto row = [](const std::vector<std::string>& cells) {
        std::string line = "|";
        for (const auto& c : cells) line += " " + c + " |";
        return line + "\n";
    };
    std::string out = row(t.columns);
    out += "|";
    for (size_t i = 0; i < t.columns.size(); i++) out += " --- |";
    out += "\n";
    for (const auto& r : t.rows) out += row(r);
    return out;
}

std::string to_json(const Table& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j.dump(2) + "\n";
}

CrosscheckReport crosscheck(i64 c3_max) {
    CrosscheckReport rep;
    rep.c3_max = c3_max;
    auto brute = enumerate_primitive_ds(c3_max);
    auto solved = solve_all(c3_max);
    rep.enumerated = (i64)brute.size();
    rep.solved = (i64)solved.size();

    auto key = [](const DSQuintuple& q5) {
        return num(q5.t.c1) + "," + num(q5.t.c2) + "," + num(q5.t.c3);
    };
    std::set<std::string> b, s;
    for (const auto& q5 : brute) b.insert(key(q5));
    for (const auto& q5 : solved) s.insert(key(q5));
    for (const auto& k : b) {
        if (!s.count(k)) rep.missing.push_back(k);
    }
    for (const auto& k : s) {
        if (!b.count(k)) rep.extra.push_back(k);
    }
    return rep;
}

}  // namespace ds
