#include "ds/descartes.hpp"
#include "ds/geometry.hpp"
#include "ds/sequences.hpp"
#include "ds/solvers.hpp"
#include "ds/tables.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int cmd_table(int id, long long bound, const std::string& format) {
    ds::Table t = ds::make_table(id, bound);
    if (format == "csv") {
        std::cout << ds::to_csv(t);
    } else if (format == "md") {
        std::cout << ds::to_markdown(t);
    } else if (format == "json") {
        std::cout << ds::to_json(t);
    } else {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
    }
    return 0;
}

int cmd_crosscheck(long long c3_max) {
    auto rep = ds::crosscheck(c3_max);
    std::cout << "c3_max " << rep.c3_max << ": enumerated " << rep.enumerated
              << ", solved " << rep.solved << "\n";
    for (const auto& k : rep.missing) std::cout << "missing from solvers: " << k << "\n";
    for (const auto& k : rep.extra) std::cout << "extra from solvers: " << k << "\n";
    std::cout << (rep.ok() ? "OK" : "MISMATCH") << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_figure(const std::string& triple_str, const std::string& out_path) {
    long long c1, c2, c3;
    if (std::sscanf(triple_str.c_str(), "%lld,%lld,%lld", &c1, &c2, &c3) != 3) {
        std::cerr << "expected --triple c1,c2,c3\n";
        return 2;
    }
    ds::CurvatureTriple t{c1, c2, c3};
    if (!t.valid()) {
        std::cerr << "triple must satisfy 0 < c1 <= c2 <= c3\n";
        return 2;
    }
    auto q5 = ds::quintuple(t);
    ds::CircleScene scene = ds::place_triple(t);
    ds::add_apollonius_circles(scene);
    if (q5 && q5->c4m == 0) ds::add_tangent_line(scene);
    std::string svg = ds::render_svg(scene);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << svg;
    return 0;
}

int cmd_areas(const std::string& a_str) {
    long long p, q = 1;
    int n = std::sscanf(a_str.c_str(), "%lld/%lld", &p, &q);
    if (n < 1 || p <= 0 || q <= 0) {
        std::cerr << "expected --a p/q with positive integers\n";
        return 2;
    }
    auto area = ds::classical_area(ds::Rational(ds::Int(p), ds::Int(q)));
    std::cout << "a = " << p;
    if (q != 1) std::cout << "/" << q;
    std::cout << "\n";
    std::cout << "F/pi        = " << area.f_over_pi.str() << "\n";
    std::cout << "F'/pi       = " << area.f_prime_over_pi.str() << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", area.f);
    std::cout << "F           = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.12g", area.f_prime);
    std::cout << "F'          = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.12g", area.lambda);
    std::cout << "lambda      = " << buf << "\n";
    return 0;
}

int cmd_seq_verify(const std::string& id) {
    auto chk = ds::verify_sequence(id);
    std::cout << chk.id << ": compared " << chk.compared << " terms, ";
    if (chk.ok) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << "MISMATCH at index " << chk.first_mismatch << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Descartes circle theorem integer triples"};
    app.require_subcommand(1);

    int table_id = 1;
    long long table_bound = 0;
    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "print one of the six tables");
    table->add_option("--id", table_id, "table number 1..6")->required();
    table->add_option("--bound", table_bound, "range limit (0 = reference default)");
    table->add_option("--format", table_format, "csv, md or json");

    long long c3_max = 100;
    auto* cross = app.add_subcommand("crosscheck",
                                     "compare structured solvers against brute force");
    cross->add_option("--c3-max", c3_max, "largest c3 to check");

    std::string triple_str, out_path;
    auto* figure = app.add_subcommand("figure", "render a triple as SVG");
    figure->add_option("--triple", triple_str, "curvatures c1,c2,c3")->required();
    figure->add_option("--out", out_path, "output SVG path")->required();

    std::string a_str;
    auto* areas = app.add_subcommand("areas", "classical area problem for ratio a");
    areas->add_option("--a", a_str, "ratio as p or p/q")->required();

    std::string seq_id;
    auto* seq = app.add_subcommand("seq", "integer sequence utilities");
    auto* verify = seq->add_subcommand("verify", "check a sequence against its snapshot");
    verify->add_option("--id", seq_id, "A-number, e.g. A058529")->required();
    seq->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(table_id, table_bound, table_format);
        if (cross->parsed()) return cmd_crosscheck(c3_max);
        if (figure->parsed()) return cmd_figure(triple_str, out_path);
        if (areas->parsed()) return cmd_areas(a_str);
        if (seq->parsed() && verify->parsed()) return cmd_seq_verify(seq_id);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
