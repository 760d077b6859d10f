// Command-line front end: enumeration dumps, generating functions by any
// route, statistics of supplied objects, x-enumeration, and the
// cross-verification harness.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "astenum/ast.hpp"
#include "astenum/csspp.hpp"
#include "astenum/formulas.hpp"
#include "astenum/paths.hpp"
#include "astenum/trees.hpp"
#include "astenum/verify.hpp"

namespace {

using namespace astenum;

constexpr long long kMaxSearchNodes = 100'000'000;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        file << text;
        if (!text.empty() && text.back() != '\n') file << '\n';
    }
};

std::vector<nlohmann::json> read_json_lines(const std::string& in_path) {
    std::vector<nlohmann::json> objects;
    auto consume = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            objects.push_back(nlohmann::json::parse(line));
        }
    };
    if (in_path.empty()) {
        consume(std::cin);
    } else {
        std::ifstream file(in_path);
        if (!file) throw std::runtime_error("cannot open input file '" + in_path + "'");
        consume(file);
    }
    return objects;
}

std::string polynomial_output(const LaurentPolynomial& p, const std::string& format,
                              const std::string& csv_header, const std::string& csv_prefix) {
    if (format == "json") return p.to_json().dump();
    if (format == "csv")
        return csv_header + "\n" + csv_prefix + verify::csv_quote(p.to_text()) + "\n";
    return p.to_text();
}

std::string ast_text_block(const Ast& a) {
    std::ostringstream out;
    for (int i = 0; i < a.n(); ++i) {
        for (int pad = 0; pad < i; ++pad) out << "   ";
        const auto& row = a.rows()[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << " ";
            out << std::setw(2) << row[c];
        }
        out << "\n";
    }
    return out.str();
}

void guard_enumeration(const BigInt& objects, int n, bool force) {
    if (force) return;
    // coarse node estimate: object count times cells per object
    const BigInt nodes = objects * BigInt(n) * BigInt(n + 4);
    if (nodes > kMaxSearchNodes)
        throw std::invalid_argument("enumeration would visit roughly " + nodes.str() +
                                    " search nodes; rerun with --force to proceed");
}

int command_verify(int max_n, int max_l, int quasi_n, int jobs, const std::string& format,
                   const Output& out) {
    verify::Suite suite = verify::standard_suite(max_n, max_l, quasi_n);
    auto results = suite.run(jobs);
    if (format == "json") out.write(verify::report_json(results).dump(2));
    else if (format == "csv") out.write(verify::report_csv(results));
    else out.write(verify::report_text(results));
    return verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact enumeration and verification of alternating sign trapezoids"};
    app.require_subcommand(1);

    int n = 1, l = 1, k = 0, d = 0, i = 0, j = 0, jobs = 1;
    int max_n = 3, max_l = 4, quasi_n = 4;
    std::string format = "text", out_path, in_path, x_text = "1";
    bool force = false;
    int exit_code = 0;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    };
    auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    // ast -------------------------------------------------------------------
    auto* ast_cmd = app.add_subcommand("ast", "alternating sign trapezoids");
    ast_cmd->require_subcommand(1);

    auto* ast_enum = ast_cmd->add_subcommand("enumerate", "stream every (n,l) trapezoid");
    ast_enum->add_option("--n", n, "number of rows")->required();
    ast_enum->add_option("--l", l, "width parameter")->required();
    ast_enum->add_flag("--force", force, "skip the search-size guard");
    add_format(ast_enum);
    add_out(ast_enum);
    ast_enum->callback([&] {
        guard_enumeration(andrews_count(n, l), n, force);
        std::ostringstream buffer;
        long long index = 0;
        ast_enumerate(n, l, [&](const Ast& a) {
            if (format == "json") buffer << a.to_json().dump() << "\n";
            else if (format == "csv")
                buffer << index << "," << n << "," << l << ","
                       << verify::csv_quote(nlohmann::json(a.rows()).dump()) << "\n";
            else buffer << ast_text_block(a) << "\n";
            ++index;
        });
        std::string body = buffer.str();
        if (format == "csv") body = "index,n,l,rows\n" + body;
        Output{out_path}.write(body);
    });

    auto* ast_gf = ast_cmd->add_subcommand("genfunc", "fourfold generating function by enumeration");
    ast_gf->add_option("--n", n)->required();
    ast_gf->add_option("--l", l)->required();
    ast_gf->add_option("--jobs", jobs, "worker threads");
    add_format(ast_gf);
    add_out(ast_gf);
    ast_gf->callback([&] {
        auto z = ast_genfunc(n, l, jobs);
        Output{out_path}.write(polynomial_output(
            z, format, "n,l,genfunc", std::to_string(n) + "," + std::to_string(l) + ","));
    });

    auto* ast_stats_cmd = ast_cmd->add_subcommand(
        "stats", "statistics of trapezoids supplied as JSON lines on stdin or --in");
    ast_stats_cmd->add_option("--in", in_path, "read JSON lines from a file");
    add_format(ast_stats_cmd);
    add_out(ast_stats_cmd);
    ast_stats_cmd->callback([&] {
        std::ostringstream buffer;
        if (format == "csv") buffer << "n,l,q,r,s,t,central_ten,weight\n";
        for (const auto& object : read_json_lines(in_path)) {
            Ast a = Ast::from_json(object);
            AstStats st = ast_statistics(a);
            auto w = ast_weight(a);
            if (format == "json") {
                buffer << nlohmann::json{{"n", a.n()},
                                         {"l", a.l()},
                                         {"q", st.q},
                                         {"r", st.r},
                                         {"s", st.s},
                                         {"t", st.t},
                                         {"central_ten", st.central_ten},
                                         {"weight", w.to_json()}}
                              .dump()
                       << "\n";
            } else if (format == "csv") {
                buffer << a.n() << "," << a.l() << "," << st.q << "," << st.r << "," << st.s << ","
                       << st.t << "," << st.central_ten << "," << verify::csv_quote(w.to_text())
                       << "\n";
            } else {
                buffer << "q=" << st.q << " r=" << st.r << " s=" << st.s << " t=" << st.t
                       << " central_ten=" << st.central_ten << " weight=" << w.to_text() << "\n";
            }
        }
        Output{out_path}.write(buffer.str());
    });

    auto* ast_xenum = ast_cmd->add_subcommand("xenum", "sum of x^q over all (n,l) trapezoids");
    ast_xenum->add_option("--n", n)->required();
    ast_xenum->add_option("--l", l)->required();
    ast_xenum->add_option("--x", x_text, "exact rational, e.g. 2 or 3/2")->required();
    add_format(ast_xenum);
    add_out(ast_xenum);
    ast_xenum->callback([&] {
        BigRational value = ast_x_enumeration(n, l, parse_rational(x_text));
        if (format == "json")
            Output{out_path}.write(
                nlohmann::json{{"n", n}, {"l", l}, {"x", x_text}, {"value", value.str()}}.dump());
        else if (format == "csv")
            Output{out_path}.write("n,l,x,value\n" + std::to_string(n) + "," + std::to_string(l) +
                                   "," + verify::csv_quote(x_text) + "," + value.str() + "\n");
        else Output{out_path}.write(value.str());
    });

    // csspp -----------------------------------------------------------------
    auto* csspp_cmd = app.add_subcommand("csspp", "column strict shifted plane partitions");
    csspp_cmd->require_subcommand(1);

    auto* csspp_enum = csspp_cmd->add_subcommand("enumerate", "stream every class-k partition");
    csspp_enum->add_option("--n", n, "bound on parts in the first row")->required();
    csspp_enum->add_option("--k", k, "class")->required();
    csspp_enum->add_flag("--force", force, "skip the search-size guard");
    add_format(csspp_enum);
    add_out(csspp_enum);
    csspp_enum->callback([&] {
        guard_enumeration(andrews_count(n, k + 1), n, force);
        std::ostringstream buffer;
        long long index = 0;
        csspp_enumerate(n, k, [&](const Csspp& p) {
            if (format == "json") buffer << p.to_json().dump() << "\n";
            else if (format == "csv")
                buffer << index << "," << n << "," << k << ","
                       << verify::csv_quote(nlohmann::json(p.rows()).dump()) << "\n";
            else {
                if (p.empty()) buffer << "(empty)\n";
                for (int row = 0; row < p.num_rows(); ++row) {
                    for (int pad = 0; pad < row; ++pad) buffer << "  ";
                    const auto& parts = p.rows()[static_cast<std::size_t>(row)];
                    for (std::size_t c = 0; c < parts.size(); ++c)
                        buffer << (c ? " " : "") << parts[c];
                    buffer << "\n";
                }
                buffer << "\n";
            }
            ++index;
        });
        std::string body = buffer.str();
        if (format == "csv") body = "index,n,class,rows\n" + body;
        Output{out_path}.write(body);
    });

    auto* csspp_gf = csspp_cmd->add_subcommand("genfunc", "generating function for statistics d");
    csspp_gf->add_option("--n", n)->required();
    csspp_gf->add_option("--k", k)->required();
    csspp_gf->add_option("--d", d)->required();
    add_format(csspp_gf);
    add_out(csspp_gf);
    csspp_gf->callback([&] {
        auto z = csspp_genfunc(n, k, d);
        Output{out_path}.write(polynomial_output(z, format, "n,k,d,genfunc",
                                                 std::to_string(n) + "," + std::to_string(k) +
                                                     "," + std::to_string(d) + ","));
    });

    auto* csspp_count_cmd = csspp_cmd->add_subcommand("count", "number of class-k partitions");
    csspp_count_cmd->add_option("--n", n)->required();
    csspp_count_cmd->add_option("--k", k)->required();
    add_format(csspp_count_cmd);
    add_out(csspp_count_cmd);
    csspp_count_cmd->callback([&] {
        BigInt count = csspp_count(n, k);
        if (format == "json")
            Output{out_path}.write(
                nlohmann::json{{"n", n}, {"k", k}, {"count", count.str()}}.dump());
        else if (format == "csv")
            Output{out_path}.write("n,k,count\n" + std::to_string(n) + "," + std::to_string(k) +
                                   "," + count.str() + "\n");
        else Output{out_path}.write(count.str());
    });

    // det -------------------------------------------------------------------
    auto* det_cmd = app.add_subcommand("det", "binomial determinant route");
    det_cmd->require_subcommand(1);

    auto* det_gf = det_cmd->add_subcommand("genfunc", "generating function as a determinant");
    det_gf->add_option("--n", n)->required();
    det_gf->add_option("--l", l)->required();
    add_format(det_gf);
    add_out(det_gf);
    det_gf->callback([&] {
        auto z = det_formula_genfunc(n, l);
        Output{out_path}.write(polynomial_output(
            z, format, "n,l,genfunc", std::to_string(n) + "," + std::to_string(l) + ","));
    });

    auto* det_entry_cmd = det_cmd->add_subcommand("entry", "single matrix entry");
    det_entry_cmd->add_option("--i", i)->required();
    det_entry_cmd->add_option("--j", j)->required();
    det_entry_cmd->add_option("--l", l)->required();
    add_format(det_entry_cmd);
    add_out(det_entry_cmd);
    det_entry_cmd->callback([&] {
        auto e = det_entry(i, j, l);
        Output{out_path}.write(polynomial_output(e, format, "i,j,l,entry",
                                                 std::to_string(i) + "," + std::to_string(j) +
                                                     "," + std::to_string(l) + ","));
    });

    // lgv -------------------------------------------------------------------
    auto* lgv_cmd = app.add_subcommand("lgv", "nonintersecting lattice path route");
    lgv_cmd->require_subcommand(1);
    auto* lgv_gf = lgv_cmd->add_subcommand("genfunc", "generating function via path families");
    lgv_gf->add_option("--n", n)->required();
    lgv_gf->add_option("--l", l)->required();
    lgv_gf->add_option("--d", d)->required();
    add_format(lgv_gf);
    add_out(lgv_gf);
    lgv_gf->callback([&] {
        auto z = lgv_genfunc(n, l, d);
        Output{out_path}.write(polynomial_output(z, format, "n,l,d,genfunc",
                                                 std::to_string(n) + "," + std::to_string(l) +
                                                     "," + std::to_string(d) + ","));
    });

    // tree ------------------------------------------------------------------
    auto* tree_cmd = app.add_subcommand("tree", "truncated monotone triangles");
    tree_cmd->require_subcommand(1);

    auto* tree_map = tree_cmd->add_subcommand(
        "map", "map trapezoids (JSON lines on stdin or --in) to their trees");
    tree_map->add_option("--in", in_path, "read JSON lines from a file");
    add_out(tree_map);
    tree_map->callback([&] {
        std::ostringstream buffer;
        for (const auto& object : read_json_lines(in_path)) {
            Ast a = Ast::from_json(object);
            buffer << ast_to_tree(a).to_json().dump() << "\n";
        }
        Output{out_path}.write(buffer.str());
    });

    auto* tree_rt =
        tree_cmd->add_subcommand("roundtrip", "exhaustive tree round-trip check for (n,l)");
    tree_rt->add_option("--n", n)->required();
    tree_rt->add_option("--l", l)->required();
    add_out(tree_rt);
    tree_rt->callback([&] {
        long long objects = 0;
        std::string failure;
        ast_enumerate(n, l, [&](const Ast& a) {
            if (!failure.empty()) return;
            ++objects;
            TruncatedTree tree = ast_to_tree(a);
            if (!(tree_to_ast(tree, l) == a)) failure = "round trip mismatch";
            else if (tree_special_count(tree) != ast_statistics(a).q)
                failure = "special-entry count mismatch";
        });
        if (failure.empty()) {
            Output{out_path}.write("checked " + std::to_string(objects) +
                                   " trapezoids: round trips and -1 transport agree");
        } else {
            Output{out_path}.write("FAIL after " + std::to_string(objects) +
                                   " trapezoids: " + failure);
            exit_code = 1;
        }
    });

    // twoenum -----------------------------------------------------------------
    auto* twoenum_cmd = app.add_subcommand("twoenum", "2-enumeration product formula (l >= 2)");
    twoenum_cmd->add_option("--n", n, "number of rows")->required();
    twoenum_cmd->add_option("--l", l)->required();
    add_format(twoenum_cmd);
    add_out(twoenum_cmd);
    twoenum_cmd->callback([&] {
        ProductFormulaResult result = two_enum_product(n, l);
        if (format == "json")
            Output{out_path}.write(nlohmann::json{{"n_rows", result.n_rows},
                                                  {"l", result.l},
                                                  {"branch", result.branch},
                                                  {"value", result.value.str()}}
                                       .dump());
        else if (format == "csv")
            Output{out_path}.write("n_rows,l,branch,value\n" + std::to_string(result.n_rows) +
                                   "," + std::to_string(result.l) + "," + result.branch + "," +
                                   result.value.str() + "\n");
        else Output{out_path}.write(result.value.str());
    });

    // verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-verification harness");
    verify_cmd->add_option("--max-n", max_n, "largest n for enumeration checks")
        ->capture_default_str();
    verify_cmd->add_option("--max-l", max_l, "largest l for enumeration checks")
        ->capture_default_str();
    verify_cmd->add_option("--quasi-n", quasi_n, "largest quasi order for x-enumeration rows")
        ->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    add_format(verify_cmd);
    add_out(verify_cmd);
    verify_cmd->callback([&] {
        exit_code = command_verify(max_n, max_l, quasi_n, jobs, format, Output{out_path});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}
