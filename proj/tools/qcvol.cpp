#include "qcvol/closed_form.hpp"
#include "qcvol/grid.hpp"
#include "qcvol/report.hpp"
#include "qcvol/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Exit-code contract: 0 success, 1 I/O failure, 2 usage error,
// 3 verification mismatch, 4 validation violations.
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyMismatch = 3;
constexpr int kExitViolations = 4;

std::string join_rationals(const std::vector<qcvol::Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += qcvol::to_string(values[i]);
    }
    return out + ")";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text) || !file.flush())
        throw std::ios_base::failure("cannot write \"" + out_path + "\"");
}

int cmd_solve(int dim, const std::string& sign_text, bool as_json) {
    const qcvol::VolumeSign sign = qcvol::volume_sign_from_string(sign_text);
    const qcvol::ClosedFormSolution sol = qcvol::extreme_volume(dim, sign);
    if (as_json) {
        nlohmann::json j;
        j["d"] = sol.d;
        j["sign"] = std::string(qcvol::to_string(sol.sign));
        j["i0"] = sol.i0;
        j["volume"] = qcvol::to_string(sol.volume);
        j["box_a"] = qcvol::to_string(sol.box_edge_a);
        j["box_b"] = qcvol::to_string(sol.box_edge_b);
        nlohmann::json delta = nlohmann::json::array();
        for (const auto& v : sol.delta)
            delta.push_back(qcvol::to_string(v));
        j["delta"] = std::move(delta);
        nlohmann::json levels = nlohmann::json::array();
        for (const auto& v : sol.q_levels)
            levels.push_back(qcvol::to_string(v));
        j["q_levels"] = std::move(levels);
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& v : sol.coeffs)
            coeffs.push_back(qcvol::to_string(v));
        j["coeffs"] = std::move(coeffs);
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& v : sol.w_sequence)
            ws.push_back(qcvol::to_string(v));
        j["w_sequence"] = std::move(ws);
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    std::cout << "dimension   " << sol.d << "\n";
    std::cout << "sign        " << qcvol::to_string(sol.sign) << "\n";
    std::cout << "volume      " << qcvol::to_string(sol.volume) << "\n";
    std::cout << "i0          " << sol.i0 << "\n";
    std::cout << "box         [" << qcvol::to_string(sol.box_edge_a) << ", "
              << qcvol::to_string(sol.box_edge_b) << "]^" << sol.d << "\n";
    std::cout << "delta       " << join_rationals(sol.delta) << "\n";
    std::cout << "q-levels    " << join_rationals(sol.q_levels) << "\n";
    return kExitOk;
}

int cmd_table(int from, int to, const std::string& sign_text, const std::string& format,
              const std::string& out_path) {
    const qcvol::VolumeSign sign = qcvol::volume_sign_from_string(sign_text);
    const auto rows = qcvol::build_table(from, to, sign);
    emit(format == "json" ? qcvol::table_json(rows, sign) + "\n" : qcvol::table_csv(rows),
         out_path);
    return kExitOk;
}

int cmd_plotdata(int from, int to, const std::string& format, const std::string& out_path) {
    const auto records = qcvol::build_plot_records(from, to);
    if (records.empty() && from > to)
        return kExitOk;
    emit(format == "json" ? qcvol::plot_json(records) + "\n" : qcvol::plot_csv(records), out_path);
    return kExitOk;
}

int cmd_realize(int dim, const std::string& sign_text, const std::string& out_path) {
    if (dim > 20) {
        std::cerr << "error: realize is limited to d <= 20 (the grid has 2^d vertices)\n";
        return kExitUsage;
    }
    const qcvol::VolumeSign sign = qcvol::volume_sign_from_string(sign_text);
    const qcvol::ClosedFormSolution sol = qcvol::extreme_volume(dim, sign);
    const qcvol::GridQuasiCopula grid = qcvol::symmetric_grid(sol);
    emit(qcvol::to_json_string(grid) + "\n", out_path);
    const auto violations = qcvol::validate(grid);
    std::cout << "volume " << qcvol::to_string(qcvol::volume(grid)) << "\n";
    std::cout << "violations " << violations.size() << "\n";
    if (!violations.empty()) {
        for (const auto& violation : violations)
            std::cerr << "  " << qcvol::describe(violation) << "\n";
        return kExitViolations;
    }
    return kExitOk;
}

int cmd_verify(int reduced_max, int full_max, bool corrupt) {
    qcvol::VerifyOptions options;
    options.reduced_max = reduced_max;
    options.full_max = full_max;
    options.corrupt_closed_form = corrupt;
    const qcvol::VerifyReport report = qcvol::run_verification(options);
    int failed = 0;
    for (const auto& line : report.lines) {
        std::cout << (line.pass ? "pass" : "FAIL") << "  " << line.check;
        if (!line.detail.empty())
            std::cout << "  [" << line.detail << "]";
        std::cout << "\n";
        failed += line.pass ? 0 : 1;
    }
    std::cout << report.lines.size() - failed << "/" << report.lines.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerifyMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"extreme box volumes of multivariate quasi-copulas, in exact arithmetic"};
    app.require_subcommand(1);

    int dim = 0;
    int from = 0, to = 0;
    std::string sign_text, format = "csv", out_path;
    bool as_json = false;
    int reduced_max = 12, full_max = 4;
    bool corrupt = false;

    auto* solve = app.add_subcommand("solve", "extreme volume and realization for one dimension");
    solve->add_option("--dim", dim, "dimension d")->required();
    solve->add_option("--sign", sign_text, "negative|positive")->required();
    solve->add_flag("--json", as_json, "emit JSON");

    auto* table = app.add_subcommand("table", "extreme volumes over a dimension range");
    table->add_option("--from", from, "first dimension")->required();
    table->add_option("--to", to, "last dimension")->required();
    table->add_option("--sign", sign_text, "negative|positive")->required();
    table->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "write to a file instead of stdout");

    auto* plot = app.add_subcommand("plotdata", "per-dimension records for the growth plots");
    plot->add_option("--from", from, "first dimension")->required();
    plot->add_option("--to", to, "last dimension")->required();
    plot->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    plot->add_option("--out", out_path, "write to a file instead of stdout");

    auto* realize = app.add_subcommand("realize", "write a grid realization as JSON and check it");
    realize->add_option("--dim", dim, "dimension d (at most 20)")->required();
    realize->add_option("--sign", sign_text, "negative|positive")->required();
    realize->add_option("--out", out_path, "output path for the grid JSON")->required();

    auto* verify = app.add_subcommand("verify", "cross-check closed forms against the LP oracle");
    verify->add_option("--reduced-max", reduced_max, "largest d for the reduced-program sweeps");
    verify->add_option("--full-max", full_max, "largest d for the per-vertex program (<= 6)");
    verify->add_flag("--corrupt", corrupt, "test hook: offset closed-form values")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(dim, sign_text, as_json);
        if (table->parsed())
            return cmd_table(from, to, sign_text, format, out_path);
        if (plot->parsed())
            return cmd_plotdata(from, to, format, out_path);
        if (realize->parsed())
            return cmd_realize(dim, sign_text, out_path);
        if (verify->parsed())
            return cmd_verify(reduced_max, full_max, corrupt);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
