// k2p2 command-line driver.
//
// Emits coefficient tables, absolute-error sweeps, error-functional norm
// profiles, and closed-form vs dense-oracle comparisons for the optimal
// interpolation formula in K2(P2), as CSV or JSON rows over a uniform z
// grid on [0,1].
//
// Exit codes: 0 success, 2 configuration/input error, 3 numerical failure
// (singular or degenerate configuration), 4 oracle-compare mismatch.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k2p2/k2p2.hpp"

namespace {

struct RunConfig {
    double omega = 1.0;
    std::vector<int> n_list{5, 10};
    int grid_size = 1001;
    std::string function = "sine";
    std::string input_path;
    std::string mode;
    std::string format = "csv";
    std::string out_path;
    double oracle_tol = 1e-7;
};

double builtin(const std::string& name, double z) {
    if (name == "square") return z * z;
    if (name == "exp") return std::exp(z);
    return std::sin(z);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void emit(const Table& table, const RunConfig& cfg) {
    std::ostringstream body;
    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["mode"] = cfg.mode;
        doc["omega"] = cfg.omega;
        doc["columns"] = table.columns;
        doc["rows"] = table.rows;
        body << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            body << (i ? "," : "") << table.columns[i];
        body << '\n';
        for (const auto& row : table.rows) {
            // the N column is integral; keep it plain for readability
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) body << ',';
                if (table.columns[i] == "N")
                    body << static_cast<long long>(row[i]);
                else
                    body << k2p2::io::format_real(row[i]);
            }
            body << '\n';
        }
    }
    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw k2p2::Error("cannot open output file '" + cfg.out_path + "'");
        out << body.str();
    }
}

int run(const RunConfig& cfg) {
    std::vector<k2p2::SpaceParams<double>> params_list;
    std::optional<k2p2::SampleSet<double>> file_samples;
    if (cfg.function == "file") {
        file_samples = k2p2::io::read_samples(cfg.input_path, cfg.omega);
        params_list.push_back(file_samples->params);
    } else {
        for (int n : cfg.n_list) params_list.push_back(k2p2::make_space_params(cfg.omega, n));
    }

    const auto grid_point = [&](int i) {
        return static_cast<double>(i) / static_cast<double>(cfg.grid_size - 1);
    };

    Table table;
    double worst_diff = 0.0;

    if (cfg.mode == "coefficients") {
        const auto& params = params_list.front();
        table.columns.push_back("z");
        for (int b = 0; b <= params.n_intervals; ++b)
            table.columns.push_back("C_" + std::to_string(b));
        for (int i = 0; i < cfg.grid_size; ++i) {
            const double z = grid_point(i);
            const auto coeffs = k2p2::optimal_coefficients(z, params);
            std::vector<double> row{z};
            row.insert(row.end(), coeffs.coeffs.begin(), coeffs.coeffs.end());
            table.rows.push_back(std::move(row));
        }
    } else if (cfg.mode == "errors") {
        table.columns = {"z", "N", "abs_error"};
        for (const auto& params : params_list) {
            const auto samples = cfg.function == "file"
                                     ? *file_samples
                                     : k2p2::sample_function(params, [&](double z) {
                                           return builtin(cfg.function, z);
                                       });
            for (int i = 0; i < cfg.grid_size; ++i) {
                const double z = grid_point(i);
                const auto coeffs = k2p2::optimal_coefficients(z, params);
                const double err =
                    std::abs(builtin(cfg.function, z) - k2p2::interpolate(samples, coeffs));
                table.rows.push_back({z, double(params.n_intervals), err});
            }
        }
    } else if (cfg.mode == "norm") {
        table.columns = {"z", "N", "norm_sq"};
        for (const auto& params : params_list)
            for (int i = 0; i < cfg.grid_size; ++i) {
                const double z = grid_point(i);
                const auto coeffs = k2p2::optimal_coefficients(z, params);
                table.rows.push_back(
                    {z, double(params.n_intervals), k2p2::error_norm_squared(coeffs, params)});
            }
    } else {  // oracle-compare
        table.columns = {"z", "N", "max_abs_diff"};
        for (const auto& params : params_list)
            for (int i = 0; i < cfg.grid_size; ++i) {
                const double z = grid_point(i);
                const auto closed = k2p2::optimal_coefficients(z, params);
                const auto oracle = k2p2::oracle_coefficients(z, params);
                double diff = 0.0;
                for (std::size_t b = 0; b < closed.coeffs.size(); ++b)
                    diff = std::max(diff, std::abs(closed.coeffs[b] - oracle.coeffs[b]));
                worst_diff = std::max(worst_diff, diff);
                table.rows.push_back({z, double(params.n_intervals), diff});
            }
    }

    emit(table, cfg);

    if (cfg.mode == "oracle-compare") {
        std::cerr << "oracle-compare: max |closed - oracle| = " << worst_diff
                  << " (tolerance " << cfg.oracle_tol << ")\n";
        if (worst_diff > cfg.oracle_tol) return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Optimal interpolation in K2(P2) on equally spaced nodes"};
    app.add_option("--mode", cfg.mode, "coefficients | errors | norm | oracle-compare")
        ->required()
        ->check(CLI::IsMember({"coefficients", "errors", "norm", "oracle-compare"}));
    app.add_option("--omega", cfg.omega, "frequency of the space's trig pair (default 1.0)");
    app.add_option("--n", cfg.n_list, "comma-separated interval counts (default 5,10)")
        ->delimiter(',');
    app.add_option("--grid", cfg.grid_size, "z-grid size including endpoints (default 1001)");
    app.add_option("--function", cfg.function, "square | exp | sine | file (default sine)")
        ->check(CLI::IsMember({"square", "exp", "sine", "file"}));
    app.add_option("--input", cfg.input_path, "samples CSV (beta,x,value), for --function file");
    app.add_option("--format", cfg.format, "csv | json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto fail_config = [](const std::string& message) {
        std::cerr << "error: " << message << '\n';
        return 2;
    };

    if (cfg.n_list.empty()) return fail_config("--n must list at least one N");
    for (int n : cfg.n_list)
        if (n < 1) return fail_config("every N must be >= 1");
    if (cfg.grid_size < 2) return fail_config("--grid must be >= 2");
    if ((cfg.function == "file") != !cfg.input_path.empty())
        return fail_config("--input is required iff --function file");
    if (cfg.mode == "errors" && cfg.function == "file")
        return fail_config("--mode errors needs a built-in function (the true values "
                           "off the nodes are unknown for file samples)");
    if (cfg.mode == "coefficients" && cfg.function != "file" && cfg.n_list.size() != 1)
        return fail_config("--mode coefficients expects a single --n value");
    if (const char* tol_env = std::getenv("K2P2_TOL")) {
        char* end = nullptr;
        cfg.oracle_tol = std::strtod(tol_env, &end);
        if (end == tol_env || *end != '\0' || !(cfg.oracle_tol > 0))
            return fail_config("K2P2_TOL must be a positive number");
    }

    try {
        return run(cfg);
    } catch (const k2p2::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const k2p2::NodeMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const k2p2::BadNError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const k2p2::OmegaZeroError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const k2p2::Error& e) {
        // singular / degenerate configurations and other numerical failures
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
