#pragma once

// CSV input/output for the command-line driver.
//
// Numbers are written in scientific notation with 17 significant digits,
// so an emitted file re-reads and re-emits byte-identically. Schemas:
//
//   coefficients:  z,C_0,...,C_N
//   errors:        z,N,abs_error
//   norm:          z,N,norm_sq
//   oracle diff:   z,N,max_abs_diff
//   samples input: beta,x,value   (beta = 0..N in order, x = beta/N)

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "k2p2/errors.hpp"
#include "k2p2/interpolator.hpp"
#include "k2p2/space.hpp"

namespace k2p2::io {

// Sample abscissae may deviate from beta/N by at most this much.
inline constexpr double kNodeTol = 1e-12;

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline double parse_real(const std::string& field, int line_number) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE)
        throw ParseError("cannot parse number '" + field + "'", line_number);
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

inline std::string coefficients_header(int n_intervals) {
    std::string header = "z";
    for (int b = 0; b <= n_intervals; ++b) header += ",C_" + std::to_string(b);
    return header;
}

inline std::string join_row(const std::vector<double>& values) {
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += format_real(values[i]);
    }
    return row;
}

// Reads a samples file (header "beta,x,value"); N is the row count minus
// one, and omega completes the space parameters the file cannot carry.
inline SampleSet<double> read_samples(const std::string& path, double omega = 1.0) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open samples file '" + path + "'", 0);

    std::string line;
    std::vector<std::vector<std::string>> rows;
    int line_number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        for (auto& f : fields) {
            while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
            while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.pop_back();
        }
        if (!saw_header) {
            if (fields != std::vector<std::string>{"beta", "x", "value"})
                throw ParseError("expected header 'beta,x,value'", line_number);
            saw_header = true;
            continue;
        }
        if (fields.size() != 3)
            throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                             line_number);
        fields.push_back(std::to_string(line_number));
        rows.push_back(std::move(fields));
    }
    if (!saw_header) throw ParseError("expected header 'beta,x,value'", 1);
    if (rows.size() < 2)
        throw BadNError("samples file must contain at least 2 rows (N >= 1)");

    const int n = static_cast<int>(rows.size()) - 1;
    const auto params = make_space_params(omega, n);
    std::vector<double> values(n + 1);
    for (int b = 0; b <= n; ++b) {
        const int row_line = std::stoi(rows[b][3]);
        const double beta = parse_real(rows[b][0], row_line);
        if (beta != static_cast<double>(b))
            throw ParseError("beta column must run 0.." + std::to_string(n) + " in order",
                             row_line);
        const double x = parse_real(rows[b][1], row_line);
        if (std::abs(x - params.node(b)) > kNodeTol)
            throw NodeMismatchError("x = " + rows[b][1] + " deviates from node " +
                                    std::to_string(b) + "/" + std::to_string(n));
        values[b] = parse_real(rows[b][2], row_line);
    }
    return make_sample_set(params, std::move(values));
}

}  // namespace k2p2::io
