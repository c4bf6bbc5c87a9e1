#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "k2p2/io.hpp"
#include "test_helpers.hpp"

using Catch::Approx;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path("k2p2_test_" + name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("format_real writes 17 significant digits", "[io]") {
    CHECK(k2p2::io::format_real(0.07529216973493920) == "7.5292169734939199e-02");
    CHECK(k2p2::io::format_real(0.0) == "0.0000000000000000e+00");
    CHECK(k2p2::io::format_real(-1.0) == "-1.0000000000000000e+00");
}

TEST_CASE("format/parse round-trips doubles bit-exactly", "[io]") {
    for (int trial = 0; trial < 1000; ++trial) {
        const double scale = std::pow(10.0, k2p2::testing::uniform(-12.0, 12.0));
        const double x = k2p2::testing::uniform(-1.0, 1.0) * scale;
        const std::string text = k2p2::io::format_real(x);
        CHECK(k2p2::io::parse_real(text, 1) == x);
        CHECK(k2p2::io::format_real(k2p2::io::parse_real(text, 1)) == text);
    }
}

TEST_CASE("parse_real rejects malformed fields", "[io]") {
    CHECK_THROWS_AS(k2p2::io::parse_real("abc", 3), k2p2::ParseError);
    CHECK_THROWS_AS(k2p2::io::parse_real("1.5x", 3), k2p2::ParseError);
    CHECK_THROWS_AS(k2p2::io::parse_real("", 7), k2p2::ParseError);
    try {
        k2p2::io::parse_real("bogus", 42);
        FAIL("expected ParseError");
    } catch (const k2p2::ParseError& e) {
        CHECK(e.line == 42);
    }
}

TEST_CASE("read_samples accepts a well-formed file", "[io]") {
    const TempFile file("samples_good.csv",
                        "beta,x,value\n"
                        "0,0.0,0.0\n"
                        "1,0.2,0.04\n"
                        "2,0.4,0.16\n"
                        "3,0.6,0.36\n"
                        "4,0.8,0.64\n"
                        "5,1.0,1.0\n");
    const auto samples = k2p2::io::read_samples(file.path, 1.0);
    CHECK(samples.params.n_intervals == 5);
    CHECK(samples.params.omega == 1.0);
    REQUIRE(samples.values.size() == 6);
    CHECK(samples.values[2] == 0.16);
    CHECK(samples.values[5] == 1.0);
}

TEST_CASE("read_samples rejects a single-row file", "[io]") {
    const TempFile file("samples_short.csv", "beta,x,value\n0,0.0,1.0\n");
    CHECK_THROWS_AS(k2p2::io::read_samples(file.path, 1.0), k2p2::BadNError);
}

TEST_CASE("read_samples rejects off-node abscissae", "[io]") {
    // x spaced by 0.25 cannot be the nodes of N = 5
    const TempFile file("samples_offnode.csv",
                        "beta,x,value\n"
                        "0,0.0,0.0\n"
                        "1,0.25,0.0\n"
                        "2,0.5,0.0\n"
                        "3,0.75,0.0\n"
                        "4,1.0,0.0\n"
                        "5,1.25,0.0\n");
    CHECK_THROWS_AS(k2p2::io::read_samples(file.path, 1.0), k2p2::NodeMismatchError);
}

TEST_CASE("read_samples reports parse failures with line numbers", "[io]") {
    const TempFile file("samples_bad.csv",
                        "beta,x,value\n"
                        "0,0.0,0.0\n"
                        "1,0.5,oops\n"
                        "2,1.0,0.0\n");
    try {
        k2p2::io::read_samples(file.path, 1.0);
        FAIL("expected ParseError");
    } catch (const k2p2::ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("read_samples requires the header and ordered beta", "[io]") {
    const TempFile no_header("samples_nohdr.csv", "0,0.0,0.0\n1,1.0,1.0\n");
    CHECK_THROWS_AS(k2p2::io::read_samples(no_header.path, 1.0), k2p2::ParseError);

    const TempFile shuffled("samples_shuffled.csv",
                            "beta,x,value\n"
                            "1,0.5,0.0\n"
                            "0,0.0,0.0\n"
                            "2,1.0,0.0\n");
    CHECK_THROWS_AS(k2p2::io::read_samples(shuffled.path, 1.0), k2p2::ParseError);
}

TEST_CASE("read_samples tolerates CRLF and blank lines", "[io]") {
    const TempFile file("samples_crlf.csv",
                        "beta,x,value\r\n"
                        "0,0.0,1.0\r\n"
                        "\r\n"
                        "1,1.0,2.0\r\n");
    const auto samples = k2p2::io::read_samples(file.path, 1.0);
    CHECK(samples.params.n_intervals == 1);
    CHECK(samples.values[1] == 2.0);
}

TEST_CASE("a coefficients table re-emits byte-identically", "[io]") {
    std::vector<double> row{0.3, 1.25e-14, -0.73214, 3.0, 9.999999999999999e+5};
    const std::string line = k2p2::io::join_row(row);
    const auto fields = k2p2::io::split_csv_line(line);
    REQUIRE(fields.size() == row.size());
    std::vector<double> parsed;
    for (const auto& f : fields) parsed.push_back(k2p2::io::parse_real(f, 1));
    CHECK(k2p2::io::join_row(parsed) == line);
    CHECK(k2p2::io::coefficients_header(2) == "z,C_0,C_1,C_2");
}
