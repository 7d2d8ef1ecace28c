#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "qpi/error.hpp"
#include "qpi/report.hpp"

using namespace qpi;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(QPI_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DiagramReport report_for(const std::string& file, ReportOptions opts) {
    return build_diagram_report(diagram_from_text(slurp(file)), file, opts);
}

Int product_from_oracle(const IntMatrix& m, std::uint64_t ell) {
    const auto d = oracle::smith(m);
    Int out = 1;
    for (std::size_t i = 0; i < d.size(); i += 2) out *= Int(static_cast<unsigned long>(ell)) / gcd(d[i], Int(static_cast<unsigned long>(ell)));
    return out;
}

} // namespace

TEST_CASE("3x5 reference diagram report") {
    const DiagramReport r = report_for("ref3x5.txt", {{5}, false, true, true});
    CHECK(r.N == 9);
    CHECK(r.tau == "(1,7)(2,6,3,8,4)");
    CHECK(r.r == 1);
    CHECK(r.kernel_dim == 1);
    CHECK(r.cauchon_le);
    REQUIRE(r.pi_degrees.size() == 1);
    const IntMatrix m = matrix_from_diagram(diagram_from_text(slurp("ref3x5.txt")));
    CHECK(r.pi_degrees[0].value == product_from_oracle(m, 5));
    CHECK(r.pi_degrees[0].value == 625);
    CHECK(r.cycles.size() == 3);
    CHECK(r.kernel.size() == 1);
}

TEST_CASE("extended report of the 3x3 reference diagram") {
    const DiagramReport r = report_for("ref3x3.txt", {{9, 5}, true, false, false});
    CHECK(r.invariant_factors == std::vector<std::string>{"1", "1"});
    REQUIRE(r.extended);
    CHECK(r.extended->invariant_factors == std::vector<std::string>{"1", "1", "3"});
    CHECK(r.extended->kernel_delta == -1);
    REQUIRE(r.extended->pi_degrees.size() == 2);
    CHECK(r.extended->pi_degrees[0].value == 243);
    CHECK(r.extended->pi_degrees[0].exponent == 3);
    CHECK(r.extended->pi_degrees[0].divisor == 3);
    CHECK(r.extended->pi_degrees[1].value == 125);
}

TEST_CASE("even ell in an extended report is labelled") {
    const DiagramReport r = report_for("ref3x3.txt", {{4}, true, false, false});
    REQUIRE(r.extended);
    CHECK(r.extended->pi_degrees[0].method == std::string(kMethodGenericFallback));
    CHECK_FALSE(r.extended->pi_degrees[0].hypothesis_met);
}

TEST_CASE("all-black report") {
    const DiagramReport r = report_for("allblack.txt", {{3}, true, false, false});
    CHECK(r.N == 0);
    CHECK(r.pi_degrees[0].value == 1);
}

TEST_CASE("ell must exceed 2") {
    try {
        report_for("ref3x5.txt", {{2}, false, false, false});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadEll);
    }
}

TEST_CASE("JSON round trip") {
    for (const char* file : {"ref3x5.txt", "ref3x3.txt", "allblack.txt"}) {
        const DiagramReport r = report_for(file, {{3, 4, 9}, true, true, true});
        const json j = report_to_json(r, 64);
        CHECK(report_from_json(json::parse(j.dump())) == r);
    }
}

TEST_CASE("digit budget hides long values but keeps the exponent form") {
    const PiDegree big = pi_degree_power(7, 40, 1, kMethodClosed);
    const json j = pi_degree_to_json(big, 10);
    CHECK(j["value"].is_null());
    CHECK(j["exponent"] == 40);
    CHECK(pi_degree_from_json(j) == big);
    CHECK(format_pi_degree(big, 10).find("digits") != std::string::npos);

    setenv("QPIDEG_DIGIT_BUDGET", "5", 1);
    CHECK(digit_budget() == 5);
    setenv("QPIDEG_DIGIT_BUDGET", "junk", 1);
    CHECK(digit_budget() == 64);
    unsetenv("QPIDEG_DIGIT_BUDGET");
    CHECK(digit_budget() == 64);
}

TEST_CASE("inconsistent JSON is rejected") {
    json j = pi_degree_to_json(pi_degree_power(3, 2, 1, kMethodClosed), 64);
    j["value"] = "10";
    CHECK_THROWS_AS(pi_degree_from_json(j), Error);
}
