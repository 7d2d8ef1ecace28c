#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpi/error.hpp"
#include "qpi/sweep.hpp"

using namespace qpi;

namespace {

const std::string kData = QPI_TEST_DATA;

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::Io;
}

} // namespace

TEST_CASE("corpus specs") {
    const CorpusSpec e = parse_corpus("exhaustive 3x3");
    CHECK(e.kind == CorpusSpec::Kind::Exhaustive);
    CHECK(e.m == 3);
    CHECK(e.n == 3);
    const CorpusSpec r = parse_corpus("random 5x5 x1000");
    CHECK(r.kind == CorpusSpec::Kind::Random);
    CHECK(r.count == 1000);
    const CorpusSpec f = parse_corpus("file some/path.json");
    CHECK(f.kind == CorpusSpec::Kind::MatrixFile);
    CHECK(f.path == "some/path.json");
    CHECK(code_of([] { parse_corpus("everything"); }) == Errc::BadSpec);
    CHECK(code_of([] { parse_corpus("exhaustive 9x9"); }) == Errc::BadSpec);
    CHECK(code_of([] { run_sweep("exhaustive 2x2", {"no-such-property"}, 0); }) == Errc::BadSpec);
}

TEST_CASE("exhaustive 3x3 corpus") {
    const auto ds = generate_diagrams(parse_corpus("exhaustive 3x3"), 0);
    CHECK(ds.size() == 512);
    const SweepSummary s = run_sweep("exhaustive 3x3", {"powers-of-2", "kernel-odd-cycles"}, 0);
    CHECK(s.items == 512);
    CHECK(s.ok());
    for (const auto& r : s.results) {
        CHECK(r.passed == 512);
        CHECK(r.failed == 0);
    }
}

TEST_CASE("random corpus follows the documented bit layout") {
    const std::uint64_t seed = 0x5eed;
    const auto ds = generate_diagrams(parse_corpus("random 3x4 x20"), seed);
    std::mt19937_64 rng(seed);
    REQUIRE(ds.size() == 20);
    for (const auto& d : ds) {
        const std::uint64_t word = rng();
        for (int k = 0; k < 12; ++k) REQUIRE(d.is_white(k / 4 + 1, k % 4 + 1) == (((word >> k) & 1) == 1));
    }
    const auto wide = generate_diagrams(parse_corpus("random 9x9 x3"), seed);
    std::mt19937_64 rng2(seed);
    for (const auto& d : wide) {
        const std::uint64_t w0 = rng2(), w1 = rng2();
        for (int k = 0; k < 81; ++k) {
            const std::uint64_t word = k < 64 ? w0 : w1;
            REQUIRE(d.is_white(k / 9 + 1, k % 9 + 1) == (((word >> (k % 64)) & 1) == 1));
        }
    }
}

TEST_CASE("same seed gives an identical summary") {
    const auto a = summary_to_json(run_sweep("random 4x4 x200", {}, 99)).dump();
    const auto b = summary_to_json(run_sweep("random 4x4 x200", {}, 99)).dump();
    CHECK(a == b);
    CHECK(format_summary(run_sweep("random 4x4 x50", {}, 1)) == format_summary(run_sweep("random 4x4 x50", {}, 1)));
    CHECK(generate_diagrams(parse_corpus("random 4x4 x50"), 1) != generate_diagrams(parse_corpus("random 4x4 x50"), 2));
}

TEST_CASE("all diagram properties hold on a random sample") {
    const SweepSummary s = run_sweep("random 4x5 x300", {}, 12345);
    CHECK(s.results.size() == diagram_properties().size());
    CHECK(s.ok());
    CHECK(summary_to_json(s)["seed"] == "12345");
}

TEST_CASE("matrix corpora") {
    const auto mats = load_matrix_file(kData + "/skew.json");
    REQUIRE(mats.size() == 3);
    CHECK(mats[2](0, 1) == Int("12345678901234567890"));
    const SweepSummary s = run_sweep("file " + kData + "/skew.json", {}, 0);
    CHECK(s.items == 3);
    CHECK(s.ok());
    CHECK(code_of([] { load_matrix_file(kData + "/nonskew.json"); }) == Errc::SkewSymmetryViolated);
    CHECK(code_of([] { run_sweep("file " + kData + "/nonskew.json", {}, 0); }) == Errc::SkewSymmetryViolated);
    CHECK(code_of([] { load_matrix_file(kData + "/missing.json"); }) == Errc::Io);
}

TEST_CASE("single-property checks") {
    const Diagram d(2, 2, Cell::White);
    for (const auto& p : diagram_properties()) CHECK_FALSE(check_diagram_property(p, d).has_value());
    const IntMatrix m = IntMatrix::from_rows({{0, 2}, {-2, 0}});
    for (const auto& p : matrix_properties()) CHECK_FALSE(check_matrix_property(p, m).has_value());
}
