#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpi/diagrams.hpp"
#include "qpi/matrix.hpp"

namespace qpi {

// "exhaustive AxB", "random AxB xK", or "file PATH" (JSON array of matrices).
struct CorpusSpec {
    enum class Kind { Exhaustive, Random, MatrixFile };
    Kind kind = Kind::Exhaustive;
    int m = 0;
    int n = 0;
    std::size_t count = 0;
    std::string path;
};

CorpusSpec parse_corpus(const std::string& spec);

// Random corpora draw one 64-bit word per 64 cells from std::mt19937_64
// seeded with `seed`; bit k of the stream decides cell k (row-major), 1 = white.
std::vector<Diagram> generate_diagrams(const CorpusSpec& spec, std::uint64_t seed);

std::vector<IntMatrix> load_matrix_file(const std::string& path);

const std::vector<std::string>& diagram_properties();
const std::vector<std::string>& matrix_properties();

// std::nullopt when the property holds, otherwise a short reason.
std::optional<std::string> check_diagram_property(const std::string& name, const Diagram& d);
std::optional<std::string> check_matrix_property(const std::string& name, const IntMatrix& m);

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> counterexamples; // serialized inputs, sorted
};

struct SweepSummary {
    std::string corpus;
    std::uint64_t seed = 0;
    std::size_t items = 0;
    std::vector<PropertyResult> results;

    bool ok() const;
};

SweepSummary run_sweep(const std::string& corpus, const std::vector<std::string>& properties, std::uint64_t seed,
                       std::size_t max_counterexamples = 5);

nlohmann::json summary_to_json(const SweepSummary& s);
std::string format_summary(const SweepSummary& s);

} // namespace qpi
