#include "qpi/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "qpi/error.hpp"
#include "qpi/exactlinalg.hpp"
#include "qpi/pidegree.hpp"
#include "qpi/pipedream.hpp"

namespace qpi {

CorpusSpec parse_corpus(const std::string& spec) {
    static const std::regex exhaustive(R"(\s*exhaustive\s+(\d+)x(\d+)\s*)");
    static const std::regex random(R"(\s*random\s+(\d+)x(\d+)\s+x(\d+)\s*)");
    static const std::regex file(R"(\s*file\s+(\S+)\s*)");
    std::smatch mt;
    CorpusSpec c;
    if (std::regex_match(spec, mt, exhaustive)) {
        c.kind = CorpusSpec::Kind::Exhaustive;
        c.m = std::stoi(mt[1]);
        c.n = std::stoi(mt[2]);
        if (c.m < 1 || c.n < 1 || c.m * c.n > 24) throw Error(Errc::BadSpec, "exhaustive corpus must have 1..24 cells");
    } else if (std::regex_match(spec, mt, random)) {
        c.kind = CorpusSpec::Kind::Random;
        c.m = std::stoi(mt[1]);
        c.n = std::stoi(mt[2]);
        c.count = std::stoul(mt[3]);
        if (c.m < 1 || c.n < 1 || c.m * c.n > 400) throw Error(Errc::BadSpec, "random corpus dimensions out of range");
    } else if (std::regex_match(spec, mt, file)) {
        c.kind = CorpusSpec::Kind::MatrixFile;
        c.path = mt[1];
    } else {
        throw Error(Errc::BadSpec, "unrecognised corpus '" + spec + "'");
    }
    return c;
}

std::vector<Diagram> generate_diagrams(const CorpusSpec& spec, std::uint64_t seed) {
    std::vector<Diagram> out;
    const int cells = spec.m * spec.n;
    auto fill = [&](auto bit) {
        Diagram d(spec.m, spec.n, Cell::Black);
        for (int k = 0; k < cells; ++k)
            if (bit(k)) d.set(k / spec.n + 1, k % spec.n + 1, Cell::White);
        return d;
    };
    if (spec.kind == CorpusSpec::Kind::Exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask)
            out.push_back(fill([mask](int k) { return (mask >> k) & 1; }));
    } else if (spec.kind == CorpusSpec::Kind::Random) {
        std::mt19937_64 gen(seed);
        for (std::size_t i = 0; i < spec.count; ++i) {
            std::vector<std::uint64_t> words(static_cast<std::size_t>(cells + 63) / 64);
            for (auto& w : words) w = gen();
            out.push_back(fill([&words](int k) { return (words[k / 64] >> (k % 64)) & 1; }));
        }
    } else {
        throw Error(Errc::BadSpec, "matrix-file corpus does not hold diagrams");
    }
    return out;
}

std::vector<IntMatrix> load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadSpec, std::string("malformed matrix file: ") + e.what());
    }
    if (!j.is_array()) throw Error(Errc::BadSpec, "matrix file must hold a JSON array of matrices");
    std::vector<IntMatrix> out;
    for (const auto& mj : j) {
        const std::size_t n = mj.size();
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mj[i].size() != n) throw Error(Errc::RaggedRows, "matrix in file is not square");
            for (std::size_t k = 0; k < n; ++k) {
                const auto& e = mj[i][k];
                m(i, k) = e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long>());
            }
        }
        require_skew(m);
        out.push_back(std::move(m));
    }
    return out;
}

const std::vector<std::string>& diagram_properties() {
    static const std::vector<std::string> names = {
        "powers-of-2", "kernel-odd-cycles", "parity",   "interlacing",
        "extended-kernel", "odd-prime-bound", "mod-p", "cycle-kernel",
    };
    return names;
}

const std::vector<std::string>& matrix_properties() {
    static const std::vector<std::string> names = {"snf-sound"};
    return names;
}

namespace {

bool is_power_of_two(const Int& x) { return sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1; }

std::vector<std::uint64_t> odd_prime_factors(Int x) {
    std::vector<std::uint64_t> out;
    x = abs(x);
    while (sgn(x) != 0 && mpz_even_p(x.get_mpz_t())) x /= 2;
    for (std::uint64_t p = 3; x > 1; p += 2) {
        if (Int(static_cast<unsigned long>(p)) * p > x) {
            out.push_back(x.get_ui());
            break;
        }
        if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(x.get_mpz_t(), p)) x /= static_cast<unsigned long>(p);
        }
    }
    return out;
}

std::size_t rank_of(const std::vector<IntVector>& vs, std::size_t len) {
    if (vs.empty()) return 0;
    IntMatrix a(vs.size(), len);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) a(i, j) = vs[i][j];
    return smith_invariant_factors(a).rank;
}

} // namespace

std::optional<std::string> check_diagram_property(const std::string& name, const Diagram& d) {
    const IntMatrix m = matrix_from_diagram(d);
    if (name == "powers-of-2") {
        for (const auto& h : skew_normal_form(m).h)
            if (!is_power_of_two(h)) return "invariant factor " + h.get_str() + " is not a power of 2";
        return std::nullopt;
    }
    if (name == "kernel-odd-cycles") {
        const auto kd = skew_normal_form(m).kernel_dim;
        const int r = cycle_decomposition(toric_permutation(d)).odd_count;
        if (static_cast<int>(kd) != r) return "kernel dim " + std::to_string(kd) + " != odd cycles " + std::to_string(r);
        return std::nullopt;
    }
    if (name == "parity") {
        const int r = cycle_decomposition(toric_permutation(d)).odd_count;
        if ((r - d.white_count()) % 2 != 0) return "r and N differ in parity";
        return std::nullopt;
    }
    const ExtendedAnalysis a = analyze_extended(m);
    if (name == "interlacing") {
        const auto& hb = a.base.h;
        const auto& he = a.ext.h;
        if (he.size() < hb.size()) return "extended matrix has fewer invariant factors";
        for (std::size_t i = 0; i < hb.size(); ++i)
            if (!mpz_divisible_p(hb[i].get_mpz_t(), he[i].get_mpz_t()))
                return "h_" + std::to_string(i + 1) + "(M^E) does not divide h_" + std::to_string(i + 1) + "(M)";
        return std::nullopt;
    }
    if (name == "extended-kernel") {
        const int expected = a.one_perp ? 1 : -1;
        if (a.kernel_delta != expected)
            return "kernel changed by " + std::to_string(a.kernel_delta) + ", expected " + std::to_string(expected);
        return std::nullopt;
    }
    if (name == "odd-prime-bound") {
        const auto bound = static_cast<std::uint64_t>(std::min(d.rows(), d.cols()));
        for (auto p : odd_prime_factors(a.h_next))
            if (p > bound) return "odd prime " + std::to_string(p) + " divides h_{s+1}(M^E) above min(m,n)";
        return std::nullopt;
    }
    if (name == "mod-p") {
        for (std::uint64_t p : {3u, 5u, 7u}) {
            const std::size_t s_mod = (m.rows() - kernel_dim_mod_p(m, p)) / 2;
            const Int h = a.ext.h.size() > s_mod ? a.ext.h[s_mod] : Int(0);
            const bool divides = mpz_divisible_ui_p(h.get_mpz_t(), p) != 0;
            if (divides != one_perp_mod_p(m, p)) return "mod-" + std::to_string(p) + " criterion fails";
        }
        return std::nullopt;
    }
    if (name == "cycle-kernel") {
        const auto vecs = kernel_from_cycles(d);
        std::vector<IntVector> ws;
        for (const auto& kv : vecs) {
            ws.push_back(kv.w);
            cycle_sum(d, kv.cycle);
        }
        if (rank_of(ws, m.rows()) != a.base.kernel_dim)
            return "cycle vectors span " + std::to_string(rank_of(ws, m.rows())) + " of " +
                   std::to_string(a.base.kernel_dim) + " kernel dimensions";
        return std::nullopt;
    }
    throw Error(Errc::BadSpec, "unknown diagram property '" + name + "'");
}

std::optional<std::string> check_matrix_property(const std::string& name, const IntMatrix& m) {
    if (name == "snf-sound") {
        const SkewNormalForm f = skew_normal_form(m);
        unimodular_inverse(f.E);
        if (smith_invariant_factors(m).pairs != f.h) return "skew form and Smith form disagree";
        return std::nullopt;
    }
    throw Error(Errc::BadSpec, "unknown matrix property '" + name + "'");
}

bool SweepSummary::ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.failed == 0; });
}

namespace {

std::string matrix_key(const IntMatrix& m) {
    std::string s;
    for (const auto& row : m.to_strings()) {
        for (const auto& x : row) s += x + " ";
        s += "\n";
    }
    return s;
}

template <class Item, class Check, class Key>
void run_properties(const std::vector<Item>& items, const std::vector<std::string>& props, Check check, Key key,
                    std::size_t max_dumps, SweepSummary& out) {
    for (const auto& name : props) {
        PropertyResult pr;
        pr.name = name;
        for (const auto& item : items) {
            std::optional<std::string> bad;
            try {
                bad = check(name, item);
            } catch (const Error& e) {
                if (e.code() == Errc::BadSpec) throw;
                bad = e.what();
            }
            if (bad) {
                ++pr.failed;
                pr.counterexamples.push_back(key(item));
            } else {
                ++pr.passed;
            }
        }
        std::sort(pr.counterexamples.begin(), pr.counterexamples.end());
        if (pr.counterexamples.size() > max_dumps) pr.counterexamples.resize(max_dumps);
        out.results.push_back(std::move(pr));
    }
}

} // namespace

SweepSummary run_sweep(const std::string& corpus, const std::vector<std::string>& properties, std::uint64_t seed,
                       std::size_t max_counterexamples) {
    const CorpusSpec spec = parse_corpus(corpus);
    SweepSummary out;
    out.corpus = corpus;
    out.seed = seed;
    if (spec.kind == CorpusSpec::Kind::MatrixFile) {
        const auto mats = load_matrix_file(spec.path);
        out.items = mats.size();
        const auto& props = properties.empty() ? matrix_properties() : properties;
        run_properties(mats, props, check_matrix_property, matrix_key, max_counterexamples, out);
    } else {
        const auto diagrams = generate_diagrams(spec, seed);
        out.items = diagrams.size();
        const auto& props = properties.empty() ? diagram_properties() : properties;
        run_properties(
            diagrams, props, check_diagram_property, [](const Diagram& d) { return d.to_text(); },
            max_counterexamples, out);
    }
    return out;
}

nlohmann::json summary_to_json(const SweepSummary& s) {
    nlohmann::json j;
    j["corpus"] = s.corpus;
    j["seed"] = std::to_string(s.seed);
    j["items"] = s.items;
    j["ok"] = s.ok();
    nlohmann::json props = nlohmann::json::array();
    for (const auto& r : s.results)
        props.push_back({{"property", r.name},
                         {"passed", r.passed},
                         {"failed", r.failed},
                         {"counterexamples", r.counterexamples}});
    j["properties"] = props;
    return j;
}

std::string format_summary(const SweepSummary& s) {
    std::ostringstream os;
    os << "corpus " << s.corpus << "  seed " << s.seed << "  items " << s.items << "\n";
    for (const auto& r : s.results) {
        os << "  " << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
        for (const auto& c : r.counterexamples) {
            std::istringstream lines(c);
            std::string line;
            while (std::getline(lines, line)) os << "      " << line << "\n";
            os << "\n";
        }
    }
    os << (s.ok() ? "OK" : "FAILURES") << "\n";
    return os.str();
}

} // namespace qpi
