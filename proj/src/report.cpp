#include "qpi/report.hpp"

#include <cstdlib>
#include <sstream>

#include "qpi/error.hpp"

namespace qpi {

std::size_t digit_budget() {
    if (const char* env = std::getenv("QPIDEG_DIGIT_BUDGET")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 64;
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

json pi_degree_to_json(const PiDegree& d, std::size_t budget) {
    json j;
    j["ell"] = d.ell;
    const std::string value = d.value.get_str();
    j["value"] = value.size() <= budget ? json(value) : json(nullptr);
    j["exponent"] = d.exponent;
    j["divisor"] = d.divisor.get_str();
    j["method"] = d.method;
    j["hypothesis_met"] = d.hypothesis_met;
    if (!d.factors.empty()) j["factors"] = int_strings(d.factors);
    return j;
}

PiDegree pi_degree_from_json(const json& j) {
    const std::string method = j.value("method", std::string(kMethodGeneric));
    PiDegree d = pi_degree_power(j.at("ell").get<std::uint64_t>(), j.at("exponent").get<long>(),
                                 Int(j.at("divisor").get<std::string>()), kMethodGeneric);
    d.method = method;
    d.hypothesis_met = j.value("hypothesis_met", true);
    if (j.contains("value") && !j["value"].is_null() && Int(j["value"].get<std::string>()) != d.value)
        throw Error(Errc::FormulaMismatch, "PI degree value disagrees with exponent form");
    if (j.contains("factors"))
        for (const auto& f : j["factors"]) d.factors.emplace_back(f.get<std::string>());
    return d;
}

namespace {

void require_algebra_ell(std::uint64_t ell) {
    if (ell <= 2) throw Error(Errc::BadEll, "ell must exceed 2 for algebra-level commands");
}

} // namespace

DiagramReport build_diagram_report(const Diagram& d, const std::string& input, const ReportOptions& opts) {
    DiagramReport r;
    r.input = input;
    r.m = d.rows();
    r.n = d.cols();
    r.N = d.white_count();
    r.cauchon_le = is_cauchon_le(d);
    const Permutation tau = toric_permutation(d);
    r.tau = tau.cycle_string();
    r.tau_one_line = tau.one_line();
    const CycleDecomposition cd = cycle_decomposition(tau);
    r.r = cd.odd_count;

    const IntMatrix m = matrix_from_diagram(d);
    const SkewNormalForm snf = skew_normal_form(m);
    r.invariant_factors = int_strings(snf.h);
    r.kernel_dim = snf.kernel_dim;
    r.one_perp = one_perp(m);
    if (2 * snf.h.size() + static_cast<std::size_t>(r.r) != static_cast<std::size_t>(r.N))
        throw Error(Errc::FormulaMismatch, "2s + r != N");

    for (auto ell : opts.ells) {
        require_algebra_ell(ell);
        PiDegree generic = pi_degree_from_factors(snf.h, ell);
        if (ell % 2 == 1 && !same_value(pi_degree_power(ell, (r.N - r.r) / 2, 1, kMethodClosed), generic))
            throw Error(Errc::FormulaMismatch, "odd-ell closed form disagrees with invariant factors");
        r.pi_degrees.push_back(generic);
    }

    if (opts.extended) {
        const ExtendedAnalysis a = analyze_extended(m);
        ExtendedReport e;
        e.invariant_factors = int_strings(a.ext.h);
        e.kernel_dim = a.ext.kernel_dim;
        e.kernel_delta = a.kernel_delta;
        e.h_next = a.h_next.get_str();
        for (auto ell : opts.ells) {
            require_algebra_ell(ell);
            PiDegree generic = pi_degree_from_factors(a.ext.h, ell);
            if (ell % 2 == 1) {
                PiDegree closed = pi_degree_extended_diagram(d, ell);
                if (!same_value(closed, generic))
                    throw Error(Errc::FormulaMismatch, "extended closed form disagrees with generic pipeline");
                e.pi_degrees.push_back(closed);
            } else {
                generic.method = kMethodGenericFallback;
                generic.hypothesis_met = false;
                e.pi_degrees.push_back(generic);
            }
        }
        r.extended = std::move(e);
    }
    if (opts.cycles) r.cycles = cd.cycles;
    if (opts.kernel)
        for (const auto& kv : kernel_from_cycles(d)) r.kernel.push_back(int_strings(kv.w));
    return r;
}

json report_to_json(const DiagramReport& r, std::size_t budget) {
    json j;
    j["input"] = r.input;
    j["m"] = r.m;
    j["n"] = r.n;
    j["N"] = r.N;
    j["cauchon_le"] = r.cauchon_le;
    j["tau"] = r.tau;
    j["tau_one_line"] = r.tau_one_line;
    j["r"] = r.r;
    j["invariant_factors"] = r.invariant_factors;
    j["kernel_dim"] = r.kernel_dim;
    j["one_perp"] = r.one_perp;
    json pis = json::array();
    for (const auto& p : r.pi_degrees) pis.push_back(pi_degree_to_json(p, budget));
    j["pi_degree"] = pis.empty() ? json(nullptr) : pis[0];
    j["pi_degrees"] = pis;
    if (r.extended) {
        json e;
        e["invariant_factors"] = r.extended->invariant_factors;
        e["kernel_dim"] = r.extended->kernel_dim;
        e["kernel_delta"] = r.extended->kernel_delta;
        e["h_next"] = r.extended->h_next;
        json epis = json::array();
        for (const auto& p : r.extended->pi_degrees) epis.push_back(pi_degree_to_json(p, budget));
        e["pi_degrees"] = epis;
        j["extended"] = e;
    }
    if (!r.cycles.empty()) j["cycles"] = r.cycles;
    if (!r.kernel.empty()) j["kernel"] = r.kernel;
    return j;
}

DiagramReport report_from_json(const json& j) {
    DiagramReport r;
    r.input = j.at("input").get<std::string>();
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.N = j.at("N").get<int>();
    r.cauchon_le = j.at("cauchon_le").get<bool>();
    r.tau = j.at("tau").get<std::string>();
    r.tau_one_line = j.at("tau_one_line").get<std::vector<int>>();
    r.r = j.at("r").get<int>();
    r.invariant_factors = j.at("invariant_factors").get<std::vector<std::string>>();
    r.kernel_dim = j.at("kernel_dim").get<std::size_t>();
    r.one_perp = j.at("one_perp").get<bool>();
    for (const auto& p : j.at("pi_degrees")) r.pi_degrees.push_back(pi_degree_from_json(p));
    if (j.contains("extended")) {
        const json& e = j["extended"];
        ExtendedReport x;
        x.invariant_factors = e.at("invariant_factors").get<std::vector<std::string>>();
        x.kernel_dim = e.at("kernel_dim").get<std::size_t>();
        x.kernel_delta = e.at("kernel_delta").get<int>();
        x.h_next = e.at("h_next").get<std::string>();
        for (const auto& p : e.at("pi_degrees")) x.pi_degrees.push_back(pi_degree_from_json(p));
        r.extended = std::move(x);
    }
    if (j.contains("cycles")) r.cycles = j["cycles"].get<std::vector<std::vector<int>>>();
    if (j.contains("kernel")) r.kernel = j["kernel"].get<std::vector<std::vector<std::string>>>();
    return r;
}

std::string format_pi_degree(const PiDegree& d, std::size_t budget) {
    std::ostringstream os;
    os << "ell=" << d.ell << "  ";
    const std::string v = d.value.get_str();
    os << (v.size() <= budget ? v : "(" + std::to_string(v.size()) + " digits)");
    os << "  = " << d.ell << "^" << d.exponent;
    if (d.divisor != 1) os << "/" << d.divisor.get_str();
    os << "  [" << d.method << "]";
    return os.str();
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out + ")";
}

} // namespace

std::string format_report(const DiagramReport& r, std::size_t budget) {
    std::ostringstream os;
    os << "input              " << r.input << "\n";
    os << "shape              " << r.m << "x" << r.n << (r.cauchon_le ? " (Cauchon-Le)" : "") << "\n";
    os << "white boxes N      " << r.N << "\n";
    os << "toric permutation  " << r.tau << "\n";
    os << "odd cycles r       " << r.r << "\n";
    os << "invariant factors  " << join(r.invariant_factors) << "\n";
    os << "kernel dim         " << r.kernel_dim << "\n";
    os << "ker M in 1-perp    " << (r.one_perp ? "yes" : "no") << "\n";
    for (const auto& p : r.pi_degrees) os << "PI degree          " << format_pi_degree(p, budget) << "\n";
    if (r.extended) {
        os << "extended factors   " << join(r.extended->invariant_factors) << "\n";
        os << "extended kernel    " << r.extended->kernel_dim << " (" << (r.extended->kernel_delta > 0 ? "+1" : "-1")
           << ")\n";
        os << "h_{s+1}(M^E)       " << r.extended->h_next << "\n";
        for (const auto& p : r.extended->pi_degrees)
            os << "extended PI degree " << format_pi_degree(p, budget) << "\n";
    }
    for (const auto& c : r.cycles) {
        os << "cycle              (";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ")" << (is_odd_cycle(c) ? " odd" : "") << "\n";
    }
    for (const auto& k : r.kernel) os << "kernel vector      " << join(k) << "\n";
    return os.str();
}

} // namespace qpi
