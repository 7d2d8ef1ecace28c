#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpi/diagrams.hpp"
#include "qpi/error.hpp"
#include "qpi/exactlinalg.hpp"
#include "qpi/pidegree.hpp"
#include "qpi/pipedream.hpp"
#include "qpi/report.hpp"
#include "qpi/representations.hpp"
#include "qpi/sweep.hpp"

using namespace qpi;

namespace {

struct Output {
    bool as_json = false;
    std::size_t budget = digit_budget();

    void emit(const json& j, const std::string& table) const {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << table;
    }
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_algebra_ell(std::uint64_t ell) {
    if (ell <= 2) throw Error(Errc::BadEll, "ell must exceed 2 for algebra-level commands");
}

// Closed form when its hypotheses hold, otherwise the generic value, labelled.
template <class Closed>
PiDegree closed_or_generic(Closed closed, const IntMatrix& generic_matrix, std::uint64_t ell) {
    try {
        PiDegree c = closed();
        if (c.hypothesis_met && !same_value(c, pi_degree_qas(generic_matrix, ell)))
            throw Error(Errc::FormulaMismatch, "closed form disagrees with the generic pipeline");
        return c;
    } catch (const Error& e) {
        if (e.code() != Errc::EvenEll && e.code() != Errc::HypothesisViolated) throw;
        PiDegree g = pi_degree_qas(generic_matrix, ell);
        g.method = kMethodGenericFallback;
        g.hypothesis_met = false;
        return g;
    }
}

std::string perm_line(const Permutation& p) {
    std::string s = "[";
    for (int i = 1; i <= p.size(); ++i) s += (i > 1 ? " " : "") + std::to_string(p(i));
    return s + "]";
}

int run_diagram(const Output& out, const std::string& file, const ReportOptions& opts, char white, char black) {
    const Diagram d = diagram_from_text(read_source(file), white, black);
    for (auto ell : opts.ells) require_algebra_ell(ell);
    const DiagramReport r = build_diagram_report(d, file, opts);
    out.emit(report_to_json(r, out.budget), format_report(r, out.budget));
    return 0;
}

int run_partition(const Output& out, const std::string& parts, const std::string& box,
                  const std::vector<std::uint64_t>& ells) {
    int bm = -1, bn = -1;
    if (!box.empty()) {
        const auto x = box.find('x');
        if (x == std::string::npos) throw Error(Errc::BadSpec, "box must look like MxN");
        bm = std::stoi(box.substr(0, x));
        bn = std::stoi(box.substr(x + 1));
    }
    const Partition p = parse_partition(parts, bm, bn);
    const Permutation tau = tau_lambda(p, p.box_m, p.box_n);
    const Permutation w = w_lambda(p, p.box_m, p.box_n);
    const IntMatrix m = partition_matrix(p);
    const SkewNormalForm snf = skew_normal_form(m);
    const int r = cycle_decomposition(tau).odd_count;

    json j;
    j["input"] = parts;
    j["box"] = {p.box_m, p.box_n};
    j["N"] = p.size();
    j["tau"] = tau.cycle_string();
    j["w_lambda"] = w.one_line();
    j["r"] = r;
    j["invariant_factors"] = int_strings(snf.h);
    j["kernel_dim"] = snf.kernel_dim;
    j["one_perp"] = one_perp(m);
    std::ostringstream t;
    t << "partition          (" << parts << ") in " << p.box_m << "x" << p.box_n << "\n"
      << "N                  " << p.size() << "\n"
      << "tau_lambda         " << tau.cycle_string() << "\n"
      << "w_lambda           " << perm_line(w) << "\n"
      << "odd cycles r       " << r << "\n"
      << "kernel dim         " << snf.kernel_dim << "\n";
    json pis = json::array();
    for (auto ell : ells) {
        require_algebra_ell(ell);
        const PiDegree d = closed_or_generic([&] { return pi_degree_partition(p, ell); }, m, ell);
        pis.push_back(pi_degree_to_json(d, out.budget));
        t << "PI degree          " << format_pi_degree(d, out.budget) << "\n";
    }
    j["pi_degree"] = pis.empty() ? json(nullptr) : pis[0];
    j["pi_degrees"] = pis;
    out.emit(j, t.str());
    return 0;
}

int run_detring(const Output& out, int n, int t, const std::vector<std::uint64_t>& ells, bool rep_check) {
    const Diagram d = determinantal_diagram(n, t);
    const IntMatrix m = matrix_from_diagram(d);
    const CycleDecomposition formula = determinantal_toric_cycles(n, t);
    const CycleDecomposition traced = cycle_decomposition(toric_permutation(d));
    const bool cycles_ok = formula == traced;

    json j;
    j["n"] = n;
    j["t"] = t;
    j["N"] = d.white_count();
    j["tau"] = toric_permutation(d).cycle_string();
    j["toric_cycles_match"] = cycles_ok;
    std::ostringstream s;
    s << "C_{" << n << "," << t << "}  N = " << d.white_count() << "\n"
      << "toric permutation  " << toric_permutation(d).cycle_string() << "\n"
      << "cycle formula      " << (cycles_ok ? "matches" : "DIFFERS") << "\n";
    json pis = json::array();
    bool ok = cycles_ok;
    for (auto ell : ells) {
        require_algebra_ell(ell);
        const PiDegree closed = pi_degree_determinantal(n, t, ell);
        const PiDegree generic = pi_degree_qas(m, ell);
        ok = ok && same_value(closed, generic);
        json pj = pi_degree_to_json(closed, out.budget);
        pj["generic_agrees"] = same_value(closed, generic);
        if (rep_check && ell % 2 == 1) {
            const bool dim_ok = determinantal_rep_dimension_check(n, t, static_cast<std::uint32_t>(ell));
            pj["rep_dimension_matches"] = dim_ok;
            ok = ok && dim_ok;
        }
        pis.push_back(pj);
        s << "PI degree          " << format_pi_degree(closed, out.budget)
          << (same_value(closed, generic) ? "  (generic agrees)" : "  (GENERIC DIFFERS)") << "\n";
    }
    j["pi_degree"] = pis.empty() ? json(nullptr) : pis[0];
    j["pi_degrees"] = pis;
    out.emit(j, s.str());
    return ok ? 0 : 1;
}

int run_schubert(const Output& out, const std::string& gamma, int n, const std::vector<std::uint64_t>& ells) {
    const PluckerIndex g = make_plucker(parse_int_list(gamma), n);
    const Partition p = partition_from_plucker(g);
    const IntMatrix ext = extend(partition_matrix(p));
    json j;
    j["gamma"] = g.gamma;
    j["m"] = g.m;
    j["n"] = g.n;
    j["lambda"] = p.parts;
    std::ostringstream s;
    s << "gamma              " << gamma << " in G(" << g.m << "," << g.n << ")\n" << "lambda             (";
    for (std::size_t i = 0; i < p.parts.size(); ++i) s << (i ? "," : "") << p.parts[i];
    s << ")\n";
    json pis = json::array();
    for (auto ell : ells) {
        require_algebra_ell(ell);
        const PiDegree d = closed_or_generic([&] { return pi_degree_schubert(g, ell); }, ext, ell);
        pis.push_back(pi_degree_to_json(d, out.budget));
        s << "PI degree          " << format_pi_degree(d, out.budget) << "\n";
    }
    j["pi_degree"] = pis.empty() ? json(nullptr) : pis[0];
    j["pi_degrees"] = pis;
    out.emit(j, s.str());
    return 0;
}

int run_grassmannian(const Output& out, int m, int n, const std::vector<std::uint64_t>& ells) {
    if (m < 1 || m >= n) throw Error(Errc::BadRange, "need 1 <= m < n");
    const Partition rect = make_partition(std::vector<int>(m, n - m), m, n - m);
    const IntMatrix ext = extend(partition_matrix(rect));
    json j;
    j["m"] = m;
    j["n"] = n;
    j["kernel_trivial"] = grassmannian_kernel_trivial(m, n);
    std::ostringstream s;
    s << "G(" << m << "," << n << ")  mu2(m)=" << mu2(m) << " mu2(n-m)=" << mu2(n - m) << "\n";
    json pis = json::array();
    for (auto ell : ells) {
        require_algebra_ell(ell);
        const PiDegree d = closed_or_generic([&] { return pi_degree_grassmannian(m, n, ell); }, ext, ell);
        pis.push_back(pi_degree_to_json(d, out.budget));
        s << "PI degree          " << format_pi_degree(d, out.budget) << "\n";
    }
    j["pi_degree"] = pis.empty() ? json(nullptr) : pis[0];
    j["pi_degrees"] = pis;
    out.emit(j, s.str());
    return 0;
}

IntMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::BadSpec, std::string("matrix is not valid JSON: ") + e.what());
    }
    const std::size_t n = j.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw Error(Errc::RaggedRows, "matrix is not square");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = j[i][k].is_string() ? Int(j[i][k].get<std::string>()) : Int(j[i][k].get<long>());
    }
    require_skew(m);
    return m;
}

struct RepSource {
    std::string diagram;
    std::string matrix;
    std::string partition;
    std::string detring;
};

int run_rep(const Output& out, const RepSource& src, std::uint64_t ell, bool verify, std::uint64_t irreducible,
            bool dump) {
    require_algebra_ell(ell);
    IntMatrix m;
    std::string input;
    if (!src.diagram.empty()) {
        m = matrix_from_diagram(diagram_from_text(read_source(src.diagram)));
        input = src.diagram;
    } else if (!src.matrix.empty()) {
        m = parse_matrix_json(src.matrix);
        input = src.matrix;
    } else if (!src.partition.empty()) {
        m = partition_matrix(parse_partition(src.partition));
        input = "partition " + src.partition;
    } else if (!src.detring.empty()) {
        const auto nt = parse_int_list(src.detring);
        if (nt.size() != 2) throw Error(Errc::BadSpec, "--detring expects n,t");
        m = matrix_from_diagram(determinantal_diagram(nt[0], nt[1]));
        input = "C_{" + src.detring + "}";
    } else {
        throw Error(Errc::BadSpec, "rep needs one of --diagram, --matrix, --partition, --detring");
    }

    const auto rep = qas_representation(m, static_cast<std::uint32_t>(ell));
    const PiDegree pd = pi_degree_qas(m, ell);
    json j;
    j["input"] = input;
    j["ell"] = ell;
    j["N"] = m.rows();
    j["invariant_factors"] = int_strings(rep.h);
    j["dimension"] = rep.dimension;
    j["pi_degree"] = pi_degree_to_json(pd, out.budget);
    std::ostringstream s;
    s << "input              " << input << "\n"
      << "dimension          " << rep.dimension << "\n"
      << "PI degree          " << format_pi_degree(pd, out.budget) << "\n";
    int status = Int(static_cast<unsigned long>(rep.dimension)) == pd.value ? 0 : 1;
    if (verify) {
        const RelationCheck rc = verify_relations(rep, m);
        j["relations_ok"] = rc.ok;
        if (!rc.ok) {
            j["witness"] = {rc.i, rc.j};
            j["reason"] = rc.reason;
            status = 1;
        }
        s << "relations          " << (rc.ok ? "OK" : "FAILED at (" + std::to_string(rc.i) + "," +
                                                         std::to_string(rc.j) + "): " + rc.reason)
          << "\n";
    }
    if (irreducible) {
        const bool irr = irreducibility_check(rep, irreducible);
        j["irreducible"] = irr;
        j["field_prime"] = irreducible;
        s << "irreducible over F_" << irreducible << "  " << (irr ? "yes" : "no") << "\n";
        if (!irr) status = 1;
    }
    if (dump) {
        json images = json::array();
        for (const auto& t : rep.T) images.push_back({{"perm", t.perm()}, {"exps", t.exps()}});
        j["T"] = images;
        for (std::size_t i = 0; i < rep.T.size(); ++i) {
            s << "T" << i + 1 << "  perm";
            for (auto p : rep.T[i].perm()) s << " " << p;
            s << "  exps";
            for (auto e : rep.T[i].exps()) s << " " << e;
            s << "\n";
        }
    }
    out.emit(j, s.str());
    return status;
}

int run_sweep_cmd(const Output& out, const std::string& corpus, const std::vector<std::string>& props,
                  std::uint64_t seed, std::size_t max_dumps, const std::string& dump_dir) {
    const SweepSummary s = run_sweep(corpus, props, seed, max_dumps);
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (const auto& r : s.results)
            for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
                std::ofstream f(std::filesystem::path(dump_dir) / (r.name + "-" + std::to_string(i) + ".txt"));
                f << r.counterexamples[i];
            }
    }
    out.emit(summary_to_json(s), format_summary(s));
    return s.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PI degrees of quantum algebras at roots of unity"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "Emit JSON instead of a table");

    std::vector<std::uint64_t> ells;

    auto* diagram = app.add_subcommand("diagram", "Analyse a black/white diagram file");
    std::string file;
    ReportOptions opts;
    char white = '.', black = '#';
    diagram->add_option("file", file, "Diagram file ('-' for stdin)")->required();
    diagram->add_option("--ell,-l", opts.ells, "Root-of-unity orders");
    diagram->add_flag("--extended", opts.extended, "Also analyse the extended matrix");
    diagram->add_flag("--cycles", opts.cycles, "List the cycles of the toric permutation");
    diagram->add_flag("--kernel", opts.kernel, "List the cycle-built kernel vectors");
    diagram->add_option("--white", white, "White cell character");
    diagram->add_option("--black", black, "Black cell character");

    auto* partition = app.add_subcommand("partition", "Partition subalgebra of quantum matrices");
    std::string parts, box;
    partition->add_option("parts", parts, "Comma-separated parts")->required();
    partition->add_option("--box", box, "Bounding box MxN (default: tight)");
    partition->add_option("--ell,-l", ells, "Root-of-unity orders");

    auto* detring = app.add_subcommand("detring", "Quantum determinantal ring R_t(M_n)");
    int dn = 0, dt = 0;
    bool rep_check = false;
    detring->add_option("--n", dn, "Matrix size")->required();
    detring->add_option("--t", dt, "Minor bound")->required();
    detring->add_option("--ell,-l", ells, "Root-of-unity orders");
    detring->add_flag("--rep-check", rep_check, "Build the representation and compare its dimension");

    auto* schubert = app.add_subcommand("schubert", "Quantum Schubert variety of a Pluecker coordinate");
    std::string gamma;
    int sn = 0;
    schubert->add_option("--gamma", gamma, "Comma-separated increasing indices")->required();
    schubert->add_option("--n", sn, "Grassmannian n")->required();
    schubert->add_option("--ell,-l", ells, "Root-of-unity orders");

    auto* grass = app.add_subcommand("grassmannian", "Quantum Grassmannian G(m,n)");
    int gm = 0, gn = 0;
    grass->add_option("--m", gm)->required();
    grass->add_option("--n", gn)->required();
    grass->add_option("--ell,-l", ells, "Root-of-unity orders");

    auto* rep = app.add_subcommand("rep", "Explicit maximal-dimension representation");
    RepSource src;
    std::uint64_t rep_ell = 0, irreducible = 0;
    bool verify = false, dump = false;
    rep->add_option("--diagram", src.diagram, "Diagram file");
    rep->add_option("--matrix", src.matrix, "Skew matrix as JSON, e.g. [[0,1],[-1,0]]");
    rep->add_option("--partition", src.partition, "Young diagram parts");
    rep->add_option("--detring", src.detring, "n,t for C_{n,t}");
    rep->add_option("--ell,-l", rep_ell, "Root-of-unity order")->required();
    rep->add_flag("--verify", verify, "Check all commutation relations exactly");
    rep->add_option("--irreducible", irreducible, "Check irreducibility over F_p");
    rep->add_flag("--dump", dump, "Print the generator images");

    auto* sweep = app.add_subcommand("sweep", "Property sweep over a diagram or matrix corpus");
    std::string corpus;
    std::vector<std::string> props;
    std::uint64_t seed = 0;
    std::size_t max_dumps = 5;
    std::string dump_dir;
    sweep->add_option("--corpus", corpus, "'exhaustive AxB', 'random AxB xK' or 'file PATH'")->required();
    sweep->add_option("--property,-p", props, "Properties to check (default: all)");
    sweep->add_option("--seed", seed, "64-bit seed for random corpora");
    sweep->add_option("--max-dumps", max_dumps, "Counterexamples kept per property");
    sweep->add_option("--dump-dir", dump_dir, "Write counterexamples as diagram files here");

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", out.as_json, "Emit JSON instead of a table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diagram) return run_diagram(out, file, opts, white, black);
        if (*partition) return run_partition(out, parts, box, ells);
        if (*detring) return run_detring(out, dn, dt, ells, rep_check);
        if (*schubert) return run_schubert(out, gamma, sn, ells);
        if (*grass) return run_grassmannian(out, gm, gn, ells);
        if (*rep) return run_rep(out, src, rep_ell, verify, irreducible, dump);
        if (*sweep) return run_sweep_cmd(out, corpus, props, seed, max_dumps, dump_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
