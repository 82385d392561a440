// hyperspec: spectra, bound audits, generators and sweeps for uniform
// hypergraphs.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation error,
// 4 asserted bound violated (or an audited finding under --strict-audit,
// or a failed verify check), 5 resource refusal.

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/eigen.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/structure.hpp"
#include "hyperspec/sweep.hpp"
#include "hyperspec/verify.hpp"

namespace hs = hyperspec;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kViolation = 4, kRefused = 5 };

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& output, const std::string& text) {
    if (output.empty() || output == "-")
        std::cout << text;
    else
        hs::io::write_file_atomic(output, text);
}

json number(double x) {
    if (std::isfinite(x)) return x;
    return hs::io::format_double(x);
}

json spectrum_json(const hs::Spectrum& s) {
    json arr = json::array();
    for (double v : s.reported()) arr.push_back(number(v));
    return arr;
}

hs::Hypergraph load(const std::string& path, bool require_connected) {
    auto h = hs::io::read_file(path);
    if (require_connected && !hs::is_connected(h))
        throw ValidationFailure("input is not connected");
    return h;
}

hs::bounds::Tolerances tolerances(std::optional<double> tol, std::optional<double> eq_tol) {
    hs::bounds::Tolerances t;
    if (tol) t.slack = t.equality = *tol;
    if (eq_tol) t.equality = *eq_tol;
    return t;
}

hs::IntRange parse_range(const std::string& s) {
    auto to_int = [&](std::string_view part) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw CLI::ValidationError("range", "not an integer range: " + s);
        return v;
    };
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        const int v = to_int(s);
        return {v, v};
    }
    return {to_int(std::string_view(s).substr(0, colon)),
            to_int(std::string_view(s).substr(colon + 1))};
}

// Subcommands -------------------------------------------------------------

struct SpectrumArgs {
    std::string file, output;
    bool require_connected = false;
};

int cmd_spectrum(const SpectrumArgs& a) {
    const auto h = load(a.file, a.require_connected);
    const auto d = hs::spectral_data(h);
    json j;
    j["n"] = h.n();
    j["m"] = h.m();
    j["k"] = h.uniformity() ? json(*h.uniformity()) : json(nullptr);
    j["adjacency"] = spectrum_json(d.adjacency);
    j["laplacian"] = spectrum_json(d.laplacian);
    j["signlessLaplacian"] = spectrum_json(d.signless);
    json s;
    s["q_max"] = number(d.summary.q_max);
    s["q_min"] = number(d.summary.q_min);
    s["mu_max"] = number(d.summary.mu_max);
    s["lambda_max"] = number(d.summary.lambda_max);
    s["lambda_min"] = number(d.summary.lambda_min);
    s["s_Q"] = number(d.summary.s_q);
    s["s_A"] = number(d.summary.s_a);
    j["summary"] = s;
    emit(a.output, j.dump(2) + "\n");
    return kOk;
}

struct BoundsArgs {
    std::string file, output;
    bool csv = false, json_out = false, audit = false, allow_any = false, strict_audit = false;
    std::optional<double> tol, eq_tol;
};

int cmd_bounds(const BoundsArgs& a) {
    const auto h = load(a.file, false);
    if (!a.allow_any) {
        if (!h.uniformity()) throw ValidationFailure("input is not uniform (use --allow-any)");
        if (!hs::is_connected(h)) throw ValidationFailure("input is not connected (use --allow-any)");
    }
    const auto tol = tolerances(a.tol, a.eq_tol);
    const auto evals = hs::bounds::evaluate_all(h, tol);
    const auto report = hs::bounds::equality_consistency_report(evals);

    if (a.csv) {
        emit(a.output, hs::bounds::to_csv(evals));
    } else {
        json j;
        j["evaluations"] = json::parse(hs::bounds::to_json(evals, a.audit));
        if (a.audit) {
            json rows = json::array();
            for (const auto& r : report.rows) {
                auto b = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
                rows.push_back({{"bound_id", r.bound_id},
                                {"assurance", hs::bounds::to_string(r.assurance)},
                                {"expected", b(r.expected)},
                                {"observed", b(r.observed)},
                                {"consistent", b(r.consistent)}});
            }
            j["equality"] = rows;
            j["findings"] = report.audited_findings;
        }
        emit(a.output, j.dump(2) + "\n");
    }

    bool violated = false, findings = false;
    for (const auto& e : evals) {
        if (e.violation() || e.equality_failure()) {
            violated = true;
            std::cerr << "violation: " << e.bound_id << " slack " << hs::io::format_double(e.slack)
                      << "\n";
        }
        if (e.finding()) findings = true;
    }
    if (violated || (a.strict_audit && findings)) return kViolation;
    return kOk;
}

struct GenerateArgs {
    std::string family, output, format = "hg";
    std::vector<int> params;
    std::uint64_t seed = 0;
};

int cmd_generate(const GenerateArgs& a) {
    const auto& p = a.params;
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw CLI::ValidationError("params", a.family + " takes " + std::to_string(count) +
                                                     " integer parameters");
    };
    hs::Family f;
    if (a.family == "completeUniform") {
        need(2);
        f = hs::CompleteUniform{p[0], p[1]};
    } else if (a.family == "singleEdge") {
        need(1);
        f = hs::SingleEdge{p[0]};
    } else if (a.family == "completeBipartiteGraph") {
        need(2);
        f = hs::CompleteBipartiteGraph{p[0], p[1]};
    } else if (a.family == "completeBipartiteUniform") {
        need(3);
        f = hs::CompleteBipartiteUniform{p[0], p[1], p[2]};
    } else if (a.family == "randomConnectedUniform") {
        need(3);
        f = hs::RandomConnectedUniform{p[0], p[1], p[2], a.seed};
    } else {
        throw CLI::ValidationError("family", "unknown family '" + a.family + "'");
    }
    const auto h = hs::generate(f);
    emit(a.output, hs::io::serialize(h, a.format == "json" ? hs::io::Format::Json
                                                           : hs::io::Format::Text));
    return kOk;
}

struct ComplementArgs {
    std::string file, output, format = "hg";
};

int cmd_complement(const ComplementArgs& a) {
    const auto h = load(a.file, false);
    emit(a.output, hs::io::serialize(hs::complement(h), a.format == "json"
                                                             ? hs::io::Format::Json
                                                             : hs::io::Format::Text));
    return kOk;
}

struct SweepArgs {
    std::string family = "random", n = "3:6", k = "3", m = "1:12", output, summary;
    int samples = 1, workers = 1;
    std::uint64_t seed = 0;
    std::optional<double> tol, eq_tol;
    bool timing = false;
};

int cmd_sweep(const SweepArgs& a) {
    hs::SweepConfig c;
    const auto fam = hs::parse_sweep_family(a.family);
    if (!fam) throw CLI::ValidationError("family", "unknown sweep family '" + a.family + "'");
    c.family = *fam;
    c.n = parse_range(a.n);
    c.m = parse_range(a.m);
    c.k.clear();
    std::stringstream ks(a.k);
    for (std::string part; std::getline(ks, part, ',');) {
        const auto r = parse_range(part);
        for (int k = r.lo; k <= r.hi; ++k) c.k.push_back(k);
    }
    c.samples = a.samples;
    c.seed = a.seed;
    c.workers = a.workers;
    c.tolerances = tolerances(a.tol, a.eq_tol);
    c.timing = a.timing;
    try {
        hs::check_config(c);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("sweep", e.what());
    }
    const auto r = hs::run_sweep(c);
    emit(a.output, hs::sweep_csv(r));
    if (!a.summary.empty()) emit(a.summary, hs::sweep_summary_json(r));
    return r.asserted_violations() > 0 ? kViolation : kOk;
}

struct VerifyArgs {
    std::string file, output;
    std::optional<double> tol, eq_tol;
};

int cmd_verify(const VerifyArgs& a) {
    const auto h = load(a.file, false);
    const auto r = hs::verify(h, tolerances(a.tol, a.eq_tol));
    emit(a.output, hs::to_json(r));
    return r.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signless Laplacian spectra and eigenvalue bounds for uniform hypergraphs"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* sp = app.add_subcommand("spectrum", "A, L and Q spectra with summary scalars (JSON)");
    sp->add_option("file", spectrum.file, "hypergraph file (.hg or .json)")->required();
    sp->add_flag("--require-connected", spectrum.require_connected, "reject disconnected input");
    sp->add_option("-o,--output", spectrum.output, "output file (default stdout)");

    BoundsArgs bnd;
    auto* bp = app.add_subcommand("bounds", "evaluate the 25-bound catalog");
    bp->add_option("file", bnd.file, "hypergraph file")->required();
    auto* csv_flag = bp->add_flag("--csv", bnd.csv, "CSV output");
    bp->add_flag("--json", bnd.json_out, "JSON output (default)")->excludes(csv_flag);
    bp->add_option("--tol", bnd.tol, "slack tolerance; also the equality tolerance unless --eq-tol");
    bp->add_option("--eq-tol", bnd.eq_tol, "equality-detection tolerance");
    bp->add_flag("--audit", bnd.audit, "include details, equality consistency rows and findings");
    bp->add_flag("--allow-any", bnd.allow_any, "accept disconnected or non-uniform input");
    bp->add_flag("--strict-audit", bnd.strict_audit, "audited findings also set exit code 4");
    bp->add_option("-o,--output", bnd.output, "output file (default stdout)");

    GenerateArgs gen;
    auto* gp = app.add_subcommand("generate", "write a member of a hypergraph family");
    gp->add_option("family", gen.family,
                   "completeUniform | singleEdge | completeBipartiteGraph | "
                   "completeBipartiteUniform | randomConnectedUniform")
        ->required();
    gp->add_option("params", gen.params, "integer parameters of the family");
    gp->add_option("--seed", gen.seed, "seed for randomConnectedUniform");
    gp->add_option("--format", gen.format, "hg or json")->check(CLI::IsMember({"hg", "json"}));
    gp->add_option("-o,--output", gen.output, "output file (default stdout)");

    SweepArgs sw;
    auto* wp = app.add_subcommand("sweep", "evaluate the catalog over a generated corpus");
    wp->add_option("--family", sw.family, "random | singleEdge | completeUniform");
    wp->add_option("--n", sw.n, "vertex count range lo:hi");
    wp->add_option("--k", sw.k, "uniformities, comma separated (ranges allowed)");
    wp->add_option("--m", sw.m, "edge count range lo:hi (random family)");
    wp->add_option("--samples", sw.samples, "samples per (n, k, m) cell");
    wp->add_option("--seed", sw.seed, "base seed");
    wp->add_option("--workers", sw.workers, "worker threads");
    wp->add_option("--tol", sw.tol, "slack tolerance");
    wp->add_option("--eq-tol", sw.eq_tol, "equality-detection tolerance");
    wp->add_flag("--timing", sw.timing, "include timing in the summary");
    wp->add_option("-o,--output", sw.output, "CSV output (default stdout)");
    wp->add_option("--summary", sw.summary, "summary JSON output");

    ComplementArgs cmp;
    auto* cp = app.add_subcommand("complement", "k-uniform complement");
    cp->add_option("file", cmp.file, "hypergraph file")->required();
    cp->add_option("--format", cmp.format, "hg or json")->check(CLI::IsMember({"hg", "json"}));
    cp->add_option("-o,--output", cmp.output, "output file (default stdout)");

    VerifyArgs ver;
    auto* vp = app.add_subcommand("verify", "run the invariant suite on one input");
    vp->add_option("file", ver.file, "hypergraph file")->required();
    vp->add_option("--tol", ver.tol, "slack tolerance");
    vp->add_option("--eq-tol", ver.eq_tol, "equality-detection tolerance");
    vp->add_option("-o,--output", ver.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*sp) return cmd_spectrum(spectrum);
        if (*bp) return cmd_bounds(bnd);
        if (*gp) return cmd_generate(gen);
        if (*wp) return cmd_sweep(sw);
        if (*cp) return cmd_complement(cmp);
        if (*vp) return cmd_verify(ver);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationFailure& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const hs::Error& e) {
        std::cerr << hs::to_string(e.kind()) << ": " << e.what() << "\n";
        if (e.kind() == hs::ErrorKind::Parse) return kParse;
        if (e.is_validation()) return kValidation;
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
