#include "hyperspec/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hyperspec/io.hpp"

namespace hyperspec {

std::string_view to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::Random: return "random";
        case SweepFamily::SingleEdge: return "singleEdge";
        case SweepFamily::CompleteUniform: return "completeUniform";
    }
    return "?";
}

std::optional<SweepFamily> parse_sweep_family(std::string_view s) {
    if (s == "random" || s == "randomConnectedUniform") return SweepFamily::Random;
    if (s == "singleEdge") return SweepFamily::SingleEdge;
    if (s == "completeUniform") return SweepFamily::CompleteUniform;
    return std::nullopt;
}

void check_config(const SweepConfig& c) {
    if (c.n.lo > c.n.hi || c.n.lo < 1) throw std::invalid_argument("empty or invalid n range");
    if (c.m.lo > c.m.hi || c.m.lo < 0) throw std::invalid_argument("empty or invalid m range");
    if (c.k.empty()) throw std::invalid_argument("empty k set");
    for (int k : c.k)
        if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (c.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (c.workers < 1) throw std::invalid_argument("workers must be at least 1");
}

std::uint64_t instance_seed(std::uint64_t seed, int n, int k, int m, int sample) {
    std::uint64_t s = mix_seed(seed);
    for (int v : {n, k, m, sample}) s = mix_seed(s ^ static_cast<std::uint64_t>(v));
    return s;
}

int SweepResult::asserted_violations() const {
    int count = 0;
    for (const auto& inst : instances)
        for (const auto& e : inst.evaluations)
            if (e.violation() || e.equality_failure()) ++count;
    return count;
}

namespace {

struct Cell {
    int n, k, m, sample;
};

std::vector<Cell> enumerate_cells(const SweepConfig& c) {
    std::vector<Cell> cells;
    switch (c.family) {
        case SweepFamily::SingleEdge:
            for (int k : c.k) cells.push_back({k, k, 1, 0});
            break;
        case SweepFamily::CompleteUniform:
            for (int n = c.n.lo; n <= c.n.hi; ++n)
                for (int k : c.k)
                    if (n >= k)
                        cells.push_back({n, k, static_cast<int>(binomial(n, k)), 0});
            break;
        case SweepFamily::Random:
            for (int n = c.n.lo; n <= c.n.hi; ++n)
                for (int k : c.k) {
                    if (n < k) continue;
                    const int lo = std::max(c.m.lo, (n - 1 + k - 2) / (k - 1));
                    const auto total = binomial(n, k);
                    for (int m = std::max(lo, 1); m <= c.m.hi; ++m) {
                        if (static_cast<std::uint64_t>(m) > total) break;
                        for (int s = 0; s < c.samples; ++s) cells.push_back({n, k, m, s});
                    }
                }
            break;
    }
    return cells;
}

SweepInstance run_cell(const SweepConfig& c, const Cell& cell) {
    const auto start = std::chrono::steady_clock::now();
    SweepInstance inst;
    inst.n = cell.n;
    inst.k = cell.k;
    inst.m = cell.m;
    inst.sample = cell.sample;
    inst.seed = c.family == SweepFamily::Random
                    ? instance_seed(c.seed, cell.n, cell.k, cell.m, cell.sample)
                    : 0;
    try {
        Family family;
        switch (c.family) {
            case SweepFamily::SingleEdge: family = SingleEdge{cell.k}; break;
            case SweepFamily::CompleteUniform: family = CompleteUniform{cell.n, cell.k}; break;
            case SweepFamily::Random:
                family = RandomConnectedUniform{cell.n, cell.k, cell.m, inst.seed};
                break;
        }
        const Hypergraph h = generate(family);
        inst.edge_hash = edge_hash(h);
        const auto ctx = bounds::build_context(h);
        if (ctx.spectra) inst.summary = ctx.spectra->summary;
        inst.evaluations = bounds::evaluate_all(h, ctx, c.tolerances);
    } catch (const Error& e) {
        inst.refusal = std::string(to_string(e.kind())) + ": " + e.what();
    }
    inst.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return inst;
}

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "";
    return *b ? "true" : "false";
}

std::string hex64(std::uint64_t x) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[i] = digits[x & 0xF];
    return s;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
    check_config(config);
    const auto start = std::chrono::steady_clock::now();
    const auto cells = enumerate_cells(config);
    SweepResult result;
    result.config = config;
    result.instances.resize(cells.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            result.instances[i] = run_cell(config, cells[i]);
    };
    const int workers = std::min<int>(config.workers, std::max<std::size_t>(1, cells.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string sweep_csv(const SweepResult& r) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    const auto family = std::string(to_string(r.config.family));
    for (std::size_t i = 0; i < r.instances.size(); ++i) {
        const auto& inst = r.instances[i];
        std::string prefix = std::to_string(i) + ',' + family + ',' + std::to_string(inst.n) +
                             ',' + std::to_string(inst.k) + ',' + std::to_string(inst.m) + ',' +
                             std::to_string(inst.sample) + ',' + std::to_string(inst.seed) + ',' +
                             hex64(inst.edge_hash) + ',';
        if (inst.summary) {
            prefix += io::format_double(inst.summary->q_max) + ',' +
                      io::format_double(inst.summary->q_min) + ',' +
                      io::format_double(inst.summary->s_q) + ',';
        } else {
            prefix += ",,,";
        }
        for (const auto& e : inst.evaluations) {
            out += prefix;
            out += e.bound_id + ',' + std::string(bounds::to_string(e.assurance)) + ',' +
                   (e.applicable ? "true" : "false") + ',';
            if (e.applicable) {
                out += io::format_double(e.lhs) + ',' + io::format_double(e.rhs) + ',' +
                       io::format_double(e.slack) + ',' + (e.holds ? "true" : "false") + ',';
            } else {
                out += ",,,,";
            }
            out += opt_bool(e.equality_expected) + ',' + opt_bool(e.equality_observed) + ',' +
                   opt_bool(e.consistent) + '\n';
        }
    }
    return out;
}

std::string sweep_summary_json(const SweepResult& r) {
    using json = nlohmann::ordered_json;
    struct Agg {
        int applicable = 0;
        int inapplicable = 0;
        double min_slack = std::numeric_limits<double>::infinity();
        int equality_hits = 0;
        int violations = 0;
        int findings = 0;
        int inconsistencies = 0;
    };
    std::map<std::string, Agg> per_bound;
    for (const auto& spec : bounds::catalog()) per_bound[spec.id];

    json violations = json::array(), findings = json::array(), refusals = json::array();
    auto reproducer = [&](std::size_t i, const SweepInstance& inst, const bounds::BoundEvaluation& e) {
        json j;
        j["instance"] = i;
        j["bound_id"] = e.bound_id;
        j["n"] = inst.n;
        j["k"] = inst.k;
        j["m"] = inst.m;
        j["sample"] = inst.sample;
        j["seed"] = inst.seed;
        j["edge_hash"] = hex64(inst.edge_hash);
        j["slack"] = e.applicable && std::isfinite(e.slack) ? json(e.slack) : json(nullptr);
        j["holds"] = e.holds;
        j["consistent"] = e.consistent ? json(*e.consistent) : json(nullptr);
        return j;
    };

    for (std::size_t i = 0; i < r.instances.size(); ++i) {
        const auto& inst = r.instances[i];
        if (!inst.refusal.empty()) {
            refusals.push_back({{"instance", i}, {"n", inst.n}, {"k", inst.k}, {"m", inst.m},
                                {"sample", inst.sample}, {"seed", inst.seed},
                                {"reason", inst.refusal}});
            continue;
        }
        for (const auto& e : inst.evaluations) {
            auto& a = per_bound[e.bound_id];
            if (!e.applicable) {
                ++a.inapplicable;
            } else {
                ++a.applicable;
                if (!std::isnan(e.slack)) a.min_slack = std::min(a.min_slack, e.slack);
            }
            if (e.equality_observed.value_or(false)) ++a.equality_hits;
            if (e.consistent && !*e.consistent) ++a.inconsistencies;
            if (e.violation() || e.equality_failure()) {
                ++a.violations;
                violations.push_back(reproducer(i, inst, e));
            } else if (e.finding()) {
                ++a.findings;
                findings.push_back(reproducer(i, inst, e));
            }
        }
    }

    json j;
    json cfg;
    cfg["family"] = to_string(r.config.family);
    cfg["n"] = {r.config.n.lo, r.config.n.hi};
    cfg["k"] = r.config.k;
    cfg["m"] = {r.config.m.lo, r.config.m.hi};
    cfg["samples"] = r.config.samples;
    cfg["seed"] = r.config.seed;
    cfg["slack_tolerance"] = r.config.tolerances.slack;
    cfg["equality_tolerance"] = r.config.tolerances.equality;
    j["config"] = cfg;
    j["instances"] = r.instances.size();
    j["asserted_violations"] = violations.size();
    json bounds = json::object();
    for (const auto& spec : bounds::catalog()) {
        const auto& a = per_bound[spec.id];
        json b;
        b["assurance"] = bounds::to_string(spec.assurance);
        b["applicable"] = a.applicable;
        b["inapplicable"] = a.inapplicable;
        b["min_slack"] = a.applicable > 0 && std::isfinite(a.min_slack) ? json(a.min_slack)
                                                                        : json(nullptr);
        b["equality_hits"] = a.equality_hits;
        b["equality_inconsistencies"] = a.inconsistencies;
        b["violations"] = a.violations;
        b["findings"] = a.findings;
        bounds[spec.id] = b;
    }
    j["bounds"] = bounds;
    j["violations"] = violations;
    j["findings"] = findings;
    j["refusals"] = refusals;
    if (r.config.timing) {
        json t;
        t["workers"] = r.config.workers;
        t["wall_seconds"] = r.seconds;
        double total = 0.0;
        for (const auto& inst : r.instances) total += inst.seconds;
        t["instance_seconds"] = total;
        j["timing"] = t;
    }
    return j.dump(2) + "\n";
}

}  // namespace hyperspec
