#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hyperspec/io.hpp"

namespace hyperspec::bounds {

std::string_view to_string(Target t) {
    switch (t) {
        case Target::QMaxLower: return "qMaxLower";
        case Target::QMaxUpper: return "qMaxUpper";
        case Target::QMaxTwoSided: return "qMaxTwoSided";
        case Target::QMinUpper: return "qMinUpper";
        case Target::QMinPositivity: return "qMinPositivity";
        case Target::SpreadLower: return "spreadLower";
        case Target::SpreadUpper: return "spreadUpper";
        case Target::SpreadTwoSided: return "spreadTwoSided";
        case Target::SpreadIdentity: return "spreadIdentity";
        case Target::ComplementRelation: return "complementRelation";
    }
    return "?";
}

std::string_view to_string(Assurance a) {
    return a == Assurance::Asserted ? "asserted" : "audited";
}

namespace {

constexpr auto kAsserted = Assurance::Asserted;
constexpr auto kAudited = Assurance::Audited;
constexpr const char* kBase = "connected, k-uniform, m >= 1";

std::vector<BoundSpec> make_catalog() {
    using T = Target;
    std::vector<BoundSpec> c;
    auto add = [&](std::string id, Target t, bool strict, Assurance a, std::string stmt,
                   std::string appl, std::optional<std::string> eq = std::nullopt,
                   Assurance eqa = kAsserted) {
        c.push_back({std::move(id), t, strict, a, std::move(stmt), std::move(appl), std::move(eq),
                     eqa});
    };
    add("B01", T::QMaxLower, false, kAsserted,
        "q_max >= (d_min + sqrt(d_min^2 + 8 T_min / (k-1))) / 2", kBase, "regular and linear");
    add("B02", T::QMaxLower, false, kAudited,
        "q_max >= ((n-tau) C(n-tau, k-1) + tau C(n-tau-1, k-2)) / (k-1)",
        std::string(kBase) + ", tau >= 1", "complete bipartite graph K_{tau, n-tau}", kAudited);
    add("B03", T::QMaxLower, false, kAsserted, "q_max >= (k m / n)(1 + 1/(chi-1))",
        std::string(kBase) + ", chi >= 2");
    add("B04", T::QMaxUpper, false, kAsserted, "q_max <= max_i (d_i + s_i / (k-1))", kBase,
        "regular, or a bipartite semiregular graph");
    add("B05", T::QMaxTwoSided, false, kAsserted, "2 d_min <= q_max <= 2 d_max", kBase,
        "regular");
    add("B06", T::QMaxTwoSided, false, kAsserted,
        "min_u r_u <= q_max <= max_u r_u, r_u = sqrt(2 d_u^2 + (2/(k-1)) sum_v d_uv d_v)", kBase);
    add("B07", T::QMaxUpper, false, kAsserted,
        "q_max <= sqrt(((k-1)(2 d_max^2 + 2 m d_min^2) + 2 m (k m - n d_min)) / (k-1))", kBase);
    add("B08", T::QMaxLower, false, kAsserted,
        "q_max >= sqrt((2(k-1) d_min^2 + 2 k m - 2 d_max (n + 2 - k - d_min)) / (k-1))",
        std::string(kBase) + ", (n-1) d_max <= k m");
    add("B09", T::QMaxLower, false, kAudited,
        "q_max >= (b1^2 |X| + b2^2 |Y|) / (k-1) for disjoint non-adjacent X, Y, b1^2 + b2^2 = 1",
        std::string(kBase) + ", some disjoint non-adjacent nonempty X, Y");
    add("B10", T::ComplementRelation, false, kAsserted,
        "q_max(complement) >= (n-2) theta - q_min, theta = C(n-2, k-2) / (k-1)", kBase);
    add("B11", T::QMinPositivity, true, kAsserted,
        "q_min > 0 for k >= 3; for k = 2, q_min = 0 iff the graph is bipartite", kBase,
        "k = 2 and bipartite");
    add("B12", T::QMinUpper, false, kAsserted,
        "q_min <= (d_u + d_v) / 2 at the two smallest degrees", std::string(kBase) + ", n >= 2");
    add("B13", T::QMinUpper, false, kAudited,
        "q_min <= (|X| + |Y|) m / (2(k-1)) for disjoint non-adjacent X, Y",
        std::string(kBase) + ", some disjoint non-adjacent nonempty X, Y");
    add("B14", T::QMinUpper, false, kAsserted, "q_min <= d_max - 1/(k-1)", kBase);
    add("B15", T::QMinUpper, false, kAsserted,
        "q_min <= sqrt(2 d_max^2 + (2km/(k-1))(km - (n-1) d_min + ((k-1) d_min - 1) d_max))",
        kBase);
    add("B16", T::QMinUpper, false, kAsserted, "q_min <= 2 sqrt(Z1 / n)", kBase);
    add("B17", T::SpreadLower, true, kAsserted, "s_Q > 1", kBase);
    add("B18", T::SpreadLower, false, kAsserted, "s_Q >= (2 n d_min - k m) / (n-1)",
        std::string(kBase) + ", d_min > d_bar / 2", "Q = t((n-2) I + J) for some t > 0",
        kAudited);
    add("B19", T::SpreadLower, false, kAsserted, "s_Q >= (n (d_max + 1/(k-1)) - k m) / (n-1)",
        kBase);
    add("B20", T::SpreadLower, false, kAsserted, "s_Q >= d_max - d_min + 1/(k-1)", kBase);
    add("B21", T::SpreadIdentity, false, kAsserted, "s_A = s_Q", std::string(kBase) + ", regular");
    add("B22", T::SpreadUpper, true, kAsserted,
        "s_Q < (1/(2 sqrt 2)) ((4 d_max^2 - 1/4)^2 + 2 (2 d_max + 1/2))", kBase);
    add("B23", T::SpreadUpper, true, kAudited, "s_Q < 2 tau^2 d_max / (tau^2 - 1/n)",
        std::string(kBase) + ", tau >= 1");
    add("B24", T::SpreadLower, false, kAsserted,
        "s_Q >= 2 d_min - sqrt((Z1 + alpha/(k-1)^2 - 4 d_min^2) / (n-1))", kBase,
        "Q = t((n-2) I + J) for some t > 0", kAudited);
    add("B25", T::SpreadTwoSided, true, kAsserted,
        "chi sqrt(n^2-1) / (n (1 + (k-1) d_max)) < s_Q < 4 n chi d_max / (k sqrt(n^2-1))",
        std::string(kBase) + ", chi >= 1");
    return c;
}

}  // namespace

const std::vector<BoundSpec>& catalog() {
    static const std::vector<BoundSpec> c = make_catalog();
    return c;
}

const BoundSpec& find_spec(std::string_view id) {
    for (const auto& s : catalog())
        if (s.id == id) return s;
    throw std::out_of_range("unknown bound id: " + std::string(id));
}

// Context ----------------------------------------------------------------

SeparatedSets separated_sets(const Hypergraph& h) {
    SeparatedSets out;
    const int n = h.n();
    const auto adj = two_section(h);
    auto consider = [&](int x, int y) {
        if (!out.exists) {
            out.exists = true;
            out.min_total = x + y;
        }
        out.min_total = std::min(out.min_total, x + y);
        if (x + y > out.max_total) {
            out.max_total = x + y;
            out.max_total_x = x;
            out.max_total_y = y;
        }
        if (std::max(x, y) > out.max_side) {
            out.max_side = std::max(x, y);
            out.max_side_x = x;
            out.max_side_y = y;
        }
    };
    if (n <= kMaxSeparatedSetsOrder) {
        out.exhaustive = true;
        std::vector<std::uint32_t> closed(n);
        for (int v = 0; v < n; ++v) {
            closed[v] = 1U << v;
            for (int w = 0; w < n; ++w)
                if (adj[v][w]) closed[v] |= 1U << w;
        }
        // For fixed X, the largest admissible Y is everything outside N[X];
        // any nonempty subset of it is also admissible, so sizes 1..|W| occur.
        for (std::uint32_t x = 1; x < (1U << n); ++x) {
            std::uint32_t reach = 0;
            for (int v = 0; v < n; ++v)
                if (x >> v & 1U) reach |= closed[v];
            const int w = n - std::popcount(reach);
            if (w == 0) continue;
            const int xs = std::popcount(x);
            consider(xs, 1);
            consider(xs, w);
        }
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!adj[u][v]) consider(1, 1);
    }
    return out;
}

namespace {

ScaledFormMatch detect_scaled_form(const SymmetricMatrix& q) {
    ScaledFormMatch out;
    const int n = q.order();
    if (n < 2) return out;
    const double t = q(0, 1);
    if (!(t > 0.0)) return out;
    const double eps = 1e-9 * std::max(1.0, std::abs(t));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(q(i, j) - t) > eps) return out;
    auto diagonal_is = [&](double value) {
        for (int i = 0; i < n; ++i)
            if (std::abs(q(i, i) - value) > eps * n) return false;
        return true;
    };
    // t((n-c) I + J) has diagonal t(n-c+1) and off-diagonal t.
    if (diagonal_is(t * (n - 1))) out.t_n_minus_2 = t;
    if (diagonal_is(t * n)) out.t_n_minus_1 = t;
    return out;
}

std::uint64_t context_digest(const Hypergraph& h) {
    return edge_hash(h) ^ (static_cast<std::uint64_t>(h.n()) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

BoundContext build_context(const Hypergraph& h, double eigen_tol) {
    BoundContext ctx;
    ctx.digest = context_digest(h);
    ctx.n = h.n();
    ctx.m = h.m();
    ctx.k = h.uniformity();
    ctx.connected = is_connected(h);
    ctx.inv = invariants(h);

    try {
        ctx.spectra = spectral_data(h, eigen_tol);
        ctx.q_form = detect_scaled_form(signless_laplacian(h));
    } catch (const Error& e) {
        ctx.spectra_refusal = std::string("resource cap: ") + e.what();
    }
    if (ctx.k) {
        try {
            ctx.complement = spectral_summary(complement(h), eigen_tol);
        } catch (const Error& e) {
            ctx.complement_refusal = std::string("resource cap: ") + e.what();
        }
    } else {
        ctx.complement_refusal = "complement needs a uniform hypergraph";
    }
    try {
        ctx.tau = weak_independence_number(h);
    } catch (const Error& e) {
        ctx.tau_refusal = std::string("resource cap: ") + e.what();
    }
    try {
        ctx.chi = strong_chromatic_number(h);
    } catch (const Error& e) {
        ctx.chi_refusal = std::string("resource cap: ") + e.what();
    }

    ctx.regular = ctx.inv.d_max == ctx.inv.d_min;
    ctx.linear = is_linear(h);
    ctx.two_section_bipartite = two_section_bipartite(h);
    ctx.bipartite_semiregular_graph = is_bipartite_semiregular_graph(h);
    ctx.complete_bipartite_graph = complete_bipartite_sides(h);
    ctx.separated = separated_sets(h);
    return ctx;
}

// Evaluation -------------------------------------------------------------

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Evaluator {
    const BoundSpec& spec;
    const BoundContext& ctx;
    const Tolerances& tol;
    BoundEvaluation ev;

    double n = ctx.n, m = ctx.m, k = ctx.k.value_or(0);
    double dmin = static_cast<double>(ctx.inv.d_min);
    double dmax = static_cast<double>(ctx.inv.d_max);
    double km = k * m;

    Evaluator(const BoundSpec& s, const BoundContext& c, const Tolerances& t)
        : spec(s), ctx(c), tol(t) {
        ev.bound_id = s.id;
        ev.target = s.target;
        ev.assurance = s.assurance;
        ev.equality_assurance = s.equality_assurance;
        ev.strict = s.strict;
    }

    const SpectralSummary& sum() const { return ctx.spectra->summary; }

    BoundEvaluation refuse(std::string reason) {
        ev.applicable = false;
        ev.reason = std::move(reason);
        ev.lhs = ev.rhs = ev.slack = kNaN;
        ev.holds = true;
        return std::move(ev);
    }

    bool passes(double slack) const {
        return ev.strict ? slack > tol.slack : slack >= -tol.slack;
    }

    void detail(std::string name, double value) { ev.details.emplace_back(std::move(name), value); }

    void expect(std::optional<bool> expected) {
        ev.equality_expected = expected;
        if (expected && ev.equality_observed)
            ev.consistent = *expected == *ev.equality_observed;
    }

    BoundEvaluation lower(double lhs, double rhs, std::optional<bool> expected = std::nullopt) {
        return one_sided(lhs, rhs, lhs - rhs, expected);
    }

    BoundEvaluation upper(double lhs, double rhs, std::optional<bool> expected = std::nullopt) {
        return one_sided(lhs, rhs, rhs - lhs, expected);
    }

    BoundEvaluation one_sided(double lhs, double rhs, double slack,
                              std::optional<bool> expected) {
        ev.applicable = true;
        ev.lhs = lhs;
        ev.rhs = rhs;
        ev.slack = slack;
        ev.holds = !std::isnan(slack) && passes(slack);
        if (!std::isnan(slack)) ev.equality_observed = std::abs(slack) <= tol.equality;
        expect(expected);
        return std::move(ev);
    }

    BoundEvaluation two_sided(double lhs, double lo, double hi,
                              std::optional<bool> expected = std::nullopt) {
        ev.applicable = true;
        ev.lhs = lhs;
        ev.rhs_lower = lo;
        ev.rhs_upper = hi;
        const double below = lhs - lo, above = hi - lhs;
        ev.slack = std::min(below, above);
        ev.rhs = below <= above ? lo : hi;
        ev.holds = passes(below) && passes(above);
        ev.equality_observed =
            std::abs(below) <= tol.equality || std::abs(above) <= tol.equality;
        expect(expected);
        return std::move(ev);
    }

    BoundEvaluation run();
};

BoundEvaluation Evaluator::run() {
    if (!ctx.k) return refuse("input is not uniform");
    if (!ctx.connected) return refuse("input is not connected");
    if (ctx.m < 1) return refuse("input has no edges");
    if (ctx.n < 2) return refuse("input has fewer than 2 vertices");
    if (!ctx.spectra) return refuse(ctx.spectra_refusal);

    const auto& inv = ctx.inv;
    const auto& s = sum();
    const double k1 = k - 1;

    const std::string& id = spec.id;
    if (id == "B01") {
        const double rhs = (dmin + std::sqrt(dmin * dmin + 8.0 * inv.t_min / k1)) / 2.0;
        return lower(s.q_max, rhs, ctx.regular && ctx.linear);
    }
    if (id == "B02") {
        if (!ctx.tau) return refuse(ctx.tau_refusal);
        const int t = *ctx.tau;
        if (t < 1) return refuse("requires tau >= 1; no nonempty weak independent set exists");
        const int ki = *ctx.k;
        const double num = static_cast<double>(n - t) * static_cast<double>(binomial(ctx.n - t, ki - 1)) +
                           static_cast<double>(t) * static_cast<double>(binomial(ctx.n - t - 1, ki - 2));
        detail("tau", t);
        const bool expected = ctx.complete_bipartite_graph.has_value() &&
                              *ctx.complete_bipartite_graph ==
                                  std::make_pair(std::min(t, ctx.n - t), std::max(t, ctx.n - t));
        return lower(s.q_max, num / k1, expected);
    }
    if (id == "B03") {
        if (!ctx.chi) return refuse(ctx.chi_refusal);
        const double chi = *ctx.chi;
        if (chi < 2) return refuse("requires chi >= 2");
        detail("chi", chi);
        return lower(s.q_max, (km / n) * (1.0 + 1.0 / (chi - 1.0)));
    }
    if (id == "B04") {
        double rhs = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < ctx.n; ++i)
            rhs = std::max(rhs, static_cast<double>(inv.degrees[i]) + inv.average_degrees[i] / k1);
        return upper(s.q_max, rhs, ctx.regular || ctx.bipartite_semiregular_graph);
    }
    if (id == "B05") return two_sided(s.q_max, 2.0 * dmin, 2.0 * dmax, ctx.regular);
    if (id == "B06") {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int u = 1; u <= ctx.n; ++u) {
            double weighted = 0.0;
            for (int v = 1; v <= ctx.n; ++v)
                weighted += static_cast<double>(inv.codegree(u, v) * inv.degrees[v - 1]);
            const double du = static_cast<double>(inv.degrees[u - 1]);
            const double r = std::sqrt(2.0 * du * du + 2.0 / k1 * weighted);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        return two_sided(s.q_max, lo, hi);
    }
    if (id == "B07") {
        const double inner =
            (k1 * (2.0 * dmax * dmax + 2.0 * m * dmin * dmin) + 2.0 * m * (km - n * dmin)) / k1;
        return upper(s.q_max, std::sqrt(inner));
    }
    if (id == "B08") {
        const double inner = 2.0 * k1 * dmin * dmin + 2.0 * km - 2.0 * dmax * (n + 2.0 - k - dmin);
        detail("inner", inner);
        // Integer comparison: (n-1) d_max <= k m.
        const std::int64_t gate_lhs = static_cast<std::int64_t>(ctx.n - 1) * inv.d_max;
        const std::int64_t gate_rhs = static_cast<std::int64_t>(*ctx.k) * ctx.m;
        if (gate_lhs > gate_rhs) {
            BoundEvaluation out = refuse(
                "condition d_max <= km/(n-1) fails: (n-1) d_max = " + std::to_string(gate_lhs) +
                " > km = " + std::to_string(gate_rhs));
            return out;
        }
        if (inner < 0) {
            ev.note = "square root argument is negative";
            return lower(s.q_max, kNaN);
        }
        return lower(s.q_max, std::sqrt(inner / k1));
    }
    if (id == "B09") {
        const auto& sep = ctx.separated;
        if (!sep.exists) return refuse("no disjoint non-adjacent nonempty X, Y");
        const double half = sep.max_total / (2.0 * k1);
        const double extreme = sep.max_side / k1;
        detail("half_weights", half);
        detail("half_weights_x", sep.max_total_x);
        detail("half_weights_y", sep.max_total_y);
        detail("extreme", extreme);
        detail("extreme_x", sep.max_side_x);
        detail("extreme_y", sep.max_side_y);
        if (!sep.exhaustive) ev.note = "singleton pairs only";
        return lower(s.q_max, extreme);
    }
    if (id == "B10") {
        if (!ctx.complement) return refuse(ctx.complement_refusal);
        const double theta = static_cast<double>(binomial(ctx.n - 2, *ctx.k - 2)) / k1;
        detail("theta", theta);
        return lower(ctx.complement->q_max, (n - 2.0) * theta - s.q_min);
    }
    if (id == "B11") {
        const bool graph = *ctx.k == 2;
        ev.strict = !graph;
        if (graph) {
            ev.applicable = true;
            ev.lhs = s.q_min;
            ev.rhs = 0.0;
            ev.slack = s.q_min;
            ev.holds = passes(ev.slack);
            ev.equality_observed = std::abs(s.q_min) <= tol.equality;
            expect(ctx.two_section_bipartite);
            return std::move(ev);
        }
        return lower(s.q_min, 0.0, false);
    }
    if (id == "B12") {
        auto d = inv.degrees;
        std::partial_sort(d.begin(), d.begin() + 2, d.end());
        return upper(s.q_min, static_cast<double>(d[0] + d[1]) / 2.0);
    }
    if (id == "B13") {
        const auto& sep = ctx.separated;
        if (!sep.exists) return refuse("no disjoint non-adjacent nonempty X, Y");
        if (!sep.exhaustive) ev.note = "singleton pairs only";
        detail("min_total", sep.min_total);
        return upper(s.q_min, sep.min_total * m / (2.0 * k1));
    }
    if (id == "B14") return upper(s.q_min, dmax - 1.0 / k1);
    if (id == "B15") {
        const double inner =
            2.0 * dmax * dmax +
            (2.0 * km / k1) * (km - (n - 1.0) * dmin + (k1 * dmin - 1.0) * dmax);
        detail("inner", inner);
        if (inner < 0) {
            ev.note = "square root argument is negative";
            return upper(s.q_min, kNaN);
        }
        return upper(s.q_min, std::sqrt(inner));
    }
    if (id == "B16") return upper(s.q_min, 2.0 * std::sqrt(static_cast<double>(inv.z1) / n));
    if (id == "B17") return lower(s.s_q, 1.0);
    if (id == "B18") {
        if (!(2.0 * n * dmin > km))
            return refuse("condition d_min > d_bar/2 fails: 2 n d_min = " +
                          std::to_string(2 * ctx.n * inv.d_min) + " <= km = " +
                          std::to_string(*ctx.k * ctx.m));
        const auto& form = ctx.q_form;
        detail("form_n_minus_2", form.t_n_minus_2 ? 1.0 : 0.0);
        detail("form_n_minus_1", form.t_n_minus_1 ? 1.0 : 0.0);
        if (form.t_n_minus_2) detail("t", *form.t_n_minus_2);
        else if (form.t_n_minus_1) detail("t", *form.t_n_minus_1);
        return lower(s.s_q, (2.0 * n * dmin - km) / (n - 1.0),
                     form.t_n_minus_2.has_value() || form.t_n_minus_1.has_value());
    }
    if (id == "B19") return lower(s.s_q, (n * (dmax + 1.0 / k1) - km) / (n - 1.0));
    if (id == "B20") return lower(s.s_q, dmax - dmin + 1.0 / k1);
    if (id == "B21") {
        if (!ctx.regular) return refuse("requires a regular hypergraph");
        return one_sided(s.s_a, s.s_q, -std::abs(s.s_a - s.s_q), std::nullopt);
    }
    if (id == "B22") {
        const double a = 4.0 * dmax * dmax - 0.25;
        return upper(s.s_q, (a * a + 2.0 * (2.0 * dmax + 0.5)) / (2.0 * std::sqrt(2.0)));
    }
    if (id == "B23") {
        if (!ctx.tau) return refuse(ctx.tau_refusal);
        const double t = *ctx.tau;
        if (t < 1) return refuse("requires tau >= 1; no nonempty weak independent set exists");
        detail("tau", t);
        return upper(s.s_q, 2.0 * t * t * dmax / (t * t - 1.0 / n));
    }
    if (id == "B24") {
        const double z = static_cast<double>(inv.z1) + static_cast<double>(inv.alpha) / (k1 * k1);
        auto bound = [&](double d) {
            return 2.0 * d - std::sqrt(std::max(0.0, z - 4.0 * d * d) / (n - 1.0));
        };
        detail("rhs_with_d_max", bound(dmax));
        detail("form_n_minus_2", ctx.q_form.t_n_minus_2 ? 1.0 : 0.0);
        detail("form_n_minus_1", ctx.q_form.t_n_minus_1 ? 1.0 : 0.0);
        if (z - 4.0 * dmin * dmin < -tol.slack) ev.note = "square root argument is negative";
        return lower(s.s_q, bound(dmin),
                     ctx.q_form.t_n_minus_2.has_value() || ctx.q_form.t_n_minus_1.has_value());
    }
    if (id == "B25") {
        if (!ctx.chi) return refuse(ctx.chi_refusal);
        const double chi = *ctx.chi;
        detail("chi", chi);
        const double root = std::sqrt(n * n - 1.0);
        return two_sided(s.s_q, chi * root / (n * (1.0 + k1 * dmax)),
                         4.0 * n * chi * dmax / (k * root));
    }
    throw std::out_of_range("no evaluator for bound " + id);
}

}  // namespace

BoundEvaluation evaluate(const Hypergraph& h, const BoundSpec& spec, const BoundContext& ctx,
                         const Tolerances& tol) {
    if (ctx.digest != context_digest(h) || ctx.n != h.n() || ctx.m != h.m())
        throw Error(ErrorKind::ContextMismatch, "bound context was built from another hypergraph");
    return Evaluator(spec, ctx, tol).run();
}

std::vector<BoundEvaluation> evaluate_all(const Hypergraph& h, const BoundContext& ctx,
                                          const Tolerances& tol) {
    std::vector<BoundEvaluation> out;
    out.reserve(catalog().size());
    for (const auto& spec : catalog()) out.push_back(evaluate(h, spec, ctx, tol));
    return out;
}

std::vector<BoundEvaluation> evaluate_all(const Hypergraph& h, const Tolerances& tol) {
    return evaluate_all(h, build_context(h), tol);
}

ConsistencyReport equality_consistency_report(const std::vector<BoundEvaluation>& evals) {
    ConsistencyReport r;
    for (const auto& e : evals) {
        if (e.applicable && e.assurance == Assurance::Audited && !e.holds)
            r.audited_findings.push_back(e.bound_id);
        if (!find_spec(e.bound_id).equality) continue;
        r.rows.push_back({e.bound_id, e.equality_assurance, e.equality_expected,
                          e.equality_observed, e.consistent});
        if (e.consistent && !*e.consistent) {
            if (e.equality_assurance == Assurance::Asserted) ++r.asserted_inconsistencies;
            else ++r.audited_inconsistencies;
        }
    }
    return r;
}

// Serialization ----------------------------------------------------------

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "";
    return *b ? "true" : "false";
}

std::string number_or_blank(const BoundEvaluation& e, double x) {
    return e.applicable ? io::format_double(x) : "";
}

nlohmann::ordered_json json_number(double x) {
    if (std::isfinite(x)) return x;
    return io::format_double(x);
}

}  // namespace

std::string to_csv(const std::vector<BoundEvaluation>& evals) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& e : evals) {
        out += e.bound_id;
        out += ',';
        out += to_string(e.target);
        out += ',';
        out += to_string(e.assurance);
        out += ',';
        out += e.applicable ? "true" : "false";
        out += ',';
        out += csv_field(e.reason);
        out += ',';
        out += number_or_blank(e, e.lhs);
        out += ',';
        out += number_or_blank(e, e.rhs);
        out += ',';
        out += number_or_blank(e, e.slack);
        out += ',';
        out += e.applicable ? (e.holds ? "true" : "false") : "";
        out += ',';
        out += opt_bool(e.equality_expected);
        out += ',';
        out += opt_bool(e.equality_observed);
        out += ',';
        out += opt_bool(e.consistent);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<BoundEvaluation>& evals, bool with_details) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : evals) {
        nlohmann::ordered_json j;
        j["bound_id"] = e.bound_id;
        j["target"] = to_string(e.target);
        j["assurance"] = to_string(e.assurance);
        j["strict"] = e.strict;
        j["applicable"] = e.applicable;
        if (!e.applicable) {
            j["reason"] = e.reason;
        } else {
            j["lhs"] = json_number(e.lhs);
            j["rhs"] = json_number(e.rhs);
            if (e.rhs_lower) j["rhs_lower"] = json_number(*e.rhs_lower);
            if (e.rhs_upper) j["rhs_upper"] = json_number(*e.rhs_upper);
            j["slack"] = json_number(e.slack);
            j["holds"] = e.holds;
        }
        auto put = [&](const char* key, const std::optional<bool>& b) {
            j[key] = b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
        };
        put("equality_expected", e.equality_expected);
        put("equality_observed", e.equality_observed);
        put("consistent", e.consistent);
        if (e.equality_expected)
            j["equality_assurance"] = to_string(e.equality_assurance);
        if (with_details && !e.details.empty()) {
            nlohmann::ordered_json d;
            for (const auto& [name, value] : e.details) d[name] = json_number(value);
            j["details"] = d;
        }
        if (!e.note.empty()) j["note"] = e.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace hyperspec::bounds
