#include "hyperspec/verify.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "hyperspec/eigen.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/matrix.hpp"
#include "hyperspec/oracle.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

std::string fmt(double x) { return io::format_double(x); }

void skip(VerifyReport& r, std::string name, std::string why) {
    r.checks.push_back({std::move(name), true, false, std::move(why)});
}

void check(VerifyReport& r, std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, true, std::move(detail)});
}

}  // namespace

VerifyReport verify(const Hypergraph& h, const bounds::Tolerances& tol) {
    VerifyReport r;
    const auto inv = invariants(h);
    const auto k = h.uniformity();
    const bool connected = is_connected(h);

    std::optional<SpectralData> sd;
    try {
        sd = spectral_data(h);
    } catch (const Error& e) {
        check(r, "eigensolve", false, e.what());
        return r;
    }
    const auto& s = sd->summary;

    const double tr_q = signless_laplacian(h).trace();
    check(r, "trace(Q) = sum of degrees",
          std::abs(tr_q - static_cast<double>(inv.degree_sum)) <= 1e-9,
          fmt(tr_q) + " vs " + std::to_string(inv.degree_sum));
    for (const Spectrum* sp : {&sd->adjacency, &sd->laplacian, &sd->signless}) {
        const double expected = sp->kind == MatrixKind::Adjacency ? 0.0 : tr_q;
        check(r, "eigenvalue sum = trace (" + std::string(to_string(sp->kind)) + ")",
              std::abs(sp->sum() - expected) <= 1e-8, fmt(sp->sum()) + " vs " + fmt(expected));
    }
    if (k) {
        const double k1 = *k - 1;
        double sq = 0.0;
        for (double v : sd->signless.values) sq += v * v;
        const double expected = static_cast<double>(inv.z1) + static_cast<double>(inv.alpha) / (k1 * k1);
        check(r, "trace(Q^2) = Z1 + alpha/(k-1)^2", std::abs(sq - expected) <= 1e-9 * std::max(1.0, expected),
              fmt(sq) + " vs " + fmt(expected));
    }
    check(r, "L and Q positive semidefinite",
          sd->laplacian.min() >= -1e-9 && sd->signless.min() >= -1e-9,
          "min L " + fmt(sd->laplacian.min()) + ", min Q " + fmt(sd->signless.min()));
    check(r, "mu_max <= q_max", s.mu_max <= s.q_max + 1e-9, fmt(s.mu_max) + " vs " + fmt(s.q_max));

    check(r, "2 d_min <= q_max <= 2 d_max",
          2.0 * inv.d_min - 1e-9 <= s.q_max && s.q_max <= 2.0 * inv.d_max + 1e-9,
          fmt(s.q_max) + " in [" + std::to_string(2 * inv.d_min) + ", " +
              std::to_string(2 * inv.d_max) + "]");

    if (k && connected && h.m() > 0 && h.n() >= 2) {
        const double floor = static_cast<double>(inv.d_max) + 1.0 / (*k - 1);
        check(r, "mu_max >= d_max + 1/(k-1)", s.mu_max >= floor - 1e-9,
              fmt(s.mu_max) + " vs " + fmt(floor));
        if (*k >= 3)
            check(r, "q_min > 0 (k >= 3)", s.q_min > 1e-8, fmt(s.q_min));
        else
            check(r, "q_min = 0 iff bipartite (k = 2)",
                  (s.q_min < 1e-8) == two_section_bipartite(h), fmt(s.q_min));
    } else {
        skip(r, "q_min positivity", "needs a connected uniform input with an edge");
    }

    if (k && h.n() <= oracle::kMaxCharpolyOrder) {
        const double scale = *k - 1;
        for (const Spectrum* sp : {&sd->adjacency, &sd->laplacian, &sd->signless}) {
            const auto p = oracle::exact_charpoly(h, sp->kind);
            const auto res = oracle::residuals(p, sp->values, scale);
            const double worst = res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
            check(r, "charpoly residual (" + std::string(to_string(sp->kind)) + ")",
                  worst <= 1e-6, "max " + fmt(worst));
        }
    } else {
        skip(r, "charpoly residuals", "needs a uniform input with n <= 16");
    }

    {
        const auto part = coarsest_equitable_partition(h);
        const auto qm = quotient_matrix(h, part);
        const auto qs = eigenvalues(qm.symmetrized(), MatrixKind::Quotient);
        double worst = 0.0;
        for (double v : qs.values) {
            double best = std::numeric_limits<double>::infinity();
            for (double w : sd->laplacian.values) best = std::min(best, std::abs(v - w));
            worst = std::max(worst, best);
        }
        check(r, "quotient spectrum inside L spectrum", worst <= 1e-7,
              std::to_string(part.size()) + " blocks, max distance " + fmt(worst));
    }

    try {
        const int tau = weak_independence_number(h);
        const int chi = strong_chromatic_number(h);
        if (k)
            check(r, "chi <= 1 + (k-1) d_max", chi <= 1 + (*k - 1) * inv.d_max,
                  "chi = " + std::to_string(chi));
        if (h.n() <= oracle::kMaxNaiveOrder) {
            check(r, "tau matches naive enumeration", tau == oracle::naive_tau(h),
                  "tau = " + std::to_string(tau));
            check(r, "chi matches naive enumeration", chi == oracle::naive_chi(h),
                  "chi = " + std::to_string(chi));
        } else {
            skip(r, "naive tau/chi", "needs n <= 8");
        }
    } catch (const Error& e) {
        skip(r, "tau/chi", e.what());
    }

    if (k) {
        const auto back = complement(complement(h));
        auto sorted = [](std::vector<Edge> e) {
            std::sort(e.begin(), e.end());
            return e;
        };
        check(r, "complement is an involution", sorted(back.edges()) == sorted(h.edges()));
    }

    if (k && connected && h.m() > 0) {
        const auto evals = bounds::evaluate_all(h, tol);
        std::string failed;
        int findings = 0;
        for (const auto& e : evals) {
            if (e.violation() || e.equality_failure()) failed += (failed.empty() ? "" : " ") + e.bound_id;
            if (e.finding()) ++findings;
        }
        check(r, "asserted bounds hold", failed.empty(),
              failed.empty() ? std::to_string(findings) + " audited findings" : "violated: " + failed);
        if (inv.d_max == inv.d_min)
            check(r, "s_A = s_Q (regular)", std::abs(s.s_a - s.s_q) <= 1e-9,
                  fmt(s.s_a) + " vs " + fmt(s.s_q));
    } else {
        skip(r, "bound catalog", "needs a connected uniform input with an edge");
    }
    return r;
}

std::string to_json(const VerifyReport& r) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j;
        j["check"] = c.name;
        j["status"] = !c.ran ? "skipped" : (c.passed ? "pass" : "fail");
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["passed"] = r.passed();
    out["checks"] = arr;
    return out.dump(2) + "\n";
}

}  // namespace hyperspec
