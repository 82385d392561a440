#include "hyperspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace hyperspec {

std::string_view to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::SignlessLaplacian: return "signlessLaplacian";
        case MatrixKind::Quotient: return "quotient";
    }
    return "unknown";
}

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

std::vector<double> Spectrum::reported() const {
    auto out = values;
    if (kind == MatrixKind::Laplacian || kind == MatrixKind::SignlessLaplacian)
        for (double& v : out)
            if (v < 0.0 && v >= -1e-9) v = 0.0;
    return out;
}

std::vector<std::pair<double, int>> Spectrum::multiplicities(double tol) const {
    std::vector<std::pair<double, int>> groups;
    for (double v : values) {
        if (!groups.empty() && std::abs(groups.back().first - v) <= tol)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1);
    }
    return groups;
}

namespace {

double off_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues(const SymmetricMatrix& m, MatrixKind kind, double tol) {
    const int n = m.order();
    std::vector<double> a(m.entries().begin(), m.entries().end());
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double frob = 0.0;
    for (double v : a) frob += v * v;
    const double target = tol * (std::sqrt(frob) + 1.0);

    int sweep = 0;
    while (off_norm(a, n) >= target) {
        if (sweep++ == kMaxJacobiSweeps)
            throw Error(ErrorKind::NonConvergence,
                        "Jacobi iteration did not converge in " +
                            std::to_string(kMaxJacobiSweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                // Symmetric Schur rotation annihilating a_pq.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
    }

    Spectrum s{kind, {}};
    s.values.reserve(n);
    for (int i = 0; i < n; ++i) s.values.push_back(at(i, i));
    std::stable_sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

SpectralData spectral_data(const Hypergraph& h, double tol) {
    SpectralData d;
    d.adjacency = eigenvalues(adjacency_matrix(h), MatrixKind::Adjacency, tol);
    d.laplacian = eigenvalues(laplacian(h), MatrixKind::Laplacian, tol);
    d.signless = eigenvalues(signless_laplacian(h), MatrixKind::SignlessLaplacian, tol);

    auto& s = d.summary;
    s.q_max = d.signless.max();
    s.q_min = d.signless.min();
    s.mu_max = d.laplacian.max();
    s.lambda_max = d.adjacency.max();
    s.lambda_min = d.adjacency.min();
    s.degenerate = h.n() < 2 || h.m() == 0;
    if (!s.degenerate) {
        s.s_q = s.q_max - s.q_min;
        s.s_a = s.lambda_max - s.lambda_min;
    }
    return d;
}

SpectralSummary spectral_summary(const Hypergraph& h, double tol) {
    return spectral_data(h, tol).summary;
}

}  // namespace hyperspec
