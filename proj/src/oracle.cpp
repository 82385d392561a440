#include "hyperspec/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace hyperspec::oracle {

std::vector<std::string> IntegerPolynomial::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coefficients) out.push_back(c.get_str());
    return out;
}

IntegerPolynomial charpoly(const std::vector<mpz_class>& a, int n) {
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    // Faddeev-LeVerrier: N_1 = I, c_{n-1} = -tr(A)
    // N_k = A N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A N_k) / k.
    std::vector<mpz_class> coeff(n + 1);
    coeff[n] = 1;
    std::vector<mpz_class> nk(static_cast<std::size_t>(n) * n), an(nk.size());
    for (int i = 0; i < n; ++i) nk[idx(i, i)] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mpz_class s = 0;
                for (int l = 0; l < n; ++l)
                    if (a[idx(i, l)] != 0 && nk[idx(l, j)] != 0) s += a[idx(i, l)] * nk[idx(l, j)];
                an[idx(i, j)] = s;
            }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += an[idx(i, i)];
        mpz_class rem;
        mpz_class q;
        mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        if (rem != 0)
            throw std::logic_error("Faddeev-LeVerrier: inexact division at step " + std::to_string(k));
        coeff[n - k] = -q;
        for (std::size_t i = 0; i < an.size(); ++i) nk[i] = an[i];
        for (int i = 0; i < n; ++i) nk[idx(i, i)] += coeff[n - k];
    }
    return {std::move(coeff)};
}

IntegerPolynomial exact_charpoly(const Hypergraph& h, MatrixKind kind) {
    const int n = h.n();
    if (n > kMaxCharpolyOrder)
        throw Error(ErrorKind::TooLarge, "exact characteristic polynomial refused: n = " +
                                             std::to_string(n) + " exceeds " +
                                             std::to_string(kMaxCharpolyOrder));
    if (!h.uniformity())
        throw Error(ErrorKind::NotUniform, "exact characteristic polynomial needs uniform input");
    if (kind == MatrixKind::Quotient)
        throw std::invalid_argument("exact_charpoly: quotient matrices are not supported");
    const long k1 = *h.uniformity() - 1;
    const auto inv = invariants(h);

    std::vector<mpz_class> m(static_cast<std::size_t>(n) * n);
    const long sign = kind == MatrixKind::Laplacian ? -1 : 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& e = m[static_cast<std::size_t>(i) * n + j];
            if (i == j)
                e = kind == MatrixKind::Adjacency ? 0 : k1 * inv.degrees[i];
            else
                e = sign * static_cast<long>(inv.codegree(i + 1, j + 1));
        }
    return charpoly(m, n);
}

std::vector<double> residuals(const IntegerPolynomial& p, std::span<const double> values,
                              double scale) {
    std::vector<long double> c;
    long double magnitude = 0.0L;
    for (const auto& z : p.coefficients) {
        // mpz -> long double through the double mantissa/exponent split
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        const long double v = std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
        c.push_back(v);
        magnitude += std::abs(v);
    }
    std::vector<double> out;
    out.reserve(values.size());
    const int deg = p.degree();
    for (double v : values) {
        const long double x = static_cast<long double>(scale) * v;
        long double acc = 0.0L;
        for (int i = deg; i >= 0; --i) acc = acc * x + c[i];
        const long double norm =
            std::max(1.0L, magnitude * std::pow(std::max(1.0L, std::abs(x)), static_cast<long double>(deg)));
        out.push_back(static_cast<double>(std::abs(acc) / norm));
    }
    return out;
}

namespace {

void require_naive(const Hypergraph& h) {
    if (h.n() > kMaxNaiveOrder)
        throw Error(ErrorKind::TooLarge, "naive enumeration refused: n = " +
                                             std::to_string(h.n()) + " exceeds " +
                                             std::to_string(kMaxNaiveOrder));
}

}  // namespace

int naive_tau(const Hypergraph& h) {
    require_naive(h);
    const int n = h.n();
    const auto adj = two_section(h);
    int best = 0;
    for (unsigned s = 1; s < (1U << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(s >> u & 1U)) continue;
            for (int v = 0; v < n && ok; ++v) {
                if (u == v) continue;
                const bool in_s = s >> v & 1U;
                if (in_s && adj[u][v]) ok = false;     // S must be independent
                if (!in_s && !adj[u][v]) ok = false;   // and joined to all of V \ S
            }
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

int naive_chi(const Hypergraph& h) {
    require_naive(h);
    const int n = h.n();
    const auto adj = two_section(h);
    // Restricted growth strings enumerate every set partition exactly once.
    std::vector<int> block(n, 0), prefix_max(n, 0);
    int best = n;
    while (true) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n && proper; ++v)
                if (block[u] == block[v] && adj[u][v]) proper = false;
        if (proper) best = std::min(best, prefix_max[n - 1] + 1);

        int i = n - 1;
        while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++block[i];
        prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
        for (int j = i + 1; j < n; ++j) {
            block[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
    return best;
}

}  // namespace hyperspec::oracle
