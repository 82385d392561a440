#include "hyperspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

namespace hyperspec {

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::row_sum(int i) const {
    double s = 0.0;
    for (double v : row(i)) s += v;
    return s;
}

SymmetricMatrix SymmetricMatrix::identity(int order) {
    SymmetricMatrix m(order);
    for (int i = 0; i < order; ++i) m.set(i, i, 1.0);
    return m;
}

std::string SymmetricMatrix::to_json() const {
    nlohmann::ordered_json doc;
    doc["order"] = order_;
    doc["entries"] = data_;
    return doc.dump();
}

SymmetricMatrix adjacency_matrix(const Hypergraph& h) {
    const int n = h.n();
    // Integer co-degree counts per edge size, divided once by (size - 1).
    std::map<std::size_t, std::vector<std::int64_t>> counts;
    for (const auto& e : h.edges()) {
        auto& c = counts[e.size()];
        if (c.empty()) c.assign(static_cast<std::size_t>(n) * n, 0);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                ++c[static_cast<std::size_t>(e[a] - 1) * n + (e[b] - 1)];
    }
    SymmetricMatrix a(n);
    for (const auto& [size, c] : counts) {
        const double denom = static_cast<double>(size - 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto cnt = c[static_cast<std::size_t>(i) * n + j];
                if (cnt) a.add(i, j, static_cast<double>(cnt) / denom);
            }
    }
    return a;
}

SymmetricMatrix degree_matrix(const Hypergraph& h) {
    SymmetricMatrix d(h.n());
    for (const auto& e : h.edges())
        for (Vertex v : e) d.add(v - 1, v - 1, 1.0);
    return d;
}

namespace {

SymmetricMatrix combine(const Hypergraph& h, double sign) {
    const auto a = adjacency_matrix(h);
    auto out = degree_matrix(h);
    for (int i = 0; i < h.n(); ++i)
        for (int j = i + 1; j < h.n(); ++j)
            if (a(i, j) != 0.0) out.set(i, j, sign * a(i, j));
    return out;
}

}  // namespace

SymmetricMatrix laplacian(const Hypergraph& h) { return combine(h, -1.0); }
SymmetricMatrix signless_laplacian(const Hypergraph& h) { return combine(h, 1.0); }

Partition Partition::make(int n, std::vector<std::vector<Vertex>> blocks) {
    Partition p;
    p.n_ = n;
    p.owner_.assign(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw Error(ErrorKind::InvalidPartition, "partition block is empty");
        std::sort(blocks[b].begin(), blocks[b].end());
        for (Vertex v : blocks[b]) {
            if (v < 1 || v > n)
                throw Error(ErrorKind::InvalidPartition,
                            "partition vertex " + std::to_string(v) + " out of range");
            if (p.owner_[v - 1] != -1)
                throw Error(ErrorKind::InvalidPartition,
                            "vertex " + std::to_string(v) + " appears in two blocks");
            p.owner_[v - 1] = static_cast<int>(b);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (p.owner_[v - 1] == -1)
            throw Error(ErrorKind::InvalidPartition,
                        "vertex " + std::to_string(v) + " is not covered");
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<Vertex>> blocks;
    for (int v = 1; v <= n; ++v) blocks.push_back({v});
    return make(n, std::move(blocks));
}

EquitableCheck is_equitable(const Hypergraph& h, const Partition& p) {
    const auto a = adjacency_matrix(h);
    const int t = p.size();
    std::vector<double> constants(static_cast<std::size_t>(t) * t, 0.0);
    std::vector<double> sums(t);
    for (int bp = 0; bp < t; ++bp) {
        bool first = true;
        for (Vertex i : p.blocks()[bp]) {
            std::fill(sums.begin(), sums.end(), 0.0);
            for (int j = 0; j < h.n(); ++j) sums[p.block_of(j + 1)] += a(i - 1, j);
            for (int bq = 0; bq < t; ++bq) {
                auto& c = constants[static_cast<std::size_t>(bp) * t + bq];
                if (first) {
                    c = sums[bq];
                } else if (std::abs(sums[bq] - c) > kEquitableTolerance) {
                    return {std::nullopt, EquitableViolation{i, bq, c, sums[bq]}};
                }
            }
            first = false;
        }
    }
    return {std::move(constants), std::nullopt};
}

Partition coarsest_equitable_partition(const Hypergraph& h) {
    const int n = h.n();
    std::int64_t scale = 1;
    for (const auto& e : h.edges()) scale = std::lcm(scale, static_cast<std::int64_t>(e.size() - 1));
    std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : h.edges()) {
        const auto step = scale / static_cast<std::int64_t>(e.size() - 1);
        for (Vertex a : e)
            for (Vertex b : e)
                if (a != b) w[static_cast<std::size_t>(a - 1) * n + (b - 1)] += step;
    }

    std::vector<int> color(n, 0);
    int colors = 1;
    while (true) {
        using Signature = std::pair<int, std::vector<std::pair<int, std::int64_t>>>;
        std::map<Signature, int> ids;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::map<int, std::int64_t> into;
            for (int j = 0; j < n; ++j) {
                const auto wij = w[static_cast<std::size_t>(i) * n + j];
                if (wij) into[color[j]] += wij;
            }
            Signature sig{color[i], {into.begin(), into.end()}};
            auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            next[i] = it->second;
        }
        const int refined = static_cast<int>(ids.size());
        color = std::move(next);
        if (refined == colors) break;
        colors = refined;
    }

    std::vector<std::vector<Vertex>> blocks(colors);
    for (int i = 0; i < n; ++i) blocks[color[i]].push_back(i + 1);
    return Partition::make(n, std::move(blocks));
}

SymmetricMatrix QuotientMatrix::symmetrized() const {
    SymmetricMatrix s(order_);
    for (int p = 0; p < order_; ++p) {
        s.set(p, p, (*this)(p, p));
        for (int q = p + 1; q < order_; ++q)
            s.set(p, q, (*this)(p, q) * std::sqrt(static_cast<double>(sizes_[p]) / sizes_[q]));
    }
    return s;
}

QuotientMatrix quotient_matrix(const Hypergraph& h, const Partition& p) {
    auto check = is_equitable(h, p);
    if (!check.equitable()) {
        const auto& v = *check.violation;
        throw Error(ErrorKind::NotEquitable,
                    "partition is not equitable: vertex " + std::to_string(v.vertex) +
                        " sends " + std::to_string(v.actual) + " into block " +
                        std::to_string(v.block + 1) + ", expected " + std::to_string(v.expected));
    }
    QuotientMatrix qm;
    const int t = p.size();
    qm.order_ = t;
    qm.constants_ = std::move(*check.constants);
    qm.entries_.assign(static_cast<std::size_t>(t) * t, 0.0);
    for (const auto& b : p.blocks()) qm.sizes_.push_back(static_cast<int>(b.size()));
    for (int a = 0; a < t; ++a) {
        double row = 0.0;
        for (int b = 0; b < t; ++b) row += qm.constant(a, b);
        for (int b = 0; b < t; ++b)
            qm.entries_[static_cast<std::size_t>(a) * t + b] =
                a == b ? row - qm.constant(a, a) : -qm.constant(a, b);
    }
    return qm;
}

namespace {

SymmetricMatrix multiply(const SymmetricMatrix& x, const SymmetricMatrix& y) {
    // Products of commuting symmetric matrices (polynomials in Q) stay symmetric.
    const int n = x.order();
    SymmetricMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += x(i, l) * y(l, j);
            r.set(i, j, s);
        }
    return r;
}

}  // namespace

std::pair<double, double> row_sum_bracket(const SymmetricMatrix& q, std::span<const double> poly) {
    const int n = q.order();
    if (poly.empty() || n == 0) return {0.0, 0.0};
    SymmetricMatrix r(n);
    for (int i = 0; i < n; ++i) r.set(i, i, poly.back());
    for (std::size_t d = poly.size() - 1; d-- > 0;) {
        r = multiply(r, q);
        for (int i = 0; i < n; ++i) r.add(i, i, poly[d]);
    }
    double lo = r.row_sum(0), hi = lo;
    for (int i = 1; i < n; ++i) {
        lo = std::min(lo, r.row_sum(i));
        hi = std::max(hi, r.row_sum(i));
    }
    return {lo, hi};
}

std::vector<double> bordered_charpoly(double lambda, std::span<const double> x,
                                      std::span<const double> y, double a) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("bordered_charpoly: x and y must be nonempty and equal length");
    double yx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) yx += y[i] * x[i];
    std::vector<double> poly{a * lambda - yx, -(a + lambda), 1.0};
    for (std::size_t rep = 1; rep < x.size(); ++rep) {
        // multiply by (t - lambda)
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= lambda * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace hyperspec
