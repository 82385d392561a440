#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "hyperspec/eigen.hpp"
#include "hyperspec/matrix.hpp"

using namespace hyperspec;
using doctest::Approx;

namespace {

void check_entries(const SymmetricMatrix& m, double diag, double off) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            CHECK(m(i, j) == Approx(i == j ? diag : off).epsilon(1e-14));
}

}  // namespace

TEST_CASE("adjacency, Laplacian and signless Laplacian of small examples") {
    const auto se = fixtures::single_edge(3);
    check_entries(adjacency_matrix(se), 0.0, 0.5);
    check_entries(signless_laplacian(se), 1.0, 0.5);
    check_entries(laplacian(se), 1.0, -0.5);
    check_entries(adjacency_matrix(fixtures::k34()), 0.0, 1.0);
    check_entries(signless_laplacian(fixtures::k34()), 3.0, 1.0);  // 2I + J
    for (int k = 3; k <= 8; ++k) check_entries(signless_laplacian(fixtures::single_edge(k)), 1.0, 1.0 / (k - 1));

    const auto empty = validate(4, {}, 3);
    check_entries(adjacency_matrix(empty), 0.0, 0.0);
}

TEST_CASE("matrix identities on random hypergraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int k = 2 + static_cast<int>(seed % 3);
        const auto h = generate(RandomConnectedUniform{7, k, 6, seed});
        const auto a = adjacency_matrix(h), l = laplacian(h), q = signless_laplacian(h);
        const auto inv = invariants(h);
        for (int i = 0; i < h.n(); ++i) {
            CHECK(a.row_sum(i) == Approx(static_cast<double>(inv.degrees[i])));
            CHECK(std::abs(l.row_sum(i)) <= 1e-12);
            for (int j = 0; j < h.n(); ++j) {
                CHECK(std::abs(q(i, j) - l(i, j) - 2 * a(i, j)) <= 1e-12);
                CHECK(q(i, j) == q(j, i));
            }
        }
        CHECK(q.trace() == static_cast<double>(k * h.m()));

        // A(H) + A(complement) = theta (J - I)
        const auto ac = adjacency_matrix(complement(h));
        const double theta = static_cast<double>(binomial(h.n() - 2, k - 2)) / (k - 1);
        for (int i = 0; i < h.n(); ++i)
            for (int j = 0; j < h.n(); ++j)
                CHECK(std::abs(a(i, j) + ac(i, j) - (i == j ? 0.0 : theta)) <= 1e-12);
    }
}

TEST_CASE("matrix JSON export") {
    CHECK(adjacency_matrix(fixtures::single_edge(2)).to_json() ==
          "{\"order\":2,\"entries\":[0.0,1.0,1.0,0.0]}");
}

TEST_CASE("partitions") {
    CHECK_THROWS_AS(Partition::make(3, {{1, 2}}), Error);
    CHECK_THROWS_AS(Partition::make(3, {{1, 2}, {2, 3}}), Error);
    CHECK_THROWS_AS(Partition::make(3, {{1, 2, 3}, {}}), Error);
    CHECK_THROWS_AS(Partition::make(3, {{1, 4}, {2, 3}}), Error);
    const auto p = Partition::make(4, {{3, 1}, {2, 4}});
    CHECK(p.block_of(3) == 0);
    CHECK(p.block_of(4) == 1);
}

TEST_CASE("equitable partitions") {
    const auto se = fixtures::single_edge(3);
    const auto singles = is_equitable(se, Partition::singletons(3));
    REQUIRE(singles.equitable());
    const auto a = adjacency_matrix(se);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) CHECK((*singles.constants)[p * 3 + q] == a(p, q));

    const auto k = is_equitable(fixtures::k34(), Partition::make(4, {{1, 2}, {3, 4}}));
    REQUIRE(k.equitable());
    CHECK(*k.constants == std::vector<double>{1, 2, 2, 1});

    const auto bad = is_equitable(fixtures::make(5, {{1, 2, 3}, {3, 4, 5}}),
                                  Partition::make(5, {{1}, {2, 3, 4, 5}}));
    CHECK_FALSE(bad.equitable());
    REQUIRE(bad.violation.has_value());
    CHECK_THROWS_AS(quotient_matrix(fixtures::make(5, {{1, 2, 3}, {3, 4, 5}}),
                                    Partition::make(5, {{1}, {2, 3, 4, 5}})),
                    Error);
}

TEST_CASE("coarsest equitable partition") {
    CHECK(coarsest_equitable_partition(fixtures::k34()).size() == 1);
    const auto kb = coarsest_equitable_partition(fixtures::k23());
    CHECK(kb.blocks() == std::vector<std::vector<Vertex>>{{1, 2}, {3, 4, 5}});
    const auto path = coarsest_equitable_partition(fixtures::make(5, {{1, 2, 3}, {3, 4, 5}}));
    CHECK(path.size() == 2);  // {1,2,4,5} and {3}
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto h = generate(RandomConnectedUniform{7, 3, 5, seed});
        CHECK(is_equitable(h, coarsest_equitable_partition(h)).equitable());
    }
}

TEST_CASE("quotient matrices") {
    const auto k2 = fixtures::single_edge(2);
    const auto q = quotient_matrix(k2, Partition::singletons(2));
    CHECK(q(0, 0) == 1.0);
    CHECK(q(0, 1) == -1.0);
    CHECK(q(1, 0) == -1.0);
    CHECK(q(1, 1) == 1.0);
    const auto s = eigenvalues(q.symmetrized(), MatrixKind::Quotient);
    CHECK(s.values[0] == Approx(2.0));
    CHECK(std::abs(s.values[1]) < 1e-12);

    const auto kb = fixtures::k23();
    const auto qb = quotient_matrix(kb, Partition::make(5, {{1, 2}, {3, 4, 5}}));
    const auto sb = eigenvalues(qb.symmetrized(), MatrixKind::Quotient);
    CHECK(sb.values[0] == Approx(5.0));
    CHECK(std::abs(sb.values[1]) < 1e-12);

    // Singleton partition: M = L.
    const auto h = fixtures::star7();
    const auto ms = quotient_matrix(h, Partition::singletons(7));
    const auto l = laplacian(h);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(std::abs(ms(i, j) - l(i, j)) <= 1e-12);
}

TEST_CASE("row sum bracket") {
    const auto q = signless_laplacian(fixtures::single_edge(3));
    const std::vector<double> x{0.0, 1.0}, one{1.0}, x2{0.0, 0.0, 1.0};
    CHECK(row_sum_bracket(q, x) == std::pair{2.0, 2.0});
    CHECK(row_sum_bracket(q, one) == std::pair{1.0, 1.0});
    const auto [lo, hi] = row_sum_bracket(q, x2);
    CHECK(lo == Approx(4.0));
    CHECK(hi == Approx(4.0));
}

TEST_CASE("bordered characteristic polynomial") {
    auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == Approx(b[i]));
    };
    const std::vector<double> one{1.0}, zeros{0.0, 0.0}, ones{1.0, 1.0};
    close(bordered_charpoly(0.0, one, one, 0.0), {-1, 0, 1});
    // (t-2)(t^2-7t+10) = t^3 - 9t^2 + 24t - 20
    close(bordered_charpoly(2.0, zeros, zeros, 5.0), {-20, 24, -9, 1});
    // (t-1)(t^2-2t-1) = t^3 - 3t^2 + t + 1
    close(bordered_charpoly(1.0, ones, ones, 1.0), {1, 1, -3, 1});
}
