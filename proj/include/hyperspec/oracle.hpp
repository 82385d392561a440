#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hyperspec/eigen.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec::oracle {

/// Arbitrary precision integer polynomial, constant term first.
struct IntegerPolynomial {
    std::vector<mpz_class> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::vector<std::string> to_strings() const;
};

inline constexpr int kMaxCharpolyOrder = 16;

/// Characteristic polynomial det(tI - (k-1)M) of the scaled matrix
/// M in {A, L, Q}, by the Faddeev-LeVerrier recurrence over the integers.
/// (k-1)M is integral for k-uniform input. TooLarge for n > 16, NotUniform
/// for mixed edge sizes.
IntegerPolynomial exact_charpoly(const Hypergraph& h, MatrixKind kind);

/// Same recurrence for an arbitrary square integer matrix (row-major).
IntegerPolynomial charpoly(const std::vector<mpz_class>& matrix, int order);

/// |p(scale v)| / max(1, sum|c_i| * max(1, |scale v|)^deg) for each v.
std::vector<double> residuals(const IntegerPolynomial& p, std::span<const double> values,
                              double scale);

inline constexpr int kMaxNaiveOrder = 8;

/// Plain 2^n enumeration of weak independent sets.
int naive_tau(const Hypergraph& h);
/// Minimum block count over all set partitions of V into independent blocks.
int naive_chi(const Hypergraph& h);

}  // namespace hyperspec::oracle
