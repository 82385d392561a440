#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"

namespace hyperspec {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, Quotient };

std::string_view to_string(MatrixKind kind);

/// Eigenvalues of one matrix, sorted descending. `values` are the raw solver
/// output; reported() clamps round-off negatives of PSD kinds.
struct Spectrum {
    MatrixKind kind = MatrixKind::Adjacency;
    std::vector<double> values;

    int order() const noexcept { return static_cast<int>(values.size()); }
    double max() const { return values.front(); }
    double min() const { return values.back(); }
    double sum() const;

    /// For Laplacian and signless Laplacian spectra, values in [-1e-9, 0)
    /// are reported as 0.
    std::vector<double> reported() const;

    /// (value, multiplicity) groups; consecutive values within `tol` share a group.
    std::vector<std::pair<double, int>> multiplicities(double tol = 1e-7) const;
};

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 50;

/// Cyclic-by-row Jacobi. Iterates until the off-diagonal Frobenius norm is
/// below tol * (||M||_F + 1); throws NonConvergence after kMaxJacobiSweeps.
Spectrum eigenvalues(const SymmetricMatrix& m, MatrixKind kind,
                     double tol = kDefaultEigenTolerance);

struct SpectralSummary {
    double q_max = 0.0;
    double q_min = 0.0;
    double mu_max = 0.0;
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double s_q = 0.0;
    double s_a = 0.0;
    /// Single vertex or no edges: spreads are reported as 0.
    bool degenerate = false;
};

struct SpectralData {
    Spectrum adjacency;
    Spectrum laplacian;
    Spectrum signless;
    SpectralSummary summary;
};

SpectralData spectral_data(const Hypergraph& h, double tol = kDefaultEigenTolerance);
SpectralSummary spectral_summary(const Hypergraph& h, double tol = kDefaultEigenTolerance);

}  // namespace hyperspec
