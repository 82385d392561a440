#pragma once

#include <string>
#include <vector>

#include "hyperspec/bounds.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct VerifyCheck {
    std::string name;
    bool passed = true;
    /// False when the check did not apply to this input.
    bool ran = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

/// Runs every structural, spectral and oracle invariant that applies to h:
/// traces, PSD-ness, mu_max <= q_max, the mu_max and q_max brackets, characteristic-polynomial residuals,
/// quotient-spectrum containment, naive/pruned agreement, chi bound,
/// complement round trip and the asserted part of the bound catalog.
VerifyReport verify(const Hypergraph& h, const bounds::Tolerances& tol = {});

std::string to_json(const VerifyReport& r);

}  // namespace hyperspec
