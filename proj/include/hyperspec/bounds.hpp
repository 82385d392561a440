#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperspec/eigen.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/structure.hpp"

namespace hyperspec::bounds {

enum class Target {
    QMaxLower,
    QMaxUpper,
    QMaxTwoSided,
    QMinUpper,
    QMinPositivity,
    SpreadLower,
    SpreadUpper,
    SpreadTwoSided,
    SpreadIdentity,
    ComplementRelation,
};

/// Asserted bounds must hold on every applicable input; audited ones are
/// evaluated and reported, and a failure is a finding rather than an error.
enum class Assurance { Asserted, Audited };

std::string_view to_string(Target t);
std::string_view to_string(Assurance a);

struct BoundSpec {
    std::string id;
    Target target;
    bool strict;
    Assurance assurance;
    /// The inequality in plain text.
    std::string statement;
    std::string applicability;
    /// Predicate describing when equality is claimed, if any.
    std::optional<std::string> equality;
    Assurance equality_assurance = Assurance::Asserted;
};

/// The 25 bounds B01..B25 in stable order.
const std::vector<BoundSpec>& catalog();
const BoundSpec& find_spec(std::string_view id);

struct Tolerances {
    double slack = 1e-9;
    double equality = 1e-7;
};

/// Exhaustive search summary over disjoint nonempty vertex sets X, Y with no
/// X-Y adjacency. Exhaustive for n <= 14; singleton pairs beyond.
struct SeparatedSets {
    bool exists = false;
    bool exhaustive = false;
    /// Smallest |X| + |Y|.
    int min_total = 0;
    /// Largest |X| + |Y| and the sizes realising it.
    int max_total = 0;
    int max_total_x = 0, max_total_y = 0;
    /// Largest max(|X|, |Y|) and the sizes realising it.
    int max_side = 0;
    int max_side_x = 0, max_side_y = 0;
};

inline constexpr int kMaxSeparatedSetsOrder = 14;

SeparatedSets separated_sets(const Hypergraph& h);

/// Q = t((n - c) I + J) detection for c in {2, 1}; holds the fitted t.
struct ScaledFormMatch {
    std::optional<double> t_n_minus_2;
    std::optional<double> t_n_minus_1;
};

/// Everything the evaluator reads; built once per hypergraph. Parts that a
/// solver or search refused stay empty and carry the refusal text.
struct BoundContext {
    std::uint64_t digest = 0;
    int n = 0;
    int m = 0;
    std::optional<int> k;
    bool connected = false;
    InvariantSet inv;

    std::optional<SpectralData> spectra;
    std::string spectra_refusal;
    std::optional<SpectralSummary> complement;
    std::string complement_refusal;

    std::optional<int> tau;
    std::string tau_refusal;
    std::optional<int> chi;
    std::string chi_refusal;

    bool regular = false;
    bool linear = false;
    bool two_section_bipartite = false;
    bool bipartite_semiregular_graph = false;
    std::optional<std::pair<int, int>> complete_bipartite_graph;

    SeparatedSets separated;
    ScaledFormMatch q_form;
};

BoundContext build_context(const Hypergraph& h, double eigen_tol = kDefaultEigenTolerance);

struct BoundEvaluation {
    std::string bound_id;
    Target target = Target::QMaxLower;
    Assurance assurance = Assurance::Asserted;
    Assurance equality_assurance = Assurance::Asserted;
    bool strict = false;
    bool applicable = false;
    std::string reason;
    /// The spectral quantity being bounded and the binding bound value.
    /// NaN when inapplicable.
    double lhs = 0.0;
    double rhs = 0.0;
    /// >= 0 means the bound holds. For two-sided bounds the smaller side.
    double slack = 0.0;
    /// Vacuously true when inapplicable.
    bool holds = true;
    std::optional<double> rhs_lower;
    std::optional<double> rhs_upper;
    std::optional<bool> equality_expected;
    std::optional<bool> equality_observed;
    std::optional<bool> consistent;
    std::vector<std::pair<std::string, double>> details;
    std::string note;

    /// Asserted, applicable and failing.
    bool violation() const { return applicable && assurance == Assurance::Asserted && !holds; }
    /// Asserted equality characterization disagreeing with the observation.
    bool equality_failure() const {
        return consistent.has_value() && !*consistent && equality_assurance == Assurance::Asserted;
    }
    /// Audited and failing, or audited characterization disagreeing.
    bool finding() const {
        return (applicable && assurance == Assurance::Audited && !holds) ||
               (consistent.has_value() && !*consistent &&
                equality_assurance == Assurance::Audited);
    }
};

/// Throws ContextMismatch when ctx was built from a different hypergraph.
BoundEvaluation evaluate(const Hypergraph& h, const BoundSpec& spec, const BoundContext& ctx,
                         const Tolerances& tol = {});

std::vector<BoundEvaluation> evaluate_all(const Hypergraph& h, const Tolerances& tol = {});
std::vector<BoundEvaluation> evaluate_all(const Hypergraph& h, const BoundContext& ctx,
                                          const Tolerances& tol = {});

struct EqualityRow {
    std::string bound_id;
    Assurance assurance;
    std::optional<bool> expected;
    std::optional<bool> observed;
    std::optional<bool> consistent;
};

struct ConsistencyReport {
    std::vector<EqualityRow> rows;
    int asserted_inconsistencies = 0;
    int audited_inconsistencies = 0;
    /// Audited bounds that failed outright.
    std::vector<std::string> audited_findings;
};

ConsistencyReport equality_consistency_report(const std::vector<BoundEvaluation>& evals);

inline constexpr std::string_view kCsvHeader =
    "bound_id,target,assurance,applicable,reason,lhs,rhs,slack,holds,"
    "equality_expected,equality_observed,consistent";

std::string to_csv(const std::vector<BoundEvaluation>& evals);
std::string to_json(const std::vector<BoundEvaluation>& evals, bool with_details = true);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace hyperspec::bounds
