#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arcomp/check_report.hpp"

namespace arcomp {

// An affine map x -> W x + b from R^n to R^m.
struct LinearMap {
    std::vector<std::vector<double>> weight;  // m rows of n entries
    std::vector<double> bias;                 // m entries

    int rows() const { return static_cast<int>(weight.size()); }
    int cols() const { return weight.empty() ? 0 : static_cast<int>(weight.front().size()); }

    // Throws InvariantViolation on ragged rows, non-finite entries, or a bias
    // of the wrong length.
    void validate() const;

    std::vector<double> apply(const std::vector<double>& x) const;

    std::string to_json() const;
    static LinearMap from_json(const std::string& document);
};

// Output-coordinate mask, one bit per row.
struct CoordinateMask {
    std::vector<bool> bits;

    int size() const { return static_cast<int>(bits.size()); }
    bool operator[](int i) const { return bits[i]; }
};

// theta_b plus per-task parameter vectors of identical shape; task vectors
// are theta_i - theta_b.
struct TaskVectorSet {
    std::vector<double> base;
    std::vector<std::vector<double>> tasks;
};

// theta_b + sum_i (theta_i - theta_b). Throws ShapeMismatch.
std::vector<double> merge_parameters(const TaskVectorSet& set);

struct LinearFamily {
    LinearMap base;
    std::vector<LinearMap> experts;
};

// Flatten/unflatten between a LinearMap and one parameter vector (row-major
// weight, then bias), so parameter-space merging applies to whole maps.
std::vector<double> flatten_parameters(const LinearMap& map);
LinearMap unflatten_parameters(const std::vector<double>& theta, int rows, int cols);

// Merges the family in parameter space and returns the resulting map.
LinearMap merge_linear_family(const LinearFamily& family);

// Exact check of disjoint coordinate factorization: masks pairwise disjoint
// (throws MaskOverlap), and each expert's weight and bias rows equal the
// base's off its mask within tol. Probe counts are only used by the
// black-box variant below; the linear check is row-exact.
CheckReport check_disjoint_coordinate_factorization(const LinearFamily& family,
                                                    const std::vector<CoordinateMask>& masks,
                                                    double tol = 1e-12);

// Verifies the merged map row-by-row: expert rows on masked coordinates, base
// rows elsewhere, within tol; additionally spot-checks merged outputs against
// the row owner on probe_count random inputs.
CheckReport verify_merged_equals_experts(const LinearFamily& family,
                                         const std::vector<CoordinateMask>& masks,
                                         int probe_count = 16, std::uint64_t seed = 0,
                                         double tol = 1e-12);

// A parametric black-box function f(x; theta) -> R^m.
using ParametricFunction =
    std::function<std::vector<double>(const std::vector<double>& x, const std::vector<double>& theta)>;

// Empirical check of the task-arithmetic property on finite probe sets: for
// every coefficient vector alpha (the given list, or the {0, 0.5, 1}^T grid
// when the list is empty) and every probe x in D_t,
//   f(x; theta0 + sum_t alpha_t tau_t) == f(x; theta0 + alpha_t tau_t)
// within tol, and on off-support probes the merged function equals
// f(x; theta0). Probe sets must be pairwise disjoint (throws SupportOverlap).
CheckReport check_nonlinear_task_arithmetic_property(
    const ParametricFunction& f, const std::vector<double>& theta0,
    const std::vector<std::vector<double>>& task_vectors,
    const std::vector<std::vector<std::vector<double>>>& supports,
    const std::vector<std::vector<double>>& off_support_probes,
    const std::vector<std::vector<double>>& coefficient_vectors = {}, double tol = 1e-9);

}  // namespace arcomp
