#pragma once

#include <vector>

namespace arcomp {

inline constexpr double kDistributionSumTol = 1e-9;

// A next-token probability vector over a vocabulary. Entries are nonnegative
// and sum to 1 within kDistributionSumTol.
struct Distribution {
    std::vector<double> probs;

    Distribution() = default;
    explicit Distribution(std::vector<double> p) : probs(std::move(p)) {}

    int size() const { return static_cast<int>(probs.size()); }
    double operator[](int i) const { return probs[i]; }

    double sum() const;

    // Throws InvariantViolation unless nonnegative and normalized.
    void validate(const char* context = "distribution") const;

    static Distribution uniform(int size);
    static Distribution point_mass(int size, int target);
};

// Largest entrywise absolute difference; requires equal sizes.
double max_abs_diff(const Distribution& a, const Distribution& b);

}  // namespace arcomp
