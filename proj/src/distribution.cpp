#include "arcomp/distribution.hpp"

#include <cmath>
#include <string>

#include "arcomp/errors.hpp"

namespace arcomp {

double Distribution::sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

void Distribution::validate(const char* context) const {
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
            throw InvariantViolation(std::string(context) + ": entry " + std::to_string(i) +
                                     " is " + std::to_string(probs[i]));
        }
    }
    const double s = sum();
    if (std::fabs(s - 1.0) > kDistributionSumTol) {
        throw InvariantViolation(std::string(context) + ": probabilities sum to " +
                                 std::to_string(s));
    }
}

Distribution Distribution::uniform(int size) {
    return Distribution(std::vector<double>(static_cast<std::size_t>(size), 1.0 / size));
}

Distribution Distribution::point_mass(int size, int target) {
    std::vector<double> p(static_cast<std::size_t>(size), 0.0);
    p[static_cast<std::size_t>(target)] = 1.0;
    return Distribution(std::move(p));
}

double max_abs_diff(const Distribution& a, const Distribution& b) {
    if (a.probs.size() != b.probs.size()) {
        throw ShapeMismatch("distributions of size " + std::to_string(a.probs.size()) + " vs " +
                            std::to_string(b.probs.size()));
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i) {
        double d = std::fabs(a.probs[i] - b.probs[i]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace arcomp
