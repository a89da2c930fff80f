#pragma once

#include <string>
#include <vector>

namespace arcomp {

inline constexpr int kMaxWitnesses = 10;

// A counterexample: the sequence (or prefix) on which a condition failed, the
// 0-based position involved (-1 when the condition is not positional), and a
// short condition id such as "independence", "off-mask-agreement",
// "deviation-gap", "interval-overlap".
struct Witness {
    std::string sequence;
    int position = -1;
    std::string condition;
};

enum class Verdict { pass, fail };

struct CheckReport {
    Verdict verdict = Verdict::pass;
    double max_violation = 0.0;
    double tolerance = 0.0;
    // Structural failure class ("NotFactorizable", "OverlappingIntervals",
    // ...), empty for plain tolerance failures and passes.
    std::string failure_kind;
    std::vector<Witness> witnesses;  // capped at kMaxWitnesses

    bool passed() const { return verdict == Verdict::pass; }

    // Records a violation of magnitude `v`; keeps the verdict consistent with
    // max_violation <= tolerance and caps the witness list.
    void record(double v, Witness w);

    // Merge another report (max of violations, union of witnesses).
    void merge(const CheckReport& other);

    std::string to_json() const;
};

}  // namespace arcomp
