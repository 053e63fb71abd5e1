#ifndef CHARP_SCENARIO_HPP
#define CHARP_SCENARIO_HPP

#include <string>

#include "charp/koszul.hpp"

namespace charp {

// Declarative description of one scripted verification run. Shipped as text
// files; every knob has a default so ids alone are runnable.
struct Scenario {
    std::string id;
    std::uint32_t p = 2;
    int n = 1;
    int vars = 3;          // artinian generator
    std::uint64_t seed = 1;
    Budget budget;
    bool run_resolution = true; // the expensive infinite-pd certificates
};

enum class CheckStatus { Pass, Fail, Indeterminate };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Indeterminate;
    std::string expected;
    std::string actual;
    std::string origin; // hand-derived / enumeration / reference value
    bool flagged = false;
    std::string note;
};

struct ScenarioReport {
    Scenario scenario;
    std::vector<CheckResult> checks;

    CheckStatus overall() const {
        CheckStatus s = CheckStatus::Pass;
        for (const auto& c : checks) {
            if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
            if (c.status == CheckStatus::Indeterminate) s = CheckStatus::Indeterminate;
        }
        return s;
    }
};

// F_p[X11..X33] modulo the 2x2 minors of the generic 3x3 matrix, with the
// reverse-lexicographic order X11 > X12 > ... > X33 preinstalled.
QRingPtr build_determinantal(std::uint32_t p, Budget budget = {});

// the nine 2x2 minors of the generic 3x3 matrix
std::vector<Polynomial> generic_minors(const RingPtr& ring);

// expected reduced basis of (minors) + (X11^n, X12^n): nine monic minors,
// the two pure powers, and X11^l X12^{n-l} X22^s X32^t for 1 <= l <= n-1,
// s + t = l with s, t >= 0
std::vector<Polynomial> determinantal_power_family(const RingPtr& ring, int n);

// random Artinian quotient with every variable's p-th power in the ideal and
// all generators inside the square of the maximal ideal; deterministic per seed
QRingPtr generate_artinian_frobenius_trivial(std::uint32_t p, int vars, std::uint64_t seed,
                                             Budget budget = {});

ScenarioReport run_scenario(const Scenario& s);

// parse a declarative scenario file; unknown keys are rejected
Scenario parse_scenario_text(const std::string& text);

const std::vector<std::string>& known_scenarios();

} // namespace charp

#endif
