// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polyharm/types.hpp"

namespace polyharm {

enum class VerdictStatus { certified_pass, certified_fail, inconclusive };

const char* to_string(VerdictStatus s);

/// A sample point together with the diagnostic value observed there
/// (Jacobian, winding count, modulus, ...).
struct Witness {
    Complex z{0.0, 0.0};
    double value = 0.0;
};

/// Grid-relative verdict. A certified_fail always carries at least one
/// witness; a certified_pass means "no violation found at this resolution".
struct Verdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    std::vector<Witness> witnesses;
    GridSpec grid;
    std::string notes;

    static Verdict pass(const GridSpec& g, std::string notes);
    static Verdict fail(const GridSpec& g, std::vector<Witness> w,
                        std::string notes);
    static Verdict undecided(const GridSpec& g, std::string notes);

    bool passed() const { return status == VerdictStatus::certified_pass; }
    bool failed() const { return status == VerdictStatus::certified_fail; }
};

}  // namespace polyharm
