#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl3ext/ring.hpp"

namespace sl3ext {

struct PredicateResult {
    bool ok = true;
    std::vector<Elem> counterexample;  // witness tuple when ok is false
};

/// Every unimodular pair (a, b) admits r with a + br a unit. Finite rings
/// are semilocal, so this must come back true.
PredicateResult sr1_check(const RingPtr& R);

/// Quantifier check over Um(R^2) x (R \ {0}).
PredicateResult fsr15_check(const RingPtr& R);

/// Quantifier check over Um(R^2) x (R \ J(R)).
PredicateResult asr1_check(const RingPtr& R);

struct RingClassReport {
    RingPtr ring;
    bool sr1 = false, fsr15 = false, asr1 = false;
    bool pi2 = false, e2 = false, se2 = false;
    std::optional<std::pair<std::string, std::vector<Elem>>> counterexample;
};

/// Exhaustive classification of a finite ring: the three stable-range flags
/// plus the matrix classes, scanning every unimodular 2x2 matrix in
/// row-major lexicographic order. Enforces the implication chains
/// sr1 => fsr15 => asr1 and se2 => e2 => pi2 before returning.
RingClassReport classify_finite_ring(const RingPtr& R, long cap = 64);

/// For every unimodular 2x2 matrix, extendability (a pair (e,f) making
/// (ae+cf, be+df, det) unimodular) coincides with simple extendability
/// ((ae+cf, be+df) unimodular); both sides by exhaustive search.
bool extendable_iff_simple_check(const RingPtr& R, long cap = 64);

}  // namespace sl3ext
