#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kaluza/conditions.hpp"
#include "kaluza/series.hpp"

namespace kaluza {

enum class Verdict {
    cnp_certified_thm1,
    cnp_certified_thm2,
    cnp_certified_both,
    // q >= 0 up to the checked degree, but neither sufficient condition holds.
    cnp_witnessed,
    // Some q(gamma) < 0.
    not_cnp,
};

std::string to_string(Verdict v);

struct IndexedValue {
    MultiIndex at;
    Rational value;
};

struct CertReport {
    Verdict verdict = Verdict::cnp_witnessed;
    unsigned checked_degree = 0;
    CheckReport thm1;
    CheckReport thm2;
    // Smallest q over degrees >= 1 (the origin when the table has degree 0).
    IndexedValue q_min;
    // First negative q in canonical order; present iff verdict is not_cnp.
    std::optional<IndexedValue> witness;
    // Every negative q, canonical order.
    std::vector<IndexedValue> negatives;
    // b coefficients of the de Branges-Rovnyak form, computed when the first condition holds.
    std::optional<IndexTable> dbr_b;
};

// c(alpha) = 1 / ||z^alpha||^2. Norms must be positive with ||1|| = 1.
IndexTable coeffs_from_norms(const IndexTable& norms_squared);

// ||z^(m,n)||^2 = (m+1)!(n+1)!/(m+n)! for the two-variable Besov-type space
// whose kernel comes from Lebesgue measure on [0,1]^2.
IndexTable besov_norms(unsigned max_degree);

// Runs both sufficient conditions and the renewal solver on a unital table.
// Non-positive entries do not abort: both checks then report "hypothesis.positive".
CertReport certify(const IndexTable& c, const SolveOptions& options = {});

} // namespace kaluza
