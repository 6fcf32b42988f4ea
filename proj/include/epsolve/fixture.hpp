#ifndef EPSOLVE_FIXTURE_HPP
#define EPSOLVE_FIXTURE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epsolve/rational.hpp"

namespace epsolve {

Integer eval_bigint(const std::vector<Integer>& coeffs, const Integer& x);

uint64_t fnv1a64(std::string_view bytes);

// Degree-17 big-integer boundary polynomial in D for the N=8 ATM model
// (couplings g_1 = sqrt(D) at the EP-boundary vertex), embedded verbatim.
// Coefficients lowest degree first.
const std::vector<Integer>& atm_boundary_polynomial();

// Canonical serialization: decimal coefficients, lowest degree first, one per
// line, trailing newline.  The pinned checksum is FNV-1a 64 over these bytes.
std::string fixture_serialization();
uint64_t fixture_expected_checksum();

struct FixtureReport {
    bool checksum_ok = false;
    int degree = 0;
    Integer value_at_7;
    Integer value_at_0;
    int positive_real_roots = 0;   // Sturm count on (0, inf)
    bool root_at_7 = false;
};

// Integrity check plus the D = 7 evaluation and the exact count of positive
// real roots.  Throws fixture_error on checksum mismatch.
FixtureReport verify_atm_fixture();

} // namespace epsolve

#endif
