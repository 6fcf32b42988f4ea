#ifndef EPSOLVE_EPLOCATE_HPP
#define EPSOLVE_EPLOCATE_HPP

#include <optional>

#include "epsolve/roots.hpp"
#include "epsolve/secular.hpp"

namespace epsolve {

struct EPPoint {
    RealRoot location;                             // exact rational or isolating interval
    std::optional<MultiplicityProfile> profile;    // exact specialization at rational t*
};

struct EPReport {
    bool discriminant_identically_zero = false;
    Discriminant discriminant;
    std::vector<EPPoint> points;   // ascending in t
};

// Locate every real t* where the secular polynomial acquires a multiple root:
// isolate the real roots of disc = Res_s(p, p_s) by Sturm bisection (width
// 1e-12), certify rational roots exactly, and attach the exact multiplicity
// profile of p(., t*) at each rational t*.
EPReport ep_on_path(const BiPoly& secular);

} // namespace epsolve

#endif
