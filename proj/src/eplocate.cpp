#include "epsolve/eplocate.hpp"

namespace epsolve {

EPReport ep_on_path(const BiPoly& secular) {
    if (secular.degree() < 2)
        throw constraint_error("ep_on_path: secular polynomial must have degree >= 2 in s");
    EPReport report;
    report.discriminant = discriminant_in_s(secular);
    if (report.discriminant.identically_zero) {
        report.discriminant_identically_zero = true;
        return report;
    }
    if (report.discriminant.primitive.degree() == 0) return report;   // no EP on the path

    const Rational width(Integer(1), Integer("1000000000000"));   // 1e-12
    for (const auto& root : isolate_real_roots(report.discriminant.primitive, width)) {
        EPPoint point;
        point.location = root;
        if (root.exact) point.profile = multiplicity_profile(eval_at_t(secular, root.value));
        report.points.push_back(std::move(point));
    }
    return report;
}

} // namespace epsolve
