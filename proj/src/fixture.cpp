#include "epsolve/fixture.hpp"

#include "epsolve/roots.hpp"

namespace epsolve {

Integer eval_bigint(const std::vector<Integer>& coeffs, const Integer& x) {
    Integer acc(0);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

const std::vector<Integer>& atm_boundary_polynomial() {
    static const std::vector<Integer> coeffs = {
        Integer("153712881941946532798614648361265167"),
        Integer("-453762279414621179815552897029039797"),
        Integer("235326754101824439936800228806905073"),
        Integer("-68875673245487669398850290405642067"),
        Integer("8129925258122948689157916436170874"),
        Integer("-145759836636885012145070948315366"),
        Integer("2361976444746440513605248930610"),
        Integer("40525434802944282153115803370"),
        Integer("676326278232758784369966787"),
        Integer("62429137451114251409236415"),
        Integer("720991093724510065469933"),
        Integer("14670346929744822064505"),
        Integer("167556261648918275684"),
        Integer("917318495163561932"),
        Integer("3133529909492864"),
        Integer("4574211144896"),
        Integer("-5932158016"),
        Integer("314432"),
    };
    return coeffs;
}

std::string fixture_serialization() {
    std::string out;
    for (const auto& c : atm_boundary_polynomial()) {
        out += c.get_str();
        out += '\n';
    }
    return out;
}

uint64_t fixture_expected_checksum() { return 0x8a36142ed01371ddull; }

FixtureReport verify_atm_fixture() {
    if (fnv1a64(fixture_serialization()) != fixture_expected_checksum())
        throw fixture_error("ATM boundary polynomial failed its integrity checksum");
    const auto& coeffs = atm_boundary_polynomial();
    FixtureReport report;
    report.checksum_ok = true;
    report.degree = static_cast<int>(coeffs.size()) - 1;
    report.value_at_7 = eval_bigint(coeffs, Integer(7));
    report.value_at_0 = coeffs.front();
    report.root_at_7 = (sgn(report.value_at_7) == 0);

    std::vector<Rational> rc;
    rc.reserve(coeffs.size());
    for (const auto& c : coeffs) rc.emplace_back(c);
    UniPoly p(std::move(rc));
    auto chain = sturm_sequence(p);
    report.positive_real_roots =
        sign_variations_at(chain, Rational(0)) - sign_variations_at_pos_inf(chain);
    return report;
}

} // namespace epsolve
