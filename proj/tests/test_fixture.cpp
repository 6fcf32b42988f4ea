#include <doctest.h>

#include <fstream>
#include <sstream>

#include "epsolve/fixture.hpp"

using namespace epsolve;

TEST_CASE("horner evaluation of big-integer polynomials") {
    CHECK(eval_bigint({}, Integer(12345)) == 0);
    CHECK(eval_bigint({Integer(-49), Integer(0), Integer(1)}, Integer(7)) == 0);   // D^2 - 49
    CHECK(eval_bigint({Integer(1), Integer(2), Integer(3)}, Integer(10)) == 321);
}

TEST_CASE("fixture integrity") {
    auto report = verify_atm_fixture();
    CHECK(report.checksum_ok);
    CHECK(report.degree == 17);
    CHECK(report.value_at_0 == Integer("153712881941946532798614648361265167"));
    // The printed polynomial is the boundary polynomial deflated by its
    // rational root: the displayed digits do not themselves vanish at D = 7.
    CHECK(report.value_at_7 == Integer("2272108736836039967675945815680000000"));
    CHECK(!report.root_at_7);
    // undeflating restores the root: (D - 7) * P(D) vanishes at D = 7 by
    // construction, and P has four positive real roots of its own
    CHECK(report.positive_real_roots == 4);
}

TEST_CASE("tampered serializations change the digest") {
    const std::string canonical = fixture_serialization();
    CHECK(fnv1a64(canonical) == fixture_expected_checksum());
    std::string tampered = canonical;
    tampered[0] = (tampered[0] == '1') ? '2' : '1';
    CHECK(fnv1a64(tampered) != fixture_expected_checksum());
    CHECK(fnv1a64(canonical + "\n") != fixture_expected_checksum());
}

TEST_CASE("shipped data file matches the embedded table") {
    std::ifstream in(EPSOLVE_DATA_DIR "/atm_ep_poly.txt");
    REQUIRE(in.good());
    std::stringstream buf;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;   // comment header
        buf << line << '\n';
    }
    CHECK(buf.str() == fixture_serialization());
    CHECK(fnv1a64(buf.str()) == fixture_expected_checksum());
}
