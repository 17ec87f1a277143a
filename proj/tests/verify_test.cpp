#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descent/verify.hpp"

using namespace descent;

TEST_CASE("all checks pass at small bounds") {
    CHECK(verify_pi_bijection(5).passed());
    CHECK(verify_coset_representatives(5).passed());
    CHECK(verify_root_lemmas(4).passed());
    CHECK(verify_theorem31(5).passed());
    CHECK(verify_orbit_certificates(5).passed());
}

TEST_CASE("reports are deterministic") {
    for (int round = 0; round < 2; ++round) {
        VerificationReport a = verify_pi_bijection(4);
        VerificationReport b = verify_pi_bijection(4);
        CHECK(a.cases == b.cases);
        CHECK(a.failures == b.failures);

        VerificationReport c = verify_theorem31(4);
        VerificationReport d = verify_theorem31(4);
        CHECK(c.cases == d.cases);
        CHECK(c.failures == d.failures);
    }
}

TEST_CASE("case counts are positive and reported") {
    VerificationReport r = verify_pi_bijection(4);
    CHECK(r.cases > 0);
    CHECK(r.check == "pi_bijection");
    nlohmann::json j = r.to_json();
    CHECK(j.at("check") == "pi_bijection");
    CHECK(j.at("cases").get<long>() == r.cases);
    CHECK(j.at("failures").is_array());
    CHECK(j.at("failures").empty());
    CHECK(j.contains("ms"));
}

TEST_CASE("seeded mutations make every check report a counterexample") {
    Mutation m{12345};
    CHECK_FALSE(verify_pi_bijection(4, m).passed());
    CHECK_FALSE(verify_coset_representatives(4, m).passed());
    CHECK_FALSE(verify_root_lemmas(4, m).passed());
    CHECK_FALSE(verify_theorem31(4, m).passed());
    CHECK_FALSE(verify_orbit_certificates(4, m).passed());
}

TEST_CASE("mutation failures are reproducible for a fixed seed") {
    Mutation m{7};
    VerificationReport a = verify_pi_bijection(4, m);
    VerificationReport b = verify_pi_bijection(4, m);
    CHECK(a.failures == b.failures);
    CHECK_FALSE(a.failures.empty());
}

TEST_CASE("run_checks dispatch") {
    CHECK(check_names() ==
          std::vector<std::string>{"pi_bijection", "coset_representatives", "root_lemmas",
                                   "theorem31", "orbit_certificates"});

    std::vector<VerificationReport> all = run_checks({}, 4, 4);
    CHECK(all.size() == 5);
    for (const VerificationReport& r : all) CHECK(r.passed());

    std::vector<VerificationReport> one = run_checks({"pi_bijection"}, 4, 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].check == "pi_bijection");

    CHECK_THROWS_AS(run_checks({"bogus"}, 4, 4), std::invalid_argument);
}
