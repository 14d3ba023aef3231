#include <doctest.h>

#include <string>

#include "hypcert/hyperbolicity.hpp"
#include "hypcert/io.hpp"
#include "hypcert/poincare.hpp"

using namespace hypcert;
using hypcert::spaces::SpaceId;

TEST_CASE("census json round trip") {
    auto census = hyp::wedge_summand_census(1, 2, 3, 1, 12);
    std::string text = io::to_json(census);
    auto parsed = io::census_from_json(text);
    CHECK(parsed == census);
    CHECK(io::to_json(parsed) == text);
}

TEST_CASE("certificate json round trip") {
    auto result = hyp::k_detection_certificate(SpaceId::parse("CP(2)"), 3, 10);
    REQUIRE(std::holds_alternative<hyp::PHypCertificate>(result));
    const auto& cert = std::get<hyp::PHypCertificate>(result);
    std::string text = io::to_json(cert);
    auto parsed = io::certificate_from_json(text);
    CHECK(parsed == cert);
    CHECK(io::to_json(parsed) == text);
}

TEST_CASE("json field order is stable") {
    auto census = hyp::wedge_summand_census(1, 1, 3, 1, 8);
    std::string text = io::to_json(census);
    auto wedge_pos = [&](const std::string& needle) { return text.find(needle); };
    CHECK(wedge_pos("schema_version") < wedge_pos("\"kind\""));
    CHECK(wedge_pos("\"kind\"") < wedge_pos("\"space\""));
    CHECK(wedge_pos("\"space\"") < wedge_pos("\"p\""));
    CHECK(wedge_pos("\"p\"") < wedge_pos("\"r\""));
    CHECK(wedge_pos("\"q1\"") < wedge_pos("\"q2\""));
    CHECK(wedge_pos("\"j\"") < wedge_pos("\"k0\""));
    CHECK(wedge_pos("\"a\"") < wedge_pos("\"b\""));
    CHECK(wedge_pos("\"liminf_ln2_coeff\"") < wedge_pos("\"rows\""));
    CHECK(wedge_pos("\"rows\"") < wedge_pos("\"oracles_checked\""));
    CHECK(text.find("\"liminf_ln2_coeff\": \"1/1\"") != std::string::npos);
}

TEST_CASE("csv rows") {
    auto census = hyp::wedge_summand_census(1, 1, 3, 1, 9);
    std::string csv = io::to_csv(census);
    CHECK(csv == "k,N,count\n8,16,30\n9,17,56\n");
}

TEST_CASE("failure json carries a reason") {
    std::string text = io::failure_json("CP(2)", 3, "not surjective");
    CHECK(text.find("\"kind\": \"hypothesis-failure\"") != std::string::npos);
    CHECK(text.find("\"reason\": \"not surjective\"") != std::string::npos);
}
