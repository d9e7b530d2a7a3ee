#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbext/json_io.hpp"

using namespace hilbext;

TEST_CASE("resolution JSON shape") {
    const json doc = to_json(ResolutionData(Codim3GorData{10, {4, 4, 4, 4, 4, 5, 5}, {6, 6, 6, 6, 6, 5, 5}}));
    CHECK(doc["kind"] == "codim3gor");
    CHECK(doc["f"] == 10);
    CHECK(doc["syz"] == json::array({6, 6, 6, 6, 6, 5, 5}));
    CHECK(resolution_from_json(doc) == ResolutionData(Codim3GorData{10, {4, 4, 4, 4, 4, 5, 5}, {6, 6, 6, 6, 6, 5, 5}}));

    const json c2 = to_json(ResolutionData(Codim2Data{{2, 2, 2}, {3, 3}}));
    CHECK(c2 == json::parse(R"({"kind":"codim2","gens":[2,2,2],"syz":[3,3]})"));
    CHECK_FALSE(c2.contains("f"));
}

TEST_CASE("codim3gor syzygies default to f - gens") {
    const auto d = resolution_from_json(json::parse(R"({"kind":"codim3gor","f":6,"gens":[2,2,2]})"));
    CHECK(std::get<Codim3GorData>(d).syz == std::vector<int>{4, 4, 4});
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"gens":[1],"syz":[]})")), SchemaError);
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"kind":"codim2","gens":[1,"a"],"syz":[2]})")), SchemaError);
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"kind":"codim2","gens":3,"syz":[2]})")), SchemaError);
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"kind":"codim3gor","gens":[2,2,2]})")), SchemaError);
    CHECK_THROWS_AS(proof_from_json(json::parse(R"({"kind":"magic"})")), SchemaError);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"({"a":1})")), SchemaError);
}

TEST_CASE("polynomials and proofs") {
    const IntPoly p({Rational(-6), Rational(9), Rational(3, 2)});
    CHECK(to_json(p) == json::array({"-6/1", "9/1", "3/2"}));
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(poly_from_json(json::array({"2", 3})) == IntPoly({Rational(2), Rational(3)}));

    for (const PositivityProof& proof :
         {PositivityProof(NonnegBinomialBasis{3, {Rational(20), Rational(5)}}),
          PositivityProof(ExhaustiveToRootBound{0, 27, 1}), PositivityProof(Counterexample{5, Rational(-1)})}) {
        CHECK(proof_from_json(to_json(proof)) == proof);
    }
}

TEST_CASE("big integers leave the 64-bit range as strings") {
    CHECK(big_to_json(BigInt(12)) == 12);
    const BigInt huge = BigInt(1) << 80;
    CHECK(big_to_json(huge).is_string());
    CHECK(big_to_json(huge).get<std::string>() == huge.str());
}
