#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "bredonkit/errors.hpp"
#include "bredonkit/qcomplex.hpp"
#include "support/fixtures.hpp"

using namespace bredonkit;

namespace {

const char* kSmall = R"({
  "vertices": [{"id": "v", "stab": "C2"}, {"id": "t", "stab": "1"}],
  "edges": [
    {"id": "e", "stab": "1",
     "origin": {"v": "v", "emb": "canonical"},
     "end": {"v": "t", "emb": "canonical"}}
  ]
})";

}  // namespace

TEST_CASE("parse and round-trip") {
    QuotientComplex c = parse_complex(kSmall);
    CHECK(c.vertices.size() == 2);
    CHECK(c.vertices[0].stab == Stab::C2);
    CHECK(c.edges[0].origin.vertex == "v");

    std::string once = serialize_complex(c);
    QuotientComplex again = parse_complex(once);
    CHECK(serialize_complex(again) == once);
    CHECK(again.vertices.size() == c.vertices.size());
    CHECK(again.edges[0].end.emb == Variant::Canonical);
}

TEST_CASE("bundled fixtures all parse and round-trip") {
    for (const auto& name : fixtures::bundled_files()) {
        CAPTURE(name);
        QuotientComplex c = fixtures::from_file(name);
        CHECK(validate(c).empty());
        QuotientComplex back = parse_complex(serialize_complex(c));
        CHECK(serialize_complex(back) == serialize_complex(c));
    }
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_complex("not json"), ParseError);
    CHECK_THROWS_AS(parse_complex("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices": [], "bogus": 1})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_complex(R"({"vertices": [{"id": "v", "stab": "C7"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_complex(R"({"vertices": [{"id": "v", "stab": "C2", "x": 0}]})"),
        ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices": [{"id": "v"}]})"),
                    ParseError);
}

TEST_CASE("validation violations") {
    auto violations_of = [](const std::string& text) {
        try {
            parse_complex(text);
        } catch (const ValidationError& e) {
            return e.violations;
        }
        return std::vector<std::string>{};
    };

    SUBCASE("duplicate ids") {
        auto v = violations_of(
            R"({"vertices": [{"id": "v", "stab": "1"}, {"id": "v", "stab": "C2"}]})");
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("duplicate vertex id") != std::string::npos);
    }
    SUBCASE("illegal embedding variant") {
        auto v = violations_of(R"({
          "vertices": [{"id": "p", "stab": "V4"}],
          "edges": [{"id": "e", "stab": "C3",
                     "origin": {"v": "p", "emb": "c123"},
                     "end": {"v": "p", "emb": "c123"}}]})");
        REQUIRE(v.size() == 2);
        CHECK(v[0].find("IllegalEmbedding") != std::string::npos);
    }
    SUBCASE("non-cyclic edge stabilizer") {
        auto v = violations_of(R"({
          "vertices": [{"id": "p", "stab": "A4"}],
          "edges": [{"id": "e", "stab": "V4",
                     "origin": {"v": "p", "emb": "canonical"},
                     "end": {"v": "p", "emb": "canonical"}}]})");
        REQUIRE(!v.empty());
        CHECK(v[0].find("non-cyclic") != std::string::npos);
    }
    SUBCASE("dangling references") {
        auto v = violations_of(R"({
          "vertices": [{"id": "p", "stab": "1"}],
          "edges": [{"id": "e", "stab": "1",
                     "origin": {"v": "p", "emb": "canonical"},
                     "end": {"v": "ghost", "emb": "canonical"}}],
          "faces": [{"id": "f", "boundary": [{"e": "missing", "c": 1}]}]})");
        REQUIRE(v.size() == 2);
        CHECK(v[0].find("unknown vertex") != std::string::npos);
        CHECK(v[1].find("unknown edge") != std::string::npos);
    }
    SUBCASE("face boundary is not a cycle") {
        auto v = violations_of(R"({
          "vertices": [{"id": "p", "stab": "1"}, {"id": "q", "stab": "1"}],
          "edges": [{"id": "e", "stab": "1",
                     "origin": {"v": "p", "emb": "canonical"},
                     "end": {"v": "q", "emb": "canonical"}}],
          "faces": [{"id": "f", "boundary": [{"e": "e", "c": 1}]}]})");
        REQUIRE(v.size() == 1);
        CHECK(v[0].find("not cycles") != std::string::npos);
    }
}

TEST_CASE("orbit space homology") {
    auto h = quotient_homology(fixtures::from_file("sphere.json"));
    CHECK(h[0] == AbelianGroup(1));
    CHECK(h[1] == AbelianGroup(0));
    CHECK(h[2] == AbelianGroup(1));

    h = quotient_homology(fixtures::from_file("klein.json"));
    CHECK(h[0] == AbelianGroup(1));
    CHECK(h[1] == AbelianGroup(1, {2}));
    CHECK(h[2] == AbelianGroup(0));

    h = quotient_homology(fixtures::from_file("circle_trivial.json"));
    CHECK(h[0] == AbelianGroup(1));
    CHECK(h[1] == AbelianGroup(1));
    CHECK(h[2] == AbelianGroup(0));
}

TEST_CASE("structure predicates") {
    CHECK(singular_dimension(fixtures::from_file("sphere.json")) == -1);
    CHECK(singular_dimension(fixtures::from_file("fc_s3.json")) == 0);
    CHECK(singular_dimension(fixtures::from_file("m7.json")) == 1);

    CHECK(fixtures::from_file("m7.json").connected());
    QuotientComplex two;
    two.vertices.push_back({"a", Stab::Trivial});
    two.vertices.push_back({"b", Stab::Trivial});
    CHECK_FALSE(two.connected());
    CHECK(QuotientComplex{}.connected());
}
