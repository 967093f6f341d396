#include "doctest.h"
#include "fixtures.hpp"
#include "packcert/shell/scene.hpp"

using namespace packcert;
using namespace packcert::shell;
using testing::q;

namespace {

SceneError parse_error(const std::string& text) {
  try {
    parse_scene(text);
  } catch (const SceneError& e) {
    return e;
  }
  FAIL("expected a parse error for:\n" << text);
  return SceneError("", 0, 0);
}

const char* kMinimal = "radius one rational 1\nlattice 2 0 ; 0 2\ndisc 0 0 0 one\n";

}  // namespace

TEST_SUITE("shell") {
  TEST_CASE("minimal scene") {
    auto s = parse_scene(kMinimal);
    CHECK(s.discs.size() == 1);
    CHECK(s.radii.size() == 1);
    CHECK(s.lattice.has_value());
    auto b = build_scene(s);
    CHECK(b.packing.discs().size() == 1);
  }

  TEST_CASE("comments, blank lines and metadata") {
    auto s = parse_scene(
        "# heading\n\nname  demo scene \ndescription two words\nreference none\ntol 1e-6\n"
        "radius one rational 1   # trailing\nlattice 2 0 ; 0 2\ndisc 0 0 0 one\n");
    CHECK(s.name == "demo scene");
    CHECK(s.description == "two words");
    CHECK(s.tolerance == q("1e-6"));
    CHECK(build_scene(s).options.tolerance == q("1e-6"));
  }

  TEST_CASE("fig3 scene structure") {
    auto s = load_scene(testing::scene_dir() + "/fig3.scene");
    std::vector<std::string> names;
    for (const auto& r : s.radii) names.push_back(r.name);
    CHECK(names == std::vector<std::string>{"r", "s", "q", "one"});
    CHECK(s.discs.size() == 3);
    REQUIRE(s.solves.size() == 1);
    CHECK(s.solves[0].rule.id == 3);
    auto b = build_scene(s);
    CHECK(b.packing.discs().size() == 4);
    CHECK(b.names.count("Y3") == 1);
    // Disc 0 at (-q, 0), disc 2 at (0, sqrt(2q + 1)).
    CHECK(b.packing.disc(0).x == -b.names.at("q"));
  }

  TEST_CASE("errors carry line and column") {
    auto dup = parse_error(std::string(kMinimal) + "disc 0 1 1 one\n");
    CHECK(dup.line() == 4);
    CHECK(dup.column() == 6);
    CHECK(std::string(dup.what()).find("duplicate disc id 0") != std::string::npos);
    CHECK(std::string(dup.what()).find("line 3") != std::string::npos);

    auto unknown = parse_error("radius one rational 1\nlattice 2 0 ; 0 2\ndisc 0 zz 0 one\n");
    CHECK(unknown.line() == 3);
    CHECK(unknown.column() == 8);
    CHECK(unknown.detail() == "unknown identifier 'zz'");

    auto malformed = parse_error("radius one rational 1\nlattice 2 0 ; 0 2\ndisc 0 (1+ 0 one\n");
    CHECK(malformed.line() == 3);

    auto bad_expr = parse_error("radius one rational 1\nlattice 2 0 ; 0 2\ndisc 0 1+*2 0 one\n");
    CHECK(bad_expr.line() == 3);
    CHECK(bad_expr.column() == 10);

    auto missing = parse_error("radius one rational 1\ndisc 0 0 0 one\n");
    CHECK(missing.detail() == "missing lattice");

    auto keyword = parse_error("circle 0 0 1\n");
    CHECK(keyword.line() == 1);
    CHECK(keyword.column() == 1);

    CHECK(parse_error("radius a rational x\n").line() == 1);
    CHECK(parse_error("radius a root 1,2 in 1\n").line() == 1);
    CHECK(parse_error("radius a wild 1\n").detail() == "unknown radius kind 'wild'");
    CHECK(parse_error(std::string(kMinimal) + "contact 0 4\n").line() == 4);
    CHECK(parse_error(std::string(kMinimal) + "disc 1 0 0 two\n").line() == 4);
    CHECK(parse_error(std::string(kMinimal) + "define a b\ndefine b a\n").detail().find(
              "circular") != std::string::npos);
    CHECK(parse_error(std::string(kMinimal) + "radius one rational 2\n").line() == 4);
    CHECK(parse_error(std::string(kMinimal) + "solve 1 one tangent 0 tangent 0 1 0 pick up\n")
              .detail() == "unknown side 'up'");
  }

  TEST_CASE("build errors") {
    // Bracket holding two roots of x^2 - 2.
    auto two = parse_scene("radius a root -2,0,1 in -2 2\nlattice 2 0 ; 0 2\ndisc 0 0 0 a\n");
    CHECK_THROWS_AS(build_scene(two), SceneError);
    auto degenerate = parse_scene("radius one rational 1\nlattice 2 0 ; 4 0\ndisc 0 0 0 one\n");
    CHECK_THROWS_WITH_AS(build_scene(degenerate), "degenerate lattice", SceneError);
    auto far = parse_scene(std::string(kMinimal) +
                           "disc 1 9 0 one\nsolve 2 one tangent 0 tangent 1 pick left\n");
    try {
      build_scene(far);
      FAIL("expected a tangency error");
    } catch (const SceneError& e) {
      CHECK(e.line() == 5);
      CHECK(e.detail() == "inconsistent tangency");
    }
  }

  TEST_CASE("round trip of the bundled scenes") {
    for (const char* name : {"hexagonal.scene", "square.scene", "fig3.scene", "case110.scene",
                             "case110_polynomials.scene"}) {
      auto a = load_scene(testing::scene_dir() + "/" + name);
      auto text = serialize_scene(a);
      auto b = parse_scene(text);
      CHECK(same_structure(a, b));
      CHECK(serialize_scene(b) == text);
    }
  }

  TEST_CASE("resolve_expression works over scene names") {
    auto b = build_scene(load_scene(testing::scene_dir() + "/case110_polynomials.scene"));
    auto e = resolve_expression(b, "q-s/r");
    auto v = exactnum::eval(e, b.packing.bindings(), q("1e-20")).value;
    CHECK(v.contains(q("0")));
    CHECK_THROWS_AS(resolve_expression(b, "nope"), SceneError);
    CHECK_THROWS_AS(resolve_expression(b, "1+"), SceneError);
  }
}
