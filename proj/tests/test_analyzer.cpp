#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "vrg/analyzer.hpp"
#include "vrg/errors.hpp"
#include "vrg/ideal.hpp"

using namespace vrg;

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_SUITE("analyzer") {
  TEST_CASE("degree of the extension") {
    CHECK(validate(testing::spec1()) == 12);
    CHECK(validate(testing::spec2()) == 4);
    CHECK(validate(testing::spec3()) == 2);
    CHECK_THROWS_AS(validate(make_spec({"X", "Y"}, {1, 1}, {"X", "X*Y"})), NotFinite);
  }

  TEST_CASE("spec validation") {
    CHECK_THROWS_WITH_AS(make_spec({"X", "Y"}, {1, 1}, {"X + Y^2", "X*Y"}),
                         "not homogeneous (generator 1)", InvalidSpec);
    CHECK_THROWS_AS(make_spec({"X", "Y"}, {1, 1}, {"X + Y"}), InvalidSpec);
    CHECK_THROWS_AS(make_spec({"X", "Y"}, {1, 1}, {"X + Y", "3"}), InvalidSpec);
    CHECK_THROWS_AS(make_spec({"X", "Y"}, {1, 1}, {"X + Y", "X*Y"}, {"a"}), InvalidSpec);
  }

  TEST_CASE("first reference example is well-ramified") {
    auto s = testing::spec1();
    auto rep = analyze(s);
    auto B = [&](const char* t) { return parse(t, s.ring()); };
    auto A = [&](const char* t) { return parse(t, s.tag_ring()); };
    CHECK(rep.degree == 12);
    CHECK(rep.discarded_unit == 6);
    CHECK(rep.jacobian == B("X*Y^2*(X^2 - Y^3)"));
    REQUIRE(rep.ramification.size() == 3);
    CHECK(rep.ramification[0].Q == B("X"));
    CHECK(rep.ramification[0].index == 2);
    CHECK(rep.ramification[0].contraction == A("y2"));
    CHECK(rep.ramification[1].Q == B("Y"));
    CHECK(rep.ramification[1].index == 3);
    CHECK(rep.ramification[1].contraction == A("y2"));
    CHECK(rep.ramification[2].Q == B("X^2 - Y^3"));
    CHECK(rep.ramification[2].index == 2);
    CHECK(rep.ramification[2].contraction == A("y1^2 - 4*y2"));
    CHECK(rep.well_ramified);
    REQUIRE(rep.discriminant.has_value());
    CHECK(rep.discriminant->D == B("X^2*Y^3*(X^2 - Y^3)^2"));
    CHECK(rep.discriminant->D_rep == A("y2*(y1^2 - 4*y2)"));
    REQUIRE(rep.quotient_DJ.has_value());
    CHECK(*rep.quotient_DJ == B("X*Y*(X^2 - Y^3)"));
    CHECK(rep.S_tilde == A("y2*(y1^2 - 4*y2)"));
    CHECK_FALSE(rep.witness_prime.has_value());
    CHECK(verify_report(rep, s).empty());
  }

  TEST_CASE("second reference example is not well-ramified") {
    auto s = testing::spec2();
    auto rep = analyze(s);
    auto B = [&](const char* t) { return parse(t, s.ring()); };
    auto A = [&](const char* t) { return parse(t, s.tag_ring()); };
    CHECK(rep.degree == 4);
    CHECK(associated(rep.jacobian, B("X*(Y - X^2)")));
    REQUIRE(rep.ramification.size() == 2);
    CHECK(rep.ramification[0].Q == B("X"));
    CHECK(rep.ramification[0].contraction == A("y1"));
    CHECK(associated(rep.ramification[1].Q, B("Y - X^2")));
    CHECK(associated(rep.ramification[1].contraction, A("y2^2 - 4*y1")));
    CHECK_FALSE(rep.well_ramified);
    CHECK_FALSE(rep.by_membership);
    CHECK_FALSE(rep.by_factor_pattern);
    REQUIRE(rep.witness_prime.has_value());
    CHECK(*rep.witness_prime == A("y1"));
    CHECK(associated(rep.S_tilde, A("y1*(y2^2 - 4*y1)")));
    CHECK(associated(s.pullback(rep.S_tilde), B("X^2*Y*(Y - X^2)^2")));
    CHECK_FALSE(rep.discriminant.has_value());
    CHECK_FALSE(rep.quotient_DJ.has_value());
    const auto& pb = rep.pullbacks.front();
    CHECK(pb.contraction == A("y1"));
    CHECK(pb.mixed());
    REQUIRE(pb.factors.size() == 2);
    CHECK(pb.factors[0].factor == B("X"));
    CHECK(pb.factors[0].ramified);
    CHECK(pb.factors[1].factor == B("Y"));
    CHECK_FALSE(pb.factors[1].ramified);
    CHECK(verify_report(rep, s).empty());
  }

  TEST_CASE("symmetric group on two letters") {
    auto s = testing::spec3();
    auto rep = analyze(s);
    REQUIRE(rep.ramification.size() == 1);
    CHECK(rep.ramification[0].Q == parse("X - Y", s.ring()));
    CHECK(rep.ramification[0].index == 2);
    CHECK(rep.well_ramified);
    CHECK(rep.discriminant->D == parse("(X - Y)^2", s.ring()));
    CHECK(rep.discriminant->D_rep == parse("y1^2 - 4*y2", s.tag_ring()));
  }

  TEST_CASE("well-ramified characterizations") {
    auto s1 = testing::spec1();
    auto v1 = is_well_ramified(s1, analyze(s1).ramification);
    CHECK(v1.verdict);
    CHECK(v1.by_membership);
    CHECK(v1.by_factor_pattern);
    CHECK(*v1.representation == parse("y2*(y1^2 - 4*y2)", s1.tag_ring()));
    auto s2 = testing::spec2();
    auto v2 = is_well_ramified(s2, analyze(s2).ramification);
    CHECK_FALSE(v2.verdict);
    CHECK_FALSE(v2.by_membership);
    CHECK_FALSE(v2.by_factor_pattern);
    REQUIRE(v2.failing.has_value());
    CHECK(v2.failing->contraction == parse("y1", s2.tag_ring()));
    auto s5 = make_spec({"X"}, {1}, {"X^5"});
    auto r5 = analyze(s5);
    CHECK(r5.well_ramified);
    CHECK(r5.discarded_unit == 5);
    CHECK(r5.ramification.size() == 1);
    CHECK(r5.ramification[0].index == 5);
    CHECK(*r5.witness_representation == parse("y1", s5.tag_ring()));
  }

  TEST_CASE("scaled single generator") {
    auto s = make_spec({"X"}, {1}, {"3*X^4"});
    auto rep = analyze(s);
    CHECK(rep.discarded_unit == 12);
    CHECK(rep.ramification[0].index == 4);
    CHECK(*rep.witness_representation == parse("1/3*y1", s.tag_ring()));
    CHECK(verify_report(rep, s).empty());
  }

  TEST_CASE("unramified extension") {
    auto s = make_spec({"X", "Y"}, {1, 1}, {"X + Y", "X - Y"});
    auto rep = analyze(s);
    CHECK(rep.degree == 1);
    CHECK(rep.ramification.empty());
    CHECK(rep.well_ramified);
    CHECK(rep.R == parse("1", s.ring()));
    CHECK(verify_report(rep, s).empty());
  }

  TEST_CASE("mixed-weight specs are not spanned by monomials") {
    auto s = testing::corpus("mixed_5_2");
    CHECK(analyze(s).well_ramified);
    CHECK(subalgebra_membership(parse("X^2 + Y^5", s.ring()), s).has_value());
    CHECK_FALSE(subalgebra_membership(parse("X^2", s.ring()), s).has_value());
  }

  TEST_CASE("verify_report catches tampering") {
    auto s = testing::spec1();
    auto rep = analyze(s);
    auto e = rep;
    e.ramification[0].index = 3;
    auto failed = verify_report(e, s);
    CHECK(has(failed, "jacobian exponent"));
    CHECK(has(failed, "ramification index"));
    auto d = rep;
    d.discriminant->D_rep = parse("y2*(y1^2 - 3*y2)", s.tag_ring());
    CHECK(has(verify_report(d, s), "discriminant representation"));
    auto w = rep;
    w.well_ramified = false;
    CHECK(has(verify_report(w, s), "well-ramified membership"));
    auto u = rep;
    u.discarded_unit = 3;
    CHECK(has(verify_report(u, s), "jacobian"));
  }
}
