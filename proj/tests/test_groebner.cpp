#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "helpers.hpp"
#include "vrg/errors.hpp"
#include "vrg/groebner.hpp"
#include "vrg/ideal.hpp"

using namespace vrg;
using testing::ring_xy;

namespace {

std::vector<std::string> strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators()) out.push_back(to_string(g));
  return out;
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("small reduced bases") {
    auto R = ring_xy();
    auto P = [&](const char* s) { return parse(s, R); };
    auto gb = groebner(std::vector<Poly>{P("X - Y"), P("Y")}, MonomialOrder::lex());
    CHECK(strings(gb) == std::vector<std::string>{"Y", "X"});
    auto gb2 = groebner(std::vector<Poly>{P("X^2")}, MonomialOrder::grevlex());
    CHECK(strings(gb2) == std::vector<std::string>{"X^2"});
    // lex with Y > X: list Y first in the ring
    auto RY = make_ring({"Y", "X"}, {1, 1});
    auto gb3 = groebner(std::vector<Poly>{parse("Y - X^2", RY), parse("X^2*Y", RY)}, MonomialOrder::lex());
    std::vector<Poly> expect{parse("X^4", RY), parse("X^2 - Y", RY)};
    REQUIRE(gb3.generators().size() == 2);
    CHECK(gb3.generators()[0] == expect[0]);
    CHECK(gb3.generators()[1] == expect[1]);
  }

  TEST_CASE("unit and zero ideals") {
    auto R = ring_xy();
    auto gb = groebner(std::vector<Poly>{parse("X*Y - 1", R), parse("X", R)}, MonomialOrder::grevlex());
    CHECK(gb.is_unit_ideal());
    auto z = groebner(std::vector<Poly>{Poly(R)}, MonomialOrder::grevlex());
    CHECK(z.generators().empty());
    CHECK(normal_form(parse("X + 1", R), z) == parse("X + 1", R));
  }

  TEST_CASE("normal forms") {
    auto R = ring_xy();
    auto P = [&](const char* s) { return parse(s, R); };
    auto gx = groebner(std::vector<Poly>{P("X")}, MonomialOrder::grevlex());
    CHECK(normal_form(P("X^2"), gx).is_zero());
    auto gy = groebner(std::vector<Poly>{P("Y")}, MonomialOrder::grevlex());
    CHECK(normal_form(P("X + 1"), gy) == P("X + 1"));
    auto RY = make_ring({"Y", "X"}, {1, 1});
    auto g = groebner(std::vector<Poly>{parse("Y - X^2", RY)}, MonomialOrder::lex());
    CHECK(normal_form(parse("X^2*Y", RY), g) == parse("X^4", RY));
  }

  TEST_CASE("ideal membership of combinations") {
    auto R = ring_xy();
    auto P = [&](const char* s) { return parse(s, R); };
    std::vector<Poly> gens{P("X^2 + Y^3 - 1"), P("X*Y - 2")};
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elimination(1)}) {
      auto gb = groebner(gens, order);
      Poly combo = P("X^3 - Y") * gens[0] + P("2*Y + 5") * gens[1];
      CHECK(normal_form(combo, gb).is_zero());
      CHECK_FALSE(normal_form(combo + P("X"), gb).is_zero());
    }
  }

  TEST_CASE("bases do not depend on generator order") {
    auto R = make_ring({"X", "Y", "Z"}, {1, 1, 1});
    std::vector<Poly> gens{parse("X + Y + Z", R), parse("X*Y + Y*Z + Z*X", R), parse("X*Y*Z", R)};
    std::vector<std::string> first;
    std::sort(gens.begin(), gens.end(), poly_less);
    do {
      auto s = strings(groebner(gens, MonomialOrder::grevlex()));
      if (first.empty())
        first = s;
      else
        CHECK(s == first);
    } while (std::next_permutation(gens.begin(), gens.end(), poly_less));
  }

  TEST_CASE("degree cap") {
    auto R = ring_xy();
    std::vector<Poly> gens{parse("X^5 - Y^3", R), parse("X^2*Y^4 - X - 1", R)};
    CHECK_THROWS_AS(groebner(gens, MonomialOrder::lex(), GroebnerOptions{4}), DegreeCapExceeded);
    ::setenv("VRG_MAX_DEGREE", "7", 1);
    CHECK(default_max_degree() == 7);
    ::unsetenv("VRG_MAX_DEGREE");
    CHECK(default_max_degree() == 200);
  }

  TEST_CASE("finiteness") {
    CHECK(check_finite(make_spec({"X", "Y"}, {1, 1}, {"X^2", "Y^2"})));
    CHECK_FALSE(check_finite(make_spec({"X", "Y"}, {1, 1}, {"X", "X*Y"})));
    CHECK(check_finite(testing::spec2()));
  }

  TEST_CASE("subalgebra membership") {
    auto s1 = testing::spec1();
    auto rep = subalgebra_membership(parse("X^2*Y^3", s1.ring()), s1);
    REQUIRE(rep.has_value());
    CHECK(*rep == parse("y2", s1.tag_ring()));
    auto rep2 = subalgebra_membership(parse("(X^2 - Y^3)^2", s1.ring()), s1);
    REQUIRE(rep2.has_value());
    CHECK(*rep2 == parse("y1^2 - 4*y2", s1.tag_ring()));
    auto s2 = testing::spec2();
    CHECK_FALSE(subalgebra_membership(parse("X^2*(Y - X^2)^2", s2.ring()), s2).has_value());
    CHECK_FALSE(subalgebra_membership(parse("X", s1.ring()), s1).has_value());
  }

  TEST_CASE("contractions of primes") {
    auto s1 = testing::spec1();
    CHECK(contract_prime(parse("X", s1.ring()), s1) == parse("y2", s1.tag_ring()));
    CHECK(contract_prime(parse("Y", s1.ring()), s1) == parse("y2", s1.tag_ring()));
    CHECK(contract_prime(parse("X^2 - Y^3", s1.ring()), s1) == parse("y1^2 - 4*y2", s1.tag_ring()));
    auto s2 = testing::spec2();
    CHECK(associated(contract_prime(parse("Y - X^2", s2.ring()), s2), parse("y2^2 - 4*y1", s2.tag_ring())));
    // an unramified prime contracts too
    CHECK(contract_prime(parse("Y", s2.ring()), s2) == parse("y1", s2.tag_ring()));
  }

  TEST_CASE("tag names avoid clashes") {
    auto s = make_spec({"y1", "y2"}, {1, 1}, {"y1 + y2", "y1*y2"});
    CHECK(s.tag_ring()->name(0) == "y_1");
    CHECK(s.joint_ring()->size() == 4);
  }
}
