#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "vrg/errors.hpp"
#include "vrg/fiber.hpp"

using namespace vrg;

namespace {

bool contains_point(const std::vector<Point>& pts, double x, double y) {
  return std::any_of(pts.begin(), pts.end(), [&](const Point& p) {
    return std::abs(p[0] - std::complex<double>(x)) < 1e-9 && std::abs(p[1] - std::complex<double>(y)) < 1e-9;
  });
}

}  // namespace

TEST_SUITE("fiber") {
  TEST_CASE("two points over a generic point of the quadratic map") {
    auto s = testing::spec3();
    auto f = fiber_count(s, {Rat(0), Rat(-1)});
    CHECK(f.count == 2);
    CHECK(f.exact_count == 2);
    CHECK(f.classification == FiberClass::generic);
    CHECK(contains_point(f.points, 1, -1));
    CHECK(contains_point(f.points, -1, 1));
    CHECK(f.residual < 1e-12);
  }

  TEST_CASE("one point over the origin") {
    auto s = testing::spec3();
    auto rep = analyze(s);
    auto f = fiber_count(s, {Rat(0), Rat(0)}, {}, rep.contractions());
    CHECK(f.count == 1);
    CHECK(f.classification == FiberClass::on_branch);
    CHECK(f.branch_index == 0u);
  }

  TEST_CASE("generic fibers of the first reference example") {
    auto s = testing::spec1();
    auto f = fiber_count(s, {Rat(3), Rat(-7, 2)});
    CHECK(f.count == 12);
    CHECK(f.classification == FiberClass::generic);
    CHECK(f.residual < 1e-6);
    auto g = fiber_count(s, {Rat(2), Rat(1)});  // y1^2 = 4*y2
    CHECK(g.count < 12);
  }

  TEST_CASE("counts below the degree on the branch locus") {
    auto s = testing::spec2();
    auto f = fiber_count(s, {Rat(0), Rat(5)});
    CHECK(f.count == 3);
    CHECK(f.classification == FiberClass::on_branch);
  }

  TEST_CASE("dimension limit") {
    auto s = load_spec(std::string(VRG_DATA_DIR) + "/edge/four_vars.json");
    CHECK_THROWS_AS(fiber_count(s, {Rat(1), Rat(1), Rat(1), Rat(1)}), DimensionExceeded);
    CHECK_THROWS(fiber_count(testing::spec3(), {Rat(1)}));
  }

  TEST_CASE("audits are reproducible under a fixed seed") {
    auto s = testing::spec2();
    auto rep = analyze(s);
    auto a = branch_audit(s, rep, 5, 99);
    auto b = branch_audit(s, rep, 5, 99);
    CHECK(audit_to_json(a).dump() == audit_to_json(b).dump());
    CHECK(a.seed == 99);
    CHECK(a.passed());
    CHECK(a.generic_equal_r == 5);
    REQUIRE(a.loci.size() == 2);
    CHECK(a.loci[0].below_r == 5);
    CHECK(a.loci[1].below_r == 5);
  }

  TEST_CASE("branch samples with irrational coordinates") {
    auto s = testing::corpus("symmetric_3");
    auto rep = analyze(s);
    auto a = branch_audit(s, rep, 4, 7);
    CHECK(a.passed());
    CHECK(a.generic_equal_r == 4);
    REQUIRE(a.loci.size() == 1);
    CHECK(a.loci[0].below_r == 4);
  }
}
