#include <doctest.h>

#include <chrono>

#include "a2d/descent.hpp"
#include "oracles.hpp"

using namespace a2d;

namespace {

const Comodule T = trivial(1);
const Comodule F = free_rank_one();

void check_theorem_report(const DescentReport& r, std::size_t d) {
  CHECK(r.catalog_bound == d);
  CHECK(r.comparison_bound == std::min<std::size_t>(d, kSiteComparisonCap));
  CHECK(r.transfer_bounds == default_transfer_bounds(d));
  CHECK(r.first == "a");
  CHECK(r.second == "b");
  CHECK(r.a_neq_b.verdict);
  CHECK(r.a_neq_b.predicate == "weq");
  REQUIRE(r.a_neq_b.witness.has_value());
  const Morphism& w = *r.a_neq_b.witness;
  // The witness is a weak equivalence of a that is not an isomorphism.
  CHECK(r.a_neq_b.witness_in_first);
  CHECK_FALSE(r.a_neq_b.witness_in_second);
  CHECK_FALSE(r.a_neq_b.witness_invertible);
  CHECK(weq_a(w));
  CHECK_FALSE(oracle::invertible(w.matrix()));
  CHECK(w == Morphism(T, F, BitMatrix::from_rows({{1}, {0}})));
  CHECK(r.i_defined.a.exists);
  CHECK(r.i_defined.b.exists);
  CHECK(r.i_equal);
  CHECK(r.i_discrete);
  CHECK(r.j_defined_equal.j1.exists);
  CHECK(r.j_defined_equal.j2.exists);
  CHECK(r.j_defined_equal.units_agree);
  CHECK(r.j_defined_equal.equal);
  CHECK(r.j_defined_equal.discrete);
  CHECK(r.conclusion == kDescentFailure);
  CHECK(equalizer_check(r));
}

}  // namespace

TEST_CASE("cover diagram") {
  const auto nodes = cover_diagram();
  CHECK(nodes[0].id == SiteNodeId::Base);
  CHECK(nodes[0].role == Role::Torsor);
  CHECK(nodes[1].id == SiteNodeId::Cover);
  CHECK(nodes[1].role == Role::Point);
  CHECK(nodes[2].id == SiteNodeId::Overlap);
  CHECK(nodes[2].role == Role::Overlap);
  CHECK(to_string(SiteNodeId::Cover) != to_string(SiteNodeId::Base));
}

TEST_CASE("default transfer bounds") {
  CHECK(default_transfer_bounds(2) == TransferBounds{3, 2});
  CHECK(default_transfer_bounds(4) == TransferBounds{3, 3});
}

TEST_CASE("the theorem at D = 2") { check_theorem_report(run_theorem(2), 2); }

TEST_CASE("the theorem at D = 4") { check_theorem_report(run_theorem(4), 4); }

TEST_CASE("small bounds are rejected") {
  CHECK_THROWS_AS(run_theorem(1), InputError);
  CHECK_THROWS_AS(run_theorem(0), InputError);
  CHECK_THROWS_AS(run_descent(3, discrete_structure(Role::Point), structure_b(), {}), InputError);
}

TEST_CASE("equalizer check on a pair that does not differ") {
  const DescentReport r = run_descent(2, structure_a(), structure_a(), default_transfer_bounds(2));
  CHECK_FALSE(r.a_neq_b.verdict);
  CHECK_FALSE(r.a_neq_b.witness.has_value());
  CHECK_FALSE(equalizer_check(r));
  CHECK(r.conclusion == kNoDescentFailure);
}

TEST_CASE("equalizer check needs every part") {
  const DescentReport good = run_theorem(2);
  REQUIRE(equalizer_check(good));
  DescentReport r = good;
  r.i_equal = false;
  CHECK_FALSE(equalizer_check(r));
  r = good;
  r.j_defined_equal.equal = false;
  CHECK_FALSE(equalizer_check(r));
  r = good;
  r.i_defined.b.exists = false;
  CHECK_FALSE(equalizer_check(r));
  r = good;
  r.a_neq_b.verdict = false;
  CHECK_FALSE(equalizer_check(r));
}

TEST_CASE("the conclusion is determined by the three checks") {
  const DescentReport r = run_theorem(3);
  CHECK((r.conclusion == kDescentFailure) == (r.a_neq_b.verdict && r.i_equal && r.j_defined_equal.equal));
}

TEST_CASE("runs are deterministic") { CHECK(run_theorem(3) == run_theorem(3)); }

TEST_CASE("the verdicts are stable from D = 2 to D = 5") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const DescentReport r = run_theorem(d);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE("run_theorem(" << d << ") took " << seconds << " s");
    check_theorem_report(r, d);
  }
}
