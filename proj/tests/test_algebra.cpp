#include <doctest.h>

#include "bimon/algebra.hpp"
#include "bimon/zoo.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace bimon;

namespace {

const Obj B(fixture::B);

MonoidData kl_monoid(const LinMap& mul = fixture::mu()) {
  return {B, kmod().make(B * B, B, mul), kmod().make(Obj{}, B, fixture::eta())};
}

ComonoidData kl_comonoid(const LinMap& counit = fixture::eps()) {
  return {B, kmod().make(B, B * B, fixture::delta()), kmod().make(B, Obj{}, counit)};
}

MonoidData rationals() { return trivial_monoid(kmod()); }

bool fails_only(const CheckOutcome& o, const std::string& name) {
  const auto f = o.failed_names();
  return f.size() == 1 && f[0].rfind(name, 0) == 0;
}

}  // namespace

TEST_CASE("monoids") {
  CHECK(check_monoid(kmod(), kl_monoid()).passed());
  const auto c2 = build_flip_bialgebra(2);
  CHECK(check_monoid(kmod(), c2.monoid).passed());
  CHECK(oracle::associative(testsupport::cyclic_constants(2)));

  // dim L = 1: e1·e1 = e0 is ℚ[x]/(x²−1), still associative.
  auto m1 = fixture::mu();
  m1(0, 3) = 1;
  CHECK(check_monoid(kmod(), kl_monoid(m1)).passed());

  auto d = build_kplusl(2);
  d.monoid.mul.map(0, 1 * 3 + 1) = 1;
  const auto o = check_monoid(kmod(), d.monoid);
  CHECK(fails_only(o, "associativity"));
  CHECK_FALSE(oracle::associative(testsupport::read(d)));

  CHECK_THROWS_AS(check_monoid(kmod(), {B, kmod().make(B, B, LinMap::identity(fixture::B)),
                                        kmod().make(Obj{}, B, fixture::eta())}),
                  DimensionMismatch);
}

TEST_CASE("comonoids") {
  CHECK(check_comonoid(kmod(), kl_comonoid()).passed());
  CHECK(check_comonoid(kmod(), build_flip_bialgebra(2).comonoid).passed());
  const auto o = check_comonoid(kmod(), kl_comonoid(LinMap::from_rows(fixture::B, fixture::K, {{1, 1}})));
  CHECK_FALSE(o.passed());
  CHECK(o.find("coassociativity")->passed);
  CHECK((!o.find("left counit")->passed || !o.find("right counit")->passed));
}

TEST_CASE("monoid morphisms") {
  const auto m = kl_monoid();
  CHECK(check_monoid_morphism(kmod(), kmod().id(B), m, m).passed());
  CHECK(check_monoid_morphism(kmod(), kmod().make(B, Obj{}, fixture::eps()), m, rationals()).passed());
  const auto swap = LinMap::from_rows(fixture::B, fixture::B, {{0, 1}, {1, 0}});
  CHECK_FALSE(check_monoid_morphism(kmod(), kmod().make(B, B, swap), m, m).passed());
}

TEST_CASE("comonoid morphisms") {
  const auto c = kl_comonoid();
  CHECK(check_comonoid_morphism(kmod(), kmod().id(B), c, c).passed());
  CHECK(check_comonoid_morphism(kmod(), kmod().make(Obj{}, B, fixture::eta()), trivial_comonoid(kmod()), c)
            .passed());
  const auto collapse = LinMap::from_rows(fixture::B, fixture::B, {{1, 1}, {0, 0}});
  CHECK_FALSE(check_comonoid_morphism(kmod(), kmod().make(B, B, collapse), c, c).passed());
}

TEST_CASE("comodules") {
  const auto& cat = kmod();
  const auto c = kl_comonoid();
  CHECK(check_comodule(cat, Side::right, c, B, {std::nullopt, c.comul}).passed());
  const auto both = check_comodule(cat, Side::bi, c, B * B,
                                   {cat.tensor(c.comul, B), cat.tensor(B, c.comul)});
  CHECK(both.passed());
  CHECK(both.find("bicomodule") != nullptr);

  const auto zero = cat.make(B, B * B, LinMap::zero(fixture::B, fixture::BB));
  const auto o = check_comodule(cat, Side::right, c, B, {std::nullopt, zero});
  CHECK_FALSE(o.find("right counit")->passed);
  CHECK_THROWS_AS(check_comodule(cat, Side::right, c, B, {std::nullopt, std::nullopt}), DimensionMismatch);
}

TEST_CASE("modules") {
  const auto& cat = kmod();
  const auto a = build_flip_bialgebra(2).monoid;
  const auto& A = a.carrier;
  CHECK(check_module(cat, Side::right, a, A, {std::nullopt, a.mul}).passed());
  CHECK(check_module(cat, Side::bi, a, A * A, {cat.tensor(a.mul, A), cat.tensor(A, a.mul)}).passed());

  const auto m = kl_monoid();
  const auto shuffle = cat.make(B * B, B * B, LinMap::from_rows(fixture::BB, fixture::BB,
                                                              {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  const auto o = check_module(cat, Side::right, m, B, {std::nullopt, cat.then({shuffle, m.mul})});
  CHECK_FALSE(o.passed());
}

TEST_CASE("base rings are monoids in the bimodule category") {
  for (const auto& r : {rationals_ring(), qxq_ring(), upper_triangular_ring()}) {
    BimoduleCategory cat(r);
    const auto R = cat.atom("R");
    const MonoidData m{R, cat.descend(R * R, R, r.mul), cat.make(Obj{}, R, LinMap::identity(r.module()))};
    CHECK(check_monoid(cat, m).passed());
  }
}

TEST_CASE("duality") {
  for (const auto& d : {build_kplusl(1), build_kplusl(2), build_flip_bialgebra(3)}) {
    const auto& B = d.carrier;
    const MonoidData dual_m{B, kmod().make(B * B, B, d.comonoid.comul.map.transpose()),
                            kmod().make(Obj{}, B, d.comonoid.counit.map.transpose())};
    const ComonoidData dual_c{B, kmod().make(B, B * B, d.monoid.mul.map.transpose()),
                              kmod().make(B, Obj{}, d.monoid.unit.map.transpose())};
    CHECK(check_monoid(kmod(), dual_m).passed());
    CHECK(check_comonoid(kmod(), dual_c).passed());
  }
}
