#include "doctest.h"

#include "satake/datum_io.hpp"
#include "satake/root_datum.hpp"

using namespace satake;

namespace {

GaloisRootDatum sl2() {
  GaloisRootDatum d;
  d.name = "sl2";
  d.rank = 1;
  d.roots = {{Int(2)}, {Int(-2)}};
  d.coroots = {{Int(1)}, {Int(-1)}};
  d.simple_indices = {0};
  d.frobenius = IntMat::identity(1);
  d.validate();
  return d;
}

GaloisRootDatum pgl2() {
  GaloisRootDatum d;
  d.name = "pgl2";
  d.rank = 1;
  d.roots = {{Int(1)}, {Int(-1)}};
  d.coroots = {{Int(2)}, {Int(-2)}};
  d.simple_indices = {0};
  d.frobenius = IntMat::identity(1);
  d.validate();
  return d;
}

// A2 root datum on the coroot lattice (SL3), optionally with the pinned
// swap as inertia or as frobenius.
GaloisRootDatum sl3(bool swap_inertia, bool swap_frobenius) {
  GaloisRootDatum d;
  d.name = "sl3";
  d.rank = 2;
  d.roots = {{Int(2), Int(-1)}, {Int(-1), Int(2)}, {Int(1), Int(1)},
             {Int(-2), Int(1)}, {Int(1), Int(-2)}, {Int(-1), Int(-1)}};
  d.coroots = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)},
               {Int(-1), Int(0)}, {Int(0), Int(-1)}, {Int(-1), Int(-1)}};
  d.simple_indices = {0, 1};
  IntMat swap{{0, 1}, {1, 0}};
  if (swap_inertia) d.inertia_gens = {swap};
  d.frobenius = swap_frobenius ? swap : IntMat::identity(2);
  d.validate();
  return d;
}

GaloisRootDatum norm_one_torus() {
  GaloisRootDatum d;
  d.name = "ramified-norm-torus";
  d.rank = 1;
  d.inertia_gens = {IntMat{{-1}}};
  d.frobenius = IntMat::identity(1);
  d.validate();
  return d;
}

GaloisRootDatum swap_torus() {
  GaloisRootDatum d;
  d.name = "restriction-torus";
  d.rank = 2;
  d.inertia_gens = {IntMat{{0, 1}, {1, 0}}};
  d.frobenius = IntMat::identity(2);
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("load validates the worked data") {
  CHECK_NOTHROW(sl2());
  CHECK_NOTHROW(pgl2());
  CHECK_NOTHROW(swap_torus());
}

TEST_CASE("load rejects broken data") {
  // <alpha, alpha_vee> = 3: non-crystallographic
  GaloisRootDatum d;
  d.rank = 1;
  d.roots = {{Int(1)}, {Int(-1)}};
  d.coroots = {{Int(3)}, {Int(-3)}};
  d.simple_indices = {0};
  d.frobenius = IntMat::identity(1);
  CHECK_THROWS_WITH_AS(d.validate(), doctest::Contains("non-crystallographic"), input_error);

  // frobenius sending the base to a non-base root: unpinned
  GaloisRootDatum e;
  e.rank = 2;
  e.roots = {{Int(2), Int(-1)}, {Int(-1), Int(2)}, {Int(1), Int(1)},
             {Int(-2), Int(1)}, {Int(1), Int(-2)}, {Int(-1), Int(-1)}};
  e.coroots = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)},
               {Int(-1), Int(0)}, {Int(0), Int(-1)}, {Int(-1), Int(-1)}};
  e.simple_indices = {0, 1};
  e.frobenius = IntMat{{-1, 1}, {0, 1}};  // reflection s_{alpha_1}
  CHECK_THROWS_WITH_AS(e.validate(), doctest::Contains("unpinned action"), input_error);

  // inertia generator of infinite order
  GaloisRootDatum t;
  t.rank = 2;
  t.inertia_gens = {IntMat{{1, 1}, {0, 1}}};
  t.frobenius = IntMat::identity(2);
  CHECK_THROWS_WITH_AS(t.validate(), doctest::Contains("finite"), input_error);
}

TEST_CASE("cochar coinvariants") {
  auto [xi_sl2, p1] = cochar_coinvariants(sl2());
  CHECK(xi_sl2.free_rank() == 1);
  CHECK(xi_sl2.is_torsion_free());

  // (R_{E/F}Gm)/Gm stored as Z with inertia -1: coinvariants Z/2
  auto [xi_t, p2] = cochar_coinvariants(norm_one_torus());
  CHECK(xi_t.free_rank() == 0);
  CHECK(xi_t.invariant_factors() == IVec{2});

  // trivial inertia: unchanged
  auto [xi3, p3] = cochar_coinvariants(sl3(false, true));
  CHECK(xi3.free_rank() == 2);
}

TEST_CASE("sc coroot lattice") {
  // SL2, full Levi: identity up to iso
  auto d = sl2();
  AbHom h = sc_coroot_lattice(d, d.full_levi());
  CHECK(is_injective(h));
  CHECK(hom_cokernel(h).first.is_trivial());

  // empty Levi: zero group, trivially injective
  AbHom ht = sc_coroot_lattice(d, d.torus_levi());
  CHECK(ht.source().is_trivial());

  // PGL2, full: image 2Z inside Z, cokernel Z/2
  auto p = pgl2();
  AbHom hp = sc_coroot_lattice(p, p.full_levi());
  CHECK(is_injective(hp));
  CHECK(hom_cokernel(hp).first.invariant_factors() == IVec{2});
}

TEST_CASE("split rank torus") {
  CHECK(split_rank_torus(sl2()).group.free_rank() == 1);
  CHECK(split_rank_torus(norm_one_torus()).group.free_rank() == 0);
  // unramified su3: invariants of the frobenius swap on Z^2
  CHECK(split_rank_torus(sl3(false, true)).group.free_rank() == 1);
  // split sl3
  CHECK(split_rank_torus(sl3(false, false)).group.free_rank() == 2);
}

TEST_CASE("minimal levi") {
  CHECK(minimal_levi(sl2()).root_indices.empty());
  CHECK(minimal_levi(sl3(false, true)).root_indices.empty());  // quasi-split
  CHECK(minimal_levi(sl3(false, false)).root_indices.empty());
  CHECK(minimal_levi(norm_one_torus()).root_indices.empty());
  // idempotence: the roots vanishing on A within the minimal levi are the same set
  auto d = sl3(false, true);
  auto m = minimal_levi(d);
  auto m2 = minimal_levi_for(d, split_rank_torus(d));
  CHECK(m.root_indices == m2.root_indices);
}

TEST_CASE("echelonnage computed for trivial and pinned-frobenius data") {
  auto d = sl2();
  auto [xi, proj] = cochar_coinvariants(d);
  auto sys = echelonnage(d, xi, proj);
  CHECK(sys.size() == 2);
  CHECK(sys.provenance == EchelonSystem::Provenance::computed);
  CHECK(sys.simple.size() == 1);

  // unramified su3 (frobenius swap, trivial inertia): Sigma = Phi (A2)
  auto su3 = sl3(false, true);
  auto [xi3, proj3] = cochar_coinvariants(su3);
  auto sys3 = echelonnage(su3, xi3, proj3);
  CHECK(sys3.size() == 6);
  CHECK(sys3.simple.size() == 2);

  // torus: empty system
  auto t = norm_one_torus();
  auto [xit, projt] = cochar_coinvariants(t);
  CHECK(echelonnage(t, xit, projt).empty());
}

TEST_CASE("echelonnage rejects the non-reduced ramified restriction") {
  // A2 with inertia swap: the orbit {a1, a2} and the orbit {a1+a2}
  // restrict proportionally, so an explicit system is required.
  auto d = sl3(true, false);
  auto [xi, proj] = cochar_coinvariants(d);
  CHECK(xi.free_rank() == 1);
  CHECK_THROWS_WITH_AS(echelonnage(d, xi, proj), doctest::Contains("echelonnage required"),
                       input_error);
}

TEST_CASE("explicit echelonnage accepted and validated") {
  auto d = sl3(true, false);
  d.echelonnage_input = EchelonnageInput{
      {{Int(2), Int(2)}, {Int(-2), Int(-2)}},  // covectors on ambient X_*
      {{Int(1), Int(0)}, {Int(-1), Int(0)}}};
  auto [xi, proj] = cochar_coinvariants(d);
  auto sys = echelonnage(d, xi, proj);
  CHECK(sys.provenance == EchelonSystem::Provenance::explicit_input);
  CHECK(sys.size() == 2);
  CHECK(sys.simple.size() == 1);
  auto w = enumerate_weyl_perms(sys);
  CHECK(w.size() == 2);

  // a broken explicit system is rejected
  auto bad = sl3(true, false);
  bad.echelonnage_input = EchelonnageInput{{{Int(1), Int(1)}}, {{Int(1), Int(0)}}};
  auto [xib, projb] = cochar_coinvariants(bad);
  CHECK_THROWS_AS(echelonnage(bad, xib, projb), input_error);
}

TEST_CASE("weyl enumeration sizes") {
  auto d = sl3(false, false);
  auto [xi, proj] = cochar_coinvariants(d);
  auto sys = echelonnage(d, xi, proj);
  CHECK(enumerate_weyl_perms(sys).size() == 6);

  auto d2 = sl2();
  auto [xi2, proj2] = cochar_coinvariants(d2);
  CHECK(enumerate_weyl_perms(echelonnage(d2, xi2, proj2)).size() == 2);
}

TEST_CASE("levi helpers") {
  auto d = sl3(false, false);
  auto full = d.full_levi();
  auto simples = d.levi_simple_roots(full);
  CHECK(simples == std::vector<int>{0, 1});
  auto comps = d.components(simples);
  CHECK(comps.size() == 1);
  CHECK(d.component_is_type_a(comps[0]));

  // closed-ness: {a1, -a1} is a valid levi; {a1+a2 alone} misses negation
  CHECK_NOTHROW(d.levi_from_indices({0, 3}));
  CHECK_THROWS_AS(d.levi_from_indices({2}), input_error);
  // not closed: a1 and a2 span a1+a2
  CHECK_THROWS_AS(d.levi_from_indices({0, 1, 3, 4}), input_error);
}

TEST_CASE("json round trip") {
  auto d = sl3(true, false);
  d.echelonnage_input = EchelonnageInput{
      {{Int(2), Int(2)}, {Int(-2), Int(-2)}}, {{Int(1), Int(0)}, {Int(-1), Int(0)}}};
  std::string text = datum_to_json(d);
  GaloisRootDatum back = parse_datum(text);
  CHECK(back.rank == d.rank);
  CHECK(back.roots == d.roots);
  CHECK(back.coroots == d.coroots);
  CHECK(back.inertia_gens.size() == 1);
  REQUIRE(back.echelonnage_input.has_value());
  CHECK(back.echelonnage_input->roots == d.echelonnage_input->roots);

  CHECK_THROWS_AS(parse_datum("{not json"), input_error);
  CHECK_THROWS_AS(parse_datum("{\"rank\": 1}"), input_error);
}
