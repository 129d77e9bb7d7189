#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posact/constructions.hpp"
#include "posact/errors.hpp"
#include "posact/fixtures.hpp"
#include "posact/maps.hpp"
#include "posact/poset.hpp"
#include "posact/sposet.hpp"

using namespace posact;

static std::string error_code(std::function<void()> const& fn) {
  try {
    fn();
  } catch (ValidationError const& e) {
    return e.code();
  }
  return "";
}

TEST_CASE("order_closure") {
  auto discrete = order_closure({}, 2);
  CHECK(discrete.le(0, 0));
  CHECK(!discrete.le(0, 1));
  CHECK(!discrete.le(1, 0));

  auto chain = order_closure({{0, 1}, {1, 2}}, 3);
  CHECK(chain.le(0, 2));  // transitivity forced
  CHECK(chain.le(0, 1));
  CHECK(!chain.le(2, 0));

  CHECK(error_code([] { order_closure({{0, 1}, {1, 0}}, 2); })
        == "ClosureNotAntisymmetric");
}

TEST_CASE("poset validation") {
  // not transitive as given
  std::vector<uint8_t> m = {1, 1, 0, 0, 1, 1, 0, 0, 1};
  CHECK(error_code([&] { make_poset(3, m); }) == "NotTransitive");
  // not reflexive
  std::vector<uint8_t> r = {0, 0, 0, 1};
  CHECK(error_code([&] { make_poset(2, r); }) == "NotReflexive");
}

TEST_CASE("validate_pomonoid fixtures") {
  CHECK_NOTHROW(validate_pomonoid(*fixtures::S2()));
  CHECK_NOTHROW(validate_pomonoid(*fixtures::S2c()));

  // Z2 with x <= 1 is not order-compatible: x.x <= 1.x would force 1 <= x
  auto order = order_closure({{1, 0}}, 2);
  CHECK(error_code([&] { make_pomonoid(order, {0, 1, 1, 0}, 0); })
        == "NotCompatible");

  // broken associativity / unit
  CHECK(error_code([] {
          make_pomonoid(discrete_poset(3), {0, 1, 2, 1, 2, 1, 2, 1, 1}, 0);
        })
        == "NotAssociative");
  CHECK(error_code([] { make_pomonoid(discrete_poset(2), {0, 0, 0, 0}, 0); })
        == "NotUnit");
}

TEST_CASE("validate_sposet fixtures") {
  CHECK_NOTHROW(validate_sposet(*regular_representation(fixtures::S2())));
  CHECK_NOTHROW(validate_sposet(*fixtures::x_diamond()));

  // bottom.1 := a breaks unitality
  auto x = fixtures::x_diamond();
  CHECK(error_code([&] {
          make_sposet(x->poset, x->over, {1, 1, 1, 1, 2, 1, 3, 3});
        })
        == "ActionNotUnital");
}

TEST_CASE("validate_map") {
  auto ss = regular_representation(fixtures::S2());
  CHECK_NOTHROW(validate_map(identity_map(ss)));
  CHECK_NOTHROW(validate_map(fixtures::f_collapse()));

  // g(0) = bottom is not equivariant: bottom.e = a but 0.e = 0
  CHECK(error_code([] {
          make_map(fixtures::b_chain(), fixtures::x_diamond(), {0, 3});
        })
        == "NotEquivariant");

  // over mismatch
  auto s1s = regular_representation(fixtures::S1());
  CHECK(error_code([&] {
          SPosetMap f{s1s, regular_representation(fixtures::S2()), {0}, ""};
          validate_map(f);
        })
        == "OverMismatch");
}

TEST_CASE("compose") {
  auto f = fixtures::f_collapse();
  auto g = fixtures::g_section();
  auto b = fixtures::b_chain();

  auto id = identity_map(b);
  CHECK(compose(id, id).table == id.table);

  // f o g = id_B, diagrammatic: compose(g, f)
  CHECK(compose(g, f).table == id.table);

  CHECK(error_code([&] { compose(f, f); }) == "DomainMismatch");
}

TEST_CASE("is_order_embedding / is_epimorphism") {
  auto s2 = fixtures::S2();
  auto ss = regular_representation(s2);
  auto es = cyclic_sub(ss, 1);

  // inclusion eS -> S_S
  auto incl = make_map(es, ss, {1});
  CHECK(is_order_embedding(incl));
  CHECK(!is_epimorphism(incl));

  auto f = fixtures::f_collapse();
  CHECK(!is_order_embedding(f));  // a, b incomparable but images equal
  CHECK(is_epimorphism(f));

  CHECK(is_order_embedding(identity_map(ss)));
  CHECK(is_epimorphism(identity_map(ss)));
}

TEST_CASE("find_isomorphism") {
  auto s2 = fixtures::S2();
  auto ss = regular_representation(s2);
  CHECK(find_isomorphism(ss, ss).has_value());

  auto es = cyclic_sub(ss, 1);
  CHECK(!find_isomorphism(es, ss).has_value());

  auto fr = free_sposet(s2, discrete_poset(1));
  auto iso = find_isomorphism(fr, ss);
  REQUIRE(iso.has_value());
  CHECK_NOTHROW(validate_map(*iso));
  CHECK(is_epimorphism(*iso));
  CHECK(is_order_embedding(*iso));

  // symmetry
  CHECK(find_isomorphism(ss, fr).has_value());
}

TEST_CASE("opposite") {
  auto s2 = fixtures::S2();
  CHECK(*opposite(s2) == *s2);  // commutative

  auto rz3 = fixtures::RZ3();
  auto op  = opposite(rz3);
  CHECK_NOTHROW(validate_pomonoid(*op));
  CHECK(op->mul(1, 2) == 1);  // left-zero on {a, b}
  CHECK(op->mul(2, 1) == 2);
  CHECK(*opposite(op) == *rz3);  // involution
}

TEST_CASE("biposet validation and left view") {
  // End(A) acting on A on the left, A = S_S over S2
  auto ss  = regular_representation(fixtures::S2());
  auto end = end_pomonoid(ss);
  Biposet b;
  b.base      = ss;
  b.left_over = end.mon;
  b.lact.resize(end.mon->size() * ss->size());
  for (int t = 0; t < end.mon->size(); ++t) {
    for (int a = 0; a < ss->size(); ++a) {
      b.lact[t * ss->size() + a] = end.maps[t].table[a];
    }
  }
  CHECK_NOTHROW(validate_biposet(b));
  auto view = left_view_as_right(b, opposite(end.mon));
  CHECK_NOTHROW(validate_sposet(*view));
}

TEST_CASE("poset helpers") {
  auto diamond = order_closure({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 4);
  CHECK(is_complete_lattice(diamond));
  CHECK(!is_complete_lattice(Poset{}));  // empty: no top

  auto v = sub_poset(diamond, {0, 1, 2});  // the Remark fiber
  CHECK(!is_complete_lattice(v));

  CHECK(is_complete_lattice(chain_poset(3)));
  CHECK(!is_complete_lattice(discrete_poset(2)));

  auto red = transitive_reduction(diamond);
  CHECK(red.size() == 4);  // covers only

  CHECK(monotone_maps(chain_poset(2), chain_poset(2)).size() == 3);
  CHECK(monotone_maps(discrete_poset(2), chain_poset(2)).size() == 4);
}

TEST_CASE("constructed objects satisfy their validators") {
  auto s2 = fixtures::S2();
  auto ss = regular_representation(s2);
  auto x  = fixtures::x_diamond();

  CHECK_NOTHROW(validate_sposet(*product(x, ss)));
  CHECK_NOTHROW(validate_sposet(*coproduct(x, ss)));
  CHECK_NOTHROW(validate_sposet(*free_sposet(s2, chain_poset(2))));
  CHECK_NOTHROW(validate_sposet(*cyclic_sub(x, 0)));
  CHECK_NOTHROW(validate_sposet(*trivial_sposet(s2, discrete_poset(2))));
  CHECK_NOTHROW(validate_pomonoid(*end_pomonoid(x).mon));
}
