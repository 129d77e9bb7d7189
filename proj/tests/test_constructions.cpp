#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posact/constructions.hpp"
#include "posact/decide.hpp"
#include "posact/enumerate.hpp"
#include "posact/fixtures.hpp"
#include "posact/green.hpp"
#include "posact/maps.hpp"

using namespace posact;

TEST_CASE("regular_representation") {
  auto s1 = regular_representation(fixtures::S1());
  CHECK(s1->size() == 1);

  auto ss = regular_representation(fixtures::S2());
  CHECK(ss->size() == 2);
  CHECK(ss->act_of(1, 1) == 1);  // e.e = e

  for (auto const& s : enumerate_pomonoids_up_to(4)) {
    CHECK_NOTHROW(validate_sposet(*regular_representation(s)));
  }
}

TEST_CASE("cyclic_sub") {
  auto ss = regular_representation(fixtures::S2());

  std::vector<int> carrier;
  auto             es = cyclic_sub(ss, 1, &carrier);
  CHECK(es->size() == 1);
  CHECK(carrier == std::vector<int>{1});

  CHECK(find_isomorphism(cyclic_sub(ss, 0), ss).has_value());

  auto x = fixtures::x_diamond();
  auto bot = cyclic_sub(x, 0, &carrier);
  CHECK(carrier == std::vector<int>{0, 1});  // {bot, bot.e = a}
  CHECK(bot->size() == 2);
}

TEST_CASE("down_closed_sub and principal poideal") {
  auto s2c = fixtures::S2c();
  auto ssc = regular_representation(s2c);

  std::vector<int> carrier;
  auto             de = down_closed_sub(ssc, {1}, &carrier);
  CHECK(carrier == std::vector<int>{1});

  CHECK(find_isomorphism(down_closed_sub(ssc, {0, 1}), ssc).has_value());

  // down(eS) = down_closed_sub(S_S, eS) for every idempotent, order <= 4
  for (auto const& s : enumerate_pomonoids_up_to(4)) {
    auto ss = regular_representation(s);
    for (int e : idempotents(*s)) {
      auto via_ideal = principal_poideal_sposet(s, e);
      auto via_sub   = down_closed_sub(ss, right_ideal(*s, e));
      CHECK(same_sposet(*via_ideal, *via_sub));
    }
  }
}

TEST_CASE("free_sposet") {
  auto s2 = fixtures::S2();

  CHECK(find_isomorphism(free_sposet(s2, discrete_poset(1)),
                         regular_representation(s2))
            .has_value());

  auto f = free_sposet(s2, chain_poset(2));
  CHECK(f->size() == 4);
  CHECK_NOTHROW(validate_sposet(*f));
  // componentwise order: (p,s) <= (q,s) when p <= q
  CHECK(f->le(0 * 2 + 0, 1 * 2 + 0));
  CHECK(!f->le(0 * 2 + 0, 1 * 2 + 1));  // scalars 1, e incomparable in S2
}

TEST_CASE("product and coproduct") {
  auto s2 = fixtures::S2();
  auto ss = regular_representation(s2);
  auto x  = fixtures::x_diamond();

  // (a,s) -> s is a surjective S-poset map A x S_S -> S_S
  auto prod = product(x, ss);
  auto proj = product_projection(prod, x, ss, 1);
  CHECK_NOTHROW(validate_map(proj));
  CHECK(is_epimorphism(proj));

  auto proj0 = product_projection(prod, x, ss, 0);
  CHECK_NOTHROW(validate_map(proj0));

  // pairing: pi_A o <id,f> = id
  auto bx   = product(fixtures::b_chain(), fixtures::x_diamond());
  auto pair = product_pairing(bx, identity_map(fixtures::b_chain()),
                              fixtures::g_section());
  CHECK_NOTHROW(validate_map(pair));
  auto pb = product_projection(bx, fixtures::b_chain(), fixtures::x_diamond(),
                               0);
  CHECK(compose(pair, pb).table
        == identity_map(fixtures::b_chain()).table);

  auto es  = cyclic_sub(ss, 1);
  auto cop = coproduct(es, ss);
  CHECK(cop->size() == 3);
  CHECK(decompose(cop).size() == 2);
  for (int which : {0, 1}) {
    CHECK_NOTHROW(validate_map(coproduct_injection(cop, es, ss, which)));
  }
}

TEST_CASE("trivial_sposet") {
  auto b = trivial_sposet(fixtures::S2(), chain_poset(2));
  CHECK(same_sposet(*b, *fixtures::b_chain()));
  CHECK_NOTHROW(validate_sposet(
      *trivial_sposet(fixtures::RZ3(), discrete_poset(2))));
  CHECK(trivial_sposet(fixtures::S2(), discrete_poset(1))->size() == 1);
}

TEST_CASE("end_pomonoid") {
  auto ss = regular_representation(fixtures::S2());
  auto e  = end_pomonoid(ss);
  CHECK(e.mon->size() == 2);  // maps determined by the image of 1
  CHECK_NOTHROW(validate_pomonoid(*e.mon));
  CHECK(e.index_of(identity_map(ss).table) == e.mon->identity);

  auto pt = end_pomonoid(trivial_sposet(fixtures::S2(), discrete_poset(1)));
  CHECK(pt.mon->size() == 1);

  auto ex = end_pomonoid(fixtures::x_diamond());
  CHECK_NOTHROW(validate_pomonoid(*ex.mon));
  CHECK(static_cast<int>(ex.maps.size()) == ex.mon->size());
  // mult is composition: table of mult(i,j) = maps[i] o maps[j]
  for (int i = 0; i < ex.mon->size(); ++i) {
    for (int j = 0; j < ex.mon->size(); ++j) {
      std::vector<int> comp(4);
      for (int x = 0; x < 4; ++x) {
        comp[x] = ex.maps[i].table[ex.maps[j].table[x]];
      }
      CHECK(ex.mon->mul(i, j) == ex.index_of(comp));
    }
  }
}

TEST_CASE("hom_biposet") {
  auto s2 = fixtures::S2();
  auto ss = regular_representation(s2);

  // hom(S_S, A) is isomorphic to A as a poset via f -> f(1)
  for (auto const& a : enumerate_sposets(s2, 3)) {
    auto h = hom_biposet(ss, a);
    REQUIRE(static_cast<int>(h.maps.size()) == a->size());
    CHECK(!find_poset_isomorphism(h.order, a->poset).empty());
  }

  auto b  = fixtures::b_chain();
  auto hb = hom_biposet(b, b);
  CHECK(hb.maps.size() == 3);  // monotone self-maps of chain2

  // left and right actions commute: the biposet validates
  auto hx = hom_biposet(b, fixtures::x_diamond());
  CHECK_NOTHROW(validate_biposet(hx.biposet));
  CHECK_NOTHROW(validate_sposet(*hx.right_over_end_dom));
  CHECK_NOTHROW(validate_sposet(*hx.right_over_end_cod_op));
}

TEST_CASE("canonical homs") {
  auto ss  = regular_representation(fixtures::S2());
  auto end = end_pomonoid(ss);

  // lambda for T = End(A) acting tautologically is the identity hom
  Biposet taut;
  taut.base      = ss;
  taut.left_over = end.mon;
  taut.lact.resize(end.mon->size() * ss->size());
  for (int t = 0; t < end.mon->size(); ++t) {
    for (int a = 0; a < ss->size(); ++a) {
      taut.lact[t * ss->size() + a] = end.maps[t].table[a];
    }
  }
  auto lam = canonical_lambda(taut, end);
  for (int t = 0; t < end.mon->size(); ++t) {
    CHECK(lam[t] == t);
  }
  CHECK(check_pomonoid_hom(*end.mon, *end.mon, lam));

  // rho for S acting on S_S is a pomonoid hom into End(_T S)
  auto rho = canonical_rho(taut);
  CHECK(check_pomonoid_hom(*fixtures::S2(), *rho.end_left_op, rho.table));
}

TEST_CASE("hom functoriality on the fixture retraction") {
  // hom(B, -) sends the retraction (f, g) to a retraction of hom posets
  auto b = fixtures::b_chain();
  auto f = fixtures::f_collapse();
  auto g = fixtures::g_section();

  auto hom_bx = hom_biposet(b, fixtures::x_diamond());
  auto hom_bb = hom_biposet(b, b);
  for (size_t i = 0; i < hom_bb.maps.size(); ++i) {
    auto lifted = compose(hom_bb.maps[i], g);   // g o u : B -> X
    auto back   = compose(lifted, f);           // f o (g o u) = u
    CHECK(back.table == hom_bb.maps[i].table);
    CHECK(hom_bx.index_of(lifted.table) >= 0);
  }
}
