#include "posact/fixtures.hpp"

namespace posact::fixtures {

namespace {
  PomonoidPtr with_labels(PomonoidPtr s, std::vector<std::string> labels) {
    const_cast<Pomonoid*>(s.get())->elements = std::move(labels);
    return s;
  }
}  // namespace

PomonoidPtr S1() {
  return with_labels(make_pomonoid(discrete_poset(1), {0}, 0, "S1"), {"1"});
}

PomonoidPtr S2() {
  return with_labels(make_pomonoid(discrete_poset(2), {0, 1, 1, 1}, 0, "S2"),
                     {"1", "e"});
}

PomonoidPtr S2c() {
  return with_labels(
      make_pomonoid(order_closure({{1, 0}}, 2), {0, 1, 1, 1}, 0, "S2c"),
      {"1", "e"});
}

PomonoidPtr Z2() {
  return with_labels(make_pomonoid(discrete_poset(2), {0, 1, 1, 0}, 0, "Z2"),
                     {"1", "x"});
}

PomonoidPtr RZ3() {
  // 0 = 1, 1 = a, 2 = b with xy = y on {a, b}
  return with_labels(
      make_pomonoid(discrete_poset(3), {0, 1, 2, 1, 1, 2, 2, 1, 2}, 0, "RZ3"),
      {"1", "a", "b"});
}

PomonoidPtr N3() {
  // 0 = 1, 1 = x, 2 = 0 with x^2 = 0
  return with_labels(
      make_pomonoid(discrete_poset(3), {0, 1, 2, 1, 2, 2, 2, 2, 2}, 0, "N3"),
      {"1", "x", "0"});
}

SPosetPtr x_diamond() {
  // 0 = bot, 1 = a, 2 = b, 3 = top
  auto  order = order_closure({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 4);
  auto  x     = make_sposet(order, S2(), {0, 1, 1, 1, 2, 1, 3, 3}, "X");
  auto* mut   = const_cast<SPoset*>(x.get());
  mut->elements = {"bot", "a", "b", "top"};
  return x;
}

SPosetPtr b_chain() {
  auto  b   = make_sposet(chain_poset(2), S2(), {0, 0, 1, 1}, "B");
  auto* mut = const_cast<SPoset*>(b.get());
  mut->elements = {"0", "1"};
  return b;
}

SPosetMap f_collapse() {
  return make_map(x_diamond(), b_chain(), {0, 0, 0, 1}, "f");
}

SPosetMap g_section() {
  return make_map(b_chain(), x_diamond(), {1, 3}, "g");
}

}  // namespace posact::fixtures
