#include "posact/green.hpp"

#include <algorithm>

namespace posact {

std::vector<int> idempotents(Pomonoid const& s) {
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e) {
    if (s.mul(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

namespace {
  // closure of {x} under the given one-step products
  std::vector<int> closure(Pomonoid const& s, int x, bool right, bool left) {
    std::vector<uint8_t> in(s.size(), 0);
    std::vector<int>     work{x};
    in[x] = 1;
    while (!work.empty()) {
      int y = work.back();
      work.pop_back();
      for (int t = 0; t < s.size(); ++t) {
        if (right) {
          int z = s.mul(y, t);
          if (!in[z]) {
            in[z] = 1;
            work.push_back(z);
          }
        }
        if (left) {
          int z = s.mul(t, y);
          if (!in[z]) {
            in[z] = 1;
            work.push_back(z);
          }
        }
      }
    }
    std::vector<int> out;
    for (int i = 0; i < s.size(); ++i) {
      if (in[i]) {
        out.push_back(i);
      }
    }
    return out;
  }
}  // namespace

std::vector<int> right_ideal(Pomonoid const& s, int x) {
  return closure(s, x, true, false);
}

std::vector<int> left_ideal(Pomonoid const& s, int x) {
  return closure(s, x, false, true);
}

std::vector<int> two_sided_ideal(Pomonoid const& s, int x) {
  return closure(s, x, true, true);
}

bool green_related(Pomonoid const& s, GreenRel rel, int a, int b) {
  switch (rel) {
    case GreenRel::R:
      return right_ideal(s, a) == right_ideal(s, b);
    case GreenRel::J:
      return two_sided_ideal(s, a) == two_sided_ideal(s, b);
    case GreenRel::D: {
      auto aR = right_ideal(s, a);
      auto bL = left_ideal(s, b);
      for (int u = 0; u < s.size(); ++u) {
        if (right_ideal(s, u) == aR && left_ideal(s, u) == bL) {
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

bool is_regular_element(Pomonoid const& s, int x) {
  for (int t = 0; t < s.size(); ++t) {
    if (s.mul(s.mul(x, t), x) == x) {
      return true;
    }
  }
  return false;
}

bool is_regular_pomonoid(Pomonoid const& s) {
  for (int x = 0; x < s.size(); ++x) {
    if (!is_regular_element(s, x)) {
      return false;
    }
  }
  return true;
}

IdealSet principal_right_poideal(Pomonoid const& s, int x) {
  std::vector<uint8_t> in(s.size(), 0);
  for (int u = 0; u < s.size(); ++u) {
    int xu = s.mul(x, u);
    for (int t = 0; t < s.size(); ++t) {
      if (s.le(t, xu)) {
        in[t] = 1;
      }
    }
  }
  IdealSet out;
  out.side = Side::right;
  for (int i = 0; i < s.size(); ++i) {
    if (in[i]) {
      out.carrier.push_back(i);
    }
  }
  return out;
}

std::vector<IdealSet> enumerate_poideals(Pomonoid const& s, Side side) {
  std::vector<IdealSet> out;
  for (uint32_t mask : down_sets(s.poset)) {
    bool ideal = true;
    for (int x = 0; x < s.size() && ideal; ++x) {
      if (!(mask & (1u << x))) {
        continue;
      }
      for (int t = 0; t < s.size() && ideal; ++t) {
        int z = side == Side::right ? s.mul(x, t) : s.mul(t, x);
        if (!(mask & (1u << z))) {
          ideal = false;
        }
      }
    }
    if (!ideal) {
      continue;
    }
    IdealSet is;
    is.side = side;
    for (int i = 0; i < s.size(); ++i) {
      if (mask & (1u << i)) {
        is.carrier.push_back(i);
      }
    }
    out.push_back(std::move(is));
  }
  std::sort(out.begin(), out.end(), [](IdealSet const& a, IdealSet const& b) {
    if (a.carrier.size() != b.carrier.size()) {
      return a.carrier.size() < b.carrier.size();
    }
    return a.carrier < b.carrier;
  });
  return out;
}

bool is_left_simple(Pomonoid const& s) {
  for (auto const& i : enumerate_poideals(s, Side::left)) {
    if (!i.carrier.empty() && static_cast<int>(i.carrier.size()) < s.size()) {
      return false;
    }
  }
  return true;
}

bool is_right_simple(Pomonoid const& s) {
  for (auto const& i : enumerate_poideals(s, Side::right)) {
    if (!i.carrier.empty() && static_cast<int>(i.carrier.size()) < s.size()) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> green_classes(Pomonoid const& s, GreenRel rel) {
  std::vector<std::vector<int>> out;
  std::vector<uint8_t>          done(s.size(), 0);
  for (int a = 0; a < s.size(); ++a) {
    if (done[a]) {
      continue;
    }
    std::vector<int> cls;
    for (int b = 0; b < s.size(); ++b) {
      if (!done[b] && green_related(s, rel, a, b) && green_related(s, rel, b, a)) {
        cls.push_back(b);
        done[b] = 1;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace posact
