#include "posact/sposet.hpp"

#include <numeric>
#include <algorithm>

#include "posact/errors.hpp"

namespace posact {

bool same_sposet(SPoset const& a, SPoset const& b) {
  return a.poset == b.poset && a.act == b.act && *a.over == *b.over;
}

void validate_sposet(SPoset const& a) {
  make_poset(a.size(), a.poset.leq);
  int const n = a.size();
  int const m = a.over->size();
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < m; ++s) {
      int v = a.act_of(x, s);
      if (v < 0 || v >= n) {
        throw ValidationError("ActionNotClosed", {x, s});
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (a.act_of(x, a.over->identity) != x) {
      throw ValidationError("ActionNotUnital", {x});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < m; ++s) {
      for (int t = 0; t < m; ++t) {
        if (a.act_of(x, a.over->mul(s, t)) != a.act_of(a.act_of(x, s), t)) {
          throw ValidationError("ActionNotAssociative", {x, s, t});
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!a.le(x, y)) {
        continue;
      }
      for (int s = 0; s < m; ++s) {
        if (!a.le(a.act_of(x, s), a.act_of(y, s))) {
          throw ValidationError("ActionNotMonotone", {0, x, y, s});
        }
      }
    }
  }
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) {
      if (!a.over->le(s, t)) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        if (!a.le(a.act_of(x, s), a.act_of(x, t))) {
          throw ValidationError("ActionNotMonotone", {1, x, s, t});
        }
      }
    }
  }
}

SPosetPtr make_sposet_unchecked(Poset poset, PomonoidPtr over,
                                std::vector<int> act, std::string name) {
  auto out   = std::make_shared<SPoset>();
  out->poset = std::move(poset);
  out->over  = std::move(over);
  out->act   = std::move(act);
  out->name  = std::move(name);
  return out;
}

SPosetPtr make_sposet(Poset poset, PomonoidPtr over, std::vector<int> act,
                      std::string name) {
  auto out = make_sposet_unchecked(std::move(poset), std::move(over),
                                   std::move(act), std::move(name));
  validate_sposet(*out);
  return out;
}

void validate_map(SPosetMap const& f) {
  if (!(*f.dom->over == *f.cod->over)) {
    throw ValidationError("OverMismatch", {});
  }
  int const n = f.dom->size();
  int const m = f.dom->over->size();
  for (int a = 0; a < n; ++a) {
    if (f.table[a] < 0 || f.table[a] >= f.cod->size()) {
      throw ValidationError("NotWellDefined", {a});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (f.dom->le(a, b) && !f.cod->le(f.table[a], f.table[b])) {
        throw ValidationError("NotMonotone", {a, b});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int s = 0; s < m; ++s) {
      if (f.table[f.dom->act_of(a, s)]
          != f.cod->act_of(f.table[a], s)) {
        throw ValidationError("NotEquivariant", {a, s});
      }
    }
  }
}

SPosetMap make_map(SPosetPtr dom, SPosetPtr cod, std::vector<int> table,
                   std::string name) {
  SPosetMap f;
  f.dom   = std::move(dom);
  f.cod   = std::move(cod);
  f.table = std::move(table);
  f.name  = std::move(name);
  validate_map(f);
  return f;
}

SPosetMap compose(SPosetMap const& f, SPosetMap const& g) {
  if (!same_sposet(*f.cod, *g.dom)) {
    throw ValidationError("DomainMismatch", {});
  }
  SPosetMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.table.resize(f.table.size());
  for (size_t a = 0; a < f.table.size(); ++a) {
    h.table[a] = g.table[f.table[a]];
  }
  return h;
}

SPosetMap identity_map(SPosetPtr const& a) {
  SPosetMap f;
  f.dom = a;
  f.cod = a;
  f.table.resize(a->size());
  std::iota(f.table.begin(), f.table.end(), 0);
  return f;
}

bool is_order_embedding(SPosetMap const& f) {
  int const n = f.dom->size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (f.dom->le(a, b) != f.cod->le(f.table[a], f.table[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_epimorphism(SPosetMap const& f) {
  std::vector<uint8_t> hit(f.cod->size(), 0);
  for (int v : f.table) {
    hit[v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](uint8_t h) { return h != 0; });
}

namespace {
  struct Fingerprint {
    int              down, up;
    std::vector<int> orbit;  // sorted sizes of {a.s : s} per scalar? no:
                             // orbit size of a and fixed-scalar count
    bool operator==(Fingerprint const&) const = default;
  };

  Fingerprint fingerprint(SPoset const& a, int x) {
    Fingerprint fp{0, 0, {}};
    for (int y = 0; y < a.size(); ++y) {
      if (a.le(y, x)) {
        ++fp.down;
      }
      if (a.le(x, y)) {
        ++fp.up;
      }
    }
    std::vector<uint8_t> seen(a.size(), 0);
    int                  orbit = 0, fixed = 0;
    for (int s = 0; s < a.over->size(); ++s) {
      int v = a.act_of(x, s);
      if (!seen[v]) {
        seen[v] = 1;
        ++orbit;
      }
      if (v == x) {
        ++fixed;
      }
    }
    fp.orbit = {orbit, fixed};
    return fp;
  }

  bool iso_rec(SPoset const& a, SPoset const& b, std::vector<int>& img,
               std::vector<uint8_t>& used, int k) {
    int const n = a.size();
    int const m = a.over->size();
    if (k == n) {
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) {
        continue;
      }
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if (a.le(j, k) != b.le(img[j], v) || a.le(k, j) != b.le(v, img[j])) {
          ok = false;
        }
      }
      // action constraints among the assigned prefix {0..k}
      for (int j = 0; j <= k && ok; ++j) {
        int jv = (j == k) ? v : img[j];
        for (int s = 0; s < m && ok; ++s) {
          int js = a.act_of(j, s);
          if (js > k) {
            continue;  // not assigned yet
          }
          int jsv = (js == k) ? v : img[js];
          if (b.act_of(jv, s) != jsv) {
            ok = false;
          }
        }
      }
      if (!ok) {
        continue;
      }
      img[k]  = v;
      used[v] = 1;
      if (iso_rec(a, b, img, used, k + 1)) {
        return true;
      }
      img[k]  = -1;
      used[v] = 0;
    }
    return false;
  }
}  // namespace

std::optional<SPosetMap> find_isomorphism(SPosetPtr const& a,
                                          SPosetPtr const& b) {
  if (a->size() != b->size() || !(*a->over == *b->over)) {
    return std::nullopt;
  }
  // fingerprint multisets must agree
  std::vector<Fingerprint> fa, fb;
  for (int x = 0; x < a->size(); ++x) {
    fa.push_back(fingerprint(*a, x));
    fb.push_back(fingerprint(*b, x));
  }
  auto key = [](Fingerprint const& f) {
    return std::tuple(f.down, f.up, f.orbit);
  };
  auto sa = fa, sb = fb;
  std::sort(sa.begin(), sa.end(),
            [&](auto const& x, auto const& y) { return key(x) < key(y); });
  std::sort(sb.begin(), sb.end(),
            [&](auto const& x, auto const& y) { return key(x) < key(y); });
  if (sa != sb) {
    return std::nullopt;
  }
  std::vector<int>     img(a->size(), -1);
  std::vector<uint8_t> used(b->size(), 0);
  if (!iso_rec(*a, *b, img, used, 0)) {
    return std::nullopt;
  }
  SPosetMap f;
  f.dom   = a;
  f.cod   = b;
  f.table = img;
  return f;
}

void validate_biposet(Biposet const& b) {
  validate_sposet(*b.base);
  int const n = b.base->size();
  int const tn = b.left_over->size();
  int const sn = b.base->over->size();
  for (int a = 0; a < n; ++a) {
    if (b.lact_of(b.left_over->identity, a) != a) {
      throw ValidationError("LeftActionNotUnital", {a});
    }
  }
  for (int t = 0; t < tn; ++t) {
    for (int u = 0; u < tn; ++u) {
      for (int a = 0; a < n; ++a) {
        if (b.lact_of(b.left_over->mul(t, u), a)
            != b.lact_of(t, b.lact_of(u, a))) {
          throw ValidationError("LeftActionNotAssociative", {t, u, a});
        }
      }
    }
  }
  for (int t = 0; t < tn; ++t) {
    for (int a = 0; a < n; ++a) {
      for (int a2 = 0; a2 < n; ++a2) {
        if (b.base->le(a, a2)
            && !b.base->le(b.lact_of(t, a), b.lact_of(t, a2))) {
          throw ValidationError("LeftActionNotMonotone", {0, t, a, a2});
        }
      }
      for (int u = 0; u < tn; ++u) {
        if (b.left_over->le(t, u)
            && !b.base->le(b.lact_of(t, a), b.lact_of(u, a))) {
          throw ValidationError("LeftActionNotMonotone", {1, t, u, a});
        }
      }
    }
  }
  for (int t = 0; t < tn; ++t) {
    for (int a = 0; a < n; ++a) {
      for (int s = 0; s < sn; ++s) {
        if (b.base->act_of(b.lact_of(t, a), s)
            != b.lact_of(t, b.base->act_of(a, s))) {
          throw ValidationError("ActionsNotCompatible", {t, a, s});
        }
      }
    }
  }
}

SPosetPtr left_view_as_right(Biposet const& b, PomonoidPtr const& t_op) {
  int const        n  = b.base->size();
  int const        tn = t_op->size();
  std::vector<int> act(static_cast<size_t>(n) * tn);
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < tn; ++t) {
      act[a * tn + t] = b.lact_of(t, a);
    }
  }
  return make_sposet_unchecked(b.base->poset, t_op, std::move(act));
}

}  // namespace posact
