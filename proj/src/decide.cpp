#include "posact/decide.hpp"

#include <algorithm>
#include <numeric>

#include "posact/errors.hpp"

namespace posact {

SPosetPtr empty_sposet(PomonoidPtr const& s) {
  Poset p;
  p.size = 0;
  return make_sposet_unchecked(p, s, {});
}

Verdict is_generator(SPosetPtr const& a, DecideOptions const& opts) {
  Verdict v;
  auto    ss  = regular_representation(a->over);
  auto    epi = find_epimorphism(a, ss, opts.budget);
  v.value     = epi.has_value();
  if (epi) {
    // section: gamma(s) = a0.s where f(a0) = 1
    int a0 = -1;
    for (int x = 0; x < a->size(); ++x) {
      if (epi->table[x] == a->over->identity) {
        a0 = x;
        break;
      }
    }
    SPosetMap gamma;
    gamma.dom = ss;
    gamma.cod = a;
    gamma.table.resize(ss->size());
    for (int s = 0; s < ss->size(); ++s) {
      gamma.table[s] = a->act_of(a0, s);
    }
    Witness w;
    epi->name = "epi";
    w.maps.emplace_back("epi", *epi);
    gamma.name = "section";
    w.maps.emplace_back("section", gamma);
    v.witness = std::move(w);
  }
  return v;
}

Verdict is_cyclic_projective(SPosetPtr const& a, DecideOptions const& opts) {
  Verdict v;
  auto    ss = regular_representation(a->over);
  // pi : S_S -> A is determined by pi(1); gamma : A -> S_S is searched with
  // values restricted to pi^{-1}(x) so that pi o gamma = id.
  for (auto const& pi : enumerate_maps(ss, a, nullptr, opts.budget)) {
    std::vector<std::vector<int>> allowed(a->size());
    for (int s = 0; s < ss->size(); ++s) {
      allowed[pi.table[s]].push_back(s);
    }
    bool feasible = true;
    for (auto const& c : allowed) {
      if (c.empty()) {
        feasible = false;  // pi not surjective
        break;
      }
    }
    if (!feasible) {
      continue;
    }
    auto gamma = find_map(a, ss, &allowed, opts.budget);
    if (gamma) {
      Witness w;
      w.maps.emplace_back("pi", pi);
      w.maps.emplace_back("gamma", *gamma);
      v.value   = true;
      v.witness = std::move(w);
      return v;
    }
  }
  v.value = false;
  return v;
}

bool is_cyclic(SPosetPtr const& a) {
  for (int x = 0; x < a->size(); ++x) {
    std::vector<uint8_t> hit(a->size(), 0);
    int                  count = 0;
    for (int s = 0; s < a->over->size(); ++s) {
      int y = a->act_of(x, s);
      if (!hit[y]) {
        hit[y] = 1;
        ++count;
      }
    }
    if (count == a->size()) {
      return true;
    }
  }
  return a->size() == 0;
}

std::vector<Component> decompose(SPosetPtr const& a) {
  int const        n = a->size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a->le(x, y)) {
        unite(x, y);
      }
    }
    for (int s = 0; s < a->over->size(); ++s) {
      unite(x, a->act_of(x, s));
    }
  }
  std::vector<Component> out;
  std::vector<int>       root_index(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(out.size());
      out.push_back({});
    }
    out[root_index[r]].carrier.push_back(x);
  }
  for (auto& c : out) {
    c.piece = down_closed_sub(a, c.carrier);  // carrier is already closed
  }
  return out;
}

Verdict is_projective(SPosetPtr const& a, DecideOptions const&) {
  Verdict v;
  v.value = true;
  Witness w;
  auto    ss    = regular_representation(a->over);
  auto    idems = idempotents(*a->over);
  for (auto const& comp : decompose(a)) {
    bool found = false;
    for (int e : idems) {
      auto es  = cyclic_sub(ss, e);
      auto iso = find_isomorphism(comp.piece, es);
      if (iso) {
        found = true;
        w.note += (w.note.empty() ? "" : ";") + std::string("e=")
                  + std::to_string(e);
        break;
      }
    }
    if (!found) {
      v.value = false;
      return v;
    }
  }
  v.witness = std::move(w);
  return v;
}

Verdict is_projective_generator(SPosetPtr const& a, DecideOptions const& opts) {
  Verdict v;
  auto    ss    = regular_representation(a->over);
  auto    idems = idempotents(*a->over);
  bool    has_j1_component = false;
  for (auto const& comp : decompose(a)) {
    bool found = false;
    for (int e : idems) {
      auto es = cyclic_sub(ss, e);
      if (find_isomorphism(comp.piece, es)) {
        found = true;
        if (green_related(*a->over, GreenRel::J, e, a->over->identity)) {
          has_j1_component = true;
        }
        break;
      }
    }
    if (!found) {
      v.value = false;
      return v;
    }
  }
  v.value = has_j1_component && a->size() > 0;
  (void) opts;
  return v;
}

Verdict is_free(SPosetPtr const& a, DecideOptions const& opts) {
  Verdict   v;
  int const k = a->over->size();
  if (a->size() % k != 0) {
    v.value = false;
    return v;
  }
  int const   m = a->size() / k;
  EnumOptions eo;
  eo.budget = opts.budget;
  if (m == 0) {
    v.value = true;  // the empty S-poset is free on the empty poset
    return v;
  }
  for (auto const& p : enumerate_posets(m, eo)) {
    auto f   = free_sposet(a->over, p);
    auto iso = find_isomorphism(f, a);
    if (iso) {
      Witness w;
      iso->name = "iso";
      w.maps.emplace_back("iso", *iso);
      w.note    = "free on a poset of size " + std::to_string(m);
      v.value   = true;
      v.witness = std::move(w);
      return v;
    }
  }
  v.value = false;
  return v;
}

namespace {
  // sub-S-poset of S_S on a poideal carrier, plus the inclusion
  std::pair<SPosetPtr, std::vector<int>> poideal_sposet(
      PomonoidPtr const& s, std::vector<int> const& carrier) {
    if (carrier.empty()) {
      return {empty_sposet(s), {}};
    }
    auto ss = regular_representation(s);
    return {down_closed_sub(ss, carrier), carrier};
  }
}  // namespace

Verdict is_d_injective(SPosetPtr const& a, DInjScope scope,
                       DecideOptions const& opts) {
  Verdict v;
  v.value = true;
  auto const& s = a->over;

  std::vector<std::vector<int>> carriers;
  if (scope == DInjScope::principal) {
    for (int x = 0; x < s->size(); ++x) {
      auto c = principal_right_poideal(*s, x).carrier;
      if (std::find(carriers.begin(), carriers.end(), c) == carriers.end()) {
        carriers.push_back(c);
      }
    }
  } else {
    for (auto const& i : enumerate_poideals(*s, Side::right)) {
      carriers.push_back(i.carrier);
    }
  }

  for (auto const& carrier : carriers) {
    auto [ideal, elems] = poideal_sposet(s, carrier);
    for (auto const& u : enumerate_maps(ideal, a, nullptr, opts.budget)) {
      // an extension v : S_S -> A with v o incl = u is determined by
      // v(1) = x; it restricts to u iff x.i = u(i) on the poideal
      bool extends = false;
      for (int x = 0; x < a->size() && !extends; ++x) {
        bool ok = true;
        for (size_t i = 0; i < carrier.size() && ok; ++i) {
          if (a->act_of(x, carrier[i]) != u.table[i]) {
            ok = false;
          }
        }
        extends = ok;
      }
      if (carrier.empty()) {
        extends = a->size() > 0;
      }
      if (!extends) {
        Witness w;
        SPosetMap uu = u;
        uu.name      = "unextendable";
        w.maps.emplace_back("unextendable", uu);
        w.note = "poideal {";
        for (size_t i = 0; i < carrier.size(); ++i) {
          w.note += (i ? "," : "") + std::to_string(carrier[i]);
        }
        w.note += "}";
        v.value   = false;
        v.witness = std::move(w);
        return v;
      }
    }
  }
  return v;
}

Verdict is_emb_injective_bounded(SPosetPtr const& a, int k,
                                 DecideOptions const& opts) {
  Verdict v;
  v.mode  = Mode::bounded;
  v.bound = k;
  v.value = true;

  EnumOptions eo;
  eo.budget     = opts.budget;
  auto universe = enumerate_sposets(a->over, k, eo);

  std::vector<SPosetPtr> sources = universe;
  sources.insert(sources.begin(), empty_sposet(a->over));

  for (auto const& big : universe) {
    for (auto const& small : sources) {
      if (small->size() > big->size()) {
        continue;
      }
      for (auto const& h : enumerate_maps(small, big, nullptr, opts.budget)) {
        if (!is_order_embedding(h)) {
          continue;
        }
        for (auto const& u : enumerate_maps(small, a, nullptr, opts.budget)) {
          // filler s : big -> A with s o h = u
          std::vector<std::vector<int>> allowed(big->size());
          std::vector<int>              pin(big->size(), -1);
          for (int x = 0; x < small->size(); ++x) {
            pin[h.table[x]] = u.table[x];
          }
          for (int y = 0; y < big->size(); ++y) {
            if (pin[y] >= 0) {
              allowed[y] = {pin[y]};
            } else {
              allowed[y].resize(a->size());
              std::iota(allowed[y].begin(), allowed[y].end(), 0);
            }
          }
          if (!find_map(big, a, &allowed, opts.budget)) {
            Witness w;
            SPosetMap hh = h;
            hh.name      = "embedding";
            SPosetMap uu = u;
            uu.name      = "map";
            w.maps.emplace_back("embedding", hh);
            w.maps.emplace_back("map", uu);
            v.value   = false;
            v.witness = std::move(w);
            return v;
          }
        }
      }
    }
  }
  return v;
}

}  // namespace posact
