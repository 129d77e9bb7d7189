#include "posact/constructions.hpp"

#include <numeric>
#include <algorithm>

#include "posact/errors.hpp"
#include "posact/green.hpp"

namespace posact {

SPosetPtr regular_representation(PomonoidPtr const& s) {
  auto out = make_sposet_unchecked(s->poset, s, s->mult,
                                   s->name.empty() ? "" : s->name + "_S");
  const_cast<SPoset*>(out.get())->elements = s->elements;
  const_cast<SPoset*>(out.get())->provenance =
      "regular_representation(" + s->name + ")";
  return out;
}

namespace {
  SPosetPtr restrict_to(SPosetPtr const& a, std::vector<int> carrier,
                        std::string provenance) {
    int const        m = static_cast<int>(carrier.size());
    int const        k = a->over->size();
    std::vector<int> pos(a->size(), -1);
    for (int i = 0; i < m; ++i) {
      pos[carrier[i]] = i;
    }
    std::vector<int> act(static_cast<size_t>(m) * k);
    for (int i = 0; i < m; ++i) {
      for (int s = 0; s < k; ++s) {
        int v = a->act_of(carrier[i], s);
        if (pos[v] < 0) {
          throw ValidationError("NotActClosed", {carrier[i], s});
        }
        act[i * k + s] = pos[v];
      }
    }
    auto out = make_sposet_unchecked(sub_poset(a->poset, carrier), a->over,
                                     std::move(act));
    const_cast<SPoset*>(out.get())->provenance = std::move(provenance);
    return out;
  }
}  // namespace

SPosetPtr cyclic_sub(SPosetPtr const& a, int x, std::vector<int>* carrier_out) {
  std::vector<uint8_t> in(a->size(), 0);
  for (int s = 0; s < a->over->size(); ++s) {
    in[a->act_of(x, s)] = 1;
  }
  std::vector<int> carrier;
  for (int i = 0; i < a->size(); ++i) {
    if (in[i]) {
      carrier.push_back(i);
    }
  }
  if (carrier_out != nullptr) {
    *carrier_out = carrier;
  }
  return restrict_to(a, carrier,
                     "cyclic_sub(" + a->name + "," + std::to_string(x) + ")");
}

SPosetPtr down_closed_sub(SPosetPtr const& a, std::vector<int> const& subset,
                          std::vector<int>* carrier_out) {
  std::vector<uint8_t> in(a->size(), 0);
  for (int j : subset) {
    for (int i = 0; i < a->size(); ++i) {
      if (a->le(i, j)) {
        in[i] = 1;
      }
    }
  }
  std::vector<int> carrier;
  for (int i = 0; i < a->size(); ++i) {
    if (in[i]) {
      carrier.push_back(i);
    }
  }
  if (carrier_out != nullptr) {
    *carrier_out = carrier;
  }
  return restrict_to(a, carrier, "down_closed_sub(" + a->name + ")");
}

SPosetPtr principal_poideal_sposet(PomonoidPtr const& s, int x,
                                   std::vector<int>* carrier_out) {
  auto ss = regular_representation(s);
  return down_closed_sub(ss, right_ideal(*s, x), carrier_out);
}

SPosetPtr free_sposet(PomonoidPtr const& s, Poset const& p) {
  int const            k = s->size();
  int const            n = p.size * k;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<int>     act(static_cast<size_t>(n) * k);
  for (int px = 0; px < p.size; ++px) {
    for (int sx = 0; sx < k; ++sx) {
      int i = px * k + sx;
      for (int py = 0; py < p.size; ++py) {
        for (int sy = 0; sy < k; ++sy) {
          leq[i * n + py * k + sy] =
              (p.le(px, py) && s->le(sx, sy)) ? 1 : 0;
        }
      }
      for (int t = 0; t < k; ++t) {
        act[i * k + t] = px * k + s->mul(sx, t);
      }
    }
  }
  Poset po;
  po.size  = n;
  po.leq   = std::move(leq);
  auto out = make_sposet_unchecked(std::move(po), s, std::move(act));
  const_cast<SPoset*>(out.get())->provenance = "free_sposet(" + s->name + ")";
  return out;
}

SPosetPtr product(SPosetPtr const& a, SPosetPtr const& b) {
  int const            k  = a->over->size();
  int const            nb = b->size();
  int const            n  = a->size() * nb;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<int>     act(static_cast<size_t>(n) * k);
  for (int x = 0; x < a->size(); ++x) {
    for (int y = 0; y < nb; ++y) {
      int i = x * nb + y;
      for (int x2 = 0; x2 < a->size(); ++x2) {
        for (int y2 = 0; y2 < nb; ++y2) {
          leq[i * n + x2 * nb + y2] =
              (a->le(x, x2) && b->le(y, y2)) ? 1 : 0;
        }
      }
      for (int s = 0; s < k; ++s) {
        act[i * k + s] = a->act_of(x, s) * nb + b->act_of(y, s);
      }
    }
  }
  Poset po;
  po.size  = n;
  po.leq   = std::move(leq);
  auto out = make_sposet_unchecked(std::move(po), a->over, std::move(act));
  const_cast<SPoset*>(out.get())->provenance =
      "product(" + a->name + "," + b->name + ")";
  return out;
}

SPosetMap product_projection(SPosetPtr const& prod, SPosetPtr const& a,
                             SPosetPtr const& b, int which) {
  int const        nb = b->size();
  std::vector<int> table(prod->size());
  for (int x = 0; x < a->size(); ++x) {
    for (int y = 0; y < nb; ++y) {
      table[x * nb + y] = which == 0 ? x : y;
    }
  }
  SPosetMap f;
  f.dom   = prod;
  f.cod   = which == 0 ? a : b;
  f.table = std::move(table);
  return f;
}

SPosetMap product_pairing(SPosetPtr const& prod, SPosetMap const& f,
                          SPosetMap const& g) {
  int const        nb = g.cod->size();
  std::vector<int> table(f.dom->size());
  for (int c = 0; c < f.dom->size(); ++c) {
    table[c] = f.table[c] * nb + g.table[c];
  }
  SPosetMap h;
  h.dom   = f.dom;
  h.cod   = prod;
  h.table = std::move(table);
  return h;
}

SPosetPtr coproduct(SPosetPtr const& a, SPosetPtr const& b) {
  int const            k  = a->over->size();
  int const            na = a->size();
  int const            n  = na + b->size();
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<int>     act(static_cast<size_t>(n) * k);
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < na; ++y) {
      leq[x * n + y] = a->le(x, y) ? 1 : 0;
    }
    for (int s = 0; s < k; ++s) {
      act[x * k + s] = a->act_of(x, s);
    }
  }
  for (int x = 0; x < b->size(); ++x) {
    for (int y = 0; y < b->size(); ++y) {
      leq[(na + x) * n + na + y] = b->le(x, y) ? 1 : 0;
    }
    for (int s = 0; s < k; ++s) {
      act[(na + x) * k + s] = na + b->act_of(x, s);
    }
  }
  Poset po;
  po.size  = n;
  po.leq   = std::move(leq);
  auto out = make_sposet_unchecked(std::move(po), a->over, std::move(act));
  const_cast<SPoset*>(out.get())->provenance =
      "coproduct(" + a->name + "," + b->name + ")";
  return out;
}

SPosetMap coproduct_injection(SPosetPtr const& cop, SPosetPtr const& a,
                              SPosetPtr const& b, int which) {
  SPosetMap f;
  f.dom = which == 0 ? a : b;
  f.cod = cop;
  f.table.resize(f.dom->size());
  int off = which == 0 ? 0 : a->size();
  std::iota(f.table.begin(), f.table.end(), off);
  return f;
}

SPosetPtr trivial_sposet(PomonoidPtr const& s, Poset const& p) {
  int const        k = s->size();
  std::vector<int> act(static_cast<size_t>(p.size) * k);
  for (int x = 0; x < p.size; ++x) {
    for (int t = 0; t < k; ++t) {
      act[x * k + t] = x;
    }
  }
  auto out = make_sposet_unchecked(p, s, std::move(act));
  const_cast<SPoset*>(out.get())->provenance = "trivial_sposet(" + s->name + ")";
  return out;
}

int EndStructure::index_of(std::vector<int> const& table) const {
  auto it = std::lower_bound(
      maps.begin(), maps.end(), table,
      [](SPosetMap const& f, std::vector<int> const& t) { return f.table < t; });
  if (it == maps.end() || it->table != table) {
    return -1;
  }
  return static_cast<int>(it - maps.begin());
}

EndStructure end_pomonoid(SPosetPtr const& a) {
  EndStructure out;
  out.maps    = enumerate_maps(a, a);  // lexicographic by table
  int const n = static_cast<int>(out.maps.size());

  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<int>     mult(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int x = 0; x < a->size(); ++x) {
        if (!a->le(out.maps[i].table[x], out.maps[j].table[x])) {
          le = false;
          break;
        }
      }
      leq[i * n + j] = le ? 1 : 0;
      // mult(f,g) = f o g, so that the left action f.a = f(a) is associative
      std::vector<int> comp(a->size());
      for (int x = 0; x < a->size(); ++x) {
        comp[x] = out.maps[i].table[out.maps[j].table[x]];
      }
      mult[i * n + j] = out.index_of(comp);
    }
  }
  Poset po;
  po.size = n;
  po.leq  = std::move(leq);
  int id  = out.index_of(identity_map(a).table);
  out.mon = make_pomonoid_unchecked(std::move(po), std::move(mult), id,
                                    "End(" + a->name + ")");
  const_cast<Pomonoid*>(out.mon.get())->provenance =
      "end_pomonoid(" + a->name + ")";
  return out;
}

int HomStructure::index_of(std::vector<int> const& table) const {
  auto it = std::lower_bound(
      maps.begin(), maps.end(), table,
      [](SPosetMap const& f, std::vector<int> const& t) { return f.table < t; });
  if (it == maps.end() || it->table != table) {
    return -1;
  }
  return static_cast<int>(it - maps.begin());
}

HomStructure hom_biposet(SPosetPtr const& b, SPosetPtr const& a) {
  HomStructure out;
  out.maps    = enumerate_maps(b, a);
  out.end_dom = end_pomonoid(b);
  out.end_cod = end_pomonoid(a);
  int const n = static_cast<int>(out.maps.size());

  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int x = 0; x < b->size(); ++x) {
        if (!a->le(out.maps[i].table[x], out.maps[j].table[x])) {
          le = false;
          break;
        }
      }
      leq[i * n + j] = le ? 1 : 0;
    }
  }
  out.order.size = n;
  out.order.leq  = std::move(leq);

  int const tb = out.end_dom.mon->size();
  int const ta = out.end_cod.mon->size();

  // right End(B) action: u.t = u o t
  std::vector<int> ract(static_cast<size_t>(n) * tb);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < tb; ++t) {
      std::vector<int> comp(b->size());
      for (int x = 0; x < b->size(); ++x) {
        comp[x] = out.maps[i].table[out.end_dom.maps[t].table[x]];
      }
      ract[i * tb + t] = out.index_of(comp);
    }
  }
  out.right_over_end_dom =
      make_sposet_unchecked(out.order, out.end_dom.mon, std::move(ract));
  const_cast<SPoset*>(out.right_over_end_dom.get())->provenance =
      "hom(" + b->name + "," + a->name + ") over End(" + b->name + ")";

  // left End(A) action t.u = t o u, stored as a right module over the
  // opposite pomonoid
  auto             end_cod_op = opposite(out.end_cod.mon);
  std::vector<int> lact_right(static_cast<size_t>(n) * ta);
  std::vector<int> lact(static_cast<size_t>(ta) * n);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < ta; ++t) {
      std::vector<int> comp(b->size());
      for (int x = 0; x < b->size(); ++x) {
        comp[x] = out.end_cod.maps[t].table[out.maps[i].table[x]];
      }
      int idx               = out.index_of(comp);
      lact_right[i * ta + t] = idx;
      lact[t * n + i]        = idx;
    }
  }
  out.right_over_end_cod_op =
      make_sposet_unchecked(out.order, end_cod_op, std::move(lact_right));
  const_cast<SPoset*>(out.right_over_end_cod_op.get())->provenance =
      "hom(" + b->name + "," + a->name + ") over End(" + a->name + ")^op";

  out.biposet.base      = out.right_over_end_dom;
  out.biposet.left_over = out.end_cod.mon;
  out.biposet.lact      = std::move(lact);
  return out;
}

std::vector<int> canonical_lambda(Biposet const& b, EndStructure const& end_a) {
  std::vector<int> out(b.left_over->size());
  for (int t = 0; t < b.left_over->size(); ++t) {
    std::vector<int> table(b.base->size());
    for (int x = 0; x < b.base->size(); ++x) {
      table[x] = b.lact_of(t, x);
    }
    out[t] = end_a.index_of(table);
  }
  return out;
}

RhoResult canonical_rho(Biposet const& b) {
  RhoResult out;
  auto      t_op  = opposite(b.left_over);
  auto      view  = left_view_as_right(b, t_op);
  out.end_left    = end_pomonoid(view);
  out.end_left_op = opposite(out.end_left.mon);
  out.table.resize(b.base->over->size());
  for (int s = 0; s < b.base->over->size(); ++s) {
    std::vector<int> table(b.base->size());
    for (int x = 0; x < b.base->size(); ++x) {
      table[x] = b.base->act_of(x, s);
    }
    out.table[s] = out.end_left.index_of(table);
  }
  return out;
}

bool check_pomonoid_hom(Pomonoid const& s, Pomonoid const& t,
                        std::vector<int> const& table) {
  for (int v : table) {
    if (v < 0 || v >= t.size()) {
      return false;
    }
  }
  if (table[s.identity] != t.identity) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (table[s.mul(a, b)] != t.mul(table[a], table[b])) {
        return false;
      }
      if (s.le(a, b) && !t.le(table[a], table[b])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace posact
