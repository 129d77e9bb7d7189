#include "posact/slice.hpp"

#include <numeric>

#include "posact/enumerate.hpp"

namespace posact {

bool is_slice_morphism(SPosetMap const& h, SPosetMap const& f,
                       SPosetMap const& g) {
  if (!same_sposet(*h.dom, *f.dom) || !same_sposet(*h.cod, *g.dom)
      || !same_sposet(*f.cod, *g.cod)) {
    return false;
  }
  return compose(h, g).table == f.table;
}

namespace {
  std::vector<std::vector<int>> preimages(SPosetMap const& f) {
    std::vector<std::vector<int>> out(f.cod->size());
    for (int x = 0; x < f.dom->size(); ++x) {
      out[f.table[x]].push_back(x);
    }
    return out;
  }
}  // namespace

std::optional<SPosetMap> find_section(SPosetMap const& f, Budget* budget) {
  auto allowed = preimages(f);
  for (auto const& c : allowed) {
    if (c.empty()) {
      return std::nullopt;  // not surjective
    }
  }
  return find_map(f.cod, f.dom, &allowed, budget);
}

std::vector<SPosetMap> find_all_sections(SPosetMap const& f, Budget* budget) {
  auto allowed = preimages(f);
  for (auto const& c : allowed) {
    if (c.empty()) {
      return {};
    }
  }
  return enumerate_maps(f.cod, f.dom, &allowed, budget);
}

bool is_split_epi(SPosetMap const& f, Budget* budget) {
  return find_section(f, budget).has_value();
}

std::vector<Fiber> fibers(SPosetMap const& f) {
  std::vector<Fiber> out;
  auto               pre = preimages(f);
  for (int b = 0; b < f.cod->size(); ++b) {
    Fiber fb;
    fb.over_elem = b;
    fb.carrier   = pre[b];
    fb.poset     = sub_poset(f.dom->poset, pre[b]);
    out.push_back(std::move(fb));
  }
  return out;
}

bool fibers_complete(SPosetMap const& f) {
  for (auto const& fb : fibers(f)) {
    if (!is_complete_lattice(fb.poset)) {
      return false;
    }
  }
  return true;
}

Verdict is_slice_emb_injective_bounded(SPosetMap const& f, int k,
                                       DecideOptions const& opts) {
  Verdict v;
  v.mode  = Mode::bounded;
  v.bound = k;

  if (!is_split_epi(f, opts.budget)) {
    v.value = false;
    v.witness.emplace();
    v.witness->note = "refuted: not a split epimorphism";
    return v;
  }
  if (!fibers_complete(f)) {
    v.value = false;
    v.witness.emplace();
    v.witness->note = "refuted: some fiber is not a complete lattice";
    return v;
  }

  EnumOptions eo;
  eo.budget     = opts.budget;
  auto universe = enumerate_sposets(f.dom->over, k, eo);
  auto sources  = universe;
  sources.insert(sources.begin(), empty_sposet(f.dom->over));

  for (auto const& big : universe) {
    for (auto const& small : sources) {
      if (small->size() > big->size()) {
        continue;
      }
      for (auto const& h : enumerate_maps(small, big, nullptr, opts.budget)) {
        if (!is_order_embedding(h)) {
          continue;
        }
        for (auto const& u : enumerate_maps(small, f.dom, nullptr,
                                            opts.budget)) {
          auto fu = compose(u, f);  // f o u as a table on small
          // all v : V -> B with v o h = f o u
          std::vector<std::vector<int>> vallowed(big->size());
          std::vector<int>              pin(big->size(), -1);
          for (int x = 0; x < small->size(); ++x) {
            pin[h.table[x]] = fu.table[x];
          }
          for (int y = 0; y < big->size(); ++y) {
            if (pin[y] >= 0) {
              vallowed[y] = {pin[y]};
            } else {
              vallowed[y].resize(f.cod->size());
              std::iota(vallowed[y].begin(), vallowed[y].end(), 0);
            }
          }
          for (auto const& vv : enumerate_maps(big, f.cod, &vallowed,
                                               opts.budget)) {
            // filler s : V -> dom f with s o h = u and f o s = vv
            std::vector<std::vector<int>> sallowed(big->size());
            auto                          pre = preimages(f);
            bool                          feasible = true;
            for (int y = 0; y < big->size() && feasible; ++y) {
              if (pin[y] >= 0) {
                // s(y) must be u(x) for the x with h(x) = y
                int ux = -1;
                for (int x = 0; x < small->size(); ++x) {
                  if (h.table[x] == y) {
                    ux = u.table[x];
                    break;
                  }
                }
                sallowed[y] = {ux};
              } else {
                sallowed[y] = pre[vv.table[y]];
                if (sallowed[y].empty()) {
                  feasible = false;
                }
              }
            }
            if (feasible
                && find_map(big, f.dom, &sallowed, opts.budget).has_value()) {
              continue;
            }
            Witness w;
            SPosetMap hh = h;
            SPosetMap uu = u;
            SPosetMap vvv = vv;
            w.maps.emplace_back("embedding", hh);
            w.maps.emplace_back("u", uu);
            w.maps.emplace_back("v", vvv);
            w.note    = "no filler";
            v.value   = false;
            v.witness = std::move(w);
            return v;
          }
        }
      }
    }
  }
  v.value = true;
  return v;
}

}  // namespace posact
