#include "posact/maps.hpp"

#include "posact/errors.hpp"

namespace posact {

void Budget::tick() {
  ++used;
  if (limit >= 0 && used > limit) {
    throw BudgetExceeded(limit);
  }
}

namespace {

  struct Searcher {
    SPoset const&                        a;
    SPoset const&                        b;
    std::vector<std::vector<int>> const* allowed;
    Budget*                              budget;
    bool                                 first_only;
    bool                                 need_epi;
    std::vector<int>                     table;
    std::vector<int>                     hits;  // cod multiplicity, for epi
    int                                  missing = 0;
    std::vector<SPosetMap>               out;
    SPosetPtr                            dom_ptr, cod_ptr;

    bool consistent(int k, int v) const {
      int const m = a.over->size();
      // monotonicity vs assigned prefix
      for (int j = 0; j < k; ++j) {
        if (a.le(j, k) && !b.le(table[j], v)) {
          return false;
        }
        if (a.le(k, j) && !b.le(v, table[j])) {
          return false;
        }
      }
      // equivariance among prefix + k
      for (int j = 0; j <= k; ++j) {
        int jv = (j == k) ? v : table[j];
        for (int s = 0; s < m; ++s) {
          int js = a.act_of(j, s);
          if (js > k) {
            continue;
          }
          int jsv = (js == k) ? v : table[js];
          if (b.act_of(jv, s) != jsv) {
            return false;
          }
        }
      }
      return true;
    }

    bool rec(int k) {
      if (budget != nullptr) {
        budget->tick();
      }
      int const n = a.size();
      if (need_epi && missing > n - k) {
        return false;  // cannot cover the codomain anymore
      }
      if (k == n) {
        if (need_epi && missing > 0) {
          return false;
        }
        SPosetMap f;
        f.dom   = dom_ptr;
        f.cod   = cod_ptr;
        f.table = table;
        out.push_back(std::move(f));
        return first_only;
      }
      auto try_value = [&](int v) -> bool {
        if (!consistent(k, v)) {
          return false;
        }
        table[k] = v;
        if (need_epi && hits[v]++ == 0) {
          --missing;
        }
        bool done = rec(k + 1);
        if (need_epi && --hits[v] == 0) {
          ++missing;
        }
        table[k] = -1;
        return done;
      };
      if (allowed != nullptr) {
        for (int v : (*allowed)[k]) {
          if (try_value(v)) {
            return true;
          }
        }
      } else {
        for (int v = 0; v < b.size(); ++v) {
          if (try_value(v)) {
            return true;
          }
        }
      }
      return false;
    }
  };

  std::vector<SPosetMap> run(SPosetPtr const& a, SPosetPtr const& b,
                             std::vector<std::vector<int>> const* allowed,
                             Budget* budget, bool first_only, bool need_epi) {
    if (!(*a->over == *b->over)) {
      throw ValidationError("OverMismatch", {});
    }
    Searcher s{*a, *b, allowed, budget, first_only, need_epi,
               std::vector<int>(a->size(), -1)};
    s.dom_ptr = a;
    s.cod_ptr = b;
    if (need_epi) {
      s.hits.assign(b->size(), 0);
      s.missing = b->size();
    }
    if (b->size() == 0 && a->size() > 0) {
      return {};
    }
    s.rec(0);
    return std::move(s.out);
  }

}  // namespace

std::vector<SPosetMap> enumerate_maps(
    SPosetPtr const& a, SPosetPtr const& b,
    std::vector<std::vector<int>> const* allowed, Budget* budget) {
  return run(a, b, allowed, budget, false, false);
}

std::optional<SPosetMap> find_map(SPosetPtr const& a, SPosetPtr const& b,
                                  std::vector<std::vector<int>> const* allowed,
                                  Budget* budget) {
  auto v = run(a, b, allowed, budget, true, false);
  if (v.empty()) {
    return std::nullopt;
  }
  return v.front();
}

std::optional<SPosetMap> find_epimorphism(SPosetPtr const& a,
                                          SPosetPtr const& b,
                                          Budget* budget) {
  if (a->size() < b->size()) {
    return std::nullopt;
  }
  auto v = run(a, b, nullptr, budget, true, true);
  if (v.empty()) {
    return std::nullopt;
  }
  return v.front();
}

}  // namespace posact
