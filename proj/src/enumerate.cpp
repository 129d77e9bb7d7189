#include "posact/enumerate.hpp"

#include <numeric>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "posact/errors.hpp"
#include "posact/io.hpp"

namespace posact {

namespace fs = std::filesystem;

namespace {
  constexpr char const* kGeneratorVersion = "posact-enum-v1";

  uint64_t fnv1a(std::string const& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string hex(uint64_t h) {
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  // permutations of 0..n-1 fixing `fixed` (pass -1 to allow all)
  std::vector<std::vector<int>> perms_fixing(int n, int fixed) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
      if (fixed < 0 || p[fixed] == fixed) {
        out.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  std::vector<int> relabel_table(std::vector<int> const& mult, int n,
                                 std::vector<int> const& p) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
      inv[p[i]] = i;
    }
    std::vector<int> out(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        out[a * n + b] = p[mult[inv[a] * n + inv[b]]];
      }
    }
    return out;
  }

  std::vector<uint8_t> relabel_matrix(std::vector<uint8_t> const& leq, int n,
                                      std::vector<int> const& p) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) {
      inv[p[i]] = i;
    }
    std::vector<uint8_t> out(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        out[a * n + b] = leq[inv[a] * n + inv[b]];
      }
    }
    return out;
  }
}  // namespace

std::vector<int> canonical_monoid_table(std::vector<int> const& mult, int n) {
  auto             perms = perms_fixing(n, 0);
  std::vector<int> best  = mult;
  for (auto const& p : perms) {
    auto t = relabel_table(mult, n, p);
    if (t < best) {
      best = t;
    }
  }
  return best;
}

std::vector<uint8_t> canonical_poset_matrix(Poset const& p) {
  auto                 perms = perms_fixing(p.size, -1);
  std::vector<uint8_t> best  = p.leq;
  for (auto const& pe : perms) {
    auto m = relabel_matrix(p.leq, p.size, pe);
    if (m < best) {
      best = m;
    }
  }
  return best;
}

namespace {
  void monoid_rec(int n, std::vector<int>& mult, int cell,
                  std::vector<std::vector<int>>& out, Budget* budget) {
    if (budget != nullptr) {
      budget->tick();
    }
    // cells are (i,j) with i,j >= 1, row-major
    int const free_cells = (n - 1) * (n - 1);
    if (cell == free_cells) {
      if (mult == canonical_monoid_table(mult, n)) {
        out.push_back(mult);
      }
      return;
    }
    int const i = 1 + cell / (n - 1);
    int const j = 1 + cell % (n - 1);
    for (int v = 0; v < n; ++v) {
      mult[i * n + j] = v;
      // check associativity on triples whose products are all defined;
      // a cell (a,b) is defined iff a==0 or b==0 or it precedes (i,j)
      auto defined = [&](int a, int b) {
        return a == 0 || b == 0 || (a - 1) * (n - 1) + (b - 1) <= cell;
      };
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          if (!defined(a, b)) {
            continue;
          }
          int ab = mult[a * n + b];
          for (int c = 0; c < n && ok; ++c) {
            if (!defined(b, c) || !defined(ab, c)) {
              continue;
            }
            int bc = mult[b * n + c];
            if (!defined(a, bc)) {
              continue;
            }
            if (mult[ab * n + c] != mult[a * n + bc]) {
              ok = false;
            }
          }
        }
      }
      if (ok) {
        monoid_rec(n, mult, cell + 1, out, budget);
      }
    }
    mult[i * n + j] = -1;
  }

  // all labeled partial orders on n elements (full matrices)
  std::vector<Poset> labeled_posets(int n) {
    if (n > 5) {
      throw BudgetExceeded(1 << 20);
    }
    std::vector<std::pair<int, int>> strict;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          strict.emplace_back(i, j);
        }
      }
    }
    std::vector<Poset> out;
    uint64_t const     total = 1ull << strict.size();
    for (uint64_t bits = 0; bits < total; ++bits) {
      std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) {
        leq[i * n + i] = 1;
      }
      for (size_t k = 0; k < strict.size(); ++k) {
        if (bits & (1ull << k)) {
          leq[strict[k].first * n + strict[k].second] = 1;
        }
      }
      // antisymmetry
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = i + 1; j < n && ok; ++j) {
          if (leq[i * n + j] && leq[j * n + i]) {
            ok = false;
          }
        }
      }
      // transitivity
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n && ok; ++j) {
          if (!leq[i * n + j]) {
            continue;
          }
          for (int k = 0; k < n && ok; ++k) {
            if (leq[j * n + k] && !leq[i * n + k]) {
              ok = false;
            }
          }
        }
      }
      if (!ok) {
        continue;
      }
      Poset p;
      p.size = n;
      p.leq  = std::move(leq);
      out.push_back(std::move(p));
    }
    return out;
  }
}  // namespace

std::vector<std::vector<int>> enumerate_monoids(int n,
                                                EnumOptions const& opts) {
  std::vector<std::vector<int>> out;
  std::vector<int>              mult(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    mult[0 * n + a] = a;
    mult[a * n + 0] = a;
  }
  monoid_rec(n, mult, 0, out, opts.budget);
  return out;
}

std::vector<Poset> enumerate_posets(int n, EnumOptions const&) {
  std::set<std::vector<uint8_t>> seen;
  std::vector<Poset>             out;
  for (auto& p : labeled_posets(n)) {
    auto canon = canonical_poset_matrix(p);
    if (p.leq != canon) {
      continue;
    }
    if (seen.insert(canon).second) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Poset> enumerate_compatible_orders(std::vector<int> const& mult,
                                               int identity, int n) {
  // monoid automorphisms (order ignored)
  std::vector<std::vector<int>> autos;
  for (auto const& p : perms_fixing(n, identity)) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (p[mult[a * n + b]] != mult[p[a] * n + p[b]]) {
          ok = false;
        }
      }
    }
    if (ok) {
      autos.push_back(p);
    }
  }

  std::vector<Poset> out;
  for (auto& p : labeled_posets(n)) {
    bool compatible = true;
    for (int a = 0; a < n && compatible; ++a) {
      for (int b = 0; b < n && compatible; ++b) {
        if (!p.le(a, b)) {
          continue;
        }
        for (int u = 0; u < n && compatible; ++u) {
          if (!p.le(mult[a * n + u], mult[b * n + u])
              || !p.le(mult[u * n + a], mult[u * n + b])) {
            compatible = false;
          }
        }
      }
    }
    if (!compatible) {
      continue;
    }
    // keep only the lex-least matrix of each automorphism orbit
    bool least = true;
    for (auto const& g : autos) {
      if (relabel_matrix(p.leq, n, g) < p.leq) {
        least = false;
        break;
      }
    }
    if (least) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {
  std::vector<PomonoidPtr> build_pomonoids(int n) {
    std::vector<PomonoidPtr> out;
    int                      idx = 0;
    for (auto const& mult : enumerate_monoids(n)) {
      for (auto const& order : enumerate_compatible_orders(mult, 0, n)) {
        std::string name = "P" + std::to_string(n) + "_" + std::to_string(idx);
        out.push_back(make_pomonoid(order, mult, 0, name));
        ++idx;
      }
    }
    return out;
  }

  std::vector<PomonoidPtr> load_or_build_pomonoids(int n,
                                                   EnumOptions const& opts) {
    if (!opts.cache_dir) {
      return build_pomonoids(n);
    }
    fs::path dir = fs::path(*opts.cache_dir) / "pomonoid" / std::to_string(n);
    fs::path manifest = dir / "MANIFEST";
    fs::path version  = dir / "VERSION";
    auto     read_all = [](fs::path const& p) {
      std::ifstream in(p);
      return std::string(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
    };
    if (fs::exists(manifest) && fs::exists(version)
        && read_all(version) == kGeneratorVersion) {
      std::vector<PomonoidPtr> out;
      std::ifstream            mf(manifest);
      std::string              fname;
      bool                     ok = true;
      while (std::getline(mf, fname)) {
        if (fname.empty()) {
          continue;
        }
        fs::path f = dir / fname;
        if (!fs::exists(f)) {
          ok = false;
          break;
        }
        out.push_back(io::parse_pomonoid_file(f.string()));
      }
      if (ok) {
        return out;
      }
    }
    auto out = build_pomonoids(n);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) {
      std::ofstream mf(manifest);
      for (auto const& s : out) {
        std::string text  = io::serialize_pomonoid(*s);
        std::string fname = hex(fnv1a(text)) + ".pos";
        std::ofstream(dir / fname) << text;
        mf << fname << "\n";
      }
      std::ofstream(version) << kGeneratorVersion;
    }
    return out;
  }
}  // namespace

std::vector<PomonoidPtr> enumerate_pomonoids(int n, EnumOptions const& opts) {
  return load_or_build_pomonoids(n, opts);
}

std::vector<PomonoidPtr> enumerate_pomonoids_up_to(int n,
                                                   EnumOptions const& opts) {
  std::vector<PomonoidPtr> out;
  for (int i = 1; i <= n; ++i) {
    auto v = enumerate_pomonoids(i, opts);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace {
  // enumerate right actions of S on poset P: antihomomorphisms from S into
  // the monoid of monotone self-maps of P
  void actions_rec(Pomonoid const& s, Poset const& p,
                   std::vector<std::vector<int>> const& selfmaps,
                   std::vector<int>& assign,  // element -> selfmap index, -1
                   int next, std::vector<std::vector<int>>& out,
                   Budget* budget) {
    if (budget != nullptr) {
      budget->tick();
    }
    int const n = s.size();
    while (next < n && assign[next] >= 0) {
      ++next;
    }
    if (next == n) {
      // emit act table a x s
      std::vector<int> act(static_cast<size_t>(p.size) * n);
      for (int a = 0; a < p.size; ++a) {
        for (int t = 0; t < n; ++t) {
          act[a * n + t] = selfmaps[assign[t]][a];
        }
      }
      out.push_back(std::move(act));
      return;
    }
    auto consistent = [&](std::vector<int> const& asg) {
      for (int u = 0; u < n; ++u) {
        if (asg[u] < 0) {
          continue;
        }
        for (int v = 0; v < n; ++v) {
          if (asg[v] < 0) {
            continue;
          }
          int uv = s.mul(u, v);
          if (asg[uv] < 0) {
            continue;
          }
          // phi(uv) = phi(v) o phi(u)
          auto const& fu  = selfmaps[asg[u]];
          auto const& fv  = selfmaps[asg[v]];
          auto const& fuv = selfmaps[asg[uv]];
          for (int a = 0; a < p.size; ++a) {
            if (fuv[a] != fv[fu[a]]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    // forced value?
    int forced = -1;
    for (int u = 0; u < n && forced < 0; ++u) {
      if (assign[u] < 0) {
        continue;
      }
      for (int v = 0; v < n && forced < 0; ++v) {
        if (assign[v] < 0 || s.mul(u, v) != next) {
          continue;
        }
        std::vector<int> comp(p.size);
        auto const&      fu = selfmaps[assign[u]];
        auto const&      fv = selfmaps[assign[v]];
        for (int a = 0; a < p.size; ++a) {
          comp[a] = fv[fu[a]];
        }
        auto it = std::find(selfmaps.begin(), selfmaps.end(), comp);
        if (it == selfmaps.end()) {
          return;  // product is not monotone; dead branch
        }
        forced = static_cast<int>(it - selfmaps.begin());
      }
    }
    if (forced >= 0) {
      assign[next] = forced;
      if (consistent(assign)) {
        actions_rec(s, p, selfmaps, assign, next + 1, out, budget);
      }
      assign[next] = -1;
      return;
    }
    for (size_t m = 0; m < selfmaps.size(); ++m) {
      assign[next] = static_cast<int>(m);
      if (consistent(assign)) {
        actions_rec(s, p, selfmaps, assign, next + 1, out, budget);
      }
      assign[next] = -1;
    }
  }
}  // namespace

std::vector<SPosetPtr> enumerate_sposets(PomonoidPtr const& s, int k,
                                         EnumOptions const& opts) {
  std::vector<SPosetPtr> out;
  int                    idx = 0;
  for (int m = 1; m <= k; ++m) {
    for (auto const& p : enumerate_posets(m, opts)) {
      // candidate scalar images: monotone self-maps that are also monotone
      // in the scalar -- the scalar monotonicity is a global condition
      // checked after assembly
      auto selfmaps = monotone_maps(p, p);
      auto autos    = poset_automorphisms(p);

      std::vector<int> assign(s->size(), -1);
      // identity acts as the identity map
      std::vector<int> id_table(p.size);
      std::iota(id_table.begin(), id_table.end(), 0);
      auto id_it = std::find(selfmaps.begin(), selfmaps.end(), id_table);
      assign[s->identity] = static_cast<int>(id_it - selfmaps.begin());

      std::vector<std::vector<int>> acts;
      actions_rec(*s, p, selfmaps, assign, 0, acts, opts.budget);

      for (auto const& act : acts) {
        // scalar monotonicity: s <= t implies a.s <= a.t
        bool mono = true;
        for (int u = 0; u < s->size() && mono; ++u) {
          for (int v = 0; v < s->size() && mono; ++v) {
            if (!s->le(u, v)) {
              continue;
            }
            for (int a = 0; a < p.size && mono; ++a) {
              if (!p.le(act[a * s->size() + u], act[a * s->size() + v])) {
                mono = false;
              }
            }
          }
        }
        if (!mono) {
          continue;
        }
        // keep only the lex-least act table of each Aut(P)-orbit
        bool least = true;
        for (auto const& g : autos) {
          std::vector<int> inv(p.size);
          for (int i = 0; i < p.size; ++i) {
            inv[g[i]] = i;
          }
          std::vector<int> relabeled(act.size());
          for (int a = 0; a < p.size; ++a) {
            for (int t = 0; t < s->size(); ++t) {
              relabeled[a * s->size() + t] = g[act[inv[a] * s->size() + t]];
            }
          }
          if (relabeled < act) {
            least = false;
            break;
          }
        }
        if (!least) {
          continue;
        }
        std::string name = "A" + std::to_string(idx);
        out.push_back(make_sposet(p, s, act, name));
        ++idx;
      }
    }
  }
  return out;
}

}  // namespace posact
