#include "posact/poset.hpp"

#include <algorithm>
#include <numeric>

#include "posact/errors.hpp"

namespace posact {

Poset make_poset(int size, std::vector<uint8_t> leq) {
  for (int i = 0; i < size; ++i) {
    if (!leq[i * size + i]) {
      throw ValidationError("NotReflexive", {i});
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j && leq[i * size + j] && leq[j * size + i]) {
        throw ValidationError("NotAntisymmetric", {i, j});
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (!leq[i * size + j]) {
        continue;
      }
      for (int k = 0; k < size; ++k) {
        if (leq[j * size + k] && !leq[i * size + k]) {
          throw ValidationError("NotTransitive", {i, j, k});
        }
      }
    }
  }
  Poset p;
  p.size = size;
  p.leq  = std::move(leq);
  return p;
}

Poset order_closure(std::vector<std::pair<int, int>> const& pairs, int size) {
  std::vector<uint8_t> leq(static_cast<size_t>(size) * size, 0);
  for (int i = 0; i < size; ++i) {
    leq[i * size + i] = 1;
  }
  for (auto const& [i, j] : pairs) {
    leq[i * size + j] = 1;
  }
  // Floyd-Warshall style reachability
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if (!leq[i * size + k]) {
        continue;
      }
      for (int j = 0; j < size; ++j) {
        if (leq[k * size + j]) {
          leq[i * size + j] = 1;
        }
      }
    }
  }
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (leq[i * size + j] && leq[j * size + i]) {
        throw ValidationError("ClosureNotAntisymmetric", {i, j});
      }
    }
  }
  Poset p;
  p.size = size;
  p.leq  = std::move(leq);
  return p;
}

Poset discrete_poset(int size) {
  return order_closure({}, size);
}

Poset chain_poset(int size) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < size; ++i) {
    pairs.emplace_back(i, i + 1);
  }
  return order_closure(pairs, size);
}

std::vector<std::pair<int, int>> transitive_reduction(Poset const& p) {
  std::vector<std::pair<int, int>> out;
  int const n = p.size;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.le(i, j)) {
        continue;
      }
      bool cover = true;
      for (int k = 0; k < n; ++k) {
        if (k != i && k != j && p.le(i, k) && p.le(k, j)) {
          cover = false;
          break;
        }
      }
      if (cover) {
        out.emplace_back(i, j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> linear_extension(Poset const& p) {
  int const        n = p.size;
  std::vector<int> out;
  std::vector<uint8_t> placed(n, 0);
  while (static_cast<int>(out.size()) < n) {
    for (int i = 0; i < n; ++i) {
      if (placed[i]) {
        continue;
      }
      bool minimal = true;
      for (int j = 0; j < n; ++j) {
        if (!placed[j] && j != i && p.le(j, i)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        placed[i] = 1;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<uint32_t> down_sets(Poset const& p) {
  // Walk a linear extension; an element may enter only if everything below
  // it is already in.
  int const        n   = p.size;
  std::vector<int> ext = linear_extension(p);
  std::vector<uint32_t> below(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && p.le(j, i)) {
        below[i] |= (1u << j);
      }
    }
  }
  std::vector<uint32_t> out;
  struct Frame {
    int      k;
    uint32_t mask;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, mask] = stack.back();
    stack.pop_back();
    if (k == n) {
      out.push_back(mask);
      continue;
    }
    int e = ext[k];
    stack.push_back({k + 1, mask});  // exclude e
    if ((mask & below[e]) == below[e]) {
      stack.push_back({k + 1, mask | (1u << e)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint32_t down_closure(Poset const& p, uint32_t mask) {
  uint32_t out = 0;
  for (int j = 0; j < p.size; ++j) {
    if (!(mask & (1u << j))) {
      continue;
    }
    for (int i = 0; i < p.size; ++i) {
      if (p.le(i, j)) {
        out |= (1u << i);
      }
    }
  }
  return out;
}

namespace {
  // index of the least upper bound of {i, j}, or -1
  int join_of(Poset const& p, int i, int j) {
    int const n = p.size;
    for (int u = 0; u < n; ++u) {
      if (!p.le(i, u) || !p.le(j, u)) {
        continue;
      }
      bool least = true;
      for (int v = 0; v < n; ++v) {
        if (p.le(i, v) && p.le(j, v) && !p.le(u, v)) {
          least = false;
          break;
        }
      }
      if (least) {
        return u;
      }
    }
    return -1;
  }

  int meet_of(Poset const& p, int i, int j) {
    int const n = p.size;
    for (int u = 0; u < n; ++u) {
      if (!p.le(u, i) || !p.le(u, j)) {
        continue;
      }
      bool greatest = true;
      for (int v = 0; v < n; ++v) {
        if (p.le(v, i) && p.le(v, j) && !p.le(v, u)) {
          greatest = false;
          break;
        }
      }
      if (greatest) {
        return u;
      }
    }
    return -1;
  }
}  // namespace

bool is_complete_lattice(Poset const& p) {
  if (p.size == 0) {
    return false;
  }
  for (int i = 0; i < p.size; ++i) {
    for (int j = i; j < p.size; ++j) {
      if (join_of(p, i, j) < 0 || meet_of(p, i, j) < 0) {
        return false;
      }
    }
  }
  // pairwise joins/meets in a finite poset give top = join of everything etc.,
  // but top/bottom existence is already implied by the pairwise folds; check
  // explicitly anyway for clarity.
  bool has_top = false, has_bot = false;
  for (int t = 0; t < p.size; ++t) {
    bool top = true, bot = true;
    for (int i = 0; i < p.size; ++i) {
      top = top && p.le(i, t);
      bot = bot && p.le(t, i);
    }
    has_top = has_top || top;
    has_bot = has_bot || bot;
  }
  return has_top && has_bot;
}

Poset sub_poset(Poset const& p, std::vector<int> const& elems) {
  int const            m = static_cast<int>(elems.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      leq[i * m + j] = p.le(elems[i], elems[j]) ? 1 : 0;
    }
  }
  Poset out;
  out.size = m;
  out.leq  = std::move(leq);
  return out;
}

namespace {
  void monotone_rec(Poset const& p, Poset const& q, std::vector<int>& table,
                    int k, std::vector<std::vector<int>>& out) {
    if (k == p.size) {
      out.push_back(table);
      return;
    }
    for (int v = 0; v < q.size; ++v) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if (p.le(j, k) && !q.le(table[j], v)) {
          ok = false;
        }
        if (p.le(k, j) && !q.le(v, table[j])) {
          ok = false;
        }
      }
      if (ok) {
        table[k] = v;
        monotone_rec(p, q, table, k + 1, out);
      }
    }
  }
}  // namespace

std::vector<std::vector<int>> monotone_maps(Poset const& p, Poset const& q) {
  std::vector<std::vector<int>> out;
  std::vector<int>              table(p.size, -1);
  monotone_rec(p, q, table, 0, out);
  return out;
}

namespace {
  bool iso_rec(Poset const& p, Poset const& q, std::vector<int>& img,
               std::vector<uint8_t>& used, int k, bool all,
               std::vector<std::vector<int>>* collect) {
    if (k == p.size) {
      if (collect != nullptr) {
        collect->push_back(img);
        return false;  // keep searching
      }
      return true;
    }
    for (int v = 0; v < q.size; ++v) {
      if (used[v]) {
        continue;
      }
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        if (p.le(j, k) != q.le(img[j], v) || p.le(k, j) != q.le(v, img[j])) {
          ok = false;
        }
      }
      if (!ok) {
        continue;
      }
      img[k]  = v;
      used[v] = 1;
      if (iso_rec(p, q, img, used, k + 1, all, collect)) {
        return true;
      }
      used[v] = 0;
    }
    return false;
  }
}  // namespace

std::vector<int> find_poset_isomorphism(Poset const& p, Poset const& q) {
  if (p.size != q.size) {
    return {};
  }
  std::vector<int>     img(p.size, -1);
  std::vector<uint8_t> used(q.size, 0);
  if (iso_rec(p, q, img, used, 0, false, nullptr)) {
    return img;
  }
  return {};
}

std::vector<std::vector<int>> poset_automorphisms(Poset const& p) {
  std::vector<std::vector<int>> out;
  std::vector<int>              img(p.size, -1);
  std::vector<uint8_t>          used(p.size, 0);
  iso_rec(p, p, img, used, 0, true, &out);
  return out;
}

}  // namespace posact
