#include "posact/pomonoid.hpp"

#include <numeric>
#include <algorithm>

#include "posact/errors.hpp"

namespace posact {

void validate_pomonoid(Pomonoid const& s) {
  int const n = s.size();
  make_poset(n, s.poset.leq);  // re-check poset axioms
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = s.mul(a, b);
      if (ab < 0 || ab >= n) {
        throw ValidationError("NotClosed", {a, b});
      }
      for (int c = 0; c < n; ++c) {
        if (s.mul(ab, c) != s.mul(a, s.mul(b, c))) {
          throw ValidationError("NotAssociative", {a, b, c});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (s.mul(s.identity, a) != a || s.mul(a, s.identity) != a) {
      throw ValidationError("NotUnit", {a});
    }
  }
  // compatibility: s<=t, s'<=t' => ss'<=tt'.  Checking one-sided
  // monotonicity in each argument is equivalent and O(n^3).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!s.le(a, b)) {
        continue;
      }
      for (int u = 0; u < n; ++u) {
        if (!s.le(s.mul(a, u), s.mul(b, u))) {
          throw ValidationError("NotCompatible", {a, b, u, u});
        }
        if (!s.le(s.mul(u, a), s.mul(u, b))) {
          throw ValidationError("NotCompatible", {u, u, a, b});
        }
      }
    }
  }
}

PomonoidPtr make_pomonoid_unchecked(Poset poset, std::vector<int> mult,
                                    int identity, std::string name) {
  auto out      = std::make_shared<Pomonoid>();
  out->poset    = std::move(poset);
  out->mult     = std::move(mult);
  out->identity = identity;
  out->name     = std::move(name);
  return out;
}

PomonoidPtr make_pomonoid(Poset poset, std::vector<int> mult, int identity,
                          std::string name) {
  auto out = make_pomonoid_unchecked(std::move(poset), std::move(mult),
                                     identity, std::move(name));
  validate_pomonoid(*out);
  return out;
}

PomonoidPtr opposite(PomonoidPtr const& s) {
  int const        n = s->size();
  std::vector<int> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mult[a * n + b] = s->mul(b, a);
    }
  }
  auto out        = make_pomonoid_unchecked(s->poset, std::move(mult),
                                            s->identity, s->name);
  auto* mut       = const_cast<Pomonoid*>(out.get());
  mut->elements   = s->elements;
  mut->provenance = "opposite(" + (s->name.empty() ? "?" : s->name) + ")";
  return out;
}

bool is_commutative(Pomonoid const& s) {
  for (int a = 0; a < s.size(); ++a) {
    for (int b = a + 1; b < s.size(); ++b) {
      if (s.mul(a, b) != s.mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> pomonoid_automorphisms(Pomonoid const& s) {
  std::vector<std::vector<int>> out;
  int const                     n = s.size();
  std::vector<int>              perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[s.identity] != s.identity) {
      continue;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (perm[s.mul(a, b)] != s.mul(perm[a], perm[b])) {
          ok = false;
        }
        if (b > a && s.le(a, b) != s.le(perm[a], perm[b])) {
          ok = false;
        }
        if (b > a && s.le(b, a) != s.le(perm[b], perm[a])) {
          ok = false;
        }
      }
    }
    if (ok) {
      out.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

PomonoidPtr trivial_pomonoid() {
  return make_pomonoid(discrete_poset(1), {0}, 0, "S1");
}

}  // namespace posact
