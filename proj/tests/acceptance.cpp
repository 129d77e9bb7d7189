// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posact/constructions.hpp"
#include "posact/decide.hpp"
#include "posact/errors.hpp"
#include "posact/enumerate.hpp"
#include "posact/fixtures.hpp"
#include "posact/green.hpp"
#include "posact/harness.hpp"
#include "posact/io.hpp"
#include "posact/maps.hpp"
#include "posact/slice.hpp"

using namespace posact;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, bool ok, std::string const& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " — "
            << detail << "\n";
  if (!ok) {
    ++failures;
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_all(std::string const& path) {
  std::ifstream     in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::string const& args, std::string const& out_file) {
  std::string cmd =
      std::string(POSACT_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. fixture reconstruction: split epi with a unique section, an incomplete
// fiber, and bounded slice-injectivity refuted, all in under a second
void criterion_1() {
  auto t0 = Clock::now();
  auto f  = fixtures::f_collapse();

  auto sections = find_all_sections(f);
  bool ok       = sections.size() == 1 &&
            sections[0].table == std::vector<int>{1, 3} && is_split_epi(f);

  auto fbs = fibers(f);
  ok = ok && fbs.size() == 2 && fbs[0].carrier == std::vector<int>{0, 1, 2} &&
       !is_complete_lattice(fbs[0].poset) && !fibers_complete(f);

  ok = ok && !is_slice_emb_injective_bounded(f, 4).value;

  double dt = seconds_since(t0);
  ok        = ok && dt < 1.0;
  report(1, ok,
         "split epi with unique section, incomplete fiber, bounded "
         "refutation (" +
             std::to_string(dt) + " s)");
}

// 2. exact-mode verification suite on two universes, zero violations
void criterion_2() {
  std::vector<std::string> ids;
  for (auto const& t : theorem_registry()) {
    if (t.mode.rfind("exact", 0) == 0) {
      ids.push_back(t.id);
    }
  }

  auto run_suite = [&](int max_order, int max_size) {
    long long violations = 0;
    for (auto const& id : ids) {
      UniverseParams p;
      p.max_order = max_order;
      p.max_size  = max_size;
      p.bound     = 3;
      violations += verify(id, p).violations;
    }
    return violations;
  };

  auto   t0 = Clock::now();
  auto   v1 = run_suite(3, 4);
  double d1 = seconds_since(t0);

  t0        = Clock::now();
  auto   v2 = run_suite(4, 3);
  double d2 = seconds_since(t0);

  bool ok = v1 == 0 && v2 == 0;
  report(2, ok,
         std::to_string(ids.size()) + " exact checks: order<=3/size<=4 " +
             std::to_string(v1) + " violations in " + std::to_string(d1) +
             " s (target 120); order<=4/size<=3 " + std::to_string(v2) +
             " violations in " + std::to_string(d2) + " s (target 900)");
}

// 3. eS free <=> e D 1, two independent procedures, every idempotent of
// every pomonoid of order <= 4
void criterion_3() {
  long long checked = 0;
  bool      ok      = true;
  for (auto const& s : enumerate_pomonoids_up_to(4)) {
    auto reg = regular_representation(s);
    for (int e : idempotents(*s)) {
      bool free_route  = is_free(cyclic_sub(reg, e)).value;
      bool green_route = green_related(*s, GreenRel::D, e, s->identity);
      if (free_route != green_route) {
        ok = false;
      }
      ++checked;
    }
  }
  report(3, ok && checked > 0,
         "is_free(eS) == (e D 1) on " + std::to_string(checked) +
             " idempotents");
}

// 4. principal d-injectivity of all principal poideals <=> regularity,
// pomonoids of order <= 4 with 1 = top
void criterion_4() {
  long long checked = 0;
  bool      ok      = true;
  for (auto const& s : enumerate_pomonoids_up_to(4)) {
    bool top = true;
    for (int x = 0; x < s->size(); ++x) {
      top = top && s->le(x, s->identity);
    }
    if (!top) {
      continue;
    }
    bool all_pdinj = true;
    for (int x = 0; x < s->size(); ++x) {
      if (!is_d_injective(principal_poideal_sposet(s, x),
                          DInjScope::principal)
               .value) {
        all_pdinj = false;
      }
    }
    if (all_pdinj != is_regular_pomonoid(*s)) {
      ok = false;
    }
    ++checked;
  }
  report(4, ok && checked > 0,
         "d-injectivity <=> regularity on " + std::to_string(checked) +
             " top-identity pomonoids");
}

// 5. |Pos_S(S_S, A)| = |A| and Pos_S(S_S, A) iso A as posets
void criterion_5() {
  long long checked = 0;
  bool      ok      = true;
  for (auto const& s : enumerate_pomonoids_up_to(3)) {
    auto ss = regular_representation(s);
    for (auto const& a : enumerate_sposets(s, 4)) {
      if (static_cast<int>(enumerate_maps(ss, a).size()) != a->size()) {
        ok = false;
      }
      auto hom = hom_biposet(ss, a);
      if (find_poset_isomorphism(hom.order, a->poset).empty()) {
        ok = false;
      }
      ++checked;
    }
  }
  report(5, ok && checked > 0,
         "hom collapse on " + std::to_string(checked) + " (S, A) pairs");
}

// 6. every positive is_generator verdict carries an epi and a section
// composing to the identity on S_S
void criterion_6() {
  long long positives = 0;
  bool      ok        = true;
  for (auto const& s : enumerate_pomonoids_up_to(3)) {
    for (auto const& a : enumerate_sposets(s, 3)) {
      auto v = is_generator(a);
      if (!v.value) {
        continue;
      }
      ++positives;
      if (!v.witness) {
        ok = false;
        continue;
      }
      auto const& epi     = v.witness->maps[0].second;
      auto const& section = v.witness->maps[1].second;
      try {
        validate_map(epi);
        validate_map(section);
      } catch (ValidationError const&) {
        ok = false;
        continue;
      }
      if (!is_epimorphism(epi) ||
          compose(section, epi).table != identity_map(epi.cod).table) {
        ok = false;
      }
    }
  }
  report(6, ok && positives > 0,
         "epi/section witnesses on " + std::to_string(positives) +
             " generators");
}

// 7. free universal property: sampled (P, A, f) triples admit exactly one
// extension along tau
void criterion_7() {
  std::mt19937       rng(20260825);
  std::vector<Poset> posets;
  for (int n = 1; n <= 3; ++n) {
    for (auto const& p : enumerate_posets(n)) {
      posets.push_back(p);
    }
  }

  long long checked = 0;
  bool      ok      = true;
  for (auto const& s : enumerate_pomonoids_up_to(3)) {
    auto universe = enumerate_sposets(s, 3);
    for (int trial = 0; trial < 20; ++trial) {
      auto const& p = posets[rng() % posets.size()];
      auto const& a = universe[rng() % universe.size()];
      auto        monos = monotone_maps(p, a->poset);
      auto const& f     = monos[rng() % monos.size()];

      auto fr = free_sposet(s, p);
      std::vector<std::vector<int>> allowed(fr->size());
      std::vector<int>              everything(a->size());
      for (int y = 0; y < a->size(); ++y) {
        everything[y] = y;
      }
      for (int i = 0; i < fr->size(); ++i) {
        allowed[i] = everything;
      }
      for (int x = 0; x < p.size; ++x) {
        allowed[x * s->size() + s->identity] = {f[x]};  // u o tau = f
      }
      if (enumerate_maps(fr, a, &allowed).size() != 1) {
        ok = false;
      }
      ++checked;
    }
  }
  report(7, ok && checked > 0,
         "exactly one extension on " + std::to_string(checked) +
             " sampled triples");
}

// 8. enumeration soundness against the raw brute-force monoid oracle
std::vector<std::vector<int>> brute_monoids(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int>              t(n * n, 0);
  std::vector<int>              perm(n);
  for (;;) {
    bool good = true;
    for (int x = 0; x < n && good; ++x) {
      if (t[0 * n + x] != x || t[x * n + 0] != x) {
        good = false;  // 0 must be the identity
      }
    }
    for (int x = 0; x < n && good; ++x) {
      for (int y = 0; y < n && good; ++y) {
        for (int z = 0; z < n && good; ++z) {
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
            good = false;
          }
        }
      }
    }
    if (good) {
      // keep only the lexicographically least table among relabelings
      // fixing the identity
      for (int i = 0; i < n; ++i) {
        perm[i] = i;
      }
      bool least = true;
      while (least && std::next_permutation(perm.begin() + 1, perm.end())) {
        std::vector<int> r(n * n);
        for (int x = 0; x < n; ++x) {
          for (int y = 0; y < n; ++y) {
            r[perm[x] * n + perm[y]] = perm[t[x * n + y]];
          }
        }
        if (r < t) {
          least = false;
        }
      }
      if (least) {
        out.push_back(t);
      }
    }
    int k = n * n - 1;
    while (k >= 0 && t[k] == n - 1) {
      t[k--] = 0;
    }
    if (k < 0) {
      return out;
    }
    ++t[k];
  }
}

void criterion_8() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    auto fast   = enumerate_monoids(n);
    auto oracle = brute_monoids(n);
    if (fast.size() != oracle.size()) {
      ok = false;
      continue;
    }
    for (size_t i = 0; i < fast.size(); ++i) {
      if (fast[i] != oracle[i]) {
        ok = false;
      }
    }
  }
  ok = ok && enumerate_pomonoids(2).size() == 4;
  report(8, ok, "monoid oracle item-for-item (n<=3), pomonoids(2) = 4");
}

// 9. byte-identical reports under --jobs 1 and --jobs 8
void criterion_9() {
  auto run_all = [](int jobs) {
    std::string    out;
    UniverseParams p;
    p.max_order = 3;
    p.max_size  = 3;
    p.bound     = 3;
    p.jobs      = jobs;
    for (auto const& t : theorem_registry()) {
      out += verify(t.id, p).format();
      out += "\n";
    }
    return out;
  };
  bool ok = run_all(1) == run_all(8);
  report(9, ok, "full suite reports byte-identical across job counts");
}

// 10. CLI round-trip and exit-code contract on the shipped fixtures
void criterion_10() {
  std::string const fixtures = POSACT_FIXTURE_DIR;
  std::string const tmp      = "acceptance_cli_out.txt";
  bool              ok       = true;

  for (auto const& name :
       {"S1", "S2", "S2c", "Z2", "RZ3", "N3", "X", "B", "f", "g"}) {
    if (run_cli("validate " + fixtures + "/" + name + ".pos", tmp) != 0) {
      ok = false;
    }
  }

  {
    std::ofstream bad("acceptance_bad.pos");
    bad << "kind: pomonoid\nname: broken\nsize: 3\nidentity: 0\nmult:\n"
           "0 1 2\n1 2 1\n2 1 1\norder:\n";
  }
  ok = ok && run_cli("validate acceptance_bad.pos", tmp) == 2;

  ok = ok && run_cli("green " + fixtures + "/S2c.pos", tmp) == 0 &&
       read_all(tmp).find(
           "J-classes: {1} {e}; regular: yes; left-simple: no") !=
           std::string::npos;

  ok = ok && run_cli("enumerate pomonoids --size 2", tmp) == 0 &&
       read_all(tmp).find("count: 4") != std::string::npos;

  ok = ok &&
       run_cli("verify R3.11 --max-order 2 --max-size 2 --report "
               "acceptance_report.txt",
               tmp) == 0 &&
       read_all("acceptance_report.txt").rfind("theorem=R3.11 mode=exact",
                                               0) == 0;

  // round-trip: every enumerated S-poset file validates back
  ok = ok && run_cli("enumerate sposets --size 2 --over " + fixtures +
                         "/S2.pos --out acceptance_enum",
                     tmp) == 0;
  if (ok) {
    namespace fs = std::filesystem;
    int emitted  = 0;
    for (auto const& entry : fs::directory_iterator("acceptance_enum")) {
      if (entry.path().extension() == ".pos") {
        ++emitted;
        if (run_cli("validate " + entry.path().string(), tmp) != 0) {
          ok = false;
        }
      }
    }
    ok = ok && emitted > 0;
  }

  report(10, ok, "validate/green/enumerate/verify exit codes and round-trip");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
