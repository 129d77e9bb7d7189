#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posact/decide.hpp"
#include "posact/enumerate.hpp"
#include "posact/errors.hpp"
#include "posact/green.hpp"
#include "posact/harness.hpp"
#include "posact/io.hpp"
#include "posact/slice.hpp"

namespace fs = std::filesystem;
using namespace posact;

namespace {

struct GlobalOpts {
  std::string cache_dir = "cache";
  bool        no_cache  = false;
  int         jobs      = 1;
  long long   budget    = -1;

  std::optional<std::string> cache() const {
    if (no_cache) {
      return std::nullopt;
    }
    return cache_dir;
  }
};

// Loads sibling *.pos files first so `over:`/`dom:` references resolve, then
// (re)parses the named file to learn which object it denotes.
std::pair<std::string, std::string> load_with_context(io::Workspace& ws,
                                                      std::string const& file) {
  auto dir = fs::path(file).parent_path();
  if (!dir.empty() && fs::is_directory(dir)) {
    ws.load_dir(dir.string());
  }
  return ws.add(io::read_file(file), file);
}

std::string class_list(Pomonoid const& s,
                       std::vector<std::vector<int>> const& classes) {
  std::string out;
  for (auto const& cls : classes) {
    if (!out.empty()) {
      out += " ";
    }
    out += "{";
    for (size_t i = 0; i < cls.size(); ++i) {
      if (i != 0) {
        out += " ";
      }
      out += s.label(cls[i]);
    }
    out += "}";
  }
  return out;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

int cmd_validate(std::string const& file) {
  io::Workspace ws;
  try {
    auto [kind, name] = load_with_context(ws, file);
    std::cout << "ok: " << kind << " " << name << "\n";
    return 0;
  } catch (ValidationError const& e) {
    std::cout << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    std::cout << e.what() << "\n";
    return 2;
  }
}

int cmd_green(std::string const& file) {
  auto        s = io::parse_pomonoid_file(file);
  auto const& m = *s;
  std::cout << "R-classes: " << class_list(m, green_classes(m, GreenRel::R))
            << "\n";
  std::cout << "J-classes: " << class_list(m, green_classes(m, GreenRel::J))
            << "; regular: " << yn(is_regular_pomonoid(m))
            << "; left-simple: " << yn(is_left_simple(m)) << "\n";
  std::cout << "D-classes: " << class_list(m, green_classes(m, GreenRel::D))
            << "\n";
  std::string idem;
  for (int e : idempotents(m)) {
    if (!idem.empty()) {
      idem += " ";
    }
    idem += m.label(e);
  }
  std::cout << "idempotents: " << idem << "\n";
  std::cout << "right-simple: " << yn(is_right_simple(m)) << "\n";
  return 0;
}

int cmd_props(std::string const& file, std::string const& over_file,
              int bound, GlobalOpts const& g) {
  io::Workspace ws;
  if (!over_file.empty()) {
    ws.add(io::read_file(over_file), over_file);
  }
  auto [kind, name] = load_with_context(ws, file);
  if (kind == "pomonoid") {
    // props of S means props of the right regular representation
    ws.sposets[name] = regular_representation(ws.pomonoids.at(name));
    kind             = "sposet";
  }
  if (kind != "sposet") {
    std::cout << "props: expected an sposet or pomonoid, got " << kind << "\n";
    return 2;
  }
  auto          a = ws.sposets.at(name);
  Budget        budget{g.budget, 0};
  DecideOptions opts{g.budget < 0 ? nullptr : &budget};
  auto          show = [](std::string const& label, Verdict const& v) {
    std::cout << label << ": " << yn(v.value) << " (" << v.mode_string()
              << ")\n";
  };
  show("generator", is_generator(a, opts));
  show("cyclic-projective", is_cyclic_projective(a, opts));
  std::cout << "cyclic: " << yn(is_cyclic(a)) << " (exact)\n";
  show("projective", is_projective(a, opts));
  show("projective-generator", is_projective_generator(a, opts));
  show("free", is_free(a, opts));
  show("d-injective(principal)", is_d_injective(a, DInjScope::principal, opts));
  show("d-injective(all)", is_d_injective(a, DInjScope::all, opts));
  show("emb-injective", is_emb_injective_bounded(a, bound, opts));
  return 0;
}

int cmd_enumerate(std::string const& kind, int size,
                  std::string const& out_dir, std::string const& over_file,
                  GlobalOpts const& g) {
  EnumOptions eo;
  eo.cache_dir = g.cache();
  std::vector<std::pair<std::string, std::string>> objects;  // name, text
  if (kind == "monoids") {
    int idx = 0;
    for (auto const& mult : enumerate_monoids(size, eo)) {
      std::string name = "M" + std::to_string(size) + "_"
                         + std::to_string(idx++);
      auto s = make_pomonoid_unchecked(discrete_poset(size), mult, 0, name);
      objects.emplace_back(name, io::serialize_pomonoid(*s));
    }
  } else if (kind == "posets") {
    int idx = 0;
    for (auto const& p : enumerate_posets(size, eo)) {
      std::string name = "P" + std::to_string(size) + "_"
                         + std::to_string(idx++);
      objects.emplace_back(name, io::serialize_poset(p, name));
    }
  } else if (kind == "pomonoids") {
    for (auto const& s : enumerate_pomonoids(size, eo)) {
      objects.emplace_back(s->name, io::serialize_pomonoid(*s));
    }
  } else if (kind == "sposets") {
    if (over_file.empty()) {
      std::cout << "enumerate sposets requires --over\n";
      return 2;
    }
    auto s = io::parse_pomonoid_file(over_file);
    if (!out_dir.empty()) {
      // keep the output directory self-contained: `over:` references in the
      // emitted files resolve against this copy of the pomonoid
      fs::create_directories(out_dir);
      std::ofstream(fs::path(out_dir) / (s->name + ".pos"))
          << io::serialize_pomonoid(*s);
    }
    for (auto const& a : enumerate_sposets(s, size, eo)) {
      objects.emplace_back(a->name, io::serialize_sposet(*a));
    }
  } else {
    std::cout << "unknown kind: " << kind
              << " (expected monoids|posets|pomonoids|sposets)\n";
    return 2;
  }
  if (out_dir.empty()) {
    for (auto const& [name, text] : objects) {
      std::cout << text;
    }
    std::cout << "count: " << objects.size() << "\n";
  } else {
    fs::create_directories(out_dir);
    for (auto const& [name, text] : objects) {
      std::ofstream(fs::path(out_dir) / (name + ".pos")) << text;
    }
    std::cout << "count: " << objects.size() << "\n";
  }
  return 0;
}

int cmd_verify(std::string const& id, UniverseParams const& params,
               std::string const& report_file) {
  std::vector<VerificationReport> reports;
  if (id == "all") {
    for (auto const& t : theorem_registry()) {
      reports.push_back(t.run(params));
    }
  } else {
    reports.push_back(verify(id, params));
  }
  std::string text;
  bool        violated = false;
  fs::path    witness_dir =
      report_file.empty() ? fs::path(".")
                          : fs::path(report_file).parent_path();
  if (witness_dir.empty()) {
    witness_dir = ".";
  }
  for (auto const& rep : reports) {
    text += rep.format();
    if (rep.violations > 0) {
      violated = true;
    }
    for (size_t i = 0; i < rep.witnesses.size(); ++i) {
      auto wf = witness_dir
                / (rep.id + "-witness-" + std::to_string(i) + ".pos");
      std::ofstream(wf) << rep.witnesses[i];
    }
  }
  std::cout << text;
  if (!report_file.empty()) {
    std::ofstream(report_file) << text;
  }
  return violated ? 1 : 0;
}

int cmd_search(std::string const& claim, UniverseParams const& params) {
  auto found = counterexample_search(claim, params);
  if (found) {
    std::cout << *found;
    return 0;
  }
  std::cout << "absent-within-bounds\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pomonoids, S-posets, and their injectivity theory"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--cache-dir", g.cache_dir, "enumeration cache directory");
  app.add_flag("--no-cache", g.no_cache, "bypass the enumeration cache");
  app.add_option("--jobs", g.jobs, "worker threads for verification");
  app.add_option("--budget", g.budget, "search node budget (-1 = unlimited)");

  std::string file, over_file, out_dir, report_file, kind, id, claim;
  int         size = 3;

  UniverseParams params;

  auto* validate = app.add_subcommand("validate", "check a .pos file");
  validate->add_option("file", file)->required();

  auto* props = app.add_subcommand("props", "decision-procedure verdicts");
  props->add_option("file", file)->required();
  props->add_option("--over", over_file, "pomonoid file for references");
  int props_bound = 3;
  props->add_option("--bound", props_bound, "embedding bound k");

  auto* green = app.add_subcommand("green", "Green's relations of a pomonoid");
  green->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate structures");
  enumerate->add_option("kind", kind, "monoids|posets|pomonoids|sposets")
      ->required();
  enumerate->add_option("--size", size, "order / size bound")->required();
  enumerate->add_option("--out", out_dir, "write one .pos file per object");
  enumerate->add_option("--over", over_file, "pomonoid file (sposets)");

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem check");
  verify_cmd->add_option("id", id, "theorem id or 'all'")->required();
  verify_cmd->add_option("--max-order", params.max_order);
  verify_cmd->add_option("--max-size", params.max_size);
  verify_cmd->add_option("--bound", params.bound);
  verify_cmd->add_option("--report", report_file, "also write report here");

  auto* search = app.add_subcommand("search", "counterexample search");
  search->add_option("claim", claim, "claim id")->required();
  search->add_option("--max-order", params.max_order);
  search->add_option("--max-size", params.max_size);
  search->add_option("--bound", params.bound);

  CLI11_PARSE(app, argc, argv);

  params.jobs      = g.jobs;
  params.budget    = g.budget;
  params.cache_dir = g.cache();

  try {
    if (validate->parsed()) {
      return cmd_validate(file);
    }
    if (props->parsed()) {
      return cmd_props(file, over_file, props_bound, g);
    }
    if (green->parsed()) {
      return cmd_green(file);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(kind, size, out_dir, over_file, g);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(id, params, report_file);
    }
    if (search->parsed()) {
      return cmd_search(claim, params);
    }
  } catch (ValidationError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (BudgetExceeded const& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
