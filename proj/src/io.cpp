#include "posact/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "posact/errors.hpp"

namespace posact::io {

namespace {

  std::string order_section(Poset const& p) {
    std::ostringstream os;
    os << "order:\n";
    for (auto const& [i, j] : transitive_reduction(p)) {
      os << i << " <= " << j << "\n";
    }
    return os.str();
  }

  std::string rows_section(std::vector<int> const& table, int rows, int cols) {
    std::ostringstream os;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (c != 0) {
          os << " ";
        }
        os << table[r * cols + c];
      }
      os << "\n";
    }
    return os.str();
  }

  std::string elements_line(std::vector<std::string> const& elements) {
    if (elements.empty()) {
      return "";
    }
    std::ostringstream os;
    os << "elements:";
    for (auto const& e : elements) {
      os << " " << e;
    }
    os << "\n";
    return os.str();
  }

  std::string provenance_line(std::string const& p) {
    if (p.empty()) {
      return "";
    }
    return "# provenance: " + p + "\n";
  }

}  // namespace

std::string serialize_poset(Poset const& p, std::string const& name) {
  std::ostringstream os;
  os << "kind: poset\n"
     << "name: " << name << "\n"
     << "size: " << p.size << "\n"
     << order_section(p);
  return os.str();
}

std::string serialize_pomonoid(Pomonoid const& s) {
  std::ostringstream os;
  os << "kind: pomonoid\n"
     << "name: " << s.name << "\n"
     << provenance_line(s.provenance) << "size: " << s.size() << "\n"
     << "identity: " << s.identity << "\n"
     << elements_line(s.elements) << "mult:\n"
     << rows_section(s.mult, s.size(), s.size()) << order_section(s.poset);
  return os.str();
}

std::string serialize_sposet(SPoset const& a) {
  std::ostringstream os;
  os << "kind: sposet\n"
     << "name: " << a.name << "\n"
     << provenance_line(a.provenance) << "over: " << a.over->name << "\n"
     << "size: " << a.size() << "\n"
     << elements_line(a.elements) << "act:\n"
     << rows_section(a.act, a.size(), a.over->size()) << order_section(a.poset);
  return os.str();
}

std::string serialize_map(SPosetMap const& f) {
  std::ostringstream os;
  os << "kind: map\n"
     << "name: " << f.name << "\n"
     << "dom: " << f.dom->name << "\n"
     << "cod: " << f.cod->name << "\n"
     << "table:\n"
     << rows_section(f.table, 1, static_cast<int>(f.table.size()));
  return os.str();
}

std::string serialize_slice(std::string const& name,
                            std::string const& map_name) {
  std::ostringstream os;
  os << "kind: slice\n"
     << "name: " << name << "\n"
     << "map: " << map_name << "\n";
  return os.str();
}

namespace {

  struct Raw {
    std::map<std::string, std::string> fields;
    std::vector<std::vector<int>>      rows;   // mult/act/table rows
    std::vector<std::pair<int, int>>   pairs;  // order pairs
    std::string                        provenance;
  };

  Raw parse_raw(std::string const& text, std::string const& filename) {
    Raw                raw;
    std::istringstream in(text);
    std::string        line;
    int                lineno  = 0;
    std::string        section;  // "", "mult", "act", "table", "order"
    while (std::getline(in, line)) {
      ++lineno;
      if (line.rfind("# provenance: ", 0) == 0) {
        raw.provenance = line.substr(14);
        continue;
      }
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line = line.substr(0, hash);
      }
      // trim
      auto l = line.find_first_not_of(" \t\r");
      if (l == std::string::npos) {
        continue;
      }
      auto r = line.find_last_not_of(" \t\r");
      line   = line.substr(l, r - l + 1);

      if (line == "mult:" || line == "act:" || line == "table:"
          || line == "order:") {
        section = line.substr(0, line.size() - 1);
        continue;
      }
      auto colon = line.find(':');
      if (colon != std::string::npos && section != "order") {
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        auto        vl  = val.find_first_not_of(" \t");
        val             = vl == std::string::npos ? "" : val.substr(vl);
        raw.fields[key] = val;
        section.clear();
        continue;
      }
      if (section == "order") {
        std::istringstream ls(line);
        int                i, j;
        std::string        rel;
        if (!(ls >> i >> rel >> j) || rel != "<=") {
          throw ParseError(filename, lineno, "bad order pair: " + line);
        }
        raw.pairs.emplace_back(i, j);
      } else if (section == "mult" || section == "act" || section == "table") {
        std::istringstream ls(line);
        std::vector<int>   row;
        int                v;
        while (ls >> v) {
          row.push_back(v);
        }
        raw.rows.push_back(std::move(row));
      } else {
        throw ParseError(filename, lineno, "unexpected line: " + line);
      }
    }
    return raw;
  }

  int to_int(Raw const& raw, std::string const& key,
             std::string const& filename) {
    auto it = raw.fields.find(key);
    if (it == raw.fields.end()) {
      throw ParseError(filename, 0, "missing field: " + key);
    }
    return std::stoi(it->second);
  }

  std::string field(Raw const& raw, std::string const& key,
                    std::string const& filename) {
    auto it = raw.fields.find(key);
    if (it == raw.fields.end()) {
      throw ParseError(filename, 0, "missing field: " + key);
    }
    return it->second;
  }

  std::vector<int> flatten(Raw const& raw, int rows, int cols,
                           std::string const& filename) {
    if (static_cast<int>(raw.rows.size()) != rows) {
      throw ParseError(filename, 0, "wrong number of table rows");
    }
    std::vector<int> out;
    for (auto const& r : raw.rows) {
      if (static_cast<int>(r.size()) != cols) {
        throw ParseError(filename, 0, "wrong table row width");
      }
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::vector<std::string> split_ws(std::string const& s) {
    std::istringstream       in(s);
    std::vector<std::string> out;
    std::string              w;
    while (in >> w) {
      out.push_back(w);
    }
    return out;
  }

}  // namespace

std::pair<std::string, std::string> Workspace::add(std::string const& text,
                                                   std::string const& file) {
  Raw         raw  = parse_raw(text, file);
  std::string kind = field(raw, "kind", file);
  std::string name = field(raw, "name", file);
  int const   size = kind == "slice" || kind == "map" ? 0
                                                      : to_int(raw, "size", file);
  if (kind == "poset") {
    posets[name] = order_closure(raw.pairs, size);
  } else if (kind == "pomonoid") {
    auto mult = flatten(raw, size, size, file);
    auto s    = make_pomonoid(order_closure(raw.pairs, size), mult,
                              to_int(raw, "identity", file), name);
    auto* mut = const_cast<Pomonoid*>(s.get());
    if (raw.fields.count("elements")) {
      mut->elements = split_ws(raw.fields["elements"]);
    }
    mut->provenance = raw.provenance;
    pomonoids[name] = s;
  } else if (kind == "sposet") {
    auto over_name = field(raw, "over", file);
    auto it        = pomonoids.find(over_name);
    if (it == pomonoids.end()) {
      throw ParseError(file, 0, "unknown pomonoid: " + over_name);
    }
    auto act  = flatten(raw, size, it->second->size(), file);
    auto a    = make_sposet(order_closure(raw.pairs, size), it->second, act,
                            name);
    auto* mut = const_cast<SPoset*>(a.get());
    if (raw.fields.count("elements")) {
      mut->elements = split_ws(raw.fields["elements"]);
    }
    mut->provenance = raw.provenance;
    sposets[name]   = a;
  } else if (kind == "map") {
    auto dit = sposets.find(field(raw, "dom", file));
    auto cit = sposets.find(field(raw, "cod", file));
    if (dit == sposets.end() || cit == sposets.end()) {
      throw ParseError(file, 0, "unknown sposet reference in map " + name);
    }
    auto table = flatten(raw, 1, dit->second->size(), file);
    maps[name] = make_map(dit->second, cit->second, table, name);
  } else if (kind == "slice") {
    auto map_name = field(raw, "map", file);
    if (!maps.count(map_name)) {
      throw ParseError(file, 0, "unknown map: " + map_name);
    }
    slices[name] = map_name;
  } else {
    throw ParseError(file, 0, "unknown kind: " + kind);
  }
  return {kind, name};
}

void Workspace::load_dir(std::string const& dir) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, std::string>> files;  // path, text
  for (auto const& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".pos") {
      files.emplace_back(e.path().string(), read_file(e.path().string()));
    }
  }
  std::sort(files.begin(), files.end());
  // multiple passes until no progress, so references resolve
  std::vector<uint8_t> done(files.size(), 0);
  bool                 progress = true;
  std::string          last_error;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < files.size(); ++i) {
      if (done[i]) {
        continue;
      }
      try {
        add(files[i].second, files[i].first);
        done[i]  = 1;
        progress = true;
      } catch (ParseError const& e) {
        last_error = e.what();
      }
    }
  }
  for (size_t i = 0; i < files.size(); ++i) {
    if (!done[i]) {
      throw ParseError(files[i].first, 0, "unresolved: " + last_error);
    }
  }
}

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path, 0, "cannot open file");
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

PomonoidPtr parse_pomonoid_file(std::string const& path) {
  Workspace ws;
  auto [kind, name] = ws.add(read_file(path), path);
  if (kind != "pomonoid") {
    throw ParseError(path, 0, "expected a pomonoid");
  }
  return ws.pomonoids.at(name);
}

}  // namespace posact::io
