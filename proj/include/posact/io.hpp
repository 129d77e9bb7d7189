#ifndef POSACT_IO_HPP_
#define POSACT_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include "posact/sposet.hpp"

namespace posact::io {

// Line-oriented text format, one object per file.  Canonical serialization:
// fixed line order, table rows in index order, order pairs as the sorted
// transitive reduction.  `#` starts a comment; `# provenance:` is preserved.

std::string serialize_poset(Poset const& p, std::string const& name);
std::string serialize_pomonoid(Pomonoid const& s);
std::string serialize_sposet(SPoset const& a);
std::string serialize_map(SPosetMap const& f);
std::string serialize_slice(std::string const& name,
                            std::string const& map_name);

// A named collection used to resolve `over:`/`dom:`/`cod:`/`map:` references.
struct Workspace {
  std::map<std::string, Poset>       posets;
  std::map<std::string, PomonoidPtr> pomonoids;
  std::map<std::string, SPosetPtr>   sposets;
  std::map<std::string, SPosetMap>   maps;
  std::map<std::string, std::string> slices;  // slice name -> map name

  // Parses one object from text and stores it; returns (kind, name).
  std::pair<std::string, std::string> add(std::string const& text,
                                          std::string const& filename = "?");
  // Loads every *.pos file in a directory (multiple passes so that
  // references resolve regardless of filename order).
  void load_dir(std::string const& dir);
};

PomonoidPtr parse_pomonoid_file(std::string const& path);
std::string read_file(std::string const& path);

}  // namespace posact::io
#endif  // POSACT_IO_HPP_
