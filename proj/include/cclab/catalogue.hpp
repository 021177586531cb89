#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cclab/poly2.hpp"
#include "cclab/system.hpp"

namespace cclab {

// A recorded expectation about a catalogue system, with the statement it was
// taken from.
struct Fact {
  std::string value;
  std::string basis;
};

struct CatalogueEntry {
  std::string key;
  SystemSource source;
  std::map<std::string, Fact> facts;

  const Fact* fact(const std::string& name) const;
};

/// CCLAB_DATA_DIR if set, otherwise the data directory of the source tree.
std::filesystem::path default_data_dir();

std::string read_text_file(const std::filesystem::path& path);

/// Lines `name = value | basis`; `#` starts a comment. Every fact needs a
/// nonempty basis. Throws ParseError with byte offsets.
std::map<std::string, Fact> parse_facts(std::string_view text);

class Catalogue {
 public:
  /// Loads `<dir>/catalogue/<key>.sys` and the matching `.facts` files.
  static Catalogue load(const std::filesystem::path& data_dir);

  const CatalogueEntry* find(const std::string& key) const;
  const CatalogueEntry& at(const std::string& key) const;
  std::vector<std::string> keys() const;

 private:
  std::map<std::string, CatalogueEntry> entries_;
};

/// Named polynomials. `vars: a b` switches the variables for the entries that
/// follow; `name = <expr>` starts an entry and indented lines continue it.
std::map<std::string, Poly2> parse_fixtures(std::string_view text);
std::map<std::string, Poly2> load_fixtures(const std::filesystem::path& file);

/// Catalogue key or path to a system file.
struct ResolvedInput {
  SystemSource source;
  std::optional<CatalogueEntry> entry;
};
ResolvedInput resolve_input(const std::string& key_or_path, const Catalogue& catalogue);

}  // namespace cclab
