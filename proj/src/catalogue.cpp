#include "cclab/catalogue.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cclab/errors.hpp"
#include "cclab/parser.hpp"

#ifndef CCLAB_DEFAULT_DATA_DIR
#define CCLAB_DEFAULT_DATA_DIR "data"
#endif

namespace cclab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t offset;
  std::string_view text;  // comment stripped, not trimmed
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    lines.push_back({start, l});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t offset, ParseDiagnostic::Kind kind, std::string msg) {
  throw ParseError(ParseDiagnostic{offset, std::move(msg), kind});
}

}  // namespace

const Fact* CatalogueEntry::fact(const std::string& name) const {
  auto it = facts.find(name);
  return it == facts.end() ? nullptr : &it->second;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CCLAB_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return CCLAB_DEFAULT_DATA_DIR;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cli_orchestrator", "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, Fact> parse_facts(std::string_view text) {
  std::map<std::string, Fact> facts;
  for (const auto& line : split_lines(text)) {
    const std::string_view body = trim(line.text);
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    const std::size_t bar = body.find('|');
    if (eq == std::string_view::npos) fail(line.offset, ParseDiagnostic::Kind::syntax, "expected 'name = value | basis'");
    if (bar == std::string_view::npos || bar < eq) fail(line.offset, ParseDiagnostic::Kind::semantic, "fact without a basis");
    const std::string name(trim(body.substr(0, eq)));
    Fact f{std::string(trim(body.substr(eq + 1, bar - eq - 1))), std::string(trim(body.substr(bar + 1)))};
    if (name.empty() || f.value.empty() || f.basis.empty())
      fail(line.offset, ParseDiagnostic::Kind::semantic, "fact needs a name, a value and a basis");
    if (!facts.emplace(name, std::move(f)).second)
      fail(line.offset, ParseDiagnostic::Kind::semantic, "duplicate fact '" + name + "'");
  }
  return facts;
}

Catalogue Catalogue::load(const std::filesystem::path& data_dir) {
  Catalogue cat;
  const auto dir = data_dir / "catalogue";
  if (!std::filesystem::is_directory(dir)) throw InputError("cli_orchestrator", "missing catalogue directory " + dir.string());
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.path().extension() != ".sys") continue;
    CatalogueEntry e;
    e.key = item.path().stem().string();
    try {
      e.source = parse_system_file(read_text_file(item.path()));
      auto facts_path = item.path();
      facts_path.replace_extension(".facts");
      if (std::filesystem::exists(facts_path)) e.facts = parse_facts(read_text_file(facts_path));
    } catch (const ParseError& err) {
      throw InputError("cli_orchestrator", item.path().string() + ": " + err.what());
    }
    if (!e.source.label) e.source.label = e.key;
    cat.entries_.emplace(e.key, std::move(e));
  }
  return cat;
}

const CatalogueEntry* Catalogue::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const CatalogueEntry& Catalogue::at(const std::string& key) const {
  if (const auto* e = find(key)) return *e;
  throw InputError("cli_orchestrator", "unknown catalogue key '" + key + "'");
}

std::vector<std::string> Catalogue::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

std::map<std::string, Poly2> parse_fixtures(std::string_view text) {
  std::map<std::string, Poly2> out;
  VarNames vars{"x", "y"};
  struct Pending {
    std::string name;
    std::string expr;
    std::size_t offset = 0;
    VarNames vars;
  };
  std::optional<Pending> pending;
  auto flush = [&] {
    if (!pending) return;
    try {
      Poly2 p = parse_polynomial(pending->expr, pending->vars);
      if (!out.emplace(pending->name, std::move(p)).second)
        fail(pending->offset, ParseDiagnostic::Kind::semantic, "duplicate fixture '" + pending->name + "'");
    } catch (const ParseError& e) {
      throw ParseError(e.diagnostic(), pending->name);
    }
    pending.reset();
  };
  for (const auto& line : split_lines(text)) {
    const std::string_view body = trim(line.text);
    if (body.empty()) continue;
    const bool continuation = std::isspace(static_cast<unsigned char>(line.text.front())) != 0;
    if (continuation) {
      if (!pending) fail(line.offset, ParseDiagnostic::Kind::syntax, "continuation line without an entry");
      pending->expr += " ";
      pending->expr += body;
      continue;
    }
    flush();
    if (body.substr(0, 5) == "vars:") {
      std::istringstream names{std::string(body.substr(5))};
      std::string a, b, extra;
      names >> a >> b;
      if (a.empty() || b.empty() || (names >> extra))
        fail(line.offset, ParseDiagnostic::Kind::syntax, "'vars:' expects exactly two names");
      vars = {a, b};
      continue;
    }
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) fail(line.offset, ParseDiagnostic::Kind::syntax, "expected 'name = <expr>'");
    pending = Pending{std::string(trim(body.substr(0, eq))), std::string(body.substr(eq + 1)), line.offset, vars};
  }
  flush();
  return out;
}

std::map<std::string, Poly2> load_fixtures(const std::filesystem::path& file) {
  return parse_fixtures(read_text_file(file));
}

ResolvedInput resolve_input(const std::string& key_or_path, const Catalogue& catalogue) {
  if (const auto* e = catalogue.find(key_or_path)) return {e->source, *e};
  if (!std::filesystem::exists(key_or_path))
    throw InputError("cli_orchestrator", "'" + key_or_path + "' is neither a catalogue key nor a readable file");
  SystemSource src = parse_system_file(read_text_file(key_or_path));
  if (!src.label) src.label = std::filesystem::path(key_or_path).stem().string();
  return {std::move(src), std::nullopt};
}

}  // namespace cclab
