#include "cclab/system.hpp"

#include <cctype>
#include <sstream>

namespace cclab {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void file_error(std::size_t offset, ParseDiagnostic::Kind kind, std::string msg) {
  throw ParseError(ParseDiagnostic{offset, std::move(msg), kind});
}

}  // namespace

void validate_varnames(const VarNames& vars) {
  for (const auto& v : vars)
    if (!is_identifier(v)) throw InputError("expr_parser", "invalid variable name '" + v + "'");
  if (vars[0] == vars[1]) throw InputError("expr_parser", "variable names must be distinct");
}

PlanarSystem parse_system(const SystemSource& source, const ParserLimits& limits) {
  validate_varnames(source.varnames);
  auto parse_component = [&](const std::string& text, const char* which) {
    try {
      return parse_polynomial(text, source.varnames, limits);
    } catch (const ParseError& e) {
      throw ParseError(e.diagnostic(), which);
    }
  };
  PlanarSystem sys{parse_component(source.raw_dx, "dx"), parse_component(source.raw_dy, "dy"),
                   source.label.value_or("")};
  return sys;
}

SystemSource parse_system_file(std::string_view text) {
  SystemSource src;
  bool have_dx = false;
  bool have_dy = false;
  bool have_vars = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    const std::size_t base = line_start + (first == std::string_view::npos ? 0 : first);
    const std::string_view body = trim(line);
    if (!body.empty()) {
      if (body.substr(0, 5) == "vars:") {
        if (have_vars) file_error(base, ParseDiagnostic::Kind::semantic, "duplicate 'vars' line");
        std::istringstream names{std::string(body.substr(5))};
        std::string a, b, extra;
        names >> a >> b;
        if (a.empty() || b.empty() || (names >> extra))
          file_error(base, ParseDiagnostic::Kind::syntax, "'vars:' expects exactly two names");
        src.varnames = {a, b};
        try {
          validate_varnames(src.varnames);
        } catch (const InputError& e) {
          file_error(base, ParseDiagnostic::Kind::semantic, e.what());
        }
        have_vars = true;
      } else {
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) file_error(base, ParseDiagnostic::Kind::syntax, "expected 'key = value'");
        const std::string key(trim(body.substr(0, eq)));
        const std::string_view value = trim(body.substr(eq + 1));
        if (key == "dx" || key == "dy") {
          bool& seen = key == "dx" ? have_dx : have_dy;
          if (seen) file_error(base, ParseDiagnostic::Kind::semantic, "duplicate '" + key + "' line");
          (key == "dx" ? src.raw_dx : src.raw_dy) = std::string(value);
          seen = true;
        } else if (key == "label") {
          std::string_view l = value;
          if (l.size() >= 2 && l.front() == '"' && l.back() == '"') l = l.substr(1, l.size() - 2);
          src.label = std::string(l);
        } else {
          file_error(base, ParseDiagnostic::Kind::syntax, "unknown key '" + key + "'");
        }
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (!have_dx) file_error(text.size(), ParseDiagnostic::Kind::semantic, "missing 'dx' line");
  if (!have_dy) file_error(text.size(), ParseDiagnostic::Kind::semantic, "missing 'dy' line");
  return src;
}

std::string to_system_file(const SystemSource& source) {
  std::ostringstream out;
  if (source.label) out << "label = " << *source.label << "\n";
  out << "vars: " << source.varnames[0] << " " << source.varnames[1] << "\n";
  out << "dx = " << source.raw_dx << "\n";
  out << "dy = " << source.raw_dy << "\n";
  return out.str();
}

SystemSource to_source(const PlanarSystem& sys) {
  SystemSource src{to_string(sys.P), to_string(sys.Q), sys.vars(), std::nullopt};
  if (!sys.label.empty()) src.label = sys.label;
  return src;
}

Matrix2 inverse(const Matrix2& m) {
  const Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (sgn(det) == 0) throw InputError("cli_orchestrator", "transformation matrix is singular");
  Matrix2 inv;
  inv[0][0] = m[1][1] / det;
  inv[0][1] = -m[0][1] / det;
  inv[1][0] = -m[1][0] / det;
  inv[1][1] = m[0][0] / det;
  return inv;
}

PlanarSystem transform(const PlanarSystem& sys, const Matrix2& m, const Vector2& offset, const VarNames& new_vars) {
  validate_varnames(new_vars);
  const Matrix2 inv = inverse(m);
  const Poly2 p = substitute_linear(sys.P, m, offset, new_vars);
  const Poly2 q = substitute_linear(sys.Q, m, offset, new_vars);
  return PlanarSystem{inv[0][0] * p + inv[0][1] * q, inv[1][0] * p + inv[1][1] * q, sys.label};
}

}  // namespace cclab
