#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "cclab/parser.hpp"
#include "cclab/poly2.hpp"

namespace cclab {

// Textual definition of a planar system x' = P, y' = Q.
struct SystemSource {
  std::string raw_dx;
  std::string raw_dy;
  VarNames varnames{"x", "y"};
  std::optional<std::string> label;
};

struct PlanarSystem {
  Poly2 P;
  Poly2 Q;
  std::string label;

  const VarNames& vars() const { return P.vars(); }
  int degree() const { return std::max(P.total_degree(), Q.total_degree()); }
};

/// Checks that the names are distinct ASCII identifiers; throws InputError.
void validate_varnames(const VarNames& vars);

/// Parses both components; a ParseError names the failing component.
PlanarSystem parse_system(const SystemSource& source, const ParserLimits& limits = {});

/// Reads the line-oriented system definition format:
///   vars: x y
///   dx = <expr>
///   dy = <expr>
///   label = <text>
/// `#` starts a comment. Offsets in diagnostics are relative to `text`.
SystemSource parse_system_file(std::string_view text);

/// Renders a source back to the file format.
std::string to_system_file(const SystemSource& source);

SystemSource to_source(const PlanarSystem& sys);

/// Linear change of variables (x, y) = M (u, v) + offset. The new field is
/// M^{-1} (P, Q) composed with the map. Throws InputError when M is singular.
PlanarSystem transform(const PlanarSystem& sys, const Matrix2& m, const Vector2& offset, const VarNames& new_vars);

Matrix2 inverse(const Matrix2& m);

}  // namespace cclab
