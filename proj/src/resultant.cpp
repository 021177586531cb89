#include "cclab/resultant.hpp"

namespace cclab {

Rational resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw InputError("exact_algebra", "resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return 0;
  auto s = sylvester_matrix(f.coeffs(), g.coeffs(), Rational(0));
  return bareiss_determinant(std::move(s), Rational(1));
}

UniPoly resultant(const Poly2& f, const Poly2& g, int eliminate_index) {
  if (f.vars() != g.vars()) throw InputError("exact_algebra", "resultant of polynomials over different variables");
  if (f.is_zero() && g.is_zero()) throw InputError("exact_algebra", "resultant of two zero polynomials");
  const std::string& survivor = f.vars()[eliminate_index == 0 ? 1 : 0];
  if (f.is_zero() || g.is_zero()) return UniPoly::zero(survivor);
  const std::vector<UniPoly> cf = f.coefficients_in(eliminate_index);
  const std::vector<UniPoly> cg = g.coefficients_in(eliminate_index);
  auto s = sylvester_matrix(cf, cg, UniPoly::zero(survivor));
  UniPoly det = bareiss_determinant(std::move(s), UniPoly(Rational(1), survivor));
  det.set_var(survivor);
  return det;
}

UniPoly resultant(const Poly2& f, const Poly2& g, const std::string& eliminate) {
  return resultant(f, g, f.var_index(eliminate));
}

}  // namespace cclab
