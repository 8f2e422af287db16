#include "lietor/iso.hpp"

#include <algorithm>

#include "lietor/error.hpp"

namespace lietor {

IsoVerdict iso_check(const EigenspaceDecomposition& dec, const Quadruple& q,
                     const Quadruple& qp) {
  int n = dec.group.n();
  require((int)q.beta.size() == n && (int)qp.beta.size() == n, Errc::IncompatibleGradings,
          "beta vectors do not match the grading rank");
  require((int)q.lambda.size() == dec.g->rank() && (int)qp.lambda.size() == dec.g->rank(),
          Errc::IncompatibleGradings, "lambda does not match the algebra rank");
  if (q.psi != qp.psi) return {false, "clause 1: psi != psi'"};
  if (!(q.c == qp.c)) return {false, "clause 1: c != c'"};
  auto orbit = ghat_orbit(dec, q.lambda);
  if (std::find(orbit.begin(), orbit.end(), qp.lambda) == orbit.end())
    return {false, "clause 2: lambda' is not in the Ghat-orbit of lambda"};
  for (int i = 0; i < n; ++i) {
    Cyc diff = q.beta[i] - qp.beta[i];
    if (!diff.is_rational() || !is_integer(diff.rational()))
      return {false, "clause 3: beta - beta' is not an integer vector"};
  }
  bool shifted = false;
  for (int i = 0; i < n; ++i)
    if (!(q.beta[i] == qp.beta[i])) shifted = true;
  if (qp.lambda != q.lambda)
    return {true, "isomorphic (clause 2: lambda' in Ghat-orbit)"};
  if (shifted) return {true, "isomorphic (clause 3: integral shift)"};
  return {true, "isomorphic (equal parameters)"};
}

}  // namespace lietor
