#pragma once

#include <vector>

#include "sheaflab/linalg.hpp"

namespace sheaflab {

// Smith normal form D = U*A*V with U, V unimodular. Only the column
// transform V (and its inverse) is tracked: columns of V past the rank span
// the integer kernel of A, and Vinv re-expresses vectors in that basis.
struct SmithNormalForm {
  MatrixZ D;
  MatrixZ V;
  MatrixZ Vinv;
  long rank = 0;
  std::vector<Int> invariant_factors;  // positive, each dividing the next
};

SmithNormalForm smith_normal_form(MatrixZ A);

}  // namespace sheaflab
