#pragma once

#include <vector>

#include "rrca/verma.hpp"

namespace rrca {

class SupersingularError : public MathError {
 public:
  using MathError::MathError;
};

// Largest submodule inside the positive-degree part, as a column basis.
Mat<Cyc> radical(const VermaModule<Cyc>& v);
Mat<ParamPoly> radical(const VermaModule<ParamPoly>& v);  // always throws

struct SimpleModuleReport {
  int irrep = 0;
  int verma_dim = 0;
  int dimension = 0;
  LaurentQ poincare;
  GradedWCharacter character;
  Mat<Cyc> radical_basis;
  bool smooth = false;  // dim L = |W|
  bool rigid = false;   // L = lambda in degree 0
};

SimpleModuleReport simple_report(const GroupData& g, const VermaModule<Cyc>& v);
SimpleModuleReport simple_report(const GroupData& g, int irrep, const ParameterPoint& p);
std::vector<SimpleModuleReport> all_simple_reports(const GroupData& g, const ParameterPoint& p);

// gamma_{r,k}(l) = m (k_{m+1-r} - k_{m+1-r-l}), indices mod m, k_0 = 0.
template <class S>
S cyclic_gamma(int m, int r, int l, const std::vector<S>& k);
// Least l in 1..m-1 with gamma_{r,k}(l) = 0, else m.
int cyclic_epsilon(int m, int r, const std::vector<Cyc>& k);
int cyclic_epsilon_generic(int m, int r);

// dim(lambda) q^{b(lambda*)} P_coinv / f_{lambda*}; throws SupersingularError if not a polynomial.
LaurentQ smooth_poincare(const GroupData& g, int irrep);
bool is_supersingular(const GroupData& g, int irrep);

}  // namespace rrca
