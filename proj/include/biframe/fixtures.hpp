#ifndef BIFRAME_FIXTURES_HPP
#define BIFRAME_FIXTURES_HPP

#include <memory>

#include "biframe/biframe.hpp"
#include "biframe/multiplier.hpp"

namespace biframe::fixtures {

// Embedded reference pairs used by the verify command and the test suites.
// Each builder returns a fresh value; none touch the filesystem.

/// R^3 pair over a three-cell partition: F = (e1, e2, 2e3)/sqrt(w_i),
/// G = (2e1, e2, e3/2)/sqrt(w_i). S = diag(2,1,1), biframe bounds (1,2),
/// frame bounds (1,4) for F and (1/4,4) for G.
BiframePair partitioned_basis_pair(double w1 = 2.0, double w2 = 1.5, double w3 = 1.2);

/// Truncation of the sigma-finite pair with sequences (e1,e1,e1,e2,...,e_d)
/// and (0,e1,e1,e2,...,e_d) in an R^d space: d+2 atoms, S = diag(2,1,...,1),
/// biframe bounds (1,2), F-frame bounds (1,3).
BiframePair repeated_basis_pair(int dim);

/// R^3 pair with F = {(2,1,1),(-1,3,-1),(-1,1,4)}, G = standard basis,
/// unit weights. S is the non-symmetric matrix with det 33 and bounds (2,4).
BiframePair skew_pair();

/// Known operator matrix of skew_pair.
Matrix skew_pair_matrix();
/// Its exact inverse (1/33) * [[13,-3,-4],[5,9,1],[2,-3,7]].
Matrix skew_pair_inverse();

/// Second tensor factor realizing the form |<f,e1>|^2 + 2||f||^2 in R^dim via
/// atoms (e1,e1) and (e_i, 2 e_i): S = diag(3,2,...,2), bounds (2,3).
BiframePair shifted_parseval_pair(int dim);

/// F = G = standard basis with unit weights: S = I.
BiframePair parseval_pair(int dim, Field field = Field::Real);

std::shared_ptr<const AtomSpace> shared_space(AtomSpace space);

} // namespace biframe::fixtures

#endif
