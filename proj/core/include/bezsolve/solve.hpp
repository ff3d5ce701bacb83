#ifndef BEZSOLVE_SOLVE_HPP
#define BEZSOLVE_SOLVE_HPP

#include <Eigen/Dense>
#include <vector>

#include "bezsolve/polysystem.hpp"
#include "bezsolve/reduce.hpp"

namespace bezsolve {

/// The commuting multiplication matrices X_1..X_n over a shared basis of
/// the quotient algebra.
struct CompanionSet {
  int n = 0;
  int dimA = 0;
  std::vector<Eigen::MatrixXcd> X;
  std::vector<MultiPoly> basis_labels;
  bool conditioning_warning = false;
  double condition_estimate = 0.0;  // |R_00|/|R_min| from the QRP of B(1)
};

/// Barnett formulas X_j = B(x_j) B(1)^{-1}, computed by linear solve.
/// Attaches (never throws on) a conditioning warning when the B(1) QRP
/// diagonal ratio exceeds 1/tau.
CompanionSet companions(const ReducedFamily& rf, double tau = -1.0);

struct Root {
  std::vector<Complex> coords;
  std::vector<double> residuals;  // |f_i(coords)|
  int eigvec_index = -1;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;
  unsigned seed_used = 0;
  bool defective_flag = false;  // set when every retry still looked defective
};

/// Roots from the eigenvectors of a seeded random combination
/// X_c = sum c_j X_j; coordinate j of each root is the dominant-component
/// ratio (X_j v)_i / v_i at i = argmax |v_i|. (A Rayleigh quotient would
/// average over all components instead; the ratio is exact for true
/// eigenpairs and keeps the n coordinates tied to one eigenvector.)
/// Retries with fresh seeds on numerically defective eigenstructure, then
/// reports clustered roots with multiplicity counts.
RootSet joint_eigen(const CompanionSet& cs, unsigned seed = 1);

/// Fills residuals |f_i(root)| and sorts roots by worst residual.
void verify(RootSet& roots, const PolySystem& f);

struct Histogram {
  std::vector<double> edges;   // bins + 1 edges over [-16, 0]
  std::vector<long> counts;
};

/// Histogram of log10(max residual); exact zeros land in the leftmost bin,
/// values outside the range are clamped to the edge bins.
Histogram log_error_histogram(const RootSet& roots, int bins);

}  // namespace bezsolve

#endif
