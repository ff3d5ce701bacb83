#include "bezsolve/solve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace bezsolve {

namespace {

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
    if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
  }
  return false;
}

}  // namespace

CompanionSet companions(const ReducedFamily& rf, double tau) {
  const Eigen::MatrixXcd& B1 = rf.family.mats.at(0);
  if (tau <= 0) tau = default_rank_tau(B1.rows());
  CompanionSet cs;
  cs.n = rf.family.n;
  cs.dimA = rf.dimA;
  const auto lu = B1.transpose().partialPivLu();
  for (int j = 1; j <= cs.n; ++j) {
    // X_j B(1) = B(x_j), solved through the transposed system.
    cs.X.push_back(lu.solve(rf.family.mats[j].transpose()).transpose());
  }
  for (int i = 0; i < cs.dimA; ++i) cs.basis_labels.push_back(rf.family.row_label(i));
  if (!rf.final_rank.diag.empty()) {
    const double dmin = rf.final_rank.diag.back();
    const double dmax = rf.final_rank.diag.front();
    cs.condition_estimate = dmin > 0 ? dmax / dmin : std::numeric_limits<double>::infinity();
    cs.conditioning_warning = !(cs.condition_estimate < 1.0 / tau);
  }
  return cs;
}

RootSet joint_eigen(const CompanionSet& cs, unsigned seed) {
  RootSet out;
  const int dim = cs.dimA;
  const int n = cs.n;
  if (dim == 0) return out;

  double scale = 0.0;
  for (const auto& X : cs.X) scale = std::max(scale, X.cwiseAbs().maxCoeff());
  const double resid_tol = 1e-6 * std::max(scale, 1.0);

  constexpr int kMaxRetries = 5;
  unsigned current = seed;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt, ++current) {
    std::mt19937 rng(current);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd combo(n);
    for (int j = 0; j < n; ++j) combo(j) = dist(rng);
    combo.normalize();

    Eigen::MatrixXcd xc = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < n; ++j) xc += Complex{combo(j), 0.0} * cs.X[j];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(xc);
    if (es.info() != Eigen::Success) continue;

    out.roots.clear();
    bool defective = false;
    for (int i = 0; i < dim; ++i) {
      const Eigen::VectorXcd v = es.eigenvectors().col(i);
      int dominant = 0;
      v.cwiseAbs().maxCoeff(&dominant);
      Root root;
      root.eigvec_index = i;
      root.coords.resize(n);
      for (int j = 0; j < n; ++j) {
        root.coords[j] = (cs.X[j] * v)(dominant) / v(dominant);
        if ((cs.X[j] * v - root.coords[j] * v).norm() > resid_tol * v.norm()) defective = true;
      }
      out.roots.push_back(std::move(root));
    }
    out.seed_used = current;
    if (!defective) return out;
    out.defective_flag = true;
  }

  // Every retry looked defective: cluster nearby eigen-roots and report
  // multiplicities instead of guessing a cleaner decomposition.
  if (!out.roots.empty()) {
    const double cluster_tol = 1e-8 * std::max(scale, 1.0);
    std::stable_sort(out.roots.begin(), out.roots.end(),
                     [](const Root& a, const Root& b) { return lex_less(a.coords, b.coords); });
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
      for (std::size_t t = i + 1; t < out.roots.size(); ++t) {
        double dist = 0.0;
        for (int j = 0; j < n; ++j)
          dist = std::max(dist, std::abs(out.roots[i].coords[j] - out.roots[t].coords[j]));
        if (dist > cluster_tol) break;
        ++out.roots[i].multiplicity;
      }
    }
  }
  return out;
}

void verify(RootSet& roots, const PolySystem& f) {
  for (Root& root : roots.roots) {
    root.residuals.resize(f.nvars);
    for (int i = 0; i < f.nvars; ++i)
      root.residuals[i] = std::abs(f.polys[i].eval(root.coords));
  }
  std::stable_sort(roots.roots.begin(), roots.roots.end(), [](const Root& a, const Root& b) {
    const double ma = a.residuals.empty() ? 0 : *std::max_element(a.residuals.begin(), a.residuals.end());
    const double mb = b.residuals.empty() ? 0 : *std::max_element(b.residuals.begin(), b.residuals.end());
    return ma < mb;
  });
}

Histogram log_error_histogram(const RootSet& roots, int bins) {
  constexpr double kLo = -16.0;
  constexpr double kHi = 0.0;
  Histogram h;
  h.counts.assign(bins, 0);
  for (int b = 0; b <= bins; ++b) h.edges.push_back(kLo + (kHi - kLo) * b / bins);
  for (const Root& root : roots.roots) {
    double worst = 0.0;
    for (double r : root.residuals) worst = std::max(worst, r);
    int bin;
    if (worst == 0.0) {
      bin = 0;
    } else {
      const double lg = std::log10(worst);
      bin = static_cast<int>(std::floor((lg - kLo) / (kHi - kLo) * bins));
      bin = std::clamp(bin, 0, bins - 1);
    }
    ++h.counts[bin];
  }
  return h;
}

}  // namespace bezsolve
