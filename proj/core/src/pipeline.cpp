#include "bezsolve/pipeline.hpp"

#include <exception>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "bezsolve/bezmat.hpp"
#include "bezsolve/io.hpp"
#include "bezsolve/parser.hpp"
#include "bezsolve/rank.hpp"
#include "bezsolve/reduce.hpp"
#include "bezsolve/solve.hpp"

namespace bezsolve {

namespace {

int stage_order(const std::string& stage) {
  if (stage == "bezout") return 0;
  if (stage == "rank") return 1;
  if (stage == "reduce") return 2;
  if (stage == "companions") return 3;
  if (stage == "roots" || stage == "all") return 4;
  throw std::invalid_argument("unknown stage: " + stage);
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& contents) {
  if (cfg.out_dir.empty()) return;
  std::filesystem::create_directories(cfg.out_dir);
  write_file((std::filesystem::path(cfg.out_dir) / name).string(), contents);
}

// Cross-checks the Fourier-built family against the symbolic construction.
// Both paths prune with the same rule, so label bases must agree exactly.
double oracle_deviation(const BezoutFamily& fam, const PolySystem& f) {
  const BezoutFamily ref = symbolic_family(f);
  if (ref.row_basis != fam.row_basis || ref.col_basis != fam.col_basis)
    throw std::runtime_error("oracle check: label bases disagree");
  double dev = 0.0;
  for (std::size_t k = 0; k < fam.mats.size(); ++k)
    dev = std::max(dev, (fam.mats[k] - ref.mats[k]).cwiseAbs().maxCoeff());
  return dev;
}

int run(const RunConfig& cfg, std::ostream& out, bool dump_only) {
  const int last = dump_only ? 0 : stage_order(cfg.stage);
  const PolySystem f = load_system(cfg.input);
  out << std::setprecision(12);

  const BezoutFamily fam = build_family(f);
  out << "family " << fam.rows() << " x " << fam.cols() << " (" << fam.n + 1 << " matrices)\n";
  if (cfg.oracle) {
    const double dev = oracle_deviation(fam, f);
    out << "oracle max deviation = " << dev << "\n";
    if (!(dev < 1e-6 * std::max(fam.max_abs(), 1.0)))
      throw std::runtime_error("oracle check: Fourier and symbolic families disagree");
  }
  if (dump_only) {
    out << family_to_json(fam, f.var_names);
    return kOk;
  }
  emit(cfg, "family.json", family_to_json(fam, f.var_names));
  if (last < 1) return kOk;

  // The rank report covers the full unpruned B(1): its diagonal profile at
  // size D is the quantity the threshold discussion is about.
  const FourierGrid grid = fourier_points(f.multidegree);
  const Eigen::MatrixXcd b1_full = interpolate(evaluation_matrix(f, 0, grid), grid);
  const RankReport rr = cfg.use_blocks ? numerical_rank_blocked(b1_full, cfg.tau)
                                       : numerical_rank(b1_full, cfg.tau);
  out << "rank B(1) = " << rr.rank << " of " << b1_full.rows() << "\n";
  emit(cfg, "rank.csv", rank_to_csv(rr));
  emit(cfg, "rank.json", rank_to_json(rr));
  if (last < 2) return kOk;

  ReduceOptions ropt;
  ropt.tau = cfg.tau;
  ropt.use_blocks = cfg.use_blocks;
  const ReducedFamily rf = reduce_family(fam, ropt);
  out << "dim A = " << rf.dimA << "\n";
  emit(cfg, "relations.json", relations_to_json(rf, f.var_names));
  if (last < 3) return kOk;

  const CompanionSet cs = companions(rf, cfg.tau);
  if (cs.conditioning_warning)
    out << "warning: B(1) condition estimate " << cs.condition_estimate << "\n";
  emit(cfg, "companions.json", companions_to_json(cs, f.var_names));
  if (last < 4) return cs.conditioning_warning ? kIllConditioned : kOk;

  RootSet roots = joint_eigen(cs, cfg.seed);
  verify(roots, f);
  double worst = 0.0;
  for (const Root& root : roots.roots)
    for (double r : root.residuals) worst = std::max(worst, r);
  out << "roots = " << roots.roots.size() << "\n";
  out << "max residual = " << worst << "\n";
  emit(cfg, "roots.json", roots_to_json(roots));
  emit(cfg, "histogram.csv", histogram_to_csv(log_error_histogram(roots, 16)));
  return cs.conditioning_warning ? kIllConditioned : kOk;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run(cfg, out, false);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NonZeroDimensionalError& e) {
    err << "error: " << e.what() << "\n";
    return kNotZeroDimensional;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run(cfg, out, true);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace bezsolve
