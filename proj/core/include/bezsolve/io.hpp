#ifndef BEZSOLVE_IO_HPP
#define BEZSOLVE_IO_HPP

#include <string>

#include "bezsolve/bezmat.hpp"
#include "bezsolve/polysystem.hpp"
#include "bezsolve/rank.hpp"
#include "bezsolve/reduce.hpp"
#include "bezsolve/solve.hpp"

namespace bezsolve {

/// System file: JSON with "nvars", optional "vars" names, optional
/// "multidegree" override, and "polys" as expression strings or explicit
/// term lists [{"e": [2, 1], "c": [3, 0]}].
PolySystem load_system(const std::string& path);
PolySystem parse_system_json(const std::string& json_text);

/// Family dump: labels as formatted polynomials plus each matrix as a
/// dense array of [re, im] pairs. Used both for B(x_k) families and (with
/// n matrices) for companion sets.
std::string family_to_json(const BezoutFamily& fam, const std::vector<std::string>& var_names);
std::string companions_to_json(const CompanionSet& cs, const std::vector<std::string>& var_names);

std::string rank_to_csv(const RankReport& report);
std::string rank_to_json(const RankReport& report);

std::string roots_to_json(const RootSet& roots);
std::string histogram_to_csv(const Histogram& h);

std::string relations_to_json(const ReducedFamily& rf, const std::vector<std::string>& var_names);

void write_file(const std::string& path, const std::string& contents);

}  // namespace bezsolve

#endif
