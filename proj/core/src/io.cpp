#include "bezsolve/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "bezsolve/parser.hpp"
#include "json.hpp"

namespace bezsolve {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json matrix_to_json(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(complex_to_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MultiPoly poly_from_json(const json& spec, const std::vector<std::string>& names) {
  const int nvars = static_cast<int>(names.size());
  if (spec.is_string()) return parse_poly(spec.get<std::string>(), names);
  if (!spec.is_array()) throw ParseError("polynomial must be a string or a term list", 0);
  MultiPoly p(nvars);
  for (const auto& term : spec) {
    Monomial m(nvars);
    const auto& e = term.at("e");
    if (static_cast<int>(e.size()) != nvars) throw DimensionMismatch("term exponent arity");
    for (int j = 0; j < nvars; ++j) m.e[j] = e[j].get<int>();
    const auto& c = term.at("c");
    p.add_term(m, c.is_array() ? Complex{c[0].get<double>(), c[1].get<double>()}
                               : Complex{c.get<double>(), 0.0});
  }
  return p;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

PolySystem parse_system_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid system file: ") + err.what(), err.byte);
  }
  const int nvars = doc.at("nvars").get<int>();
  std::vector<std::string> names =
      doc.contains("vars") ? doc["vars"].get<std::vector<std::string>>()
                           : default_var_names(nvars);
  if (static_cast<int>(names.size()) != nvars)
    throw DimensionMismatch("vars length does not match nvars");
  std::vector<MultiPoly> polys;
  for (const auto& spec : doc.at("polys")) polys.push_back(poly_from_json(spec, names));
  std::vector<int> multidegree;
  if (doc.contains("multidegree")) multidegree = doc["multidegree"].get<std::vector<int>>();
  return PolySystem::make(std::move(polys), std::move(multidegree), std::move(names));
}

PolySystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open system file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system_json(buf.str());
}

std::string family_to_json(const BezoutFamily& fam, const std::vector<std::string>& var_names) {
  ordered_json doc;
  doc["n"] = fam.n;
  doc["rows"] = fam.rows();
  doc["cols"] = fam.cols();
  json row_labels = json::array();
  for (int i = 0; i < fam.rows(); ++i)
    row_labels.push_back(format_poly(fam.row_label(i), var_names));
  json col_labels = json::array();
  const auto ynames = default_var_names(fam.n, "y");
  for (int j = 0; j < fam.cols(); ++j)
    col_labels.push_back(format_poly(fam.col_label(j), ynames));
  doc["row_labels"] = std::move(row_labels);
  doc["col_labels"] = std::move(col_labels);
  json mats = json::array();
  for (const auto& M : fam.mats) mats.push_back(matrix_to_json(M));
  doc["matrices"] = std::move(mats);
  return dump(doc);
}

std::string companions_to_json(const CompanionSet& cs, const std::vector<std::string>& var_names) {
  ordered_json doc;
  doc["n"] = cs.n;
  doc["dimA"] = cs.dimA;
  json labels = json::array();
  for (const auto& p : cs.basis_labels) labels.push_back(format_poly(p, var_names));
  doc["basis"] = std::move(labels);
  doc["conditioning_warning"] = cs.conditioning_warning;
  doc["condition_estimate"] = cs.condition_estimate;
  json mats = json::array();
  for (const auto& X : cs.X) mats.push_back(matrix_to_json(X));
  doc["matrices"] = std::move(mats);
  return dump(doc);
}

std::string rank_to_csv(const RankReport& report) {
  std::ostringstream os;
  os << "index,diag,block\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < report.diag.size(); ++i) {
    int block = -1;
    for (std::size_t b = 0; b < report.block_structure.size(); ++b) {
      const auto& [begin, end] = report.block_structure[b];
      if (static_cast<int>(i) >= begin && static_cast<int>(i) < end) {
        block = static_cast<int>(b);
        break;
      }
    }
    os << i << "," << report.diag[i] << "," << block << "\n";
  }
  return os.str();
}

std::string rank_to_json(const RankReport& report) {
  ordered_json doc;
  doc["rank"] = report.rank;
  doc["threshold"] = report.threshold;
  doc["tau"] = report.tau;
  doc["diag"] = report.diag;
  json blocks = json::array();
  for (const auto& [begin, end] : report.block_structure)
    blocks.push_back(json::array({begin, end}));
  doc["blocks"] = std::move(blocks);
  return dump(doc);
}

std::string roots_to_json(const RootSet& roots) {
  ordered_json doc;
  doc["seed"] = roots.seed_used;
  doc["defective"] = roots.defective_flag;
  ordered_json list = ordered_json::array();
  for (const auto& root : roots.roots) {
    ordered_json r;
    json coords = json::array();
    for (Complex c : root.coords) coords.push_back(complex_to_json(c));
    r["x"] = std::move(coords);
    r["residuals"] = root.residuals;
    r["multiplicity"] = root.multiplicity;
    list.push_back(std::move(r));
  }
  doc["roots"] = std::move(list);
  return dump(doc);
}

std::string histogram_to_csv(const Histogram& h) {
  std::ostringstream os;
  os << "bin_left,bin_right,count\n";
  os << std::setprecision(17);
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    os << h.edges[b] << "," << h.edges[b + 1] << "," << h.counts[b] << "\n";
  return os.str();
}

std::string relations_to_json(const ReducedFamily& rf, const std::vector<std::string>& var_names) {
  ordered_json doc;
  doc["dimA"] = rf.dimA;
  doc["initial_rank"] = rf.initial_rank.rank;
  doc["final_rank"] = rf.final_rank.rank;
  json rels = json::array();
  for (const auto& rel : rf.relations) rels.push_back(format_poly(rel, var_names));
  doc["relations"] = std::move(rels);
  return dump(doc);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << contents;
}

}  // namespace bezsolve
