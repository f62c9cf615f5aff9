#include "cyclicsign/serialize.hpp"

namespace cyclicsign {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const VectorQ& v) { return to_strings(v); }

json index_set_json(const IndexSet& s) { return s.values(); }

json matrix_json(const MatrixQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i).transpose()));
  return {{"n", m.rows()}, {"rows", rows}};
}

json violations_json(const std::vector<ClassViolation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"row", v.row}, {"column", v.column}, {"next_column", v.next_column}});
  }
  return out;
}

json class_check_json(const ClassCheck& check) {
  json out = {{"in_class", check.accepted()}, {"violations", violations_json(check.violations)}};
  if (check.accepted()) {
    const auto sums = row_sum_class(*check.matrix);
    out["row_sums"] = vector_json(sums.sums);
    out["row_sum_class"] = to_string(sums.tag);
  }
  return out;
}

json gap_graph_json(const GapGraph& g) {
  json kappa = json::array();
  for (int i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.n(); ++j) row.push_back(g.kappa()(i, j));
    kappa.push_back(std::move(row));
  }
  return {{"n", g.n()}, {"kappa", kappa}};
}

json scc_json(const SccPartition& p) {
  json comps = json::array();
  for (const auto& c : p.components) {
    comps.push_back({{"vertices", index_set_json(c.vertices)}, {"closed", c.closed}});
  }
  return {{"components", comps}};
}

json reachability_json(const ReachabilitySets& r) {
  json steps = json::array();
  for (const auto& s : r.by_step) steps.push_back(index_set_json(s));
  return {{"root", r.root}, {"by_step", steps}, {"closure", index_set_json(r.closure)}};
}

json sign_report_json(const SignReport& report) {
  json cert;
  if (const auto* two = std::get_if<TwoClosedComponents>(&report.certificate)) {
    cert = {{"type", "two_closed_components"},
            {"components", json::array({index_set_json(two->first), index_set_json(two->second)})}};
  } else if (const auto* kv = std::get_if<KernelVector>(&report.certificate)) {
    cert = {{"type", "kernel_vector"}, {"vector", vector_json(kv->v)}};
  } else {
    cert = {{"type", "fundamental_solution"},
            {"vector", vector_json(std::get<FundamentalSolution>(report.certificate).x)}};
  }
  return {{"sign", report.sign},
          {"case", to_string(report.sign_case)},
          {"certificate", cert},
          {"row_sum_shortcut", report.row_sum_shortcut}};
}

json solution_space_json(const SolutionSpace& space) {
  json fundamental = json::array();
  for (const auto& f : space.fundamental) {
    fundamental.push_back({{"component", index_set_json(f.component)},
                           {"x", vector_json(*f.fundamental_solution)},
                           {"sign", *f.sign == SolutionSign::NonNegative ? "NonNegative" : "NonPositive"}});
  }
  json null = json::array();
  for (const auto& nc : space.null) {
    json basis = json::array();
    for (const auto& y : nc.null_basis) basis.push_back(vector_json(y));
    null.push_back({{"component", index_set_json(nc.component)}, {"basis", basis}});
  }
  return {{"lambda", rational_json(space.lambda)},
          {"feasible", space.feasible},
          {"fundamental", fundamental},
          {"null", null},
          {"canonical_particular",
           space.canonical_particular ? vector_json(*space.canonical_particular) : json(nullptr)}};
}

json witness_json(const std::optional<MSemipositivityWitness>& w) {
  if (!w) return {{"applicable", false}};
  return {{"applicable", true},
          {"m_matrix", matrix_json(w->m_matrix)["rows"]},
          {"open_union", index_set_json(w->open_union)},
          {"ordering", w->ordering},
          {"z", vector_json(w->z)}};
}

json pmatrix_json(const CyclicMatrix& a, const PMatrixReport& report) {
  const bool regime = is_nonnegative(a) && row_sum_class(a).tag == RowSumSign::AllPositive;
  return {{"is_p_matrix", report.is_p_matrix},
          {"witness", report.witness ? index_set_json(*report.witness) : json(nullptr)},
          {"minors_checked", report.minors_checked},
          {"sufficient_condition", check_sufficient_pmatrix(a)},
          {"necessary_condition", check_necessary_condition(a)},
          {"necessary_condition_informational", !regime},
          {"strong_motzkin", check_strong_motzkin(a)}};
}

}  // namespace cyclicsign
