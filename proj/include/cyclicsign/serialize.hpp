#pragma once

#include "cyclicsign/cyclic_matrix.hpp"
#include "cyclicsign/gap_graph.hpp"
#include "cyclicsign/pmatrix.hpp"
#include "cyclicsign/sign_analysis.hpp"

#include <json.hpp>

namespace cyclicsign {

// JSON views of the library's results. Rationals are always canonical
// strings; object keys come out sorted, so dumps are byte-stable.

nlohmann::json rational_json(const Rational& q);
nlohmann::json vector_json(const VectorQ& v);
nlohmann::json index_set_json(const IndexSet& s);

// {"n": N, "rows": [["p/q", ...], ...]}
nlohmann::json matrix_json(const MatrixQ& m);

nlohmann::json class_check_json(const ClassCheck& check);
nlohmann::json violations_json(const std::vector<ClassViolation>& violations);

// {"n": N, "kappa": [[0|1, ...], ...]}
nlohmann::json gap_graph_json(const GapGraph& g);
// {"components": [{"vertices": [...], "closed": bool}, ...]}
nlohmann::json scc_json(const SccPartition& p);
nlohmann::json reachability_json(const ReachabilitySets& r);

// {"sign": -1|0|1, "case": "...", "certificate": {...}}
nlohmann::json sign_report_json(const SignReport& report);
nlohmann::json solution_space_json(const SolutionSpace& space);
nlohmann::json witness_json(const std::optional<MSemipositivityWitness>& w);

// PMatrixReport plus the polynomial-time conditions evaluated on the same
// matrix.
nlohmann::json pmatrix_json(const CyclicMatrix& a, const PMatrixReport& report);

}  // namespace cyclicsign
