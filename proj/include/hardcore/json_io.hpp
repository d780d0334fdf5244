#pragma once

#include <string>
#include <vector>

#include "hardcore/gadget.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/homology.hpp"
#include "hardcore/pauli.hpp"

namespace hardcore {

/// Graph JSON schema:
///   {"n_modes": int, "edges": [[a,b],...],
///    "vertex_weights": [..],            // optional, defaults to ones
///    "hopping_weights": [[a,b,w],...]}  // optional, defaults to zeros
/// Hopping entries must reference edges present in the edge list.
ConstraintGraph parse_graph_json(const std::string& text);
ConstraintGraph load_graph(const std::string& path);
std::string graph_to_json(const ConstraintGraph& graph);

/// Target JSON schema:
///   {"n_qubits": int, "edges": [[i,j,mu],...], "flavor": "fis"|"laplacian"}
TargetHamiltonian parse_target_json(const std::string& text);
TargetHamiltonian load_target(const std::string& path);

/// Compiled-instance JSON: the graph in its schema above plus a layout block
/// ({"qubits": [[m1,m2,m3],...], "mediators": [[i,j,[x,y,z]],...]}), flavor,
/// delta, k, offset and the target edge list. Parsing rebuilds the term list
/// and cross-checks it against the embedded graph.
std::string instance_to_json(const GadgetInstance& instance);
GadgetInstance parse_instance_json(const std::string& text);

/// PauliSum JSON: [{"coeff": r, "word": "XZ..IX"}, ...]
std::string pauli_to_json(const PauliSum& sum);

/// Basis JSON: sorted occupation bitmasks as integers, e.g. [1, 2, 4].
std::string basis_to_json(const FockBasis& basis);

/// All report writers print doubles with 17 significant digits and fixed key
/// order, so repeated runs are byte-identical.
std::string spectrum_report_json(int dim, double min_eig, const std::vector<double>& head,
                                 bool dense_head);
std::string homology_report_json(const HomologyReport& report);
std::string effective_report_json(const std::string& flavor, const std::string& which,
                                  const Eigen::MatrixXd& matrix, const PauliSum& pauli);
std::string verify_report_json(const TargetHamiltonian& target, const GadgetInstance& sample,
                               const SimulationReport& report);
std::string verify_report_csv(const SimulationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace hardcore
