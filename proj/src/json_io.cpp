#include "hardcore/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hardcore {

namespace {

using nlohmann::json;

/// nlohmann reports byte offsets; golden files are small enough that a rescan
/// for the line number is cheap and makes messages actionable.
int line_of_byte(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

json parse_or_throw(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw parse_error(std::string(what) + ": " + err.what() + " (line " +
                          std::to_string(line_of_byte(text, err.byte)) + ")");
    }
}

} // namespace

ConstraintGraph parse_graph_json(const std::string& text) {
    const json doc = parse_or_throw(text, "graph json");
    try {
        const int n_modes = doc.at("n_modes").get<int>();
        std::vector<std::pair<Mode, Mode>> edges;
        for (const auto& e : doc.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());

        std::vector<double> vertex_weights;
        if (doc.contains("vertex_weights"))
            vertex_weights = doc["vertex_weights"].get<std::vector<double>>();

        std::vector<double> hopping_weights(edges.size(), 0.0);
        ConstraintGraph skeleton(n_modes, edges); // canonical edge order for lookups
        if (doc.contains("hopping_weights")) {
            for (const auto& h : doc["hopping_weights"]) {
                Mode a = h.at(0).get<int>();
                Mode b = h.at(1).get<int>();
                const double w = h.at(2).get<double>();
                if (a > b)
                    std::swap(a, b);
                const auto& canon = skeleton.edges();
                const auto it = std::lower_bound(canon.begin(), canon.end(), std::make_pair(a, b));
                if (it == canon.end() || *it != std::make_pair(a, b))
                    throw parse_error("graph json: hopping weight on a non-edge (" +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
                hopping_weights[static_cast<std::size_t>(it - canon.begin())] = w;
            }
        }
        return ConstraintGraph(n_modes, skeleton.edges(), std::move(vertex_weights),
                               std::move(hopping_weights));
    } catch (const json::exception& err) {
        throw parse_error(std::string("graph json: ") + err.what());
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::logic)
            throw parse_error(std::string("graph json: ") + err.what());
        throw;
    }
}

ConstraintGraph load_graph(const std::string& path) { return parse_graph_json(read_file(path)); }

std::string graph_to_json(const ConstraintGraph& graph) {
    std::string out = "{\"n_modes\": " + std::to_string(graph.n_modes()) + ", \"edges\": [";
    for (std::size_t e = 0; e < graph.n_edges(); ++e) {
        const auto [a, b] = graph.edges()[e];
        out += (e ? ", [" : "[") + std::to_string(a) + ", " + std::to_string(b) + "]";
    }
    out += "], \"vertex_weights\": [";
    for (Mode i = 0; i < graph.n_modes(); ++i)
        out += (i ? ", " : "") + format_g17(graph.vertex_weight(i));
    out += "], \"hopping_weights\": [";
    bool first = true;
    for (std::size_t e = 0; e < graph.n_edges(); ++e) {
        if (graph.hopping_weight(e) == 0.0)
            continue;
        const auto [a, b] = graph.edges()[e];
        out += first ? "[" : ", [";
        first = false;
        out += std::to_string(a) + ", " + std::to_string(b) + ", " +
               format_g17(graph.hopping_weight(e)) + "]";
    }
    out += "]}";
    return out;
}

TargetHamiltonian parse_target_json(const std::string& text) {
    const json doc = parse_or_throw(text, "target json");
    try {
        TargetHamiltonian target;
        target.n_qubits = doc.at("n_qubits").get<int>();
        const std::string flavor = doc.at("flavor").get<std::string>();
        if (flavor == "fis")
            target.flavor = Flavor::fis;
        else if (flavor == "laplacian")
            target.flavor = Flavor::laplacian;
        else
            throw parse_error("target json: flavor must be \"fis\" or \"laplacian\"");
        for (const auto& e : doc.at("edges")) {
            TargetEdge edge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()};
            if (edge.i < 0 || edge.j < 0 || edge.i >= target.n_qubits ||
                edge.j >= target.n_qubits || edge.i == edge.j)
                throw parse_error("target json: edge references an invalid qubit");
            if (edge.mu < 0.0)
                throw parse_error("target json: couplings must be nonnegative");
            target.edges.push_back(edge);
        }
        return target;
    } catch (const json::exception& err) {
        throw parse_error(std::string("target json: ") + err.what());
    }
}

TargetHamiltonian load_target(const std::string& path) {
    return parse_target_json(read_file(path));
}

std::string instance_to_json(const GadgetInstance& instance) {
    std::string out = "{\"flavor\": \"";
    out += (instance.flavor == Flavor::fis ? "fis" : "laplacian");
    out += "\", \"k\": " + std::to_string(instance.k);
    out += ", \"delta\": " + format_g17(instance.delta);
    out += ", \"offset\": " + format_g17(instance.offset);
    out += ", \"target_edges\": [";
    for (std::size_t i = 0; i < instance.target_edges.size(); ++i) {
        const auto& e = instance.target_edges[i];
        out += (i ? ", [" : "[") + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " +
               format_g17(e.mu) + "]";
    }
    out += "], \"layout\": {\"qubits\": [";
    for (std::size_t q = 0; q < instance.layout.qubit_modes.size(); ++q) {
        const auto& t = instance.layout.qubit_modes[q];
        out += (q ? ", [" : "[") + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
               std::to_string(t[2]) + "]";
    }
    out += "], \"mediators\": [";
    bool first = true;
    for (const auto& [pair, t] : instance.layout.mediator_modes) {
        out += first ? "[" : ", [";
        first = false;
        out += std::to_string(pair.first) + ", " + std::to_string(pair.second) + ", [" +
               std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) +
               "]]";
    }
    out += "]}, \"graph\": " + graph_to_json(instance.graph) + "}";
    return out;
}

GadgetInstance parse_instance_json(const std::string& text) {
    const json doc = parse_or_throw(text, "instance json");
    try {
        TargetHamiltonian target;
        const std::string flavor = doc.at("flavor").get<std::string>();
        if (flavor == "fis")
            target.flavor = Flavor::fis;
        else if (flavor == "laplacian")
            target.flavor = Flavor::laplacian;
        else
            throw parse_error("instance json: unknown flavor");
        target.n_qubits = doc.at("k").get<int>();
        for (const auto& e : doc.at("target_edges"))
            target.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});

        GadgetInstance instance = compile_target(target, doc.at("delta").get<double>());

        // The embedded graph and layout must agree with the rebuilt terms.
        const ConstraintGraph embedded = parse_graph_json(doc.at("graph").dump());
        if (!(embedded == instance.graph))
            throw parse_error("instance json: embedded graph disagrees with the recompiled terms");
        const auto& layout = doc.at("layout");
        for (std::size_t q = 0; q < instance.layout.qubit_modes.size(); ++q)
            for (int m = 0; m < 3; ++m)
                if (layout.at("qubits").at(q).at(m).get<int>() !=
                    instance.layout.qubit_modes[q][static_cast<std::size_t>(m)])
                    throw parse_error("instance json: qubit layout mismatch");
        if (layout.at("mediators").size() != instance.layout.mediator_modes.size())
            throw parse_error("instance json: mediator layout mismatch");
        if (doc.at("offset").get<double>() != instance.offset)
            throw parse_error("instance json: offset disagrees with the recompiled value");
        return instance;
    } catch (const json::exception& err) {
        throw parse_error(std::string("instance json: ") + err.what());
    }
}

std::string pauli_to_json(const PauliSum& sum) {
    std::string out = "[";
    for (std::size_t i = 0; i < sum.terms().size(); ++i) {
        const auto& t = sum.terms()[i];
        out += (i ? ", {" : "{");
        out += "\"coeff\": " + format_g17(t.coeff) + ", \"word\": \"" + t.word + "\"}";
    }
    out += "]";
    return out;
}

std::string basis_to_json(const FockBasis& basis) {
    std::string out = "[";
    for (std::size_t i = 0; i < basis.size(); ++i)
        out += (i ? ", " : "") + std::to_string(basis.state(i));
    out += "]";
    return out;
}

namespace {

std::string doubles_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? ", " : "") + format_g17(values[i]);
    out += "]";
    return out;
}

} // namespace

std::string spectrum_report_json(int dim, double min_eig, const std::vector<double>& head,
                                 bool dense_head) {
    std::string out = "{\"dim\": " + std::to_string(dim);
    out += ", \"min_eig\": " + format_g17(min_eig);
    if (dense_head)
        out += ", \"spectrum_head\": " + doubles_array(head);
    out += "}\n";
    return out;
}

std::string homology_report_json(const HomologyReport& report) {
    std::string out = "{\"dim\": " + std::to_string(report.dim);
    out += ", \"min_eig\": " + format_g17(report.min_eig);
    out += ", \"betti\": " + std::to_string(report.betti);
    out += ", \"spectrum_head\": " + doubles_array(report.spectrum_head);
    out += "}\n";
    return out;
}

std::string effective_report_json(const std::string& flavor, const std::string& which,
                                  const Eigen::MatrixXd& matrix, const PauliSum& pauli) {
    std::string out = "{\"flavor\": \"" + flavor + "\", \"which\": \"" + which + "\"";
    out += ", \"matrix\": [";
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
        out += (r ? ", [" : "[");
        for (Eigen::Index c = 0; c < matrix.cols(); ++c)
            out += (c ? ", " : "") + format_g17(matrix(r, c));
        out += "]";
    }
    out += "], \"pauli\": " + pauli_to_json(pauli) + "}\n";
    return out;
}

std::string verify_report_json(const TargetHamiltonian& target, const GadgetInstance& sample,
                               const SimulationReport& report) {
    std::string out = "{\"flavor\": \"";
    out += (target.flavor == Flavor::fis ? "fis" : "laplacian");
    out += "\", \"n_qubits\": " + std::to_string(target.n_qubits);
    out += ", \"k\": " + std::to_string(sample.k);
    out += ", \"n_modes\": " + std::to_string(sample.graph.n_modes());
    out += ", \"offset\": " + format_g17(sample.offset);
    out += ", \"lambda_target\": " + format_g17(target.min_eigenvalue());
    out += ", \"exponent\": " + format_g17(report.exponent);
    out += ", \"points\": [";
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        out += (i ? ", {" : "{");
        out += "\"delta\": " + format_g17(p.delta);
        out += ", \"lambda_sim\": " + format_g17(p.lambda_sim);
        out += ", \"lambda_target\": " + format_g17(p.lambda_target);
        out += ", \"offset\": " + format_g17(p.offset);
        out += ", \"error\": " + format_g17(p.error) + "}";
    }
    out += "]}\n";
    return out;
}

std::string verify_report_csv(const SimulationReport& report) {
    std::string out = "delta,lambda_sim,lambda_target,offset,error\n";
    for (const auto& p : report.points) {
        out += format_g17(p.delta) + "," + format_g17(p.lambda_sim) + "," +
               format_g17(p.lambda_target) + "," + format_g17(p.offset) + "," +
               format_g17(p.error) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw logic_error("cannot write file: " + path);
    out << content;
}

} // namespace hardcore
