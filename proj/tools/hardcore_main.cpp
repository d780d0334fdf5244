// Command-line front end: spectrum / homology / effective / compile-verify.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardcore/assemble.hpp"
#include "hardcore/gadget.hpp"
#include "hardcore/homology.hpp"
#include "hardcore/json_io.hpp"

namespace {

using namespace hardcore;

struct RunConfig {
    std::string input;
    std::string output;
    int k = 1;
    std::vector<double> deltas;
    std::string flavor = "fis";
    std::string which = "vmain";
    std::string method = "auto";
    std::uint64_t seed = 0x5EED;
    double tol = 1e-6;
};

EigOptions eig_options(const RunConfig& cfg) {
    EigOptions opts;
    if (cfg.method == "dense")
        opts.method = EigMethod::dense;
    else if (cfg.method == "iterative")
        opts.method = EigMethod::iterative;
    else if (cfg.method == "auto")
        opts.method = EigMethod::automatic;
    else
        throw parse_error("unknown --method " + cfg.method);
    opts.seed = cfg.seed;
    if (!(cfg.tol > 0.0))
        throw parse_error("--tol must be positive");
    opts.iterative_tol = cfg.tol;
    return opts;
}

Flavor parse_flavor(const std::string& name) {
    if (name == "fis")
        return Flavor::fis;
    if (name == "laplacian")
        return Flavor::laplacian;
    throw parse_error("unknown --flavor " + name);
}

void emit(const RunConfig& cfg, const std::string& json_text, const std::string& csv_text = "") {
    if (cfg.output.empty()) {
        std::cout << json_text;
    } else {
        write_file(cfg.output, json_text);
        if (!csv_text.empty()) {
            std::string csv_path = cfg.output;
            const auto dot = csv_path.rfind('.');
            if (dot != std::string::npos)
                csv_path.resize(dot);
            write_file(csv_path + ".csv", csv_text);
        }
    }
}

/// Spectrum of the objective Hamiltonian sum w_ij hops + sum c_i n_i on the
/// k-particle hard-core sector of a graph file.
int cmd_spectrum(const RunConfig& cfg) {
    const ConstraintGraph graph = load_graph(cfg.input);
    const FockBasis basis = enumerate_basis(graph, cfg.k);
    if (basis.size() == 0) {
        emit(cfg, spectrum_report_json(0, 0.0, {}, true));
        return 0;
    }
    const SparseHermitian h = sparse_sum(assemble_hopping(graph, basis), 1.0,
                                         assemble_number_weighted(graph, basis), 1.0);
    const EigOptions opts = eig_options(cfg);
    const bool dense = opts.method == EigMethod::dense ||
                       (opts.method == EigMethod::automatic && h.dim() <= 4096);
    if (dense) {
        const std::vector<double> spectrum = dense_spectrum(h);
        const std::size_t head = std::min<std::size_t>(spectrum.size(), 8);
        emit(cfg, spectrum_report_json(
                      h.dim(), spectrum.front(),
                      std::vector<double>(spectrum.begin(), spectrum.begin() + head), true));
    } else {
        emit(cfg, spectrum_report_json(h.dim(), min_eigenvalue(h, opts), {}, false));
    }
    return 0;
}

int cmd_homology(const RunConfig& cfg) {
    const ConstraintGraph graph = load_graph(cfg.input);
    emit(cfg, homology_report_json(homology_report(graph, cfg.k)));
    return 0;
}

int cmd_effective(const RunConfig& cfg) {
    const Flavor flavor = parse_flavor(cfg.flavor);
    const TwoQubitGadget gadget = make_two_qubit_gadget(flavor);
    const SparseHermitian zero =
        SparseHermitian::from_triplets(static_cast<int>(gadget.basis.size()), {});
    Eigen::MatrixXd effective;
    if (cfg.which == "v1p")
        effective = sw_second_order(gadget.h0, gadget.v1_prime, zero, gadget.low_basis);
    else if (cfg.which == "v1")
        effective = sw_second_order(gadget.h0, gadget.v1, zero, gadget.low_basis);
    else if (cfg.which == "v2")
        effective = sw_second_order(gadget.h0, gadget.v2, zero, gadget.low_basis);
    else if (cfg.which == "vmain")
        effective = sw_second_order(gadget.h0, gadget.v_main, zero, gadget.low_basis);
    else if (cfg.which == "vextra")
        effective = sw_first_order(gadget.h0, gadget.v_extra, gadget.low_basis);
    else
        throw parse_error("unknown --which " + cfg.which);
    emit(cfg, effective_report_json(cfg.flavor, cfg.which, effective,
                                    pauli_decompose(effective, 1e-10)));
    return 0;
}

int cmd_compile_verify(const RunConfig& cfg) {
    const TargetHamiltonian target = load_target(cfg.input);
    if (cfg.deltas.size() < 3)
        throw parse_error("--deltas needs at least 3 strictly increasing values");
    const SimulationReport report = verify_simulation(target, cfg.deltas, eig_options(cfg));
    const GadgetInstance sample = compile_target(target, cfg.deltas.front());
    emit(cfg, verify_report_json(target, sample, report), verify_report_csv(report));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hard-core fermion instances, independence-complex Laplacians and "
                 "perturbative XZ gadgets"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", cfg.input, "input JSON file")->required();
        sub->add_option("--output", cfg.output, "output JSON path (stdout when omitted)");
        sub->add_option("--method", cfg.method, "eigensolver: auto|dense|iterative");
        sub->add_option("--seed", cfg.seed, "iterative solver seed");
        sub->add_option("--tol", cfg.tol, "iterative solver tolerance");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "sector spectrum of a graph file");
    add_common(spectrum, true);
    spectrum->add_option("--k", cfg.k, "particle number")->required();

    CLI::App* homology = app.add_subcommand("homology", "Laplacian summary and Betti number");
    add_common(homology, true);
    homology->add_option("--k", cfg.k, "level (k-vertex simplices)")->required();

    CLI::App* effective = app.add_subcommand("effective", "effective two-qubit interaction");
    add_common(effective, false);
    effective->add_option("--flavor", cfg.flavor, "fis|laplacian");
    effective->add_option("--which", cfg.which, "v1p|v1|v2|vmain|vextra");

    CLI::App* verify = app.add_subcommand("compile-verify", "compile a target and sweep delta");
    add_common(verify, true);
    verify->add_option("--deltas", cfg.deltas, "comma-separated, strictly increasing")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(cfg);
        if (homology->parsed())
            return cmd_homology(cfg);
        if (effective->parsed())
            return cmd_effective(cfg);
        if (verify->parsed())
            return cmd_compile_verify(cfg);
    } catch (const hardcore::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        switch (err.kind()) {
        case hardcore::ErrorKind::parse: return 2;
        case hardcore::ErrorKind::size: return 3;
        case hardcore::ErrorKind::numeric: return 4;
        case hardcore::ErrorKind::logic: return 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
