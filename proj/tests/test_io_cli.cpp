#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hardcore/json_io.hpp"

using namespace hardcore;

namespace {

std::string data_path(const std::string& name) {
    return std::string(HARDCORE_TEST_DATA_DIR) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HARDCORE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("graph json parsing") {
    SUBCASE("defaults: unit vertex weights, zero hopping") {
        const ConstraintGraph g = parse_graph_json(
            R"({"n_modes": 3, "edges": [[0,1],[1,2],[0,2]]})");
        CHECK(g.n_modes() == 3);
        for (Mode i = 0; i < 3; ++i)
            CHECK(g.vertex_weight(i) == 1.0);
        for (std::size_t e = 0; e < 3; ++e)
            CHECK(g.hopping_weight(e) == 0.0);
    }
    SUBCASE("explicit weights land on the right edges") {
        const ConstraintGraph g = parse_graph_json(
            R"({"n_modes": 3, "edges": [[0,1],[1,2]], "vertex_weights": [2,1,1],
                "hopping_weights": [[2,1,0.5]]})");
        CHECK(g.vertex_weight(0) == 2.0);
        // canonical edge order: (0,1), (1,2)
        CHECK(g.hopping_weight(0) == 0.0);
        CHECK(g.hopping_weight(1) == 0.5);
    }
    SUBCASE("round trip through the canonical writer") {
        const ConstraintGraph g = parse_graph_json(
            R"({"n_modes": 4, "edges": [[0,3],[1,2]], "vertex_weights": [1,0.5,2,1],
                "hopping_weights": [[0,3,-1.25]]})");
        const ConstraintGraph again = parse_graph_json(graph_to_json(g));
        CHECK(again == g);
    }
    SUBCASE("syntax errors carry a line number") {
        CHECK_THROWS_WITH_AS(parse_graph_json("{\n\"n_modes\": 3,\n!!"),
                             doctest::Contains("line 3"), Error);
    }
    SUBCASE("hopping weight on a non-edge is rejected") {
        CHECK_THROWS_AS(parse_graph_json(
                            R"({"n_modes": 3, "edges": [[0,1]], "hopping_weights": [[1,2,1.0]]})"),
                        Error);
    }
    SUBCASE("semantic violations are parse errors") {
        const auto check_kind = [](const std::string& text) {
            try {
                parse_graph_json(text);
                FAIL("expected a parse error");
            } catch (const Error& err) {
                CHECK(err.kind() == ErrorKind::parse);
            }
        };
        check_kind(R"({"n_modes": 3, "edges": [[0,0]]})");
        check_kind(R"({"n_modes": 3, "edges": [[0,7]]})");
    }
}

TEST_CASE("target json parsing") {
    const TargetHamiltonian t = parse_target_json(
        R"({"n_qubits": 2, "edges": [[0,1,1.0]], "flavor": "laplacian"})");
    CHECK(t.n_qubits == 2);
    CHECK(t.flavor == Flavor::laplacian);
    REQUIRE(t.edges.size() == 1);
    CHECK(t.edges[0].mu == 1.0);

    CHECK_THROWS_AS(parse_target_json(R"({"n_qubits": 2, "edges": [], "flavor": "other"})"),
                    Error);
    CHECK_THROWS_AS(parse_target_json(R"({"n_qubits": 2, "edges": [[0,1,-2.0]], "flavor": "fis"})"),
                    Error);
    CHECK_THROWS_AS(parse_target_json(R"({"n_qubits": 2, "edges": [[0,5,1.0]], "flavor": "fis"})"),
                    Error);
}

TEST_CASE("basis json") {
    const FockBasis basis = enumerate_basis(build_triangle_graph(), 1);
    CHECK(basis_to_json(basis) == "[1, 2, 4]");
}

TEST_CASE("instance json round trip") {
    for (Flavor flavor : {Flavor::fis, Flavor::laplacian}) {
        const TargetHamiltonian target{3, {{0, 1, 0.7}, {1, 2, 1.3}}, flavor};
        const GadgetInstance original = compile_target(target, 321.0);
        const GadgetInstance parsed = parse_instance_json(instance_to_json(original));
        CHECK(parsed.graph == original.graph);
        CHECK(parsed.k == original.k);
        CHECK(parsed.delta == original.delta);
        CHECK(parsed.offset == original.offset);
        CHECK(parsed.terms.identity == original.terms.identity);
        REQUIRE(parsed.terms.hops.size() == original.terms.hops.size());
        for (std::size_t i = 0; i < parsed.terms.hops.size(); ++i)
            CHECK(parsed.terms.hops[i].w == original.terms.hops[i].w);
        REQUIRE(parsed.terms.projectors.size() == original.terms.projectors.size());
        CHECK(parsed.layout.qubit_modes == original.layout.qubit_modes);
        CHECK(parsed.layout.mediator_modes == original.layout.mediator_modes);
    }
    SUBCASE("tampered graph is rejected") {
        const GadgetInstance inst =
            compile_target(TargetHamiltonian{2, {{0, 1, 1.0}}, Flavor::fis}, 100.0);
        std::string text = instance_to_json(inst);
        const auto pos = text.find("\"n_modes\": 9");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 12, "\"n_modes\": 12");
        CHECK_THROWS_AS(parse_instance_json(text), Error);
    }
}

TEST_CASE("cli spectrum") {
    SUBCASE("triangle with unit hops and weights reproduces the encoding energies") {
        const RunResult r = run_cli("spectrum --input " + data_path("triangle.json") + " --k 1");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.stdout_text);
        CHECK(doc["dim"] == 3);
        CHECK(std::abs(doc["min_eig"].get<double>()) < 1e-12);
        REQUIRE(doc["spectrum_head"].size() == 3);
        CHECK(std::abs(doc["spectrum_head"][0].get<double>()) < 1e-12);
        CHECK(std::abs(doc["spectrum_head"][1].get<double>()) < 1e-12);
        CHECK(doc["spectrum_head"][2].get<double>() == doctest::Approx(3.0));
    }
    SUBCASE("zeroed two-vertex graph gives the zero matrix") {
        const RunResult r = run_cli("spectrum --input " + data_path("edgeless2.json") + " --k 1");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.stdout_text);
        CHECK(doc["dim"] == 2);
        CHECK(doc["spectrum_head"][0].get<double>() == 0.0);
        CHECK(doc["spectrum_head"][1].get<double>() == 0.0);
    }
    SUBCASE("interaction graph sector dimension") {
        const RunResult r = run_cli("spectrum --input " + data_path("fig2.json") + " --k 2");
        REQUIRE(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.stdout_text)["dim"] == 24);
    }
}

TEST_CASE("cli homology") {
    SUBCASE("pentagon hole") {
        const RunResult r = run_cli("homology --input " + data_path("c5.json") + " --k 2");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.stdout_text);
        CHECK(doc["dim"] == 5);
        CHECK(doc["betti"] == 1);
    }
    SUBCASE("triangle points") {
        const RunResult r = run_cli("homology --input " + data_path("k3.json") + " --k 1");
        REQUIRE(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.stdout_text)["betti"] == 2);
    }
    SUBCASE("contractible") {
        const RunResult r = run_cli("homology --input " + data_path("edgeless3.json") + " --k 1");
        REQUIRE(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.stdout_text)["betti"] == 0);
    }
}

TEST_CASE("cli effective") {
    SUBCASE("fis vmain") {
        const RunResult r = run_cli("effective --flavor fis --which vmain");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.stdout_text);
        double ii = 0, xx = 0, zz = 0;
        for (const auto& term : doc["pauli"]) {
            if (term["word"] == "II") ii = term["coeff"].get<double>();
            if (term["word"] == "XX") xx = term["coeff"].get<double>();
            if (term["word"] == "ZZ") zz = term["coeff"].get<double>();
        }
        CHECK(ii == doctest::Approx(-10.0 / 9.0).epsilon(1e-9));
        CHECK(xx == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
        CHECK(zz == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
    }
    SUBCASE("laplacian vextra") {
        const RunResult r = run_cli("effective --flavor laplacian --which vextra");
        REQUIRE(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.stdout_text);
        double ii = 0, xx = 0;
        for (const auto& term : doc["pauli"]) {
            if (term["word"] == "II") ii = term["coeff"].get<double>();
            if (term["word"] == "XX") xx = term["coeff"].get<double>();
        }
        CHECK(ii == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
        CHECK(xx == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    }
}

TEST_CASE("cli compile-verify") {
    const RunResult r = run_cli("compile-verify --input " + data_path("target_fis2.json") +
                                " --deltas 100,1000,10000");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.stdout_text);
    CHECK(doc["lambda_target"].get<double>() == doctest::Approx(-8.0 / 9.0));
    REQUIRE(doc["points"].size() == 3);
    CHECK(doc["points"][0]["error"].get<double>() > doc["points"][1]["error"].get<double>());
    CHECK(doc["points"][1]["error"].get<double>() > doc["points"][2]["error"].get<double>());
    CHECK(doc["exponent"].get<double>() <= -0.25);
}

TEST_CASE("cli compile-verify three-qubit ring") {
    const RunResult r = run_cli("compile-verify --input " + data_path("target_lap3.json") +
                                " --deltas 100,1000,10000");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.stdout_text);
    CHECK(doc["n_modes"] == 18);
    CHECK(doc["k"] == 3);
    CHECK(doc["exponent"].get<double>() <= -0.25);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("spectrum --input " + data_path("bad_syntax.json") + " --k 1").exit_code == 2);
    CHECK(run_cli("spectrum --input " + data_path("too_big.json") + " --k 1").exit_code == 3);
    CHECK(run_cli("spectrum --input " + data_path("fig2_hops.json") +
                  " --k 2 --method iterative --tol 1e-30")
              .exit_code == 4);
    CHECK(run_cli("spectrum --input " + data_path("missing.json") + " --k 1").exit_code == 2);
}

TEST_CASE("cli runs are byte-identical") {
    for (const std::string& args :
         {std::string("homology --input ") + data_path("c5.json") + " --k 2",
          std::string("compile-verify --input ") + data_path("target_lap2.json") +
              " --deltas 100,1000,10000 --seed 7"}) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        CHECK(!a.stdout_text.empty());
    }
}

TEST_CASE("cli output files include plot csv") {
    const std::string json_path = std::string(HARDCORE_TEST_TMP_DIR) + "/verify_out.json";
    const std::string csv_path = std::string(HARDCORE_TEST_TMP_DIR) + "/verify_out.csv";
    const RunResult r = run_cli("compile-verify --input " + data_path("target_lap2.json") +
                                " --deltas 100,1000,10000 --output " + json_path);
    REQUIRE(r.exit_code == 0);
    const std::string json_text = read_file(json_path);
    const std::string csv_text = read_file(csv_path);
    CHECK(nlohmann::json::parse(json_text)["points"].size() == 3);
    CHECK(csv_text.rfind("delta,lambda_sim,lambda_target,offset,error\n", 0) == 0);
    CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 4);
}
