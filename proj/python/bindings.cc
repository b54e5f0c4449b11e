#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsgate/anglesolve.h"
#include "bsgate/bsnet.h"
#include "bsgate/errors.h"
#include "bsgate/focksim.h"
#include "bsgate/postselect.h"
#include "bsgate/report.h"
#include "bsgate/run_config.h"

namespace py = pybind11;
using namespace bsgate;

namespace {

GateTarget named_target(const std::string &gate) {
    if (gate == "cnot") return cnot_target();
    if (gate == "swap") return swap_target();
    throw std::invalid_argument("gate must be 'cnot' or 'swap'");
}

RunConfig config_from_text(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(e.what());
    }
    return parse_run_config(doc);
}

}  // namespace

PYBIND11_MODULE(_bsgate, m) {
    m.doc() = "Beam-splitter network gate simulator";
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

    m.def(
        "transfer_matrix",
        [](const std::vector<double> &angles) { return transfer_matrix(staged_network(AngleVector(angles))); },
        py::arg("angles"), "8x8 transfer matrix of the twelve-splitter network.");
    m.def(
        "closed_form_block",
        [](const std::vector<double> &angles) { return closed_form_block(AngleVector(angles)); },
        py::arg("angles"), "Upper-left 4x4 block from the closed-form entries.");
    m.def("orthogonality_residual", [](const TransferMatrix &g) { return orthogonality_residual(g); }, py::arg("g"));
    m.def("target_matrix", [](const std::string &gate) { return named_target(gate).matrix; }, py::arg("gate"));

    m.def("permanent", py::overload_cast<const Eigen::MatrixXcd &>(&permanent), py::arg("matrix"));
    m.def(
        "two_photon_distribution",
        [](const TransferMatrix &g, int k, int l, bool postselect) {
            EventDistribution dist = evolve_two_photon(g, TwoPhotonInput::pair(k, l));
            double success = 1.0;
            if (postselect) {
                PostselectionResult r = apply_postselection(dist, PostselectionRule{});
                dist = r.retained;
                success = r.success_probability;
            }
            std::map<std::string, double> probs;
            for (const auto &[config, amp] : dist.amplitudes) {
                probs[config.label()] = std::norm(amp);
            }
            return py::make_tuple(probs, success);
        },
        py::arg("g"), py::arg("k"), py::arg("l"), py::arg("postselect") = false,
        "Output probabilities by configuration label, and the kept mass.");

    m.def(
        "enumerate_sign_solutions",
        [](const std::string &gate) {
            std::vector<std::array<int, kAngleCount>> out;
            for (const auto &s : enumerate_sign_solutions(named_target(gate))) {
                out.push_back(s.signs);
            }
            return out;
        },
        py::arg("gate"));
    m.def(
        "continuous_angle_search",
        [](const Matrix4 &target, double tolerance, int restarts, std::uint64_t seed) {
            SearchOptions opts;
            opts.restarts = restarts;
            opts.seed = seed;
            SearchResult r = continuous_angle_search(target, tolerance, opts);
            py::dict out;
            out["angles"] = r.angles.values();
            out["residual"] = r.residual;
            out["converged"] = r.converged;
            out["best_so_far"] = r.best_so_far;
            return out;
        },
        py::arg("target"), py::arg("tolerance") = 1e-6, py::arg("restarts") = 16,
        py::arg("seed") = SearchOptions{}.seed);

    m.def(
        "verify",
        [](const std::string &config) {
            VerifyOutcome v = verify_network(config_from_text(config));
            return py::make_tuple(v.passed, dump_json(v.document));
        },
        py::arg("config"), "Config JSON text in; (passed, report JSON text) out.");
    m.def(
        "simulate",
        [](const std::string &config, const std::string &format) {
            nlohmann::json doc = simulate_document(config_from_text(config));
            if (format == "json") return dump_json(doc);
            if (format == "csv") return simulate_csv(doc);
            throw std::invalid_argument("format must be 'json' or 'csv'");
        },
        py::arg("config"), py::arg("format") = "json");
}
