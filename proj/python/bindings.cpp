#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "condorcet/bayesvote.hpp"
#include "condorcet/exactprob.hpp"
#include "condorcet/simkit.hpp"

namespace py = pybind11;
using namespace condorcet;

namespace {

VoteVector to_votes(const std::vector<int>& votes) { return VoteVector(votes); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Majority-vote correctness probabilities for independent binary classifiers";

    static py::exception<HypothesisViolation> hypothesis(m, "HypothesisViolation", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceGuardError>(m, "ResourceGuardError", PyExc_OverflowError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HypothesisViolation& e) {
            py::set_error(hypothesis, e.what());
        }
    });

    py::enum_<Method>(m, "Method")
        .value("Exact", Method::Exact)
        .value("Recursive", Method::Recursive)
        .value("ChebyshevBound", Method::ChebyshevBound)
        .value("SeriesPartial", Method::SeriesPartial)
        .value("MonteCarlo", Method::MonteCarlo)
        .value("BruteForce", Method::BruteForce);

    py::class_<EnsembleConfig>(m, "EnsembleConfig")
        .def(py::init<std::int64_t, double>(), py::arg("n"), py::arg("p"))
        .def_property_readonly("n", &EnsembleConfig::n)
        .def_property_readonly("p", &EnsembleConfig::p)
        .def_property_readonly("m", &EnsembleConfig::m)
        .def("__repr__", [](const EnsembleConfig& c) {
            return "EnsembleConfig(n=" + std::to_string(c.n()) + ", p=" + py::repr(py::float_(c.p())).cast<std::string>() + ")";
        });

    py::class_<CorrectnessProbability>(m, "CorrectnessProbability")
        .def_readonly("value", &CorrectnessProbability::value)
        .def_readonly("complement", &CorrectnessProbability::complement)
        .def_readonly("method", &CorrectnessProbability::method)
        .def_readonly("clamped", &CorrectnessProbability::clamped)
        .def("__float__", [](const CorrectnessProbability& c) { return c.value; });

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("lower", &BoundResult::lower)
        .def_readonly("alpha", &BoundResult::alpha)
        .def_readonly("n", &BoundResult::n)
        .def_readonly("mean", &BoundResult::mean)
        .def_readonly("variance", &BoundResult::variance);

    py::class_<SeriesEvaluation>(m, "SeriesEvaluation")
        .def_readonly("partial_sum", &SeriesEvaluation::partial_sum)
        .def_readonly("series_sum", &SeriesEvaluation::series_sum)
        .def_readonly("terms_used", &SeriesEvaluation::terms_used)
        .def_readonly("tail_bound", &SeriesEvaluation::tail_bound)
        .def_readonly("target", &SeriesEvaluation::target);

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("config", &SimulationReport::config)
        .def_readonly("trials", &SimulationReport::trials)
        .def_readonly("successes", &SimulationReport::successes)
        .def_readonly("estimate", &SimulationReport::estimate)
        .def_readonly("ci_low", &SimulationReport::ci_low)
        .def_readonly("ci_high", &SimulationReport::ci_high)
        .def_readonly("confidence_z", &SimulationReport::confidence_z)
        .def_readonly("seed", &SimulationReport::seed);

    m.def("log_binomial", &log_binomial, py::arg("n"), py::arg("k"));
    m.def("exact_majority_prob", [](std::int64_t n, double p) { return exact_majority_prob({n, p}); },
          py::arg("n"), py::arg("p"));
    m.def("recursive_majority_prob", [](std::int64_t n, double p) { return recursive_majority_prob({n, p}); },
          py::arg("n"), py::arg("p"));
    m.def("brute_force_majority_prob", [](std::int64_t n, double p) { return brute_force_majority_prob({n, p}); },
          py::arg("n"), py::arg("p"));
    m.def("recursion_delta", [](std::int64_t n, double p) { return recursion_delta({n, p}); }, py::arg("n"),
          py::arg("p"));
    m.def("chebyshev_lower_bound", [](std::int64_t n, double p) { return chebyshev_lower_bound({n, p}); },
          py::arg("n"), py::arg("p"));
    m.def("lemma1_partial_sum", &lemma1_partial_sum, py::arg("p"), py::arg("tolerance") = 1e-9);

    m.def("wilson_interval",
          [](std::int64_t successes, std::int64_t trials, double z) {
              const WilsonInterval ci = wilson_interval(successes, trials, z);
              return py::make_tuple(ci.low, ci.high);
          },
          py::arg("successes"), py::arg("trials"), py::arg("z") = kDefaultConfidenceZ);
    m.def("simulate_ensemble",
          [](std::int64_t n, double p, std::int64_t trials, std::uint64_t seed, double z) {
              py::gil_scoped_release release;
              return simulate_ensemble({n, p}, trials, seed, z);
          },
          py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed"), py::arg("z") = kDefaultConfidenceZ);

    m.def("tally", [](const std::vector<int>& v) { return tally(to_votes(v)); }, py::arg("votes"));
    m.def("majority_decide", [](const std::vector<int>& v) { return to_int(majority_decide(to_votes(v))); },
          py::arg("votes"));
    m.def("llr", [](const std::vector<int>& v, double p) { return llr(to_votes(v), p); }, py::arg("votes"),
          py::arg("p"));
    m.def("map_decide",
          [](const std::vector<int>& v, double p, double prior_pos) {
              const Decision d = map_decide(to_votes(v), p, PriorPair(prior_pos, 1.0 - prior_pos));
              return py::make_tuple(to_int(d.label), d.tie);
          },
          py::arg("votes"), py::arg("p"), py::arg("prior_pos") = 0.5,
          "Returns (label, tie).");
    m.def("weighted_majority_decide",
          [](const std::vector<int>& v, const std::vector<double>& accuracies) {
              const Decision d = weighted_majority_decide(to_votes(v), accuracies);
              return py::make_tuple(to_int(d.label), d.tie);
          },
          py::arg("votes"), py::arg("accuracies"), "Returns (label, tie).");
}
