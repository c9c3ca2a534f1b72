#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "shiftlab/detect.hpp"
#include "shiftlab/dyn.hpp"
#include "shiftlab/freq.hpp"
#include "shiftlab/gen.hpp"
#include "shiftlab/seqcore.hpp"
#include "shiftlab/serde.hpp"
#include "shiftlab/system.hpp"

namespace py = pybind11;
using namespace shiftlab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "symbolic sequence toolkit: generators, densities, entropy, orbit checks, "
              "and combinatorial pattern detectors";

    // ---- core values ------------------------------------------------------
    py::class_<Word>(m, "Word")
        .def(py::init<std::string_view>())
        .def("at", &Word::at)
        .def("length", &Word::length)
        .def("ones", &Word::ones)
        .def("zeros", &Word::zeros)
        .def("__str__", &Word::str)
        .def("__len__", &Word::length)
        .def("__eq__", [](const Word& a, const Word& b) { return a == b; });

    py::class_<BitWindow>(m, "BitWindow")
        .def(py::init<Index, std::vector<Bit>>())
        .def("lo", &BitWindow::lo)
        .def("hi", &BitWindow::hi)
        .def("size", &BitWindow::size)
        .def("covers", &BitWindow::covers)
        .def("at", &BitWindow::at)
        .def("bits", &BitWindow::bits)
        .def("__str__", &BitWindow::str)
        .def("__eq__", [](const BitWindow& a, const BitWindow& b) { return a == b; });

    py::class_<Source>(m, "Source")
        .def("__call__", [](const Source& s, Index i) { return s(i); })
        .def("window", &Source::window);

    m.def("from_window", &from_window);
    m.def("shift", py::overload_cast<const Source&, Index>(&shift));
    m.def("shift_window", py::overload_cast<const BitWindow&, Index>(&shift));
    m.def("complement", py::overload_cast<const Source&>(&complement));
    m.def("switch_at", py::overload_cast<const Source&, Index>(&switch_at));
    m.def("switch_window_at", py::overload_cast<const BitWindow&, Index>(&switch_at));

    // ---- generators --------------------------------------------------------
    py::enum_<StepPolarity>(m, "StepPolarity")
        .value("OneZero", StepPolarity::OneZero)
        .value("ZeroOne", StepPolarity::ZeroOne);

    m.def("gen_champernowne", &gen_champernowne);
    m.def("gen_pnormal", &gen_pnormal, py::arg("p"), py::arg("seed"));
    m.def("pnormal_uniform", &pnormal_uniform, py::arg("seed"), py::arg("k"));
    m.def("gen_sturmian", &gen_sturmian, py::arg("alpha"), py::arg("rho") = 0.0);
    m.def("gen_periodic", &gen_periodic);
    m.def("gen_step", &gen_step);
    m.def("gen_constant", &gen_constant);
    m.def("parse_source_spec", &parse_source_spec);

    // ---- metric and switch/shift reachability ------------------------------
    py::class_<CantorDistance>(m, "CantorDistance")
        .def_readonly("t", &CantorDistance::t)
        .def("agrees_to_window", &CantorDistance::agrees_to_window)
        .def("value", &CantorDistance::value);

    m.def("cantor_distance", &cantor_distance, py::arg("x"), py::arg("y"), py::arg("L"));
    m.def("cylinder_contains", &cylinder_contains);

    py::enum_<SwMove::Kind>(m, "SwMoveKind")
        .value("Shift", SwMove::Kind::Shift)
        .value("Switch", SwMove::Kind::Switch);

    py::class_<SwMove>(m, "SwMove")
        .def_readonly("kind", &SwMove::kind)
        .def_readonly("param", &SwMove::param);

    py::enum_<SwReachStatus>(m, "SwReachStatus")
        .value("Reached", SwReachStatus::Reached)
        .value("BudgetExhausted", SwReachStatus::BudgetExhausted)
        .value("Infeasible", SwReachStatus::Infeasible);

    py::class_<SwReachResult>(m, "SwReachResult")
        .def_readonly("status", &SwReachResult::status)
        .def_readonly("moves", &SwReachResult::moves)
        .def_readonly("expanded", &SwReachResult::expanded);

    m.def("sw_reach", &sw_reach, py::arg("start"), py::arg("target"), py::arg("max_steps"));
    m.def("apply_moves", &apply_moves);
    m.def("closure_contains", &closure_contains, py::arg("J"), py::arg("x"), py::arg("L"),
          py::arg("scan_window"));

    // ---- systems ------------------------------------------------------------
    py::class_<ShiftOrbitSystem>(m, "ShiftOrbitSystem")
        .def(py::init<>())
        .def("register_set", &ShiftOrbitSystem::register_set)
        .def("register_anchor", &ShiftOrbitSystem::register_anchor)
        .def("set", &ShiftOrbitSystem::set)
        .def("has_set", &ShiftOrbitSystem::has_set)
        .def("anchor", &ShiftOrbitSystem::anchor)
        .def("set_names",
             [](const ShiftOrbitSystem& s) {
                 std::vector<std::string> names;
                 for (const auto& [name, src] : s.sets()) names.push_back(name);
                 return names;
             })
        .def("anchors", [](const ShiftOrbitSystem& s) { return s.anchors(); })
        .def_static("successor", &ShiftOrbitSystem::successor);

    py::class_<FinitePermSystem>(m, "FinitePermSystem")
        .def(py::init<std::vector<int>, std::vector<double>, bool>(), py::arg("perm"),
             py::arg("weights"), py::arg("invariant_weights"))
        .def("register_set", &FinitePermSystem::register_set);

    m.def("cesaro_weights", &cesaro_weights);
    m.def("parse_zshift_system", &parse_zshift_system);
    m.def("parse_finite_system", &parse_finite_system);

    py::class_<RadoSystem>(m, "RadoSystem")
        .def_readonly("system", &RadoSystem::system)
        .def_readonly("universal", &RadoSystem::universal)
        .def_readonly("warning", &RadoSystem::warning);

    m.def("rado_cayley", &rado_cayley, py::arg("S"), py::arg("anchors"),
          py::arg("universality_bound") = 6, py::arg("scan") = 20000);

    // ---- frequency / measure ------------------------------------------------
    py::class_<FrequencyEstimate>(m, "FrequencyEstimate")
        .def_readonly("lower", &FrequencyEstimate::lower)
        .def_readonly("point", &FrequencyEstimate::point)
        .def_readonly("upper", &FrequencyEstimate::upper)
        .def_readonly("windowRadius", &FrequencyEstimate::windowRadius);

    m.def("default_tolerance", &default_tolerance);
    m.def("density", &density, py::arg("J"), py::arg("N"));
    m.def("window_density", &window_density);

    py::class_<OccurrenceResult>(m, "OccurrenceResult")
        .def_readonly("positions", &OccurrenceResult::positions)
        .def_readonly("estimate", &OccurrenceResult::estimate);

    m.def("occurrences",
          py::overload_cast<const Word&, const Source&, Index>(&occurrences), py::arg("W"),
          py::arg("J"), py::arg("N"));
    m.def("window_occurrences", py::overload_cast<const Word&, const BitWindow&>(&occurrences),
          py::arg("W"), py::arg("w"));
    m.def("intersect_shifts", &intersect_shifts, py::arg("W"), py::arg("J"), py::arg("N"));

    py::class_<WidenessReport>(m, "WidenessReport")
        .def_readonly("epsilon", &WidenessReport::epsilon)
        .def_readonly("maxShift", &WidenessReport::maxShift)
        .def_readonly("perShiftGap", &WidenessReport::perShiftGap)
        .def_readonly("verdict", &WidenessReport::verdict);

    m.def("epsilon_wide", &epsilon_wide, py::arg("J"), py::arg("epsilon"), py::arg("maxShift"),
          py::arg("N"), py::arg("tolerance") = std::nullopt);

    m.def("bernoulli_cylinder", &bernoulli_cylinder, py::arg("p"), py::arg("W"));
    m.def("frequency_measure", &frequency_measure, py::arg("sys"), py::arg("point"),
          py::arg("setName"), py::arg("N"));

    py::enum_<AvgMembership>(m, "AvgMembership")
        .value("In", AvgMembership::In)
        .value("Out", AvgMembership::Out)
        .value("Undetermined", AvgMembership::Undetermined);

    m.def("avg_membership", &avg_membership, py::arg("failures"), py::arg("N"),
          py::arg("tailGuard"));
    m.def("malg_distance", &malg_distance, py::arg("sys"), py::arg("A"), py::arg("B"),
          py::arg("point"), py::arg("N"));

    py::class_<SeparationReport>(m, "SeparationReport")
        .def_readonly("pairwiseDistances", &SeparationReport::pairwiseDistances)
        .def_readonly("boundedAwayAt", &SeparationReport::boundedAwayAt)
        .def_readonly("netSizeAt", &SeparationReport::netSizeAt);

    m.def("separation_report", &separation_report, py::arg("setNames"), py::arg("sys"),
          py::arg("point"), py::arg("N"), py::arg("epsilons"));

    // ---- dynamics -------------------------------------------------------------
    m.def("xi", &xi, py::arg("sys"), py::arg("point"), py::arg("setName"), py::arg("N"));
    m.def("xi_source", &xi_source, py::arg("sys"), py::arg("point"), py::arg("setName"));

    py::class_<RhoLanguage>(m, "RhoLanguage")
        .def_property_readonly("words",
                               [](const RhoLanguage& r) {
                                   std::vector<std::string> out;
                                   for (const Word& w : r.words) out.push_back(w.str());
                                   return out;
                               })
        .def_readonly("denseProxy", &RhoLanguage::denseProxy);

    m.def(
        "rho_language",
        [](const ShiftOrbitSystem& sys, const std::vector<std::pair<Index, std::string>>& inputs,
           Index L, Index N) {
            std::vector<RhoInput> rin;
            for (const auto& [point, name] : inputs) rin.push_back({&sys, point, name});
            return rho_language(rin, L, N);
        },
        py::arg("sys"), py::arg("inputs"), py::arg("L"), py::arg("N"));

    m.def("pushforward_cylinder", &pushforward_cylinder, py::arg("sys"), py::arg("point"),
          py::arg("setName"), py::arg("W"), py::arg("N"));

    py::class_<CompactnessReport::SetResult>(m, "CompactnessSetResult")
        .def_readonly("name", &CompactnessReport::SetResult::name)
        .def_readonly("bestN", &CompactnessReport::SetResult::bestN)
        .def_readonly("symdiff", &CompactnessReport::SetResult::symdiff);

    py::class_<CompactnessReport>(m, "CompactnessReport")
        .def_readonly("epsilon", &CompactnessReport::epsilon)
        .def_readonly("maxN", &CompactnessReport::maxN)
        .def_readonly("perSet", &CompactnessReport::perSet)
        .def_readonly("verdict", &CompactnessReport::verdict);

    m.def("compact_check", &compact_check, py::arg("sys"), py::arg("point"), py::arg("setNames"),
          py::arg("epsilon"), py::arg("maxN"), py::arg("N"));

    py::class_<EntropyEstimate>(m, "EntropyEstimate")
        .def_readonly("blockLength", &EntropyEstimate::blockLength)
        .def_readonly("blockEntropy", &EntropyEstimate::blockEntropy)
        .def_readonly("rate", &EntropyEstimate::rate)
        .def_readonly("distinctBlocks", &EntropyEstimate::distinctBlocks);

    m.def("block_entropy", py::overload_cast<const Source&, Index, Index>(&block_entropy),
          py::arg("J"), py::arg("n"), py::arg("N"));
    m.def("window_block_entropy", py::overload_cast<const BitWindow&, Index>(&block_entropy),
          py::arg("w"), py::arg("n"));
    m.def("partition_entropy", &partition_entropy);
    m.def("finite_system_entropy", &finite_system_entropy, py::arg("sys"),
          py::arg("partitionNames"), py::arg("n"));

    // ---- detectors ---------------------------------------------------------------
    py::class_<RelationMatrix>(m, "RelationMatrix")
        .def(py::init<int, int>())
        .def(py::init<int, int, std::vector<Bit>>())
        .def("rows", &RelationMatrix::rows)
        .def("cols", &RelationMatrix::cols)
        .def("at", &RelationMatrix::at)
        .def("set", &RelationMatrix::set)
        .def("__eq__",
             [](const RelationMatrix& a, const RelationMatrix& b) { return a == b; });

    m.def("toeplitz_matrix", &toeplitz_matrix, py::arg("J"), py::arg("r"), py::arg("c"));

    py::class_<IPWitness>(m, "IPWitness")
        .def_readonly("rowSet", &IPWitness::rowSet)
        .def_readonly("selectors", &IPWitness::selectors);

    py::class_<OPWitness>(m, "OPWitness")
        .def_readonly("rowSeq", &OPWitness::rowSeq)
        .def_readonly("colSeq", &OPWitness::colSeq);

    py::class_<SOPWitness>(m, "SOPWitness").def_readonly("colSeq", &SOPWitness::colSeq);

    m.def("verify_ip", &verify_ip);
    m.def("verify_op", &verify_op);
    m.def("verify_sop", &verify_sop);
    m.def("ip_witness", &ip_witness, py::arg("M"), py::arg("n"));
    m.def("op_witness", &op_witness, py::arg("M"), py::arg("n"));
    m.def("sop_witness", &sop_witness, py::arg("M"), py::arg("k"));

    py::enum_<ShelahResult::Branch>(m, "ShelahBranch")
        .value("IP", ShelahResult::Branch::IP)
        .value("SOP", ShelahResult::Branch::SOP);

    py::class_<ShelahResult>(m, "ShelahResult")
        .def_readonly("branch", &ShelahResult::branch)
        .def_readonly("ip", &ShelahResult::ip)
        .def_readonly("sop", &ShelahResult::sop);

    m.def("shelah_decompose", &shelah_decompose, py::arg("M"), py::arg("opw"), py::arg("ipSize"),
          py::arg("sopLen"));

    py::enum_<SwMoveRef::Kind>(m, "SwMoveRefKind")
        .value("Switch", SwMoveRef::Kind::Switch)
        .value("Shift", SwMoveRef::Kind::Shift);

    py::class_<SwMoveRef>(m, "SwMoveRef")
        .def_readonly("kind", &SwMoveRef::kind)
        .def_readonly("param", &SwMoveRef::param);

    py::enum_<SwClosedReport::Verdict>(m, "SwClosedVerdict")
        .value("Closed", SwClosedReport::Verdict::Closed)
        .value("Counterexample", SwClosedReport::Verdict::Counterexample)
        .value("BudgetExhausted", SwClosedReport::Verdict::BudgetExhausted);

    py::class_<SwClosedReport>(m, "SwClosedReport")
        .def_readonly("verdict", &SwClosedReport::verdict)
        .def_readonly("member", &SwClosedReport::member)
        .def_readonly("move", &SwClosedReport::move)
        .def_readonly("result", &SwClosedReport::result)
        .def_readonly("edge_artifact", &SwClosedReport::edge_artifact)
        .def_readonly("checked", &SwClosedReport::checked);

    m.def("sw_closed_check", &sw_closed_check, py::arg("windows"), py::arg("budget"));

    py::class_<SopImageReport>(m, "SopImageReport")
        .def_readonly("containment", &SopImageReport::containment)
        .def_readonly("strictness", &SopImageReport::strictness)
        .def_readonly("shadow", &SopImageReport::shadow)
        .def_readonly("violation", &SopImageReport::violation);

    m.def("sop_image_check", &sop_image_check, py::arg("sys"), py::arg("setName"),
          py::arg("points"), py::arg("N"));
}
