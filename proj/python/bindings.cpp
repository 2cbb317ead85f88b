// Python bindings: thin JSON-string shims over the core operations. The
// package-level __init__.py converts to and from dicts.

#include <pybind11/pybind11.h>

#include <string>

#include "fairdiv/audit.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solver.hpp"

namespace py = pybind11;

namespace {

using fairdiv::Json;

fairdiv::Instance parse_instance(const std::string& text) {
    return fairdiv::instance_from_json(Json::parse(text));
}

fairdiv::WelfareFunction parse_rule(const std::string& text, const fairdiv::Instance& inst) {
    std::vector<int> all(inst.num_goods());
    for (int g = 0; g < inst.num_goods(); ++g) all[g] = g;
    long long worst = 0;
    for (int i = 0; i < inst.num_agents(); ++i)
        worst = std::max(worst, inst.agent(i).valuation.value(all));
    return fairdiv::rule_from_json(Json::parse(text), static_cast<int>(worst));
}

fairdiv::Engine parse_engine(const std::string& name) {
    if (name == "solver") return fairdiv::Engine::Solver;
    if (name == "oracle") return fairdiv::Engine::Oracle;
    throw fairdiv::InputError("unknown engine: " + name);
}

std::string solve_json(const std::string& instance_text, const std::string& rule_text,
                       bool with_trace) {
    const auto inst = parse_instance(instance_text);
    const auto rule = parse_rule(rule_text, inst);
    const auto result = fairdiv::solve(inst, rule);
    Json payload;
    payload["allocation"] = fairdiv::allocation_to_json(inst, result.allocation);
    payload["utility_vector"] = result.utilities;
    payload["warnings"] = result.trace.warnings;
    if (with_trace) {
        Json records = Json::array();
        for (const auto& record : result.trace.iterations)
            records.push_back(fairdiv::iteration_record_to_json(inst, record));
        payload["trace"] = std::move(records);
    }
    return payload.dump();
}

std::string oracle_json(const std::string& instance_text, const std::string& rule_text,
                        long long budget) {
    const auto inst = parse_instance(instance_text);
    const auto rule = parse_rule(rule_text, inst);
    return fairdiv::oracle_result_to_json(inst, fairdiv::brute_force_opt(inst, rule, budget)).dump();
}

std::string mnw_json(const std::string& instance_text, long long budget) {
    const auto inst = parse_instance(instance_text);
    return fairdiv::mnw_result_to_json(inst, fairdiv::brute_force_mnw(inst, budget)).dump();
}

std::string verify_json(const std::string& instance_text, const std::string& rule_text,
                        long long budget) {
    const auto inst = parse_instance(instance_text);
    const auto rule = parse_rule(rule_text, inst);
    const auto expected = fairdiv::brute_force_opt(inst, rule, budget);
    const auto got = fairdiv::solve(inst, rule);
    return Json{{"match", got.utilities == expected.vector},
                {"solver", got.utilities},
                {"oracle", expected.vector}}
        .dump();
}

std::string validate_json(const std::string& instance_text) {
    const auto inst = parse_instance(instance_text);
    Json agents = Json::array();
    bool all_valid = true;
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto report = fairdiv::validate_matroid_rank(inst.agent(i).valuation);
        agents.push_back(fairdiv::validation_report_to_json(inst, i, report));
        all_valid = all_valid && report.valid;
    }
    return Json{{"agents", std::move(agents)}, {"valid", all_valid}}.dump();
}

std::string counterexamples_json() {
    Json propositions = Json::array();
    bool all_ok = true;
    for (const auto& r : fairdiv::run_counterexamples()) {
        propositions.push_back({{"name", r.name}, {"reproduced", r.reproduced}, {"detail", r.detail}});
        all_ok = all_ok && r.reproduced;
    }
    return Json{{"propositions", std::move(propositions)}, {"all_reproduced", all_ok}}.dump();
}

std::string check_resource_json(const std::string& instance_text, const std::string& extra_label,
                                const std::string& rule_text, const std::string& engine) {
    const auto inst = parse_instance(instance_text);
    const auto verdict = fairdiv::check_resource_monotonicity(
        inst, inst.good_index(extra_label), parse_rule(rule_text, inst), parse_engine(engine));
    return fairdiv::verdict_to_json(verdict).dump();
}

std::string check_population_json(const std::string& instance_text, int removed_id,
                                  const std::string& rule_text, const std::string& engine) {
    const auto inst = parse_instance(instance_text);
    const auto verdict = fairdiv::check_population_monotonicity(
        inst, removed_id - 1, parse_rule(rule_text, inst), parse_engine(engine));
    return fairdiv::verdict_to_json(verdict).dump();
}

std::string check_weight_json(const std::string& instance_text, int agent_id,
                              const std::string& new_weight, const std::string& rule_text,
                              const std::string& engine) {
    const auto inst = parse_instance(instance_text);
    const auto verdict = fairdiv::check_weight_monotonicity(
        inst, agent_id - 1, fairdiv::parse_rational(new_weight), parse_rule(rule_text, inst),
        parse_engine(engine));
    return fairdiv::verdict_to_json(verdict).dump();
}

std::string check_gsp_json(const std::string& instance_text, const std::string& rule_text,
                           const std::string& space, const std::string& engine) {
    const auto inst = parse_instance(instance_text);
    const auto misreports = space == "matroid_all" ? fairdiv::MisreportSpace::MatroidAll
                                                   : fairdiv::MisreportSpace::BinaryAdditiveAll;
    const auto verdict = fairdiv::check_group_strategyproofness(
        inst, parse_rule(rule_text, inst), misreports, parse_engine(engine));
    return fairdiv::verdict_to_json(verdict).dump();
}

std::string random_instance_json(const std::string& config_text) {
    const auto config = fairdiv::generator_config_from_json(Json::parse(config_text));
    return fairdiv::instance_to_json(fairdiv::random_instance(config)).dump();
}

std::string fixtures_json() {
    Json out = Json::object();
    for (const auto& [name, inst] : fairdiv::fixtures::all())
        out[name] = fairdiv::instance_to_json(inst);
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact weighted welfarist allocation under matroid-rank valuations";

    py::register_exception<fairdiv::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<fairdiv::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<fairdiv::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<fairdiv::UnsupportedKindError>(m, "UnsupportedKindError", PyExc_ValueError);
    py::register_exception<fairdiv::CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<fairdiv::PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    m.def("solve_json", &solve_json, py::arg("instance"), py::arg("rule"),
          py::arg("with_trace") = false);
    m.def("oracle_json", &oracle_json, py::arg("instance"), py::arg("rule"),
          py::arg("budget") = fairdiv::kDefaultEnumerationBudget);
    m.def("mnw_json", &mnw_json, py::arg("instance"),
          py::arg("budget") = fairdiv::kDefaultEnumerationBudget);
    m.def("verify_json", &verify_json, py::arg("instance"), py::arg("rule"),
          py::arg("budget") = fairdiv::kDefaultEnumerationBudget);
    m.def("validate_json", &validate_json, py::arg("instance"));
    m.def("counterexamples_json", &counterexamples_json);
    m.def("check_resource_json", &check_resource_json, py::arg("instance"), py::arg("extra_good"),
          py::arg("rule"), py::arg("engine") = "solver");
    m.def("check_population_json", &check_population_json, py::arg("instance"),
          py::arg("removed_agent"), py::arg("rule"), py::arg("engine") = "solver");
    m.def("check_weight_json", &check_weight_json, py::arg("instance"), py::arg("agent"),
          py::arg("new_weight"), py::arg("rule"), py::arg("engine") = "solver");
    m.def("check_gsp_json", &check_gsp_json, py::arg("instance"), py::arg("rule"),
          py::arg("space") = "binary_additive_all", py::arg("engine") = "solver");
    m.def("random_instance_json", &random_instance_json, py::arg("config"));
    m.def("fixtures_json", &fixtures_json);

    m.attr("__version__") = "0.1.0";
}
