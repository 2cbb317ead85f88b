// Command-line front end: solve | oracle | verify | audit | counterexamples | validate.
//
// Exit codes: 0 success / all pass, 1 findings or I/O failure, 2 validation
// failure, 3 capacity or budget exceeded, 4 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fairdiv/audit.hpp"
#include "fairdiv/catalog.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/exchange.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solver.hpp"

namespace {

using fairdiv::Json;

constexpr const char* kVersion = "0.1.0";

struct ExitCode {
    static constexpr int kOk = 0;
    static constexpr int kFindings = 1;
    static constexpr int kValidation = 2;
    static constexpr int kCapacity = 3;
    static constexpr int kInternal = 4;
};

fairdiv::Instance load_instance(const std::string& path) {
    return fairdiv::instance_from_json(fairdiv::load_json_file(path));
}

// Accepts a rule name, inline JSON, or a path to a rule file.
fairdiv::WelfareFunction parse_rule(const std::string& spec, int max_utility) {
    if (spec == "mwnw" || spec == "mwhw")
        return fairdiv::rule_from_json(Json{{"rule", spec}}, max_utility);
    if (!spec.empty() && spec.front() == '{')
        return fairdiv::rule_from_json(Json::parse(spec), max_utility);
    return fairdiv::rule_from_json(fairdiv::load_json_file(spec), max_utility);
}

// Finite-table rules must cover the largest attainable utility, not just m.
int max_utility_needed(const fairdiv::Instance& inst) {
    std::vector<int> all(inst.num_goods());
    for (int g = 0; g < inst.num_goods(); ++g) all[g] = g;
    long long worst = 0;
    for (int i = 0; i < inst.num_agents(); ++i)
        worst = std::max(worst, inst.agent(i).valuation.value(all));
    return static_cast<int>(worst);
}

void emit(const Json& payload, const std::string& out_path) {
    const std::string text = payload.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw fairdiv::InputError("cannot write " + out_path);
        out << text;
    }
    std::cout << text;
}

Json meta_block() {
    return Json{{"program", "fairdiv"}, {"version", kVersion}};
}

int cmd_solve(const std::string& instance_path, const std::string& rule_spec,
              const std::string& out_path, bool trace, bool meta,
              const std::string& graph_path) {
    const auto inst = load_instance(instance_path);
    const auto rule = parse_rule(rule_spec, max_utility_needed(inst));
    const auto result = fairdiv::solve(inst, rule);

    for (const auto& warning : result.trace.warnings) std::cerr << "warning: " << warning << "\n";
    if (trace) {
        for (const auto& record : result.trace.iterations)
            std::cerr << fairdiv::iteration_record_to_json(inst, record).dump() << "\n";
    }
    if (!graph_path.empty()) {
        const auto graph = fairdiv::ExchangeGraph::build(inst, result.allocation);
        Json edges = Json::array();
        for (const auto& [a, b] : graph.edge_list())
            edges.push_back(Json::array({inst.good_label(a), inst.good_label(b)}));
        std::ofstream out(graph_path);
        if (!out) throw fairdiv::InputError("cannot write " + graph_path);
        out << Json{{"edges", std::move(edges)}}.dump(2) << "\n";
    }

    Json payload;
    payload["allocation"] = fairdiv::allocation_to_json(inst, result.allocation);
    payload["utility_vector"] = result.utilities;
    payload["rule"] = fairdiv::rule_to_json(rule);
    if (meta) payload["meta"] = meta_block();
    emit(payload, out_path);
    return ExitCode::kOk;
}

int cmd_oracle(const std::string& instance_path, const std::string& rule_spec, bool mnw,
               long long budget, const std::string& out_path, bool meta) {
    const auto inst = load_instance(instance_path);
    Json payload;
    if (mnw) {
        payload = fairdiv::mnw_result_to_json(inst, fairdiv::brute_force_mnw(inst, budget));
    } else {
        const auto rule = parse_rule(rule_spec, max_utility_needed(inst));
        payload = fairdiv::oracle_result_to_json(inst, fairdiv::brute_force_opt(inst, rule, budget));
    }
    if (meta) payload["meta"] = meta_block();
    emit(payload, out_path);
    return ExitCode::kOk;
}

int cmd_verify(const std::string& instance_path, const std::string& rule_spec, long long budget) {
    const auto inst = load_instance(instance_path);
    const auto rule = parse_rule(rule_spec, max_utility_needed(inst));
    const auto expected = fairdiv::brute_force_opt(inst, rule, budget);
    const auto got = fairdiv::solve(inst, rule);
    if (got.utilities == expected.vector) {
        std::cout << "verify: OK " << Json(got.utilities).dump() << "\n";
        return ExitCode::kOk;
    }
    std::cout << "verify: MISMATCH solver=" << Json(got.utilities).dump()
              << " oracle=" << Json(expected.vector).dump() << "\n";
    return ExitCode::kFindings;
}

fairdiv::Engine parse_engine(const Json& config) {
    const std::string name = config.value("engine", "solver");
    if (name == "solver") return fairdiv::Engine::Solver;
    if (name == "oracle") return fairdiv::Engine::Oracle;
    throw fairdiv::InputError("unknown engine: " + name);
}

int cmd_audit(const std::string& kind, const std::string& config_path, const std::string& out_path,
              const std::string& engine_flag, long long seed_flag) {
    Json config = config_path.empty() ? Json::object() : fairdiv::load_json_file(config_path);
    if (!engine_flag.empty()) config["engine"] = engine_flag;
    if (seed_flag >= 0) config["seed"] = seed_flag;
    const auto engine = parse_engine(config);
    const long long count = config.value("count", 100);
    auto generator = fairdiv::generator_config_from_json(config);

    fairdiv::AuditVerdict merged;
    merged.property = kind;
    auto fold = [&merged](fairdiv::AuditVerdict&& v) {
        merged.tried += v.tried;
        for (auto& violation : v.violations) merged.violations.push_back(std::move(violation));
    };

    // splitmix64, matching the instance generator.
    std::uint64_t state = generator.seed * 0x9e3779b97f4a7c15ull + 0x1234567890abcdefull;
    auto next_draw = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };

    if (kind == "gsp") {
        if (!config.contains("instance"))
            throw fairdiv::InputError("gsp audits need an \"instance\" in the config");
        const auto inst = fairdiv::instance_from_json(config.at("instance"));
        const auto rule = fairdiv::rule_from_json(config.value("rule", Json{{"rule", "mwnw"}}),
                                                  max_utility_needed(inst));
        const std::string space_name = config.value("space", "binary_additive_all");
        const auto space = space_name == "matroid_all"
                               ? fairdiv::MisreportSpace::MatroidAll
                               : fairdiv::MisreportSpace::BinaryAdditiveAll;
        fold(fairdiv::check_group_strategyproofness(inst, rule, space, engine));
    } else if (config.contains("instance")) {
        const auto inst = fairdiv::instance_from_json(config.at("instance"));
        const auto rule = fairdiv::rule_from_json(config.value("rule", Json{{"rule", "mwnw"}}),
                                                  max_utility_needed(inst));
        if (kind == "resource") {
            const int extra = config.contains("extra_good")
                                  ? inst.good_index(config.at("extra_good").get<std::string>())
                                  : inst.num_goods() - 1;
            fold(fairdiv::check_resource_monotonicity(inst, extra, rule, engine));
        } else if (kind == "population") {
            const int removed = config.value("agent", inst.num_agents()) - 1;
            fold(fairdiv::check_population_monotonicity(inst, removed, rule, engine));
        } else if (kind == "weight") {
            const int agent = config.value("agent", 1) - 1;
            const auto new_weight = fairdiv::parse_rational(config.at("new_weight").get<std::string>());
            fold(fairdiv::check_weight_monotonicity(inst, agent, new_weight, rule, engine));
        } else {
            throw fairdiv::InputError("unknown audit kind: " + kind);
        }
    } else {
        const Json rule_json = config.value("rule", Json{{"rule", "mwnw"}});
        for (long long i = 0; i < count; ++i) {
            auto cfg = generator;
            cfg.seed = generator.seed + static_cast<std::uint64_t>(i);
            const auto inst = fairdiv::random_instance(cfg);
            const auto rule = fairdiv::rule_from_json(rule_json, inst.num_goods());
            if (kind == "resource") {
                fold(fairdiv::check_resource_monotonicity(
                    inst, static_cast<int>(next_draw() % inst.num_goods()), rule, engine));
            } else if (kind == "population") {
                fold(fairdiv::check_population_monotonicity(
                    inst, static_cast<int>(next_draw() % inst.num_agents()), rule, engine));
            } else if (kind == "weight") {
                const int agent = static_cast<int>(next_draw() % inst.num_agents());
                const auto boost = fairdiv::Rational(2 + static_cast<int>(next_draw() % 2));
                fold(fairdiv::check_weight_monotonicity(inst, agent,
                                                        inst.agent(agent).weight * boost, rule,
                                                        engine));
            } else {
                throw fairdiv::InputError("unknown audit kind: " + kind);
            }
        }
    }

    emit(fairdiv::verdict_to_json(merged), out_path);
    return merged.pass() ? ExitCode::kOk : ExitCode::kFindings;
}

int cmd_counterexamples(const std::string& out_path) {
    const auto reports = fairdiv::run_counterexamples();
    Json propositions = Json::array();
    bool all_ok = true;
    for (const auto& r : reports) {
        propositions.push_back({{"name", r.name}, {"reproduced", r.reproduced}, {"detail", r.detail}});
        all_ok = all_ok && r.reproduced;
    }
    emit(Json{{"propositions", std::move(propositions)}, {"all_reproduced", all_ok}}, out_path);
    return all_ok ? ExitCode::kOk : ExitCode::kFindings;
}

int cmd_validate(const std::string& instance_path) {
    const auto inst = load_instance(instance_path);
    Json agents = Json::array();
    bool all_valid = true;
    for (int i = 0; i < inst.num_agents(); ++i) {
        const auto& v = inst.agent(i).valuation;
        if (inst.num_goods() > 16) {
            // Only the constructive matroid kinds can be accepted unchecked.
            const bool constructive = v.is_matroid_family() &&
                                      v.kind() != fairdiv::ValuationKind::Explicit;
            if (!constructive)
                throw fairdiv::CapacityError(
                    "exhaustive matroid validation is capped at 16 goods");
            agents.push_back(Json{{"agent", i + 1},
                                  {"valid", true},
                                  {"violations", Json::array()},
                                  {"note", "constructive kind, trusted above 16 goods"}});
            continue;
        }
        const auto report = fairdiv::validate_matroid_rank(v);
        agents.push_back(fairdiv::validation_report_to_json(inst, i, report));
        all_valid = all_valid && report.valid;
    }
    emit(Json{{"agents", std::move(agents)}, {"valid", all_valid}}, "");
    return all_valid ? ExitCode::kOk : ExitCode::kValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted welfarist allocation of indivisible goods under matroid-rank valuations"};
    app.require_subcommand(1);

    std::string instance_path, rule_spec = "mwnw", out_path, config_path, graph_path, audit_kind;
    long long budget = fairdiv::kDefaultEnumerationBudget;
    bool trace = false, meta = false, mnw = false;

    auto* solve = app.add_subcommand("solve", "Compute an allocation for the given rule");
    solve->add_option("instance", instance_path, "instance JSON file")->required();
    solve->add_option("--rule", rule_spec, "mwnw | mwhw | inline JSON | rule file");
    solve->add_option("--out", out_path, "also write the result here");
    solve->add_option("--export-graph", graph_path, "write the final exchange graph edge list");
    solve->add_flag("--trace", trace, "emit per-good iteration records to stderr");
    solve->add_flag("--meta", meta, "include program metadata in the payload");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum by full enumeration");
    oracle->add_option("instance", instance_path)->required();
    oracle->add_option("--rule", rule_spec);
    oracle->add_flag("--mnw", mnw, "unweighted Nash welfare over any valuation kinds");
    oracle->add_option("--budget", budget, "enumeration budget on (n+1)^m");
    oracle->add_option("--out", out_path);
    oracle->add_flag("--meta", meta);

    auto* verify = app.add_subcommand("verify", "Solver vs oracle utility-vector equality");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("--rule", rule_spec);
    verify->add_option("--budget", budget);

    std::string engine_flag;
    long long seed_flag = -1;
    auto* audit = app.add_subcommand("audit", "Monotonicity / strategyproofness sweeps");
    audit->add_option("kind", audit_kind, "resource | population | weight | gsp")->required();
    audit->add_option("--config", config_path, "audit configuration JSON");
    audit->add_option("--engine", engine_flag, "solver | oracle (overrides the config)");
    audit->add_option("--seed", seed_flag, "generator seed (overrides the config)");
    audit->add_option("--out", out_path);

    auto* counter = app.add_subcommand("counterexamples", "Replay the bundled counterexamples");
    counter->add_option("--out", out_path);

    auto* validate = app.add_subcommand("validate", "Check the matroid axioms per agent");
    validate->add_option("instance", instance_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(instance_path, rule_spec, out_path, trace, meta, graph_path);
        if (oracle->parsed()) return cmd_oracle(instance_path, rule_spec, mnw, budget, out_path, meta);
        if (verify->parsed()) return cmd_verify(instance_path, rule_spec, budget);
        if (audit->parsed())
            return cmd_audit(audit_kind, config_path, out_path, engine_flag, seed_flag);
        if (counter->parsed()) return cmd_counterexamples(out_path);
        if (validate->parsed()) return cmd_validate(instance_path);
    } catch (const fairdiv::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return ExitCode::kCapacity;
    } catch (const fairdiv::ValidationError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return ExitCode::kValidation;
    } catch (const fairdiv::UnsupportedKindError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return ExitCode::kValidation;
    } catch (const fairdiv::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitCode::kFindings;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return ExitCode::kInternal;
    }
    return ExitCode::kInternal;
}
