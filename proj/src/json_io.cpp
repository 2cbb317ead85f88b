#include "fairdiv/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("expected a rational as an integer or a \"p/q\" string");
}

std::vector<int> labels_to_indices(const Json& array, const std::vector<std::string>& labels) {
    std::vector<int> out;
    for (const auto& item : array) {
        const std::string label = item.get<std::string>();
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw InputError("unknown good label: " + label);
        out.push_back(static_cast<int>(it - labels.begin()));
    }
    return out;
}

Json indices_to_labels(const std::vector<int>& indices, const std::vector<std::string>& labels) {
    Json out = Json::array();
    for (int g : indices) out.push_back(labels.at(g));
    return out;
}

std::string subset_key(unsigned mask, const std::vector<std::string>& labels) {
    std::string key;
    for (size_t g = 0; g < labels.size(); ++g) {
        if (!(mask & (1u << g))) continue;
        if (!key.empty()) key += ',';
        key += labels[g];
    }
    return key;
}

}  // namespace

Valuation valuation_from_json(const Json& j, const std::vector<std::string>& labels) {
    const int m = static_cast<int>(labels.size());
    const ValuationKind kind = valuation_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
        case ValuationKind::BinaryAdditive:
            return Valuation::binary_additive(m, labels_to_indices(j.at("approved"), labels));
        case ValuationKind::PartitionMatroid: {
            std::vector<PartitionPart> parts;
            for (const auto& part : j.at("parts"))
                parts.push_back({labels_to_indices(part.at("goods"), labels),
                                 part.at("capacity").get<int>()});
            return Valuation::partition_matroid(m, std::move(parts));
        }
        case ValuationKind::GraphicMatroid: {
            const auto& edges = j.at("edges");
            std::vector<std::string> vertices;
            auto vertex_id = [&](const std::string& name) {
                const auto it = std::find(vertices.begin(), vertices.end(), name);
                if (it != vertices.end()) return static_cast<int>(it - vertices.begin());
                vertices.push_back(name);
                return static_cast<int>(vertices.size()) - 1;
            };
            std::vector<std::pair<int, int>> per_good(m, {-1, -1});
            std::vector<char> covered(m, 0);
            for (const auto& [label, endpoints] : edges.items()) {
                const auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end()) throw InputError("unknown good label: " + label);
                if (endpoints.size() != 2) throw InputError("edges need exactly two endpoints");
                const int g = static_cast<int>(it - labels.begin());
                per_good[g] = {vertex_id(endpoints[0].get<std::string>()),
                               vertex_id(endpoints[1].get<std::string>())};
                covered[g] = 1;
            }
            for (int g = 0; g < m; ++g)
                if (!covered[g])
                    throw InputError("graphic matroid is missing an edge for " + labels[g]);
            return Valuation::graphic_matroid(m, std::move(per_good), std::move(vertices));
        }
        case ValuationKind::Explicit: {
            if (m > 12) throw CapacityError("explicit tables are capped at 12 goods");
            std::vector<long long> table(1ull << m, 0);  // unlisted subsets default to 0
            for (const auto& [key, value] : j.at("values").items()) {
                unsigned mask = 0;
                if (!key.empty()) {
                    std::istringstream stream(key);
                    std::string label;
                    while (std::getline(stream, label, ',')) {
                        const auto it = std::find(labels.begin(), labels.end(), label);
                        if (it == labels.end()) throw InputError("unknown good label: " + label);
                        mask |= 1u << (it - labels.begin());
                    }
                }
                table[mask] = value.get<long long>();
            }
            return Valuation::explicit_table(m, std::move(table));
        }
        case ValuationKind::Xos: {
            std::vector<std::vector<long long>> clauses;
            for (const auto& clause : j.at("clauses")) {
                std::vector<long long> coeffs(m, 0);
                for (const auto& [label, value] : clause.items()) {
                    const auto it = std::find(labels.begin(), labels.end(), label);
                    if (it == labels.end()) throw InputError("unknown good label: " + label);
                    coeffs[it - labels.begin()] = value.get<long long>();
                }
                clauses.push_back(std::move(coeffs));
            }
            return Valuation::xos(m, std::move(clauses));
        }
        case ValuationKind::Additive: {
            std::vector<long long> values(m, 0);
            for (const auto& [label, value] : j.at("values").items()) {
                const auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end()) throw InputError("unknown good label: " + label);
                values[it - labels.begin()] = value.get<long long>();
            }
            return Valuation::additive(m, std::move(values));
        }
    }
    throw InputError("unreachable valuation kind");
}

Json valuation_to_json(const Valuation& v, const std::vector<std::string>& labels) {
    Json j;
    j["kind"] = to_string(v.kind());
    switch (v.kind()) {
        case ValuationKind::BinaryAdditive:
            j["approved"] = indices_to_labels(v.approved_goods(), labels);
            break;
        case ValuationKind::PartitionMatroid: {
            Json parts = Json::array();
            for (const auto& part : v.parts()) {
                parts.push_back(
                    {{"goods", indices_to_labels(part.goods, labels)}, {"capacity", part.capacity}});
            }
            j["parts"] = std::move(parts);
            break;
        }
        case ValuationKind::GraphicMatroid: {
            Json edges = Json::object();
            const auto& names = v.graphic_vertex_labels();
            for (size_t g = 0; g < v.graphic_edges().size(); ++g) {
                const auto& [a, b] = v.graphic_edges()[g];
                edges[labels.at(g)] = Json::array({names.at(a), names.at(b)});
            }
            j["edges"] = std::move(edges);
            break;
        }
        case ValuationKind::Explicit: {
            Json values = Json::object();
            const auto& table = v.explicit_values();
            for (unsigned mask = 0; mask < table.size(); ++mask)
                if (table[mask] != 0) values[subset_key(mask, labels)] = table[mask];
            j["values"] = std::move(values);
            break;
        }
        case ValuationKind::Xos: {
            Json clauses = Json::array();
            for (const auto& clause : v.xos_clauses()) {
                Json c = Json::object();
                for (size_t g = 0; g < clause.size(); ++g)
                    if (clause[g] != 0) c[labels[g]] = clause[g];
                clauses.push_back(std::move(c));
            }
            j["clauses"] = std::move(clauses);
            break;
        }
        case ValuationKind::Additive: {
            Json values = Json::object();
            const auto& vals = v.additive_values();
            for (size_t g = 0; g < vals.size(); ++g)
                if (vals[g] != 0) values[labels[g]] = vals[g];
            j["values"] = std::move(values);
            break;
        }
    }
    return j;
}

Instance instance_from_json(const Json& j) {
    std::vector<std::string> labels;
    for (const auto& g : j.at("goods")) labels.push_back(g.get<std::string>());
    std::vector<Agent> agents;
    for (const auto& a : j.at("agents")) {
        Agent agent{a.at("id").get<int>(), rational_from_json(a.at("weight")),
                    valuation_from_json(a.at("valuation"), labels)};
        agents.push_back(std::move(agent));
    }
    return Instance(std::move(labels), std::move(agents));
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["goods"] = inst.good_labels();
    Json agents = Json::array();
    for (int i = 0; i < inst.num_agents(); ++i) {
        const Agent& a = inst.agent(i);
        agents.push_back({{"id", a.id},
                          {"weight", format_rational(a.weight)},
                          {"valuation", valuation_to_json(a.valuation, inst.good_labels())}});
    }
    j["agents"] = std::move(agents);
    return j;
}

Allocation allocation_from_json(const Instance& inst, const Json& j) {
    std::vector<std::vector<int>> bundles(inst.num_agents());
    for (const auto& [id, goods] : j.at("bundles").items()) {
        const int agent = std::stoi(id) - 1;
        if (agent < 0 || agent >= inst.num_agents())
            throw InputError("allocation references unknown agent id " + id);
        bundles[agent] = labels_to_indices(goods, inst.good_labels());
    }
    Allocation alloc(inst.num_agents(), std::move(bundles));
    check_allocation(inst, alloc);
    return alloc;
}

Json allocation_to_json(const Instance& inst, const Allocation& alloc) {
    Json bundles = Json::object();
    for (int i = 0; i < alloc.num_agents(); ++i)
        bundles[std::to_string(i + 1)] = indices_to_labels(alloc.bundle(i), inst.good_labels());
    Json j;
    j["bundles"] = std::move(bundles);
    j["unallocated"] = indices_to_labels(alloc.unallocated(inst.num_goods()), inst.good_labels());
    return j;
}

WelfareFunction rule_from_json(const Json& j, int max_utility) {
    const std::string name = j.at("rule").get<std::string>();
    if (name == "mwnw") return WelfareFunction::mwnw();
    if (name == "mwhw") return WelfareFunction::mwhw(max_utility);
    if (name == "custom") {
        std::vector<std::optional<Rational>> table;
        for (const auto& entry : j.at("f")) {
            if (entry.is_string() && entry.get<std::string>() == "-inf") {
                if (!table.empty()) throw ValidationError("-inf is only allowed at f(0)");
                table.push_back(std::nullopt);
            } else {
                table.push_back(rational_from_json(entry));
            }
        }
        auto rule = WelfareFunction::custom(std::move(table));
        if (rule.domain_max() < max_utility)
            throw CapacityError("custom table covers utilities up to " +
                                std::to_string(rule.domain_max()) + ", need " +
                                std::to_string(max_utility));
        return rule;
    }
    throw InputError("unknown rule: " + name);
}

Json rule_to_json(const WelfareFunction& rule) {
    Json j;
    j["rule"] = rule.name();
    if (rule.kind() == RuleKind::Custom) {
        Json table = Json::array();
        if (rule.f0_neg_inf()) table.push_back("-inf");
        for (long long k = rule.f0_neg_inf() ? 1 : 0; k <= rule.domain_max(); ++k)
            table.push_back(format_rational(rule.f_finite(k)));
        j["f"] = std::move(table);
    }
    return j;
}

Json oracle_result_to_json(const Instance& inst, const OracleResult& result) {
    Json j;
    j["vector"] = result.vector;
    j["witness"] = allocation_to_json(inst, result.witness);
    j["optimal_count"] = result.optimal_count;
    j["enumerated"] = result.enumerated;
    return j;
}

Json mnw_result_to_json(const Instance& inst, const MnwResult& result) {
    Json j;
    j["support_size"] = result.optimum.support_size;
    j["product"] = result.optimum.product.str();
    Json optima = Json::array();
    for (const auto& entry : result.optima)
        optima.push_back(
            {{"vector", entry.vector}, {"witness", allocation_to_json(inst, entry.witness)}});
    j["optima"] = std::move(optima);
    j["enumerated"] = result.enumerated;
    return j;
}

Json verdict_to_json(const AuditVerdict& verdict) {
    Json j;
    j["property"] = verdict.property;
    j["tried"] = verdict.tried;
    j["pass"] = verdict.pass();
    Json violations = Json::array();
    for (const auto& v : verdict.violations) {
        Json agents = Json::array();
        for (int a : v.agents) agents.push_back(a + 1);
        violations.push_back({{"note", v.note},
                              {"agents", std::move(agents)},
                              {"base_instance", instance_to_json(v.base_instance)},
                              {"modified_instance", instance_to_json(v.modified_instance)},
                              {"base_allocation",
                               allocation_to_json(v.base_instance, v.base_allocation)},
                              {"modified_allocation",
                               allocation_to_json(v.modified_instance, v.modified_allocation)}});
    }
    j["violations"] = std::move(violations);
    return j;
}

Json validation_report_to_json(const Instance& inst, int agent,
                               const MatroidValidationReport& report) {
    Json j;
    j["agent"] = agent + 1;
    j["valid"] = report.valid;
    Json violations = Json::array();
    for (const auto& w : report.violations) {
        Json entry;
        entry["axiom"] = w.axiom;
        entry["set_a"] = indices_to_labels(w.set_a, inst.good_labels());
        entry["set_b"] = indices_to_labels(w.set_b, inst.good_labels());
        if (w.good >= 0) entry["good"] = inst.good_label(w.good);
        entry["lhs"] = w.lhs;
        entry["rhs"] = w.rhs;
        violations.push_back(std::move(entry));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json iteration_record_to_json(const Instance& inst, const IterationRecord& record) {
    Json j;
    j["good"] = inst.good_label(record.good);
    j["graph_edges"] = record.graph_edges;
    auto tuple_to_json = [&](const CandidateTuple& t) {
        return Json{{"agent", t.agent + 1},
                    {"path", indices_to_labels(t.path, inst.good_labels())},
                    {"utilities", t.projected}};
    };
    Json candidates = Json::array();
    for (const auto& c : record.candidates) candidates.push_back(tuple_to_json(c));
    j["candidates"] = std::move(candidates);
    if (record.selected) {
        j["selected"] = tuple_to_json(*record.selected);
    } else {
        j["unallocated"] = true;
    }
    j["utilities_after"] = record.utilities_after;
    return j;
}

GeneratorConfig generator_config_from_json(const Json& j) {
    GeneratorConfig config;
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n")) {
        config.n_min = j.at("n").at(0).get<int>();
        config.n_max = j.at("n").at(1).get<int>();
    }
    if (j.contains("m")) {
        config.m_min = j.at("m").at(0).get<int>();
        config.m_max = j.at("m").at(1).get<int>();
    }
    if (j.contains("kinds")) {
        config.kinds.clear();
        for (const auto& k : j.at("kinds"))
            config.kinds.push_back(valuation_kind_from_string(k.get<std::string>()));
    }
    if (j.contains("weights")) {
        config.weight_pool.clear();
        for (const auto& w : j.at("weights")) config.weight_pool.push_back(rational_from_json(w));
    }
    return config;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace fairdiv
