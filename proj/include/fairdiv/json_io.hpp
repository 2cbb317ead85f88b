#ifndef FAIRDIV_JSON_IO_HPP_
#define FAIRDIV_JSON_IO_HPP_

#include <json.hpp>

#include <string>

#include "fairdiv/audit.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solver.hpp"
#include "fairdiv/welfare.hpp"

namespace fairdiv {

using Json = nlohmann::json;

Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

Json valuation_to_json(const Valuation& v, const std::vector<std::string>& labels);
Valuation valuation_from_json(const Json& j, const std::vector<std::string>& labels);

Allocation allocation_from_json(const Instance& inst, const Json& j);
Json allocation_to_json(const Instance& inst, const Allocation& alloc);

// {"rule":"mwnw"} | {"rule":"mwhw"} | {"rule":"custom","f":["-inf","0","1/2",...]}
// Finite-table rules must cover utilities up to `max_utility`.
WelfareFunction rule_from_json(const Json& j, int max_utility);
Json rule_to_json(const WelfareFunction& rule);

Json oracle_result_to_json(const Instance& inst, const OracleResult& result);
Json mnw_result_to_json(const Instance& inst, const MnwResult& result);
Json verdict_to_json(const AuditVerdict& verdict);
Json validation_report_to_json(const Instance& inst, int agent, const MatroidValidationReport& report);
Json iteration_record_to_json(const Instance& inst, const IterationRecord& record);

GeneratorConfig generator_config_from_json(const Json& j);

Json load_json_file(const std::string& path);  // InputError on I/O or parse failure

}  // namespace fairdiv

#endif  // FAIRDIV_JSON_IO_HPP_
