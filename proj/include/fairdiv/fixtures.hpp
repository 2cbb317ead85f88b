#ifndef FAIRDIV_FIXTURES_HPP_
#define FAIRDIV_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv::fixtures {

// Two equal-weight agents, one binary additive and one binary XOS, over ten
// goods. The XOS agent caps at 3 unless her bundle holds both g6 and g10.
Instance xos_pair();
// xos_pair() plus a third agent who approves only g10.
Instance xos_pair_with_third_agent();
// xos_pair() with agent 1 reporting g10 as approved.
Instance xos_pair_misreport();

// Restricted additive tables used by the Nash-welfare counterexamples.
Instance restricted_resource_base();       // 3 agents, 4 goods
Instance restricted_resource_extended();   // fifth good added
Instance restricted_population_base();     // 2 agents, 4 goods
Instance restricted_population_extended(); // third agent added
Instance restricted_sp_truth();            // 2 agents, 3 goods
Instance restricted_sp_lie();              // agent 1 zeroes out g2, g3

// Two equal-weight agents, four goods each valued 1 by both.
Instance apportionment_four_goods();
// Weights 1 and 2, two goods approved by both agents.
Instance weighted_pair();

// Three agents over two goods where a coalition misreport makes one member
// strictly better off and the other no worse: the stronger weak-benefit
// variant of group-strategyproofness fails even here.
Instance weak_benefit_demo();

// Every bundled instance with its canonical fixture name.
std::vector<std::pair<std::string, Instance>> all();

}  // namespace fairdiv::fixtures

#endif  // FAIRDIV_FIXTURES_HPP_
