#pragma once

#include <random>
#include <string>
#include <vector>

#include "logicprob/event.hpp"
#include "logicprob/formula.hpp"
#include "logicprob/qnumber.hpp"

namespace logicprob {

// Seeded structure generators shared by the built-in law suites, the
// self-test command and the test suites.

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       int max_depth);

EventExpr random_event(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       int max_depth);

IndexSet random_index_set(std::mt19937_64& rng, int max_depth);

} // namespace logicprob
