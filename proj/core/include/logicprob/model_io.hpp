#pragma once

#include <iosfwd>
#include <string>

#include "logicprob/event.hpp"

namespace logicprob {

// Model files are JSON. Product measure:
//   { "atoms": [ { "name": "A", "p": "1/2" }, ... ] }
// Explicit joint table (unlisted rows weigh 0):
//   { "names": ["A","B"], "joint": [ { "bits": "01", "weight": "1/4" }, ... ] }
// Rationals are strings like "1/3", "2" or exact decimals like "0.25".
ProbModel load_model(const std::string& json_text);
ProbModel load_model_file(const std::string& path); // "-" reads standard input

std::string save_model(const ProbModel& model);

} // namespace logicprob
