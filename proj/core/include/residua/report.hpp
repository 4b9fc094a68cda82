#pragma once

#include <string>
#include <vector>

#include "residua/constants.hpp"
#include "residua/group_io.hpp"
#include "residua/res_rad.hpp"
#include "residua/sharpness.hpp"
#include "residua/suites.hpp"

namespace residua {

// Reports render both symbolic and decimal forms plus exact certificates.
Json to_json(const RadicalValue& v, int digits = 12);
Json to_json(const Fraction& f);
Json to_json(const ConstantsReport& r);
Json to_json(const InequalityReport& r);
Json to_json(const ResidualResult& r, const std::string& group_name);
Json to_json(const RadicalResult& r, const std::string& group_name);
Json to_json(const SharpnessReport& r);
Json to_json(const InstanceCheck& c);
Json to_json(const SuiteReport& s);
Json to_json(const Caps& c);

struct RunManifest {
  std::string command;
  std::string cls;
  std::vector<std::string> inputs;
  Caps caps;
  std::vector<std::string> outputs;
  int exit_status = 0;
};

Json to_json(const RunManifest& m);

}  // namespace residua
