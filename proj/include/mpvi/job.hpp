#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "mpvi/formal.hpp"
#include "mpvi/residue.hpp"

namespace mpvi {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

struct JobOptions {
  long truncation = 0;  // 0 selects 4 n q
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  long bound = 3;
};

// Commands: edges, classes, pv, delta, generic-closed-form, formal, poles,
// ndpole, witness-search, positive-a, check.
Json run_job(const std::string& command, const Json& job, const JobOptions& options);

// Error document for a failed job.
Json error_document(const std::string& command, const Json& job, const JobOptions& options,
                    const std::string& kind, const std::string& message, const std::string& subject);

Arrangement arrangement_from_json(const Json& job);
ExponentVector exponents_from_json(const Json& values);

Json to_json(const Integer& value);
Json to_json(const Rational& value);
Json to_json(const LaurentPoly& poly);  // [[exponent, coefficient], ...]
Json to_json(const PuiseuxRational& value);
PuiseuxRational puiseux_from_json(const Json& doc);

}  // namespace mpvi
