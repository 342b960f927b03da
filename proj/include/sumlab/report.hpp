#pragma once

// JSON and CSV renderings of profiles, tables and verdicts. Rationals are
// always written as "p/q" strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "sumlab/density.hpp"
#include "sumlab/rational.hpp"
#include "sumlab/verify.hpp"

namespace sumlab {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit hash as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

Json to_json(const DensityProfile& p);
Json to_json(const WitnessTable& t);
Json to_json(const MannVerdict& v);

/// {check, inputs_digest, holds, lhs, rhs, witness}
Json verdict(std::string_view check, std::string_view inputs_digest, bool holds, const Rational& lhs,
             const Rational& rhs, Json witness = nullptr);

/// "n,ratio" rows followed by "# tail_lower,..." and "# tail_upper,..." lines.
std::string profile_csv(const DensityProfile& p);
/// "m,k,lower,upper,strong" rows.
std::string witness_csv(const WitnessTable& t);

}  // namespace sumlab
