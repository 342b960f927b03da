#include "sumlab/report.hpp"

#include <cstdio>

namespace sumlab {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const DensityProfile& p) {
  Json samples = Json::array();
  for (const auto& s : p.samples) samples.push_back({{"n", s.n}, {"ratio", to_string(s.ratio)}});
  const auto tail = tail_estimates(p);
  return {{"convention", std::string(to_string(p.convention))},
          {"radius", p.radius},
          {"tail_fraction", to_string(p.tail_fraction)},
          {"tail_lower", to_string(tail.lower)},
          {"tail_upper", to_string(tail.upper)},
          {"samples", samples}};
}

Json to_json(const WitnessTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    entries.push_back({{"m", e.m},
                       {"k", e.k},
                       {"lower_est", to_string(e.lower)},
                       {"upper_est", to_string(e.upper)},
                       {"strong_upper_est", to_string(e.strong_upper)}});
  }
  return {{"source", t.source}, {"entries", entries}};
}

Json to_json(const MannVerdict& v) {
  Json j = {{"sigma_a", to_string(v.sigma_a)},
            {"sigma_b", to_string(v.sigma_b)},
            {"sigma_sum", to_string(v.sigma_sum)},
            {"bound", to_string(v.bound)},
            {"holds", v.holds}};
  j["first_violation"] = v.first_violation ? Json(*v.first_violation) : Json(nullptr);
  return j;
}

Json verdict(std::string_view check, std::string_view inputs_digest, bool holds, const Rational& lhs,
             const Rational& rhs, Json witness) {
  return {{"check", std::string(check)},
          {"inputs_digest", std::string(inputs_digest)},
          {"holds", holds},
          {"lhs", to_string(lhs)},
          {"rhs", to_string(rhs)},
          {"witness", std::move(witness)}};
}

std::string profile_csv(const DensityProfile& p) {
  std::string out = "n,ratio\n";
  for (const auto& s : p.samples) out += std::to_string(s.n) + "," + to_string(s.ratio) + "\n";
  const auto tail = tail_estimates(p);
  out += "# tail_lower," + to_string(tail.lower) + "," + std::to_string(to_double(tail.lower)) + "\n";
  out += "# tail_upper," + to_string(tail.upper) + "," + std::to_string(to_double(tail.upper)) + "\n";
  return out;
}

std::string witness_csv(const WitnessTable& t) {
  std::string out = "m,k,lower,upper,strong\n";
  for (const auto& e : t.entries) {
    out += std::to_string(e.m) + "," + std::to_string(e.k) + "," + to_string(e.lower) + "," + to_string(e.upper) +
           "," + to_string(e.strong_upper) + "\n";
  }
  return out;
}

}  // namespace sumlab
