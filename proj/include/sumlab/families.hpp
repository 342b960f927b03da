#pragma once

// Generators for the explicit one-dimensional constructions: the
// factorial/dyadic pair, the epsilon set, the optimal set C, the scaled
// big pair and the complement of the factorial-block set.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumlab/lattice.hpp"

namespace sumlab {

struct SetPair {
  LatticeSet a;
  LatticeSet b;
};

/// A = ∪ [2^n, 2^n + 2^(n-1)],  B = ∪ [n!, n! + n]  (n >= 1).
SetPair gen_upper_pair(const Window& window);

/// ∪_j ∪_{i<=j} (multiples of i) ∩ [2^j - 2^(j-i), 2^j - 2^(j-i-1)].
LatticeSet gen_epsilon_set(const Window& window);

/// s_1, s_2, ... = 1,2, 1,2,3, 1,2,3,4, ...
std::int64_t optimal_block_length(std::int64_t i);

/// On [i!, (i+1)!): n ∈ C iff n mod 2 s_i < s_i. Needs N <= 11!.
LatticeSet gen_optimal_C(const Window& window);

/// C restricted to [i!, i! + length), re-indexed so that i! sits at cell 1 of
/// a classical window of size `length`. Reaches blocks far beyond any dense window.
LatticeSet gen_optimal_C_segment(std::int64_t i, std::int64_t length);

/// Growth map g(n, p) for rows n = first_n, first_n + 1, ...; row n holds
/// g(n,0) < ... < g(n,n).
struct GrowthMap {
  std::int64_t first_n = 2;
  std::vector<std::vector<std::int64_t>> rows;

  [[nodiscard]] std::int64_t last_n() const { return first_n + static_cast<std::int64_t>(rows.size()) - 1; }
  [[nodiscard]] std::int64_t at(std::int64_t n, std::int64_t p) const;
};

/// Rows {b^4, b^5, b^6} and {b^7, b^8, b^9, b^13}; the designated window is b^13.
GrowthMap default_growth(std::int64_t base);

/// (b^p - 2) / (2 (b^p - 1)), exactly.
boost::multiprecision::cpp_rational big_pair_r(std::int64_t base, std::int64_t p);

/// x ∈ D iff for no p >= 1, x mod b^(2p) >= b^(2p) - b^p. Returned on [1, N].
LatticeSet big_pair_D(std::int64_t base, const Window& window);

/// A from the C'_{n,p} / C''_{n,p} blocks, B = ∪ (g(n,0) + F_n).
SetPair gen_big_pair(std::int64_t base, const GrowthMap& growth, const Window& window);

/// Complement of ∪_{j>=n0} ∪_{x != 0} (j! x + [1, (j-1)!]).
LatticeSet gen_non_pws(std::int64_t n0, const Window& window);

/// Name-value parameters of a family reference.
using FamilyParams = std::map<std::string, std::int64_t, std::less<>>;

struct FamilyInfo {
  std::string_view name;
  bool is_pair;
  std::vector<std::string_view> params;
};

const std::vector<FamilyInfo>& family_catalog();

/// Generates a family by name. Pair families return both members; single
/// families return the set as `a` and an empty `b`. Throws NotFound for an
/// unknown name and InvalidArgument for an unknown parameter.
SetPair generate_family(std::string_view name, const FamilyParams& params, const Window& window);

/// Member "A" or "B" of a pair family, or "" for a single family.
LatticeSet family_member(std::string_view name, const FamilyParams& params, std::string_view member,
                         const Window& window);

}  // namespace sumlab
