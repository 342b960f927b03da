#pragma once

// Finite-window density functionals: prefix profiles with tail liminf/limsup
// estimates, Schnirelmann and Banach densities, witness tables for the
// syndetic-of-level notions, and the searches built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumlab/lattice.hpp"
#include "sumlab/rational.hpp"

namespace sumlab {

inline constexpr int kDefaultSamples = 1024;
inline const Rational kDefaultTailFraction{1, 2};

struct DensitySample {
  std::int64_t n = 0;
  Rational ratio;
};

struct DensityProfile {
  std::vector<DensitySample> samples;  // strictly increasing n
  Convention convention = Convention::Classical1D;
  Rational tail_fraction = kDefaultTailFraction;
  std::int64_t radius = 0;  // N of the window the profile was taken on
};

struct TailEstimates {
  Rational lower;
  Rational upper;
};

/// Roughly geometric radii in [1, n_max], strictly increasing, always ending at n_max.
std::vector<std::int64_t> geometric_ladder(std::int64_t n_max, int count);

/// |A ∩ window_n| / |window_n| where window_n is [1,n] or [-n,n]^dim.
Rational prefix_ratio(const LatticeSet& a, std::int64_t n);

DensityProfile prefix_profile(const LatticeSet& a, int sample_count = kDefaultSamples,
                              Rational tail_fraction = kDefaultTailFraction);
/// Profile at caller-chosen radii (sorted, deduplicated, clipped to the window).
DensityProfile prefix_profile_at(const LatticeSet& a, std::span<const std::int64_t> radii,
                                 Rational tail_fraction = kDefaultTailFraction);

/// (min, max) of the ratios with n >= tail_fraction * N.
TailEstimates tail_estimates(const DensityProfile& p);

/// min over 1 <= n <= N of |A ∩ [1,n]| / n. Classical windows only.
Rational schnirelmann(const LatticeSet& a);

struct BanachValue {
  std::int64_t n = 0;
  Rational sup_ratio;
};

/// For each n, the largest |A ∩ (x + [-n,n]^dim)| / (2n+1)^dim over centers x
/// whose whole cube lies in the window.
std::vector<BanachValue> banach_profile(const LatticeSet& a, std::span<const std::int64_t> n_values);

struct WitnessEntry {
  std::int64_t m = 0;
  std::int64_t k = 0;
  Rational lower;
  Rational upper;
  Rational strong_upper;
};

struct WitnessTable {
  std::vector<WitnessEntry> entries;  // ordered by m, then k
  std::string source;

  [[nodiscard]] const WitnessEntry& at(std::int64_t m, std::int64_t k) const;
};

/// The witness set erode(dilate(S, m), k).
LatticeSet witness_set(const LatticeSet& s, std::int64_t m, std::int64_t k);

/// Tail estimates of the witness-set profile for every m <= m_max, k <= k_max.
/// The strong estimate is the largest tail ratio along `strong_sequence`
/// (the default profile radii when empty).
WitnessTable witness_table(const LatticeSet& s, std::int64_t m_max, std::int64_t k_max,
                           std::span<const std::int64_t> strong_sequence = {}, std::string source = {},
                           unsigned threads = 1);

enum class EstimateMode { Lower, Upper };

/// Smallest m such that the requested witness estimate is >= level - epsilon
/// for every k <= k_max. Scans m linearly up to m_cap (default N/4 - k_max).
std::optional<std::int64_t> minimal_m_search(const LatticeSet& s, Rational level, Rational epsilon,
                                             std::int64_t k_max, EstimateMode mode,
                                             std::optional<std::int64_t> m_cap = std::nullopt);

enum class SaturationMode { SchnirelmannUnion, BanachDilate };

struct SaturationResult {
  std::int64_t m = 0;
  Rational achieved;  // σ(A ∪ [1,m]) or the Banach value after dilation
  Rational target;    // the bound it was compared against
};

/// Smallest m for which σ(A ∪ [1,m]) >= upper tail estimate - epsilon
/// (SchnirelmannUnion, classical windows), or for which the Banach value of
/// A + [-m,m]^dim at radius n_test exceeds 1 - epsilon (BanachDilate;
/// n_test defaults to N/16).
SaturationResult saturation_search(const LatticeSet& a, Rational epsilon, SaturationMode mode,
                                   std::int64_t n_test = 0);

struct AdaptiveResult {
  Rational lower;       // tail lower estimate of the union of witness sets
  Rational level;
  bool meets_level = false;
};

/// Tail lower density of {n : n + [-f(m), f(m)]^dim ⊆ S + [-m,m]^dim for some m < m_f}.
/// `f` is indexed by m and must be non-decreasing with at least m_f entries.
AdaptiveResult adaptive_gap_check(const LatticeSet& s, std::span<const std::int64_t> f, std::int64_t m_f,
                                  Rational level);

}  // namespace sumlab
