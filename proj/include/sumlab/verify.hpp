#pragma once

// Executable checks: Mann's inequality for Schnirelmann density, the
// covering-multiplicity bound, greedy Besicovitch cube selection, and the
// two-scale density-point and syndetic-point experiments.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/lattice.hpp"
#include "sumlab/rational.hpp"

namespace sumlab {

// ---------------------------------------------------------------------------
// Mann

/// σ((A ∪ {0}) + (B ∪ {0})) on [1, N].
Rational mann_sigma_sum(const LatticeSet& a, const LatticeSet& b);

struct MannVerdict {
  Rational sigma_a;
  Rational sigma_b;
  Rational sigma_sum;
  Rational bound;  // min(σA + σB, 1)
  bool holds = true;
  std::optional<std::int64_t> first_violation;  // smallest n with |S ∩ [1,n]| < bound * n
};

MannVerdict mann_check(const LatticeSet& a, const LatticeSet& b);

struct OracleCount {
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
};

/// Every pair of subsets of [1, n], n <= 14.
OracleCount mann_exhaustive(int n, unsigned threads = 1);

/// `count` random pairs on [1, n] with membership probability drawn per pair.
OracleCount mann_random(std::int64_t n, std::uint64_t count, std::uint64_t seed, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Covering bound

struct CoverInstance {
  int dim = 1;
  std::vector<Point> ground;
  std::vector<std::vector<Point>> subsets;
  std::int64_t mult_bound = 1;
  Rational threshold;
  std::vector<Point> target;
};

class HypothesisFailed : public Error {
 public:
  enum class Reason { UncoveredCell, MultiplicityExceeded, PerSetRatioExceeded };
  HypothesisFailed(Reason reason, const std::string& detail);
  [[nodiscard]] Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

std::string_view to_string(HypothesisFailed::Reason r);

struct CoverVerdict {
  Rational lhs;  // |E| / |X|
  Rational rhs;  // m t / (1 + (m - 1) t)
  bool holds = true;
};

CoverVerdict covering_bound_check(const CoverInstance& inst);

struct CoverOracleCount {
  std::uint64_t instances = 0;   // (family, m, E, t) combinations examined
  std::uint64_t hypotheses_ok = 0;
  std::uint64_t violations = 0;
};

/// All ground sets {0..x-1} with x <= max_ground, every multiset of at most
/// max_subsets nonempty subsets, m in {1,2,3}, every target E and every threshold.
CoverOracleCount covering_exhaustive(int max_ground, int max_subsets, std::span<const Rational> thresholds);

// ---------------------------------------------------------------------------
// Besicovitch selection

struct Cube {
  Point center{0, 0, 0};
  std::int64_t radius = 1;
};

struct BesicovitchResult {
  std::vector<std::size_t> selected;
  std::int64_t min_multiplicity = 0;  // over ground cells
  std::int64_t max_multiplicity = 0;
  std::int64_t bound = 0;             // 4^dim
  [[nodiscard]] bool audit_ok() const { return min_multiplicity >= 1 && max_multiplicity <= bound; }
};

/// Greedy largest-radius-first selection; a cube is taken when its center is
/// not yet covered and it reaches an uncovered ground cell, and a second pass
/// picks up ground cells that are still bare. Ties in radius go to the lower
/// center in row-major order, then to the lower list index. Throws
/// NotCoverable when some ground cell lies in no cube.
BesicovitchResult besicovitch_select(std::span<const Cube> cubes, const LatticeSet& ground);

// ---------------------------------------------------------------------------
// Two-scale experiments

struct TwoScaleConfig {
  std::int64_t outer_radius = 0;  // N
  std::int64_t inner_radius = 0;  // ν
  std::int64_t smear = 0;         // s
  Rational delta{1, 50};
};

void validate(const TwoScaleConfig& cfg);

/// 8s, 16s, ... below ν, then ν itself.
std::vector<std::int64_t> two_scale_ladder(const TwoScaleConfig& cfg);

struct TwoScaleResult {
  Rational fraction;         // density points / window cells
  Rational smeared_measure;  // |E + [-s,s]^dim| / window cells
};

TwoScaleResult two_scale_density_fraction(const LatticeSet& e, const TwoScaleConfig& cfg);

struct SyndeticRow {
  std::int64_t m = 0;
  Rational fraction;
};

/// For m <= m_max, the fraction of cells z with z + [-ν,ν]^dim ⊆ (X + Y) + [-m,m]^dim.
std::vector<SyndeticRow> syndetic_point_fraction(const LatticeSet& x, const LatticeSet& y, const TwoScaleConfig& cfg,
                                                 std::int64_t m_max);

}  // namespace sumlab
