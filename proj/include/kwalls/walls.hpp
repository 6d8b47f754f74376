#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kwalls/charge.hpp"
#include "kwalls/lattice.hpp"
#include "kwalls/rational.hpp"

namespace kwalls {

struct RankOneLabel {
    std::int64_t d;
    bool operator==(const RankOneLabel&) const = default;
};

struct HigherRankLabel {
    std::int64_t rank;
    bool operator==(const HigherRankLabel&) const = default;
};

struct PairwiseLabel {
    CharVector v;
    CharVector w;
    bool operator==(const PairwiseLabel&) const = default;
};

using WallLabel = std::variant<RankOneLabel, HigherRankLabel, PairwiseLabel>;

std::string describe(const WallLabel& label);

struct Wall {
    Rational t_squared;
    WallLabel label;
    std::vector<CharVector> colliding_classes;

    bool operator==(const Wall&) const = default;
};

struct Chamber {
    Rational lower;
    std::optional<Rational> upper;  ///< empty for the unbounded top chamber
    Rational sample_t_squared;

    bool operator==(const Chamber&) const = default;
};

struct ChamberReport {
    SurfaceData surface;
    ChargeKind kind;
    Rational floor;
    std::vector<Wall> walls;       ///< strictly descending, all above floor
    std::vector<Chamber> chambers;  ///< top chamber first
    /// Walls sitting exactly on the floor: rank-one walls excluded by the
    /// strict inequality and the higher-rank walls that define the floor.
    std::vector<Wall> boundary_walls;

    bool operator==(const ChamberReport&) const = default;
};

struct PairWallResult {
    enum class Outcome {
        Crossing,      ///< slopes agree at exactly one admissible t^2
        Proportional,  ///< slopes agree for every t^2
        None           ///< no solution, or one at or below the validity floor
    };
    Outcome outcome = Outcome::None;
    std::optional<Rational> t_squared;
};

/// Solves mu(v) = mu(w) for t^2, which is linear since Re Z is affine in t^2
/// and Im Z / t is constant. Throws std::invalid_argument if either class has
/// Im Z < 0.
PairWallResult pair_wall(const CharVector& v, const CharVector& w, const SurfaceData& surf,
                         ChargeKind kind);

/// Walls where I_Z(H) with len(Z) = d reaches slope zero, for every d whose
/// wall lies strictly above the validity floor.
std::vector<Wall> rank_one_walls(const SurfaceData& surf, ChargeKind kind);

/// Largest t^2 at which a stable class of rank 2n+1, c_1 = (n+1)H and maximal
/// ch_2 has Re Z = 0. May be non-positive, in which case the class never
/// obstructs.
Rational rank_threshold(std::int64_t n, const SurfaceData& surf, ChargeKind kind);

/// Max of rank_threshold over n = 1, 2, 3.
Rational higher_rank_floor(const SurfaceData& surf, ChargeKind kind);

/// max(slope_function_floor, higher_rank_floor).
Rational validity_floor(const SurfaceData& surf, ChargeKind kind);

ChamberReport chamber_decomposition(const SurfaceData& surf, ChargeKind kind);

inline constexpr std::int64_t kDefaultRankCap = 9;

/// Classes of odd rank 2n+1 <= rank_cap, c_1 = (n+1)H and admissible ch_2 whose
/// charge has Re < 0 at the given t^2: the numerical quotients that can still
/// destabilize objects with the target invariants.
std::vector<CharVector> destabilizer_candidates(const CharVector& target, const ChargeParams& p,
                                                const SurfaceData& surf, std::int64_t rank_cap);

/// Brute-force wall search: pair_wall(target, k) over all odd-rank classes k
/// with rank <= rank_cap, c_1 in {nH, (n+1)H}, and ch_2 from below the
/// positive-t^2 cutoff (minus s_margin) up to the ch_2 bound. Returns distinct
/// t^2 values in descending order; walls below the chamber floor are kept.
std::vector<Rational> oracle_walls(const CharVector& target, const SurfaceData& surf,
                                   ChargeKind kind, std::int64_t rank_cap, std::int64_t s_margin);

}  // namespace kwalls
