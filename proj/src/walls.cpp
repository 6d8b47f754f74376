#include "kwalls/walls.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kwalls {

namespace {

// Largest integral ch_2 a stable sheaf of this rank and c_1 may carry.
std::int64_t ch2_ceiling(std::int64_t r, std::int64_t c, const SurfaceData& surf, ChargeKind kind) {
    if (effective_kind(surf, kind) == ChargeKind::Twisted) {
        return sharp_bound(r, c, surf);
    }
    return floor_to_int(bg_bound(r, c, surf));
}

Rational rank_one_wall_value(const SurfaceData& surf, ChargeKind kind, std::int64_t d) {
    if (effective_kind(surf, kind) == ChargeKind::Twisted) {
        const std::int64_t g = surf.genus_or_polarization;
        return (make_rational(g + 3, 4) - d) / (g - 1);
    }
    return make_rational(1, 4) - make_rational(2 * d, surf.h_squared);
}

Wall make_rank_one_wall(const SurfaceData& surf, ChargeKind kind, std::int64_t d) {
    const CharVector ideal = twisted_ideal_class(surf, d);
    const CharVector target = target_class(surf);
    return {rank_one_wall_value(surf, kind, d), RankOneLabel{d}, {ideal, target, target - ideal}};
}

void require_odd_cap(std::int64_t rank_cap) {
    if (rank_cap < 1 || rank_cap % 2 == 0) {
        throw std::invalid_argument("rank cap must be a positive odd integer, got " +
                                    std::to_string(rank_cap));
    }
}

}  // namespace

std::string describe(const WallLabel& label) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, RankOneLabel>) {
                os << "d=" << l.d;
            } else if constexpr (std::is_same_v<L, HigherRankLabel>) {
                os << "rank=" << l.rank;
            } else {
                os << l.v << "|" << l.w;
            }
        },
        label);
    return os.str();
}

PairWallResult pair_wall(const CharVector& v, const CharVector& w, const SurfaceData& surf,
                         ChargeKind kind) {
    const ChargeLine lv = charge_line(v, kind, surf);
    const ChargeLine lw = charge_line(w, kind, surf);
    if (lv.im_over_t < 0 || lw.im_over_t < 0) {
        throw std::invalid_argument("pair_wall needs classes with Im Z >= 0");
    }
    // (a_v + b_v T) m_w = (a_w + b_w T) m_v
    const Rational coefficient = lv.re_per_t2 * lw.im_over_t - lw.re_per_t2 * lv.im_over_t;
    const Rational rhs = lw.re_at_zero * lv.im_over_t - lv.re_at_zero * lw.im_over_t;
    if (coefficient == 0) {
        return {rhs == 0 ? PairWallResult::Outcome::Proportional : PairWallResult::Outcome::None, {}};
    }
    Rational t2 = rhs / coefficient;
    if (t2 <= 0 || t2 <= slope_function_floor(surf, kind)) {
        return {PairWallResult::Outcome::None, {}};
    }
    return {PairWallResult::Outcome::Crossing, std::move(t2)};
}

Rational rank_threshold(std::int64_t n, const SurfaceData& surf, ChargeKind kind) {
    if (n < 1) {
        throw std::invalid_argument("rank_threshold needs n >= 1");
    }
    const std::int64_t r = 2 * n + 1;
    const std::int64_t c = n + 1;
    const Rational max_s = effective_kind(surf, kind) == ChargeKind::Twisted
                               ? Rational(sharp_bound(r, c, surf))
                               : bg_bound(r, c, surf);
    const ChargeLine line = charge_line({r, c, 0}, kind, surf);
    // -max_s + re_at_zero + re_per_t2 * T = 0
    return (max_s - line.re_at_zero) / line.re_per_t2;
}

Rational higher_rank_floor(const SurfaceData& surf, ChargeKind kind) {
    Rational best = rank_threshold(1, surf, kind);
    for (std::int64_t n = 2; n <= 3; ++n) {
        best = std::max(best, rank_threshold(n, surf, kind));
    }
    return best;
}

Rational validity_floor(const SurfaceData& surf, ChargeKind kind) {
    return std::max(slope_function_floor(surf, kind), higher_rank_floor(surf, kind));
}

std::vector<Wall> rank_one_walls(const SurfaceData& surf, ChargeKind kind) {
    const Rational floor = std::max(Rational(0), validity_floor(surf, kind));
    std::vector<Wall> walls;
    for (std::int64_t d = 0; rank_one_wall_value(surf, kind, d) > floor; ++d) {
        walls.push_back(make_rank_one_wall(surf, kind, d));
    }
    return walls;
}

ChamberReport chamber_decomposition(const SurfaceData& surf, ChargeKind kind) {
    ChamberReport report{surf, kind, validity_floor(surf, kind), rank_one_walls(surf, kind), {}, {}};

    const std::int64_t next_d = static_cast<std::int64_t>(report.walls.size());
    if (rank_one_wall_value(surf, kind, next_d) == report.floor) {
        report.boundary_walls.push_back(make_rank_one_wall(surf, kind, next_d));
    }
    for (std::int64_t n = 1; n <= 3; ++n) {
        const Rational t2 = rank_threshold(n, surf, kind);
        if (t2 <= 0 || t2 != report.floor) {
            continue;
        }
        const std::int64_t r = 2 * n + 1;
        Wall wall{t2, HigherRankLabel{r}, {target_class(surf)}};
        const Rational bound = effective_kind(surf, kind) == ChargeKind::Twisted
                                   ? Rational(sharp_bound(r, n + 1, surf))
                                   : bg_bound(r, n + 1, surf);
        if (denominator(bound) == 1) {
            const CharVector quotient{r, n + 1, floor_to_int(bound)};
            wall.colliding_classes.push_back(quotient);
            wall.colliding_classes.push_back(target_class(surf) - quotient);
        }
        report.boundary_walls.push_back(std::move(wall));
    }

    // Chambers: (w_0, inf), (w_1, w_0), ..., (floor, w_last).
    const Rational lowest = std::max(Rational(0), report.floor);
    if (report.walls.empty()) {
        report.chambers.push_back({lowest, std::nullopt, lowest + 1});
        return report;
    }
    const Rational& top = report.walls.front().t_squared;
    report.chambers.push_back({top, std::nullopt, top + 1});
    for (std::size_t i = 0; i < report.walls.size(); ++i) {
        const Rational& upper = report.walls[i].t_squared;
        const Rational lower = i + 1 < report.walls.size() ? report.walls[i + 1].t_squared : lowest;
        report.chambers.push_back({lower, upper, (lower + upper) / 2});
    }
    return report;
}

std::vector<CharVector> destabilizer_candidates(const CharVector& target, const ChargeParams& p,
                                                const SurfaceData& surf, std::int64_t rank_cap) {
    if (target != target_class(surf)) {
        std::ostringstream os;
        os << "destabilizer search only covers the target " << target_class(surf) << ", got "
           << target;
        throw std::invalid_argument(os.str());
    }
    require_odd_cap(rank_cap);
    if (p.t_squared <= slope_function_floor(surf, p.kind)) {
        throw std::invalid_argument("t^2 = " + to_fraction_string(p.t_squared) +
                                    " is not above the slope-function floor");
    }

    std::vector<CharVector> out;
    for (std::int64_t r = 1; r <= rank_cap; r += 2) {
        const std::int64_t c = (r + 1) / 2;
        const ChargeLine line = charge_line({r, c, 0}, p.kind, surf);
        // Re Z(r, c, s) = re(r, c, 0) - s < 0  <=>  s > re(r, c, 0)
        const std::int64_t lowest_s = floor_to_int(line.re_at(p.t_squared)) + 1;
        for (std::int64_t s = lowest_s; s <= ch2_ceiling(r, c, surf, p.kind); ++s) {
            out.push_back({r, c, s});
        }
    }
    return out;
}

std::vector<Rational> oracle_walls(const CharVector& target, const SurfaceData& surf,
                                   ChargeKind kind, std::int64_t rank_cap, std::int64_t s_margin) {
    require_odd_cap(rank_cap);
    if (s_margin < 0) {
        throw std::invalid_argument("s_margin must be non-negative");
    }

    std::set<Rational, std::greater<>> found;
    for (std::int64_t n = 0; 2 * n + 1 <= rank_cap; ++n) {
        const std::int64_t r = 2 * n + 1;
        for (const std::int64_t c : {n, n + 1}) {
            const ChargeLine line = charge_line({r, c, 0}, kind, surf);
            const std::int64_t ceiling = ch2_ceiling(r, c, surf, kind);
            // A crossing at positive t^2 needs s > Re Z(r, c, 0)|_{t=0}.
            const std::int64_t cutoff = floor_to_int(line.re_at_zero) + 1;
            const std::int64_t lowest = std::min(ceiling, cutoff) - s_margin;
            for (std::int64_t s = lowest; s <= ceiling; ++s) {
                const CharVector k = line.im_over_t < 0 ? -CharVector{r, c, s} : CharVector{r, c, s};
                const PairWallResult hit = pair_wall(target, k, surf, kind);
                if (hit.outcome == PairWallResult::Outcome::Crossing) {
                    found.insert(*hit.t_squared);
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace kwalls
