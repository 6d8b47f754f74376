#include <doctest.h>

#include <algorithm>
#include <set>

#include "kwalls/walls.hpp"

using namespace kwalls;

namespace {

std::vector<Rational> wall_values(const std::vector<Wall>& walls) {
    std::vector<Rational> out;
    for (const auto& w : walls) {
        out.push_back(w.t_squared);
    }
    return out;
}

std::vector<Rational> above(const std::vector<Rational>& values, const Rational& floor) {
    std::vector<Rational> out;
    std::copy_if(values.begin(), values.end(), std::back_inserter(out),
                 [&](const Rational& v) { return v > floor; });
    return out;
}

// Exhaustive candidate scan: every odd rank up to the cap, c_1 = (n+1)H and a
// wide window of ch_2, filtered through the bounds and the charge directly.
std::vector<CharVector> brute_force_destabilizers(const SurfaceData& s, const ChargeParams& p,
                                                  std::int64_t rank_cap) {
    std::vector<CharVector> out;
    const bool twisted = s.is_k3() && p.kind == ChargeKind::Twisted;
    for (std::int64_t r = 1; r <= rank_cap; r += 2) {
        const std::int64_t c = (r + 1) / 2;
        const Rational bound = twisted ? bg_bound(r, c, s) - r + make_rational(1, r) : bg_bound(r, c, s);
        for (std::int64_t ch2 = -200; ch2 <= 200; ++ch2) {
            if (Rational(ch2) <= bound && central_charge({r, c, ch2}, p, s).re < 0) {
                out.push_back({r, c, ch2});
            }
        }
    }
    return out;
}

std::vector<SurfaceData> sweep() {
    std::vector<SurfaceData> out;
    for (int g = 2; g <= 30; ++g) {
        out.push_back(make_surface(SurfaceKind::K3, g));
    }
    for (int d = 1; d <= 15; ++d) {
        out.push_back(make_surface(SurfaceKind::Abelian, d));
    }
    return out;
}

}  // namespace

TEST_CASE("pair_wall examples") {
    for (int g : {2, 5, 7, 13}) {
        const SurfaceData s = make_surface(SurfaceKind::K3, g);
        for (std::int64_t d = 0; 8 * d < s.h_squared; ++d) {
            const auto hit = pair_wall(twisted_ideal_class(s, d), {0, 1, g - 1}, s, ChargeKind::Naive);
            REQUIRE(hit.outcome == PairWallResult::Outcome::Crossing);
            CHECK(*hit.t_squared == make_rational(1, 4) - make_rational(2 * d, s.h_squared));
        }
    }

    const SurfaceData g3 = make_surface(SurfaceKind::K3, 3);
    const auto genus3 = pair_wall({1, 1, 1}, {0, 1, 2}, g3, ChargeKind::Twisted);
    REQUIRE(genus3.outcome == PairWallResult::Outcome::Crossing);
    CHECK(*genus3.t_squared == make_rational(1, 4));

    const CharVector w{0, 1, 2};
    CHECK(pair_wall(2 * w, w, g3, ChargeKind::Naive).outcome == PairWallResult::Outcome::Proportional);
    CHECK(pair_wall({0, 0, 1}, {0, 0, 4}, g3, ChargeKind::Naive).outcome ==
          PairWallResult::Outcome::Proportional);
    // Below the validity floor (g = 2, twisted: 1/4) the crossing is dropped.
    const SurfaceData g2 = make_surface(SurfaceKind::K3, 2);
    CHECK(pair_wall(twisted_ideal_class(g2, 1), target_class(g2), g2, ChargeKind::Twisted).outcome ==
          PairWallResult::Outcome::None);
    CHECK_THROWS_AS(pair_wall({1, 0, 0}, w, g3, ChargeKind::Naive), std::invalid_argument);
}

TEST_CASE("pair_wall is symmetric") {
    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            for (std::int64_t r = 0; r <= 3; ++r) {
                for (std::int64_t c = (r + 1) / 2; c <= 2; ++c) {
                    for (std::int64_t ch2 = -3; ch2 <= 6; ++ch2) {
                        const CharVector v{r, c, ch2};
                        if (v.is_zero() || charge_line(v, kind, s).im_over_t < 0) {
                            continue;
                        }
                        const auto a = pair_wall(v, target_class(s), s, kind);
                        const auto b = pair_wall(target_class(s), v, s, kind);
                        CHECK(a.outcome == b.outcome);
                        CHECK(a.t_squared == b.t_squared);
                    }
                }
            }
        }
    }
}

TEST_CASE("rank_one_walls examples") {
    const auto g7 = rank_one_walls(make_surface(SurfaceKind::K3, 7), ChargeKind::Twisted);
    CHECK(wall_values(g7) ==
          std::vector<Rational>{make_rational(5, 12), make_rational(1, 4), make_rational(1, 12)});
    REQUIRE(g7.size() == 3);
    CHECK(std::get<RankOneLabel>(g7[2].label).d == 2);
    CHECK(g7[1].colliding_classes ==
          std::vector<CharVector>{{1, 1, 5}, {0, 1, 6}, {-1, 0, 1}});

    const auto g3 = rank_one_walls(make_surface(SurfaceKind::K3, 3), ChargeKind::Twisted);
    CHECK(wall_values(g3) == std::vector<Rational>{make_rational(3, 4), make_rational(1, 4)});

    const auto ab4 = rank_one_walls(make_surface(SurfaceKind::Abelian, 4), ChargeKind::Naive);
    CHECK(wall_values(ab4) == std::vector<Rational>{make_rational(1, 4)});
}

TEST_CASE("rank-one walls step by 2/H^2 naive and 1/(g-1) twisted") {
    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            const auto walls = rank_one_walls(s, kind);
            const Rational step = s.is_k3() && kind == ChargeKind::Twisted
                                      ? make_rational(1, s.genus_or_polarization - 1)
                                      : make_rational(2, s.h_squared);
            for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
                CHECK(walls[i].t_squared - walls[i + 1].t_squared == step);
            }
            for (const Wall& w : walls) {
                const ChargeParams p(w.t_squared, kind);
                for (const CharVector& v : w.colliding_classes) {
                    CHECK(slope_compare(v, w.colliding_classes.front(), p, s) ==
                          std::strong_ordering::equal);
                }
            }
        }
    }
}

TEST_CASE("rank_threshold") {
    for (const SurfaceData& s : sweep()) {
        Rational previous = 1;
        for (std::int64_t n = 1; n <= 4; ++n) {
            const Rational t2 = rank_threshold(n, s, ChargeKind::Naive);
            CHECK(t2 == make_rational(1, 4 * (2 * n + 1) * (2 * n + 1)));
            CHECK(t2 < previous);
            previous = t2;
        }
    }

    CHECK(rank_threshold(1, make_surface(SurfaceKind::K3, 3), ChargeKind::Twisted) == make_rational(1, 12));

    // 0 = -H^2/24 + (3/2) t^2 H^2 + delta, delta = -1/3, 0, 1/3 for g = 0, 1, 2 mod 3.
    for (int g = 2; g <= 60; ++g) {
        const SurfaceData s = make_surface(SurfaceKind::K3, g);
        const Rational h = s.h_squared;
        const Rational delta = g % 3 == 0 ? make_rational(-1, 3) : g % 3 == 1 ? Rational(0) : make_rational(1, 3);
        const Rational expected = (h / 24 - delta) / (make_rational(3, 2) * h);
        CHECK(rank_threshold(1, s, ChargeKind::Twisted) == expected);
    }
    CHECK_THROWS_AS(rank_threshold(0, make_surface(SurfaceKind::K3, 3), ChargeKind::Naive),
                    std::invalid_argument);
}

TEST_CASE("higher_rank_floor") {
    for (const SurfaceData& s : sweep()) {
        CHECK(higher_rank_floor(s, ChargeKind::Naive) == make_rational(1, 36));
    }
    CHECK(higher_rank_floor(make_surface(SurfaceKind::K3, 7), ChargeKind::Twisted) == make_rational(1, 36));
    CHECK(higher_rank_floor(make_surface(SurfaceKind::Abelian, 5), ChargeKind::Twisted) == make_rational(1, 36));
    // Genus 2: rank 5 beats rank 3, which never obstructs.
    const SurfaceData g2 = make_surface(SurfaceKind::K3, 2);
    CHECK(rank_threshold(1, g2, ChargeKind::Twisted) < 0);
    CHECK(higher_rank_floor(g2, ChargeKind::Twisted) == make_rational(1, 20));

    for (int g = 3; g <= 50; ++g) {
        const SurfaceData s = make_surface(SurfaceKind::K3, g);
        CHECK(higher_rank_floor(s, ChargeKind::Twisted) == rank_threshold(1, s, ChargeKind::Twisted));
    }
    // Ranks up to 9 never rise above the floor, so rank cap 9 loses nothing.
    for (int g = 2; g <= 50; ++g) {
        const SurfaceData s = make_surface(SurfaceKind::K3, g);
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            CHECK(rank_threshold(4, s, kind) <= validity_floor(s, kind));
        }
    }
}

TEST_CASE("chamber_decomposition examples") {
    const auto g7 = chamber_decomposition(make_surface(SurfaceKind::K3, 7), ChargeKind::Twisted);
    CHECK(g7.floor == make_rational(1, 36));
    CHECK(g7.walls.size() == 3);
    REQUIRE(g7.chambers.size() == 4);
    CHECK(g7.chambers[0].sample_t_squared == make_rational(17, 12));
    CHECK_FALSE(g7.chambers[0].upper.has_value());
    CHECK(g7.chambers[3].lower == make_rational(1, 36));
    CHECK(g7.chambers[3].sample_t_squared == make_rational(1, 18));

    const auto g2 = chamber_decomposition(make_surface(SurfaceKind::K3, 2), ChargeKind::Twisted);
    CHECK(g2.floor == make_rational(1, 4));
    CHECK(wall_values(g2.walls) == std::vector<Rational>{make_rational(5, 4)});
    CHECK(g2.chambers.size() == 2);
    REQUIRE(!g2.boundary_walls.empty());
    CHECK(g2.boundary_walls.front().label == WallLabel{RankOneLabel{1}});
    CHECK(g2.boundary_walls.front().t_squared == make_rational(1, 4));

    const auto ab1 = chamber_decomposition(make_surface(SurfaceKind::Abelian, 1), ChargeKind::Naive);
    CHECK(ab1.floor == make_rational(1, 36));
    CHECK(wall_values(ab1.walls) == std::vector<Rational>{make_rational(1, 4)});

    // Genus 6 twisted: slope floor, rank-3 floor and the d = 2 wall all sit at 1/20.
    const auto g6 = chamber_decomposition(make_surface(SurfaceKind::K3, 6), ChargeKind::Twisted);
    CHECK(g6.floor == make_rational(1, 20));
    CHECK(g6.walls.size() == 2);
    CHECK(g6.boundary_walls.size() == 2);
}

TEST_CASE("chamber_decomposition invariants") {
    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            const auto report = chamber_decomposition(s, kind);
            CHECK(report.floor == std::max(slope_function_floor(s, kind), higher_rank_floor(s, kind)));
            for (std::size_t i = 0; i < report.walls.size(); ++i) {
                CHECK(report.walls[i].t_squared > report.floor);
                if (i > 0) {
                    CHECK(report.walls[i].t_squared < report.walls[i - 1].t_squared);
                }
            }
            CHECK(report.chambers.size() == report.walls.size() + 1);
            for (const Chamber& c : report.chambers) {
                CHECK(c.sample_t_squared > c.lower);
                if (c.upper) {
                    CHECK(c.sample_t_squared < *c.upper);
                }
            }
        }
    }
}

TEST_CASE("destabilizer_candidates examples") {
    const SurfaceData g7 = make_surface(SurfaceKind::K3, 7);
    const CharVector target{0, 1, 6};
    CHECK(destabilizer_candidates(target, ChargeParams(make_rational(1, 4), ChargeKind::Naive), g7, 9).empty());

    const ChargeParams tenth(make_rational(1, 10), ChargeKind::Naive);
    const auto at_tenth = destabilizer_candidates(target, tenth, g7, 9);
    CHECK(at_tenth == brute_force_destabilizers(g7, tenth, 9));
    CHECK(at_tenth == std::vector<CharVector>{{1, 1, 6}});

    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            // Nothing destabilizes above the top wall; just below it the
            // top rank-one class does.
            const ChamberReport report = chamber_decomposition(s, kind);
            if (report.walls.empty()) {
                continue;
            }
            const Rational top = report.walls.front().t_squared;
            const auto above =
                destabilizer_candidates(target_class(s), ChargeParams(top + make_rational(1, 1000), kind), s, 9);
            CHECK(above.empty());
            const auto below = destabilizer_candidates(
                target_class(s), ChargeParams(top - (top - report.floor) / 1000, kind), s, 9);
            CHECK(std::find(below.begin(), below.end(), twisted_ideal_class(s, 0)) != below.end());
        }
    }

    CHECK_THROWS_AS(destabilizer_candidates({0, 1, 5}, tenth, g7, 9), std::invalid_argument);
    CHECK_THROWS_AS(destabilizer_candidates(target, tenth, g7, 4), std::invalid_argument);
    const SurfaceData g2 = make_surface(SurfaceKind::K3, 2);
    CHECK_THROWS_AS(destabilizer_candidates(target_class(g2), ChargeParams(make_rational(1, 5), ChargeKind::Twisted),
                                            g2, 9),
                    std::invalid_argument);
}

TEST_CASE("destabilizers at chamber samples are the classes of walls above") {
    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            const auto report = chamber_decomposition(s, kind);
            for (const Chamber& c : report.chambers) {
                const ChargeParams p(c.sample_t_squared, kind);
                std::vector<CharVector> expected;
                for (const Wall& w : report.walls) {
                    if (w.t_squared > c.sample_t_squared) {
                        expected.push_back(w.colliding_classes.front());
                    }
                }
                std::sort(expected.begin(), expected.end());
                auto got = destabilizer_candidates(target_class(s), p, s, 9);
                std::sort(got.begin(), got.end());
                CHECK(got == expected);
                CHECK(got == [&] {
                    auto b = brute_force_destabilizers(s, p, 9);
                    std::sort(b.begin(), b.end());
                    return b;
                }());
            }
        }
    }
}

TEST_CASE("oracle_walls") {
    const SurfaceData g7 = make_surface(SurfaceKind::K3, 7);
    const auto o7 = oracle_walls(target_class(g7), g7, ChargeKind::Twisted, 3, 3);
    const auto o7_above = above(o7, make_rational(1, 36));
    CHECK(o7_above == std::vector<Rational>{make_rational(5, 12), make_rational(1, 4), make_rational(1, 12)});

    const SurfaceData g3 = make_surface(SurfaceKind::K3, 3);
    const auto o3 = oracle_walls(target_class(g3), g3, ChargeKind::Twisted, 3, 3);
    CHECK(above(o3, make_rational(1, 12)) == std::vector<Rational>{make_rational(3, 4), make_rational(1, 4)});
    CHECK(std::find(o3.begin(), o3.end(), make_rational(1, 12)) != o3.end());

    // Rank cap 1 sees exactly the rank-one series above the slope-function floor.
    for (const SurfaceData& s : sweep()) {
        for (ChargeKind kind : {ChargeKind::Naive, ChargeKind::Twisted}) {
            const Rational lowest = std::max(Rational(0), slope_function_floor(s, kind));
            std::vector<Rational> expected;
            for (std::int64_t d = 0;; ++d) {
                const Rational t2 = s.is_k3() && kind == ChargeKind::Twisted
                                        ? (make_rational(s.genus_or_polarization + 3, 4) - d) /
                                              (s.genus_or_polarization - 1)
                                        : make_rational(1, 4) - make_rational(2 * d, s.h_squared);
                if (t2 <= lowest) {
                    break;
                }
                expected.push_back(t2);
            }
            CHECK(oracle_walls(target_class(s), s, kind, 1, 0) == expected);
        }
    }
    CHECK_THROWS_AS(oracle_walls(target_class(g7), g7, ChargeKind::Naive, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(oracle_walls(target_class(g7), g7, ChargeKind::Naive, 3, -1), std::invalid_argument);
}
