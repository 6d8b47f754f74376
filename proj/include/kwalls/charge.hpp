#pragma once

#include <compare>
#include <string>

#include "kwalls/lattice.hpp"
#include "kwalls/rational.hpp"

namespace kwalls {

/// Naive is Z_t = Z_{(H/2, tH)}; Twisted multiplies by sqrt(td(S)) first,
/// which on a K3 subtracts the rank and on an abelian surface changes nothing.
enum class ChargeKind { Naive, Twisted };

std::string to_string(ChargeKind kind);

/// The kind whose numerics actually apply on this surface: td(S) = 1 on an
/// abelian surface, so Twisted collapses to Naive there.
ChargeKind effective_kind(const SurfaceData& surf, ChargeKind kind);

struct ChargeParams {
    Rational t_squared;
    ChargeKind kind = ChargeKind::Naive;

    /// Throws std::invalid_argument unless t_squared > 0.
    ChargeParams(Rational t2, ChargeKind k);
};

/// Z_t(v) stored as (Re Z, Im Z / t); both are exact at rational t^2.
struct ChargeValue {
    Rational re;
    Rational im_over_t;

    bool operator==(const ChargeValue&) const = default;
};

/// Z_t(v) as a function of T = t^2: Re = re_at_zero + re_per_t2 * T and
/// Im / t = im_over_t independent of T.
struct ChargeLine {
    Rational re_at_zero;
    Rational re_per_t2;
    Rational im_over_t;

    Rational re_at(const Rational& t_squared) const { return re_at_zero + re_per_t2 * t_squared; }
};

ChargeLine charge_line(const CharVector& v, ChargeKind kind, const SurfaceData& surf);

ChargeValue central_charge(const CharVector& v, const ChargeParams& p, const SurfaceData& surf);

/// Orders Bridgeland slopes mu = -Re/Im. Classes with Im = 0 and Re < 0 have
/// infinite slope, above every finite one and equal to each other.
/// Throws std::invalid_argument for a class outside the heart cone
/// (Im < 0, or Im = 0 with Re >= 0).
std::strong_ordering slope_compare(const CharVector& v, const CharVector& w, const ChargeParams& p,
                                   const SurfaceData& surf);

enum class PositivityCase {
    Torsion0,           ///< supported in dimension zero: r = c = 0, s > 0
    Torsion1,           ///< supported on curves: r = 0, c > 0
    StableAbove,        ///< torsion-free with c/r > 1/2
    StableBelowShifted  ///< torsion-free with c/r <= 1/2, placed in the heart as E[1]
};

/// Whether every object of the given numerical case lands in the strict upper
/// half plane or on the negative real axis. On the c/r = 1/2 edge the
/// worst-case ch_2 allowed by the bound of the charge kind is used, and the
/// unshifted sheaf must have Re > 0 strictly.
/// Throws std::invalid_argument when v does not belong to the declared case.
bool verify_positivity(const CharVector& v, PositivityCase cls, const ChargeParams& p,
                       const SurfaceData& surf);

/// Infimum of t^2 above which (Z_t, A#) is a slope function.
Rational slope_function_floor(const SurfaceData& surf, ChargeKind kind);

}  // namespace kwalls
