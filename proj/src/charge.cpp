#include "kwalls/charge.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace kwalls {

namespace {

std::string describe(const CharVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Z scaled by positive integers: Re by 8q and Im/t by 2, where t^2 = p/q.
// Signs and slope order survive, and no gcd is taken.
struct ScaledCharge {
    BigInt re;
    BigInt im;
};

ScaledCharge scaled_charge(const CharVector& v, const ChargeParams& p, const SurfaceData& surf) {
    const std::int64_t h = surf.h_squared;
    const std::int64_t shift = effective_kind(surf, p.kind) == ChargeKind::Twisted ? v.r : 0;
    const BigInt& num = numerator(p.t_squared);
    const BigInt& den = denominator(p.t_squared);
    return {BigInt(4 * v.c * h - v.r * h - 8 * (v.s + shift)) * den + BigInt(4 * v.r * h) * num,
            BigInt(h * (2 * v.c - v.r))};
}

void require_heart_compatible(const ScaledCharge& z, const CharVector& v) {
    if (z.im < 0 || (z.im == 0 && z.re >= 0)) {
        throw std::invalid_argument("class " + describe(v) + " is not in the image of the heart");
    }
}

}  // namespace

std::string to_string(ChargeKind kind) {
    return kind == ChargeKind::Naive ? "naive" : "twisted";
}

ChargeKind effective_kind(const SurfaceData& surf, ChargeKind kind) {
    return surf.is_k3() ? kind : ChargeKind::Naive;
}

ChargeParams::ChargeParams(Rational t2, ChargeKind k) : t_squared(std::move(t2)), kind(k) {
    if (t_squared <= 0) {
        throw std::invalid_argument("t^2 must be positive, got " + to_fraction_string(t_squared));
    }
}

ChargeLine charge_line(const CharVector& v, ChargeKind kind, const SurfaceData& surf) {
    const std::int64_t h = surf.h_squared;
    const std::int64_t shift = effective_kind(surf, kind) == ChargeKind::Twisted ? v.r : 0;
    // Re Z_t = -s + c H^2/2 + r (H^2/2)(t^2 - 1/4),  Im Z_t / t = H^2 (c - r/2).
    // The twisted charge also subtracts r from Re.
    return {
        make_rational(4 * v.c * h - v.r * h - 8 * (v.s + shift), 8),
        make_rational(v.r * h, 2),
        make_rational(h * (2 * v.c - v.r), 2),
    };
}

ChargeValue central_charge(const CharVector& v, const ChargeParams& p, const SurfaceData& surf) {
    const ScaledCharge scaled = scaled_charge(v, p, surf);
    ChargeValue z{Rational(scaled.re, 8 * denominator(p.t_squared)), Rational(scaled.im, BigInt(2))};
    assert(z.re == charge_line(v, p.kind, surf).re_at(p.t_squared));
#ifndef NDEBUG
    if (!surf.is_k3() && p.kind == ChargeKind::Twisted) {
        const ChargeLine naive = charge_line(v, ChargeKind::Naive, surf);
        assert(naive.re_at(p.t_squared) == z.re && naive.im_over_t == z.im_over_t);
    }
#endif
    return z;
}

std::strong_ordering slope_compare(const CharVector& v, const CharVector& w, const ChargeParams& p,
                                   const SurfaceData& surf) {
    const ScaledCharge zv = scaled_charge(v, p, surf);
    const ScaledCharge zw = scaled_charge(w, p, surf);
    require_heart_compatible(zv, v);
    require_heart_compatible(zw, w);

    const bool v_infinite = zv.im == 0;
    const bool w_infinite = zw.im == 0;
    if (v_infinite || w_infinite) {
        return v_infinite <=> w_infinite;
    }
    // mu(v) > mu(w)  <=>  Re(w) Im(v) - Re(v) Im(w) > 0
    const BigInt cross = zw.re * zv.im - zv.re * zw.im;
    return cross.sign() <=> 0;
}

bool verify_positivity(const CharVector& v, PositivityCase cls, const ChargeParams& p,
                       const SurfaceData& surf) {
    auto mismatch = [&](const char* why) {
        return std::invalid_argument("class " + describe(v) + " does not match case: " + why);
    };

    switch (cls) {
    case PositivityCase::Torsion0:
        if (v.r != 0 || v.c != 0 || v.s <= 0) {
            throw mismatch("zero-dimensional torsion needs r = c = 0 and s > 0");
        }
        break;
    case PositivityCase::Torsion1:
        if (v.r != 0 || v.c <= 0) {
            throw mismatch("one-dimensional torsion needs r = 0 and c > 0");
        }
        break;
    case PositivityCase::StableAbove:
        if (v.r < 1 || 2 * v.c <= v.r) {
            throw mismatch("needs r >= 1 and c/r > 1/2");
        }
        break;
    case PositivityCase::StableBelowShifted:
        if (v.r < 1 || 2 * v.c > v.r) {
            throw mismatch("needs r >= 1 and c/r <= 1/2");
        }
        break;
    }

    if (cls != PositivityCase::StableBelowShifted) {
        const ChargeValue z = central_charge(v, p, surf);
        return z.im_over_t > 0 || (z.im_over_t == 0 && z.re < 0);
    }

    if (2 * v.c < v.r) {
        // Im(E) < 0, hence Im(E[1]) > 0.
        return central_charge(v, p, surf).im_over_t < 0;
    }

    // Slope exactly H^2/2: Im vanishes and E[1] lies on the negative real axis
    // only if Re Z(E) > 0 for the largest ch_2 the bound allows.
    const Rational worst_s = effective_kind(surf, p.kind) == ChargeKind::Twisted
                                 ? Rational(sharp_bound(v.r, v.c, surf))
                                 : bg_bound(v.r, v.c, surf);
    const ChargeLine line = charge_line({v.r, v.c, 0}, p.kind, surf);
    return line.re_at(p.t_squared) - worst_s > 0;
}

Rational slope_function_floor(const SurfaceData& surf, ChargeKind kind) {
    if (effective_kind(surf, kind) == ChargeKind::Twisted && surf.genus_or_polarization % 2 == 0) {
        return make_rational(1, 4 * surf.genus_or_polarization - 4);
    }
    return Rational(0);
}

}  // namespace kwalls
