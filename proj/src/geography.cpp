#include "kwalls/geography.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kwalls/walls.hpp"

namespace kwalls {

FlopRecord pd_geometry(std::int64_t d, const SurfaceData& surf) {
    if (d < 0) {
        throw std::invalid_argument("flop index d must be non-negative");
    }
    FlopRecord rec;
    rec.d = d;
    if (surf.is_k3()) {
        rec.ambient_dim = 2 + surf.h_squared;
        rec.base_dim = 4 * d;
        rec.fiber_dim = 1 + surf.h_squared / 2 - 2 * d;
    } else {
        const std::int64_t pol = surf.genus_or_polarization;
        rec.ambient_dim = 2 * pol + 2;
        rec.base_dim = 4 * d + 4;
        rec.fiber_dim = pol - 2 * d - 1;
    }
    if (rec.fiber_dim < 0) {
        throw std::invalid_argument("d = " + std::to_string(d) +
                                    " gives a negative fiber dimension for P_d");
    }
    rec.locus_dim = rec.base_dim + rec.fiber_dim;
    rec.codim = rec.ambient_dim - rec.locus_dim;
    rec.mukai_flop = rec.codim == rec.fiber_dim && rec.codim >= 2;
    rec.divisorial = rec.codim == 1;
    return rec;
}

std::vector<FlopRecord> flop_sequence(const SurfaceData& surf, ChargeKind kind) {
    std::vector<FlopRecord> out;
    for (const Wall& wall : chamber_decomposition(surf, kind).walls) {
        const auto* label = std::get_if<RankOneLabel>(&wall.label);
        if (label == nullptr) {
            continue;
        }
        FlopRecord rec = pd_geometry(label->d, surf);
        rec.t_squared = wall.t_squared;
        out.push_back(std::move(rec));
    }
    return out;
}

FlopCount flop_count(const SurfaceData& surf, ChargeKind kind) {
    FlopCount count{static_cast<std::int64_t>(flop_sequence(surf, kind).size()), std::nullopt};
    const std::int64_t g = surf.genus_or_polarization;
    if (!surf.is_k3()) {
        count.closed_form = ceil_to_int(make_rational(2 * g, 9));
    } else if (kind == ChargeKind::Naive) {
        count.closed_form = ceil_to_int(make_rational(surf.h_squared, 9));
    } else if (g > 2) {
        count.closed_form = ceil_to_int(make_rational(2 * (g + 3), 9));
    }
    return count;
}

Rational vanishing_length_bound(const SurfaceData& surf, ChargeKind kind) {
    if (effective_kind(surf, kind) == ChargeKind::Naive) {
        return make_rational(surf.h_squared, 8);
    }
    const std::int64_t g = surf.genus_or_polarization;
    return g % 2 == 1 ? make_rational(g + 3, 4) : make_rational(g + 2, 4);
}

std::int64_t vanishing_max_length(const SurfaceData& surf, ChargeKind kind) {
    const std::int64_t d = ceil_to_int(vanishing_length_bound(surf, kind)) - 1;
    if (effective_kind(surf, kind) == ChargeKind::Twisted) {
        // Parity-aware bound agrees with the uniform d < (g+2)/4.
        const std::int64_t uniform = ceil_to_int(make_rational(surf.genus_or_polarization + 2, 4)) - 1;
        if (uniform != d) {
            throw std::logic_error("vanishing bounds disagree for genus " +
                                   std::to_string(surf.genus_or_polarization));
        }
    }
    return std::max<std::int64_t>(d, 0);
}

bool very_ample(const SurfaceData& surf, ChargeKind kind) {
    return vanishing_max_length(surf, kind) >= 1;
}

Rational example_threshold(std::int64_t deg_dprime, const SurfaceData& surf) {
    if (deg_dprime < 0) {
        throw std::invalid_argument("deg(D') must be non-negative");
    }
    return make_rational(1, 4) - make_rational(2 * deg_dprime, surf.h_squared);
}

StablePairsAmbient stable_pairs_ambient(const SurfaceData& surf) {
    if (!surf.is_k3()) {
        throw std::invalid_argument("stable pairs ambient is only defined for K3 surfaces");
    }
    return {surf.genus_or_polarization, flop_count(surf, ChargeKind::Twisted).enumerated - 1};
}

}  // namespace kwalls
