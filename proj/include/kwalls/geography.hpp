#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kwalls/charge.hpp"
#include "kwalls/lattice.hpp"
#include "kwalls/rational.hpp"

namespace kwalls {

/// Geometry of the flop center P_d inside the moduli space at the d-th wall.
struct FlopRecord {
    std::int64_t d = 0;
    Rational t_squared;
    std::int64_t ambient_dim = 0;
    std::int64_t base_dim = 0;
    std::int64_t fiber_dim = 0;
    std::int64_t locus_dim = 0;
    std::int64_t codim = 0;
    bool mukai_flop = false;
    bool divisorial = false;

    bool operator==(const FlopRecord&) const = default;
};

/// Closed-form dimensions of P_d; t_squared is left at zero for the caller.
/// K3: ambient 2 + H^2, base 4d = dim(S[d] x S[d]), fiber 1 + H^2/2 - 2d.
/// Abelian: ambient 2D + 2, base 4d + 4, fiber D - 2d - 1.
/// Throws std::invalid_argument for d < 0 or a negative fiber dimension.
FlopRecord pd_geometry(std::int64_t d, const SurfaceData& surf);

/// One record per rank-one wall of the chamber decomposition, descending in t^2.
std::vector<FlopRecord> flop_sequence(const SurfaceData& surf, ChargeKind kind);

struct FlopCount {
    std::int64_t enumerated = 0;
    /// ceil(H^2/9) naive, ceil(2(g+3)/9) twisted on K3 with g > 2,
    /// ceil(2D/9) abelian; empty where no closed form applies.
    std::optional<std::int64_t> closed_form;

    bool agrees() const { return !closed_form || *closed_form == enumerated; }
};

FlopCount flop_count(const SurfaceData& surf, ChargeKind kind);

/// Exclusive upper bound on the subscheme length d for which
/// H^i(I_W (x) I_Z(H)) = 0, i > 0: H^2/8 naive, and on a twisted K3
/// (g+3)/4 for odd g, (g+2)/4 for even g.
Rational vanishing_length_bound(const SurfaceData& surf, ChargeKind kind);

/// Largest integer strictly below vanishing_length_bound.
std::int64_t vanishing_max_length(const SurfaceData& surf, ChargeKind kind);

/// Vanishing for d = 1, i.e. very ampleness of H.
bool very_ample(const SurfaceData& surf, ChargeKind kind);

/// 1/4 - 2 deg(D')/H^2: the largest t^2 at which a pushforward i_*L_C is
/// destabilized by a subsheaf of degree deg(D'). Non-positive means never.
Rational example_threshold(std::int64_t deg_dprime, const SurfaceData& surf);

struct StablePairsAmbient {
    std::int64_t projective_dim = 0;
    std::int64_t chain_length = 0;

    bool operator==(const StablePairsAmbient&) const = default;
};

/// P^g = P(H^0(O_S(H))^*) together with the number of twisted flops that
/// remain after the first one. K3 only; throws std::invalid_argument otherwise.
StablePairsAmbient stable_pairs_ambient(const SurfaceData& surf);

}  // namespace kwalls
