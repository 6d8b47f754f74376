#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "kwalls/rational.hpp"

namespace kwalls {

enum class SurfaceKind { K3, Abelian };

/// Numerical type of a Picard-rank-one K-trivial surface with ample generator H.
struct SurfaceData {
    SurfaceKind kind;
    /// Genus g for a K3 surface, polarization type D for an abelian one.
    int genus_or_polarization;
    int h_squared;
    int chi_structure_sheaf;

    bool is_k3() const { return kind == SurfaceKind::K3; }
    bool operator==(const SurfaceData&) const = default;
};

/// Throws std::invalid_argument when the genus is below 2 (K3) or the
/// polarization below 1 (abelian).
SurfaceData make_surface(SurfaceKind kind, int parameter);

std::string to_string(SurfaceKind kind);

/// Chern character (r, cH, s·pt) on the rank-one lattice. Negative ranks are
/// allowed so that shifted objects E[1] can be represented.
struct CharVector {
    std::int64_t r = 0;
    std::int64_t c = 0;
    std::int64_t s = 0;

    bool is_zero() const { return r == 0 && c == 0 && s == 0; }

    friend CharVector operator+(const CharVector& a, const CharVector& b) {
        return {a.r + b.r, a.c + b.c, a.s + b.s};
    }
    friend CharVector operator-(const CharVector& a, const CharVector& b) {
        return {a.r - b.r, a.c - b.c, a.s - b.s};
    }
    friend CharVector operator-(const CharVector& a) { return {-a.r, -a.c, -a.s}; }
    friend CharVector operator*(std::int64_t k, const CharVector& a) {
        return {k * a.r, k * a.c, k * a.s};
    }
    friend auto operator<=>(const CharVector&, const CharVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const CharVector& v);

/// The invariants (0, H, H^2/2) whose moduli space the wall analysis studies.
CharVector target_class(const SurfaceData& surf);

/// Class of I_Z(H) for a length-d subscheme Z.
CharVector twisted_ideal_class(const SurfaceData& surf, std::int64_t d);

/// chi(v, w) = r_v s_w + r_w s_v - c_v c_w H^2 + chi(O_S) r_v r_w, the
/// Riemann-Roch pairing on a surface with trivial canonical class.
std::int64_t euler_pairing(const CharVector& v, const CharVector& w, const SurfaceData& surf);

/// 2 - chi(v, v).
std::int64_t moduli_dimension(const CharVector& v, const SurfaceData& surf);

/// Bogomolov-Gieseker ceiling c^2 H^2 / (2r) on ch_2 of an H-stable sheaf.
Rational bg_bound(std::int64_t r, std::int64_t c, const SurfaceData& surf);

/// Integral ch_2 ceiling. On a K3 this is the stable-bundle refinement
/// floor(c^2 H^2/(2r) - r + 1/r) coming from chi(E, E) <= 2; on an abelian
/// surface both constraints agree and only integrality sharpens BG.
std::int64_t sharp_bound(std::int64_t r, std::int64_t c, const SurfaceData& surf);

}  // namespace kwalls
