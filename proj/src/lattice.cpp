#include "kwalls/lattice.hpp"

#include <ostream>
#include <stdexcept>

namespace kwalls {

namespace {

void require_positive_rank(std::int64_t r) {
    if (r < 1) {
        throw std::invalid_argument("ch_2 bounds need rank >= 1, got " + std::to_string(r));
    }
}

}  // namespace

SurfaceData make_surface(SurfaceKind kind, int parameter) {
    switch (kind) {
    case SurfaceKind::K3:
        if (parameter < 2) {
            throw std::invalid_argument("K3 genus must be >= 2, got " + std::to_string(parameter));
        }
        return {kind, parameter, 2 * parameter - 2, 2};
    case SurfaceKind::Abelian:
        if (parameter < 1) {
            throw std::invalid_argument("abelian polarization must be >= 1, got " +
                                        std::to_string(parameter));
        }
        return {kind, parameter, 2 * parameter, 0};
    }
    throw std::invalid_argument("unknown surface kind");
}

std::string to_string(SurfaceKind kind) {
    return kind == SurfaceKind::K3 ? "k3" : "abelian";
}

std::ostream& operator<<(std::ostream& os, const CharVector& v) {
    return os << '(' << v.r << ',' << v.c << ',' << v.s << ')';
}

CharVector target_class(const SurfaceData& surf) {
    return {0, 1, surf.h_squared / 2};
}

CharVector twisted_ideal_class(const SurfaceData& surf, std::int64_t d) {
    return {1, 1, surf.h_squared / 2 - d};
}

std::int64_t euler_pairing(const CharVector& v, const CharVector& w, const SurfaceData& surf) {
    return v.r * w.s + w.r * v.s - v.c * w.c * surf.h_squared + surf.chi_structure_sheaf * v.r * w.r;
}

std::int64_t moduli_dimension(const CharVector& v, const SurfaceData& surf) {
    return 2 - euler_pairing(v, v, surf);
}

Rational bg_bound(std::int64_t r, std::int64_t c, const SurfaceData& surf) {
    require_positive_rank(r);
    return make_rational(c * c * surf.h_squared, 2 * r);
}

std::int64_t sharp_bound(std::int64_t r, std::int64_t c, const SurfaceData& surf) {
    require_positive_rank(r);
    if (!surf.is_k3()) {
        return floor_to_int(bg_bound(r, c, surf));
    }
    return floor_to_int(bg_bound(r, c, surf) - r + make_rational(1, r));
}

}  // namespace kwalls
