#pragma once

// Deterministic random generators shared by the tests. splitmix64-based so
// results do not depend on the standard library's distribution internals.

#include <cmath>
#include <cstdint>
#include <vector>

#include "rqi/cmatrix.hpp"
#include "rqi/kinematics.hpp"
#include "rqi/qstate.hpp"

namespace rqi::test {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    double uniform() { // [0, 1)
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z = z ^ (z >> 31);
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() { // Box-Muller
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
    }

    cplx gaussian_cplx() { return {gaussian(), gaussian()}; }

    Vec3 unit_vec3() {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * 3.141592653589793);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

private:
    std::uint64_t state_;
};

inline CMatrix random_matrix(Rng& rng, int rows, int cols) {
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian_cplx();
    return m;
}

inline CMatrix random_hermitian(Rng& rng, int n) {
    const CMatrix g = random_matrix(rng, n, n);
    return (g + g.adjoint()) * cplx(0.5, 0.0);
}

// Random full-rank density matrix G G^dagger / Tr.
inline CMatrix random_density(Rng& rng, int n) {
    const CMatrix g = random_matrix(rng, n, n);
    CMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    return rho * cplx(1.0 / tr, 0.0);
}

inline std::vector<cplx> random_state_vector(Rng& rng, int n) {
    std::vector<cplx> v(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (cplx& a : v) {
        a = rng.gaussian_cplx();
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : v) a *= inv;
    return v;
}

// Rodrigues rotation of x about unit axis n by angle t.
inline Vec3 rotate_vec(const Vec3& n, double t, const Vec3& x) {
    return x * std::cos(t) + n.cross(x) * std::sin(t) + n * (n.dot(x) * (1.0 - std::cos(t)));
}

// Rotation embedded in a Lorentz matrix, for wigner_rotation round trips.
inline LorentzMatrix lorentz_rotation(const Vec3& axis, double angle) {
    const Vec3 n = axis.normalized();
    const Vec3 cols[3] = {rotate_vec(n, angle, {1.0, 0.0, 0.0}),
                          rotate_vec(n, angle, {0.0, 1.0, 0.0}),
                          rotate_vec(n, angle, {0.0, 0.0, 1.0})};
    LorentzMatrix L;
    for (int j = 0; j < 3; ++j) {
        L(1, j + 1) = cols[j].x;
        L(2, j + 1) = cols[j].y;
        L(3, j + 1) = cols[j].z;
    }
    return L;
}

} // namespace rqi::test
