#pragma once

// Special-relativistic kinematics: passive boosts, the rotation hiding inside
// a product of non-collinear boosts, and its spin-1/2 representation.
//
// Boost convention (passive, c = 1): L(v) maps the four-momentum of a particle
// moving with velocity v to its rest-frame components,
//   L(v)^0_0 = gamma, L(v)^i_0 = L(v)^0_i = -gamma v^i,
//   L(v)^i_j = delta_ij + (gamma - 1) v^i v^j / |v|^2.

#include <array>
#include <cmath>

#include "rqi/cmatrix.hpp"
#include "rqi/errors.hpp"

namespace rqi {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    // Metric signature (+,-,-,-).
    double minkowski(const FourVector& o) const { return t * o.t - x * o.x - y * o.y - z * o.z; }
    Vec3 spatial() const { return {x, y, z}; }
    static FourVector from_parts(double t, const Vec3& s) { return {t, s.x, s.y, s.z}; }
};

class LorentzMatrix {
public:
    LorentzMatrix(); // identity
    double& operator()(int mu, int nu) { return m_[mu][nu]; }
    double operator()(int mu, int nu) const { return m_[mu][nu]; }

    LorentzMatrix operator*(const LorentzMatrix& other) const;
    FourVector apply(const FourVector& p) const;

    // Exact inverse for any Lorentz matrix: eta L^T eta.
    LorentzMatrix inverse() const;

    // max |(L^T eta L - eta)_{mu nu}|; zero for an exact Lorentz matrix.
    double lorentz_defect() const;

private:
    std::array<std::array<double, 4>, 4> m_;
};

struct Rotation3 {
    Vec3 axis{0.0, 0.0, 1.0}; // unit vector; carries the sign of the rotation
    double angle = 0.0;       // in [0, pi]
};

struct SU2Matrix {
    // Row-major 2x2: [[a, b], [c, d]].
    cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    SU2Matrix operator*(const SU2Matrix& o) const;
    SU2Matrix adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    CMatrix to_cmatrix() const;
    double unitarity_defect() const; // max |(U U^dagger - I)_{ij}|
};

// ---- Pauli matrices ----
CMatrix pauli(int i);                 // i in {1,2,3}
CMatrix pauli_dot(const Vec3& n);     // n.x sigma_x + n.y sigma_y + n.z sigma_z

// ---- boosts ----
double rapidity_from_speed(double speed); // atanh; throws SuperluminalVelocity
double speed_from_rapidity(double xi);    // tanh

LorentzMatrix boost_from_velocity(const Vec3& v); // passive; throws SuperluminalVelocity

// Four-momentum of a particle of mass m moving with velocity v: (gamma m, gamma m v).
FourVector four_momentum(double m, const Vec3& v);

// Standard boost L(p) with L(p) k = p for k = (m,0,0,0); equals
// boost_from_velocity(-p_vec/E). Throws OffMassShell when p.p != m^2 (tol 1e-9)
// or the energy is not positive.
LorentzMatrix standard_boost(const FourVector& p, double m);

// Axis/angle extraction from a pure rotation embedded in a Lorentz matrix.
// Angles below 1e-9 collapse to the identity rotation with axis +z.
Rotation3 rotation_from_lorentz(const LorentzMatrix& r);

// W(Lambda, p) = L^{-1}(Lambda p) Lambda L(p); a pure rotation for any
// Lorentz Lambda and on-shell p.
Rotation3 wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double m);

// Rotation angle for perpendicular boost composition:
// cos delta = (gamma_v + gamma_w) / (1 + gamma_v gamma_w).
double wigner_angle_perpendicular(double v, double w);

// Rotation angle contained in boost_from_velocity(w) * boost_from_velocity(v)
// for general directions, via gamma_u = gamma_v gamma_w (1 + v.w):
// cos delta = (1 + gamma_u + gamma_v + gamma_w)^2
//             / ((1 + gamma_u)(1 + gamma_v)(1 + gamma_w)) - 1.
// The corresponding axis is along v x w. For the Wigner rotation of a particle
// with velocity u under an observer boost w, pass v = -u (since L(p) is the
// boost with velocity -u).
double wigner_angle_general(const Vec3& v, const Vec3& w);

// Spin-1/2 representative U = exp(-i angle axis.sigma / 2)
//                          = cos(angle/2) I - i sin(angle/2) axis.sigma.
SU2Matrix su2_from_rotation(const Rotation3& r);

} // namespace rqi
