#include "rqi/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rqi/constants.hpp"

namespace rqi {

namespace {

double gamma_of(double speed) { return 1.0 / std::sqrt(1.0 - speed * speed); }

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

constexpr double ANGLE_ZERO_TOL = 1e-9; // below this a rotation counts as identity

} // namespace

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n == 0.0) throw Error("Vec3::normalized: zero vector");
    return {x / n, y / n, z / n};
}

// ---- LorentzMatrix ----

LorentzMatrix::LorentzMatrix() {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m_[i][j] = (i == j) ? 1.0 : 0.0;
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& other) const {
    LorentzMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m_[i][k] * other.m_[k][j];
            out.m_[i][j] = s;
        }
    return out;
}

FourVector LorentzMatrix::apply(const FourVector& p) const {
    const double in[4] = {p.t, p.x, p.y, p.z};
    double out[4] = {0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += m_[i][j] * in[j];
    return {out[0], out[1], out[2], out[3]};
}

LorentzMatrix LorentzMatrix::inverse() const {
    // eta L^T eta: flips the sign of the time-space blocks.
    LorentzMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double eta_i = (i == 0) ? 1.0 : -1.0;
            const double eta_j = (j == 0) ? 1.0 : -1.0;
            out.m_[i][j] = eta_i * eta_j * m_[j][i];
        }
    return out;
}

double LorentzMatrix::lorentz_defect() const {
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double eta_k = (k == 0) ? 1.0 : -1.0;
                s += m_[k][mu] * eta_k * m_[k][nu];
            }
            const double eta_mn = (mu == nu) ? ((mu == 0) ? 1.0 : -1.0) : 0.0;
            worst = std::max(worst, std::abs(s - eta_mn));
        }
    return worst;
}

// ---- SU2Matrix ----

SU2Matrix SU2Matrix::operator*(const SU2Matrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

CMatrix SU2Matrix::to_cmatrix() const { return CMatrix::from_rows({{a, b}, {c, d}}); }

double SU2Matrix::unitarity_defect() const {
    const SU2Matrix p = (*this) * adjoint();
    double worst = std::abs(p.a - cplx(1.0, 0.0));
    worst = std::max(worst, std::abs(p.b));
    worst = std::max(worst, std::abs(p.c));
    worst = std::max(worst, std::abs(p.d - cplx(1.0, 0.0)));
    return worst;
}

// ---- Pauli matrices ----

CMatrix pauli(int i) {
    switch (i) {
        case 1: return CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case 2: return CMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
        case 3: return CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
        default: throw Error("pauli: index must be 1, 2 or 3");
    }
}

CMatrix pauli_dot(const Vec3& n) {
    return CMatrix::from_rows({{cplx(n.z, 0.0), cplx(n.x, -n.y)},
                               {cplx(n.x, n.y), cplx(-n.z, 0.0)}});
}

// ---- boosts ----

double rapidity_from_speed(double speed) {
    if (std::abs(speed) >= 1.0)
        throw SuperluminalVelocity("rapidity_from_speed: |speed| >= 1");
    return std::atanh(speed);
}

double speed_from_rapidity(double xi) { return std::tanh(xi); }

LorentzMatrix boost_from_velocity(const Vec3& v) {
    const double v2 = v.dot(v);
    if (v2 >= 1.0)
        throw SuperluminalVelocity("boost_from_velocity: |v| >= 1, got |v| = " +
                                   std::to_string(std::sqrt(v2)));
    LorentzMatrix L;
    if (v2 == 0.0) return L;
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    const double comp[3] = {v.x, v.y, v.z};
    L(0, 0) = gamma;
    for (int i = 0; i < 3; ++i) {
        L(0, i + 1) = -gamma * comp[i];
        L(i + 1, 0) = -gamma * comp[i];
        for (int j = 0; j < 3; ++j)
            L(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (gamma - 1.0) * comp[i] * comp[j] / v2;
    }
    return L;
}

FourVector four_momentum(double m, const Vec3& v) {
    const double v2 = v.dot(v);
    if (v2 >= 1.0) throw SuperluminalVelocity("four_momentum: |v| >= 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    return FourVector::from_parts(gamma * m, (gamma * m) * v);
}

LorentzMatrix standard_boost(const FourVector& p, double m) {
    if (m <= 0.0) throw OffMassShell("standard_boost: mass must be positive");
    const double invariant = p.minkowski(p);
    if (std::abs(invariant - m * m) > 1e-9)
        throw OffMassShell("standard_boost: p.p = " + std::to_string(invariant) +
                           " but m^2 = " + std::to_string(m * m));
    if (p.t <= 0.0) throw OffMassShell("standard_boost: energy must be positive");
    // L(p) = boost with velocity -p_vec/E maps the rest-frame momentum to p.
    return boost_from_velocity(-(p.spatial() * (1.0 / p.t)));
}

// ---- rotation extraction ----

Rotation3 rotation_from_lorentz(const LorentzMatrix& r) {
    for (int k = 1; k < 4; ++k)
        if (std::abs(r(0, k)) > 1e-6 || std::abs(r(k, 0)) > 1e-6)
            throw Error("rotation_from_lorentz: time row/column not trivial");
    if (std::abs(r(0, 0) - 1.0) > 1e-6)
        throw Error("rotation_from_lorentz: time-time entry differs from 1");

    const double tr = r(1, 1) + r(2, 2) + r(3, 3);
    const double cos_part = (tr - 1.0) / 2.0;
    const Vec3 sin_vec{(r(3, 2) - r(2, 3)) / 2.0, (r(1, 3) - r(3, 1)) / 2.0,
                       (r(2, 1) - r(1, 2)) / 2.0};
    const double sin_part = sin_vec.norm();
    // atan2 keeps full precision at both ends of [0, pi]; the arccos of the
    // trace alone turns entry rounding of 1e-16 into ~1e-8 of angle near 0.
    const double angle = std::atan2(sin_part, cos_part);
    if (angle < ANGLE_ZERO_TOL) return {{0.0, 0.0, 1.0}, 0.0};

    if (sin_part > 1e-6) return {sin_vec.normalized(), angle};

    // Angle at or near pi: (R + I)/2 = n n^T there; take the dominant diagonal
    // as the reference component and read the signs from its row.
    double diag[3] = {(r(1, 1) + 1.0) / 2.0, (r(2, 2) + 1.0) / 2.0, (r(3, 3) + 1.0) / 2.0};
    int lead = 0;
    for (int i = 1; i < 3; ++i)
        if (diag[i] > diag[lead]) lead = i;
    double n[3];
    n[lead] = std::sqrt(std::max(diag[lead], 0.0));
    for (int i = 0; i < 3; ++i)
        if (i != lead) n[i] = (r(lead + 1, i + 1) + r(i + 1, lead + 1)) / (4.0 * n[lead]);
    return {Vec3{n[0], n[1], n[2]}.normalized(), angle};
}

Rotation3 wigner_rotation(const LorentzMatrix& lambda, const FourVector& p, double m) {
    const FourVector lp = lambda.apply(p);
    const LorentzMatrix w = standard_boost(lp, m).inverse() * lambda * standard_boost(p, m);
    return rotation_from_lorentz(w);
}

double wigner_angle_perpendicular(double v, double w) {
    if (v < 0.0 || w < 0.0)
        throw Error("wigner_angle_perpendicular: speeds must be non-negative");
    if (v >= 1.0 || w >= 1.0)
        throw SuperluminalVelocity("wigner_angle_perpendicular: speed >= 1");
    const double gv = gamma_of(v), gw = gamma_of(w);
    return std::acos(clamp_unit((gv + gw) / (1.0 + gv * gw)));
}

double wigner_angle_general(const Vec3& v, const Vec3& w) {
    const double sv = v.norm(), sw = w.norm();
    if (sv >= 1.0 || sw >= 1.0)
        throw SuperluminalVelocity("wigner_angle_general: speed >= 1");
    const double gv = gamma_of(sv), gw = gamma_of(sw);
    const double gu = gv * gw * (1.0 + v.dot(w));
    const double num = 1.0 + gu + gv + gw;
    return std::acos(clamp_unit(num * num / ((1.0 + gu) * (1.0 + gv) * (1.0 + gw)) - 1.0));
}

SU2Matrix su2_from_rotation(const Rotation3& r) {
    if (r.angle < ANGLE_ZERO_TOL) return SU2Matrix{};
    const Vec3 n = r.axis.normalized();
    const double ch = std::cos(r.angle / 2.0);
    const double sh = std::sin(r.angle / 2.0);
    // cos(angle/2) I - i sin(angle/2) n.sigma
    return {cplx(ch, -sh * n.z), cplx(-sh * n.y, -sh * n.x),
            cplx(sh * n.y, -sh * n.x), cplx(ch, sh * n.z)};
}

} // namespace rqi
