#include "rqi/bellcorr.hpp"

#include <algorithm>
#include <cmath>

#include "rqi/constants.hpp"
#include "rqi/relboost.hpp"

namespace rqi {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* fn) {
    if (rho.dim() != 4 || rho.factor_dims != std::vector<int>{2, 2})
        throw DimensionMismatch(std::string(fn) + ": expects a two-qubit state");
}

} // namespace

double chsh_expectation(const DensityMatrix& rho, const Vec3& a, const Vec3& b) {
    require_two_qubits(rho, "chsh_expectation");
    const CMatrix obs = kron(pauli_dot(a.normalized()), pauli_dot(b.normalized()));
    return (rho.matrix * obs).trace().real();
}

CMatrix bell_observable(const Vec3& a, const Vec3& ap, const Vec3& b, const Vec3& bp) {
    return kron(pauli_dot(a), pauli_dot(b - bp)) + kron(pauli_dot(ap), pauli_dot(b + bp));
}

double bell_parameter(const DensityMatrix& rho, const Vec3& a, const Vec3& ap,
                      const Vec3& b, const Vec3& bp) {
    require_two_qubits(rho, "bell_parameter");
    return (rho.matrix * bell_observable(a, ap, b, bp)).trace().real();
}

double horodecki_M(const DensityMatrix& rho) {
    require_two_qubits(rho, "horodecki_M");
    double t[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t[i][j] = (rho.matrix * kron(pauli(i + 1), pauli(j + 1))).trace().real();
    CMatrix tt(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[k][i] * t[k][j];
            tt(i, j) = s;
        }
    const EigenResult eig = hermitian_eigen(tt);
    return eig.eigenvalues[1] + eig.eigenvalues[2];
}

Vec3 pl_direction(const Vec3& a, const Vec3& v) {
    const double speed2 = v.dot(v);
    if (speed2 >= 1.0) throw SuperluminalVelocity("pl_direction: |v| >= 1");
    if (speed2 == 0.0) return a;
    const Vec3 vhat = v.normalized();
    const Vec3 a_par = vhat * a.dot(vhat);
    const Vec3 a_perp = a - a_par;
    const Vec3 num = std::sqrt(1.0 - speed2) * a_perp + a_par;
    return num * (1.0 / num.norm());
}

SpinObservable pl_observable(const FourVector& a, const FourVector& p, double m) {
    // a may carry a time component when it was Lorentz-transported from the
    // frame that defined it; only the rest-frame spatial part matters.
    const FourVector rest = standard_boost(p, m).inverse().apply(a);
    const Vec3 dir = rest.spatial().normalized();
    return {pauli_dot(dir), dir};
}

// ---- boosted CHSH demo ----

ChshDemoResult boosted_chsh_demo(double v, double w) {
    const double delta = wigner_angle_perpendicular(v, w);

    const Vec3 a{1.0, 0.0, 0.0};
    const Vec3 ap{0.0, 1.0, 0.0};
    const double r = 1.0 / std::sqrt(2.0);
    const Vec3 b{r, r, 0.0};
    const Vec3 bp{-r, r, 0.0};

    // Singlet spins riding on the sharp-momentum branch |p+ p->.
    const PureState initial = compose_total(momentum_state(0.0), bell_state(BellKind::psi_minus));
    const PureState boosted = boost_two_particle(initial, delta);
    const DensityMatrix rho_initial = reduced_density(initial, {2, 3});
    const DensityMatrix rho_boosted = reduced_density(boosted, {2, 3});

    ChshDemoResult out;
    out.delta = delta;

    // Momenta are along +/- z and directions in the x-y plane, so the
    // momentum-dependent observable direction coincides with the lab one.
    const double m = 1.0;
    const FourVector p_plus = four_momentum(m, {0.0, 0.0, v});
    const FourVector p_minus = four_momentum(m, {0.0, 0.0, -v});
    auto observable = [&](const Vec3& n, const FourVector& p) {
        return pl_observable(FourVector::from_parts(0.0, n), p, m).matrix;
    };
    const CMatrix oa = observable(a, p_plus), oap = observable(ap, p_plus);
    const CMatrix ob = observable(b, p_minus), obp = observable(bp, p_minus);

    auto s_of = [&](const DensityMatrix& rho, const CMatrix& xa, const CMatrix& xap,
                    const CMatrix& xb, const CMatrix& xbp) {
        const CMatrix bell = kron(xa, xb - xbp) + kron(xap, xb + xbp);
        return (rho.matrix * bell).trace().real();
    };

    out.s_initial = s_of(rho_initial, oa, oap, ob, obp);
    out.s_boosted_fixed = s_of(rho_boosted, oa, oap, ob, obp);

    // Transformed observables: carry each direction four-vector and each
    // particle momentum through the observer boost and rebuild the observable
    // there. The hidden Wigner rotation is the same one the spins received.
    const LorentzMatrix lambda = boost_from_velocity({w, 0.0, 0.0});
    auto transformed = [&](const Vec3& n, const FourVector& p) {
        return pl_observable(lambda.apply(FourVector::from_parts(0.0, n)),
                             lambda.apply(p), m)
            .matrix;
    };
    out.s_boosted_transformed =
        s_of(rho_boosted, transformed(a, p_plus), transformed(ap, p_plus),
             transformed(b, p_minus), transformed(bp, p_minus));
    return out;
}

// ---- derivative-free search ----

namespace {

// Deterministic uniform double in [0, 1); avoids the implementation-defined
// std distributions so results are stable across platforms.
double next_uniform(std::uint64_t& state) {
    // splitmix64 step
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Vec3 random_unit(std::uint64_t& state) {
    const double z = 2.0 * next_uniform(state) - 1.0;
    const double phi = 2.0 * PI * next_uniform(state);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

} // namespace

BellSearchResult max_bell_search(const DensityMatrix& rho, std::uint64_t seed,
                                 int n_candidates, int max_sweeps) {
    require_two_qubits(rho, "max_bell_search");
    std::uint64_t state = seed;

    BellSearchResult best;
    for (int trial = 0; trial < n_candidates; ++trial) {
        const Vec3 a = random_unit(state), ap = random_unit(state);
        const Vec3 b = random_unit(state), bp = random_unit(state);
        const double s = std::abs(bell_parameter(rho, a, ap, b, bp));
        if (s > best.best) best = {s, a, ap, b, bp};
    }

    const Vec3 axes[3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    double step = 0.3;
    for (int sweep = 0; sweep < max_sweeps && step > 1e-8; ++sweep) {
        bool improved = false;
        Vec3* dirs[4] = {&best.a, &best.ap, &best.b, &best.bp};
        for (Vec3* d : dirs)
            for (const Vec3& e : axes)
                for (double sgn : {1.0, -1.0}) {
                    const Vec3 saved = *d;
                    const Vec3 trial_dir = (saved + sgn * step * e);
                    if (trial_dir.norm() == 0.0) continue;
                    *d = trial_dir.normalized();
                    const double s =
                        std::abs(bell_parameter(rho, best.a, best.ap, best.b, best.bp));
                    if (s > best.best + 1e-15) {
                        best.best = s;
                        improved = true;
                    } else {
                        *d = saved;
                    }
                }
        if (!improved) step *= 0.5;
    }
    return best;
}

} // namespace rqi
