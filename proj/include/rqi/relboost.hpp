#pragma once

// Applying momentum-dependent spin rotations to two-particle states, plus a
// Gaussian wave-packet average where the sharp-momentum picture is replaced by
// a quadrature over a smeared packet.
//
// Canonical two-particle geometry: particle A and B momenta lie along +/- z
// with speed v, the observer boost is perpendicular (along x) with speed w.
// The boost acts on each sharp momentum branch through the spin-1/2 Wigner
// rotation; for momentum p+ (along +z) the rotation axis is -y with angle
// delta, for p- it is +y.

#include <utility>
#include <vector>

#include "rqi/kinematics.hpp"
#include "rqi/qstate.hpp"

namespace rqi {

struct ScenarioParams {
    enum class Family { bell, triplet };

    Family family = Family::bell;
    double alpha = 0.0; // momentum superposition angle
    double beta = 0.0;  // bell family spin angle
    double theta = 0.0; // triplet polar angle
    double phi = 0.0;   // triplet azimuthal angle
    double v = 0.0;     // particle speed (0 when delta was set directly)
    double w = 0.0;     // observer boost speed
    double delta = 0.0; // Wigner angle; derived from (v, w) unless set directly

    static ScenarioParams bell_family(double alpha, double beta, double v, double w);
    static ScenarioParams triplet_family(double alpha, double theta, double phi,
                                         double v, double w);
    static ScenarioParams bell_family_delta(double alpha, double beta, double delta);
    static ScenarioParams triplet_family_delta(double alpha, double theta, double phi,
                                               double delta);

    PureState spin_state() const;
    PureState initial_state() const; // momentum (x) spin
};

// Per-branch Wigner rotation of the spins: branch (mA, mB) receives
// U_{s(mA)} (x) U_{s(mB)} with s(p+) = +, s(p-) = -.
PureState boost_two_particle(const PureState& total, double delta);

// The SU(2) pair used above: su2_branch(+1, delta) has matrix rows
// [cos d/2, sin d/2; -sin d/2, cos d/2]; su2_branch(-1, delta) is its inverse.
SU2Matrix su2_branch(int momentum_sign, double delta);

// (initial, boosted) pair for a scenario.
std::pair<PureState, PureState> boost_scenario(const ScenarioParams& params);

// Single-particle reference route: apply the SU(2) lift of W(lambda, p) to a
// spinor. Used to cross-check the canonical-geometry shortcut above.
std::vector<cplx> boost_single_wigner(const std::vector<cplx>& spinor,
                                      const LorentzMatrix& lambda,
                                      const FourVector& p, double m);

// ---- Gaussian wave packet ----

struct GaussianPacket {
    double mass = 1.0;
    double width = 0.01;     // momentum density  ~ exp(-(p - center)^2 / width^2)
    Vec3 center{0.0, 0.0, 0.0};
    double rapidity = 1.0;   // observer boost along +x
    int nodes_per_axis = 21; // Gauss-Hermite nodes per momentum axis
};

// Reduced spin density of an initially spin-up packet after the boost, i.e.
// the quadrature average of U(W(boost, p)) |up><up| U^dagger weighted by the
// packet density with the invariant-measure factor 1/(2 E_p), weights
// renormalized to unit sum. Both variants accumulate node contributions in
// the same fixed index order, so their outputs agree bitwise; the plain
// version distributes node evaluations across OpenMP threads when available.
DensityMatrix gaussian_boosted_spin_density(const GaussianPacket& packet);
DensityMatrix gaussian_boosted_spin_density_serial(const GaussianPacket& packet);

// Small-width estimate of the spin-momentum entanglement entropy (natural log)
// generated by the boost: with x = (width^2 / 8 mass^2) tanh^2(rapidity / 2),
// S ~ x (1 - ln x).
double gaussian_entropy_estimate(double width, double mass, double rapidity);

// Gauss-Hermite nodes and weights for integr. of exp(-x^2) f(x); Golub-Welsch
// on the symmetric tridiagonal recurrence matrix.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace rqi
