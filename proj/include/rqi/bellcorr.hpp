#pragma once

// CHSH correlations with the momentum-dependent spin observable that makes the
// maximal violation frame-independent, plus the Horodecki criterion and a
// derivative-free search used as its independent cross-check.

#include <cstdint>
#include <string>

#include "rqi/kinematics.hpp"
#include "rqi/qstate.hpp"

namespace rqi {

struct MeasurementDirection {
    std::string frame_tag; // informal frame label carried through reports
    FourVector vector;     // (0, a) in that frame
};

struct SpinObservable {
    CMatrix matrix; // 2x2, unit-norm direction dotted into the Pauli vector
    Vec3 direction; // the direction actually used
};

// Tr[rho (a.sigma (x) b.sigma)] for unit vectors a, b.
double chsh_expectation(const DensityMatrix& rho, const Vec3& a, const Vec3& b);

// B = a.sigma (x) (b - bp).sigma + ap.sigma (x) (b + bp).sigma.
CMatrix bell_observable(const Vec3& a, const Vec3& ap, const Vec3& b, const Vec3& bp);

// S = E(a,b) - E(a,bp) + E(ap,b) + E(ap,bp) = Tr[rho B].
double bell_parameter(const DensityMatrix& rho, const Vec3& a, const Vec3& ap,
                      const Vec3& b, const Vec3& bp);

// Horodecki criterion: with T_ij = Tr[rho sigma_i (x) sigma_j], M is the sum
// of the two largest eigenvalues of T^T T; max |S| = 2 sqrt(M).
double horodecki_M(const DensityMatrix& rho);

// Direction of the spin observable for a particle of velocity v when the
// lab-frame measurement direction is the unit vector a:
// (sqrt(1-v^2) a_perp + a_par) / sqrt(1 + v^2 (|a_par|^2 - 1)).
Vec3 pl_direction(const Vec3& a, const Vec3& v);

// Same observable built from four-vectors: normalized spatial part of
// L^{-1}(p) a dotted into the Pauli vector. a is purely spatial in the frame
// that defined it but may carry a time component after Lorentz transport.
SpinObservable pl_observable(const FourVector& a, const FourVector& p, double m);

// Singlet pair with momenta +/- v z, observer boost w x, canonical in-plane
// directions a = x, a' = y, b = (x+y)/sqrt2, b' = (y-x)/sqrt2.
//   s_initial:                |S| = 2 sqrt 2 before the boost;
//   s_boosted_fixed:          same directions naively reused after the boost;
//   s_boosted_transformed:    directions carried through the Wigner rotation,
//                             restoring |S| = 2 sqrt 2.
struct ChshDemoResult {
    double delta = 0.0;
    double s_initial = 0.0;
    double s_boosted_fixed = 0.0;
    double s_boosted_transformed = 0.0;
};
ChshDemoResult boosted_chsh_demo(double v, double w);

// Derivative-free maximization of |S| over measurement directions: seeded
// random quadruples followed by greedy coordinate ascent with step halving.
// Independent of horodecki_M; the two are compared in tests.
struct BellSearchResult {
    double best = 0.0; // max |S| found
    Vec3 a, ap, b, bp;
};
BellSearchResult max_bell_search(const DensityMatrix& rho, std::uint64_t seed,
                                 int n_candidates = 2000, int max_sweeps = 300);

} // namespace rqi
