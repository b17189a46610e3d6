#pragma once

// Entanglement measures and the closed-form expressions for how a boost
// redistributes entanglement across the partitions of the two-particle
// spin (x) momentum system.

#include <vector>

#include "rqi/qstate.hpp"

namespace rqi {

enum class LogBase { two, natural, dim };

// 1 - Tr rho^2 (unnormalized; max (d-1)/d).
double linear_entropy(const DensityMatrix& rho);

// -sum lambda log lambda. Eigenvalues in [-EPS_EIG, 0) count as zero; anything
// more negative throws InvalidDensityMatrix. LogBase::dim uses log base dim(rho).
double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::two);

// log(sum lambda^alpha) / (1 - alpha); alpha = 0 gives log(rank).
// Throws InvalidAlpha for alpha < 0 or alpha == 1.
double renyi_entropy(const DensityMatrix& rho, double alpha, LogBase base = LogBase::natural);

// Partition entanglement E = sum over blocks of the linear entropy of the
// block's reduced state; per-block von Neumann entropies (base 2) reported too.
struct EntanglementReport {
    Partition partition;
    std::vector<double> block_linear_entropies;
    std::vector<double> block_von_neumann_entropies;
    double total = 0.0; // sum of block linear entropies
};

EntanglementReport partition_entanglement(const PureState& psi, const Partition& partition);

// Two-qubit concurrence C = max(0, r1 - r2 - r3 - r4) with r_i the descending
// square roots of the eigenvalues of sqrt(rho) rho_tilde sqrt(rho),
// rho_tilde = (sy (x) sy) conj(rho) (sy (x) sy).
double concurrence(const DensityMatrix& rho);

// h((1 + sqrt(1 - C^2)) / 2) with binary entropy h, base 2.
double entanglement_of_formation(const DensityMatrix& rho);

struct PptResult {
    bool positive = false;   // min eigenvalue >= -EPS_EIG
    double min_eigenvalue = 0.0;
};

// Partial-transpose test across the two factors of a bipartite state.
PptResult ppt_check(const DensityMatrix& rho, int subsystem = 0);

// True when every one of the 7 bipartitions of the four factors carries
// entanglement (block linear entropy > EPS_EIG).
bool genuine_multipartite_entangled(const PureState& psi);

// ---- closed forms, canonical perpendicular geometry ----

// Family cos(beta)|ud> + sin(beta)|du| with momentum angle alpha and Wigner
// angle delta.
struct BellClosedForms {
    double e_4q_initial = 0.0;     // single-factor partition, before boost
    double e_4q_boosted = 0.0;     // after boost
    double e_4q_diff = 0.0;        // boosted - initial
    double e_spinmom_boosted = 0.0; // spins vs momenta (0 before boost)
    double e_alice_bob = 0.0;       // particle A vs particle B, boost-invariant
};
BellClosedForms closed_forms_bell(double alpha, double beta, double delta);

// Triplet family sin(t)cos(f)|uu> + sin(t)sin(f)|psi+> + cos(t)|dd>.
struct TripletClosedForms {
    double e_4q_diff = 0.0;
    double e_spinmom_boosted = 0.0;
    double e_alice_bob = 0.0;
};
TripletClosedForms closed_forms_triplet(double alpha, double theta, double phi, double delta);

} // namespace rqi
