#pragma once

// Two-particle spin (x) momentum states. Each particle carries a qubit-like
// momentum degree of freedom spanned by two sharp opposite momenta (p+ mapped
// to basis slot 0, p- to slot 1) and a spin-1/2. Canonical factor order is
// [momA, momB, spinA, spinB]; flattened index = mA*8 + mB*4 + sA*2 + sB.

#include <array>
#include <string>
#include <vector>

#include "rqi/cmatrix.hpp"
#include "rqi/errors.hpp"

namespace rqi {

enum class Factor { mom_a, mom_b, spin_a, spin_b };

std::string factor_name(Factor f);

struct PureState {
    std::vector<cplx> amplitudes;
    std::vector<int> factor_dims;
    std::vector<Factor> factor_labels;

    static PureState make(std::vector<cplx> amplitudes, std::vector<int> dims,
                          std::vector<Factor> labels);

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm() const;
    cplx inner(const PureState& other) const; // <this|other>
};

struct DensityMatrix {
    CMatrix matrix;
    std::vector<int> factor_dims;
    std::vector<Factor> factor_labels;

    static DensityMatrix from_pure(const PureState& psi);
    // Validates Hermiticity, unit trace and positivity (eigenvalues >= -EPS_EIG).
    static DensityMatrix make(CMatrix m, std::vector<int> dims, std::vector<Factor> labels);

    int dim() const { return matrix.rows(); }
    double purity() const; // Tr rho^2
};

// A partition of the tensor factors into disjoint covering blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;

    void validate(int n_factors) const; // throws InvalidPartition

    // The four partitions studied for the 2x2x2x2 system.
    static Partition four_qubits();      // {mA}{mB}{sA}{sB}
    static Partition spin_vs_momentum(); // {mA,mB}{sA,sB}
    static Partition alice_bob();        // {mA,sA}{mB,sB}
    static Partition cross_pair();       // {mB,sA}{mA,sB}
};

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

// Spin Bell pairs on [spinA, spinB].
PureState bell_state(BellKind kind);

// cos(alpha)|p+ p-> + sin(alpha)|p- p+> on [momA, momB].
PureState momentum_state(double alpha);

// cos(beta)|up down> + sin(beta)|down up> on [spinA, spinB].
PureState bell_type_spin(double beta);

// sin(theta)cos(phi)|up up> + sin(theta)sin(phi)(|up down>+|down up>)/sqrt(2)
//   + cos(theta)|down down> on [spinA, spinB].
PureState triplet_spin(double theta, double phi);

// Tensor product momentum (x) spin -> [momA, momB, spinA, spinB]. Throws
// LabelMismatch unless the inputs carry exactly those labels in order.
PureState compose_total(const PureState& momentum, const PureState& spin);

// Reduced density matrix over the kept factor positions (original order).
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

// Squared Schmidt coefficients across a two-block partition, descending,
// clipped to [0, 1] (eigenvalues in [-EPS_EIG, 0) snap to zero).
std::vector<double> schmidt_coefficients(const PureState& psi, const Partition& partition);

// (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z) of a single qubit.
std::array<double, 3> bloch_vector(const DensityMatrix& rho);

} // namespace rqi
