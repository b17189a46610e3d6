#include "rqi/qstate.hpp"

#include <algorithm>
#include <cmath>

#include "rqi/constants.hpp"
#include "rqi/kinematics.hpp"

namespace rqi {

std::string factor_name(Factor f) {
    switch (f) {
        case Factor::mom_a: return "momA";
        case Factor::mom_b: return "momB";
        case Factor::spin_a: return "spinA";
        case Factor::spin_b: return "spinB";
    }
    return "?";
}

// ---- PureState ----

PureState PureState::make(std::vector<cplx> amplitudes, std::vector<int> dims,
                          std::vector<Factor> labels) {
    if (dims.size() != labels.size())
        throw LabelMismatch("PureState::make: one label per factor required");
    int total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionMismatch("PureState::make: factor dimension < 1");
        total *= d;
    }
    if (total != static_cast<int>(amplitudes.size()))
        throw DimensionMismatch("PureState::make: amplitude count does not match dims");
    return {std::move(amplitudes), std::move(dims), std::move(labels)};
}

double PureState::norm() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

cplx PureState::inner(const PureState& other) const {
    if (dim() != other.dim())
        throw DimensionMismatch("PureState::inner: dimension mismatch");
    cplx s(0.0, 0.0);
    for (int i = 0; i < dim(); ++i) s += std::conj(amplitudes[static_cast<std::size_t>(i)]) *
                                          other.amplitudes[static_cast<std::size_t>(i)];
    return s;
}

// ---- DensityMatrix ----

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    return {outer(psi.amplitudes, psi.amplitudes), psi.factor_dims, psi.factor_labels};
}

DensityMatrix DensityMatrix::make(CMatrix m, std::vector<int> dims, std::vector<Factor> labels) {
    if (dims.size() != labels.size())
        throw LabelMismatch("DensityMatrix::make: one label per factor required");
    int total = 1;
    for (int d : dims) total *= d;
    if (m.rows() != total || m.cols() != total)
        throw DimensionMismatch("DensityMatrix::make: dims product does not match matrix size");
    if (!m.is_hermitian())
        throw NotHermitian("DensityMatrix::make: matrix not Hermitian");
    if (std::abs(m.trace() - cplx(1.0, 0.0)) > 1e-12)
        throw InvalidDensityMatrix("DensityMatrix::make: trace differs from 1");
    const EigenResult eig = hermitian_eigen(m);
    if (eig.eigenvalues.front() < -EPS_EIG)
        throw InvalidDensityMatrix("DensityMatrix::make: negative eigenvalue " +
                                   std::to_string(eig.eigenvalues.front()));
    return {std::move(m), std::move(dims), std::move(labels)};
}

double DensityMatrix::purity() const { return (matrix * matrix).trace().real(); }

// ---- Partition ----

void Partition::validate(int n_factors) const {
    if (blocks.empty()) throw InvalidPartition("Partition: no blocks");
    std::vector<bool> seen(static_cast<std::size_t>(n_factors), false);
    for (const auto& block : blocks) {
        if (block.empty()) throw InvalidPartition("Partition: empty block");
        for (int k : block) {
            if (k < 0 || k >= n_factors)
                throw InvalidPartition("Partition: factor index out of range");
            if (seen[static_cast<std::size_t>(k)])
                throw InvalidPartition("Partition: factor appears twice");
            seen[static_cast<std::size_t>(k)] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw InvalidPartition("Partition: blocks do not cover all factors");
}

Partition Partition::four_qubits() { return {{{0}, {1}, {2}, {3}}}; }
Partition Partition::spin_vs_momentum() { return {{{0, 1}, {2, 3}}}; }
Partition Partition::alice_bob() { return {{{0, 2}, {1, 3}}}; }
Partition Partition::cross_pair() { return {{{1, 2}, {0, 3}}}; }

// ---- canonical states ----

namespace {
const std::vector<Factor> SPIN_LABELS = {Factor::spin_a, Factor::spin_b};
const std::vector<Factor> MOM_LABELS = {Factor::mom_a, Factor::mom_b};
const double INV_SQRT2 = 0.7071067811865475244;
} // namespace

PureState bell_state(BellKind kind) {
    std::vector<cplx> amp(4, cplx(0.0, 0.0));
    switch (kind) {
        case BellKind::phi_plus:  amp[0] = INV_SQRT2; amp[3] = INV_SQRT2; break;
        case BellKind::phi_minus: amp[0] = INV_SQRT2; amp[3] = -INV_SQRT2; break;
        case BellKind::psi_plus:  amp[1] = INV_SQRT2; amp[2] = INV_SQRT2; break;
        case BellKind::psi_minus: amp[1] = INV_SQRT2; amp[2] = -INV_SQRT2; break;
    }
    return PureState::make(std::move(amp), {2, 2}, SPIN_LABELS);
}

PureState momentum_state(double alpha) {
    std::vector<cplx> amp(4, cplx(0.0, 0.0));
    amp[0b01] = std::cos(alpha); // |p+ p->
    amp[0b10] = std::sin(alpha); // |p- p+>
    return PureState::make(std::move(amp), {2, 2}, MOM_LABELS);
}

PureState bell_type_spin(double beta) {
    std::vector<cplx> amp(4, cplx(0.0, 0.0));
    amp[0b01] = std::cos(beta); // |up down>
    amp[0b10] = std::sin(beta); // |down up>
    return PureState::make(std::move(amp), {2, 2}, SPIN_LABELS);
}

PureState triplet_spin(double theta, double phi) {
    std::vector<cplx> amp(4, cplx(0.0, 0.0));
    amp[0b00] = std::sin(theta) * std::cos(phi);
    amp[0b01] = std::sin(theta) * std::sin(phi) * INV_SQRT2;
    amp[0b10] = std::sin(theta) * std::sin(phi) * INV_SQRT2;
    amp[0b11] = std::cos(theta);
    return PureState::make(std::move(amp), {2, 2}, SPIN_LABELS);
}

PureState compose_total(const PureState& momentum, const PureState& spin) {
    if (momentum.factor_labels != MOM_LABELS)
        throw LabelMismatch("compose_total: first argument must carry [momA, momB]");
    if (spin.factor_labels != SPIN_LABELS)
        throw LabelMismatch("compose_total: second argument must carry [spinA, spinB]");
    std::vector<cplx> amp(static_cast<std::size_t>(momentum.dim() * spin.dim()));
    for (int m = 0; m < momentum.dim(); ++m)
        for (int s = 0; s < spin.dim(); ++s)
            amp[static_cast<std::size_t>(m * spin.dim() + s)] =
                momentum.amplitudes[static_cast<std::size_t>(m)] *
                spin.amplitudes[static_cast<std::size_t>(s)];
    return PureState::make(std::move(amp), {2, 2, 2, 2},
                           {Factor::mom_a, Factor::mom_b, Factor::spin_a, Factor::spin_b});
}

// ---- reductions ----

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
    const CMatrix rho = outer(psi.amplitudes, psi.amplitudes);
    CMatrix red = partial_trace(rho, psi.factor_dims, keep);
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> dims;
    std::vector<Factor> labels;
    for (int k : sorted) {
        dims.push_back(psi.factor_dims[static_cast<std::size_t>(k)]);
        labels.push_back(psi.factor_labels[static_cast<std::size_t>(k)]);
    }
    return {std::move(red), std::move(dims), std::move(labels)};
}

std::vector<double> schmidt_coefficients(const PureState& psi, const Partition& partition) {
    partition.validate(static_cast<int>(psi.factor_dims.size()));
    if (partition.blocks.size() != 2)
        throw InvalidPartition("schmidt_coefficients: partition must have exactly two blocks");
    const DensityMatrix rho = reduced_density(psi, partition.blocks[0]);
    EigenResult eig = hermitian_eigen(rho.matrix);
    std::vector<double> coeffs;
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it) {
        double v = *it;
        if (v < 0.0 && v >= -EPS_EIG) v = 0.0;
        coeffs.push_back(std::clamp(v, 0.0, 1.0));
    }
    return coeffs;
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw DimensionMismatch("bloch_vector: expects a single qubit");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = (rho.matrix * pauli(i + 1)).trace().real();
    return out;
}

} // namespace rqi
