#include "rqi/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "rqi/constants.hpp"
#include "rqi/kinematics.hpp"

namespace rqi {

namespace {

double log_with_base(double x, LogBase base, int dim) {
    switch (base) {
        case LogBase::two: return std::log2(x);
        case LogBase::natural: return std::log(x);
        case LogBase::dim: return std::log(x) / std::log(static_cast<double>(dim));
    }
    return std::log(x);
}

// Eigenvalues of rho with the clipping policy applied.
std::vector<double> spectrum(const DensityMatrix& rho) {
    EigenResult eig = hermitian_eigen(rho.matrix);
    for (double& v : eig.eigenvalues) {
        if (v < -EPS_EIG)
            throw InvalidDensityMatrix("spectrum: eigenvalue " + std::to_string(v) +
                                       " below positivity tolerance");
        if (v < 0.0) v = 0.0;
    }
    return eig.eigenvalues;
}

double binary_entropy(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

} // namespace

double linear_entropy(const DensityMatrix& rho) { return 1.0 - rho.purity(); }

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
    double s = 0.0;
    for (double v : spectrum(rho))
        if (v > 0.0) s -= v * log_with_base(v, base, rho.dim());
    return s;
}

double renyi_entropy(const DensityMatrix& rho, double alpha, LogBase base) {
    if (alpha < 0.0) throw InvalidAlpha("renyi_entropy: alpha must be non-negative");
    if (alpha == 1.0) throw InvalidAlpha("renyi_entropy: alpha = 1 is the von Neumann limit");
    const std::vector<double> lam = spectrum(rho);
    if (alpha == 0.0) {
        int rank = 0;
        for (double v : lam)
            if (v > EPS_EIG) ++rank;
        return log_with_base(static_cast<double>(rank), base, rho.dim());
    }
    double s = 0.0;
    for (double v : lam)
        if (v > 0.0) s += std::pow(v, alpha);
    return log_with_base(s, base, rho.dim()) / (1.0 - alpha);
}

EntanglementReport partition_entanglement(const PureState& psi, const Partition& partition) {
    partition.validate(static_cast<int>(psi.factor_dims.size()));
    EntanglementReport report;
    report.partition = partition;
    for (const auto& block : partition.blocks) {
        const DensityMatrix red = reduced_density(psi, block);
        const double lin = linear_entropy(red);
        report.block_linear_entropies.push_back(lin);
        report.block_von_neumann_entropies.push_back(von_neumann_entropy(red));
        report.total += lin;
    }
    return report;
}

// ---- two-qubit measures ----

namespace {

CMatrix matrix_sqrt_psd(const CMatrix& m) {
    const EigenResult eig = hermitian_eigen(m);
    const int n = m.rows();
    CMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = std::max(eig.eigenvalues[static_cast<std::size_t>(k)], 0.0);
        const double r = std::sqrt(lam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += r * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return out;
}

} // namespace

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4 || rho.factor_dims != std::vector<int>{2, 2})
        throw DimensionMismatch("concurrence: expects a two-qubit state");
    const CMatrix yy = kron(pauli(2), pauli(2));
    const CMatrix rho_tilde = yy * rho.matrix.conjugate() * yy;
    const CMatrix root = matrix_sqrt_psd(rho.matrix);
    const CMatrix m = root * rho_tilde * root;
    // Roundoff can leave a ~1e-16 anti-Hermitian residue; symmetrize before solving.
    const CMatrix herm = (m + m.adjoint()) * cplx(0.5, 0.0);
    EigenResult eig = hermitian_eigen(herm);
    std::vector<double> r;
    for (double v : eig.eigenvalues) r.push_back(std::sqrt(std::max(v, 0.0)));
    std::sort(r.begin(), r.end(), std::greater<double>());
    return std::max(0.0, r[0] - r[1] - r[2] - r[3]);
}

double entanglement_of_formation(const DensityMatrix& rho) {
    const double c = concurrence(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

PptResult ppt_check(const DensityMatrix& rho, int subsystem) {
    if (rho.factor_dims.size() != 2)
        throw DimensionMismatch("ppt_check: state must have exactly two factors");
    const CMatrix pt = partial_transpose(rho.matrix, rho.factor_dims, subsystem);
    const EigenResult eig = hermitian_eigen(pt);
    PptResult out;
    out.min_eigenvalue = eig.eigenvalues.front();
    out.positive = out.min_eigenvalue >= -EPS_EIG;
    return out;
}

bool genuine_multipartite_entangled(const PureState& psi) {
    if (psi.factor_dims.size() != 4)
        throw DimensionMismatch("genuine_multipartite_entangled: expects four factors");
    static const std::vector<std::vector<int>> cuts = {
        {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {0, 3}};
    for (const auto& keep : cuts) {
        const DensityMatrix red = reduced_density(psi, keep);
        if (linear_entropy(red) <= EPS_EIG) return false;
    }
    return true;
}

// ---- closed forms ----

BellClosedForms closed_forms_bell(double alpha, double beta, double delta) {
    const double c4a = std::cos(4.0 * alpha), c4b = std::cos(4.0 * beta);
    const double s2a = std::sin(2.0 * alpha), c2b = std::cos(2.0 * beta);
    const double s2b = std::sin(2.0 * beta);
    const double sd = std::sin(delta), c2d = std::cos(2.0 * delta);

    BellClosedForms f;
    f.e_4q_initial = 0.5 * (2.0 - c4a - c4b);
    f.e_4q_boosted = (18.0 - 10.0 * c4a - 6.0 * c4b - 2.0 * c4a * c4b -
                      8.0 * c2d * s2a * s2a * c2b * c2b) / 16.0;
    f.e_4q_diff = sd * sd * s2a * s2a * c2b * c2b;
    f.e_spinmom_boosted = 0.5 * sd * sd * s2a * s2a * (1.0 - s2b) *
                          (3.0 + c2d + 2.0 * sd * sd * s2b);
    f.e_alice_bob = (16.0 - (3.0 + c4a) * (3.0 + c4b)) / 8.0;
    return f;
}

TripletClosedForms closed_forms_triplet(double alpha, double theta, double phi, double delta) {
    const double s2a = std::sin(2.0 * alpha), c4a = std::cos(4.0 * alpha);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double c2t = std::cos(2.0 * theta), c4t = std::cos(4.0 * theta);
    const double s2t = std::sin(2.0 * theta);
    const double cf = std::cos(phi), sf = std::sin(phi);
    const double c2f = std::cos(2.0 * phi), c4f = std::cos(4.0 * phi);
    const double sd = std::sin(delta), c2d = std::cos(2.0 * delta);

    const double mix = ct + cf * st; // common amplitude combination
    const double f1 = 2.0 * c2d * (3.0 + c2t) - 2.0 * c2t;
    const double f2 = 8.0 * sd * sd * (c2f * st * st + 2.0 * cf * s2t);

    TripletClosedForms f;
    f.e_4q_diff = -0.25 * sd * sd * s2a * s2a * mix * mix *
                  (-5.0 + c2t + 2.0 * st * st * c2f + 4.0 * s2t * cf);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    f.e_spinmom_boosted = sd * sd * s2a * s2a * mix * mix * (26.0 + f1 - f2) / 32.0 +
                          1.0 - ca * ca * ca * ca - sa * sa * sa * sa -
                          s2a * s2a * (10.0 + f1 - f2) * (10.0 + f1 - f2) / 512.0;
    f.e_alice_bob = (203.0 - 103.0 * c4a +
                     (3.0 + c4a) * (-12.0 * c2t - 13.0 * c4t +
                                    16.0 * (3.0 + 5.0 * c2t) * c2f * st * st +
                                    8.0 * c4f * st * st * st * st -
                                    256.0 * ct * cf * st * st * st * sf * sf)) / 256.0;
    return f;
}

} // namespace rqi
