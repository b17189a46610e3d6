#include "rqi/relboost.hpp"

#include <cmath>

#include "rqi/constants.hpp"

namespace rqi {

// ---- scenarios ----

ScenarioParams ScenarioParams::bell_family(double alpha, double beta, double v, double w) {
    ScenarioParams p;
    p.family = Family::bell;
    p.alpha = alpha;
    p.beta = beta;
    p.v = v;
    p.w = w;
    p.delta = wigner_angle_perpendicular(v, w);
    return p;
}

ScenarioParams ScenarioParams::triplet_family(double alpha, double theta, double phi,
                                              double v, double w) {
    ScenarioParams p;
    p.family = Family::triplet;
    p.alpha = alpha;
    p.theta = theta;
    p.phi = phi;
    p.v = v;
    p.w = w;
    p.delta = wigner_angle_perpendicular(v, w);
    return p;
}

ScenarioParams ScenarioParams::bell_family_delta(double alpha, double beta, double delta) {
    ScenarioParams p;
    p.family = Family::bell;
    p.alpha = alpha;
    p.beta = beta;
    p.delta = delta;
    return p;
}

ScenarioParams ScenarioParams::triplet_family_delta(double alpha, double theta, double phi,
                                                    double delta) {
    ScenarioParams p;
    p.family = Family::triplet;
    p.alpha = alpha;
    p.theta = theta;
    p.phi = phi;
    p.delta = delta;
    return p;
}

PureState ScenarioParams::spin_state() const {
    return family == Family::bell ? bell_type_spin(beta) : triplet_spin(theta, phi);
}

PureState ScenarioParams::initial_state() const {
    return compose_total(momentum_state(alpha), spin_state());
}

// ---- sharp-momentum boost ----

SU2Matrix su2_branch(int momentum_sign, double delta) {
    // p+ rotates about -y, p- about +y.
    const Vec3 axis = (momentum_sign >= 0) ? Vec3{0.0, -1.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    return su2_from_rotation({axis, delta});
}

PureState boost_two_particle(const PureState& total, double delta) {
    const std::vector<Factor> expected = {Factor::mom_a, Factor::mom_b, Factor::spin_a,
                                          Factor::spin_b};
    if (total.factor_labels != expected)
        throw LabelMismatch("boost_two_particle: state must carry [momA, momB, spinA, spinB]");

    const SU2Matrix u_plus = su2_branch(+1, delta);
    const SU2Matrix u_minus = su2_branch(-1, delta);
    std::vector<cplx> out(static_cast<std::size_t>(total.dim()), cplx(0.0, 0.0));
    // Block-diagonal over momentum branches: slot 0 = p+, slot 1 = p-.
    for (int ma = 0; ma < 2; ++ma)
        for (int mb = 0; mb < 2; ++mb) {
            const SU2Matrix& ua = (ma == 0) ? u_plus : u_minus;
            const SU2Matrix& ub = (mb == 0) ? u_plus : u_minus;
            const cplx uaM[2][2] = {{ua.a, ua.b}, {ua.c, ua.d}};
            const cplx ubM[2][2] = {{ub.a, ub.b}, {ub.c, ub.d}};
            const int base = ma * 8 + mb * 4;
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb) {
                    cplx acc(0.0, 0.0);
                    for (int ta = 0; ta < 2; ++ta)
                        for (int tb = 0; tb < 2; ++tb)
                            acc += uaM[sa][ta] * ubM[sb][tb] *
                                   total.amplitudes[static_cast<std::size_t>(base + ta * 2 + tb)];
                    out[static_cast<std::size_t>(base + sa * 2 + sb)] = acc;
                }
        }
    return PureState::make(std::move(out), total.factor_dims, total.factor_labels);
}

std::pair<PureState, PureState> boost_scenario(const ScenarioParams& params) {
    PureState initial = params.initial_state();
    PureState boosted = boost_two_particle(initial, params.delta);
    return {std::move(initial), std::move(boosted)};
}

std::vector<cplx> boost_single_wigner(const std::vector<cplx>& spinor,
                                      const LorentzMatrix& lambda,
                                      const FourVector& p, double m) {
    if (spinor.size() != 2)
        throw DimensionMismatch("boost_single_wigner: spinor must have two components");
    const SU2Matrix u = su2_from_rotation(wigner_rotation(lambda, p, m));
    return {u.a * spinor[0] + u.b * spinor[1], u.c * spinor[0] + u.d * spinor[1]};
}

// ---- Gauss-Hermite quadrature ----

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw QuadratureTooCoarse("gauss_hermite: need at least one node");
    CMatrix j(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(k / 2.0);
        j(k - 1, k) = b;
        j(k, k - 1) = b;
    }
    const EigenResult eig = hermitian_eigen(j);
    const double sqrt_pi = std::sqrt(PI);
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        nodes[static_cast<std::size_t>(k)] = eig.eigenvalues[static_cast<std::size_t>(k)];
        const double v0 = std::abs(eig.eigenvectors(0, k));
        weights[static_cast<std::size_t>(k)] = sqrt_pi * v0 * v0;
    }
}

// ---- Gaussian packet ----

namespace {

struct NodeContribution {
    double weight = 0.0; // packet density x invariant measure factor
    cplx rho[2][2] = {{{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}}};
};

void validate_packet(const GaussianPacket& g) {
    if (g.mass <= 0.0) throw Error("gaussian_boosted_spin_density: mass must be positive");
    if (g.width <= 0.0) throw Error("gaussian_boosted_spin_density: width must be positive");
    if (g.nodes_per_axis < 3)
        throw QuadratureTooCoarse("gaussian_boosted_spin_density: need >= 3 nodes per axis");
}

NodeContribution node_contribution(const GaussianPacket& g, const LorentzMatrix& lambda,
                                   const std::vector<double>& nodes,
                                   const std::vector<double>& weights,
                                   int i, int j, int k) {
    // Substitution p = center + width * x absorbs the Gaussian density into
    // the Gauss-Hermite weights; the invariant measure contributes 1/(2 E_p).
    const Vec3 p3 = g.center + g.width * Vec3{nodes[static_cast<std::size_t>(i)],
                                              nodes[static_cast<std::size_t>(j)],
                                              nodes[static_cast<std::size_t>(k)]};
    const double energy = std::sqrt(g.mass * g.mass + p3.dot(p3));
    const FourVector p = FourVector::from_parts(energy, p3);

    NodeContribution out;
    out.weight = weights[static_cast<std::size_t>(i)] * weights[static_cast<std::size_t>(j)] *
                 weights[static_cast<std::size_t>(k)] / (2.0 * energy);
    const SU2Matrix u = su2_from_rotation(wigner_rotation(lambda, p, g.mass));
    // U |up><up| U^dagger for spin-up input: column 0 of U times its adjoint.
    const cplx col[2] = {u.a, u.c};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.rho[r][c] = out.weight * col[r] * std::conj(col[c]);
    return out;
}

DensityMatrix gaussian_density_impl(const GaussianPacket& g, bool parallel) {
    validate_packet(g);
    std::vector<double> nodes, weights;
    gauss_hermite(g.nodes_per_axis, nodes, weights);
    const LorentzMatrix lambda =
        boost_from_velocity({speed_from_rapidity(g.rapidity), 0.0, 0.0});

    const int n = g.nodes_per_axis;
    const long total = static_cast<long>(n) * n * n;
    std::vector<NodeContribution> contrib(static_cast<std::size_t>(total));

    // Node evaluations are independent; results land in a fixed slot so the
    // final accumulation order never depends on scheduling.
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long idx = 0; idx < total; ++idx) {
        const int i = static_cast<int>(idx / (n * n));
        const int j = static_cast<int>((idx / n) % n);
        const int k = static_cast<int>(idx % n);
        contrib[static_cast<std::size_t>(idx)] = node_contribution(g, lambda, nodes, weights, i, j, k);
    }
    (void)parallel;

    double weight_sum = 0.0;
    cplx acc[2][2] = {{{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}}};
    for (long idx = 0; idx < total; ++idx) {
        const NodeContribution& c = contrib[static_cast<std::size_t>(idx)];
        weight_sum += c.weight;
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) acc[r][s] += c.rho[r][s];
    }
    if (weight_sum <= 0.0)
        throw QuadratureTooCoarse("gaussian_boosted_spin_density: weight sum not positive");

    CMatrix rho(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) rho(r, s) = acc[r][s] / weight_sum;
    // Exact Hermitization of roundoff residue keeps downstream checks strict.
    const cplx off = 0.5 * (rho(0, 1) + std::conj(rho(1, 0)));
    rho(0, 1) = off;
    rho(1, 0) = std::conj(off);
    rho(0, 0) = cplx(rho(0, 0).real(), 0.0);
    rho(1, 1) = cplx(rho(1, 1).real(), 0.0);
    return {std::move(rho), {2}, {Factor::spin_a}};
}

} // namespace

DensityMatrix gaussian_boosted_spin_density(const GaussianPacket& packet) {
    return gaussian_density_impl(packet, true);
}

DensityMatrix gaussian_boosted_spin_density_serial(const GaussianPacket& packet) {
    return gaussian_density_impl(packet, false);
}

double gaussian_entropy_estimate(double width, double mass, double rapidity) {
    if (mass <= 0.0 || width <= 0.0)
        throw Error("gaussian_entropy_estimate: width and mass must be positive");
    const double t = std::tanh(rapidity / 2.0);
    const double x = width * width / (8.0 * mass * mass) * t * t;
    if (x == 0.0) return 0.0;
    return x * (1.0 - std::log(x));
}

} // namespace rqi
