#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "rqi/constants.hpp"
#include "rqi/entanglement.hpp"
#include "rqi/relboost.hpp"

using namespace rqi;
using test::Rng;

namespace {

PureState random_total(Rng& rng) {
    return PureState::make(test::random_state_vector(rng, 16), {2, 2, 2, 2},
                           {Factor::mom_a, Factor::mom_b, Factor::spin_a, Factor::spin_b});
}

} // namespace

TEST_CASE("su2_branch matrices") {
    const double delta = 0.9;
    const double c = std::cos(delta / 2.0), s = std::sin(delta / 2.0);

    const SU2Matrix up = su2_branch(+1, delta);
    CHECK(std::abs(up.a - cplx(c, 0.0)) < 1e-15);
    CHECK(std::abs(up.b - cplx(s, 0.0)) < 1e-15);
    CHECK(std::abs(up.c - cplx(-s, 0.0)) < 1e-15);
    CHECK(std::abs(up.d - cplx(c, 0.0)) < 1e-15);

    // the opposite branch is the inverse rotation
    const SU2Matrix prod = su2_branch(+1, delta) * su2_branch(-1, delta);
    CHECK(std::abs(prod.a - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(prod.b) < 1e-15);
    CHECK(std::abs(prod.c) < 1e-15);
    CHECK(std::abs(prod.d - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("boost_two_particle with delta = 0 is the identity") {
    Rng rng(3);
    const PureState psi = random_total(rng);
    const PureState out = boost_two_particle(psi, 0.0);
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
        CHECK(std::abs(out.amplitudes[i] - psi.amplitudes[i]) < 1e-15);
}

TEST_CASE("boost_two_particle leaves psi_plus spins invariant") {
    const PureState total = compose_total(momentum_state(0.6), bell_state(BellKind::psi_plus));
    const PureState out = boost_two_particle(total, 1.1);
    for (std::size_t i = 0; i < total.amplitudes.size(); ++i)
        CHECK(std::abs(out.amplitudes[i] - total.amplitudes[i]) < 1e-14);
}

TEST_CASE("boost_two_particle rotates phi_plus into psi_minus per branch") {
    const double alpha = 0.35, delta = 0.8;
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double r2 = 0.7071067811865475244;
    const PureState total = compose_total(momentum_state(alpha), bell_state(BellKind::phi_plus));
    const PureState out = boost_two_particle(total, delta);

    // branch |p+ p->: cos(d) phi+ + sin(d) psi-; spin amplitudes at base 4
    CHECK(std::abs(out.amplitudes[4] - cplx(ca * std::cos(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[5] - cplx(ca * std::sin(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[6] - cplx(-ca * std::sin(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[7] - cplx(ca * std::cos(delta) * r2, 0.0)) < 1e-14);

    // branch |p- p+>: cos(d) phi+ - sin(d) psi-; spin amplitudes at base 8
    CHECK(std::abs(out.amplitudes[8] - cplx(sa * std::cos(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[9] - cplx(-sa * std::sin(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[10] - cplx(sa * std::sin(delta) * r2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[11] - cplx(sa * std::cos(delta) * r2, 0.0)) < 1e-14);

    // momentum-diagonal branches are unpopulated
    for (std::size_t i : {0, 1, 2, 3, 12, 13, 14, 15})
        CHECK(std::abs(out.amplitudes[i]) < 1e-15);
}

TEST_CASE("boost_two_particle on the anti-parallel spin family") {
    const double alpha = 0.55, beta = 0.25, delta = 1.3;
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double c1 = std::sin(delta) * (std::sin(beta) - std::cos(beta)) / 2.0;
    const double half = delta / 2.0;
    const double c2 = std::cos(beta) * std::cos(half) * std::cos(half) +
                      std::sin(beta) * std::sin(half) * std::sin(half);
    const double c3 = std::sin(beta) * std::cos(half) * std::cos(half) +
                      std::cos(beta) * std::sin(half) * std::sin(half);

    const PureState total = compose_total(momentum_state(alpha), bell_type_spin(beta));
    const PureState out = boost_two_particle(total, delta);

    // branch |p+ p->
    CHECK(std::abs(out.amplitudes[4] - cplx(ca * c1, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[5] - cplx(ca * c2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[6] - cplx(ca * c3, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[7] - cplx(ca * c1, 0.0)) < 1e-14);

    // branch |p- p+>: the diagonal terms flip sign
    CHECK(std::abs(out.amplitudes[8] - cplx(-sa * c1, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[9] - cplx(sa * c2, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[10] - cplx(sa * c3, 0.0)) < 1e-14);
    CHECK(std::abs(out.amplitudes[11] - cplx(-sa * c1, 0.0)) < 1e-14);
}

TEST_CASE("boost_two_particle is unitary") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const PureState a = random_total(rng);
        const PureState b = random_total(rng);
        const double delta = rng.uniform(0.0, PI);
        const PureState ba = boost_two_particle(a, delta);
        const PureState bb = boost_two_particle(b, delta);
        CHECK(ba.norm() == doctest::Approx(a.norm()).epsilon(1e-14));
        CHECK(std::abs(ba.inner(bb) - a.inner(b)) < 1e-13);
    }
}

TEST_CASE("boost_two_particle rejects non-canonical layouts") {
    const PureState spin_only = bell_state(BellKind::phi_plus);
    CHECK_THROWS_AS(boost_two_particle(spin_only, 0.5), LabelMismatch);
}

TEST_CASE("boost_single_wigner agrees with the branch shortcut") {
    Rng rng(17);
    for (double v : {0.2, 0.6, 0.9})
        for (double w : {0.3, 0.8}) {
            const double delta = wigner_angle_perpendicular(v, w);
            const LorentzMatrix lambda = boost_from_velocity({w, 0.0, 0.0});
            std::vector<cplx> spinor = test::random_state_vector(rng, 2);

            const FourVector p_plus = four_momentum(1.0, {0.0, 0.0, v});
            const std::vector<cplx> via_wigner = boost_single_wigner(spinor, lambda, p_plus, 1.0);
            const SU2Matrix u = su2_branch(+1, delta);
            CHECK(std::abs(via_wigner[0] - (u.a * spinor[0] + u.b * spinor[1])) < 1e-12);
            CHECK(std::abs(via_wigner[1] - (u.c * spinor[0] + u.d * spinor[1])) < 1e-12);

            const FourVector p_minus = four_momentum(1.0, {0.0, 0.0, -v});
            const std::vector<cplx> via_minus = boost_single_wigner(spinor, lambda, p_minus, 1.0);
            const SU2Matrix d = su2_branch(-1, delta);
            CHECK(std::abs(via_minus[0] - (d.a * spinor[0] + d.b * spinor[1])) < 1e-12);
            CHECK(std::abs(via_minus[1] - (d.c * spinor[0] + d.d * spinor[1])) < 1e-12);
        }
}

TEST_CASE("scenario factories and boost_scenario") {
    const ScenarioParams bp = ScenarioParams::bell_family(0.4, 0.7, 0.8, 0.8);
    CHECK(bp.delta == doctest::Approx(0.4899573262537293).epsilon(1e-15));
    const auto [initial, boosted] = boost_scenario(bp);
    CHECK(initial.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(boosted.norm() == doctest::Approx(1.0).epsilon(1e-14));

    // the boosted state is exactly boost_two_particle(initial, delta)
    const PureState direct = boost_two_particle(initial, bp.delta);
    for (std::size_t i = 0; i < direct.amplitudes.size(); ++i)
        CHECK(std::abs(direct.amplitudes[i] - boosted.amplitudes[i]) < 1e-15);

    const ScenarioParams bd = ScenarioParams::bell_family_delta(0.4, 0.7, 0.3);
    CHECK(bd.delta == 0.3);
    CHECK(bd.v == 0.0);
    CHECK(bd.w == 0.0);

    const ScenarioParams tp = ScenarioParams::triplet_family_delta(0.5, 1.0, 2.0, 0.6);
    const auto [t_init, t_boost] = boost_scenario(tp);
    CHECK(t_init.factor_labels.size() == 4);
    CHECK(t_boost.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spin concurrence never increases under the boost") {
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const double alpha = rng.uniform(0.0, PI / 2.0);
        const double delta = rng.uniform(0.0, PI);
        const PureState spin = PureState::make(test::random_state_vector(rng, 4), {2, 2},
                                               {Factor::spin_a, Factor::spin_b});
        const double c_before = concurrence(DensityMatrix::from_pure(spin));

        const PureState total = compose_total(momentum_state(alpha), spin);
        const PureState boosted = boost_two_particle(total, delta);
        const double c_after = concurrence(reduced_density(boosted, {2, 3}));
        CHECK(c_after <= c_before + 1e-10);
    }
}

TEST_CASE("gauss_hermite nodes and weights") {
    for (int n : {5, 21, 40}) {
        std::vector<double> x, w;
        gauss_hermite(n, x, w);
        REQUIRE(static_cast<int>(x.size()) == n);
        REQUIRE(static_cast<int>(w.size()) == n);

        double m0 = 0.0, m1 = 0.0, m2 = 0.0, m4 = 0.0;
        for (int k = 0; k < n; ++k) {
            m0 += w[k];
            m1 += w[k] * x[k];
            m2 += w[k] * x[k] * x[k];
            m4 += w[k] * x[k] * x[k] * x[k] * x[k];
        }
        const double sqrt_pi = std::sqrt(PI);
        CHECK(m0 == doctest::Approx(sqrt_pi).epsilon(1e-13));
        CHECK(std::abs(m1) < 1e-13);
        CHECK(m2 == doctest::Approx(sqrt_pi / 2.0).epsilon(1e-12));
        CHECK(m4 == doctest::Approx(3.0 * sqrt_pi / 4.0).epsilon(1e-12));

        // symmetric rule, ascending nodes
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(x[k] + x[n - 1 - k]) < 1e-12);
            CHECK(w[k] == doctest::Approx(w[n - 1 - k]).epsilon(1e-11));
            if (k > 0) CHECK(x[k] > x[k - 1]);
        }
    }
}

TEST_CASE("gaussian packet at zero rapidity stays pure spin-up") {
    GaussianPacket g;
    g.rapidity = 0.0;
    g.nodes_per_axis = 7;
    const DensityMatrix rho = gaussian_boosted_spin_density(g);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rho.matrix(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(rho.matrix(1, 1)) < 1e-13);
}

TEST_CASE("gaussian packet entropy matches the small-width estimate") {
    GaussianPacket g; // mass 1, width 0.01, rapidity 1, 21 nodes
    const DensityMatrix rho = gaussian_boosted_spin_density(g);
    const double s = von_neumann_entropy(rho, LogBase::natural);
    const double est = gaussian_entropy_estimate(g.width, g.mass, g.rapidity);
    CHECK(est == doctest::Approx(3.692760637954557e-05).epsilon(1e-13));
    CHECK(s > 0.0);
    CHECK(s / est > 0.9);
    CHECK(s / est < 1.1);
}

TEST_CASE("gaussian packet entropy grows with the packet width") {
    double prev = -1.0;
    for (double width : {0.005, 0.01, 0.02}) {
        GaussianPacket g;
        g.width = width;
        g.nodes_per_axis = 11;
        const double s =
            von_neumann_entropy(gaussian_boosted_spin_density(g), LogBase::natural);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("parallel and serial packet averages agree bitwise") {
    GaussianPacket g;
    g.width = 0.05;
    g.rapidity = 1.4;
    g.nodes_per_axis = 9;
    const DensityMatrix a = gaussian_boosted_spin_density(g);
    const DensityMatrix b = gaussian_boosted_spin_density_serial(g);
    CHECK(a.matrix.max_abs_diff(b.matrix) == 0.0);
}

TEST_CASE("gaussian packet input validation") {
    GaussianPacket g;
    g.nodes_per_axis = 2;
    CHECK_THROWS_AS(gaussian_boosted_spin_density(g), QuadratureTooCoarse);

    GaussianPacket bad_mass;
    bad_mass.mass = 0.0;
    CHECK_THROWS_AS(gaussian_boosted_spin_density(bad_mass), Error);

    GaussianPacket bad_width;
    bad_width.width = -0.1;
    CHECK_THROWS_AS(gaussian_boosted_spin_density(bad_width), Error);
}
