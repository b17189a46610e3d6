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

DensityMatrix qubit_diag(double p0, double p1) {
    CMatrix m(2, 2);
    m(0, 0) = p0;
    m(1, 1) = p1;
    return DensityMatrix::make(m, {2}, {Factor::spin_a});
}

DensityMatrix maximally_mixed_qubit() { return qubit_diag(0.5, 0.5); }

// p |psi-><psi-| + (1-p) I/4
DensityMatrix werner(double p) {
    const PureState psi_minus = bell_state(BellKind::psi_minus);
    const CMatrix proj = outer(psi_minus.amplitudes, psi_minus.amplitudes);
    const CMatrix m = proj * cplx(p, 0.0) +
                      CMatrix::identity(4) * cplx((1.0 - p) / 4.0, 0.0);
    return DensityMatrix::make(m, {2, 2}, {Factor::spin_a, Factor::spin_b});
}

// (|00><00| + |11><11|) / 2
DensityMatrix classically_correlated() {
    CMatrix m(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityMatrix::make(m, {2, 2}, {Factor::spin_a, Factor::spin_b});
}

} // namespace

TEST_CASE("linear_entropy") {
    CHECK(linear_entropy(maximally_mixed_qubit()) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(linear_entropy(DensityMatrix::from_pure(bell_state(BellKind::phi_plus))) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("von_neumann_entropy bases") {
    const DensityMatrix mixed = maximally_mixed_qubit();
    CHECK(von_neumann_entropy(mixed, LogBase::two) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(von_neumann_entropy(mixed, LogBase::natural) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-14));

    CMatrix i4 = CMatrix::identity(4) * cplx(0.25, 0.0);
    const DensityMatrix mixed4 =
        DensityMatrix::make(i4, {2, 2}, {Factor::spin_a, Factor::spin_b});
    CHECK(von_neumann_entropy(mixed4, LogBase::dim) == doctest::Approx(1.0).epsilon(1e-13));

    // pure states carry zero entropy
    CHECK(von_neumann_entropy(DensityMatrix::from_pure(bell_state(BellKind::psi_plus))) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("renyi_entropy") {
    const DensityMatrix mixed = maximally_mixed_qubit();
    const double ln2 = 0.6931471805599453;
    CHECK(renyi_entropy(mixed, 2.0) == doctest::Approx(ln2).epsilon(1e-14));
    CHECK(renyi_entropy(mixed, 0.5) == doctest::Approx(ln2).epsilon(1e-14));

    // alpha = 0 counts the support
    CHECK(renyi_entropy(qubit_diag(0.7, 0.3), 0.0) == doctest::Approx(ln2).epsilon(1e-13));
    CHECK(renyi_entropy(qubit_diag(1.0, 0.0), 0.0) == doctest::Approx(0.0).epsilon(1e-13));

    CHECK_THROWS_AS(renyi_entropy(mixed, 1.0), InvalidAlpha);
    CHECK_THROWS_AS(renyi_entropy(mixed, -0.5), InvalidAlpha);

    // alpha -> 1 approaches the von Neumann entropy
    const DensityMatrix gentle = qubit_diag(0.55, 0.45);
    const double vn = von_neumann_entropy(gentle, LogBase::natural);
    CHECK(std::abs(renyi_entropy(gentle, 1.0 + 1e-4) - vn) < 1e-6);
    CHECK(std::abs(renyi_entropy(gentle, 1.0 - 1e-4) - vn) < 1e-6);
}

TEST_CASE("partition_entanglement on product and entangled states") {
    // momentum Bell pair (x) spin Bell pair
    const PureState total = compose_total(momentum_state(PI / 4.0), bell_type_spin(PI / 4.0));

    const EntanglementReport four = partition_entanglement(total, Partition::four_qubits());
    REQUIRE(four.block_linear_entropies.size() == 4);
    for (double e : four.block_linear_entropies) CHECK(e == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(four.total == doctest::Approx(2.0).epsilon(1e-13));
    for (double s : four.block_von_neumann_entropies)
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

    // spins vs momenta: a product cut
    const EntanglementReport sm = partition_entanglement(total, Partition::spin_vs_momentum());
    CHECK(sm.total == doctest::Approx(0.0).epsilon(1e-13));

    // particle A vs particle B: Bell-Bell case gives 3/2
    const EntanglementReport ab = partition_entanglement(total, Partition::alice_bob());
    CHECK(ab.total == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("closed_forms_bell matches numerics on a coarse grid") {
    const int n = 5;
    double worst_forms = 0.0, worst_diff = 0.0, worst_ab = 0.0, worst_cross = 0.0;
    for (int ia = 0; ia < n; ++ia)
        for (int ib = 0; ib < n; ++ib)
            for (int id = 0; id < n; ++id) {
                const double alpha = (PI / 2.0) * ia / (n - 1);
                const double beta = (PI / 2.0) * ib / (n - 1);
                const double delta = (PI / 2.0) * id / (n - 1);
                const BellClosedForms cf = closed_forms_bell(alpha, beta, delta);
                const auto [initial, boosted] =
                    boost_scenario(ScenarioParams::bell_family_delta(alpha, beta, delta));

                const double e4i =
                    partition_entanglement(initial, Partition::four_qubits()).total;
                const double e4b =
                    partition_entanglement(boosted, Partition::four_qubits()).total;
                const double smi =
                    partition_entanglement(initial, Partition::spin_vs_momentum()).total;
                const double smb =
                    partition_entanglement(boosted, Partition::spin_vs_momentum()).total;
                const double abi =
                    partition_entanglement(initial, Partition::alice_bob()).total;
                const double abb =
                    partition_entanglement(boosted, Partition::alice_bob()).total;
                const double cri =
                    partition_entanglement(initial, Partition::cross_pair()).total;
                const double crb =
                    partition_entanglement(boosted, Partition::cross_pair()).total;

                worst_forms = std::max({worst_forms, std::abs(e4i - cf.e_4q_initial),
                                        std::abs(e4b - cf.e_4q_boosted),
                                        std::abs(smb - cf.e_spinmom_boosted),
                                        std::abs(abi - cf.e_alice_bob)});
                worst_diff = std::max(
                    {worst_diff, std::abs((e4b - e4i) - cf.e_4q_diff),
                     std::abs(cf.e_4q_diff - std::sin(delta) * std::sin(delta) *
                                                 std::sin(2 * alpha) * std::sin(2 * alpha) *
                                                 std::cos(2 * beta) * std::cos(2 * beta)),
                     smi});
                worst_ab = std::max(worst_ab, std::abs(abb - abi));
                worst_cross = std::max(worst_cross, std::abs(crb - cri));
            }
    CHECK(worst_forms < 1e-10);
    CHECK(worst_diff < 1e-12);
    CHECK(worst_ab < 1e-12);   // boost-invariant partition
    CHECK(worst_cross < 1e-12); // and its cross-trace variant
}

TEST_CASE("closed_forms_triplet matches numerics on a coarse grid") {
    const int n = 4;
    double worst = 0.0, worst_ab = 0.0, worst_cross = 0.0;
    for (int ia = 0; ia < n; ++ia)
        for (int it = 0; it < n; ++it)
            for (int ip = 0; ip < n; ++ip)
                for (int id = 0; id < n; ++id) {
                    const double alpha = (PI / 2.0) * ia / (n - 1);
                    const double theta = (PI / 2.0) * it / (n - 1);
                    const double phi = (PI / 2.0) * ip / (n - 1);
                    const double delta = (PI / 2.0) * id / (n - 1);
                    const TripletClosedForms cf =
                        closed_forms_triplet(alpha, theta, phi, delta);
                    const auto [initial, boosted] = boost_scenario(
                        ScenarioParams::triplet_family_delta(alpha, theta, phi, delta));

                    const double e4i =
                        partition_entanglement(initial, Partition::four_qubits()).total;
                    const double e4b =
                        partition_entanglement(boosted, Partition::four_qubits()).total;
                    const double smb =
                        partition_entanglement(boosted, Partition::spin_vs_momentum()).total;
                    const double abi =
                        partition_entanglement(initial, Partition::alice_bob()).total;
                    const double abb =
                        partition_entanglement(boosted, Partition::alice_bob()).total;
                    const double cri =
                        partition_entanglement(initial, Partition::cross_pair()).total;
                    const double crb =
                        partition_entanglement(boosted, Partition::cross_pair()).total;

                    worst = std::max({worst, std::abs((e4b - e4i) - cf.e_4q_diff),
                                      std::abs(smb - cf.e_spinmom_boosted),
                                      std::abs(abi - cf.e_alice_bob)});
                    worst_ab = std::max(worst_ab, std::abs(abb - abi));
                    worst_cross = std::max(worst_cross, std::abs(crb - cri));
                }
    CHECK(worst < 1e-10);
    CHECK(worst_ab < 1e-12);
    CHECK(worst_cross < 1e-12);
}

TEST_CASE("triplet boundary values") {
    // separable corner of the particle cut
    CHECK(closed_forms_triplet(0.0, 0.0, 0.3, 0.4).e_alice_bob ==
          doctest::Approx(0.0).epsilon(1e-13));
    // the four-qubit difference vanishes along theta = pi/4, phi = 0
    CHECK(closed_forms_triplet(0.7, PI / 4.0, 0.0, 1.1).e_4q_diff ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("spin vs momentum coincides with the four-qubit gain at delta = pi/2") {
    for (int ia = 0; ia < 9; ++ia)
        for (int ib = 0; ib < 9; ++ib) {
            const double alpha = (PI / 2.0) * ia / 8.0;
            const double beta = (PI / 2.0) * ib / 8.0;
            const BellClosedForms cf = closed_forms_bell(alpha, beta, PI / 2.0);
            CHECK(std::abs(cf.e_spinmom_boosted - cf.e_4q_diff) < 1e-12);
        }
    // and the maximally-entangling spin family member loses nothing
    CHECK(closed_forms_bell(PI / 4.0, PI / 4.0, PI / 4.0).e_spinmom_boosted ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("concurrence") {
    CHECK(concurrence(DensityMatrix::from_pure(bell_state(BellKind::phi_plus))) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(DensityMatrix::from_pure(bell_state(BellKind::psi_minus))) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // product state
    PureState prod = PureState::make({cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0),
                                      cplx(0.0, 0.0)},
                                     {2, 2}, {Factor::spin_a, Factor::spin_b});
    CHECK(concurrence(DensityMatrix::from_pure(prod)) == doctest::Approx(0.0).epsilon(1e-12));

    // Werner: C = max(0, (3p - 1) / 2)
    CHECK(concurrence(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(concurrence(werner(0.2)) == doctest::Approx(0.0).epsilon(1e-10));

    // pure state with Schmidt weights (0.9, 0.1): C = 2 sqrt(0.9 * 0.1)
    PureState tilted = PureState::make({cplx(std::sqrt(0.9), 0.0), cplx(0.0, 0.0),
                                        cplx(0.0, 0.0), cplx(std::sqrt(0.1), 0.0)},
                                       {2, 2}, {Factor::spin_a, Factor::spin_b});
    CHECK(concurrence(DensityMatrix::from_pure(tilted)) ==
          doctest::Approx(0.6).epsilon(1e-12));

    CHECK_THROWS_AS(concurrence(maximally_mixed_qubit()), DimensionMismatch);
}

TEST_CASE("entanglement_of_formation") {
    PureState tilted = PureState::make({cplx(std::sqrt(0.9), 0.0), cplx(0.0, 0.0),
                                        cplx(0.0, 0.0), cplx(std::sqrt(0.1), 0.0)},
                                       {2, 2}, {Factor::spin_a, Factor::spin_b});
    CHECK(entanglement_of_formation(DensityMatrix::from_pure(tilted)) ==
          doctest::Approx(0.4689955935892812).epsilon(1e-12));
    CHECK(entanglement_of_formation(DensityMatrix::from_pure(bell_state(BellKind::phi_plus))) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entanglement_of_formation(classically_correlated()) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("ppt_check") {
    const PptResult singlet =
        ppt_check(DensityMatrix::from_pure(bell_state(BellKind::psi_minus)));
    CHECK_FALSE(singlet.positive);
    CHECK(singlet.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-10));

    const PptResult classical = ppt_check(classically_correlated());
    CHECK(classical.positive);

    // transposing either side gives the same verdict
    const PptResult other =
        ppt_check(DensityMatrix::from_pure(bell_state(BellKind::psi_minus)), 1);
    CHECK_FALSE(other.positive);
    CHECK(other.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("genuine_multipartite_entangled") {
    // product of momentum and spin pairs: the spin-vs-momentum cut is product
    const PureState initial =
        compose_total(momentum_state(PI / 4.0), bell_type_spin(PI / 4.0));
    CHECK_FALSE(genuine_multipartite_entangled(initial));

    // a hard boost entangles every cut
    const auto [i2, boosted] =
        boost_scenario(ScenarioParams::bell_family_delta(PI / 4.0, 0.0, PI / 2.0));
    (void)i2;
    CHECK(genuine_multipartite_entangled(boosted));
}

TEST_CASE("spin-momentum entanglement vanishes for the symmetric spin member") {
    // beta = pi/4 spins are boost-eigenstates: no entanglement is generated
    const auto [initial, boosted] =
        boost_scenario(ScenarioParams::bell_family_delta(PI / 4.0, PI / 4.0, PI / 4.0));
    CHECK(partition_entanglement(boosted, Partition::spin_vs_momentum()).total ==
          doctest::Approx(0.0).epsilon(1e-13));
    // and the boosted state equals the initial one up to unpopulated branches
    const double diff = partition_entanglement(boosted, Partition::four_qubits()).total -
                        partition_entanglement(initial, Partition::four_qubits()).total;
    CHECK(std::abs(diff) < 1e-13);
}
