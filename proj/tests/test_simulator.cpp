#include "doctest.h"

#include <cmath>

#include "graysim/pauli.hpp"
#include "graysim/simulator.hpp"

using namespace graysim;

namespace {

Matrix x_gate() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix h_gate() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m(0, 0) = s; m(0, 1) = s;
    m(1, 0) = s; m(1, 1) = -s;
    return m;
}

Matrix balanced_bs() {
    using V = std::vector<PauliOp>;
    const PauliSum h{PauliString(1.0, V{PauliOp::X, PauliOp::X}),
                     PauliString(1.0, V{PauliOp::Y, PauliOp::Y})};
    return exponential_exact(h, kPi / 8.0);
}

}  // namespace

TEST_CASE("apply_unitary: bit flip, identity, and norm preservation") {
    Statevector psi(2);
    apply_unitary(psi, x_gate(), {0});
    CHECK(std::abs(psi.amp[0b10] - 1.0) < 1e-14);  // qubit 0 is the MSB

    apply_unitary(psi, Matrix::identity(2), {1});
    CHECK(std::abs(psi.amp[0b10] - 1.0) < 1e-14);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("apply_unitary: balanced beam splitter on |10>") {
    Statevector psi(2);
    apply_unitary(psi, x_gate(), {0});
    apply_unitary(psi, balanced_bs(), {0, 1});
    CHECK(std::abs(psi.amp[0b10] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(psi.amp[0b01] - cplx(0.0, 1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("apply_unitary validates inputs") {
    Statevector psi(2);
    CHECK_THROWS_AS(apply_unitary(psi, x_gate(), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(psi, x_gate(), {5}), std::invalid_argument);
    Matrix not_unitary(2, 2);
    not_unitary(0, 0) = 2.0;
    not_unitary(1, 1) = 1.0;
    CHECK_THROWS_AS(apply_unitary(psi, not_unitary, {0}), std::invalid_argument);
}

TEST_CASE("measure_and_reset on a symmetric superposition") {
    Statevector psi(1);
    apply_unitary(psi, h_gate(), {0});
    const auto branches = measure_and_reset(psi, {0});
    REQUIRE(branches.size() == 2);
    for (const auto& br : branches) {
        CHECK(br.probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(br.state.amp[0] - cplx(1.0, 0.0)) < 1e-9);  // reset to |0> either way
    }
    CHECK(branches[0].record != branches[1].record);
}

TEST_CASE("measure_and_reset on |0> is a no-op branch") {
    Statevector psi(2);
    const auto branches = measure_and_reset(psi, {1});
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].probability == doctest::Approx(1.0));
    CHECK(branches[0].record == std::vector<int>{0});
    CHECK(std::abs(branches[0].state.amp[0] - 1.0) < 1e-12);
}

TEST_CASE("reset rejects superposed targets") {
    Statevector psi(1);
    apply_unitary(psi, h_gate(), {0});
    CHECK_THROWS_AS(reset_to_zero(psi, {0}), std::runtime_error);
}

TEST_CASE("run_exact on a circuit with no measurements") {
    Circuit qc(1);
    qc.apply(x_gate(), {0});
    const auto dist = run_exact(qc);
    REQUIRE(dist.probability.size() == 1);
    CHECK(dist.prob("") == doctest::Approx(1.0));
}

TEST_CASE("classical bits are single-write and named") {
    Circuit qc(2);
    const int c0 = qc.add_classical_bit("c0");
    qc.measure({0}, {c0});
    CHECK_THROWS_AS(qc.measure({1}, {c0}), std::invalid_argument);
    CHECK_THROWS_AS(qc.add_classical_bit("c0"), std::invalid_argument);
}

TEST_CASE("run_exact enumerates mid-circuit measurement branches") {
    // H on q0, measure-and-reset q0, then X on q0, measure again.
    Circuit qc(1);
    const int c0 = qc.add_classical_bit("c0");
    const int c1 = qc.add_classical_bit("c1");
    qc.apply(h_gate(), {0});
    qc.measure({0}, {c0});
    qc.reset({0});
    qc.apply(x_gate(), {0});
    qc.measure({0}, {c1});
    const auto dist = run_exact(qc);
    // c1 always reads 1; c0 is 0 or 1 with probability 1/2 each. Strings are c1c0.
    CHECK(dist.prob("10") == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(dist.prob("11") == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(dist.total_probability() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run_exact is invariant under a global phase on any gate") {
    auto build = [&](cplx phase) {
        Circuit qc(2);
        const int c0 = qc.add_classical_bit("c0");
        const int c1 = qc.add_classical_bit("c1");
        qc.apply(x_gate(), {0});
        qc.apply(balanced_bs() * phase, {0, 1});
        qc.measure({0, 1}, {c0, c1});
        return run_exact(qc);
    };
    const auto base = build(1.0);
    const auto phased = build(std::exp(cplx(0.0, 1.234)));
    for (const auto& [k, p] : base.probability)
        CHECK(std::abs(p - phased.prob(k)) < 1e-12);
}

TEST_CASE("run_sampled: deterministic circuit, reproducibility, 5-sigma agreement") {
    Circuit qc(1);
    const int c0 = qc.add_classical_bit("c0");
    qc.apply(x_gate(), {0});
    qc.measure({0}, {c0});
    const auto all_ones = run_sampled(qc, 500, 42);
    CHECK(all_ones.counts.at("1") == 500);

    Circuit coin(1);
    const int b = coin.add_classical_bit("c0");
    coin.apply(h_gate(), {0});
    coin.measure({0}, {b});

    const auto s1 = run_sampled(coin, 8192, 7);
    const auto s2 = run_sampled(coin, 8192, 7);
    CHECK(s1.counts == s2.counts);  // identical seed, identical histogram

    const auto s3 = run_sampled(coin, 8192, 8);
    CHECK(s1.counts != s3.counts);

    // 5-sigma binomial window around p = 1/2.
    const double sigma = std::sqrt(8192 * 0.5 * 0.5);
    CHECK(std::abs(static_cast<double>(s1.counts.at("1")) - 4096.0) < 5.0 * sigma);
}

TEST_CASE("total_variation between distributions") {
    OutcomeDistribution a, b;
    a.probability = {{"0", 0.5}, {"1", 0.5}};
    b.probability = {{"0", 0.25}, {"1", 0.75}};
    CHECK(total_variation(a, b) == doctest::Approx(0.25));
    CHECK(total_variation(a, a) == doctest::Approx(0.0));
}
