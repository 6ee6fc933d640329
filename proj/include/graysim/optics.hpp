#pragma once

// Optical elements lowered to circuit instructions over the Gray-code
// bosonic encoding. A beam splitter on modes (a, b) is
// U = exp(i*theta*(b^dag a + b a^dag)) with theta = arctan(R/T); for the
// one-qubit-per-mode case this is exp(i*lambda*(XX+YY)) with lambda = theta/2.
// Mirrors are the lambda = pi/4 special case (reflection phase i).

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "graysim/bosonic.hpp"
#include "graysim/pauli.hpp"
#include "graysim/simulator.hpp"

namespace graysim {

struct BeamSplitterSpec {
    double transmission = 0.0;  // T amplitude
    double reflection = 0.0;    // R amplitude

    BeamSplitterSpec(double t, double r) : transmission(t), reflection(r) {
        if (t < 0.0 || t > 1.0 || r < 0.0 || r > 1.0)
            throw std::domain_error("BeamSplitterSpec: amplitudes must lie in [0, 1]");
        if (std::abs(t * t + r * r - 1.0) > 1e-12)
            throw std::domain_error("BeamSplitterSpec: T^2 + R^2 must equal 1");
    }

    static BeamSplitterSpec balanced() {
        const double s = 1.0 / std::sqrt(2.0);
        return BeamSplitterSpec(s, s);
    }

    static BeamSplitterSpec from_transmission(double t) {
        return BeamSplitterSpec(t, std::sqrt(std::max(0.0, 1.0 - t * t)));
    }

    static BeamSplitterSpec from_power_transmission(double t_squared) {
        if (t_squared < 0.0 || t_squared > 1.0)
            throw std::domain_error("BeamSplitterSpec: T^2 must lie in [0, 1]");
        return from_transmission(std::sqrt(t_squared));
    }

    static BeamSplitterSpec fully_reflective() { return BeamSplitterSpec(0.0, 1.0); }

    double theta() const { return std::atan2(reflection, transmission); }
    double lambda() const { return theta() / 2.0; }
};

// Documentation of where an element sits on the optical table: which modes
// it consumes and what the outputs are called. Experiments assemble these
// into stagewise circuits.
struct ElementPlacement {
    std::string kind;                     // "BS", "BBS", "M", "P(phi)", "B"
    std::vector<std::string> in_modes;
    std::vector<std::string> out_modes;
};

struct SynthesisSpec {
    enum class Kind { exact, decomposed, trotter };
    Kind kind = Kind::exact;
    int trotter_steps = 100;

    static SynthesisSpec exact() { return {Kind::exact, 0}; }
    static SynthesisSpec decomposed() { return {Kind::decomposed, 0}; }
    static SynthesisSpec trotter(int steps) {
        if (steps < 1) throw std::domain_error("SynthesisSpec: trotter steps must be >= 1");
        return {Kind::trotter, steps};
    }
};

// Elementary gates used by the two-qubit rotation decompositions.
namespace gates {

inline Matrix hadamard() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m(0, 0) = s; m(0, 1) = s;
    m(1, 0) = s; m(1, 1) = -s;
    return m;
}

inline Matrix phase_s() {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = cplx(0.0, 1.0);
    return m;
}

inline Matrix phase_sdg() {
    Matrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = cplx(0.0, -1.0);
    return m;
}

inline Matrix rz(double angle) {
    Matrix m(2, 2);
    m(0, 0) = std::exp(cplx(0.0, -angle / 2.0));
    m(1, 1) = std::exp(cplx(0.0, angle / 2.0));
    return m;
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

// CX with qubit 0 (sub-index MSB) as control, qubit 1 as target.
inline Matrix cx_0_to_1() {
    Matrix m = Matrix::identity(4);
    m(2, 2) = 0.0; m(3, 3) = 0.0;
    m(2, 3) = 1.0; m(3, 2) = 1.0;
    return m;
}

// Phase gate on one mode block: diagonal phase(n) over the Gray-decoded
// occupation n of the block.
inline Matrix block_diagonal_phase(int qubits_per_mode, const std::vector<cplx>& phase_per_occupation) {
    const std::size_t dim = std::size_t{1} << qubits_per_mode;
    Matrix m(dim, dim);
    for (std::size_t g = 0; g < dim; ++g) {
        std::vector<int> bits(qubits_per_mode);
        for (int j = 0; j < qubits_per_mode; ++j)
            bits[j] = static_cast<int>((g >> (qubits_per_mode - 1 - j)) & 1u);
        const std::uint64_t n = from_gray(BitString(bits, qubits_per_mode));
        m(g, g) = phase_per_occupation[static_cast<std::size_t>(n)];
    }
    return m;
}

}  // namespace gates

enum class RotationAxis { ZZ, XX, YY };

// CX/RZ decomposition of e^{i*lambda*A(x)A} over {CX, RZ(-2l), H, S, Sdg}:
//   e^{i l ZZ} = CX (I (x) RZ(-2l)) CX
//   e^{i l XX} = (H(x)H) CX (I (x) RZ(-2l)) CX (H(x)H)
//   e^{i l YY} = (S(x)S)(H(x)H) CX (I(x)RZ(-2l)) CX (H(x)H)(Sdg(x)Sdg)
// Targets are local {0, 1}; callers re-target when appending to a circuit.
inline std::vector<Instruction> decompose_two_qubit_rotation(RotationAxis axis, double lambda) {
    std::vector<Instruction> seq;
    auto push1 = [&seq](const Matrix& u, int q, const std::string& name) {
        seq.push_back({InstrKind::unitary, u, {q}, {}, name});
    };
    auto push2 = [&seq](const Matrix& u, const std::string& name) {
        seq.push_back({InstrKind::unitary, u, {0, 1}, {}, name});
    };

    if (axis == RotationAxis::YY) {
        push1(gates::phase_sdg(), 0, "sdg");
        push1(gates::phase_sdg(), 1, "sdg");
    }
    if (axis != RotationAxis::ZZ) {
        push1(gates::hadamard(), 0, "h");
        push1(gates::hadamard(), 1, "h");
    }
    push2(gates::cx_0_to_1(), "cx");
    push1(gates::rz(-2.0 * lambda), 1, "rz");
    push2(gates::cx_0_to_1(), "cx");
    if (axis != RotationAxis::ZZ) {
        push1(gates::hadamard(), 0, "h");
        push1(gates::hadamard(), 1, "h");
    }
    if (axis == RotationAxis::YY) {
        push1(gates::phase_s(), 0, "s");
        push1(gates::phase_s(), 1, "s");
    }
    return seq;
}

// Dense product of a local gate sequence (for verifying decompositions).
inline Matrix sequence_product(const std::vector<Instruction>& seq, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    Matrix u = Matrix::identity(dim);
    for (const auto& ins : seq) {
        if (ins.kind != InstrKind::unitary)
            throw std::invalid_argument("sequence_product: unitary sequence required");
        Matrix full = ins.u;
        if (ins.targets.size() == 1) {
            // Embed the 1-qubit gate at its target within n_qubits (MSB-first).
            Matrix m(1, 1);
            m(0, 0) = 1.0;
            for (int q = 0; q < n_qubits; ++q)
                m = Matrix::kron(m, q == ins.targets[0] ? ins.u : Matrix::identity(2));
            full = m;
        } else if (!(ins.targets == std::vector<int>{0, 1} && n_qubits == 2)) {
            throw std::invalid_argument("sequence_product: only local {0,1} two-qubit gates supported");
        }
        u = full * u;
    }
    return u;
}

namespace detail {

inline std::vector<int> two_mode_targets(int mode_a, int mode_b, const ModeLayout& layout) {
    std::vector<int> targets = layout.block(mode_a);
    const std::vector<int> b = layout.block(mode_b);
    targets.insert(targets.end(), b.begin(), b.end());
    return targets;
}

inline std::vector<Instruction> retarget(const std::vector<Instruction>& seq,
                                         const std::vector<int>& qubit_of_local) {
    std::vector<Instruction> out = seq;
    for (auto& ins : out)
        for (auto& t : ins.targets) t = qubit_of_local[static_cast<std::size_t>(t)];
    return out;
}

}  // namespace detail

// Beam splitter on modes (a, b). The hopping Hamiltonian lives on the two
// mode blocks; synthesis picks the unitary construction.
inline std::vector<Instruction> beam_splitter_gate(const BeamSplitterSpec& spec, int mode_a, int mode_b,
                                                   const ModeLayout& layout, int capacity,
                                                   const SynthesisSpec& synth = SynthesisSpec::exact(),
                                                   const std::string& label = "BS") {
    if (mode_a == mode_b) throw std::domain_error("beam_splitter_gate: modes must differ");
    const double theta = spec.theta();
    const std::vector<int> targets = detail::two_mode_targets(mode_a, mode_b, layout);

    // Local hopping Hamiltonian over just the two blocks.
    const ModeLayout local(2, layout.qubits_per_mode);
    const PauliSum h = hopping_hamiltonian(0, 1, local, capacity);

    switch (synth.kind) {
        case SynthesisSpec::Kind::exact:
            return {Instruction{InstrKind::unitary, exponential_exact(h, theta), targets, {}, label}};
        case SynthesisSpec::Kind::trotter:
            return {Instruction{InstrKind::unitary, exponential_trotter(h, theta, synth.trotter_steps),
                                targets, {}, label}};
        case SynthesisSpec::Kind::decomposed: {
            if (layout.qubits_per_mode != 1)
                throw std::invalid_argument(
                    "beam_splitter_gate: decomposed synthesis is defined for one qubit per mode; "
                    "use trotter for larger blocks");
            // e^{i*lambda*XX} e^{i*lambda*YY} with lambda = theta/2 (the terms commute).
            std::vector<Instruction> seq = decompose_two_qubit_rotation(RotationAxis::XX, theta / 2.0);
            std::vector<Instruction> yy = decompose_two_qubit_rotation(RotationAxis::YY, theta / 2.0);
            seq.insert(seq.begin(), yy.begin(), yy.end());
            return detail::retarget(seq, targets);
        }
    }
    throw std::logic_error("beam_splitter_gate: unknown synthesis kind");
}

// Mirror: fully reflective beam splitter (lambda = pi/4); a single photon
// hops modes and picks up the phase i.
inline std::vector<Instruction> mirror_gate(int mode_a, int mode_b, const ModeLayout& layout, int capacity,
                                            const SynthesisSpec& synth = SynthesisSpec::exact(),
                                            const std::string& label = "M") {
    return beam_splitter_gate(BeamSplitterSpec::fully_reflective(), mode_a, mode_b, layout, capacity,
                              synth, label);
}

// Phase shifter e^{i*phi*n} on a mode: diag(1, e^{i phi}, e^{2 i phi}, ...)
// over the mode's occupation.
inline Instruction phase_shifter_gate(int mode, double phi, const ModeLayout& layout,
                                      const std::string& label = "P") {
    std::vector<cplx> phases(std::size_t{1} << layout.qubits_per_mode);
    for (std::size_t n = 0; n < phases.size(); ++n)
        phases[n] = std::exp(cplx(0.0, phi * static_cast<double>(n)));
    return {InstrKind::unitary, gates::block_diagonal_phase(layout.qubits_per_mode, phases),
            layout.block(mode), {}, label};
}

// Phase shifter applying e^{i*phi} whenever the mode is occupied, regardless
// of occupation number. Coincides with phase_shifter_gate for capacity 1.
inline Instruction occupied_phase_gate(int mode, double phi, const ModeLayout& layout,
                                       const std::string& label = "P") {
    std::vector<cplx> phases(std::size_t{1} << layout.qubits_per_mode, std::exp(cplx(0.0, phi)));
    phases[0] = 1.0;
    return {InstrKind::unitary, gates::block_diagonal_phase(layout.qubits_per_mode, phases),
            layout.block(mode), {}, label};
}

// Blocker: measure the mode's block into the given classical bits, then
// reset the block to vacuum. The record marks absorption.
inline std::vector<Instruction> blocker(int mode, const std::vector<int>& cbits, const ModeLayout& layout,
                                        const std::string& label = "B") {
    const std::vector<int> targets = layout.block(mode);
    if (cbits.size() != targets.size())
        throw std::invalid_argument("blocker: one classical bit per block qubit");
    std::vector<Instruction> seq;
    seq.push_back({InstrKind::measure, Matrix(), targets, cbits, label});
    seq.push_back({InstrKind::reset, Matrix(), targets, {}, label});
    return seq;
}

}  // namespace graysim
