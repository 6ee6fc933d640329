#pragma once

// The three interferometry experiments as circuits, plus their closed-form
// state oracles and named scenario presets.
//
// Modified Unruh (one photon, 2 qubits): q0 carries the horizontal modes
// (A, C, F, G, J, K), q1 the vertical ones (B, D, E, H, I, L). Blocker B0
// sits on mode C or D (bit c0), B1 on mode H (bit c1); detector D0 reads
// mode K into c2, D1 reads mode L into c3.
//
// Pessoa Junior (one photon, 4 qubits): q0=E, q1=A, q2=B, q3=F. The MZI_1
// mirrors are replaced by biased beam splitters BBS4/BBS5 whose transmitted
// light exits toward the detectors (G->M->D0, J->P->D1) while the reflected
// light feeds MZI_2 (H, I -> BS2 -> L, K -> mirrors -> N, O -> BS3 -> R, Q).
// Bits: c0=B0, c1=B1 (mode L), c2=R, c3=P (detector D1), c4=M, c5=Q (D0).
//
// Two-photon Unruh (4 qubits, 2 per mode): mode A on (q0,q1), B on (q2,q3),
// occupation n stored as Gray(n) with the block's first qubit most
// significant. Detector D0 reads the mode-A-side output K (bits c0,c1),
// D1 reads L (bits c2,c3); an optional blocker on C or D records into c4,c5.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graysim/bosonic.hpp"
#include "graysim/optics.hpp"
#include "graysim/simulator.hpp"

namespace graysim {

enum class ExperimentKind { unruh, pessoa, two_photon_unruh };

enum class BlockerB0 { off, on_C, on_D };

enum class Stage { after_bs1, after_phase_e, after_bs2, after_phase_h, pre_detection, full };

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::unruh;
    double phi_E = 0.0;
    double phi_H = 0.0;
    double phi_N = kPi;          // pessoa only
    BlockerB0 b0 = BlockerB0::off;
    bool b1 = false;             // unruh / pessoa; for two-photon use b0
    double bbs_power_transmission = 0.96;  // T^2 of BBS4/BBS5, pessoa only
    std::uint64_t shots = 8192;
    std::uint64_t seed = 2025;
    SynthesisSpec synthesis = SynthesisSpec::exact();

    static ExperimentConfig defaults(ExperimentKind kind) {
        ExperimentConfig c;
        c.kind = kind;
        switch (kind) {
            case ExperimentKind::unruh:
                c.phi_E = kPi / 2.0;
                c.phi_H = 0.0;
                break;
            case ExperimentKind::pessoa:
                c.phi_H = kPi / 2.0;
                c.phi_N = kPi;
                break;
            case ExperimentKind::two_photon_unruh:
                c.phi_E = kPi;
                c.phi_H = 0.0;
                break;
        }
        return c;
    }

    void validate() const {
        if (kind == ExperimentKind::pessoa) {
            if (bbs_power_transmission <= 0.0 || bbs_power_transmission > 1.0)
                throw std::domain_error("ExperimentConfig: pessoa requires T^2 in (0, 1]");
        }
        if (synthesis.kind == SynthesisSpec::Kind::trotter && synthesis.trotter_steps < 1)
            throw std::domain_error("ExperimentConfig: trotter steps must be >= 1");
    }
};

// ---------------------------------------------------------------------------
// Circuit builders
// ---------------------------------------------------------------------------

namespace detail {

inline Matrix x_gate() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

}  // namespace detail

inline Circuit build_unruh(const ExperimentConfig& config, Stage stage = Stage::full) {
    if (config.kind != ExperimentKind::unruh)
        throw std::invalid_argument("build_unruh: config kind mismatch");
    config.validate();
    const ModeLayout layout(2, 1);
    const int capacity = 1;
    const auto& synth = config.synthesis;
    const auto bs = BeamSplitterSpec::balanced();

    Circuit qc(layout.total_qubits());
    const int c0 = config.b0 != BlockerB0::off ? qc.add_classical_bit("c0") : -1;
    const int c1 = config.b1 ? qc.add_classical_bit("c1") : -1;
    const int c2 = qc.add_classical_bit("c2");
    const int c3 = qc.add_classical_bit("c3");

    qc.apply(detail::x_gate(), {0}, "X(A)");                                   // |10>_AB
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS1"));   // A,B -> C,D
    if (stage == Stage::after_bs1) return qc;
    if (config.b0 != BlockerB0::off)
        qc.append(blocker(config.b0 == BlockerB0::on_C ? 0 : 1, {c0}, layout, "B0"));
    qc.append(mirror_gate(0, 1, layout, capacity, synth, "M"));                // C,D -> E,F
    qc.append({phase_shifter_gate(1, config.phi_E, layout, "P(phiE)")});       // mode E
    if (stage == Stage::after_phase_e) return qc;
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS2"));   // F,E -> G,H
    if (stage == Stage::after_bs2) return qc;
    if (config.b1) qc.append(blocker(1, {c1}, layout, "B1"));                  // mode H
    qc.append({phase_shifter_gate(1, config.phi_H, layout, "P(phiH)")});       // mode H
    if (stage == Stage::after_phase_h) return qc;
    qc.append(mirror_gate(0, 1, layout, capacity, synth, "M"));                // G,H -> I,J
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS3"));   // J,I -> K,L
    if (stage == Stage::pre_detection) return qc;
    qc.measure({0, 1}, {c2, c3}, "D0,D1");
    return qc;
}

inline Circuit build_pessoa(const ExperimentConfig& config, Stage stage = Stage::full) {
    if (config.kind != ExperimentKind::pessoa)
        throw std::invalid_argument("build_pessoa: config kind mismatch");
    config.validate();
    if (stage == Stage::after_phase_e || stage == Stage::after_phase_h)
        throw std::invalid_argument("build_pessoa: stage not defined for this experiment");
    const ModeLayout layout(4, 1);
    const int capacity = 1;
    const auto& synth = config.synthesis;
    const auto bs = BeamSplitterSpec::balanced();
    const auto bbs = BeamSplitterSpec::from_power_transmission(config.bbs_power_transmission);

    Circuit qc(layout.total_qubits());
    const int c0 = config.b0 != BlockerB0::off ? qc.add_classical_bit("c0") : -1;
    const int c1 = config.b1 ? qc.add_classical_bit("c1") : -1;
    const int c2 = qc.add_classical_bit("c2");
    const int c3 = qc.add_classical_bit("c3");
    const int c4 = qc.add_classical_bit("c4");
    const int c5 = qc.add_classical_bit("c5");

    qc.apply(detail::x_gate(), {1}, "X(A)");                                    // |1>_A
    qc.append(beam_splitter_gate(bs, 1, 2, layout, capacity, synth, "BS1"));    // A,B -> C,D
    if (stage == Stage::after_bs1) return qc;
    if (config.b0 != BlockerB0::off)
        qc.append(blocker(config.b0 == BlockerB0::on_C ? 1 : 2, {c0}, layout, "B0"));
    qc.append(beam_splitter_gate(bbs, 1, 0, layout, capacity, synth, "BBS4"));  // C,E -> G,H
    qc.append(beam_splitter_gate(bbs, 2, 3, layout, capacity, synth, "BBS5"));  // D,F -> J,I
    qc.append({phase_shifter_gate(0, config.phi_H, layout, "P(phiH)")});        // mode H
    qc.append(beam_splitter_gate(bs, 0, 3, layout, capacity, synth, "BS2"));    // H,I -> L,K
    if (stage == Stage::after_bs2) return qc;
    if (config.b1) qc.append(blocker(0, {c1}, layout, "B1"));                   // mode L
    qc.append(mirror_gate(0, 3, layout, capacity, synth, "M(inner)"));          // K,L -> N,O
    qc.append(mirror_gate(1, 2, layout, capacity, synth, "M(outer)"));          // G,J -> M,P
    qc.append({phase_shifter_gate(0, config.phi_N, layout, "P(phiN)")});        // mode N
    qc.append(beam_splitter_gate(bs, 0, 3, layout, capacity, synth, "BS3"));    // N,O -> R,Q
    if (stage == Stage::pre_detection) return qc;
    qc.measure({0, 1, 2, 3}, {c2, c3, c4, c5}, "D1,D0");
    return qc;
}

inline Circuit build_two_photon_unruh(const ExperimentConfig& config, Stage stage = Stage::full) {
    if (config.kind != ExperimentKind::two_photon_unruh)
        throw std::invalid_argument("build_two_photon_unruh: config kind mismatch");
    config.validate();
    if (config.b1)
        throw std::invalid_argument("build_two_photon_unruh: B1 is not part of this experiment");
    const ModeLayout layout(2, 2);
    const int capacity = 2;
    const auto& synth = config.synthesis;
    const auto bs = BeamSplitterSpec::balanced();

    Circuit qc(layout.total_qubits());
    const int c0 = qc.add_classical_bit("c0");
    const int c1 = qc.add_classical_bit("c1");
    const int c2 = qc.add_classical_bit("c2");
    const int c3 = qc.add_classical_bit("c3");
    int c4 = -1, c5 = -1;
    if (config.b0 != BlockerB0::off) {
        c4 = qc.add_classical_bit("c4");
        c5 = qc.add_classical_bit("c5");
    }

    // |11>_AB: each block holds Gray(1) = 01.
    qc.apply(detail::x_gate(), {1}, "X(A)");
    qc.apply(detail::x_gate(), {3}, "X(B)");
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS1"));  // A,B -> C,D
    if (stage == Stage::after_bs1) return qc;
    if (config.b0 != BlockerB0::off)
        qc.append(blocker(config.b0 == BlockerB0::on_C ? 0 : 1, {c4, c5}, layout, "B"));
    qc.append(mirror_gate(0, 1, layout, capacity, synth, "M"));               // C,D -> E,F
    // Phase shifters in the two-photon setup apply e^{i*phi} to any occupied
    // state of the mode once, independent of its occupation.
    qc.append({occupied_phase_gate(1, config.phi_E, layout, "P(phiE)")});     // mode E
    if (stage == Stage::after_phase_e) return qc;
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS2"));  // F,E -> G,H
    if (stage == Stage::after_bs2) return qc;
    qc.append({occupied_phase_gate(1, config.phi_H, layout, "P(phiH)")});     // mode H
    qc.append(mirror_gate(0, 1, layout, capacity, synth, "M"));               // G,H -> I,J
    if (stage == Stage::after_phase_h) return qc;
    qc.append(beam_splitter_gate(bs, 0, 1, layout, capacity, synth, "BS3"));  // J,I -> K,L
    if (stage == Stage::pre_detection) return qc;
    qc.measure({0, 1, 2, 3}, {c0, c1, c2, c3}, "D0,D1");
    return qc;
}

inline Circuit build_experiment(const ExperimentConfig& config, Stage stage = Stage::full) {
    switch (config.kind) {
        case ExperimentKind::unruh: return build_unruh(config, stage);
        case ExperimentKind::pessoa: return build_pessoa(config, stage);
        case ExperimentKind::two_photon_unruh: return build_two_photon_unruh(config, stage);
    }
    throw std::logic_error("build_experiment: unknown kind");
}

// Machine-readable description of each experiment's optical table: the
// element order the builders lower into instructions, with mode relabeling.
inline std::vector<ElementPlacement> optical_table(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::unruh:
            return {{"BS1", {"A", "B"}, {"C", "D"}},
                    {"B0?", {"C|D"}, {"c0"}},
                    {"M", {"C", "D"}, {"E", "F"}},
                    {"P(phi_E)", {"E"}, {"E"}},
                    {"BS2", {"F", "E"}, {"G", "H"}},
                    {"B1?", {"H"}, {"c1"}},
                    {"P(phi_H)", {"H"}, {"H"}},
                    {"M", {"G", "H"}, {"I", "J"}},
                    {"BS3", {"J", "I"}, {"K", "L"}},
                    {"D0", {"K"}, {"c2"}},
                    {"D1", {"L"}, {"c3"}}};
        case ExperimentKind::pessoa:
            return {{"BS1", {"A", "B"}, {"C", "D"}},
                    {"B0?", {"C|D"}, {"c0"}},
                    {"BBS4", {"C", "E"}, {"G", "H"}},
                    {"BBS5", {"D", "F"}, {"J", "I"}},
                    {"P(phi_H)", {"H"}, {"H"}},
                    {"BS2", {"H", "I"}, {"L", "K"}},
                    {"B1?", {"L"}, {"c1"}},
                    {"M", {"K", "L"}, {"N", "O"}},
                    {"M", {"G", "J"}, {"M", "P"}},
                    {"P(phi_N)", {"N"}, {"N"}},
                    {"BS3", {"N", "O"}, {"R", "Q"}},
                    {"D1", {"R", "P"}, {"c2", "c3"}},
                    {"D0", {"M", "Q"}, {"c4", "c5"}}};
        case ExperimentKind::two_photon_unruh:
            return {{"BS1", {"A", "B"}, {"C", "D"}},
                    {"B?", {"C|D"}, {"c4", "c5"}},
                    {"M", {"C", "D"}, {"E", "F"}},
                    {"P(phi_E)", {"E"}, {"E"}},
                    {"BS2", {"F", "E"}, {"G", "H"}},
                    {"P(phi_H)", {"H"}, {"H"}},
                    {"M", {"G", "H"}, {"I", "J"}},
                    {"BS3", {"J", "I"}, {"K", "L"}},
                    {"D0", {"K"}, {"c0", "c1"}},
                    {"D1", {"L"}, {"c2", "c3"}}};
    }
    throw std::logic_error("optical_table: unknown kind");
}

// ---------------------------------------------------------------------------
// Analytic oracles
// ---------------------------------------------------------------------------

struct AnalyticState {
    std::vector<std::string> labels;
    std::vector<cplx> amplitude;

    AnalyticState(std::vector<std::string> l, std::vector<cplx> a)
        : labels(std::move(l)), amplitude(std::move(a)) {
        if (labels.size() != amplitude.size())
            throw std::invalid_argument("AnalyticState: label/amplitude mismatch");
        const double n = vector_norm(amplitude);
        if (n < 1e-14) throw std::invalid_argument("AnalyticState: zero state");
        for (auto& v : amplitude) v /= n;
    }

    cplx amp(const std::string& label) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return amplitude[i];
        return 0.0;
    }
};

namespace detail {

inline cplx ei(double phi) { return std::exp(cplx(0.0, phi)); }

}  // namespace detail

// State just before the detectors in the modified Unruh experiment
// (modes K, L), as a closed form in (phi_E, phi_H).
inline AnalyticState analytic_unruh(double phi_E, double phi_H) {
    using detail::ei;
    const cplx e = ei(phi_E), h = ei(phi_H);
    const cplx a10 = -(1.0 / (2.0 * std::sqrt(2.0))) * (e * h - h - e - 1.0);
    const cplx a01 = -(cplx(0, 1) / (2.0 * std::sqrt(2.0))) * (e * h + e - h + 1.0);
    return AnalyticState({"10_KL", "01_KL"}, {a10, a01});
}

// State between BS2 and the phase shifter phi_H (modes G, H).
inline AnalyticState analytic_unruh_after_bs2(double phi_E) {
    using detail::ei;
    const cplx e = ei(phi_E);
    const cplx a10 = -(e + 1.0) / 2.0;
    const cplx a01 = cplx(0, 1) * (e - 1.0) / 2.0;
    return AnalyticState({"10_GH", "01_GH"}, {a10, a01});
}

enum class BlockMode { none, C, D };

// Two-photon states over the effective basis (|20>, |02>, |11>) of the pair
// of modes at the requested stage; `block` selects the unblocked chain or
// the surviving branch with mode C or D blocked after BS1.
inline AnalyticState analytic_two_photon(double phi_E, double phi_H, BlockMode block,
                                         Stage stage = Stage::pre_detection) {
    using detail::ei;
    const cplx e = ei(phi_E), h = ei(phi_H);
    const cplx i1(0.0, 1.0);
    const double s2 = std::sqrt(2.0);

    auto state = [&](cplx a20, cplx a02, cplx a11) {
        return AnalyticState({"20", "02", "11"}, {a20, a02, a11});
    };

    switch (block) {
        case BlockMode::none:
            switch (stage) {
                case Stage::after_bs1:
                    return state(i1 / s2, i1 / s2, 0.0);
                case Stage::after_phase_e:
                    return state(-i1 * e / s2, -i1 / s2, 0.0);
                case Stage::after_bs2:
                    return state(i1 * (e - 1.0) / (2.0 * s2), -i1 * (e - 1.0) / (2.0 * s2),
                                 (1.0 + e) / 2.0);
                case Stage::after_phase_h:
                    // The |11> weight here is -(1+e)h/2, forced by the chain
                    // after-BS2 -> after-BS3 chain (and by normalization at phi_E = 0).
                    return state(i1 * (1.0 - e) / (2.0 * s2), -i1 * h * (1.0 - e) / (2.0 * s2),
                                 -(1.0 + e) * h / 2.0);
                case Stage::pre_detection:
                case Stage::full:
                    return state(-i1 * s2 / 8.0 * (1.0 - e + 3.0 * h + h * e),
                                 i1 * s2 / 8.0 * (1.0 - e - h - 3.0 * h * e),
                                 -(1.0 - e) * (1.0 - h) / 4.0);
            }
            break;
        case BlockMode::C:
            switch (stage) {
                case Stage::after_phase_e:
                    return state(0.0, -i1, 0.0);
                case Stage::after_bs2:
                    return state(-i1 / 2.0, i1 / 2.0, 1.0 / s2);
                case Stage::after_phase_h:
                    return state(i1 / 2.0, -i1 * h / 2.0, -h / s2);
                case Stage::pre_detection:
                case Stage::full:
                    return state(-i1 / 4.0 * (1.0 + 3.0 * h), i1 / 4.0 * (1.0 - h),
                                 -s2 / 4.0 * (1.0 - h));
                default:
                    throw std::invalid_argument("analytic_two_photon: stage not defined for blocked branch");
            }
            break;
        case BlockMode::D:
            switch (stage) {
                case Stage::after_phase_e:
                    return state(-i1 * e, 0.0, 0.0);
                case Stage::after_bs2:
                    return state(i1 * e / 2.0, -i1 * e / 2.0, e / s2);
                case Stage::after_phase_h:
                    return state(-i1 * e / 2.0, i1 * e * h / 2.0, -e * h / s2);
                case Stage::pre_detection:
                case Stage::full:
                    return state(i1 * e / 4.0 * (1.0 - h), -i1 * e / 4.0 * (1.0 + 3.0 * h),
                                 i1 * e / 4.0 * (-i1 * s2) * (1.0 - h));
                default:
                    throw std::invalid_argument("analytic_two_photon: stage not defined for blocked branch");
            }
            break;
    }
    throw std::logic_error("analytic_two_photon: unreachable");
}

// Unblocked Pessoa chain states at the builder's stages.
inline AnalyticState analytic_pessoa_stage(const ExperimentConfig& config, Stage stage) {
    using detail::ei;
    const double t = std::sqrt(config.bbs_power_transmission);
    const double r = std::sqrt(1.0 - config.bbs_power_transmission);
    const cplx h = ei(config.phi_H);
    const cplx i1(0.0, 1.0);
    const double s2 = std::sqrt(2.0);
    switch (stage) {
        case Stage::after_bs1:
            return AnalyticState({"C", "D"}, {1.0 / s2, i1 / s2});
        case Stage::after_bs2:
            return AnalyticState({"G", "J", "K", "L"},
                                 {t / s2, i1 * t / s2, -(r + r * h) / 2.0, i1 * (r * h - r) / 2.0});
        case Stage::pre_detection:
        case Stage::full:
            return AnalyticState({"M", "P", "Q", "R"},
                                 {i1 * t / s2, -t / s2, -r * h / s2, i1 * r / s2});
        default:
            throw std::invalid_argument("analytic_pessoa_stage: stage not defined for this experiment");
    }
}

// Branch-by-branch oracle at the pre-detection stage: one entry per blocker
// record, with the record string over the written blocker bits in descending
// index order, its probability, and the register statevector.
struct AnalyticBranch {
    std::string record;
    double probability = 1.0;
    std::vector<cplx> state;  // full register, normalized
};

namespace detail {

inline std::vector<cplx> register_state(int n_qubits,
                                        const std::vector<std::pair<std::size_t, cplx>>& entries) {
    std::vector<cplx> v(std::size_t{1} << n_qubits, cplx{});
    for (const auto& [idx, a] : entries) v[idx] = a;
    const double n = vector_norm(v);
    for (auto& x : v) x /= n;
    return v;
}

// Index of the one-photon basis state with the photon on `qubit`.
inline std::size_t one_photon_index(int n_qubits, int qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

// Two-photon register index for block occupations (n_first, n_second).
inline std::size_t two_photon_index(int n_first, int n_second) {
    const ModeLayout layout(2, 2);
    return encode_fock(FockState({n_first, n_second}, 2), layout);
}

// Map an effective-basis {20, 02, 11} state onto the register given which
// block carries the first-labeled mode.
inline std::vector<cplx> two_photon_register_state(const AnalyticState& s, bool first_mode_on_block0) {
    auto idx = [&](int n_first, int n_second) {
        return first_mode_on_block0 ? two_photon_index(n_first, n_second)
                                    : two_photon_index(n_second, n_first);
    };
    return register_state(4, {{idx(2, 0), s.amp("20")},
                              {idx(0, 2), s.amp("02")},
                              {idx(1, 1), s.amp("11")}});
}

}  // namespace detail

// Register statevector for an Unruh-chain analytic state whose first-named
// mode sits on q0 (true for the GH and KL stages used by the oracles).
inline std::vector<cplx> unruh_register_state(const AnalyticState& s) {
    cplx a10 = 0.0, a01 = 0.0;
    for (std::size_t i = 0; i < s.labels.size(); ++i) {
        if (s.labels[i].rfind("10", 0) == 0) a10 = s.amplitude[i];
        if (s.labels[i].rfind("01", 0) == 0) a01 = s.amplitude[i];
    }
    return detail::register_state(2, {{detail::one_photon_index(2, 0), a10},
                                      {detail::one_photon_index(2, 1), a01}});
}

// Register statevector for a Pessoa-chain analytic state at a builder stage.
inline std::vector<cplx> pessoa_register_state(const AnalyticState& s, Stage stage) {
    std::map<std::string, int> qubit_of;
    switch (stage) {
        case Stage::after_bs1: qubit_of = {{"C", 1}, {"D", 2}}; break;
        case Stage::after_bs2: qubit_of = {{"G", 1}, {"J", 2}, {"K", 3}, {"L", 0}}; break;
        case Stage::pre_detection:
        case Stage::full: qubit_of = {{"M", 2}, {"P", 1}, {"Q", 3}, {"R", 0}}; break;
        default: throw std::invalid_argument("pessoa_register_state: stage not defined");
    }
    std::vector<std::pair<std::size_t, cplx>> entries;
    for (std::size_t i = 0; i < s.labels.size(); ++i)
        entries.push_back({detail::one_photon_index(4, qubit_of.at(s.labels[i])), s.amplitude[i]});
    return detail::register_state(4, entries);
}

// Register statevector for a two-photon effective-basis state at a builder
// stage (the first-named mode alternates blocks as the mirrors swap them).
inline std::vector<cplx> two_photon_register_state(const AnalyticState& s, Stage stage) {
    const bool first_on_block0 =
        stage != Stage::after_phase_e && stage != Stage::after_phase_h;
    return detail::two_photon_register_state(s, first_on_block0);
}

inline std::vector<AnalyticBranch> analytic_unruh_branches(const ExperimentConfig& config) {
    using detail::ei;
    using detail::one_photon_index;
    const cplx i1(0.0, 1.0);
    const double s2 = std::sqrt(2.0);
    const cplx e = ei(config.phi_E), h = ei(config.phi_H);
    std::vector<AnalyticBranch> out;

    auto vacuum = [] {
        std::vector<cplx> v(4, cplx{});
        v[0] = 1.0;
        return v;
    };

    const bool has_b0 = config.b0 != BlockerB0::off;
    if (!has_b0 && !config.b1) {
        const AnalyticState s = analytic_unruh(config.phi_E, config.phi_H);
        out.push_back({"", 1.0,
                       detail::register_state(2, {{one_photon_index(2, 0), s.amp("10_KL")},
                                                  {one_photon_index(2, 1), s.amp("01_KL")}})});
        return out;
    }

    // Work through the conditional evolutions. Records are over the written
    // blocker bits, most significant classical index first.
    if (has_b0 && !config.b1) {
        // Branch: photon absorbed at B0.
        out.push_back({"1", 0.5, vacuum()});
        // Branch: photon in the free arm.
        // B0 on D -> photon traverses C: |C> -> i e |H'| ... ends as computed below.
        cplx a_k, a_l;  // amplitudes on K (q0) and L (q1)
        if (config.b0 == BlockerB0::on_D) {
            // |C> -> mirror -> i|E> -> phase -> i e|E> -> BS2 -> (i e/rt2)(|H> + i|G>)
            // -> phase_H on H -> mirrors -> BS3.
            const cplx amp_g = -e / s2;            // (i e/rt2) * i
            const cplx amp_h = i1 * e / s2;
            const cplx amp_i = amp_g * i1;         // G -> I via mirror
            const cplx amp_j = amp_h * h * i1;     // H -> J with phase_H then mirror
            a_k = (amp_j + i1 * amp_i) / s2;       // J -> K transmitted, I -> K reflected
            a_l = (amp_i + i1 * amp_j) / s2;
        } else {
            // B0 on C: photon traverses D: |D> amplitude i -> mirror -> i*i|F> = -|F>
            const cplx amp_f = -1.0;
            const cplx amp_g = amp_f / s2;         // F -> G transmitted
            const cplx amp_h = amp_f * i1 / s2;    // F -> H reflected
            const cplx amp_i = amp_g * i1;
            const cplx amp_j = amp_h * h * i1;
            a_k = (amp_j + i1 * amp_i) / s2;
            a_l = (amp_i + i1 * amp_j) / s2;
        }
        out.push_back({"0", 0.5,
                       detail::register_state(2, {{one_photon_index(2, 0), a_k},
                                                  {one_photon_index(2, 1), a_l}})});
        return out;
    }

    // Scenarios with B1 (alone or after B0).
    // Amplitudes on G and H just after BS2, conditioned on surviving B0.
    cplx amp_g, amp_h;
    double p_pass_b0 = 1.0;
    if (!has_b0) {
        amp_g = -(e + 1.0) / 2.0;
        amp_h = i1 * (e - 1.0) / 2.0;
    } else if (config.b0 == BlockerB0::on_D) {
        amp_g = -e / s2;
        amp_h = i1 * e / s2;
        p_pass_b0 = 0.5;
    } else {
        amp_g = -1.0 / s2;
        amp_h = -i1 / s2;  // -|F| reflected: -1 * i / rt2
        p_pass_b0 = 0.5;
    }

    const double p_hit_b1 = std::norm(amp_h);
    auto with_b0_prefix = [&](const std::string& rec) {
        return has_b0 ? rec + "0" : rec;  // surviving branches have c0 = 0
    };
    if (has_b0) out.push_back({"01", 0.5, vacuum()});  // c1 c0 = 0 1: absorbed at B0
    if (p_hit_b1 > kBranchPruneProbability)
        out.push_back({with_b0_prefix("1"), p_pass_b0 * p_hit_b1, vacuum()});

    const double p_pass = 1.0 - p_hit_b1;
    if (p_pass > kBranchPruneProbability) {
        const cplx g_n = amp_g / std::sqrt(p_pass);
        // Continue: phase_H on empty H does nothing to the |G> component.
        const cplx amp_i = g_n * i1;  // G -> I
        const cplx a_k = (i1 * amp_i) / s2;
        const cplx a_l = amp_i / s2;
        out.push_back({with_b0_prefix("0"), p_pass_b0 * p_pass,
                       detail::register_state(2, {{one_photon_index(2, 0), a_k},
                                                  {one_photon_index(2, 1), a_l}})});
    }
    return out;
}

inline std::vector<AnalyticBranch> analytic_pessoa_branches(const ExperimentConfig& config) {
    using detail::ei;
    using detail::one_photon_index;
    const cplx i1(0.0, 1.0);
    const double s2 = std::sqrt(2.0);
    const double t = std::sqrt(config.bbs_power_transmission);
    const double r = std::sqrt(1.0 - config.bbs_power_transmission);
    const cplx h = ei(config.phi_H);
    std::vector<AnalyticBranch> out;

    auto vacuum = [] {
        std::vector<cplx> v(16, cplx{});
        v[0] = 1.0;
        return v;
    };
    // Final modes: M=q2, P=q1, Q=q3, R=q0.
    auto final_state = [&](cplx m, cplx p, cplx q, cplx rr) {
        return detail::register_state(4, {{one_photon_index(4, 2), m},
                                          {one_photon_index(4, 1), p},
                                          {one_photon_index(4, 3), q},
                                          {one_photon_index(4, 0), rr}});
    };

    const bool has_b0 = config.b0 != BlockerB0::off;
    if (!has_b0 && !config.b1) {
        out.push_back({"", 1.0, final_state(i1 * t / s2, -t / s2, -r * h / s2, i1 * r / s2)});
        return out;
    }

    if (has_b0 && !config.b1) {
        out.push_back({"1", 0.5, vacuum()});
        if (config.b0 == BlockerB0::on_D)
            out.push_back({"0", 0.5, final_state(i1 * t, 0.0, -r * h, 0.0)});
        else
            out.push_back({"0", 0.5, final_state(0.0, -t, 0.0, i1 * r)});
        return out;
    }

    if (!has_b0) {
        // B1 only: photon reaches mode L with amplitude (i/2)(r h - r).
        const double p_hit = std::norm(i1 * (r * h - r) / 2.0);
        const double p_pass = 1.0 - p_hit;
        if (p_hit > kBranchPruneProbability) out.push_back({"1", p_hit, vacuum()});
        const double rn = std::sqrt(p_pass);
        const cplx q_amp = -(r + r * h) / (2.0 * s2);
        const cplx r_amp = i1 * (r + r * h) / (2.0 * s2);
        out.push_back({"0", p_pass,
                       final_state(i1 * t / s2 / rn, -t / s2 / rn, q_amp / rn, r_amp / rn)});
        return out;
    }

    // Both blockers.
    out.push_back({"01", 0.5, vacuum()});
    cplx l_amp, k_amp, m_amp, p_amp;
    if (config.b0 == BlockerB0::on_D) {
        m_amp = i1 * t;
        p_amp = 0.0;
        k_amp = -r * h / s2;
        l_amp = i1 * r * h / s2;
    } else {
        m_amp = 0.0;
        p_amp = -t;
        k_amp = -r / s2;
        l_amp = -i1 * r / s2;
    }
    const double p_hit = std::norm(l_amp);
    if (p_hit > kBranchPruneProbability) out.push_back({"10", 0.5 * p_hit, vacuum()});
    const double p_pass = 1.0 - p_hit;
    const double rn = std::sqrt(p_pass);
    // K -> N (mirror, phase i; then phi_N = pi flips the sign) -> BS3:
    // Q = i n / rt2, R = n / rt2.
    const cplx n_amp = -i1 * k_amp;
    const cplx q_amp = i1 * n_amp / s2;
    const cplx r_amp = n_amp / s2;
    out.push_back({"00", 0.5 * p_pass,
                   final_state(m_amp / rn, p_amp / rn, q_amp / rn, r_amp / rn)});
    return out;
}

inline std::vector<AnalyticBranch> analytic_two_photon_branches(const ExperimentConfig& config) {
    std::vector<AnalyticBranch> out;
    if (config.b0 == BlockerB0::off) {
        out.push_back({"", 1.0,
                       detail::two_photon_register_state(
                           analytic_two_photon(config.phi_E, config.phi_H, BlockMode::none), true)});
        return out;
    }
    const BlockMode block = config.b0 == BlockerB0::on_C ? BlockMode::C : BlockMode::D;
    auto vacuum = [] {
        std::vector<cplx> v(16, cplx{});
        v[0] = 1.0;
        return v;
    };
    out.push_back({"11", 0.5, vacuum()});
    out.push_back({"00", 0.5,
                   detail::two_photon_register_state(
                       analytic_two_photon(config.phi_E, config.phi_H, block), true)});
    return out;
}

inline std::vector<AnalyticBranch> analytic_branches(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::unruh: return analytic_unruh_branches(config);
        case ExperimentKind::pessoa: return analytic_pessoa_branches(config);
        case ExperimentKind::two_photon_unruh: return analytic_two_photon_branches(config);
    }
    throw std::logic_error("analytic_branches: unknown kind");
}

// ---------------------------------------------------------------------------
// Event probabilities (detector / blocker summaries of an exact run)
// ---------------------------------------------------------------------------

inline std::map<std::string, double> event_probabilities(const ExperimentConfig& config) {
    const OutcomeDistribution dist = run_exact(build_experiment(config));
    std::map<std::string, double> ev;
    auto bit = [&](const std::string& outcome, const std::string& name) -> int {
        for (std::size_t i = 0; i < dist.bit_order.size(); ++i)
            if (dist.bit_order[i] == name) return outcome[i] == '1' ? 1 : 0;
        return 0;
    };

    if (config.kind == ExperimentKind::two_photon_unruh) {
        ev["both_D0"] = 0.0;
        ev["both_D1"] = 0.0;
        ev["coincidence"] = 0.0;
        if (config.b0 != BlockerB0::off) ev["blocked"] = 0.0;
        for (const auto& [outcome, p] : dist.probability) {
            const int d0 = bit(outcome, "c0") + bit(outcome, "c1");
            const int d1 = bit(outcome, "c2") + bit(outcome, "c3");
            if (config.b0 != BlockerB0::off && (bit(outcome, "c4") || bit(outcome, "c5")))
                ev["blocked"] += p;
            else if (d0 == 2 && d1 == 0)
                ev["both_D0"] += p;
            else if (d0 == 0 && d1 == 2)
                ev["both_D1"] += p;
            else if (d0 == 1 && d1 == 1)
                ev["coincidence"] += p;
        }
        return ev;
    }

    ev["D0"] = 0.0;
    ev["D1"] = 0.0;
    if (config.b0 != BlockerB0::off) ev["B0"] = 0.0;
    if (config.b1) ev["B1"] = 0.0;
    for (const auto& [outcome, p] : dist.probability) {
        if (config.b0 != BlockerB0::off && bit(outcome, "c0")) {
            ev["B0"] += p;
            continue;
        }
        if (config.b1 && bit(outcome, "c1")) {
            ev["B1"] += p;
            continue;
        }
        if (config.kind == ExperimentKind::unruh) {
            if (bit(outcome, "c2")) ev["D0"] += p;
            if (bit(outcome, "c3")) ev["D1"] += p;
        } else {
            if (bit(outcome, "c4") || bit(outcome, "c5")) ev["D0"] += p;
            if (bit(outcome, "c2") || bit(outcome, "c3")) ev["D1"] += p;
        }
    }
    return ev;
}

}  // namespace graysim
