#pragma once

// Gray-code encoding of multi-mode Fock states into qubit blocks, and the
// map from bosonic ladder operators to Pauli sums. Occupation n of a mode
// is stored as the width-Nq Gray code of n in that mode's qubit block,
// most significant bit first; mode blocks are contiguous in mode order.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graysim/graycode.hpp"
#include "graysim/pauli.hpp"

namespace graysim {

struct FockState {
    std::vector<int> occupations;
    int capacity = 0;  // max total photon number N

    FockState(std::vector<int> occ, int n) : occupations(std::move(occ)), capacity(n) {
        if (capacity <= 0) throw std::domain_error("FockState: capacity must be positive");
        int total = 0;
        for (int o : occupations) {
            if (o < 0 || o > capacity) throw std::domain_error("FockState: occupation out of range");
            total += o;
        }
        if (total > capacity) throw std::domain_error("FockState: total occupation exceeds capacity");
    }

    int total() const { return std::accumulate(occupations.begin(), occupations.end(), 0); }
};

struct ModeLayout {
    int mode_count = 0;
    int qubits_per_mode = 0;  // Nq = ceil(log2(N+1))

    ModeLayout(int modes, int nq) : mode_count(modes), qubits_per_mode(nq) {
        if (modes <= 0 || nq <= 0) throw std::domain_error("ModeLayout: positive sizes required");
        if (total_qubits() > 14) throw std::domain_error("ModeLayout: register exceeds 14-qubit cap");
    }

    static int qubits_for_capacity(int capacity) {
        int nq = 0;
        while ((1 << nq) < capacity + 1) ++nq;
        return std::max(nq, 1);
    }

    static ModeLayout for_capacity(int mode_count, int capacity) {
        return ModeLayout(mode_count, qubits_for_capacity(capacity));
    }

    int total_qubits() const { return mode_count * qubits_per_mode; }

    // Qubit indices of a mode's block, block-MSB first.
    std::vector<int> block(int mode) const {
        if (mode < 0 || mode >= mode_count) throw std::domain_error("ModeLayout: mode out of range");
        std::vector<int> q(qubits_per_mode);
        for (int j = 0; j < qubits_per_mode; ++j) q[j] = mode * qubits_per_mode + j;
        return q;
    }
};

// Basis index of the register holding the encoded Fock state. Qubit 0 is the
// most significant bit of the index.
inline std::size_t encode_fock(const FockState& f, const ModeLayout& layout) {
    if (static_cast<int>(f.occupations.size()) != layout.mode_count)
        throw std::domain_error("encode_fock: mode count mismatch");
    const int n = layout.total_qubits();
    std::size_t index = 0;
    for (int mode = 0; mode < layout.mode_count; ++mode) {
        const int occ = f.occupations[mode];
        if (occ >= (1 << layout.qubits_per_mode))
            throw std::domain_error("encode_fock: occupation does not fit block");
        const BitString g = to_gray(static_cast<std::uint64_t>(occ), layout.qubits_per_mode);
        for (int j = 0; j < layout.qubits_per_mode; ++j) {
            const int qubit = mode * layout.qubits_per_mode + j;
            if (g.bits[j]) index |= std::size_t{1} << (n - 1 - qubit);
        }
    }
    return index;
}

namespace detail {

// Single-mode creation operator on one Nq-qubit block:
//   sum_{n=0}^{N-1} sqrt(n+1) (x)_j [ P_{Gj(n)} on matching bits,
//                                     Sdag_{Gj(n)} on the differing bit ].
inline PauliSum single_mode_creation(int capacity, int nq) {
    std::vector<PauliString> terms;
    for (int n = 0; n < capacity; ++n) {
        const BitString g = to_gray(static_cast<std::uint64_t>(n), nq);
        const int diff = differing_position(static_cast<std::uint64_t>(n), nq);
        PauliSum acc(1);
        for (int j = 0; j < nq; ++j) {
            LadderKind kind;
            if (j == diff)
                kind = g.bits[j] == 0 ? LadderKind::S0dag : LadderKind::S1dag;
            else
                kind = g.bits[j] == 0 ? LadderKind::P0 : LadderKind::P1;
            acc = (j == 0) ? ladder(kind) : tensor(acc, ladder(kind));
        }
        acc *= cplx(std::sqrt(static_cast<double>(n + 1)), 0.0);
        for (const auto& t : acc.terms()) terms.push_back(t);
    }
    return PauliSum(std::move(terms));
}

inline PauliSum embed_in_register(const PauliSum& block_op, int mode, const ModeLayout& layout) {
    PauliSum result = block_op;
    const int pre = mode * layout.qubits_per_mode;
    const int post = layout.total_qubits() - pre - layout.qubits_per_mode;
    if (pre > 0) result = tensor(PauliSum::identity(pre), result);
    if (post > 0) result = tensor(result, PauliSum::identity(post));
    return result;
}

}  // namespace detail

inline PauliSum creation_op(int mode, const ModeLayout& layout, int capacity) {
    if (mode < 0 || mode >= layout.mode_count) throw std::domain_error("creation_op: mode out of range");
    if (capacity < 1) throw std::domain_error("creation_op: capacity must be >= 1");
    if (ModeLayout::qubits_for_capacity(capacity) > layout.qubits_per_mode)
        throw std::domain_error("creation_op: capacity does not fit layout block");
    return detail::embed_in_register(detail::single_mode_creation(capacity, layout.qubits_per_mode),
                                     mode, layout);
}

inline PauliSum annihilation_op(int mode, const ModeLayout& layout, int capacity) {
    if (mode < 0 || mode >= layout.mode_count)
        throw std::domain_error("annihilation_op: mode out of range");
    return creation_op(mode, layout, capacity).adjoint();
}

// b^dag a + a^dag b for modes (a, b); Hermitian generator of the beam
// splitter, conserving total photon number.
inline PauliSum hopping_hamiltonian(int mode_a, int mode_b, const ModeLayout& layout, int capacity) {
    if (mode_a == mode_b) throw std::domain_error("hopping_hamiltonian: modes must differ");
    PauliSum h = creation_op(mode_b, layout, capacity) * annihilation_op(mode_a, layout, capacity) +
                 creation_op(mode_a, layout, capacity) * annihilation_op(mode_b, layout, capacity);
    return h;
}

inline PauliSum number_op(int mode, const ModeLayout& layout, int capacity) {
    return creation_op(mode, layout, capacity) * annihilation_op(mode, layout, capacity);
}

}  // namespace graysim
