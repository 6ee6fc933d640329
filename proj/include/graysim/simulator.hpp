#pragma once

// Exact statevector execution of circuits with unitary gates, mid-circuit
// measurements into named classical bits, and resets. Two evaluation modes:
// exhaustive branch enumeration (exact probabilities) and seeded per-shot
// trajectory sampling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graysim/linalg.hpp"

namespace graysim {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kBranchPruneProbability = 1e-12;
inline constexpr int kMaxQubits = 14;

// SplitMix64: the sampling RNG. Fixed algorithm, fixed seeding; the
// reproducibility contract is "identical seed, identical counts".
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct Statevector {
    int n_qubits = 0;
    std::vector<cplx> amp;

    explicit Statevector(int n) : n_qubits(n), amp(std::size_t{1} << n) {
        if (n <= 0 || n > kMaxQubits) throw std::domain_error("Statevector: qubit count out of range");
        amp[0] = 1.0;
    }

    std::size_t dim() const { return amp.size(); }
    double norm() const { return vector_norm(amp); }

    void renormalize() {
        const double n = norm();
        if (n < 1e-150) throw std::runtime_error("Statevector: cannot renormalize zero vector");
        for (auto& a : amp) a /= n;
    }

    // Bit position of qubit q inside a basis index (qubit 0 most significant).
    std::size_t bit(int q) const { return std::size_t{1} << (n_qubits - 1 - q); }
};

namespace detail {

inline void check_targets(int n_qubits, const std::vector<int>& targets) {
    if (targets.empty()) throw std::invalid_argument("instruction requires at least one target");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits)
            throw std::invalid_argument("target qubit out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j]) throw std::invalid_argument("duplicate target qubit");
    }
}

// Enumerate basis indices with all target bits clear, then visit the 2^k
// sub-block spanned by the targets (targets[0] = sub-index MSB).
template <typename Fn>
void for_each_subblock(const Statevector& psi, const std::vector<int>& targets, Fn&& fn) {
    const int k = static_cast<int>(targets.size());
    const std::size_t dim = psi.dim();
    std::size_t tmask = 0;
    std::vector<std::size_t> tbits(k);
    for (int i = 0; i < k; ++i) {
        tbits[i] = psi.bit(targets[i]);
        tmask |= tbits[i];
    }
    std::vector<std::size_t> sub_index(std::size_t{1} << k);
    for (std::size_t s = 0; s < sub_index.size(); ++s) {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i)
            if ((s >> (k - 1 - i)) & 1u) idx |= tbits[i];
        sub_index[s] = idx;
    }
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & tmask) continue;
        fn(base, sub_index);
    }
}

}  // namespace detail

// psi <- (U on targets) psi. U must be unitary to 1e-10 and 2^k dimensional.
inline void apply_unitary(Statevector& psi, const Matrix& u, const std::vector<int>& targets) {
    detail::check_targets(psi.n_qubits, targets);
    const std::size_t sub = std::size_t{1} << targets.size();
    if (u.rows() != sub || u.cols() != sub)
        throw std::invalid_argument("apply_unitary: matrix dimension does not match target count");
    if (!u.is_unitary(kNormTolerance)) throw std::invalid_argument("apply_unitary: matrix is not unitary");

    std::vector<cplx> in(sub), out(sub);
    detail::for_each_subblock(psi, targets, [&](std::size_t base, const std::vector<std::size_t>& si) {
        for (std::size_t s = 0; s < sub; ++s) in[s] = psi.amp[base | si[s]];
        for (std::size_t r = 0; r < sub; ++r) {
            cplx acc = 0.0;
            for (std::size_t s = 0; s < sub; ++s) acc += u(r, s) * in[s];
            out[r] = acc;
        }
        for (std::size_t s = 0; s < sub; ++s) psi.amp[base | si[s]] = out[s];
    });
}

// Probability of each computational outcome on the targets.
inline std::vector<double> measure_probabilities(const Statevector& psi, const std::vector<int>& targets) {
    detail::check_targets(psi.n_qubits, targets);
    std::vector<double> prob(std::size_t{1} << targets.size(), 0.0);
    detail::for_each_subblock(psi, targets, [&](std::size_t base, const std::vector<std::size_t>& si) {
        for (std::size_t s = 0; s < si.size(); ++s) prob[s] += std::norm(psi.amp[base | si[s]]);
    });
    return prob;
}

// Project onto a specific outcome on the targets and renormalize.
inline void project_onto(Statevector& psi, const std::vector<int>& targets, std::size_t outcome) {
    detail::check_targets(psi.n_qubits, targets);
    detail::for_each_subblock(psi, targets, [&](std::size_t base, const std::vector<std::size_t>& si) {
        for (std::size_t s = 0; s < si.size(); ++s)
            if (s != outcome) psi.amp[base | si[s]] = 0.0;
    });
    psi.renormalize();
}

// Reset targets to |0>. Defined only when every target qubit is in a definite
// computational state over the support (always true right after measurement).
inline void reset_to_zero(Statevector& psi, const std::vector<int>& targets) {
    detail::check_targets(psi.n_qubits, targets);
    for (int q : targets) {
        const std::size_t b = psi.bit(q);
        bool has0 = false, has1 = false;
        for (std::size_t i = 0; i < psi.dim(); ++i) {
            if (std::norm(psi.amp[i]) <= 1e-24) continue;
            ((i & b) ? has1 : has0) = true;
        }
        if (has0 && has1)
            throw std::runtime_error("reset: target qubit is in superposition; measure first");
        if (has1) {
            for (std::size_t i = 0; i < psi.dim(); ++i) {
                if (i & b) {
                    psi.amp[i & ~b] = psi.amp[i];
                    psi.amp[i] = 0.0;
                }
            }
        }
    }
}

struct MeasurementBranch {
    std::vector<int> record;  // one bit per target, target order
    double probability = 0.0;
    Statevector state;
};

// Measure the targets, then reset them to |0>: the "blocker" primitive.
// Returns every outcome branch with probability above the pruning threshold.
inline std::vector<MeasurementBranch> measure_and_reset(const Statevector& psi,
                                                        const std::vector<int>& targets) {
    const std::vector<double> prob = measure_probabilities(psi, targets);
    std::vector<MeasurementBranch> branches;
    for (std::size_t outcome = 0; outcome < prob.size(); ++outcome) {
        if (prob[outcome] <= kBranchPruneProbability) continue;
        MeasurementBranch br{std::vector<int>(targets.size()), prob[outcome], psi};
        for (std::size_t i = 0; i < targets.size(); ++i)
            br.record[i] = static_cast<int>((outcome >> (targets.size() - 1 - i)) & 1u);
        project_onto(br.state, targets, outcome);
        reset_to_zero(br.state, targets);
        branches.push_back(std::move(br));
    }
    return branches;
}

enum class InstrKind { unitary, measure, reset };

struct Instruction {
    InstrKind kind = InstrKind::unitary;
    Matrix u;                  // unitary only
    std::vector<int> targets;  // qubits
    std::vector<int> cbits;    // measure only, one per target
    std::string label;
};

class Circuit {
public:
    explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {
        if (n_qubits <= 0 || n_qubits > kMaxQubits)
            throw std::domain_error("Circuit: qubit count out of range");
    }

    int n_qubits() const { return n_qubits_; }
    const std::vector<Instruction>& instructions() const { return instr_; }
    const std::vector<std::string>& classical_bits() const { return cbit_names_; }

    // Classical bits carry stable names c0, c1, ... chosen by the caller.
    int add_classical_bit(const std::string& name) {
        for (const auto& n : cbit_names_)
            if (n == name) throw std::invalid_argument("Circuit: duplicate classical bit " + name);
        cbit_names_.push_back(name);
        return static_cast<int>(cbit_names_.size()) - 1;
    }

    int classical_bit_index(const std::string& name) const {
        for (std::size_t i = 0; i < cbit_names_.size(); ++i)
            if (cbit_names_[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("Circuit: unknown classical bit " + name);
    }

    void apply(Matrix u, std::vector<int> targets, std::string label = "") {
        detail::check_targets(n_qubits_, targets);
        const std::size_t sub = std::size_t{1} << targets.size();
        if (u.rows() != sub || u.cols() != sub)
            throw std::invalid_argument("Circuit::apply: matrix/target mismatch");
        if (!u.is_unitary(kNormTolerance))
            throw std::invalid_argument("Circuit::apply: matrix is not unitary");
        instr_.push_back({InstrKind::unitary, std::move(u), std::move(targets), {}, std::move(label)});
    }

    void measure(std::vector<int> targets, std::vector<int> cbits, std::string label = "") {
        detail::check_targets(n_qubits_, targets);
        if (targets.size() != cbits.size())
            throw std::invalid_argument("Circuit::measure: one classical bit per target");
        for (int c : cbits) {
            if (c < 0 || c >= static_cast<int>(cbit_names_.size()))
                throw std::invalid_argument("Circuit::measure: classical bit out of range");
            if (written_.size() <= static_cast<std::size_t>(c)) written_.resize(c + 1, false);
            if (written_[c])
                throw std::invalid_argument("Circuit::measure: classical bit written twice: " + cbit_names_[c]);
            written_[c] = true;
        }
        instr_.push_back({InstrKind::measure, Matrix(), std::move(targets), std::move(cbits), std::move(label)});
    }

    void reset(std::vector<int> targets, std::string label = "") {
        detail::check_targets(n_qubits_, targets);
        instr_.push_back({InstrKind::reset, Matrix(), std::move(targets), {}, std::move(label)});
    }

    void append(const Instruction& ins) {
        switch (ins.kind) {
            case InstrKind::unitary: apply(ins.u, ins.targets, ins.label); break;
            case InstrKind::measure: measure(ins.targets, ins.cbits, ins.label); break;
            case InstrKind::reset: reset(ins.targets, ins.label); break;
        }
    }

    void append(const std::vector<Instruction>& seq) {
        for (const auto& ins : seq) append(ins);
    }

private:
    int n_qubits_;
    std::vector<Instruction> instr_;
    std::vector<std::string> cbit_names_;
    std::vector<bool> written_;
};

struct ExecutionBranch {
    std::vector<int> cbit_values;  // indexed by classical bit, -1 if never written
    double probability = 1.0;
    Statevector state;
};

// Depth-first enumeration over all measurement outcomes; branches below the
// pruning threshold are dropped. Probabilities are exact.
inline std::vector<ExecutionBranch> enumerate_branches(const Circuit& circuit) {
    std::vector<ExecutionBranch> done;
    std::vector<ExecutionBranch> stack;
    stack.push_back({std::vector<int>(circuit.classical_bits().size(), -1), 1.0,
                     Statevector(circuit.n_qubits())});
    std::vector<std::size_t> position{0};

    // Iterative DFS: run each branch forward instruction by instruction.
    while (!stack.empty()) {
        ExecutionBranch br = std::move(stack.back());
        stack.pop_back();
        std::size_t pos = position.back();
        position.pop_back();

        bool alive = true;
        const auto& instr = circuit.instructions();
        while (pos < instr.size()) {
            const Instruction& ins = instr[pos];
            ++pos;
            if (ins.kind == InstrKind::unitary) {
                apply_unitary(br.state, ins.u, ins.targets);
            } else if (ins.kind == InstrKind::reset) {
                reset_to_zero(br.state, ins.targets);
            } else {
                const std::vector<double> prob = measure_probabilities(br.state, ins.targets);
                const std::size_t k = ins.targets.size();
                std::vector<ExecutionBranch> survivors;
                for (std::size_t outcome = 0; outcome < prob.size(); ++outcome) {
                    const double p = br.probability * prob[outcome];
                    if (p <= kBranchPruneProbability) continue;
                    ExecutionBranch next{br.cbit_values, p, br.state};
                    project_onto(next.state, ins.targets, outcome);
                    for (std::size_t i = 0; i < k; ++i)
                        next.cbit_values[ins.cbits[i]] =
                            static_cast<int>((outcome >> (k - 1 - i)) & 1u);
                    survivors.push_back(std::move(next));
                }
                if (survivors.empty()) { alive = false; break; }
                // Continue the first surviving outcome in-line, defer the rest.
                for (std::size_t i = 1; i < survivors.size(); ++i) {
                    stack.push_back(std::move(survivors[i]));
                    position.push_back(pos);
                }
                br = std::move(survivors.front());
            }
        }
        if (alive) done.push_back(std::move(br));
    }
    return done;
}

struct OutcomeDistribution {
    // Keys are bit strings over the written classical bits in descending bit
    // index (c3c2c1c0 order). Values are exact probabilities, or frequencies
    // when sampled.
    std::map<std::string, double> probability;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;  // 0 means exact
    std::vector<std::string> bit_order;  // descending, e.g. {"c3","c2","c1","c0"}

    double prob(const std::string& key) const {
        auto it = probability.find(key);
        return it == probability.end() ? 0.0 : it->second;
    }

    double total_probability() const {
        double s = 0.0;
        for (const auto& [k, p] : probability) s += p;
        return s;
    }
};

namespace detail {

inline std::vector<int> written_bits_descending(const Circuit& circuit) {
    std::vector<bool> written(circuit.classical_bits().size(), false);
    for (const auto& ins : circuit.instructions())
        if (ins.kind == InstrKind::measure)
            for (int c : ins.cbits) written[c] = true;
    std::vector<int> order;
    for (int c = static_cast<int>(written.size()) - 1; c >= 0; --c)
        if (written[c]) order.push_back(c);
    return order;
}

inline std::string record_string(const std::vector<int>& cbit_values, const std::vector<int>& order) {
    std::string s;
    s.reserve(order.size());
    for (int c : order) s.push_back(cbit_values[c] == 1 ? '1' : '0');
    return s;
}

}  // namespace detail

inline OutcomeDistribution run_exact(const Circuit& circuit) {
    const std::vector<int> order = detail::written_bits_descending(circuit);
    OutcomeDistribution dist;
    for (int c : order) dist.bit_order.push_back(circuit.classical_bits()[c]);
    for (const auto& br : enumerate_branches(circuit))
        dist.probability[detail::record_string(br.cbit_values, order)] += br.probability;
    return dist;
}

// Independent trajectories; SplitMix64 stream seeded once, drawn sequentially.
inline OutcomeDistribution run_sampled(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::domain_error("run_sampled: shots must be >= 1");
    const std::vector<int> order = detail::written_bits_descending(circuit);
    OutcomeDistribution dist;
    dist.shots = shots;
    for (int c : order) dist.bit_order.push_back(circuit.classical_bits()[c]);

    SplitMix64 rng(seed);
    std::vector<int> cbit_values;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        Statevector psi(circuit.n_qubits());
        cbit_values.assign(circuit.classical_bits().size(), -1);
        for (const auto& ins : circuit.instructions()) {
            if (ins.kind == InstrKind::unitary) {
                apply_unitary(psi, ins.u, ins.targets);
            } else if (ins.kind == InstrKind::reset) {
                reset_to_zero(psi, ins.targets);
            } else {
                const std::vector<double> prob = measure_probabilities(psi, ins.targets);
                const double u = rng.next_double();
                double acc = 0.0;
                std::size_t outcome = prob.size() - 1;
                for (std::size_t o = 0; o < prob.size(); ++o) {
                    acc += prob[o];
                    if (u < acc) { outcome = o; break; }
                }
                project_onto(psi, ins.targets, outcome);
                const std::size_t k = ins.targets.size();
                for (std::size_t i = 0; i < k; ++i)
                    cbit_values[ins.cbits[i]] = static_cast<int>((outcome >> (k - 1 - i)) & 1u);
            }
        }
        dist.counts[detail::record_string(cbit_values, order)] += 1;
    }
    for (const auto& [key, count] : dist.counts)
        dist.probability[key] = static_cast<double>(count) / static_cast<double>(shots);
    return dist;
}

// Total-variation distance between two outcome distributions.
inline double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double tv = 0.0;
    for (const auto& [k, p] : a.probability) tv += std::abs(p - b.prob(k));
    for (const auto& [k, p] : b.probability)
        if (a.probability.find(k) == a.probability.end()) tv += p;
    return 0.5 * tv;
}

}  // namespace graysim
