#pragma once

// Complex-weighted Pauli strings, their algebra, and exponentials of
// Hermitian Pauli sums (exact and first-order Trotter).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graysim/linalg.hpp"

namespace graysim {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(PauliOp p) { return "IXYZ"[static_cast<int>(p)]; }

// Product of two single-qubit Paulis: a*b = phase * result.
inline std::pair<cplx, PauliOp> pauli_product(PauliOp a, PauliOp b) {
    if (a == PauliOp::I) return {1.0, b};
    if (b == PauliOp::I) return {1.0, a};
    if (a == b) return {1.0, PauliOp::I};
    // Cyclic: XY=iZ, YZ=iX, ZX=iY, and anticyclic pick up -i.
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    const int ic = 6 - ia - ib;  // the remaining letter
    const bool cyclic = (ib - ia + 3) % 3 == 1;
    return {cplx(0.0, cyclic ? 1.0 : -1.0), static_cast<PauliOp>(ic)};
}

struct PauliString {
    cplx coeff = 1.0;
    std::vector<PauliOp> ops;

    PauliString() = default;
    PauliString(cplx c, std::vector<PauliOp> o) : coeff(c), ops(std::move(o)) {}

    int width() const { return static_cast<int>(ops.size()); }

    std::string letters() const {
        std::string s;
        s.reserve(ops.size());
        for (PauliOp p : ops) s.push_back(pauli_char(p));
        return s;
    }

    Matrix dense() const {
        Matrix m(1, 1);
        m(0, 0) = coeff;
        for (PauliOp p : ops) m = Matrix::kron(m, pauli_matrix(p));
        return m;
    }

    static const Matrix& pauli_matrix(PauliOp p) {
        static const std::vector<Matrix> mats = [] {
            std::vector<Matrix> v(4, Matrix(2, 2));
            v[0](0, 0) = 1;  v[0](1, 1) = 1;                    // I
            v[1](0, 1) = 1;  v[1](1, 0) = 1;                    // X
            v[2](0, 1) = cplx(0, -1); v[2](1, 0) = cplx(0, 1);  // Y
            v[3](0, 0) = 1;  v[3](1, 1) = -1;                   // Z
            return v;
        }();
        return mats[static_cast<int>(p)];
    }
};

// Sum of Pauli strings over a fixed register width. Terms are merged on
// construction (identical letter sequences combined, coefficients below
// 1e-12 dropped) and kept in lexicographic letter order.
class PauliSum {
public:
    static constexpr double kMergeEpsilon = 1e-12;

    explicit PauliSum(int width) : width_(width) {
        if (width <= 0) throw std::domain_error("PauliSum: width must be positive");
    }

    PauliSum(std::initializer_list<PauliString> terms)
        : PauliSum(std::vector<PauliString>(terms)) {}

    explicit PauliSum(std::vector<PauliString> terms) {
        if (terms.empty()) throw std::domain_error("PauliSum: need at least one term to infer width");
        width_ = terms.front().width();
        for (auto& t : terms) append_unmerged(std::move(t));
        merge();
    }

    static PauliSum identity(int width) {
        PauliSum s(width);
        s.append_unmerged(PauliString(1.0, std::vector<PauliOp>(width, PauliOp::I)));
        s.merge();
        return s;
    }

    int width() const { return width_; }
    const std::vector<PauliString>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    PauliSum& operator+=(const PauliSum& o) {
        require_same_width(o);
        for (const auto& t : o.terms_) append_unmerged(t);
        merge();
        return *this;
    }
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }

    PauliSum& operator*=(cplx s) {
        for (auto& t : terms_) t.coeff *= s;
        merge();
        return *this;
    }
    friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

    friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
        a.require_same_width(b);
        PauliSum out(a.width_);
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                PauliString t;
                t.coeff = ta.coeff * tb.coeff;
                t.ops.resize(ta.ops.size());
                for (std::size_t q = 0; q < ta.ops.size(); ++q) {
                    auto [phase, op] = pauli_product(ta.ops[q], tb.ops[q]);
                    t.coeff *= phase;
                    t.ops[q] = op;
                }
                out.append_unmerged(std::move(t));
            }
        }
        out.merge();
        return out;
    }

    PauliSum adjoint() const {
        PauliSum out(width_);
        for (const auto& t : terms_) out.append_unmerged(PauliString(std::conj(t.coeff), t.ops));
        out.merge();
        return out;
    }

    Matrix dense() const {
        const std::size_t dim = std::size_t{1} << width_;
        Matrix m(dim, dim);
        for (const auto& t : terms_) m += t.dense();
        return m;
    }

    bool is_hermitian(double tol = 1e-10) const { return dense().is_hermitian(tol); }

    std::string str() const {
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + std::to_string(t.coeff.real()) + (t.coeff.imag() < 0 ? "-" : "+") +
                 std::to_string(std::abs(t.coeff.imag())) + "i)*" + t.letters();
        }
        return s.empty() ? "0" : s;
    }

private:
    void append_unmerged(PauliString t) {
        if (t.width() != width_) throw std::invalid_argument("PauliSum: term width mismatch");
        terms_.push_back(std::move(t));
    }

    void merge() {
        std::map<std::string, PauliString> merged;
        for (auto& t : terms_) {
            auto [it, inserted] = merged.emplace(t.letters(), t);
            if (!inserted) it->second.coeff += t.coeff;
        }
        terms_.clear();
        for (auto& [key, t] : merged)
            if (std::abs(t.coeff) >= kMergeEpsilon) terms_.push_back(std::move(t));
    }

    void require_same_width(const PauliSum& o) const {
        if (width_ != o.width_) throw std::invalid_argument("PauliSum: width mismatch");
    }

    int width_ = 0;
    std::vector<PauliString> terms_;
};

inline PauliSum tensor(const PauliSum& a, const PauliSum& b) {
    std::vector<PauliString> terms;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            PauliString t(ta.coeff * tb.coeff, ta.ops);
            t.ops.insert(t.ops.end(), tb.ops.begin(), tb.ops.end());
            terms.push_back(std::move(t));
        }
    if (terms.empty()) return PauliSum(a.width() + b.width());
    return PauliSum(std::move(terms));
}

enum class LadderKind { P0, P1, S0, S1, S0dag, S1dag };

// Single-qubit projector / spin-ladder building blocks:
//   P0 = (I+Z)/2 = |0><0|,  P1 = (I-Z)/2 = |1><1|,
//   S0 = (X+iY)/2 = |0><1|, S1 = (X-iY)/2 = |1><0|.
inline PauliSum ladder(LadderKind kind) {
    using V = std::vector<PauliOp>;
    const PauliString id(0.5, V{PauliOp::I});
    const PauliString x(0.5, V{PauliOp::X});
    const PauliString yp(cplx(0, 0.5), V{PauliOp::Y});
    const PauliString ym(cplx(0, -0.5), V{PauliOp::Y});
    const PauliString zp(0.5, V{PauliOp::Z});
    const PauliString zm(-0.5, V{PauliOp::Z});
    switch (kind) {
        case LadderKind::P0: return PauliSum{id, zp};
        case LadderKind::P1: return PauliSum{id, zm};
        case LadderKind::S0: return PauliSum{x, yp};
        case LadderKind::S1: return PauliSum{x, ym};
        case LadderKind::S0dag: return PauliSum{x, ym};  // (|0><1|)^dag = |1><0|
        case LadderKind::S1dag: return PauliSum{x, yp};
    }
    throw std::invalid_argument("ladder: unknown kind");
}

// e^{i*lambda*H} for Hermitian H, via dense scaling-and-squaring.
inline Matrix exponential_exact(const PauliSum& h, double lambda) {
    Matrix hd = h.dense();
    if (!hd.is_hermitian(1e-10)) throw std::invalid_argument("exponential_exact: H is not Hermitian");
    Matrix u = expm(hd * cplx(0.0, lambda));
    if (!u.is_unitary(1e-10)) throw std::runtime_error("exponential_exact: result failed unitarity check");
    return u;
}

// First-order product formula: (prod_terms e^{i*lambda*c_t*P_t/steps})^steps.
// Factors are ordered by descending |coefficient| (letters break ties), which
// groups same-weight families together and cancels most of the leading
// commutator error for the hopping Hamiltonians built here. Each factor has
// the closed form cos(a)I + i sin(a)P since P^2 = I.
inline Matrix exponential_trotter(const PauliSum& h, double lambda, int steps) {
    if (steps < 1) throw std::domain_error("exponential_trotter: steps must be >= 1");
    const std::size_t dim = std::size_t{1} << h.width();
    std::vector<PauliString> ordered = h.terms();
    std::stable_sort(ordered.begin(), ordered.end(), [](const PauliString& a, const PauliString& b) {
        const double ma = std::abs(a.coeff), mb = std::abs(b.coeff);
        if (std::abs(ma - mb) > 1e-15) return ma > mb;
        return a.letters() < b.letters();
    });
    Matrix step = Matrix::identity(dim);
    for (const auto& t : ordered) {
        if (std::abs(t.coeff.imag()) > 1e-10)
            throw std::invalid_argument("exponential_trotter: Hermitian H requires real term coefficients");
        const double angle = lambda * t.coeff.real() / steps;
        PauliString bare(1.0, t.ops);
        Matrix factor = Matrix::identity(dim) * cplx(std::cos(angle), 0.0) +
                        bare.dense() * cplx(0.0, std::sin(angle));
        step = factor * step;
    }
    Matrix u = Matrix::identity(dim);
    Matrix base = step;
    int e = steps;
    while (e > 0) {
        if (e & 1) u = u * base;
        base = base * base;
        e >>= 1;
    }
    if (!u.is_unitary(1e-10)) throw std::runtime_error("exponential_trotter: result failed unitarity check");
    return u;
}

}  // namespace graysim
