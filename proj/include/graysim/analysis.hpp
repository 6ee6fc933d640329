#pragma once

// Complementarity quantifiers: interferometric and bunching visibility,
// predictability, l1-norm coherence and predictability, and the closed-form
// complementarity-relation curves for the two-photon experiment.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "graysim/linalg.hpp"

namespace graysim {

struct PhaseSweep {
    std::string swept_phase;                       // "phi_E" or "phi_H"
    std::vector<std::pair<std::string, double>> fixed_phases;
    std::vector<double> points;                    // radians
    std::vector<double> probability;               // event probability per point
    std::string event;                             // e.g. "D0", "both_D0"

    void validate() const {
        if (points.size() != probability.size())
            throw std::invalid_argument("PhaseSweep: points/probability size mismatch");
        if (points.size() < 8) throw std::invalid_argument("PhaseSweep: at least 8 sample points required");
        for (double p : probability)
            if (p < -1e-12 || p > 1.0 + 1e-12)
                throw std::invalid_argument("PhaseSweep: probabilities must lie in [0, 1]");
    }
};

// (max - min) / (max + min) over the sampled probabilities.
inline double visibility(const PhaseSweep& sweep) {
    sweep.validate();
    const auto [lo, hi] = std::minmax_element(sweep.probability.begin(), sweep.probability.end());
    const double mn = std::max(0.0, *lo), mx = *hi;
    if (mx + mn <= 0.0)
        throw std::domain_error("visibility: undefined for an all-zero probability curve");
    return (mx - mn) / (mx + mn);
}

// Same functional applied to bunching probabilities Pr(both photons in D_j).
inline double bunching_visibility(const PhaseSweep& sweep) { return visibility(sweep); }

// |T1^2 - R1^2| for a beam splitter with unit-normalized amplitudes.
inline double predictability_TR(double t1, double r1) {
    if (std::abs(t1 * t1 + r1 * r1 - 1.0) > 1e-10)
        throw std::domain_error("predictability_TR: T^2 + R^2 must equal 1");
    return std::abs(t1 * t1 - r1 * r1);
}

// A d x d density matrix over a declared effective basis.
class DensityMatrixView {
public:
    DensityMatrixView(Matrix rho, std::vector<std::string> basis)
        : rho_(std::move(rho)), basis_(std::move(basis)) {
        if (rho_.rows() != rho_.cols()) throw std::invalid_argument("DensityMatrixView: square matrix required");
        if (basis_.size() != rho_.rows())
            throw std::invalid_argument("DensityMatrixView: basis size mismatch");
        if (std::abs(rho_.trace() - cplx(1.0, 0.0)) > 1e-10)
            throw std::invalid_argument("DensityMatrixView: trace must be 1");
        if (!rho_.is_hermitian(1e-10))
            throw std::invalid_argument("DensityMatrixView: matrix must be Hermitian");
        for (double e : hermitian_eigenvalues(rho_))
            if (e < -1e-10) throw std::invalid_argument("DensityMatrixView: matrix must be positive semidefinite");
    }

    static DensityMatrixView from_amplitudes(const std::vector<cplx>& amps,
                                             std::vector<std::string> basis) {
        const double n = vector_norm(amps);
        if (n < 1e-14) throw std::invalid_argument("DensityMatrixView: zero state");
        Matrix rho(amps.size(), amps.size());
        for (std::size_t i = 0; i < amps.size(); ++i)
            for (std::size_t j = 0; j < amps.size(); ++j)
                rho(i, j) = (amps[i] / n) * std::conj(amps[j] / n);
        return DensityMatrixView(std::move(rho), std::move(basis));
    }

    // Convex mixture of (probability, amplitudes) branches.
    static DensityMatrixView from_branch_mixture(
        const std::vector<std::pair<double, std::vector<cplx>>>& branches,
        std::vector<std::string> basis) {
        if (branches.empty()) throw std::invalid_argument("DensityMatrixView: empty mixture");
        const std::size_t d = branches.front().second.size();
        Matrix rho(d, d);
        double total = 0.0;
        for (const auto& [p, amps] : branches) {
            if (amps.size() != d) throw std::invalid_argument("DensityMatrixView: branch size mismatch");
            const double n = vector_norm(amps);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    rho(i, j) += p * (amps[i] / n) * std::conj(amps[j] / n);
            total += p;
        }
        rho *= cplx(1.0 / total, 0.0);
        return DensityMatrixView(std::move(rho), std::move(basis));
    }

    const Matrix& matrix() const { return rho_; }
    const std::vector<std::string>& basis() const { return basis_; }
    std::size_t dim() const { return rho_.rows(); }

    double purity() const {
        double s = 0.0;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) s += std::norm(rho_(i, j));
        return s;
    }
    bool is_pure(double tol = 1e-8) const { return purity() >= 1.0 - tol; }

private:
    Matrix rho_;
    std::vector<std::string> basis_;
};

// C_l1 = sum_{j != k} |rho_jk|.
inline double l1_coherence(const DensityMatrixView& rho) {
    double c = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k) c += std::abs(rho.matrix()(j, k));
    return c;
}

// P_l1 = d - 1 - sum_{j != k} sqrt(rho_jj rho_kk).
inline double l1_predictability(const DensityMatrixView& rho) {
    double s = 0.0;
    for (std::size_t j = 0; j < rho.dim(); ++j)
        for (std::size_t k = 0; k < rho.dim(); ++k)
            if (j != k)
                s += std::sqrt(std::max(0.0, rho.matrix()(j, j).real()) *
                               std::max(0.0, rho.matrix()(k, k).real()));
    return static_cast<double>(rho.dim()) - 1.0 - s;
}

struct ComplementarityReport {
    double c_l1 = 0.0;
    double p_l1 = 0.0;
    std::size_t d = 0;
    double slack = 0.0;  // (d - 1) - C - P, >= 0 up to tolerance; 0 for pure states
    bool pure = false;

    static ComplementarityReport from_density(const DensityMatrixView& rho) {
        ComplementarityReport r;
        r.c_l1 = l1_coherence(rho);
        r.p_l1 = l1_predictability(rho);
        r.d = rho.dim();
        r.slack = static_cast<double>(r.d) - 1.0 - r.c_l1 - r.p_l1;
        r.pure = rho.is_pure();
        if (r.slack < -1e-8)
            throw std::runtime_error("ComplementarityReport: C + P exceeds d - 1");
        return r;
    }
};

// Closed forms for the two-photon state after BS2 in the effective basis
// (|20>, |02>, |11>):
//   C = sqrt(2)|sin phi_E| - cos(phi_E)/2 + 1/2
//   P = -sqrt(2)|sin phi_E| + cos(phi_E)/2 + 3/2        (C + P = 2 exactly)
inline std::pair<double, double> two_photon_cr_after_bs2(double phi_E) {
    const double c = std::sqrt(2.0) * std::abs(std::sin(phi_E)) - std::cos(phi_E) / 2.0 + 0.5;
    return {c, 2.0 - c};
}

// Closed forms after BS3:
//   C = (s1 + s2) sqrt(1 - cos phi_E) sqrt(1 - cos phi_H) / 4 + s1 s2 / 8
//   P = 2 - C
// with s1, s2 the square-root combinations below.
inline std::pair<double, double> two_photon_cr_after_bs3(double phi_E, double phi_H) {
    const double ce = std::cos(phi_E), ch = std::cos(phi_H);
    const double s1 = std::sqrt(std::max(0.0, 2.0 * ce + 2.0 * ch - 3.0 * std::cos(phi_E - phi_H) +
                                                  std::cos(phi_E + phi_H) + 6.0));
    const double s2 = std::sqrt(std::max(0.0, 2.0 * ce + 2.0 * ch + std::cos(phi_E - phi_H) -
                                                  3.0 * std::cos(phi_E + phi_H) + 6.0));
    const double c = (s1 + s2) * std::sqrt(std::max(0.0, 1.0 - ce)) *
                         std::sqrt(std::max(0.0, 1.0 - ch)) / 4.0 +
                     s1 * s2 / 8.0;
    return {c, 2.0 - c};
}

}  // namespace graysim
