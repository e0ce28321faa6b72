#pragma once

// Generators X, Y, K of the quantum algebra U_t(sl2) on the irreducible
// representations V^k, k = 1..r-1, with exact entries in Z[t].
//
// Basis vectors e_j are indexed by doubled weights w = 2j in
// {-(k-1), -(k-3), ..., k-1}; row/column i holds weight w = -(k-1) + 2i.

#include <cstddef>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cyclotomic.hpp"
#include "matrix.hpp"

namespace moduli {

using CycloMatrix = Matrix<CyclotomicElement>;

struct RepMatrices {
    int k = 0;
    int r = 0;
    CycloMatrix X;
    CycloMatrix Y;
    CycloMatrix K;

    [[nodiscard]] static int weight_of(int k, std::size_t index) { return -(k - 1) + 2 * static_cast<int>(index); }
};

inline CycloMatrix cyclo_identity(std::size_t n, int r) {
    return CycloMatrix::identity(n, CyclotomicElement::zero(r), CyclotomicElement::one(r));
}

inline RepMatrices build_rep(int k, int r) {
    require_level(r);
    if (k < 1 || k > r - 1) {
        throw std::invalid_argument("representation dimension k must lie in 1..r-1, got " + std::to_string(k));
    }
    const auto dim = static_cast<std::size_t>(k);
    const auto zero = CyclotomicElement::zero(r);
    RepMatrices rep{k, r, CycloMatrix(dim, dim, zero), CycloMatrix(dim, dim, zero), CycloMatrix(dim, dim, zero)};
    for (std::size_t i = 0; i < dim; ++i) {
        const int w = RepMatrices::weight_of(k, i);
        // X e_j = [m+j+1] e_{j+1},  m + j + 1 = (k + 1 + w) / 2
        if (i + 1 < dim) {
            rep.X(i + 1, i) = quantum_integer((k + 1 + w) / 2, r);
        }
        // Y e_j = [m-j+1] e_{j-1}
        if (i > 0) {
            rep.Y(i - 1, i) = quantum_integer((k + 1 - w) / 2, r);
        }
        rep.K(i, i) = t_pow(w, r);
    }
    return rep;
}

struct RelationReport {
    int k = 0;
    int r = 0;
    bool kx = false;           // KX = t^2 XK
    bool ky = false;           // KY = t^-2 YK
    bool commutator = false;   // XY - YX = (K^2 - K^-2)/(t^2 - t^-2)
    bool nilpotent = false;    // X^r = Y^r = 0
    bool k_order = false;      // K^{4r} = 1

    [[nodiscard]] bool all() const { return kx && ky && commutator && nilpotent && k_order; }
};

inline RelationReport verify_relations(int k, int r) {
    const RepMatrices rep = build_rep(k, r);
    const auto dim = static_cast<std::size_t>(k);
    const auto zero = CyclotomicElement::zero(r);
    const CycloMatrix id = cyclo_identity(dim, r);
    const CycloMatrix zeros(dim, dim, zero);

    RelationReport out;
    out.k = k;
    out.r = r;
    out.kx = rep.K * rep.X == (rep.X * rep.K).scaled(t_pow(2, r));
    out.ky = rep.K * rep.Y == (rep.Y * rep.K).scaled(t_pow(-2, r));

    // Two forms: diagonal entries [w], and the division-free
    // (XY - YX)(t^2 - t^-2) = K^2 - K^-2.
    const CycloMatrix comm = rep.X * rep.Y - rep.Y * rep.X;
    CycloMatrix diag(dim, dim, zero);
    CycloMatrix k_sq_diff(dim, dim, zero);
    for (std::size_t i = 0; i < dim; ++i) {
        const int w = RepMatrices::weight_of(k, i);
        diag(i, i) = quantum_integer(w, r);
        k_sq_diff(i, i) = t_pow(2 * w, r) - t_pow(-2 * w, r);
    }
    const CyclotomicElement denom = t_pow(2, r) - t_pow(-2, r);
    out.commutator = comm == diag && comm.scaled(denom) == k_sq_diff;

    out.nilpotent = matrix_power(rep.X, static_cast<unsigned>(r), id) == zeros &&
                    matrix_power(rep.Y, static_cast<unsigned>(r), id) == zeros;
    out.k_order = matrix_power(rep.K, 4ULL * static_cast<unsigned>(r), id) == id;
    return out;
}

inline void to_json(nlohmann::json& j, const RelationReport& rep) {
    j = nlohmann::json{{"k", rep.k},
                       {"r", rep.r},
                       {"KX=t^2XK", rep.kx},
                       {"KY=t^-2YK", rep.ky},
                       {"XY-YX=[K;0]", rep.commutator},
                       {"X^r=Y^r=0", rep.nilpotent},
                       {"K^4r=1", rep.k_order},
                       {"pass", rep.all()}};
}

}  // namespace moduli
