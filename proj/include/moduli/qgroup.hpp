#pragma once

// Quantum-group quantization of the pillow case: the operators C(p,q),
// S(p,q) and the Kauffman-bracket variant (p,q)_T acting on the basis
// V^1(alpha), ..., V^{r-1}(alpha).
//
// Row/column i (0-based) of every operator matrix is the basis vector with
// label i + 1, i.e. zeta_{i+1} = V^{i+1}(alpha), in ascending order.

#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cyclotomic.hpp"
#include "matrix.hpp"

namespace moduli {

using CycloMatrix = Matrix<CyclotomicElement>;

/// A basis label k in Z folded onto 1..r-1 with a sign, or zero.
/// Encodes V^{n+2r} = V^n, V^{r+n} = -V^{r-n}, V^r = V^0 = 0.
struct ReducedIndex {
    int value = 0;  // 1..r-1, or 0 for the zero vector
    int sign = 0;   // +1 / -1, 0 when zero

    [[nodiscard]] bool is_zero() const noexcept { return value == 0; }
    friend bool operator==(const ReducedIndex&, const ReducedIndex&) = default;

    static ReducedIndex zero() { return {}; }
};

inline ReducedIndex reduce_index(long long k, int r) {
    require_level(r);
    const long long period = 2LL * r;
    long long kk = k % period;
    if (kk < 0) {
        kk += period;
    }
    if (kk == 0 || kk == r) {
        return ReducedIndex::zero();
    }
    if (kk > r) {
        return {static_cast<int>(period - kk), -1};
    }
    return {static_cast<int>(kk), +1};
}

class ExactOperator {
public:
    ExactOperator() = default;

    explicit ExactOperator(int r)
        : r_(r), entries_(dim_of(r), dim_of(r), CyclotomicElement::zero(r)) {}

    ExactOperator(int r, CycloMatrix entries) : r_(r), entries_(std::move(entries)) {
        require_level(r);
        if (entries_.rows() != dim_of(r) || entries_.cols() != dim_of(r)) {
            throw std::invalid_argument("operator matrix must be (r-1)x(r-1)");
        }
    }

    static ExactOperator identity(int r) {
        require_level(r);
        return {r, CycloMatrix::identity(dim_of(r), CyclotomicElement::zero(r), CyclotomicElement::one(r))};
    }

    static ExactOperator zero(int r) {
        require_level(r);
        return ExactOperator(r);
    }

    [[nodiscard]] int level() const noexcept { return r_; }
    [[nodiscard]] std::size_t dim() const noexcept { return entries_.rows(); }
    [[nodiscard]] const CycloMatrix& entries() const noexcept { return entries_; }

    /// Entry at (row label, column label), labels in 1..r-1.
    [[nodiscard]] const CyclotomicElement& at(int row, int col) const {
        return entries_.at(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
    }

    /// Adds `coeff` times the (possibly folded) target label into column `col`.
    void accumulate(long long target, int col, const CyclotomicElement& coeff) {
        const ReducedIndex red = reduce_index(target, r_);
        if (red.is_zero()) {
            return;
        }
        auto& cell = entries_(static_cast<std::size_t>(red.value - 1), static_cast<std::size_t>(col - 1));
        if (red.sign > 0) {
            cell += coeff;
        } else {
            cell -= coeff;
        }
    }

    friend ExactOperator operator+(const ExactOperator& a, const ExactOperator& b) {
        a.check_level(b);
        return {a.r_, a.entries_ + b.entries_};
    }

    friend ExactOperator operator-(const ExactOperator& a, const ExactOperator& b) {
        a.check_level(b);
        return {a.r_, a.entries_ - b.entries_};
    }

    friend ExactOperator operator*(const ExactOperator& a, const ExactOperator& b) {
        a.check_level(b);
        return {a.r_, a.entries_ * b.entries_};
    }

    friend ExactOperator operator*(const CyclotomicElement& s, const ExactOperator& a) {
        if (s.level() != a.r_) {
            throw std::invalid_argument("scalar level mismatch");
        }
        return {a.r_, a.entries_.scaled(s)};
    }

    friend bool operator==(const ExactOperator& a, const ExactOperator& b) {
        return a.r_ == b.r_ && a.entries_ == b.entries_;
    }

    /// Conjugate transpose with t -> t^{-1}; the basis is orthonormal.
    [[nodiscard]] ExactOperator adjoint() const {
        return {r_, entries_.transposed().map([](const CyclotomicElement& e) { return e.conjugate(); })};
    }

    [[nodiscard]] Matrix<std::complex<double>> to_complex() const {
        return entries_.map([](const CyclotomicElement& e) { return e.to_complex(); });
    }

private:
    static std::size_t dim_of(int r) { return static_cast<std::size_t>(r - 1); }

    void check_level(const ExactOperator& other) const {
        if (r_ != other.r_) {
            throw std::invalid_argument("operator level mismatch: " + std::to_string(r_) + " vs " +
                                        std::to_string(other.r_));
        }
    }

    int r_ = 0;
    CycloMatrix entries_;
};

inline ExactOperator op_add(const ExactOperator& a, const ExactOperator& b) { return a + b; }
inline ExactOperator op_mul(const ExactOperator& a, const ExactOperator& b) { return a * b; }
inline ExactOperator op_scale(const CyclotomicElement& s, const ExactOperator& a) { return s * a; }
inline ExactOperator op_adjoint(const ExactOperator& a) { return a.adjoint(); }

/// C(p,q) V^k = t^{-pq} (t^{2qk} V^{k-p} + t^{-2qk} V^{k+p}).
inline ExactOperator cosine_operator(long long p, long long q, int r) {
    ExactOperator op = ExactOperator::zero(r);
    for (int k = 1; k <= r - 1; ++k) {
        op.accumulate(k - p, k, t_pow(-p * q + 2 * q * k, r));
        op.accumulate(k + p, k, t_pow(-p * q - 2 * q * k, r));
    }
    return op;
}

/// (p,q)_T S_{k-1} = (-1)^q t^{-pq} (t^{2qk} S_{k-p-1} + t^{-2qk} S_{k+p-1}),
/// with S_{k-1} in basis slot k.
inline ExactOperator kauffman_operator(long long p, long long q, int r) {
    ExactOperator op = ExactOperator::zero(r);
    const CyclotomicElement::coeff_type parity = (q % 2 == 0) ? 1 : -1;
    for (int k = 1; k <= r - 1; ++k) {
        // S_{k-p-1} sits in slot (k-p-1) + 1
        op.accumulate((k - p - 1) + 1, k, CyclotomicElement::monomial(-p * q + 2 * q * k, r, parity));
        op.accumulate((k + p - 1) + 1, k, CyclotomicElement::monomial(-p * q - 2 * q * k, r, parity));
    }
    return op;
}

/// S_n(p', q') for a primitive direction (p', q') and color n >= 0:
/// S_0 = 0, S_1 = Id, S_{m+1} = C(m p', m q') + S_{m-1}.
inline ExactOperator colored_wilson_operator(long long n, long long p_prime, long long q_prime, int r) {
    if (n < 0) {
        throw std::invalid_argument("color must be non-negative");
    }
    ExactOperator prev = ExactOperator::zero(r);
    if (n == 0) {
        return prev;
    }
    ExactOperator cur = ExactOperator::identity(r);
    for (long long m = 1; m < n; ++m) {
        ExactOperator next = cosine_operator(m * p_prime, m * q_prime, r) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Primitive direction and multiplicity: n = gcd(p, q) > 0, p = n p', q = n q'.
struct Direction {
    long long n = 0;
    long long p_prime = 0;
    long long q_prime = 0;
};

inline Direction split_direction(long long p, long long q) {
    if (p == 0 && q == 0) {
        throw std::invalid_argument("(p, q) = (0, 0) has no slope");
    }
    const long long n = std::gcd(p, q);
    return {n, p / n, q / n};
}

/// Operator quantizing sin(2 pi n (p'x + q'y)) / sin(2 pi (p'x + q'y)).
inline ExactOperator sine_operator(long long p, long long q, int r) {
    require_level(r);
    const Direction d = split_direction(p, q);
    return colored_wilson_operator(d.n, d.p_prime, d.q_prime, r);
}

inline long long determinant(long long m, long long n, long long p, long long q) { return m * q - n * p; }

/// C(m,n) C(p,q) == t^D C(m+p,n+q) + t^-D C(m-p,n-q), exactly.
template <class OperatorFn>
bool product_to_sum_holds(OperatorFn&& op, long long m, long long n, long long p, long long q, int r) {
    const long long d = determinant(m, n, p, q);
    const ExactOperator lhs = op(m, n, r) * op(p, q, r);
    const ExactOperator rhs = t_pow(d, r) * op(m + p, n + q, r) + t_pow(-d, r) * op(m - p, n - q, r);
    return lhs == rhs;
}

inline bool verify_product_to_sum(long long m, long long n, long long p, long long q, int r) {
    return product_to_sum_holds(cosine_operator, m, n, p, q, r);
}

enum class OperatorKind { cosine, sine, kauffman };

inline std::optional<OperatorKind> parse_operator_kind(const std::string& s) {
    if (s == "cosine") return OperatorKind::cosine;
    if (s == "sine") return OperatorKind::sine;
    if (s == "kauffman") return OperatorKind::kauffman;
    return std::nullopt;
}

inline ExactOperator make_operator(OperatorKind kind, long long p, long long q, int r) {
    switch (kind) {
        case OperatorKind::cosine: return cosine_operator(p, q, r);
        case OperatorKind::sine: return sine_operator(p, q, r);
        case OperatorKind::kauffman: return kauffman_operator(p, q, r);
    }
    throw std::logic_error("unknown operator kind");
}

inline constexpr const char* kExactBasisTag = "zeta_ascending";

inline void to_json(nlohmann::json& j, const ExactOperator& op) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < op.dim(); ++c) {
            const auto coeffs = op.entries()(i, c).coeffs();
            row.push_back(std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
        }
        rows.push_back(std::move(row));
    }
    j = nlohmann::json{{"r", op.level()}, {"basis", kExactBasisTag}, {"exact", std::move(rows)}};
}

inline void from_json(const nlohmann::json& j, ExactOperator& op) {
    const int r = j.at("r").get<int>();
    if (j.at("basis").get<std::string>() != kExactBasisTag) {
        throw std::invalid_argument("unexpected basis tag for exact operator");
    }
    const auto& rows = j.at("exact");
    const auto dim = static_cast<std::size_t>(r - 1);
    if (rows.size() != dim) {
        throw std::invalid_argument("exact operator has wrong number of rows");
    }
    CycloMatrix m(dim, dim, CyclotomicElement::zero(r));
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) {
            throw std::invalid_argument("exact operator has wrong number of columns");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m(i, c) = CyclotomicElement(r, rows[i][c].get<std::vector<std::int64_t>>());
        }
    }
    op = ExactOperator(r, std::move(m));
}

}  // namespace moduli
