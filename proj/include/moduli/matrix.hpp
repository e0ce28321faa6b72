#pragma once

// Small dense row-major matrix over an arbitrary ring element type.
// Element types without a natural default (CyclotomicElement needs its level)
// are handled by always constructing from an explicit fill value.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moduli {

template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = one;
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T& at(std::size_t i, std::size_t j) {
        bounds(i, j);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        bounds(i, j);
        return data_[i * cols_ + j];
    }

    Matrix& operator+=(const Matrix& other) {
        same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += other.data_[k];
        }
        return *this;
    }

    Matrix& operator-=(const Matrix& other) {
        same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] -= other.data_[k];
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product shape mismatch");
        }
        if (a.data_.empty() || b.data_.empty()) {
            return Matrix(a.rows_, b.cols_, T{});
        }
        const T zero = a.data_.front() - a.data_.front();
        Matrix out(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_value(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (is_zero_value(bkj)) {
                        continue;
                    }
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    /// Left scalar multiplication.
    template <class S>
    [[nodiscard]] Matrix scaled(const S& s) const {
        Matrix out = *this;
        for (auto& v : out.data_) {
            v = s * v;
        }
        return out;
    }

    template <class F>
    [[nodiscard]] auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        if (data_.empty()) {
            return Matrix<U>(rows_, cols_, U{});
        }
        Matrix<U> out(rows_, cols_, f(data_.front()));
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(i, j) = f((*this)(i, j));
            }
        }
        return out;
    }

    [[nodiscard]] Matrix transposed() const {
        if (data_.empty()) {
            return Matrix(cols_, rows_, T{});
        }
        Matrix out(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static bool is_zero_value(const T& v) {
        if constexpr (requires { v.is_zero(); }) {
            return v.is_zero();
        } else {
            return v == T{};
        }
    }

    void bounds(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) {
            throw std::out_of_range("matrix index out of range");
        }
    }

    void same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw std::invalid_argument("matrix shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Integer power by repeated squaring; `one` supplies the identity.
template <class T>
Matrix<T> matrix_power(Matrix<T> base, unsigned long long e, const Matrix<T>& one) {
    Matrix<T> result = one;
    while (e > 0) {
        if (e & 1ULL) {
            result = result * base;
        }
        e >>= 1ULL;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace moduli
