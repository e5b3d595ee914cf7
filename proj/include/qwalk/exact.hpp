#pragma once

// Exact integer and rational linear algebra on top of GMP. Used wherever a
// claim is exact (ranks, coprimality, Gram equality, quotient identities).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <class T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = ExactMatrix<BigInt>;
using RationalMatrix = ExactMatrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const IntMatrix& m);

/// Determinant by Bareiss elimination. Square input only.
BigInt determinant_exact(const IntMatrix& m);

/// Inverse by Gauss-Jordan over the rationals, pivoting on the first nonzero
/// entry of each column. Empty when singular.
std::optional<RationalMatrix> inverse_exact(const RationalMatrix& m);

/// Polynomial with integer coefficients, lowest degree first. The zero
/// polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return int(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    const BigInt& coeff(std::size_t k) const { return c_.at(k); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    BigInt evaluate(const BigInt& x) const;
    Rational evaluate(const Rational& x) const;
    long double evaluate(long double x) const;
    /// Sum of |c_k| |x|^k, the natural scale for a residual at x.
    long double magnitude(long double x) const;

    /// With z = (a + b sqrt(d)) / 2 returns (p, q) such that
    /// 2^deg * p(z) = p + q sqrt(d). p(z) = 0 iff both vanish (d not a square).
    std::pair<BigInt, BigInt> evaluate_quadratic(const BigInt& a, const BigInt& b,
                                                 const BigInt& d) const;

    /// Coefficients as decimal strings, lowest degree first.
    std::vector<std::string> to_strings() const;
    std::string to_string(char var = 't') const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Primitive gcd with positive leading coefficient (computed over Q, then
/// cleared of denominators and content). gcd(0, 0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Square-free part of a positive integer (product of primes with odd exponent).
BigInt square_free_part(const BigInt& m);

}  // namespace qwalk
