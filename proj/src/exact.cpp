#include "qwalk/exact.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    return out;
}

namespace {

// In-place Bareiss elimination with row pivoting. Returns the rank; when the
// matrix is square and nonsingular also sets `det`.
std::size_t bareiss(IntMatrix& a, BigInt* det) {
    const std::size_t rows = a.rows(), cols = a.cols();
    BigInt prev = 1;
    std::size_t rank = 0;
    int sign = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(piv, c), a(rank, c));
            sign = -sign;
        }
        const BigInt p = a(rank, col);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt f = a(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt v = p * a(r, c) - f * a(rank, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(r, c) = std::move(v);
            }
            a(r, col) = 0;
        }
        prev = p;
        ++rank;
    }
    if (det) {
        if (rows == cols && rank == rows)
            *det = sign * a(rows - 1, cols - 1);
        else
            *det = 0;
    }
    return rank;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& m) {
    IntMatrix a = m;
    return bareiss(a, nullptr);
}

BigInt determinant_exact(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix a = m;
    BigInt det;
    bareiss(a, &det);
    return det;
}

std::optional<RationalMatrix> inverse_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        const Rational p = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

long double IntPoly::evaluate(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + (long double)it->get_d();
    return acc;
}

long double IntPoly::magnitude(long double x) const {
    long double acc = 0;
    const long double ax = std::fabs(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * ax + std::fabs((long double)it->get_d());
    return acc;
}

std::pair<BigInt, BigInt> IntPoly::evaluate_quadratic(const BigInt& a, const BigInt& b,
                                                      const BigInt& d) const {
    if (c_.empty()) return {0, 0};
    // G_k = G_{k+1} * (a + b sqrt d) + c_k 2^(n-k), G_n = c_n, G_0 = 2^n p(z).
    const std::size_t n = c_.size() - 1;
    BigInt x = c_[n], y = 0;
    for (std::size_t k = n; k-- > 0;) {
        BigInt scale;
        mpz_mul_2exp(scale.get_mpz_t(), c_[k].get_mpz_t(), n - k);
        BigInt nx = x * a + y * b * d + scale;
        BigInt ny = x * b + y * a;
        x = std::move(nx);
        y = std::move(ny);
    }
    return {x, y};
}

std::vector<std::string> IntPoly::to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

std::string IntPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const BigInt& c = c_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly remainder(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    QPoly x(a.coeffs().begin(), a.coeffs().end()), y(b.coeffs().begin(), b.coeffs().end());
    while (!y.empty()) {
        QPoly r = remainder(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return {};
    // Clear denominators, then divide out the content.
    BigInt l = 1;
    for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> z;
    BigInt content = 0;
    for (const auto& q : x) {
        BigInt v = q.get_num() * (l / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return IntPoly(std::move(z));
}

BigInt square_free_part(const BigInt& m) {
    if (m <= 0) throw InvalidArgument("square-free part of a non-positive integer");
    BigInt rest = m, out = 1;
    for (BigInt p = 2; p * p <= rest; ++p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return out * rest;
}

}  // namespace qwalk
