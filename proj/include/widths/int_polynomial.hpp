#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace widths {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial over the integers, coefficients in ascending degree.
/// The stored coefficient list never has a trailing zero; the zero polynomial
/// is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    /// coefficient * z^degree
    static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    /// The divisor's leading coefficient must divide every intermediate leading
    /// coefficient (always true for monic divisors); otherwise throws
    /// Error{BadParameter}, as does division by zero.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const;

    bool divisible_by(const IntPolynomial& divisor) const { return divmod(divisor).second.is_zero(); }

    /// e.g. "z^2 - z + 1"
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// The m-th cyclotomic polynomial, built as (z^m - 1) / prod_{d | m, d < m} Phi_d
/// by exact division. Throws Error{BadParameter} for m < 1.
IntPolynomial cyclotomic(int m);

} // namespace widths
