#include "widths/int_polynomial.hpp"

#include "widths/error.hpp"

#include <map>
#include <sstream>

namespace widths {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) {
        throw Error(ErrorKind::BadParameter, "polynomial division by zero");
    }
    std::vector<BigInt> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    if (rem.size() <= dd) {
        return {IntPolynomial{}, *this};
    }
    std::vector<BigInt> quot(rem.size() - dd);
    const BigInt& lead = divisor.leading();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k] == 0) {
            continue;
        }
        if (rem[k] % lead != 0) {
            throw Error(ErrorKind::BadParameter, "inexact integer polynomial division");
        }
        BigInt q = rem[k] / lead;
        for (std::size_t i = 0; i <= dd; ++i) {
            rem[k - dd + i] -= q * divisor.coeffs_[i];
        }
        quot[k - dd] = std::move(q);
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) {
            os << mag;
        }
        if (k >= 1) {
            os << "z";
        }
        if (k >= 2) {
            os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial cyclotomic(int m) {
    if (m < 1) {
        throw Error(ErrorKind::BadParameter, "cyclotomic index must be >= 1");
    }
    std::map<int, IntPolynomial> phi;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        IntPolynomial p = IntPolynomial::monomial(static_cast<std::size_t>(d)) - IntPolynomial{1};
        for (const auto& [e, phi_e] : phi) {
            if (d % e == 0) {
                auto [q, r] = p.divmod(phi_e);
                if (!r.is_zero()) {
                    throw Error(ErrorKind::BadParameter, "cyclotomic construction left a remainder");
                }
                p = std::move(q);
            }
        }
        phi.emplace(d, std::move(p));
    }
    return phi.at(m);
}

} // namespace widths
