#pragma once

#include "widths/geometry.hpp"
#include "widths/int_polynomial.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace widths {

/// Upper bound of the exhaustive 2^n scans.
inline constexpr int kMaxEnumerationN = 24;

using Signs = std::vector<int>;

/// Vector c in {-1, +1}^n (n >= 2) with sum_j c_j exp(i j pi / n) = 0,
/// i.e. a member of P(n). Membership is verified exactly on construction.
class SignVector {
public:
    /// Throws Error{BadLength} for n < 2, Error{BadParameter} for entries other
    /// than +-1 and Error{NotInP} when the sum does not vanish.
    explicit SignVector(Signs signs);

    int n() const noexcept { return static_cast<int>(signs_.size()); }
    const Signs& signs() const noexcept { return signs_; }
    int operator[](std::size_t i) const { return signs_[i]; }

    /// Lexicographic with +1 ordered before -1.
    friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);
    friend bool operator==(const SignVector& a, const SignVector& b) = default;

    std::string to_string() const;

private:
    struct Trusted {};
    SignVector(Signs signs, Trusted) : signs_(std::move(signs)) {}

    friend std::vector<SignVector> enumerate_P(int n, int threads);
    friend SignVector canonicalize(const SignVector& v);

    Signs signs_;
};

/// Lexicographic comparison of raw sign lists with +1 < -1.
std::strong_ordering compare_signs(std::span<const int> a, std::span<const int> b);

/// sigma(c_0, ..., c_{n-1}) = (c_1, ..., c_{n-1}, -c_0): rotation by pi / n.
Signs sigma(std::span<const int> c);
/// tau(c_0, ..., c_{n-1}) = (c_{n-1}, ..., c_0): reflection.
Signs tau(std::span<const int> c);

/// sum_j c_j z^j
IntPolynomial sign_polynomial(std::span<const int> signs);

/// Exact test: Phi_{2n} divides sum_j c_j z^j. Throws Error{BadLength} for
/// n < 2 and Error{BadParameter} for entries other than +-1.
bool is_in_P(std::span<const int> signs);

/// Every member of P(n) in lexicographic order (+1 < -1). `threads` <= 0 uses
/// the hardware concurrency. Throws Error{TooLarge} for n > 24 and
/// Error{BadLength} for n < 2.
std::vector<SignVector> enumerate_P(int n, int threads = 0);

/// Q(p) = { c : c_{k(n/p) + l} = c_l (-1)^k }, 2^{n/p} members, l-part
/// enumerated in lexicographic order. Throws Error{BadParameter} unless p is
/// odd, p > 1 and p divides n.
std::vector<SignVector> q_subset(int n, int p);

/// Lexicographically smallest element of {sigma^j v, sigma^j tau v : j < 2n}.
SignVector canonicalize(const SignVector& v);

/// Run lengths (n_1, ..., n_p) of a sign pattern.
///
/// Compares equal to any rotation of itself; `canonical()` is the
/// lexicographically minimal rotation.
class CyclicVector {
public:
    /// Throws Error{BadParameter} for an empty list or a non-positive run.
    explicit CyclicVector(std::vector<int> runs);

    const std::vector<int>& runs() const noexcept { return runs_; }
    int n() const noexcept;
    int parts() const noexcept { return static_cast<int>(runs_.size()); }
    std::vector<int> canonical() const;

    friend bool operator==(const CyclicVector& a, const CyclicVector& b) { return a.canonical() == b.canonical(); }

    /// "(2,2,2)"
    std::string to_string() const;

private:
    std::vector<int> runs_;
};

/// Rotates v by sigma until d_0 = d_{n-1}, then counts runs.
/// Throws Error{NoValidRotation} if no rotation qualifies.
CyclicVector to_cyclic_vector(std::span<const int> signs);
inline CyclicVector to_cyclic_vector(const SignVector& v) { return to_cyclic_vector(v.signs()); }

/// Inverse of to_cyclic_vector up to sigma: emits 1^{n_1} (-1)^{n_2} ...
/// (the phase starting with +1 runs).
Signs from_cyclic_vector(const CyclicVector& c);

/// 1 - z^{n_1} + z^{n_1 + n_2} - ... + z^{n_1 + ... + n_{p-1}}
IntPolynomial alternating_polynomial(const CyclicVector& c);

/// p odd and Phi_{2n} divides the alternating polynomial.
bool reinhardt_criterion(const CyclicVector& c);

/// Equilateral n-gon with edges c_j exp(i j pi / n) * edge_length sorted by
/// argument, recentered at the vertex centroid. Throws Error{BadParameter}
/// for edge_length <= 0.
ConvexPolygon realize(const SignVector& v, double edge_length = 1.0);

struct ReinhardtClass {
    SignVector representative; // canonical form
    CyclicVector cyclic;       // stored as its canonical rotation
};

/// Dihedral classes of P(n) sorted by canonical representative; empty iff n
/// is a power of 2. Throws Error{TooLarge} for n > 24.
std::vector<ReinhardtClass> enumerate_reinhardt(int n, int threads = 0);

} // namespace widths
