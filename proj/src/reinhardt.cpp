#include "widths/reinhardt.hpp"

#include "widths/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <thread>

namespace widths {

namespace {

void check_signs(std::span<const int> signs) {
    if (signs.size() < 2) {
        throw Error(ErrorKind::BadLength, "sign vectors need n >= 2");
    }
    for (int c : signs) {
        if (c != 1 && c != -1) {
            throw Error(ErrorKind::BadParameter, "sign entries must be +1 or -1");
        }
    }
}

void check_enumeration_bound(int n) {
    if (n < 2) {
        throw Error(ErrorKind::BadLength, "enumeration needs n >= 2");
    }
    if (n > kMaxEnumerationN) {
        throw Error(ErrorKind::TooLarge, "exhaustive scan limited to n <= 24");
    }
}

// +1 sorts before -1.
int sign_rank(int c) { return c == 1 ? 0 : 1; }

// Residues of z^j modulo Phi_{2n} for j < n as small machine integers.
std::vector<std::vector<std::int64_t>> residue_table(int n) {
    const IntPolynomial phi = cyclotomic(2 * n);
    const auto d = static_cast<std::size_t>(phi.degree());
    std::vector<std::vector<std::int64_t>> table;
    for (int j = 0; j < n; ++j) {
        const IntPolynomial r = IntPolynomial::monomial(static_cast<std::size_t>(j)).divmod(phi).second;
        std::vector<std::int64_t> row(d, 0);
        for (std::size_t k = 0; k < d; ++k) {
            row[k] = r.coefficient(k).convert_to<std::int64_t>();
        }
        table.push_back(std::move(row));
    }
    return table;
}

class Scanner {
public:
    explicit Scanner(int n)
        : n_(n), residues_(residue_table(n)), dim_(residues_.front().size()) {
        for (int j = 0; j < n; ++j) {
            roots_.push_back(std::polar(1.0, kPi * j / n));
        }
    }

    // Appends every member of P(n) that starts with `prefix`, in lex order.
    void scan(const Signs& prefix, std::vector<Signs>& out) const {
        Signs current(static_cast<std::size_t>(n_));
        std::vector<std::int64_t> acc(dim_, 0);
        PlanarVector partial{};
        for (std::size_t j = 0; j < prefix.size(); ++j) {
            current[j] = prefix[j];
            add(acc, j, prefix[j]);
            partial += static_cast<double>(prefix[j]) * roots_[j];
        }
        descend(prefix.size(), current, acc, partial, out);
    }

private:
    void add(std::vector<std::int64_t>& acc, std::size_t j, int c) const {
        const auto& row = residues_[j];
        for (std::size_t k = 0; k < dim_; ++k) {
            acc[k] += c * row[k];
        }
    }

    void descend(std::size_t j, Signs& current, std::vector<std::int64_t>& acc, PlanarVector partial,
                 std::vector<Signs>& out) const {
        const auto n = static_cast<std::size_t>(n_);
        // The remaining n - j unit terms cannot cancel a larger partial sum.
        if (std::abs(partial) > static_cast<double>(n - j) + 1e-9) {
            return;
        }
        if (j == n) {
            if (std::all_of(acc.begin(), acc.end(), [](std::int64_t a) { return a == 0; })) {
                out.push_back(current);
            }
            return;
        }
        for (int c : {1, -1}) {
            current[j] = c;
            add(acc, j, c);
            descend(j + 1, current, acc, partial + static_cast<double>(c) * roots_[j], out);
            add(acc, j, -c);
        }
    }

    int n_;
    std::vector<std::vector<std::int64_t>> residues_;
    std::size_t dim_;
    std::vector<PlanarVector> roots_;
};

} // namespace

std::strong_ordering compare_signs(std::span<const int> a, std::span<const int> b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end(),
                                                  [](int x, int y) { return sign_rank(x) <=> sign_rank(y); });
}

SignVector::SignVector(Signs signs) : signs_(std::move(signs)) {
    if (!is_in_P(signs_)) {
        throw Error(ErrorKind::NotInP, to_string() + " is not in P(" + std::to_string(signs_.size()) + ")");
    }
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) { return compare_signs(a.signs_, b.signs_); }

std::string SignVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        os << (i ? "," : "") << signs_[i];
    }
    os << ")";
    return os.str();
}

Signs sigma(std::span<const int> c) {
    Signs out(c.begin() + 1, c.end());
    out.push_back(-c.front());
    return out;
}

Signs tau(std::span<const int> c) { return Signs(c.rbegin(), c.rend()); }

IntPolynomial sign_polynomial(std::span<const int> signs) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(signs.size());
    for (int c : signs) {
        coeffs.emplace_back(c);
    }
    return IntPolynomial(std::move(coeffs));
}

bool is_in_P(std::span<const int> signs) {
    check_signs(signs);
    const int n = static_cast<int>(signs.size());
    return sign_polynomial(signs).divisible_by(cyclotomic(2 * n));
}

std::vector<SignVector> enumerate_P(int n, int threads) {
    check_enumeration_bound(n);
    if (threads <= 0) {
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    const Scanner scanner(n);

    // Fixed prefixes partition the search space; concatenating per-prefix
    // results in prefix order preserves the lexicographic order.
    int prefix_len = 0;
    while (prefix_len < n - 1 && (1 << prefix_len) < 4 * threads) {
        ++prefix_len;
    }
    const int tasks = 1 << prefix_len;
    std::vector<std::vector<Signs>> buckets(static_cast<std::size_t>(tasks));
    auto run_task = [&](int t) {
        Signs prefix(static_cast<std::size_t>(prefix_len));
        for (int j = 0; j < prefix_len; ++j) {
            prefix[static_cast<std::size_t>(j)] = ((t >> (prefix_len - 1 - j)) & 1) ? -1 : 1;
        }
        scanner.scan(prefix, buckets[static_cast<std::size_t>(t)]);
    };
    if (threads == 1) {
        for (int t = 0; t < tasks; ++t) {
            run_task(t);
        }
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int t = w; t < tasks; t += threads) {
                    run_task(t);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    std::vector<SignVector> out;
    for (auto& bucket : buckets) {
        for (auto& s : bucket) {
            out.push_back(SignVector(std::move(s), SignVector::Trusted{}));
        }
    }
    return out;
}

std::vector<SignVector> q_subset(int n, int p) {
    if (p <= 1 || p % 2 == 0 || n < 2 || n % p != 0) {
        throw Error(ErrorKind::BadParameter, "Q(p) needs an odd divisor p > 1 of n");
    }
    const int block = n / p;
    if (block > 30) {
        throw Error(ErrorKind::TooLarge, "Q(p) too large to list");
    }
    std::vector<SignVector> out;
    for (long mask = 0; mask < (1L << block); ++mask) {
        Signs c(static_cast<std::size_t>(n));
        for (int l = 0; l < block; ++l) {
            const int base = ((mask >> (block - 1 - l)) & 1) ? -1 : 1;
            for (int k = 0; k < p; ++k) {
                c[static_cast<std::size_t>(k * block + l)] = (k % 2 == 0) ? base : -base;
            }
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

SignVector canonicalize(const SignVector& v) {
    const int n = v.n();
    Signs best = v.signs();
    Signs rot = v.signs();
    Signs ref = tau(v.signs());
    for (int j = 0; j < 2 * n; ++j) {
        if (compare_signs(rot, best) < 0) {
            best = rot;
        }
        if (compare_signs(ref, best) < 0) {
            best = ref;
        }
        rot = sigma(rot);
        ref = sigma(ref);
    }
    return SignVector(std::move(best), SignVector::Trusted{});
}

CyclicVector::CyclicVector(std::vector<int> runs) : runs_(std::move(runs)) {
    if (runs_.empty()) {
        throw Error(ErrorKind::BadParameter, "cyclic vector needs at least one run");
    }
    for (int r : runs_) {
        if (r <= 0) {
            throw Error(ErrorKind::BadParameter, "run lengths must be positive");
        }
    }
}

int CyclicVector::n() const noexcept { return std::accumulate(runs_.begin(), runs_.end(), 0); }

std::vector<int> CyclicVector::canonical() const {
    std::vector<int> best = runs_;
    std::vector<int> rot = runs_;
    for (std::size_t k = 1; k < runs_.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) {
            best = rot;
        }
    }
    return best;
}

std::string CyclicVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        os << (i ? "," : "") << runs_[i];
    }
    os << ")";
    return os.str();
}

CyclicVector to_cyclic_vector(std::span<const int> signs) {
    check_signs(signs);
    const std::size_t n = signs.size();
    Signs d(signs.begin(), signs.end());
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (d.front() == d.back()) {
            std::vector<int> runs{1};
            for (std::size_t j = 1; j < n; ++j) {
                if (d[j] == d[j - 1]) {
                    ++runs.back();
                } else {
                    runs.push_back(1);
                }
            }
            return CyclicVector(std::move(runs));
        }
        d = sigma(d);
    }
    throw Error(ErrorKind::NoValidRotation, "no rotation with d_0 = d_{n-1}");
}

Signs from_cyclic_vector(const CyclicVector& c) {
    Signs out;
    int sign = 1;
    for (int r : c.runs()) {
        out.insert(out.end(), static_cast<std::size_t>(r), sign);
        sign = -sign;
    }
    return out;
}

IntPolynomial alternating_polynomial(const CyclicVector& c) {
    IntPolynomial poly;
    std::size_t offset = 0;
    int sign = 1;
    for (std::size_t k = 0; k < c.runs().size(); ++k) {
        poly += IntPolynomial::monomial(offset, sign);
        offset += static_cast<std::size_t>(c.runs()[k]);
        sign = -sign;
    }
    return poly;
}

bool reinhardt_criterion(const CyclicVector& c) {
    if (c.parts() % 2 == 0) {
        return false;
    }
    return alternating_polynomial(c).divisible_by(cyclotomic(2 * c.n()));
}

ConvexPolygon realize(const SignVector& v, double edge_length) {
    if (!(edge_length > 0.0) || !std::isfinite(edge_length)) {
        throw Error(ErrorKind::BadParameter, "edge length must be positive");
    }
    const int n = v.n();
    std::vector<PlanarVector> edges;
    for (int j = 0; j < n; ++j) {
        edges.push_back(static_cast<double>(v[static_cast<std::size_t>(j)]) * std::polar(edge_length, kPi * j / n));
    }
    std::sort(edges.begin(), edges.end(), [](PlanarVector a, PlanarVector b) { return arg(a) < arg(b); });
    const ConvexPolygon anchored = polygon_from_edges(edges);
    PlanarVector centroid{};
    for (const auto& p : anchored.vertices()) {
        centroid += p;
    }
    centroid /= static_cast<double>(anchored.size());
    std::vector<PlanarVector> shifted;
    for (const auto& p : anchored.vertices()) {
        shifted.push_back(p - centroid);
    }
    return make_polygon(std::move(shifted));
}

std::vector<ReinhardtClass> enumerate_reinhardt(int n, int threads) {
    check_enumeration_bound(n);
    std::vector<SignVector> reps;
    for (const auto& v : enumerate_P(n, threads)) {
        reps.push_back(canonicalize(v));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<ReinhardtClass> out;
    for (auto& rep : reps) {
        CyclicVector cyc(to_cyclic_vector(rep).canonical());
        out.push_back(ReinhardtClass{std::move(rep), std::move(cyc)});
    }
    return out;
}

} // namespace widths
