#include "jflc/rng.hpp"

#include <cmath>

namespace jflc {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) : seed_key_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

Rng Rng::derive(std::uint64_t tag0, std::uint64_t tag1, std::uint64_t tag2) const {
    std::uint64_t x = seed_key_;
    std::uint64_t mixed = splitmix64(x);
    x ^= tag0 + 0x9e3779b97f4a7c15ULL;
    mixed ^= splitmix64(x);
    x ^= tag1 + 0xc2b2ae3d27d4eb4fULL;
    mixed ^= splitmix64(x);
    x ^= tag2 + 0x165667b19e3779f9ULL;
    mixed ^= splitmix64(x);
    return Rng(mixed);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int n) {
    if (n <= 0) fail_argument("uniform_int: n must be positive");
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<int>(v % un);
}

double Rng::normal() {
    // Box-Muller; uses two uniforms per draw, no cached spare.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = normal();
    return m;
}

Matrix Rng::uniform_matrix(int rows, int cols, double lo, double hi) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = uniform(lo, hi);
    return m;
}

Matrix Rng::dirichlet_columns(int rows, int cols) {
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        double sum = 0.0;
        for (int i = 0; i < rows; ++i) {
            double u = uniform();
            while (u <= 0.0) u = uniform();
            m(i, j) = -std::log(u);
            sum += m(i, j);
        }
        m.col(j) /= sum;
    }
    return m;
}

std::vector<int> Rng::permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
        const int k = uniform_int(i + 1);
        std::swap(p[i], p[k]);
    }
    return p;
}

} // namespace jflc
