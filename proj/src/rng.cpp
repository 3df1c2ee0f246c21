#include "lexfolio/rng.hpp"

#include "lexfolio/errors.hpp"

#include <cmath>

namespace lexfolio {

double Rng::normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) {
        throw InvalidAlpha("gamma shape must be positive");
    }
    if (shape < 1.0) {
        // Boost trick: Gamma(a) = Gamma(a+1) * U^(1/a).
        return gamma(shape + 1.0) * std::pow(uniform_pos(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::initializer_list<std::uint64_t> parts) {
    // FNV-1a over the tag and parts, then a splitmix64 finalizer.
    std::uint64_t h = 0xcbf29ce484222325ULL ^ root;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    for (std::uint64_t p : parts) {
        for (int i = 0; i < 8; ++i) {
            h ^= (p >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    }
    return splitmix64(h);
}

} // namespace lexfolio
