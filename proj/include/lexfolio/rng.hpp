#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace lexfolio {

// Deterministic random source. The samplers are implemented here rather than
// taken from <random> distributions because the standard leaves distribution
// algorithms implementation-defined, and experiment reports must be
// byte-reproducible for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe to pass to log().
    double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double normal();

    // Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape must be > 0.
    double gamma(double shape);

private:
    std::mt19937_64 engine_;
};

// Mixes a root seed with a textual tag and integer parts into an independent
// stream seed. Used to split per-portfolio / per-window RNG streams so results
// do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::initializer_list<std::uint64_t> parts = {});

} // namespace lexfolio
