#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

// Project-wide pseudo-random generator: xoshiro256++ seeded through
// splitmix64, standard normals via the basic Box-Muller transform. The
// algorithm is fixed so that every seeded fixture is reproducible from the
// seed alone, independent of platform or standard library.

namespace iblab {

/// splitmix64 step; also used to derive child-stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent child stream for (seed, stream_index); deterministic.
    static Rng child(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    /// Uniform on [0, 1): 53 high bits of next_u64.
    double uniform();

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos();

    /// Standard normal via Box-Muller; generates in pairs, caches the spare.
    double normal();

    /// Fills out[0..n) with standard normals.
    void fill_normal(double* out, std::size_t n);
    std::vector<double> normal_vector(std::size_t n);

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace iblab
