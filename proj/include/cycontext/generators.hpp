#pragma once

#include <cstdint>
#include <string>

#include "cycontext/system.hpp"

namespace cycontext {

// splitmix64: fixed 64-bit generator, identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();

    // Uniform-ish draw in [0, bound]; bound + 1 must not be zero.
    std::uint64_t next_upto(std::uint64_t bound) { return next() % (bound + 1); }

  private:
    std::uint64_t state_;
};

// Independent deterministic stream for (seed, tag, index): reseeding by
// index keeps earlier draws stable when more contexts or trials are added.
SplitMix64 substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

inline constexpr std::uint64_t kStreamBunch = 1;
inline constexpr std::uint64_t kStreamMarginal = 2;
inline constexpr std::uint64_t kStreamFrechet = 3;
inline constexpr std::uint64_t kStreamTrial = 4;

struct GeneratorSpec {
    int rank = 0;
    std::uint64_t seed = 0;
    std::uint64_t denominator_bound = 16;  // probabilities drawn as k/denominator_bound
};

// example1 | example2 | pr-box | uniform-independent-N (N a rank ≥ 2).
CyclicSystem preset(const std::string& name);

// Each bunch independently uniform on the lattice distributions with
// denominator denominator_bound (three sorted cuts of [0, bound]).
// Generically inconsistently connected.
CyclicSystem random_system(const GeneratorSpec& spec);

// Draws one marginal per content, then each bunch uniformly from the integer
// couplings with those two marginals. Always consistently connected.
CyclicSystem random_consistent_system(const GeneratorSpec& spec);

}  // namespace cycontext
