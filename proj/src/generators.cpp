#include "cycontext/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cycontext {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    SplitMix64 outer(seed);
    SplitMix64 tagged(outer.next() ^ (tag * 0x9E3779B97F4A7C15ull));
    return SplitMix64(tagged.next() ^ (index * 0xBF58476D1CE4E5B9ull));
}

namespace {

void validate(const GeneratorSpec& spec) {
    if (spec.rank < 2) throw std::invalid_argument("generator rank must be at least 2");
    if (spec.denominator_bound < 2) {
        throw std::invalid_argument("denominator bound must be at least 2");
    }
}

Rational frac(std::uint64_t num, std::uint64_t den) {
    return Rational(num) / Rational(den);
}

}  // namespace

CyclicSystem preset(const std::string& name) {
    if (name == "example1" || name == "example2") {
        std::vector<BunchDistribution> bunches(3, {frac(1, 8), frac(3, 8), frac(3, 8), frac(1, 8)});
        if (name == "example2") {
            bunches[2] = {frac(1, 8), frac(7, 16), frac(3, 8), frac(1, 16)};
        }
        return CyclicSystem(3, std::move(bunches));
    }
    if (name == "pr-box") {
        std::vector<BunchDistribution> bunches(
            3, {frac(1, 2), Rational(0), Rational(0), frac(1, 2)});
        bunches.push_back({Rational(0), frac(1, 2), frac(1, 2), Rational(0)});
        return CyclicSystem(4, std::move(bunches));
    }
    const std::string family = "uniform-independent-";
    if (name.rfind(family, 0) == 0) {
        const std::string suffix = name.substr(family.size());
        if (!suffix.empty() &&
            suffix.find_first_not_of("0123456789") == std::string::npos && suffix.size() <= 3) {
            int n = std::stoi(suffix);
            if (n >= 2) {
                return CyclicSystem(
                    n, std::vector<BunchDistribution>(
                           n, {frac(1, 4), frac(1, 4), frac(1, 4), frac(1, 4)}));
            }
        }
    }
    throw std::invalid_argument("unknown preset: " + name);
}

CyclicSystem random_system(const GeneratorSpec& spec) {
    validate(spec);
    const std::uint64_t d = spec.denominator_bound;
    std::vector<BunchDistribution> bunches;
    bunches.reserve(spec.rank);
    for (int i = 1; i <= spec.rank; ++i) {
        SplitMix64 gen = substream(spec.seed, kStreamBunch, static_cast<std::uint64_t>(i));
        std::array<std::uint64_t, 3> cuts{gen.next_upto(d), gen.next_upto(d), gen.next_upto(d)};
        std::sort(cuts.begin(), cuts.end());
        bunches.push_back({frac(cuts[0], d), frac(cuts[1] - cuts[0], d),
                           frac(cuts[2] - cuts[1], d), frac(d - cuts[2], d)});
    }
    return CyclicSystem(spec.rank, std::move(bunches));
}

CyclicSystem random_consistent_system(const GeneratorSpec& spec) {
    validate(spec);
    const std::uint64_t d = spec.denominator_bound;
    const int n = spec.rank;
    std::vector<std::uint64_t> marg(n + 1);
    for (int j = 1; j <= n; ++j) {
        marg[j] = substream(spec.seed, kStreamMarginal, static_cast<std::uint64_t>(j)).next_upto(d);
    }
    std::vector<BunchDistribution> bunches;
    bunches.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t a = marg[i];                    // first slot: content i
        const std::uint64_t b = marg[i == n ? 1 : i + 1];   // second slot: next content
        const std::uint64_t lo = a + b > d ? a + b - d : 0;
        const std::uint64_t hi = std::min(a, b);
        SplitMix64 gen = substream(spec.seed, kStreamFrechet, static_cast<std::uint64_t>(i));
        const std::uint64_t t = lo + gen.next_upto(hi - lo);
        bunches.push_back(
            {frac(d - a - b + t, d), frac(b - t, d), frac(a - t, d), frac(t, d)});
    }
    return CyclicSystem(n, std::move(bunches));
}

}  // namespace cycontext
