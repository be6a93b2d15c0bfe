#ifndef PERMCOVER_RNG_HPP
#define PERMCOVER_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace permcover {

// Seeded source of random draws. Built on std::mt19937_64, whose output
// stream is fully specified by the standard; bounded draws use rejection
// sampling instead of std::uniform_int_distribution (implementation
// defined), so identical seeds give identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi], inclusive.
    int in_range(int lo, int hi);

    bool coin() { return below(2) == 1; }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t k = v.size(); k > 1; --k)
            std::swap(v[k - 1], v[static_cast<std::size_t>(below(k))]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace permcover

#endif
