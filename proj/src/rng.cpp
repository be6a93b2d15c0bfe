#include "permcover/rng.hpp"

#include <stdexcept>

namespace permcover {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // Rejection on the top partial bucket keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t raw;
    do {
        raw = engine_();
    } while (raw >= limit);
    return raw % bound;
}

int Rng::in_range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::in_range: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace permcover
