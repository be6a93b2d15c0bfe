#include "permcover/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace permcover {

namespace {

void check_size(int n, const char* who) {
    if (n < kMinN || n > kMaxN)
        throw std::invalid_argument(std::string(who) + ": n must be in [" +
                                    std::to_string(kMinN) + ", " + std::to_string(kMaxN) +
                                    "], got " + std::to_string(n));
}

}  // namespace

OrderedPair::OrderedPair(int a, int b) : first(a), second(b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("OrderedPair: indices must be >= 1");
    if (a == b)
        throw std::invalid_argument("OrderedPair: indices must be distinct");
}

std::string to_string(const OrderedPair& pair) {
    return "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    check_size(static_cast<int>(image_.size()), "Permutation");
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: image is not a bijection of [n]");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

int Permutation::operator()(int k) const {
    if (k < 1 || k > size())
        throw std::out_of_range("Permutation: position " + std::to_string(k) +
                                " outside [1, " + std::to_string(size()) + "]");
    return image_[static_cast<std::size_t>(k - 1)];
}

int Permutation::position_of(int v) const {
    if (v < 1 || v > size())
        throw std::out_of_range("Permutation: value " + std::to_string(v) +
                                " outside [1, " + std::to_string(size()) + "]");
    for (int k = 1; k <= size(); ++k)
        if (image_[static_cast<std::size_t>(k - 1)] == v) return k;
    throw std::logic_error("Permutation: corrupt image");
}

Permutation identity(int n) {
    check_size(n, "identity");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = k;
    return Permutation(std::move(image));
}

Permutation reverse(int n) {
    check_size(n, "reverse");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = n + 1 - k;
    return Permutation(std::move(image));
}

Permutation circular_shift(int n) {
    check_size(n, "circular_shift");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = (k % n) + 1;
    return Permutation(std::move(image));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("compose: size mismatch (" + std::to_string(outer.size()) +
                                    " vs " + std::to_string(inner.size()) + ")");
    const int n = outer.size();
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = outer(inner(k));
    return Permutation(std::move(image));
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(p(k) - 1)] = k;
    return Permutation(std::move(image));
}

bool covers(const Permutation& p, const OrderedPair& pair) {
    if (pair.first > p.size() || pair.second > p.size())
        throw std::out_of_range("covers: pair " + to_string(pair) + " outside [1, " +
                                std::to_string(p.size()) + "]");
    return p.position_of(pair.first) < p.position_of(pair.second);
}

std::string to_string(const Permutation& p) {
    std::string out;
    if (p.size() <= 9) {
        for (int v : p.image()) out += static_cast<char>('0' + v);
    } else {
        for (int k = 0; k < p.size(); ++k) {
            if (k > 0) out += ' ';
            out += std::to_string(p.image()[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

}  // namespace permcover
