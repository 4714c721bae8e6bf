#pragma once

#include "confstab/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace confstab {

// A permutation of {1..n}.  Labels are 1-based at the interface.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);
    // images[i-1] = sigma(i)
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int n, int a, int b);
    // Product of consecutive cycles with lengths from rho.
    static Permutation from_cycle_type(const Partition& rho);
    // Cycles written as "(1 2 3)(4 5)" or "1 2 3,4 5".
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int label) const {
        return label <= degree() ? img_[label - 1] : label;
    }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    // (a * b)(x) = a(b(x)).  Degrees may differ; the shorter one is extended.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    // Extend to {1..m}, fixing the new points.
    Permutation extended(int m) const;

    int sign() const;
    Partition cycle_type() const;
    bool is_identity() const;
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> img_;
};

// All of S_n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

}  // namespace confstab
