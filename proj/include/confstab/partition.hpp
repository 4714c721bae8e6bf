#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace confstab {

// Weakly decreasing positive parts. Constructors sort and drop zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    // Part i, or 0 past the end.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    // Column lengths (the conjugate partition).
    Partition conjugate() const;

    // "3,2,1"; the empty partition prints as "0".
    std::string str() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; for equal sizes (n) is the largest.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

// lambda[n] = (n-k, lambda_1, ..., lambda_l).
Partition pad(const Partition& lambda, int n);
// mu<n> = (mu_1+1, ..., mu_m+1, 1, ..., 1) with n-|mu| parts.
Partition angle_pad(const Partition& mu, int n);
// mu{n+1}: first part incremented.
Partition curly_pad(const Partition& mu);
// Inverse of pad: drop the first row.
Partition unpad(const Partition& nu);

bool is_horizontal_strip(const Partition& inner, const Partition& outer);
// All mu |- n obtained from lambda by adding a horizontal strip, largest first.
std::vector<Partition> leadsto(const Partition& lambda, int n);

// Throws std::invalid_argument when sizes differ.
std::strong_ordering lex_compare(const Partition& mu, const Partition& nu);

// Number of standard Young tableaux (hook length formula).
long dim_irrep(const Partition& lambda);

// All partitions of n in decreasing lexicographic order.
const std::vector<Partition>& partitions_of(int n);
// Position of rho inside partitions_of(|rho|).
std::size_t partition_index(const Partition& rho);

// All partitions with at most max_size boxes, by size then decreasing.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace confstab
