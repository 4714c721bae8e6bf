#pragma once

#include "confstab/partition.hpp"
#include "confstab/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace confstab {

constexpr int kMaxCharacterDegree = 16;

class NotACharacter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Values indexed by cycle type, in the order of partitions_of(n).
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(int n);

    static ClassFunction trivial(int n);
    static ClassFunction sign(int n);
    static ClassFunction irreducible(const Partition& lambda);

    int n() const { return n_; }
    std::size_t num_classes() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    Rational& operator[](std::size_t i) { return values_[i]; }
    const Rational& at(const Partition& rho) const;
    Rational& at(const Partition& rho);
    const Rational& degree() const;  // value at the identity

    bool is_zero() const;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const Rational& c);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
    // Pointwise product.
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) = default;

    // <chi, psi> = sum_rho chi(rho) psi(rho) / z_rho
    Rational inner(const ClassFunction& o) const;

private:
    int n_ = 0;
    std::vector<Rational> values_;
};

struct MultiplicityVector {
    int n = 0;
    // Only nonzero entries are stored, largest partition first.
    std::map<Partition, long, std::greater<>> counts;

    long operator[](const Partition& lambda) const;
    long dimension() const;
    bool empty() const { return counts.empty(); }
    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    std::string str() const;
};

MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b);

Integer centralizer_order(const Partition& rho);
Integer class_size(const Partition& rho);

// chi^lambda(rho) by Murnaghan-Nakayama.
long mn_character(const Partition& lambda, const Partition& rho);

class CharacterTable {
public:
    explicit CharacterTable(int n);
    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return partitions_of(n_); }
    long value(const Partition& lambda, const Partition& rho) const;
    long value(std::size_t irrep, std::size_t cls) const { return table_[irrep][cls]; }
    const ClassFunction& row(const Partition& lambda) const;
    const ClassFunction& row(std::size_t irrep) const { return rows_[irrep]; }

private:
    int n_;
    std::vector<std::vector<long>> table_;
    std::vector<ClassFunction> rows_;
};

// Cached and safe to call from several threads.
const CharacterTable& character_table(int n);

// Throws NotACharacter on negative or fractional multiplicities.
MultiplicityVector decompose(const ClassFunction& chi);
ClassFunction character_of(const MultiplicityVector& m);

// Character of Ind_{S_a x S_b}^{S_{a+b}} (chi1 x chi2).
ClassFunction induce_product(const ClassFunction& chi1, const ClassFunction& chi2);
// Ind_{S_k x S_{n-k}}^{S_n} (chi x trivial).
ClassFunction induced_character(const ClassFunction& chi, int n);
// Permutation character of S_n on cosets of S_{mu_1} x ... x S_{n-|mu|}.
ClassFunction young_permutation_character(const Partition& mu, int n);
// Restriction of chi to S_k (k <= n), as a class function of S_k.
ClassFunction restrict_character(const ClassFunction& chi, int k);

long young_invariants_dim(const Partition& lambda, const Partition& mu);
long count_partition_chains(const Partition& lambda, const Partition& mu, int n);

}  // namespace confstab
