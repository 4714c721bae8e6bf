#pragma once

#include "confstab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confstab {

// Sparse rational vector; entries sorted by index, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVec() = default;
    // Entries in any order; duplicates are summed.
    static SparseVec from_entries(std::vector<Entry> entries);
    static SparseVec unit(std::size_t i, const Rational& c = 1);

    const std::vector<Entry>& entries() const { return e_; }
    std::size_t nnz() const { return e_.size(); }
    bool is_zero() const { return e_.empty(); }
    Rational operator[](std::size_t i) const;
    const Rational* find(std::size_t i) const;
    std::size_t leading() const { return e_.front().first; }

    // this += c * v
    void axpy(const Rational& c, const SparseVec& v);
    SparseVec& operator*=(const Rational& c);
    friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
    friend SparseVec operator*(const Rational& c, SparseVec v) { return v *= c; }
    friend bool operator==(const SparseVec&, const SparseVec&) = default;

    // Scale to a primitive integer vector with positive leading entry.
    void make_primitive();
    std::string str() const;

private:
    std::vector<Entry> e_;
};

// Accumulates coefficients densely; cheap to convert back to sparse.
class DenseAccumulator {
public:
    explicit DenseAccumulator(std::size_t dim) : vals_(dim), touched_(dim, false) {}
    void add(std::size_t i, const Rational& c);
    SparseVec take();

private:
    std::vector<Rational> vals_;
    std::vector<bool> touched_;
    std::vector<std::size_t> idx_;
};

// Subspace of Q^dim kept in reduced row echelon form.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    std::size_t pivot(std::size_t r) const { return rows_[r].leading(); }

    // Returns true when v enlarged the span.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
    bool contains(const EchelonBasis& other) const;
    // Coefficients against rows(), if v lies in the span.
    std::optional<std::vector<Rational>> coordinates(const SparseVec& v) const;

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t row_of_pivot(std::size_t col) const;  // npos if none

    std::size_t dim_ = 0;
    std::vector<SparseVec> rows_;       // sorted by pivot
    std::vector<std::size_t> pivots_;   // same order as rows_
};

EchelonBasis span_of(std::size_t dim, const std::vector<SparseVec>& vecs);
std::size_t rank_of(std::size_t dim, const std::vector<SparseVec>& vecs);

// Kernel of the map e_j -> images[j] from Q^images.size() to Q^target_dim.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t target_dim);

}  // namespace confstab
