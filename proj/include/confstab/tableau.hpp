#pragma once

#include "confstab/partition.hpp"
#include "confstab/permutation.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace confstab {

using Rows = std::vector<std::vector<int>>;

// Injective labelling of a Young diagram by labels from {1..ambient}.
class PseudoTableau {
public:
    PseudoTableau() = default;
    PseudoTableau(int ambient, Rows rows);

    // "7,2,1;5,3;4".  Ambient defaults to the largest label.
    static PseudoTableau parse(const std::string& text, int ambient = 0);

    int ambient() const { return ambient_; }
    const Rows& rows() const { return rows_; }
    Partition shape() const;
    std::vector<int> support() const;  // sorted
    Rows columns() const;
    int at(int row, int col) const { return rows_[row][col]; }

    PseudoTableau with_ambient(int ambient) const;
    std::string str() const;

    friend bool operator==(const PseudoTableau&, const PseudoTableau&) = default;
    friend auto operator<=>(const PseudoTableau&, const PseudoTableau&) = default;

private:
    int ambient_ = 0;
    Rows rows_;
};

// Rows sorted ascending.  Ordered by ambient, then rows lexicographically.
class PseudoTabloid {
public:
    PseudoTabloid() = default;
    PseudoTabloid(int ambient, Rows rows);
    explicit PseudoTabloid(const PseudoTableau& t);

    int ambient() const { return ambient_; }
    const Rows& rows() const { return rows_; }
    Partition shape() const;
    std::vector<int> support() const;
    PseudoTabloid with_ambient(int ambient) const;
    std::string str() const;

    friend bool operator==(const PseudoTabloid&, const PseudoTabloid&) = default;
    friend auto operator<=>(const PseudoTabloid&, const PseudoTabloid&) = default;

private:
    int ambient_ = 0;
    Rows rows_;
};

struct TabloidHash {
    std::size_t operator()(const PseudoTabloid& t) const;
};

// sigma may have degree at most the ambient size; extra points are fixed.
PseudoTableau act(const Permutation& sigma, const PseudoTableau& t);
PseudoTabloid act(const Permutation& sigma, const PseudoTabloid& t);

class ColumnStabilizer {
public:
    explicit ColumnStabilizer(const PseudoTableau& t);
    long order() const;
    // f(q, sign) for every q in ColStab(t), identity first.
    void for_each(const std::function<void(const Permutation&, int)>& f) const;
    // f(qT, sign); cheaper when only the moved tableau is needed.
    void for_each_image(const std::function<void(const PseudoTableau&, int)>& f) const;

private:
    PseudoTableau t_;
};

// Remove the boxes of shape(full)/lambda.  Rejects if they are not a horizontal strip.
PseudoTableau strip(const PseudoTableau& full, const Partition& lambda);

// Every pseudo-tabloid of the shape with labels in {1..ambient}, sorted.
std::vector<PseudoTabloid> all_pseudo_tabloids(const Partition& shape, int ambient);
std::vector<PseudoTableau> all_pseudo_tableaux(const Partition& shape, int ambient);
// Fill columns top to bottom, left to right, with the sorted support.
PseudoTableau column_filling(const Partition& shape, const std::vector<int>& support, int ambient);

}  // namespace confstab
