#pragma once

#include "confstab/characters.hpp"
#include "confstab/linalg.hpp"
#include "confstab/tableau.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace confstab {

// Direct sum of I_n(M^lambda) over a list of shapes: the span of all
// n-pseudo-tabloids of each shape.  S_n permutes the basis.
class TabloidModule {
public:
    struct Element {
        std::size_t summand;
        PseudoTabloid tabloid;
    };

    TabloidModule(std::vector<Partition> summands, int ambient);
    static std::shared_ptr<const TabloidModule> make(std::vector<Partition> summands, int ambient);

    int ambient() const { return ambient_; }
    const std::vector<Partition>& summands() const { return summands_; }
    std::size_t dim() const { return elems_.size(); }
    const Element& element(std::size_t i) const { return elems_[i]; }
    std::size_t offset(std::size_t summand) const { return offsets_[summand]; }
    // Throws std::out_of_range for foreign tabloids.
    std::size_t index_of(std::size_t summand, const PseudoTabloid& t) const;

    std::size_t act(const Permutation& sigma, std::size_t i) const;
    SparseVec act(const Permutation& sigma, const SparseVec& v) const;
    // Basis image table for sigma, cached for repeated use.
    const std::vector<std::uint32_t>& action_table(const Permutation& sigma) const;

    // Same summands one level up.
    std::shared_ptr<const TabloidModule> bumped() const;
    // iota: reinterpret in ambient n+1.
    SparseVec iota(const SparseVec& v, const TabloidModule& next) const;

    friend bool operator==(const TabloidModule& a, const TabloidModule& b) {
        return a.ambient_ == b.ambient_ && a.summands_ == b.summands_;
    }

private:
    std::vector<Partition> summands_;
    int ambient_;
    std::vector<Element> elems_;
    std::vector<std::size_t> offsets_;
    std::vector<std::unordered_map<PseudoTabloid, std::size_t, TabloidHash>> index_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<int>, std::vector<std::uint32_t>> tables_;
    mutable std::shared_ptr<const TabloidModule> bumped_;
};

using ModulePtr = std::shared_ptr<const TabloidModule>;

// Subspace of a TabloidModule.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(ModulePtr module);
    Subspace(ModulePtr module, const std::vector<SparseVec>& spanning);
    static Subspace whole(ModulePtr module);

    const ModulePtr& module() const { return module_; }
    const EchelonBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rank(); }
    int ambient() const { return module_->ambient(); }
    bool contains(const SparseVec& v) const { return basis_.contains(v); }
    bool contains(const Subspace& w) const { return basis_.contains(w.basis_); }
    bool insert(const SparseVec& v) { return basis_.insert(v); }

    Subspace operator+(const Subspace& o) const;

    // Trace of each class representative; assumes S_n-stability.
    ClassFunction character() const;
    MultiplicityVector decomposition() const { return decompose(character()); }

    // Image under the isotypic projector for nu |- n.
    Subspace isotypic(const Partition& nu) const;
    // Image under iota in the bumped module.
    Subspace iota() const;
    // S_{n}-span, given that the subspace is S_{n-1}-stable.
    Subspace symmetric_span_from_stable() const;
    // S_n-span by closing under adjacent transpositions.
    Subspace symmetric_closure() const;
    bool is_stable() const;

private:
    ModulePtr module_;
    EchelonBasis basis_;
};

// Multiplicities of V/W.
MultiplicityVector quotient_decomposition(const Subspace& v, const Subspace& w);

}  // namespace confstab
