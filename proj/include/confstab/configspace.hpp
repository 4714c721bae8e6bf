#pragma once

#include "confstab/arnold.hpp"
#include "confstab/characters.hpp"
#include "confstab/linalg.hpp"
#include "confstab/manifold.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace confstab {

class NotComputable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class MissingDiagonal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Explicit basis cap; CONFSTAB_BUDGET overrides the default of 200000.
std::size_t desk_budget();

// Bidegree of the E2 page: p from H^*(M^n), k edges (q = k(d-1)).
struct Bidegree {
    int p;
    int k;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Character of S_n on E2^{p,q}; zero unless (d-1) divides q.
ClassFunction e2_character(const ManifoldDescriptor& M, int n, int p, int q);
// All nonzero cells, keyed by (p, k).
std::map<Bidegree, ClassFunction> e2_page(const ManifoldDescriptor& M, int n);

// A basis monomial of E2: an nbc forest with one class per tree, at its root.
// Encoded as 2n bytes: parent of each vertex (0 = root), then class + 1 (0 = none).
using E2Key = std::string;
using E2Combination = std::map<E2Key, Rational>;

struct E2Factor {
    int vertex;
    int cls;
};

// Multiplication, group action and differential on normal forms.
class E2Model {
public:
    E2Model(const ManifoldDescriptor& M, int n);

    const ManifoldDescriptor& manifold() const { return *M_; }
    int n() const { return n_; }
    int d() const { return M_->dim(); }

    static int parent(const E2Key& key, int v) { return static_cast<unsigned char>(key[v - 1]); }
    int cls(const E2Key& key, int v) const { return static_cast<unsigned char>(key[n_ + v - 1]) - 1; }
    Bidegree bidegree(const E2Key& key) const;
    ArnoldMonomial forest(const E2Key& key) const;
    std::string str(const E2Key& key) const;

    // c * p_{v1}^*x_1 ... p_{vr}^*x_r * G_{e1} ... G_{ek}, added to out in normal form.
    void normalize(const std::vector<E2Factor>& factors, const std::vector<Edge>& edges,
                   const Rational& c, E2Combination& out) const;
    void act(const Permutation& sigma, const E2Key& key, const Rational& c, E2Combination& out) const;
    void differential(const E2Key& key, const Rational& c, E2Combination& out) const;
    // Key of a forest with classes at the roots (cls indexed by vertex).
    E2Key make_key(const ArnoldMonomial& forest, const std::vector<int>& classes) const;
    std::vector<E2Factor> factors(const E2Key& key) const;

    // Every basis monomial, grouped by bidegree.
    std::map<Bidegree, std::vector<E2Key>> basis() const;

private:
    const ManifoldDescriptor* M_;
    int n_;
    Straightener straightener_;
};

// The whole E2 page with its differential, written out in a basis.
class E2Complex {
public:
    E2Complex(const ManifoldDescriptor& M, int n);

    const E2Model& model() const { return model_; }
    std::size_t dim() const { return total_; }
    const std::map<Bidegree, std::vector<E2Key>>& cells() const { return cells_; }
    std::size_t cell_dim(Bidegree b) const;
    std::size_t index_in_cell(Bidegree b, const E2Key& key) const;
    SparseVec to_cell(Bidegree b, const E2Combination& c) const;
    Bidegree target(Bidegree b) const { return {b.p + model_.d(), b.k - 1}; }

    // Matrix of the differential out of cell b, as images of basis vectors.
    const std::vector<SparseVec>& differential(Bidegree b) const;
    bool squares_to_zero() const;

    ClassFunction cell_character(Bidegree b) const;
    // Character of ker / im at cell b.
    ClassFunction cohomology_character(Bidegree b) const;
    // Character of H^i(C_n(M)) assuming E3 = E_infinity.
    ClassFunction total_cohomology_character(int i) const;
    std::vector<long> ordered_betti() const;
    int max_total_degree() const;

    // Trace of sigma on a subspace of cell b spanned by the given RREF rows.
    Rational trace_on(const Permutation& sigma, Bidegree b, const EchelonBasis& rows) const;
    SparseVec act(const Permutation& sigma, Bidegree b, const SparseVec& v) const;

private:
    E2Model model_;
    std::map<Bidegree, std::vector<E2Key>> cells_;
    std::map<Bidegree, std::unordered_map<E2Key, std::size_t>> index_;
    std::size_t total_ = 0;
    mutable std::map<Bidegree, std::vector<SparseVec>> diff_;
};

// Complex of S_n-invariants.  Stabilizers of blocks with three or more points
// (two or more for odd d) kill the top Arnold class, so invariants live on
// matchings, where S_n acts by signed permutations: signed orbit sums form a basis.
class InvariantComplex {
public:
    InvariantComplex(const ManifoldDescriptor& M, int n);

    const E2Model& model() const { return model_; }
    std::size_t cell_dim(Bidegree b) const;
    std::map<Bidegree, std::size_t> cell_dims() const;
    bool squares_to_zero() const;
    long betti(int i) const;
    std::vector<long> betti_numbers() const;

    // Invariant basis vectors written in the full E2 basis.
    const std::vector<E2Combination>& invariant_vectors(Bidegree b) const;
    // Orbit coordinates of an invariant combination; throws if it is not invariant.
    SparseVec coordinates(Bidegree b, const E2Combination& v) const;
    // Cocycles in b spanning a complement of the coboundaries.
    std::vector<E2Combination> cohomology_representatives(Bidegree b) const;
    const std::vector<SparseVec>& differential(Bidegree b) const;

private:
    struct Orbit {
        E2Key rep;
        E2Combination vec;
    };
    E2Model model_;
    int n_;
    std::map<Bidegree, std::vector<Orbit>> orbits_;
    std::map<Bidegree, std::vector<E2Combination>> vectors_;
    std::map<Bidegree, std::vector<SparseVec>> diff_;
    std::size_t rank_into(Bidegree b) const;
    std::size_t rank_out(Bidegree b) const;
};

// Whether H^i(C_n)^{S_n} -> H^i(C_{n+1})^{S_{n+1}}, induced by forgetting the last point, is injective.
bool forget_point_injective(const ManifoldDescriptor& M, int n, int i);

long betti_unordered(const ManifoldDescriptor& M, int n, int i);
std::vector<long> betti_unordered_all(const ManifoldDescriptor& M, int n);
long colored_betti(const ManifoldDescriptor& M, int n, int i, const Partition& mu);

// Degree p part of (V^{tensor n})^{S_n} for graded dimensions V (V[0] == 1).
long graded_invariants_dim(const std::vector<long>& V, int n, int p);

// V(mu, r, alpha): the n-independent S_k piece of E2 with k = |mu| + l(mu) + l(alpha).
ClassFunction block_character(const ManifoldDescriptor& M, const Partition& mu, int r,
                              const Partition& alpha);

struct BlockDiagnostic {
    Partition mu;
    int r = 0;
    Partition alpha;
    int k = 0;
    MultiplicityVector base;
    int onset = 0;  // first n with constant padded multiplicities on the window
};

// Blocks E(mu, r, alpha) of E2^{p, k(d-1)} with their stabilization onsets up to n_max.
std::vector<BlockDiagnostic> e2_blocks(const ManifoldDescriptor& M, int p, int k, int n_max);
int induced_onset(const ClassFunction& v, int n_max);

struct RangeLine {
    std::string kind;
    std::string formula;
    std::string bound;
};

std::vector<RangeLine> stable_range_report(const ManifoldDescriptor& M, int i,
                                           std::optional<Partition> mu = std::nullopt);
std::string format_range_report(const std::vector<RangeLine>& lines);

}  // namespace confstab
