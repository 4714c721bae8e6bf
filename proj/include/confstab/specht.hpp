#pragma once

#include "confstab/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace confstab {

// Sparse element of I_n(M^lambda) keyed by pseudo-tabloid.
class ModuleVector {
public:
    ModuleVector() = default;
    ModuleVector(int ambient, Partition shape);
    static ModuleVector basis(const PseudoTabloid& t);

    int ambient() const { return ambient_; }
    const Partition& shape() const { return shape_; }
    const std::map<PseudoTabloid, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const PseudoTabloid& t) const;

    void add(const PseudoTabloid& t, const Rational& c);
    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    ModuleVector& operator*=(const Rational& c);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Rational& c, ModuleVector a) { return a *= c; }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

    ModuleVector act(const Permutation& sigma) const;
    // If this == c * o for a nonzero c, returns c.
    std::optional<Rational> ratio_to(const ModuleVector& o) const;

    SparseVec coordinates(const TabloidModule& m, std::size_t summand = 0) const;
    static ModuleVector from_coordinates(const TabloidModule& m, const SparseVec& v);
    std::string str() const;

private:
    void check_compatible(const ModuleVector& o) const;

    int ambient_ = 0;
    Partition shape_;
    std::map<PseudoTabloid, Rational> terms_;
};

ModuleVector polytabloid(const PseudoTableau& t);
// Span of all polytabloids of the shape in ambient n.
Subspace specht_module(const Partition& lambda, int n);
Subspace specht_module(const ModulePtr& module, std::size_t summand);
ModuleVector iota(const ModuleVector& v);
// Fill the boxes of mu/lambda with the complement of the support, all ways.
ModuleVector pi_mu(const ModuleVector& v, const Partition& mu);
ModuleVector w_element(const PseudoTableau& full, const Partition& lambda);
// Sum over q in ColStab(full) of sign(q) v_{strip(q full)}.
ModuleVector colstab_polytabloid_sum(const PseudoTableau& full, const Partition& lambda);

struct ClaimRecord {
    Partition mu;
    std::string tableau;
    bool in_specht = false;          // claim 1
    bool proportional = false;       // claim 2
    Rational claim2_constant;
    long good_bijections = 0;
    bool higher_vanish = false;      // claim 3
    std::vector<Partition> claim3_failures;
    bool cancellation = false;       // bad bijections cancel
    long bad_bijections = 0;
    bool colstab_identity = false;   // c * w = sum of polytabloids
    long colstab_constant = 0;
    std::string witness;

    bool ok() const {
        return in_specht && proportional && higher_vanish && cancellation && colstab_identity;
    }
};

struct ClaimsReport {
    Partition lambda;
    int n = 0;
    std::vector<ClaimRecord> records;
    bool ok() const;
};

ClaimsReport verify_claims(const Partition& lambda, int n);
// Claims for one generating tableau.
ClaimRecord verify_claims_for(const PseudoTableau& full, const Partition& lambda);

struct MonotoneRecord {
    Partition mu;
    Partition target;               // mu{n+1}
    std::size_t isotypic_dim = 0;
    MultiplicityVector span;        // decomposition of S_{n+1} . iota(V_mu)
    long target_multiplicity = 0;
    bool ok() const { return target_multiplicity == 1; }
};

struct MonotoneReport {
    Partition lambda;
    int n = 0;
    std::vector<MonotoneRecord> records;
    bool ok() const;
};

MonotoneReport monotonicity_witness(const Partition& lambda, int n);

}  // namespace confstab
