#pragma once

#include "confstab/characters.hpp"
#include "confstab/permutation.hpp"
#include "confstab/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace confstab {

using Edge = std::pair<int, int>;

// nbc monomial: edges (a,b) with a < b, second indices distinct, sorted by b.
using ArnoldMonomial = std::vector<Edge>;
using ArnoldElement = std::map<ArnoldMonomial, Rational>;

std::string monomial_str(const ArnoldMonomial& m);
bool is_normal(const ArnoldMonomial& m);

// Relations of H^*(C_m(R^d)); only the parity of d matters.
class Straightener {
public:
    explicit Straightener(int d) : d_(d) {}
    int d() const { return d_; }
    // Normal form of c * G_{e_1} ... G_{e_k}.
    ArnoldElement straighten(const std::vector<Edge>& product, const Rational& c = 1) const;
    void straighten_into(std::vector<Edge> product, Rational c, ArnoldElement& out) const;

private:
    int d_;
};

// Coefficients of prod_{i<m} (1 + i t^{d-1}), indexed by degree.
std::vector<long> poincare_polynomial(int m, int d);
// nbc monomials on {1..m} with k edges.
std::vector<ArnoldMonomial> nbc_basis(int m, int k);
ArnoldMonomial relabel(const Permutation& sigma, const ArnoldMonomial& mono);

// Character of S_m on the top degree; cached by (m, parity of d).
const ClassFunction& top_character(int m, int d);
// Character of S_m on the degree-k(d-1) part.
ClassFunction arnold_character(int m, int d, int k);

}  // namespace confstab
