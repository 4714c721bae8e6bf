#pragma once

#include "confstab/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace confstab {

class DescriptorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CohomologyClass {
    std::string name;
    int degree;
};

// Finite presentation of H^*(M;Q) with optional diagonal class.
class ManifoldDescriptor {
public:
    using Combination = std::vector<std::pair<int, Rational>>;  // class index, coefficient
    using DiagonalTerm = std::tuple<int, int, Rational>;

    static ManifoldDescriptor parse(const std::string& text, const std::string& origin = "<string>");
    static ManifoldDescriptor load(const std::string& path);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const std::vector<CohomologyClass>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int degree(int c) const { return classes_[c].degree; }
    int unit() const { return unit_; }
    int class_index(const std::string& name) const;
    bool has_flag(const std::string& key) const { return flags_.count(key) > 0; }
    const std::set<std::string>& flags() const { return flags_; }

    const Combination& multiply(int a, int b) const { return mul_[a][b]; }
    bool has_diagonal() const { return diagonal_.has_value(); }
    const std::vector<DiagonalTerm>& diagonal() const;

    // b_e for e = 0..dim
    std::vector<long> betti() const;
    long euler_characteristic() const;
    // Smallest positive degree with a nonzero class, or 0 if none.
    int first_positive_degree() const;

    std::string str() const;

private:
    void validate();
    void complete_products();
    std::vector<std::vector<Rational>> pairing() const;

    std::string name_;
    int dim_ = -1;
    std::vector<CohomologyClass> classes_;
    std::vector<std::vector<Combination>> mul_;
    std::optional<std::vector<DiagonalTerm>> diagonal_;
    std::set<std::string> flags_;
    int unit_ = -1;
};

// Resolves bare names such as "torus.desc" against the bundled data directory.
std::string resolve_descriptor_path(const std::string& path);

}  // namespace confstab
