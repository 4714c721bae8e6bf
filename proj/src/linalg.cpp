#include "confstab/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace confstab {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v;
    for (auto& [i, c] : entries) {
        if (!v.e_.empty() && v.e_.back().first == i)
            v.e_.back().second += c;
        else
            v.e_.emplace_back(i, std::move(c));
        if (v.e_.back().second == 0) v.e_.pop_back();
    }
    return v;
}

SparseVec SparseVec::unit(std::size_t i, const Rational& c) {
    SparseVec v;
    if (c != 0) v.e_.emplace_back(i, c);
    return v;
}

const Rational* SparseVec::find(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, std::size_t k) { return e.first < k; });
    return it != e_.end() && it->first == i ? &it->second : nullptr;
}

Rational SparseVec::operator[](std::size_t i) const {
    const Rational* p = find(i);
    return p ? *p : Rational(0);
}

void SparseVec::axpy(const Rational& c, const SparseVec& v) {
    if (c == 0 || v.e_.empty()) return;
    if (&v == this) {
        *this *= 1 + c;
        return;
    }
    std::vector<Entry> out;
    out.reserve(e_.size() + v.e_.size());
    auto a = e_.begin();
    auto b = v.e_.cbegin();
    while (a != e_.end() || b != v.e_.end()) {
        if (b == v.e_.end() || (a != e_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == e_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational s = a->second + c * b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

SparseVec& SparseVec::operator*=(const Rational& c) {
    if (c == 0) {
        e_.clear();
        return *this;
    }
    for (auto& [i, x] : e_) x *= c;
    return *this;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(1, b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(-1, b);
    return r;
}

void SparseVec::make_primitive() {
    if (e_.empty()) return;
    Integer l = 1, g = 0;
    for (const auto& [i, x] : e_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& [i, x] : e_) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (e_.front().second < 0) g = -g;
    for (auto& [i, x] : e_) x /= g;
}

std::string SparseVec::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < e_.size(); ++k) os << (k ? " " : "") << e_[k].first << ':' << e_[k].second;
    os << ']';
    return os.str();
}

void DenseAccumulator::add(std::size_t i, const Rational& c) {
    if (!touched_[i]) {
        touched_[i] = true;
        idx_.push_back(i);
    }
    vals_[i] += c;
}

SparseVec DenseAccumulator::take() {
    std::sort(idx_.begin(), idx_.end());
    std::vector<SparseVec::Entry> entries;
    for (std::size_t i : idx_) {
        if (vals_[i] != 0) entries.emplace_back(i, vals_[i]);
        vals_[i] = 0;
        touched_[i] = false;
    }
    idx_.clear();
    return SparseVec::from_entries(std::move(entries));
}

std::size_t EchelonBasis::row_of_pivot(std::size_t col) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it == pivots_.end() || *it != col) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(it - pivots_.begin());
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
    // Rows are fully reduced, so eliminating a pivot never reintroduces another one.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [i, c] : v.entries()) {
        std::size_t r = row_of_pivot(i);
        if (r != std::numeric_limits<std::size_t>::max()) hits.emplace_back(r, c);
    }
    for (const auto& [r, c] : hits) v.axpy(-c, rows_[r]);
    return v;
}

bool EchelonBasis::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    Rational lead = v.entries().front().second;
    v *= 1 / lead;
    std::size_t p = v.leading();
    for (auto& row : rows_)
        if (const Rational* c = row.find(p)) row.axpy(-Rational(*c), v);
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto pos = it - pivots_.begin();
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool EchelonBasis::contains(const EchelonBasis& other) const {
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

std::optional<std::vector<Rational>> EchelonBasis::coordinates(const SparseVec& v) const {
    std::vector<Rational> coords(rows_.size());
    for (const auto& [i, c] : v.entries()) {
        std::size_t r = row_of_pivot(i);
        if (r != std::numeric_limits<std::size_t>::max()) coords[r] = c;
    }
    SparseVec rest = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) rest.axpy(-coords[r], rows_[r]);
    if (!rest.is_zero()) return std::nullopt;
    return coords;
}

EchelonBasis span_of(std::size_t dim, const std::vector<SparseVec>& vecs) {
    EchelonBasis b(dim);
    for (const auto& v : vecs) b.insert(v);
    return b;
}

std::size_t rank_of(std::size_t dim, const std::vector<SparseVec>& vecs) { return span_of(dim, vecs).rank(); }

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, std::size_t target_dim) {
    // Row-reduce [image | e_j]; rows whose image part vanished carry the kernel.
    EchelonBasis b(target_dim + images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        std::vector<SparseVec::Entry> e(images[j].entries().begin(), images[j].entries().end());
        e.emplace_back(target_dim + j, 1);
        b.insert(SparseVec::from_entries(std::move(e)));
    }
    std::vector<SparseVec> out;
    for (const auto& row : b.rows()) {
        if (row.leading() < target_dim) continue;
        std::vector<SparseVec::Entry> e;
        for (const auto& [i, c] : row.entries()) e.emplace_back(i - target_dim, c);
        out.push_back(SparseVec::from_entries(std::move(e)));
    }
    return out;
}

}  // namespace confstab
