#include "confstab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace confstab {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size() + 1, false);
    for (int x : images) {
        if (x < 1 || x > static_cast<int>(images.size()) || seen[x])
            throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::from_cycle_type(const Partition& rho) {
    Permutation p(rho.size());
    int start = 0;
    for (int len : rho) {
        for (int i = 0; i < len; ++i) p.img_[start + i] = start + (i + 1) % len + 1;
        start += len;
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    std::vector<bool> used(n + 1, false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i];
            if (a < 1 || a > n || used[a]) throw std::invalid_argument("bad cycle");
            used[a] = true;
            p.img_[a - 1] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p(degree());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i] - 1] = i + 1;
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    int n = std::max(a.degree(), b.degree());
    Permutation p(n);
    for (int x = 1; x <= n; ++x) p.img_[x - 1] = a(b(x));
    return p;
}

Permutation Permutation::extended(int m) const {
    if (m < degree()) throw std::invalid_argument("cannot shrink a permutation");
    Permutation p(m);
    std::copy(img_.begin(), img_.end(), p.img_.begin());
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = img_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(lens);
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i + 1) continue;
        s += '(';
        for (int j = i; !seen[j]; j = img_[j] - 1) {
            seen[j] = true;
            if (s.back() != '(') s += ' ';
            s += std::to_string(j + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace confstab
