#include "confstab/arnold.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace confstab {

std::string monomial_str(const ArnoldMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [a, b] : m) s += (s.empty() ? "" : "*") + ("G" + std::to_string(a) + "_" + std::to_string(b));
    return s;
}

bool is_normal(const ArnoldMonomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].first >= m[i].second || m[i].first < 1) return false;
        if (i && m[i - 1].second >= m[i].second) return false;
    }
    return true;
}

void Straightener::straighten_into(std::vector<Edge> product, Rational c, ArnoldElement& out) const {
    if (c == 0) return;
    const int swap_sign = (d_ % 2 == 0) ? 1 : -1;     // G_ab = (-1)^d G_ba
    const int commute_sign = (d_ % 2 == 0) ? -1 : 1;  // generators of degree d-1
    for (auto& [a, b] : product) {
        if (a == b) throw std::invalid_argument("G_aa is not a generator");
        if (a > b) {
            std::swap(a, b);
            if (swap_sign < 0) c = -c;
        }
    }
    auto key = [](const Edge& e) { return std::pair{e.second, e.first}; };
    for (std::size_t i = 1; i < product.size(); ++i)
        for (std::size_t j = i; j > 0 && key(product[j]) < key(product[j - 1]); --j) {
            std::swap(product[j], product[j - 1]);
            if (commute_sign < 0) c = -c;
        }
    for (std::size_t i = 1; i < product.size(); ++i) {
        if (product[i] == product[i - 1]) return;
        if (product[i].second != product[i - 1].second) continue;
        // G_ik G_jk = G_ij G_jk - G_ij G_ik for i < j < k.
        int a = product[i - 1].first, b = product[i].first, k = product[i].second;
        std::vector<Edge> first = product, second = product;
        first[i - 1] = {a, b};
        second[i - 1] = {a, b};
        second[i] = {a, k};
        straighten_into(std::move(first), c, out);
        straighten_into(std::move(second), -c, out);
        return;
    }
    auto [it, inserted] = out.try_emplace(product, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

ArnoldElement Straightener::straighten(const std::vector<Edge>& product, const Rational& c) const {
    ArnoldElement out;
    straighten_into(product, c, out);
    return out;
}

std::vector<long> poincare_polynomial(int m, int d) {
    if (m < 1 || d < 2) throw std::invalid_argument("poincare_polynomial needs m >= 1, d >= 2");
    std::vector<long> coeffs{1};
    for (int i = 1; i < m; ++i) {
        std::vector<long> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k];
            next[k + 1] += i * coeffs[k];
        }
        coeffs = std::move(next);
    }
    std::vector<long> out((m - 1) * (d - 1) + 1, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) out[k * (d - 1)] = coeffs[k];
    return out;
}

std::vector<ArnoldMonomial> nbc_basis(int m, int k) {
    std::vector<ArnoldMonomial> out;
    ArnoldMonomial cur;
    auto rec = [&](auto& self, int b) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        if (m - b + 1 < k - static_cast<int>(cur.size())) return;
        for (int a = 1; a < b; ++a) {
            cur.emplace_back(a, b);
            self(self, b + 1);
            cur.pop_back();
        }
        self(self, b + 1);
    };
    if (k == 0) return {ArnoldMonomial{}};
    rec(rec, 2);
    std::sort(out.begin(), out.end());
    return out;
}

ArnoldMonomial relabel(const Permutation& sigma, const ArnoldMonomial& mono) {
    ArnoldMonomial out;
    out.reserve(mono.size());
    for (const auto& [a, b] : mono) out.emplace_back(sigma(a), sigma(b));
    return out;
}

ClassFunction arnold_character(int m, int d, int k) {
    if (m < 1 || k < 0 || k > m - 1) throw std::invalid_argument("arnold_character: degree out of range");
    Straightener st(d);
    auto basis = nbc_basis(m, k);
    ClassFunction chi(m);
    const auto& classes = partitions_of(m);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Permutation sigma = Permutation::from_cycle_type(classes[c]);
        Rational trace = 0;
        for (const auto& mono : basis) {
            ArnoldElement img = st.straighten(relabel(sigma, mono));
            auto it = img.find(mono);
            if (it != img.end()) trace += it->second;
        }
        chi[c] = trace;
    }
    return chi;
}

const ClassFunction& top_character(int m, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ClassFunction> cache;
    std::lock_guard lock(mu);
    auto key = std::pair{m, d % 2};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, arnold_character(m, d, m - 1)).first;
    return it->second;
}

}  // namespace confstab
