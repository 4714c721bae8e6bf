#include "confstab/partition.hpp"

#include "confstab/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confstab {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("negative part in partition");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int c = 0; c < part(0); ++c) {
        int h = 0;
        while (h < length() && parts_[h] > c) ++h;
        cols.push_back(h);
    }
    return Partition(cols);
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') t += c;
    if (t.empty() || t == "0") return {};
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition: '" + text + "'");
        int v = std::stoi(tok);
        if (v <= 0) throw std::invalid_argument("bad partition: '" + text + "'");
        parts.push_back(v);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing: '" + text + "'");
    return Partition(parts);
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.str() << ')'; }

std::size_t PartitionHash::operator()(const Partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
}

Partition pad(const Partition& lambda, int n) {
    int k = lambda.size();
    if (n < k + lambda.part(0))
        throw std::invalid_argument("pad: n=" + std::to_string(n) + " < |lambda| + lambda_1 for " +
                                    lambda.str());
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), lambda.begin(), lambda.end());
    return Partition(parts);
}

Partition angle_pad(const Partition& mu, int n) {
    int singles = n - mu.size() - mu.length();
    if (singles < 0)
        throw std::invalid_argument("angle_pad: n - |mu| < l(mu) for " + mu.str());
    std::vector<int> parts;
    for (int x : mu) parts.push_back(x + 1);
    parts.insert(parts.end(), singles, 1);
    return Partition(parts);
}

Partition curly_pad(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("curly_pad: empty partition");
    std::vector<int> parts = mu.parts();
    ++parts[0];
    return Partition(parts);
}

Partition unpad(const Partition& nu) {
    if (nu.empty()) return {};
    return Partition(std::vector<int>(nu.begin() + 1, nu.end()));
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (outer.length() > inner.length() + 1) return false;
    for (int i = 0; i < outer.length(); ++i) {
        if (outer[i] < inner.part(i)) return false;
        if (i > 0 && outer[i] > inner[i - 1]) return false;
    }
    return inner.length() <= outer.length();
}

namespace {

void strips(const Partition& lambda, std::size_t row, int remaining, std::vector<int>& cur,
            std::vector<Partition>& out) {
    std::size_t len = lambda.length();
    if (row == len + 1 || remaining == 0) {
        if (remaining != 0) return;
        std::vector<int> parts = cur;
        for (std::size_t i = row; i < len; ++i) parts.push_back(lambda[i]);
        out.emplace_back(parts);
        return;
    }
    int base = lambda.part(row);
    int cap = row == 0 ? remaining : std::min(remaining, lambda[row - 1] - base);
    for (int add = cap; add >= 0; --add) {
        cur.push_back(base + add);
        strips(lambda, row + 1, remaining - add, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> leadsto(const Partition& lambda, int n) {
    if (n < lambda.size()) throw std::invalid_argument("leadsto: n < |lambda|");
    std::vector<Partition> out;
    std::vector<int> cur;
    strips(lambda, 0, n - lambda.size(), cur, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::strong_ordering lex_compare(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("lex_compare: sizes differ");
    return mu <=> nu;
}

long dim_irrep(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    Integer total = factorial(lambda.size());
    if (!mpz_divisible_p(total.get_mpz_t(), hooks.get_mpz_t()))
        throw std::logic_error("hook product does not divide n!");
    return to_long(Integer(total / hooks));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex partitions_mutex;
std::map<int, std::unique_ptr<std::vector<Partition>>> partitions_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::lock_guard lock(partitions_mutex);
    auto& slot = partitions_cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<Partition>>();
        std::vector<int> cur;
        gen_partitions(n, n, cur, *slot);
    }
    return *slot;
}

std::size_t partition_index(const Partition& rho) {
    const auto& all = partitions_of(rho.size());
    auto it = std::lower_bound(all.begin(), all.end(), rho, std::greater<>());
    if (it == all.end() || *it != rho) throw std::logic_error("partition_index: not found");
    return static_cast<std::size_t>(it - all.begin());
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k)
        for (const auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace confstab
