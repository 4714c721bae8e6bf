#include "confstab/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace confstab {

ClassFunction::ClassFunction(int n) : n_(n), values_(partitions_of(n).size()) {}

ClassFunction ClassFunction::trivial(int n) {
    ClassFunction f(n);
    for (auto& v : f.values_) v = 1;
    return f;
}

ClassFunction ClassFunction::sign(int n) {
    ClassFunction f(n);
    const auto& cls = partitions_of(n);
    for (std::size_t i = 0; i < cls.size(); ++i) f.values_[i] = (cls[i].size() - cls[i].length()) % 2 ? -1 : 1;
    return f;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
    return character_table(lambda.size()).row(lambda);
}

const Rational& ClassFunction::at(const Partition& rho) const { return values_[partition_index(rho)]; }
Rational& ClassFunction::at(const Partition& rho) { return values_[partition_index(rho)]; }
const Rational& ClassFunction::degree() const { return values_.back(); }

bool ClassFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (o.n_ != n_) throw std::invalid_argument("class functions of different degrees");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (o.n_ != n_) throw std::invalid_argument("class functions of different degrees");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("class functions of different degrees");
    ClassFunction r(a.n_);
    for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] = a.values_[i] * b.values_[i];
    return r;
}

Rational ClassFunction::inner(const ClassFunction& o) const {
    if (o.n_ != n_) throw std::invalid_argument("class functions of different degrees");
    const auto& cls = partitions_of(n_);
    Rational s = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (values_[i] == 0 || o.values_[i] == 0) continue;
        s += values_[i] * o.values_[i] / Rational(centralizer_order(cls[i]));
    }
    return s;
}

long MultiplicityVector::operator[](const Partition& lambda) const {
    auto it = counts.find(lambda);
    return it == counts.end() ? 0 : it->second;
}

long MultiplicityVector::dimension() const {
    long d = 0;
    for (const auto& [lambda, c] : counts) d += c * dim_irrep(lambda);
    return d;
}

std::string MultiplicityVector::str() const {
    if (counts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : counts) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << '*';
        os << '(' << lambda.str() << ')';
    }
    return os.str();
}

MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b) {
    MultiplicityVector r = a;
    for (const auto& [lambda, c] : b.counts) r.counts[lambda] += c;
    return r;
}

Integer centralizer_order(const Partition& rho) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : rho) ++mult[p];
    for (auto [part, m] : mult) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
        z *= pw * factorial(m);
    }
    return z;
}

Integer class_size(const Partition& rho) { return factorial(rho.size()) / centralizer_order(rho); }

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

long mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t rho_pos,
            std::map<MnKey, long>& memo) {
    if (rho_pos == rho.size()) return lambda.empty() ? 1 : 0;
    MnKey key{lambda, std::vector<int>(rho.begin() + rho_pos, rho.end())};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = rho[rho_pos];
    int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;

    long total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int j = 0; j < len; ++j)
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) next.push_back(part);
        }
        long v = mn_rec(next, rho, rho_pos + 1, memo);
        total += between % 2 ? -v : v;
    }
    memo.emplace(std::move(key), total);
    return total;
}

thread_local std::map<MnKey, long> mn_memo;

}  // namespace

long mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("mn_character: sizes differ");
    return mn_rec(lambda.parts(), rho.parts(), 0, mn_memo);
}

CharacterTable::CharacterTable(int n) : n_(n) {
    if (n < 0 || n > kMaxCharacterDegree)
        throw std::invalid_argument("character table limited to n <= " + std::to_string(kMaxCharacterDegree));
    const auto& parts = partitions_of(n);
    std::map<MnKey, long> memo;
    table_.assign(parts.size(), std::vector<long>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ClassFunction row(n);
        for (std::size_t j = 0; j < parts.size(); ++j) {
            table_[i][j] = mn_rec(parts[i].parts(), parts[j].parts(), 0, memo);
            row[j] = table_[i][j];
        }
        rows_.push_back(std::move(row));
    }
}

long CharacterTable::value(const Partition& lambda, const Partition& rho) const {
    return table_[partition_index(lambda)][partition_index(rho)];
}

const ClassFunction& CharacterTable::row(const Partition& lambda) const { return rows_[partition_index(lambda)]; }

namespace {

std::shared_mutex table_mutex;
std::map<int, std::unique_ptr<CharacterTable>> table_cache;

}  // namespace

const CharacterTable& character_table(int n) {
    {
        std::shared_lock lock(table_mutex);
        if (auto it = table_cache.find(n); it != table_cache.end()) return *it->second;
    }
    auto built = std::make_unique<CharacterTable>(n);
    std::unique_lock lock(table_mutex);
    auto& slot = table_cache[n];
    if (!slot) slot = std::move(built);
    return *slot;
}

MultiplicityVector decompose(const ClassFunction& chi) {
    MultiplicityVector m;
    m.n = chi.n();
    const auto& table = character_table(chi.n());
    const auto& parts = partitions_of(chi.n());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational c = chi.inner(table.row(i));
        if (!is_integer(c) || c < 0)
            throw NotACharacter("multiplicity of (" + parts[i].str() + ") is " + c.get_str());
        if (c != 0) m.counts[parts[i]] = to_long(c);
    }
    return m;
}

ClassFunction character_of(const MultiplicityVector& m) {
    ClassFunction f(m.n);
    for (const auto& [lambda, c] : m.counts) f += ClassFunction::irreducible(lambda) * Rational(c);
    return f;
}

namespace {

// Split the multiset rho into (rho1, rho2) with |rho1| = a.
void splittings(const std::vector<std::pair<int, int>>& mult, std::size_t pos, int a, std::vector<int>& p1,
                std::vector<int>& p2, Integer coef,
                const std::function<void(const Partition&, const Partition&, const Integer&)>& f) {
    if (pos == mult.size()) {
        if (a == 0) f(Partition(p1), Partition(p2), coef);
        return;
    }
    auto [part, m] = mult[pos];
    for (int j = 0; j <= m && j * part <= a; ++j) {
        p1.insert(p1.end(), j, part);
        p2.insert(p2.end(), m - j, part);
        splittings(mult, pos + 1, a - j * part, p1, p2, coef * binomial(m, j), f);
        p1.resize(p1.size() - j);
        p2.resize(p2.size() - (m - j));
    }
}

}  // namespace

ClassFunction induce_product(const ClassFunction& chi1, const ClassFunction& chi2) {
    int a = chi1.n(), n = chi1.n() + chi2.n();
    ClassFunction out(n);
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::map<int, int> mm;
        for (int p : parts[i]) ++mm[p];
        std::vector<std::pair<int, int>> mult(mm.begin(), mm.end());
        std::vector<int> p1, p2;
        Rational total = 0;
        splittings(mult, 0, a, p1, p2, 1, [&](const Partition& r1, const Partition& r2, const Integer& c) {
            const Rational& v1 = chi1.at(r1);
            if (v1 == 0) return;
            total += Rational(c) * v1 * chi2.at(r2);
        });
        out[i] = total;
    }
    return out;
}

ClassFunction induced_character(const ClassFunction& chi, int n) {
    if (n < chi.n()) throw std::invalid_argument("induced_character: n < k");
    return induce_product(chi, ClassFunction::trivial(n - chi.n()));
}

ClassFunction young_permutation_character(const Partition& mu, int n) {
    if (mu.size() > n) throw std::invalid_argument("young subgroup larger than S_n");
    ClassFunction f = ClassFunction::trivial(0);
    for (int part : mu) f = induce_product(f, ClassFunction::trivial(part));
    return induce_product(f, ClassFunction::trivial(n - mu.size()));
}

ClassFunction restrict_character(const ClassFunction& chi, int k) {
    if (k > chi.n()) throw std::invalid_argument("restrict_character: k > n");
    ClassFunction r(k);
    const auto& parts = partitions_of(k);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<int> p = parts[i].parts();
        p.insert(p.end(), chi.n() - k, 1);
        r[i] = chi.at(Partition(p));
    }
    return r;
}

long young_invariants_dim(const Partition& lambda, const Partition& mu) {
    Rational c = ClassFunction::irreducible(lambda).inner(young_permutation_character(mu, lambda.size()));
    return to_long(c);
}

long count_partition_chains(const Partition& lambda, const Partition& mu, int n) {
    if (n < mu.size()) throw std::invalid_argument("count_partition_chains: n < |mu|");
    Partition target = pad(lambda, n);
    std::map<Partition, long> layer{{Partition{n - mu.size()}, 1}};
    int size = n - mu.size();
    for (int part : mu) {
        size += part;
        std::map<Partition, long> next;
        for (const auto& [nu, c] : layer)
            for (const auto& eta : leadsto(nu, size)) next[eta] += c;
        layer = std::move(next);
    }
    auto it = layer.find(target);
    return it == layer.end() ? 0 : it->second;
}

}  // namespace confstab
