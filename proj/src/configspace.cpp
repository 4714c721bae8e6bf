#include "confstab/configspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>

namespace confstab {

std::size_t desk_budget() {
    if (const char* env = std::getenv("CONFSTAB_BUDGET")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("CONFSTAB_BUDGET is not a number: ") + env);
        }
    }
    return 200000;
}

namespace {

// Set partitions of {1..n} as block labels in restricted-growth form.
const std::vector<std::vector<int>>& set_partitions(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> labels(n, 0);
    auto rec = [&](auto& self, int i, int blocks) -> void {
        if (i == n) {
            out.push_back(labels);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            labels[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) out.push_back({});
    else rec(rec, 0, 0);
    return cache.emplace(n, std::move(out)).first->second;
}

struct BlockCycle {
    int size;      // points per block
    int length;    // blocks in the cycle
    Partition power_type;  // cycle type of g^length on one block
    std::vector<int> first_block;
};

// Block cycles of g on the set partition, or nothing if g does not fix it.
std::optional<std::vector<BlockCycle>> block_cycles(const Permutation& g, const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    int nb = n ? *std::max_element(labels.begin(), labels.end()) + 1 : 0;
    std::vector<int> pi(nb, -1);
    std::vector<std::vector<int>> blocks(nb);
    for (int i = 0; i < n; ++i) {
        blocks[labels[i]].push_back(i + 1);
        int to = labels[g(i + 1) - 1];
        if (pi[labels[i]] == -1) pi[labels[i]] = to;
        else if (pi[labels[i]] != to) return std::nullopt;
    }
    std::vector<BlockCycle> out;
    std::vector<bool> seen(nb, false);
    for (int b = 0; b < nb; ++b) {
        if (seen[b]) continue;
        int c = 0;
        for (int x = b; !seen[x]; x = pi[x]) {
            seen[x] = true;
            ++c;
        }
        const auto& block = blocks[b];
        std::vector<int> types;
        std::vector<bool> done(n + 1, false);
        for (int v : block) {
            if (done[v]) continue;
            int len = 0;
            for (int x = v; !done[x];) {
                done[x] = true;
                ++len;
                for (int s = 0; s < c; ++s) x = g(x);
            }
            types.push_back(len);
        }
        out.push_back({static_cast<int>(block.size()), c, Partition(types), block});
    }
    return out;
}

Rational top_value(int m, int d, const Partition& type) {
    if (m == 1) return 1;
    return top_character(m, d).at(type);
}

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Graded trace of a block cycle on (top Arnold class of a block) x H^*(M), in t^p.
Poly cycle_weight(const ManifoldDescriptor& M, const BlockCycle& bc) {
    int d = M.dim();
    Rational top = top_value(bc.size, d, bc.power_type);
    auto b = M.betti();
    Poly w(bc.length * d + 1, 0);
    for (int e = 0; e <= d; ++e) {
        if (!b[e]) continue;
        int total = e + (bc.size - 1) * (d - 1);
        int sign = (total % 2 && (bc.length - 1) % 2) ? -1 : 1;
        w[bc.length * e] += sign * b[e] * top;
    }
    return w;
}

}  // namespace

std::map<Bidegree, ClassFunction> e2_page(const ManifoldDescriptor& M, int n) {
    if (n < 1) throw std::invalid_argument("e2_page needs n >= 1");
    const auto& classes = partitions_of(n);
    std::map<Bidegree, ClassFunction> page;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        Permutation g = Permutation::from_cycle_type(classes[ci]);
        for (const auto& labels : set_partitions(n)) {
            auto cycles = block_cycles(g, labels);
            if (!cycles) continue;
            int k = n - (*std::max_element(labels.begin(), labels.end()) + 1);
            Poly total{1};
            for (const auto& bc : *cycles) total = poly_mul(total, cycle_weight(M, bc));
            for (std::size_t p = 0; p < total.size(); ++p) {
                if (total[p] == 0) continue;
                auto [it, fresh] = page.try_emplace({static_cast<int>(p), k}, ClassFunction(n));
                it->second[ci] += total[p];
            }
        }
    }
    std::erase_if(page, [](const auto& e) { return e.second.degree() == 0 && decompose(e.second).counts.empty(); });
    return page;
}

ClassFunction e2_character(const ManifoldDescriptor& M, int n, int p, int q) {
    int step = M.dim() - 1;
    if (q < 0 || q % step) return ClassFunction(n);
    auto page = e2_page(M, n);
    auto it = page.find({p, q / step});
    return it == page.end() ? ClassFunction(n) : it->second;
}

// ---------------------------------------------------------------------------

E2Model::E2Model(const ManifoldDescriptor& M, int n) : M_(&M), n_(n), straightener_(M.dim()) {
    if (n < 1 || n > 200) throw std::invalid_argument("E2Model: n out of range");
}

Bidegree E2Model::bidegree(const E2Key& key) const {
    Bidegree b{0, 0};
    for (int v = 1; v <= n_; ++v) {
        if (parent(key, v)) ++b.k;
        else b.p += M_->degree(cls(key, v));
    }
    return b;
}

ArnoldMonomial E2Model::forest(const E2Key& key) const {
    ArnoldMonomial f;
    for (int v = 1; v <= n_; ++v)
        if (parent(key, v)) f.emplace_back(parent(key, v), v);
    return f;
}

std::vector<E2Factor> E2Model::factors(const E2Key& key) const {
    std::vector<E2Factor> f;
    for (int v = 1; v <= n_; ++v)
        if (!parent(key, v)) f.push_back({v, cls(key, v)});
    return f;
}

std::string E2Model::str(const E2Key& key) const {
    std::string s;
    for (const auto& f : factors(key)) {
        if (f.cls == M_->unit()) continue;
        s += (s.empty() ? "" : "*") + M_->classes()[f.cls].name + "(" + std::to_string(f.vertex) + ")";
    }
    for (const auto& [a, b] : forest(key)) s += (s.empty() ? "" : "*") + ("G" + std::to_string(a) + "_" + std::to_string(b));
    return s.empty() ? "1" : s;
}

E2Key E2Model::make_key(const ArnoldMonomial& forest, const std::vector<int>& classes) const {
    E2Key key(2 * n_, '\0');
    for (const auto& [a, b] : forest) key[b - 1] = static_cast<char>(a);
    for (int v = 1; v <= n_; ++v)
        if (!key[v - 1]) key[n_ + v - 1] = static_cast<char>(classes.at(v - 1) + 1);
    return key;
}

void E2Model::normalize(const std::vector<E2Factor>& factors, const std::vector<Edge>& edges, const Rational& c,
                        E2Combination& out) const {
    if (c == 0) return;
    ArnoldElement forests = straightener_.straighten(edges, c);
    std::vector<int> parent(n_ + 1);
    for (const auto& [mono, coef] : forests) {
        std::fill(parent.begin(), parent.end(), 0);
        for (const auto& [a, b] : mono) parent[b] = a;
        auto root = [&](int v) {
            while (parent[v]) v = parent[v];
            return v;
        };
        std::vector<std::pair<int, int>> f;
        f.reserve(factors.size());
        for (const auto& x : factors) f.emplace_back(root(x.vertex), x.cls);
        Rational sign = coef;
        for (std::size_t i = 1; i < f.size(); ++i)
            for (std::size_t j = i; j > 0 && f[j].first < f[j - 1].first; --j) {
                if (M_->degree(f[j].second) % 2 && M_->degree(f[j - 1].second) % 2) sign = -sign;
                std::swap(f[j], f[j - 1]);
            }
        // Product of the classes collected at each root.
        std::vector<ManifoldDescriptor::Combination> at(n_ + 1);
        for (int v = 1; v <= n_; ++v)
            if (!parent[v]) at[v] = {{M_->unit(), 1}};
        bool zero = false;
        for (const auto& [r, x] : f) {
            ManifoldDescriptor::Combination next;
            for (const auto& [y, u] : at[r])
                for (const auto& [z, w] : M_->multiply(y, x)) {
                    auto it = std::find_if(next.begin(), next.end(), [&](const auto& e) { return e.first == z; });
                    if (it == next.end()) next.emplace_back(z, u * w);
                    else it->second += u * w;
                }
            std::erase_if(next, [](const auto& e) { return e.second == 0; });
            if (next.empty()) {
                zero = true;
                break;
            }
            at[r] = std::move(next);
        }
        if (zero) continue;
        E2Key key(2 * n_, '\0');
        for (int v = 1; v <= n_; ++v) key[v - 1] = static_cast<char>(parent[v]);
        auto rec = [&](auto& self, int v, const Rational& acc) -> void {
            while (v <= n_ && parent[v]) ++v;
            if (v > n_) {
                auto [it, fresh] = out.try_emplace(key, acc);
                if (!fresh) {
                    it->second += acc;
                    if (it->second == 0) out.erase(it);
                }
                return;
            }
            for (const auto& [z, w] : at[v]) {
                key[n_ + v - 1] = static_cast<char>(z + 1);
                self(self, v + 1, acc * w);
            }
        };
        rec(rec, 1, sign);
    }
}

void E2Model::act(const Permutation& sigma, const E2Key& key, const Rational& c, E2Combination& out) const {
    std::vector<E2Factor> f = factors(key);
    for (auto& x : f) x.vertex = sigma(x.vertex);
    normalize(f, relabel(sigma, forest(key)), c, out);
}

void E2Model::differential(const E2Key& key, const Rational& c, E2Combination& out) const {
    if (!M_->has_diagonal()) throw MissingDiagonal(M_->name() + ": the differential needs a diagonal class");
    std::vector<E2Factor> base = factors(key);
    int p = 0;
    for (const auto& x : base) p += M_->degree(x.cls);
    ArnoldMonomial edges = forest(key);
    int d = M_->dim();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::vector<Edge> rest = edges;
        rest.erase(rest.begin() + i);
        int sign = ((p + (d - 1) * static_cast<int>(i)) % 2) ? -1 : 1;
        auto [a, b] = edges[i];
        for (const auto& [x, y, coef] : M_->diagonal()) {
            std::vector<E2Factor> f = base;
            f.push_back({a, x});
            f.push_back({b, y});
            normalize(f, rest, c * sign * coef, out);
        }
    }
}

std::map<Bidegree, std::vector<E2Key>> E2Model::basis() const {
    std::map<Bidegree, std::vector<E2Key>> cells;
    int nc = M_->num_classes();
    for (int k = 0; k < n_; ++k)
        for (const auto& forest : nbc_basis(n_, k)) {
            std::vector<int> roots;
            std::vector<bool> child(n_ + 1, false);
            for (const auto& e : forest) child[e.second] = true;
            for (int v = 1; v <= n_; ++v)
                if (!child[v]) roots.push_back(v);
            std::vector<int> classes(n_, 0);
            auto rec = [&](auto& self, std::size_t i, int p) -> void {
                if (i == roots.size()) {
                    cells[{p, k}].push_back(make_key(forest, classes));
                    return;
                }
                for (int c = 0; c < nc; ++c) {
                    classes[roots[i] - 1] = c;
                    self(self, i + 1, p + M_->degree(c));
                }
            };
            rec(rec, 0, 0);
        }
    for (auto& [b, keys] : cells) std::sort(keys.begin(), keys.end());
    return cells;
}

// ---------------------------------------------------------------------------

namespace {

long explicit_size(const ManifoldDescriptor& M, int n) {
    // sum_k (#forests with k edges) * C^(n-k) = prod_{i<n} (C + i)
    long total = 1;
    for (int i = 0; i < n; ++i) total *= M.num_classes() + i;
    return total;
}

}  // namespace

E2Complex::E2Complex(const ManifoldDescriptor& M, int n) : model_(M, n) {
    if (!M.has_diagonal()) throw MissingDiagonal(M.name() + ": explicit E2 needs a diagonal class");
    long size = explicit_size(M, n);
    if (size > static_cast<long>(desk_budget()))
        throw BudgetExceeded("explicit E2 for " + M.name() + ", n=" + std::to_string(n) + " has dimension " +
                             std::to_string(size) + " > budget " + std::to_string(desk_budget()));
    cells_ = model_.basis();
    for (const auto& [b, keys] : cells_) {
        auto& idx = index_[b];
        for (std::size_t i = 0; i < keys.size(); ++i) idx.emplace(keys[i], i);
        total_ += keys.size();
    }
}

std::size_t E2Complex::cell_dim(Bidegree b) const {
    auto it = cells_.find(b);
    return it == cells_.end() ? 0 : it->second.size();
}

std::size_t E2Complex::index_in_cell(Bidegree b, const E2Key& key) const {
    auto it = index_.find(b);
    if (it == index_.end()) throw std::logic_error("no such cell");
    auto jt = it->second.find(key);
    if (jt == it->second.end()) throw std::logic_error("monomial " + model_.str(key) + " is not in its cell");
    return jt->second;
}

SparseVec E2Complex::to_cell(Bidegree b, const E2Combination& c) const {
    std::vector<SparseVec::Entry> e;
    e.reserve(c.size());
    for (const auto& [key, coef] : c) e.emplace_back(index_in_cell(b, key), coef);
    return SparseVec::from_entries(std::move(e));
}

const std::vector<SparseVec>& E2Complex::differential(Bidegree b) const {
    auto it = diff_.find(b);
    if (it != diff_.end()) return it->second;
    std::vector<SparseVec> images;
    Bidegree t = target(b);
    auto cell = cells_.find(b);
    if (cell != cells_.end())
        for (const auto& key : cell->second) {
            E2Combination out;
            model_.differential(key, 1, out);
            images.push_back(out.empty() ? SparseVec() : to_cell(t, out));
        }
    return diff_.emplace(b, std::move(images)).first->second;
}

bool E2Complex::squares_to_zero() const {
    for (const auto& [b, keys] : cells_) {
        const auto& first = differential(b);
        const auto& second = differential(target(b));
        for (const auto& v : first) {
            SparseVec acc;
            for (const auto& [i, c] : v.entries()) acc.axpy(c, second[i]);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

SparseVec E2Complex::act(const Permutation& sigma, Bidegree b, const SparseVec& v) const {
    const auto& keys = cells_.at(b);
    E2Combination out;
    for (const auto& [i, c] : v.entries()) model_.act(sigma, keys[i], c, out);
    return out.empty() ? SparseVec() : to_cell(b, out);
}

Rational E2Complex::trace_on(const Permutation& sigma, Bidegree b, const EchelonBasis& rows) const {
    Rational t = 0;
    for (std::size_t r = 0; r < rows.rank(); ++r) t += act(sigma, b, rows.rows()[r])[rows.pivot(r)];
    return t;
}

ClassFunction E2Complex::cell_character(Bidegree b) const {
    ClassFunction chi(model_.n());
    auto it = cells_.find(b);
    if (it == cells_.end()) return chi;
    const auto& classes = partitions_of(model_.n());
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        Permutation g = Permutation::from_cycle_type(classes[ci]);
        Rational t = 0;
        for (const auto& key : it->second) {
            E2Combination out;
            model_.act(g, key, 1, out);
            auto jt = out.find(key);
            if (jt != out.end()) t += jt->second;
        }
        chi[ci] = t;
    }
    return chi;
}

ClassFunction E2Complex::cohomology_character(Bidegree b) const {
    // ker/im = cell - im(out) - im(in) as characters.
    int n = model_.n();
    ClassFunction chi = cell_character(b);
    if (chi.degree() == 0) return chi;
    Bidegree t = target(b);
    Bidegree s{b.p - model_.d(), b.k + 1};
    EchelonBasis out = span_of(cell_dim(t), differential(b));
    EchelonBasis in = s.p >= 0 && cells_.count(s) ? span_of(cell_dim(b), differential(s)) : EchelonBasis(cell_dim(b));
    const auto& classes = partitions_of(n);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        Permutation g = Permutation::from_cycle_type(classes[ci]);
        if (out.rank()) chi[ci] -= trace_on(g, t, out);
        if (in.rank()) chi[ci] -= trace_on(g, b, in);
    }
    return chi;
}

ClassFunction E2Complex::total_cohomology_character(int i) const {
    ClassFunction chi(model_.n());
    for (const auto& [b, keys] : cells_)
        if (b.p + b.k * (model_.d() - 1) == i) chi = chi + cohomology_character(b);
    return chi;
}

int E2Complex::max_total_degree() const {
    int m = 0;
    for (const auto& [b, keys] : cells_) m = std::max(m, b.p + b.k * (model_.d() - 1));
    return m;
}

std::vector<long> E2Complex::ordered_betti() const {
    std::vector<long> betti(max_total_degree() + 1, 0);
    std::map<Bidegree, std::size_t> rank;
    for (const auto& [b, keys] : cells_) rank[b] = rank_of(cell_dim(target(b)), differential(b));
    for (const auto& [b, keys] : cells_) {
        Bidegree s{b.p - model_.d(), b.k + 1};
        long in = rank.count(s) ? static_cast<long>(rank[s]) : 0;
        betti[b.p + b.k * (model_.d() - 1)] += static_cast<long>(keys.size() - rank[b]) - in;
    }
    return betti;
}

// ---------------------------------------------------------------------------

InvariantComplex::InvariantComplex(const ManifoldDescriptor& M, int n) : model_(M, n), n_(n) {
    if (!M.has_diagonal()) throw MissingDiagonal(M.name() + ": the invariant complex needs a diagonal class");
    int nc = M.num_classes();
    // Matching monomials: disjoint edges, classes at the smaller endpoint and at singletons.
    std::vector<E2Key> matchings;
    std::vector<int> partner(n + 1, 0);
    auto enumerate = [&](auto& self, int v, std::vector<Edge>& edges) -> void {
        while (v <= n && partner[v]) ++v;
        if (v > n) {
            std::vector<int> roots;
            for (int u = 1; u <= n; ++u)
                if (partner[u] < 0 || partner[u] > u) roots.push_back(u);
            std::vector<int> classes(n, 0);
            auto fill = [&](auto& fself, std::size_t i) -> void {
                if (i == roots.size()) {
                    matchings.push_back(model_.make_key(edges, classes));
                    return;
                }
                for (int c = 0; c < nc; ++c) {
                    classes[roots[i] - 1] = c;
                    fself(fself, i + 1);
                }
            };
            fill(fill, 0);
            if (matchings.size() > desk_budget())
                throw BudgetExceeded("invariant complex for " + M.name() + ", n=" + std::to_string(n) +
                                     " exceeds budget " + std::to_string(desk_budget()));
            return;
        }
        partner[v] = -1;  // singleton
        self(self, v + 1, edges);
        partner[v] = 0;
        for (int w = v + 1; w <= n; ++w) {
            if (partner[w]) continue;
            partner[v] = w;
            partner[w] = v;
            edges.emplace_back(v, w);
            self(self, v + 1, edges);
            edges.pop_back();
            partner[v] = partner[w] = 0;
        }
    };
    std::vector<Edge> edges;
    enumerate(enumerate, 1, edges);
    std::map<E2Key, std::pair<std::size_t, int>> seen;  // key -> (orbit index, sign)
    std::sort(matchings.begin(), matchings.end());
    std::vector<Permutation> gens;
    for (int a = 1; a < n; ++a) gens.push_back(Permutation::transposition(n, a, a + 1));
    std::size_t next_id = 0;
    for (const auto& start : matchings) {
        if (seen.count(start)) continue;
        std::size_t id = next_id++;
        std::map<E2Key, int> orbit{{start, 1}};
        seen[start] = {id, 1};
        std::deque<E2Key> queue{start};
        bool consistent = true;
        while (!queue.empty()) {
            E2Key key = queue.front();
            queue.pop_front();
            int s = orbit[key];
            for (const auto& g : gens) {
                E2Combination img;
                model_.act(g, key, 1, img);
                if (img.size() != 1 || (img.begin()->second != 1 && img.begin()->second != -1))
                    throw std::logic_error("matching monomials are not permuted up to sign");
                const auto& [k2, c2] = *img.begin();
                int s2 = s * (c2 > 0 ? 1 : -1);
                auto [it, fresh] = orbit.try_emplace(k2, s2);
                if (fresh) {
                    seen[k2] = {id, s2};
                    queue.push_back(k2);
                } else if (it->second != s2) {
                    consistent = false;
                }
            }
        }
        if (!consistent) continue;
        Orbit o{start, {}};
        for (const auto& [key, s] : orbit) o.vec.emplace(key, s);
        orbits_[model_.bidegree(start)].push_back(std::move(o));
    }
    for (auto& [b, list] : orbits_)
        for (const auto& o : list) vectors_[b].push_back(o.vec);

    for (const auto& [b, list] : orbits_) {
        Bidegree t{b.p + model_.d(), b.k - 1};
        auto& images = diff_[b];
        for (const auto& o : list) {
            E2Combination out;
            for (const auto& [key, s] : o.vec) model_.differential(key, s, out);
            images.push_back(coordinates(t, out));
        }
    }
}

SparseVec InvariantComplex::coordinates(Bidegree b, const E2Combination& v) const {
    if (v.empty()) return SparseVec();
    auto it = orbits_.find(b);
    if (it == orbits_.end()) throw std::logic_error("image is not S_n-invariant (empty target cell)");
    std::vector<SparseVec::Entry> e;
    E2Combination rebuilt;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        const Orbit& o = it->second[i];
        auto jt = v.find(o.rep);
        if (jt == v.end()) continue;
        e.emplace_back(i, jt->second);
        for (const auto& [key, s] : o.vec) rebuilt[key] += jt->second * s;
    }
    if (rebuilt != v) throw std::logic_error("combination is not S_n-invariant");
    return SparseVec::from_entries(std::move(e));
}

std::size_t InvariantComplex::cell_dim(Bidegree b) const {
    auto it = orbits_.find(b);
    return it == orbits_.end() ? 0 : it->second.size();
}

std::map<Bidegree, std::size_t> InvariantComplex::cell_dims() const {
    std::map<Bidegree, std::size_t> out;
    for (const auto& [b, list] : orbits_) out[b] = list.size();
    return out;
}

const std::vector<E2Combination>& InvariantComplex::invariant_vectors(Bidegree b) const {
    static const std::vector<E2Combination> empty;
    auto it = vectors_.find(b);
    return it == vectors_.end() ? empty : it->second;
}

const std::vector<SparseVec>& InvariantComplex::differential(Bidegree b) const {
    static const std::vector<SparseVec> empty;
    auto it = diff_.find(b);
    return it == diff_.end() ? empty : it->second;
}

bool InvariantComplex::squares_to_zero() const {
    for (const auto& [b, images] : diff_) {
        const auto& second = differential({b.p + model_.d(), b.k - 1});
        for (const auto& v : images) {
            SparseVec acc;
            for (const auto& [i, c] : v.entries()) acc.axpy(c, second[i]);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

std::size_t InvariantComplex::rank_out(Bidegree b) const {
    return rank_of(cell_dim({b.p + model_.d(), b.k - 1}), differential(b));
}

std::size_t InvariantComplex::rank_into(Bidegree b) const {
    Bidegree s{b.p - model_.d(), b.k + 1};
    return rank_of(cell_dim(b), differential(s));
}

long InvariantComplex::betti(int i) const {
    long total = 0;
    for (const auto& [b, list] : orbits_)
        if (b.p + b.k * (model_.d() - 1) == i)
            total += static_cast<long>(list.size() - rank_out(b) - rank_into(b));
    return total;
}

std::vector<long> InvariantComplex::betti_numbers() const {
    int top = n_ * model_.d();
    std::vector<long> out;
    for (int i = 0; i <= top; ++i) out.push_back(betti(i));
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<E2Combination> InvariantComplex::cohomology_representatives(Bidegree b) const {
    std::vector<E2Combination> reps;
    std::size_t dim = cell_dim(b);
    if (!dim) return reps;
    EchelonBasis coboundaries = span_of(dim, differential({b.p - model_.d(), b.k + 1}));
    auto cocycles = kernel(differential(b), cell_dim({b.p + model_.d(), b.k - 1}));
    const auto& vecs = vectors_.at(b);
    for (const auto& z : cocycles) {
        if (!coboundaries.insert(z)) continue;
        E2Combination v;
        for (const auto& [i, c] : z.entries())
            for (const auto& [key, s] : vecs[i]) v[key] += c * s;
        std::erase_if(v, [](const auto& e) { return e.second == 0; });
        reps.push_back(std::move(v));
    }
    return reps;
}

bool forget_point_injective(const ManifoldDescriptor& M, int n, int i) {
    InvariantComplex small(M, n), big(M, n + 1);
    const E2Model& bm = big.model();
    for (const auto& [b, dim] : small.cell_dims()) {
        if (b.p + b.k * (M.dim() - 1) != i) continue;
        auto reps = small.cohomology_representatives(b);
        if (reps.empty()) continue;
        EchelonBasis acc = span_of(big.cell_dim(b), big.differential({b.p - M.dim(), b.k + 1}));
        std::size_t base = acc.rank();
        for (const auto& z : reps) {
            // Pull back along the forgetful map, then average over cosets of S_n in S_{n+1}.
            E2Combination lifted;
            for (const auto& [key, c] : z) {
                E2Key k2(2 * (n + 1), '\0');
                for (int v = 1; v <= n; ++v) {
                    k2[v - 1] = key[v - 1];
                    k2[n + 1 + v - 1] = key[n + v - 1];
                }
                k2[2 * n + 1] = static_cast<char>(M.unit() + 1);
                for (int j = 1; j <= n + 1; ++j) {
                    Permutation tau = j == n + 1 ? Permutation(n + 1) : Permutation::transposition(n + 1, j, n + 1);
                    bm.act(tau, k2, c, lifted);
                }
            }
            acc.insert(big.coordinates(b, lifted));
        }
        if (acc.rank() != base + reps.size()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

long trivial_multiplicity(const ClassFunction& chi) {
    Rational m = chi.inner(ClassFunction::trivial(chi.n()));
    if (!is_integer(m) || m < 0) throw NotACharacter("invariant dimension is not a non-negative integer");
    return to_long(m);
}

void require_explicit(const ManifoldDescriptor& M) {
    if (!M.has_flag("single_differential"))
        throw NotComputable(M.name() + ": the spectral sequence is only known to degenerate after one differential "
                                       "for smooth projective varieties; add 'flag single_differential' if that holds");
    if (!M.has_diagonal()) throw MissingDiagonal(M.name() + ": no diagonal class in the descriptor");
}

}  // namespace

long betti_unordered(const ManifoldDescriptor& M, int n, int i) {
    if (n < 1 || i < 0) throw std::invalid_argument("betti_unordered needs n >= 1, i >= 0");
    if (M.dim() % 2) return trivial_multiplicity(e2_character(M, n, i, 0));
    require_explicit(M);
    return InvariantComplex(M, n).betti(i);
}

std::vector<long> betti_unordered_all(const ManifoldDescriptor& M, int n) {
    std::vector<long> out;
    if (M.dim() % 2) {
        for (int i = 0; i <= n * M.dim(); ++i) out.push_back(trivial_multiplicity(e2_character(M, n, i, 0)));
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        return out;
    }
    require_explicit(M);
    return InvariantComplex(M, n).betti_numbers();
}

long colored_betti(const ManifoldDescriptor& M, int n, int i, const Partition& mu) {
    if (mu.size() > n) throw std::invalid_argument("colored_betti needs |mu| <= n");
    if (mu.size() == 0) return betti_unordered(M, n, i);
    require_explicit(M);
    auto counts = decompose(E2Complex(M, n).total_cohomology_character(i));
    long total = 0;
    for (const auto& [lambda, c] : counts.counts) total += c * young_invariants_dim(lambda, mu);
    return total;
}

long graded_invariants_dim(const std::vector<long>& V, int n, int p) {
    if (V.empty() || V[0] != 1) throw std::invalid_argument("graded_invariants_dim needs V[0] == 1");
    if (p < 0) return 0;
    // ways[j][s]: choices over degrees seen so far using j factors of total degree s.
    std::vector<std::vector<Integer>> ways(n + 1, std::vector<Integer>(p + 1, 0));
    ways[0][0] = 1;
    for (std::size_t e = 1; e < V.size() && static_cast<int>(e) <= p; ++e) {
        if (!V[e]) continue;
        auto next = ways;
        for (int a = 1; a <= n && a * static_cast<int>(e) <= p; ++a) {
            Integer dim = e % 2 ? binomial(V[e], a) : binomial(V[e] + a - 1, a);
            if (dim == 0) break;
            for (int j = 0; j + a <= n; ++j)
                for (int s = 0; s + a * static_cast<int>(e) <= p; ++s)
                    if (ways[j][s] != 0) next[j + a][s + a * e] += ways[j][s] * dim;
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (int j = 0; j <= n; ++j) total += ways[j][p];
    return to_long(total);
}

// ---------------------------------------------------------------------------

ClassFunction block_character(const ManifoldDescriptor& M, const Partition& mu, int r, const Partition& alpha) {
    int q = mu.size(), m = mu.length(), ell = alpha.length();
    int k = q + m + ell;
    int d = M.dim();
    auto betti = M.betti();
    ClassFunction chi(k);
    if (k == 0) {
        chi[0] = r == 0 ? 1 : 0;
        return chi;
    }
    std::vector<int> want_sizes;
    for (int x : mu.parts()) want_sizes.push_back(x + 1);
    std::sort(want_sizes.begin(), want_sizes.end());
    std::vector<int> want_alpha = alpha.parts();
    std::sort(want_alpha.begin(), want_alpha.end());
    const auto& classes = partitions_of(k);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        Permutation g = Permutation::from_cycle_type(classes[ci]);
        Rational value = 0;
        for (const auto& labels : set_partitions(k)) {
            auto cycles = block_cycles(g, labels);
            if (!cycles) continue;
            std::vector<int> sizes;
            for (const auto& bc : *cycles)
                if (bc.size >= 2)
                    for (int j = 0; j < bc.length; ++j) sizes.push_back(bc.size);
            std::sort(sizes.begin(), sizes.end());
            if (sizes != want_sizes) continue;
            // Blocks with two or more points: degree r in total.
            Poly big{1};
            // Singleton cycles: every singleton has a positive degree; the multiset must be alpha.
            std::map<std::vector<int>, Rational> small{{{}, 1}};
            for (const auto& bc : *cycles) {
                if (bc.size >= 2) {
                    big = poly_mul(big, cycle_weight(M, bc));
                    continue;
                }
                std::map<std::vector<int>, Rational> next;
                for (const auto& [multiset, coef] : small)
                    for (int e = 1; e <= d; ++e) {
                        if (!betti[e]) continue;
                        std::vector<int> ms = multiset;
                        for (int j = 0; j < bc.length; ++j) ms.push_back(e);
                        std::sort(ms.begin(), ms.end());
                        int sign = (e % 2 && (bc.length - 1) % 2) ? -1 : 1;
                        next[ms] += coef * sign * betti[e];
                    }
                small = std::move(next);
            }
            Rational big_r = r < static_cast<int>(big.size()) ? big[r] : Rational(0);
            auto it = small.find(want_alpha);
            if (it != small.end()) value += big_r * it->second;
        }
        chi[ci] = value;
    }
    return chi;
}

int induced_onset(const ClassFunction& v, int n_max) {
    int k = v.n();
    if (n_max < k) throw std::invalid_argument("induced_onset: window below k");
    std::map<int, std::map<Partition, long>> padded;
    for (int n = k; n <= n_max; ++n)
        for (const auto& [nu, c] : decompose(induced_character(v, n)).counts) padded[n][unpad(nu)] = c;
    int from = n_max;
    while (from > k && padded[from - 1] == padded[n_max]) --from;
    return from;
}

std::vector<BlockDiagnostic> e2_blocks(const ManifoldDescriptor& M, int p, int k, int n_max) {
    std::vector<BlockDiagnostic> out;
    auto betti = M.betti();
    for (const auto& mu : partitions_of(k))
        for (int r = 0; r <= p; ++r)
            for (const auto& alpha : partitions_of(p - r)) {
                bool possible = true;
                for (int a : alpha.parts()) possible = possible && a <= M.dim() && betti[a] > 0;
                if (!possible) continue;
                ClassFunction v = block_character(M, mu, r, alpha);
                if (v.degree() == 0) continue;
                BlockDiagnostic diag{mu, r, alpha, v.n(), decompose(v), 0};
                diag.onset = n_max >= v.n() ? induced_onset(v, n_max) : -1;
                out.push_back(std::move(diag));
            }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<RangeLine> stable_range_report(const ManifoldDescriptor& M, int i, std::optional<Partition> mu) {
    if (i < 0) throw std::invalid_argument("degree must be non-negative");
    int d = M.dim();
    std::vector<RangeLine> lines;
    auto at_least = [](long n) { return "n >= " + std::to_string(n); };
    if (d >= 3) lines.push_back({"ordered", "n >= 2i", at_least(2L * i)});
    else if (d == 2) lines.push_back({"ordered", "n >= 4i", at_least(4L * i)});
    lines.push_back({"unordered", "n > i", at_least(i + 1L)});
    int k = M.first_positive_degree();
    k = k == 0 ? d - 1 : std::min(k, d - 1);
    if (k >= 1) {
        long bound = (i + k - 1) / k + 1;
        lines.push_back({"improved", "n >= i/k+1 (k=" + std::to_string(k) + ")", at_least(bound)});
    }
    if (mu) {
        long m2 = 2L * mu->size();
        if (d >= 3) lines.push_back({"colored", "n >= max(2i, 2|mu|)", at_least(std::max(2L * i, m2))});
        else if (d == 2) lines.push_back({"colored", "n >= max(4i, 2|mu|)", at_least(std::max(4L * i, m2))});
    }
    return lines;
}

std::string format_range_report(const std::vector<RangeLine>& lines) {
    std::ostringstream os;
    os << "kind\tformula\tbound\n";
    for (const auto& l : lines) os << l.kind << "\t" << l.formula << "\t" << l.bound << "\n";
    return os.str();
}

}  // namespace confstab
