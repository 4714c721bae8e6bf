#include "confstab/specht.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confstab {

ModuleVector::ModuleVector(int ambient, Partition shape) : ambient_(ambient), shape_(std::move(shape)) {}

ModuleVector ModuleVector::basis(const PseudoTabloid& t) {
    ModuleVector v(t.ambient(), t.shape());
    v.add(t, 1);
    return v;
}

Rational ModuleVector::coefficient(const PseudoTabloid& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ModuleVector::add(const PseudoTabloid& t, const Rational& c) {
    if (t.ambient() != ambient_ || t.shape() != shape_)
        throw std::invalid_argument("tabloid " + t.str() + " does not belong to this module");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ModuleVector::check_compatible(const ModuleVector& o) const {
    if (o.ambient_ != ambient_ || o.shape_ != shape_) throw std::invalid_argument("module vectors from different modules");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    check_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    check_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [t, x] : terms_) x *= c;
    return *this;
}

ModuleVector ModuleVector::act(const Permutation& sigma) const {
    ModuleVector r(ambient_, shape_);
    for (const auto& [t, c] : terms_) r.add(confstab::act(sigma, t), c);
    return r;
}

std::optional<Rational> ModuleVector::ratio_to(const ModuleVector& o) const {
    if (terms_.size() != o.terms_.size() || terms_.empty() || o.shape_ != shape_ || o.ambient_ != ambient_)
        return std::nullopt;
    Rational c = terms_.begin()->second / o.terms_.begin()->second;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != c * b->second) return std::nullopt;
    return c;
}

SparseVec ModuleVector::coordinates(const TabloidModule& m, std::size_t summand) const {
    if (m.summands().at(summand) != shape_ || m.ambient() != ambient_)
        throw std::invalid_argument("module vector does not live in this module");
    std::vector<SparseVec::Entry> e;
    for (const auto& [t, c] : terms_) e.emplace_back(m.index_of(summand, t), c);
    return SparseVec::from_entries(std::move(e));
}

ModuleVector ModuleVector::from_coordinates(const TabloidModule& m, const SparseVec& v) {
    if (v.is_zero()) return ModuleVector(m.ambient(), m.summands().empty() ? Partition() : m.summands()[0]);
    const auto& first = m.element(v.leading());
    ModuleVector r(m.ambient(), m.summands()[first.summand]);
    for (const auto& [i, c] : v.entries()) r.add(m.element(i).tabloid, c);
    return r;
}

std::string ModuleVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        Rational a = abs(c);
        if (a != 1) os << a << '*';
        os << t.str();
        first = false;
    }
    return os.str();
}

ModuleVector polytabloid(const PseudoTableau& t) {
    ModuleVector v(t.ambient(), t.shape());
    ColumnStabilizer(t).for_each_image([&](const PseudoTableau& qt, int sign) { v.add(PseudoTabloid(qt), sign); });
    return v;
}

namespace {

std::mutex specht_mutex;
std::map<std::pair<Partition, int>, Subspace> specht_cache;

}  // namespace

Subspace specht_module(const ModulePtr& module, std::size_t summand) {
    Subspace s(module);
    for (const auto& t : all_pseudo_tableaux(module->summands().at(summand), module->ambient()))
        s.insert(polytabloid(t).coordinates(*module, summand));
    return s;
}

Subspace specht_module(const Partition& lambda, int n) {
    if (n < lambda.size()) throw std::invalid_argument("specht_module: n < |lambda|");
    std::pair key{lambda, n};
    {
        std::lock_guard lock(specht_mutex);
        if (auto it = specht_cache.find(key); it != specht_cache.end()) return it->second;
    }
    Subspace s = specht_module(TabloidModule::make({lambda}, n), 0);
    std::lock_guard lock(specht_mutex);
    return specht_cache.emplace(key, std::move(s)).first->second;
}

ModuleVector iota(const ModuleVector& v) {
    ModuleVector r(v.ambient() + 1, v.shape());
    for (const auto& [t, c] : v.terms()) r.add(t.with_ambient(v.ambient() + 1), c);
    return r;
}

namespace {

// Boxes of mu/lambda in reading order, as (row, column).
std::vector<std::pair<int, int>> added_boxes(const Partition& lambda, const Partition& mu) {
    std::vector<std::pair<int, int>> boxes;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = lambda.part(i); j < mu[i]; ++j) boxes.emplace_back(i, j);
    return boxes;
}

Rows shaped_rows(const Partition& mu) {
    Rows rows(mu.length());
    for (int i = 0; i < mu.length(); ++i) rows[i].assign(mu[i], 0);
    return rows;
}

}  // namespace

ModuleVector pi_mu(const ModuleVector& v, const Partition& mu) {
    const Partition& lambda = v.shape();
    int n = v.ambient();
    if (mu.size() != n) throw std::invalid_argument("pi_mu: |mu| must equal the ambient size");
    if (!is_horizontal_strip(lambda, mu))
        throw std::invalid_argument("pi_mu: (" + lambda.str() + ") does not lead to (" + mu.str() + ")");
    auto boxes = added_boxes(lambda, mu);
    ModuleVector out(n, mu);
    for (const auto& [t, c] : v.terms()) {
        std::vector<int> supp = t.support(), rest;
        for (int x = 1, k = 0; x <= n; ++x) {
            if (k < static_cast<int>(supp.size()) && supp[k] == x)
                ++k;
            else
                rest.push_back(x);
        }
        Rows rows = shaped_rows(mu);
        for (std::size_t i = 0; i < t.rows().size(); ++i)
            std::copy(t.rows()[i].begin(), t.rows()[i].end(), rows[i].begin());
        do {
            for (std::size_t b = 0; b < boxes.size(); ++b) rows[boxes[b].first][boxes[b].second] = rest[b];
            out.add(PseudoTabloid(n, rows), c);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

ModuleVector w_element(const PseudoTableau& full, const Partition& lambda) {
    strip(full, lambda);
    ModuleVector w(full.ambient(), lambda);
    ColumnStabilizer(full).for_each_image(
        [&](const PseudoTableau& qt, int sign) { w.add(PseudoTabloid(strip(qt, lambda)), sign); });
    return w;
}

ModuleVector colstab_polytabloid_sum(const PseudoTableau& full, const Partition& lambda) {
    ModuleVector s(full.ambient(), lambda);
    ColumnStabilizer(full).for_each_image([&](const PseudoTableau& st, int sign) {
        s += Rational(sign) * polytabloid(strip(st, lambda));
    });
    return s;
}

bool ClaimsReport::ok() const {
    return std::all_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.ok(); });
}

ClaimRecord verify_claims_for(const PseudoTableau& full, const Partition& lambda) {
    int n = full.ambient();
    Partition mu = full.shape();
    if (mu.size() != n) throw std::invalid_argument("generating tableau must use every label");
    ClaimRecord rec;
    rec.mu = mu;
    rec.tableau = full.str();

    ModuleVector w = w_element(full, lambda);
    Subspace specht = specht_module(lambda, n);
    rec.in_specht = specht.contains(w.coordinates(*specht.module()));
    if (!rec.in_specht) rec.witness += "w not in I_n(V_lambda): " + w.str() + "\n";

    ModuleVector v = polytabloid(full);
    ModuleVector image = pi_mu(w, mu);
    auto c = image.ratio_to(v);
    rec.claim2_constant = c.value_or(0);
    rec.proportional = c && is_integer(*c) && *c > 0;
    if (!rec.proportional) rec.witness += "pi_mu(w) = " + image.str() + "\n";

    auto boxes_mu = added_boxes(lambda, mu);
    rec.good_bijections = 1;
    for (int i = 0; i < mu.length(); ++i) {
        int added = mu[i] - lambda.part(i);
        for (int f = 2; f <= added; ++f) rec.good_bijections *= f;
    }

    rec.higher_vanish = true;
    rec.cancellation = true;
    for (const auto& nu : leadsto(lambda, n)) {
        if (nu < mu) continue;
        if (nu > mu) {
            ModuleVector p = pi_mu(w, nu);
            if (!p.is_zero()) {
                rec.higher_vanish = false;
                rec.claim3_failures.push_back(nu);
                rec.witness += "pi_(" + nu.str() + ")(w) = " + p.str() + "\n";
            }
        }
        auto boxes_nu = added_boxes(lambda, nu);
        std::vector<int> g(boxes_mu.size());
        std::iota(g.begin(), g.end(), 0);
        do {
            bool good = nu == mu;
            for (std::size_t b = 0; good && b < g.size(); ++b)
                good = boxes_mu[b].first == boxes_nu[g[b]].first;
            if (good) continue;
            ++rec.bad_bijections;
            ModuleVector sum(n, nu);
            ColumnStabilizer(full).for_each_image([&](const PseudoTableau& qt, int sign) {
                Rows rows = shaped_rows(nu);
                for (int i = 0; i < lambda.length(); ++i)
                    std::copy(qt.rows()[i].begin(), qt.rows()[i].begin() + lambda[i], rows[i].begin());
                for (std::size_t b = 0; b < g.size(); ++b)
                    rows[boxes_nu[g[b]].first][boxes_nu[g[b]].second] = qt.at(boxes_mu[b].first, boxes_mu[b].second);
                sum.add(PseudoTabloid(n, rows), sign);
            });
            if (!sum.is_zero() && rec.cancellation) {
                rec.cancellation = false;
                rec.witness += "bad bijection into (" + nu.str() + ") leaves " + sum.str() + "\n";
            }
        } while (std::next_permutation(g.begin(), g.end()));
    }

    PseudoTableau base = strip(full, lambda);
    rec.colstab_constant = ColumnStabilizer(base).order();
    ModuleVector lhs = Rational(rec.colstab_constant) * w;
    rec.colstab_identity = lhs == colstab_polytabloid_sum(full, lambda);
    if (!rec.colstab_identity) rec.witness += "c*w differs from the column-stabilizer sum\n";
    return rec;
}

ClaimsReport verify_claims(const Partition& lambda, int n) {
    if (n > 7) throw std::invalid_argument("verify_claims limited to n <= 7");
    ClaimsReport report;
    report.lambda = lambda;
    report.n = n;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (const auto& mu : leadsto(lambda, n)) report.records.push_back(verify_claims_for(column_filling(mu, all, n), lambda));
    return report;
}

bool MonotoneReport::ok() const {
    return std::all_of(records.begin(), records.end(), [](const MonotoneRecord& r) { return r.ok(); });
}

MonotoneReport monotonicity_witness(const Partition& lambda, int n) {
    if (n < 1 || n < lambda.size()) throw std::invalid_argument("monotonicity_witness: need n >= max(1, |lambda|)");
    MonotoneReport report;
    report.lambda = lambda;
    report.n = n;
    Subspace v = specht_module(lambda, n);
    for (const auto& mu : leadsto(lambda, n)) {
        MonotoneRecord rec;
        rec.mu = mu;
        rec.target = curly_pad(mu);
        Subspace iso = v.isotypic(mu);
        rec.isotypic_dim = iso.dim();
        Subspace span = iso.iota().symmetric_span_from_stable();
        rec.span = span.decomposition();
        rec.target_multiplicity = rec.span[rec.target];
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace confstab
