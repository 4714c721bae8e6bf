#include "confstab/module.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace confstab {

TabloidModule::TabloidModule(std::vector<Partition> summands, int ambient)
    : summands_(std::move(summands)), ambient_(ambient) {
    for (const auto& shape : summands_) {
        offsets_.push_back(elems_.size());
        auto& idx = index_.emplace_back();
        for (auto& t : all_pseudo_tabloids(shape, ambient_)) {
            idx.emplace(t, elems_.size());
            elems_.push_back({static_cast<std::size_t>(offsets_.size() - 1), std::move(t)});
        }
    }
}

ModulePtr TabloidModule::make(std::vector<Partition> summands, int ambient) {
    return std::make_shared<const TabloidModule>(std::move(summands), ambient);
}

std::size_t TabloidModule::index_of(std::size_t summand, const PseudoTabloid& t) const {
    if (t.ambient() != ambient_) throw std::out_of_range("tabloid from a different ambient set");
    auto it = index_[summand].find(t);
    if (it == index_[summand].end()) throw std::out_of_range("tabloid not in module: " + t.str());
    return it->second;
}

const std::vector<std::uint32_t>& TabloidModule::action_table(const Permutation& sigma) const {
    const Permutation full = sigma.degree() < ambient_ ? sigma.extended(ambient_) : sigma;
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = tables_.find(full.images()); it != tables_.end()) return it->second;
    }
    std::vector<std::uint32_t> table(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i)
        table[i] = static_cast<std::uint32_t>(index_of(elems_[i].summand, confstab::act(full, elems_[i].tabloid)));
    std::lock_guard lock(cache_mutex_);
    return tables_.emplace(full.images(), std::move(table)).first->second;
}

std::size_t TabloidModule::act(const Permutation& sigma, std::size_t i) const {
    return index_of(elems_[i].summand, confstab::act(sigma, elems_[i].tabloid));
}

SparseVec TabloidModule::act(const Permutation& sigma, const SparseVec& v) const {
    const auto& table = action_table(sigma);
    std::vector<SparseVec::Entry> e;
    e.reserve(v.nnz());
    for (const auto& [i, c] : v.entries()) e.emplace_back(table[i], c);
    return SparseVec::from_entries(std::move(e));
}

ModulePtr TabloidModule::bumped() const {
    std::lock_guard lock(cache_mutex_);
    if (!bumped_) bumped_ = make(summands_, ambient_ + 1);
    return bumped_;
}

SparseVec TabloidModule::iota(const SparseVec& v, const TabloidModule& next) const {
    if (next.ambient_ != ambient_ + 1 || next.summands_ != summands_)
        throw std::invalid_argument("iota: target is not the next level");
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, c] : v.entries())
        e.emplace_back(next.index_of(elems_[i].summand, elems_[i].tabloid.with_ambient(ambient_ + 1)), c);
    return SparseVec::from_entries(std::move(e));
}

Subspace::Subspace(ModulePtr module) : module_(std::move(module)), basis_(module_->dim()) {}

Subspace::Subspace(ModulePtr module, const std::vector<SparseVec>& spanning) : Subspace(std::move(module)) {
    for (const auto& v : spanning) basis_.insert(v);
}

Subspace Subspace::whole(ModulePtr module) {
    Subspace s(module);
    for (std::size_t i = 0; i < module->dim(); ++i) s.basis_.insert(SparseVec::unit(i));
    return s;
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (!(*module_ == *o.module_)) throw std::invalid_argument("subspaces of different modules");
    Subspace s = *this;
    for (const auto& r : o.basis_.rows()) s.basis_.insert(r);
    return s;
}

ClassFunction Subspace::character() const {
    int n = ambient();
    ClassFunction chi(n);
    const auto& classes = partitions_of(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Permutation inv = Permutation::from_cycle_type(classes[c]).inverse();
        const auto& table = module_->action_table(inv);
        Rational tr = 0;
        for (std::size_t r = 0; r < basis_.rank(); ++r)
            if (const Rational* x = basis_.rows()[r].find(table[basis_.pivot(r)])) tr += *x;
        chi[c] = tr;
    }
    return chi;
}

namespace {

std::mutex perms_mutex;
std::map<int, std::shared_ptr<const std::vector<Permutation>>> perms_cache;

std::shared_ptr<const std::vector<Permutation>> cached_permutations(int n) {
    if (n > 8) throw std::invalid_argument("isotypic projection limited to n <= 8");
    std::lock_guard lock(perms_mutex);
    auto& slot = perms_cache[n];
    if (!slot) slot = std::make_shared<const std::vector<Permutation>>(all_permutations(n));
    return slot;
}

// sum_g chi(g) g.v, in machine integers when the values allow it.
SparseVec project(const TabloidModule& m, const std::vector<Permutation>& perms, const std::vector<long>& chi,
                  SparseVec v) {
    v.make_primitive();
    bool small = true;
    std::vector<std::pair<std::size_t, long>> iv;
    for (const auto& [i, c] : v.entries()) {
        if (!c.get_num().fits_slong_p()) {
            small = false;
            break;
        }
        iv.emplace_back(i, c.get_num().get_si());
    }
    if (small) {
        std::vector<long> acc(m.dim(), 0);
        bool overflow = false;
        for (std::size_t g = 0; g < perms.size() && !overflow; ++g) {
            if (chi[g] == 0) continue;
            const auto& table = m.action_table(perms[g]);
            for (const auto& [i, c] : iv) {
                long term;
                if (__builtin_mul_overflow(c, chi[g], &term) || __builtin_add_overflow(acc[table[i]], term, &acc[table[i]])) {
                    overflow = true;
                    break;
                }
            }
        }
        if (!overflow) {
            std::vector<SparseVec::Entry> e;
            for (std::size_t i = 0; i < acc.size(); ++i)
                if (acc[i] != 0) e.emplace_back(i, Rational(acc[i]));
            return SparseVec::from_entries(std::move(e));
        }
    }
    DenseAccumulator acc(m.dim());
    for (std::size_t g = 0; g < perms.size(); ++g) {
        if (chi[g] == 0) continue;
        const auto& table = m.action_table(perms[g]);
        for (const auto& [i, c] : v.entries()) acc.add(table[i], c * chi[g]);
    }
    return acc.take();
}

}  // namespace

Subspace Subspace::isotypic(const Partition& nu) const {
    int n = ambient();
    if (nu.size() != n) throw std::invalid_argument("isotypic: partition size differs from ambient");
    Subspace out(module_);
    MultiplicityVector mult = decompose(character());
    std::size_t target = static_cast<std::size_t>(mult[nu] * dim_irrep(nu));
    if (target == 0) return out;
    auto perms = cached_permutations(n);
    std::vector<long> chi;
    chi.reserve(perms->size());
    const auto& table = character_table(n);
    for (const auto& g : *perms) chi.push_back(table.value(nu, g.cycle_type()));
    for (const auto& row : basis_.rows()) {
        out.basis_.insert(project(*module_, *perms, chi, row));
        if (out.dim() == target) break;
    }
    if (out.dim() != target) throw std::logic_error("isotypic projection has the wrong dimension");
    return out;
}

Subspace Subspace::iota() const {
    ModulePtr next = module_->bumped();
    Subspace out(next);
    for (const auto& r : basis_.rows()) out.basis_.insert(module_->iota(r, *next));
    return out;
}

Subspace Subspace::symmetric_span_from_stable() const {
    int n = ambient();
    Subspace out = *this;
    for (int j = 1; j < n; ++j) {
        Permutation t = Permutation::transposition(n, j, n);
        for (const auto& r : basis_.rows()) out.basis_.insert(module_->act(t, r));
    }
    return out;
}

Subspace Subspace::symmetric_closure() const {
    int n = ambient();
    Subspace out(module_);
    std::deque<SparseVec> queue;
    for (const auto& r : basis_.rows())
        if (out.basis_.insert(r)) queue.push_back(r);
    while (!queue.empty()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (int j = 1; j < n; ++j) {
            SparseVec w = module_->act(Permutation::transposition(n, j, j + 1), v);
            if (out.basis_.insert(w)) queue.push_back(std::move(w));
        }
    }
    return out;
}

bool Subspace::is_stable() const {
    int n = ambient();
    for (int j = 1; j < n; ++j) {
        Permutation t = Permutation::transposition(n, j, j + 1);
        for (const auto& r : basis_.rows())
            if (!basis_.contains(module_->act(t, r))) return false;
    }
    return true;
}

MultiplicityVector quotient_decomposition(const Subspace& v, const Subspace& w) {
    return decompose(v.character() - w.character());
}

}  // namespace confstab
