#include "confstab/stability.hpp"

#include "confstab/specht.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace confstab {

std::size_t Level::dim() const { return space.dim() - (sub ? sub->dim() : 0); }

MultiplicityVector Level::decomposition() const {
    return sub ? quotient_decomposition(space, *sub) : space.decomposition();
}

Subspace Level::sub_or_zero() const { return sub ? *sub : Subspace(space.module()); }

ConsistentSequence::ConsistentSequence(std::map<int, Level> levels, LevelMap phi)
    : levels_(std::move(levels)), phi_(std::move(phi)) {
    if (levels_.empty()) throw std::invalid_argument("empty consistent sequence");
}

ConsistentSequence ConsistentSequence::from_multiplicities(std::map<int, MultiplicityVector> counts) {
    ConsistentSequence s;
    s.counts_ = std::move(counts);
    return s;
}

int ConsistentSequence::n_min() const {
    return levels_.empty() ? counts_.begin()->first : levels_.begin()->first;
}

int ConsistentSequence::n_max() const {
    return levels_.empty() ? counts_.rbegin()->first : levels_.rbegin()->first;
}

MultiplicityVector ConsistentSequence::multiplicities(int n) const {
    return levels_.empty() ? counts_.at(n) : levels_.at(n).decomposition();
}

SparseVec ConsistentSequence::phi(int n, const SparseVec& v) const {
    if (phi_) return phi_(n, v);
    const auto& from = *levels_.at(n).space.module();
    const auto& to = *levels_.at(n + 1).space.module();
    return from.iota(v, to);
}

namespace {

std::vector<ModulePtr> module_chain(std::vector<Partition> summands, int n_min, int n_max) {
    std::vector<ModulePtr> chain{TabloidModule::make(std::move(summands), n_min)};
    for (int n = n_min + 1; n <= n_max; ++n) chain.push_back(chain.back()->bumped());
    return chain;
}

}  // namespace

ConsistentSequence induced_tabloid_sequence(const Partition& lambda, int n_min, int n_max) {
    std::map<int, Level> levels;
    auto chain = module_chain({lambda}, n_min, n_max);
    for (int n = n_min; n <= n_max; ++n) levels[n] = {Subspace::whole(chain[n - n_min]), std::nullopt};
    return ConsistentSequence(std::move(levels));
}

ConsistentSequence induced_specht_sequence(const Partition& lambda, int n_min, int n_max) {
    std::map<int, Level> levels;
    auto chain = module_chain({lambda}, n_min, n_max);
    for (int n = n_min; n <= n_max; ++n) levels[n] = {specht_module(chain[n - n_min], 0), std::nullopt};
    return ConsistentSequence(std::move(levels));
}

ConsistentSequence zero_map_sequence(const Partition& lambda, int n_min, int n_max) {
    auto base = induced_specht_sequence(lambda, n_min, n_max);
    return ConsistentSequence(base.levels(), [](int, const SparseVec&) { return SparseVec(); });
}

ConsistentSequence direct_sum(const ConsistentSequence& a, const ConsistentSequence& b) {
    if (a.n_min() != b.n_min() || a.n_max() != b.n_max()) throw std::invalid_argument("direct_sum: windows differ");
    int lo = a.n_min(), hi = a.n_max();
    std::vector<Partition> summands = a.level(lo).space.module()->summands();
    std::size_t na = summands.size();
    const auto& sb = b.level(lo).space.module()->summands();
    summands.insert(summands.end(), sb.begin(), sb.end());
    auto chain = module_chain(summands, lo, hi);

    auto embed = [](const SparseVec& v, std::size_t offset) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [i, c] : v.entries()) e.emplace_back(i + offset, c);
        return SparseVec::from_entries(std::move(e));
    };
    auto embed_space = [&](const Subspace& s, const ModulePtr& m, std::size_t offset, Subspace& into) {
        for (const auto& r : s.basis().rows()) into.insert(embed(r, offset));
        (void)m;
    };

    std::map<int, Level> levels;
    for (int n = lo; n <= hi; ++n) {
        const ModulePtr& m = chain[n - lo];
        std::size_t off = m->offset(na);
        Subspace space(m);
        embed_space(a.level(n).space, m, 0, space);
        embed_space(b.level(n).space, m, off, space);
        std::optional<Subspace> sub;
        if (a.level(n).sub || b.level(n).sub) {
            sub = Subspace(m);
            embed_space(a.level(n).sub_or_zero(), m, 0, *sub);
            embed_space(b.level(n).sub_or_zero(), m, off, *sub);
        }
        levels[n] = {space, sub};
    }
    auto phi = [a, b, chain, na, lo, embed](int n, const SparseVec& v) {
        std::size_t off = chain[n - lo]->offset(na), off_next = chain[n + 1 - lo]->offset(na);
        std::vector<SparseVec::Entry> ea, eb;
        for (const auto& [i, c] : v.entries()) (i < off ? ea.emplace_back(i, c) : eb.emplace_back(i - off, c));
        SparseVec out = embed(a.phi(n, SparseVec::from_entries(ea)), 0);
        out.axpy(1, embed(b.phi(n, SparseVec::from_entries(eb)), off_next));
        return out;
    };
    return ConsistentSequence(std::move(levels), phi);
}

ConsistentSequence quotient(const ConsistentSequence& v, const ConsistentSequence& w) {
    std::map<int, Level> levels;
    for (const auto& [n, lv] : v.levels()) {
        const Subspace& ws = w.level(n).space;
        if (!(*ws.module() == *lv.space.module()) || !lv.space.contains(ws))
            throw std::invalid_argument("quotient: not a subsequence");
        levels[n] = {lv.space, ws};
    }
    return ConsistentSequence(std::move(levels), [v](int n, const SparseVec& x) { return v.phi(n, x); });
}

Partition RowMerge::target() const {
    std::vector<int> parts = source.parts();
    parts[r] += parts[s];
    parts.erase(parts.begin() + s);
    return Partition(parts);
}

std::size_t RowMerge::merged_position() const {
    int merged = source[r] + source[s];
    std::size_t pos = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(source.length()); ++i)
        if (i != r && i != s && source[i] > merged) ++pos;
    return pos;
}

SparseVec RowMerge::apply(const TabloidModule& from, const TabloidModule& to, const SparseVec& v) const {
    std::size_t pos = merged_position();
    std::vector<SparseVec::Entry> e;
    for (const auto& [i, c] : v.entries()) {
        const Rows& rows = from.element(i).tabloid.rows();
        std::vector<int> merged = rows[r];
        merged.insert(merged.end(), rows[s].begin(), rows[s].end());
        Rows rest;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && k != s) rest.push_back(rows[k]);
        rest.insert(rest.begin() + pos, merged);
        e.emplace_back(to.index_of(0, PseudoTabloid(from.ambient(), rest)), c);
    }
    return SparseVec::from_entries(std::move(e));
}

ConsistentSequence merge_kernel(const RowMerge& f, int n_min, int n_max) {
    auto src = module_chain({f.source}, n_min, n_max);
    auto dst = module_chain({f.target()}, n_min, n_max);
    std::map<int, Level> levels;
    for (int n = n_min; n <= n_max; ++n) {
        const auto& m = src[n - n_min];
        std::vector<SparseVec> images;
        for (std::size_t j = 0; j < m->dim(); ++j) images.push_back(f.apply(*m, *dst[n - n_min], SparseVec::unit(j)));
        levels[n] = {Subspace(m, kernel(images, dst[n - n_min]->dim())), std::nullopt};
    }
    return ConsistentSequence(std::move(levels));
}

ConsistentSequence merge_image(const RowMerge& f, int n_min, int n_max) {
    auto src = module_chain({f.source}, n_min, n_max);
    auto dst = module_chain({f.target()}, n_min, n_max);
    std::map<int, Level> levels;
    for (int n = n_min; n <= n_max; ++n) {
        const auto& m = src[n - n_min];
        Subspace im(dst[n - n_min]);
        for (std::size_t j = 0; j < m->dim(); ++j) im.insert(f.apply(*m, *dst[n - n_min], SparseVec::unit(j)));
        levels[n] = {im, std::nullopt};
    }
    return ConsistentSequence(std::move(levels));
}

int StabilityReport::stable_from() const {
    return std::max({injectivity_from, surjectivity_from, multiplicity_from});
}

std::string StabilityReport::str() const {
    std::ostringstream os;
    os << "window\t" << window_min << ".." << window_max << "\n";
    os << "injective_from\t" << injectivity_from << "\n";
    os << "surjective_from\t" << surjectivity_from << "\n";
    os << "multiplicity_from\t" << multiplicity_from << "\n";
    for (const auto& [lambda, n] : multiplicity_stable_from) os << "  lambda=" << lambda.str() << "\t" << n << "\n";
    os << "monotone_from\t" << monotone_from << "\n";
    for (const auto& w : failures)
        os << "FAIL\tn=" << w.n << (w.lambda ? "\tlambda=" + w.lambda->str() : "") << "\t" << w.detail << "\n";
    return os.str();
}

namespace {

using Padded = std::map<Partition, long>;

Padded padded(const MultiplicityVector& m) {
    Padded p;
    for (const auto& [nu, c] : m.counts) p[unpad(nu)] = c;
    return p;
}

long lookup(const Padded& p, const Partition& lambda) {
    auto it = p.find(lambda);
    return it == p.end() ? 0 : it->second;
}

// Smallest N such that pred holds for every n in [N, hi).
int holds_from(const std::map<int, bool>& pred, int lo, int hi) {
    int from = hi;
    for (int n = hi - 1; n >= lo; --n) {
        if (!pred.at(n)) break;
        from = n;
    }
    return std::min(from, hi);
}

Subspace image_at(const ConsistentSequence& seq, int n, const Subspace& s) {
    Subspace out(seq.level(n + 1).space.module());
    for (const auto& r : s.basis().rows()) out.insert(seq.phi(n, r));
    return out;
}

}  // namespace

StabilityReport check_uniform_stability(const ConsistentSequence& seq, int N) {
    if (!seq.is_explicit()) throw std::invalid_argument("check_uniform_stability needs explicit levels");
    int lo = seq.n_min(), hi = seq.n_max();
    if (hi < N + 1 || N < lo) throw InsufficientWindow("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                                       "] does not cover N=" + std::to_string(N) + " and N+1");
    StabilityReport rep;
    rep.window_min = lo;
    rep.window_max = hi;
    rep.requested = N;

    std::map<int, bool> inj, surj;
    for (int n = lo; n < hi; ++n) {
        const Level& cur = seq.level(n);
        const Level& next = seq.level(n + 1);
        Subspace w_next = next.sub_or_zero();
        Subspace img = image_at(seq, n, cur.space) + w_next;
        std::size_t img_dim = img.dim() - w_next.dim();
        inj[n] = img_dim == cur.dim();
        Subspace span = img.symmetric_span_from_stable();
        surj[n] = span.dim() == next.space.dim();
        if (n >= N && !inj[n])
            rep.failures.push_back({n, std::nullopt, "phi_n not injective: image has dim " + std::to_string(img_dim) +
                                                         " < " + std::to_string(cur.dim())});
        if (n >= N && !surj[n])
            rep.failures.push_back({n, std::nullopt, "S_{n+1}-span of the image has dim " +
                                                         std::to_string(span.dim() - w_next.dim()) + " < " +
                                                         std::to_string(next.dim())});
    }
    rep.injectivity_from = holds_from(inj, lo, hi);
    rep.surjectivity_from = holds_from(surj, lo, hi);

    std::map<int, Padded> mult;
    std::set<Partition> lambdas;
    for (int n = lo; n <= hi; ++n) {
        mult[n] = padded(seq.multiplicities(n));
        for (const auto& [lambda, c] : mult[n]) lambdas.insert(lambda);
    }
    rep.multiplicity_from = lo;
    for (const auto& lambda : lambdas) {
        int from = hi;
        while (from > lo && lookup(mult[from - 1], lambda) == lookup(mult[hi], lambda)) --from;
        rep.multiplicity_stable_from[lambda] = from;
        rep.multiplicity_from = std::max(rep.multiplicity_from, from);
        if (from > N)
            rep.failures.push_back(Witness{from - 1, lambda, "multiplicity " + std::to_string(lookup(mult[from - 1], lambda)) +
                                                          " changes to " + std::to_string(lookup(mult[from], lambda))});
    }
    rep.monotone_from = seq.is_explicit() ? check_monotone(seq, N).monotone_from : lo;
    return rep;
}

StabilityReport check_monotone(const ConsistentSequence& seq, int N, std::optional<Partition> only) {
    if (!seq.is_explicit()) throw std::invalid_argument("check_monotone needs explicit levels");
    int lo = seq.n_min(), hi = seq.n_max();
    StabilityReport rep;
    rep.window_min = lo;
    rep.window_max = hi;
    rep.requested = N;
    std::map<int, bool> good;
    for (int n = lo; n < hi; ++n) {
        good[n] = true;
        const Level& cur = seq.level(n);
        Subspace w_cur = cur.sub_or_zero();
        Subspace w_next = seq.level(n + 1).sub_or_zero();
        for (const auto& [nu, k] : cur.decomposition().counts) {
            if (only && unpad(nu) != *only) continue;
            Subspace iso = cur.space.isotypic(nu) + w_cur;
            Subspace span = (image_at(seq, n, iso) + w_next).symmetric_span_from_stable();
            long achieved = quotient_decomposition(span, w_next)[pad(unpad(nu), n + 1)];
            if (achieved >= k) continue;
            good[n] = false;
            if (n >= N)
                rep.failures.push_back({n, unpad(nu), "expected multiplicity " + std::to_string(k) + " of (" +
                                                          pad(unpad(nu), n + 1).str() + "), got " + std::to_string(achieved)});
        }
    }
    rep.monotone_from = holds_from(good, lo, hi);
    rep.injectivity_from = rep.surjectivity_from = rep.multiplicity_from = lo;
    return rep;
}

int multiplicity_onset(const ConsistentSequence& seq) {
    int lo = seq.n_min(), hi = seq.n_max();
    Padded last = padded(seq.multiplicities(hi));
    int from = hi;
    while (from > lo && padded(seq.multiplicities(from - 1)) == last) --from;
    return from;
}

void write_witness(const StabilityReport& report, const std::string& label, const std::string& path) {
    nlohmann::json j;
    j["label"] = label;
    j["window"] = {report.window_min, report.window_max};
    j["requested"] = report.requested;
    j["injectivity_from"] = report.injectivity_from;
    j["surjectivity_from"] = report.surjectivity_from;
    j["multiplicity_from"] = report.multiplicity_from;
    j["monotone_from"] = report.monotone_from;
    for (const auto& w : report.failures)
        j["failures"].push_back({{"n", w.n}, {"lambda", w.lambda ? w.lambda->str() : ""}, {"detail", w.detail}});
    std::ofstream(path) << j.dump(2) << "\n";
}

bool PropertyReport::ok() const { return violations() == 0; }

std::size_t PropertyReport::violations() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const PropertyCase& c) { return !c.ok; }));
}

namespace {

std::string shapes_label(const std::string& kind, const std::vector<Partition>& shapes) {
    std::string s = kind + "(";
    for (std::size_t i = 0; i < shapes.size(); ++i) s += (i ? " | " : "") + shapes[i].str();
    return s + ")";
}

// c(V) = c(W) + c(V/W), the quotient counted through isotypic ranks.
PropertyCase additivity_case(const Partition& lambda, int n_max) {
    PropertyCase pc{shapes_label("I(M)/I(V)", {lambda}), "additivity", true, ""};
    auto v = induced_tabloid_sequence(lambda, lambda.size(), n_max);
    auto w = induced_specht_sequence(lambda, lambda.size(), n_max);
    for (int n = std::max(1, lambda.size()); n <= std::min(n_max, 6); ++n) {
        const Subspace& vs = v.level(n).space;
        const Subspace& ws = w.level(n).space;
        MultiplicityVector cv = vs.decomposition(), cw = ws.decomposition(), cq;
        cq.n = n;
        for (const auto& [nu, c] : cv.counts) {
            long q = static_cast<long>((vs.isotypic(nu) + ws).dim() - ws.dim()) / dim_irrep(nu);
            if (q) cq.counts[nu] = q;
        }
        if (!(cv == cw + cq)) {
            pc.ok = false;
            pc.detail = "n=" + std::to_string(n) + ": " + cv.str() + " vs " + cw.str() + " + " + cq.str();
        }
    }
    return pc;
}

PropertyCase implication_case(const std::string& label, const ConsistentSequence& seq, int N) {
    PropertyCase pc{label, "implication", true, ""};
    auto mono = check_monotone(seq, N);
    int onset = multiplicity_onset(seq);
    if (!mono.ok() || onset > N) {
        pc.ok = false;
        pc.detail = "premise failed: monotone " + std::to_string(mono.monotone_from) + ", onset " + std::to_string(onset);
        return pc;
    }
    auto stab = check_uniform_stability(seq, N);
    if (!stab.ok()) {
        pc.ok = false;
        pc.detail = stab.str();
    }
    return pc;
}

PropertyCase sub_quotient_case(const Partition& lambda, int n_max) {
    PropertyCase pc{shapes_label("sub/quotient", {lambda}), "sub-quotient", true, ""};
    int k = lambda.size();
    auto v = induced_tabloid_sequence(lambda, k, n_max);
    auto w = induced_specht_sequence(lambda, k, n_max);
    auto wm = check_monotone(w, k);
    if (!wm.ok()) {
        pc.ok = false;
        pc.detail = "subsequence not monotone:\n" + wm.str();
        return pc;
    }
    int N = std::max(k, multiplicity_onset(w));
    auto qm = check_monotone(quotient(v, w), N);
    if (!qm.ok()) {
        pc.ok = false;
        pc.detail = "quotient not monotone:\n" + qm.str();
    }
    return pc;
}

PropertyCase sum_case(const Partition& a, const Partition& b, int n_max) {
    PropertyCase pc{shapes_label("sum", {a, b}), "sum", true, ""};
    int lo = std::max(a.size(), b.size());
    auto s = direct_sum(induced_specht_sequence(a, lo, n_max), induced_specht_sequence(b, lo, n_max));
    auto rep = check_monotone(s, lo);
    if (!rep.ok()) {
        pc.ok = false;
        pc.detail = rep.str();
    }
    // Filtration W < V with W and V/W monotone.
    auto v = induced_tabloid_sequence(a, a.size(), n_max);
    auto vr = check_monotone(v, a.size());
    if (!vr.ok()) {
        pc.ok = false;
        pc.detail += "extension not monotone:\n" + vr.str();
    }
    return pc;
}

PropertyCase map_case(const RowMerge& f, int n_max) {
    PropertyCase pc{shapes_label("merge", {f.source, f.target()}), "kernel-image", true, ""};
    int k = f.source.size();
    int N = 2 * k;
    for (const auto& [what, seq] : {std::pair{"ker", merge_kernel(f, k, n_max)}, std::pair{"im", merge_image(f, k, n_max)}}) {
        auto rep = check_monotone(seq, k);
        int onset = multiplicity_onset(seq);
        if (!rep.ok() || onset > N) {
            pc.ok = false;
            pc.detail += std::string(what) + ": onset " + std::to_string(onset) + "\n" + rep.str();
        }
    }
    return pc;
}

PropertyCase single_lambda_case(const Partition& lambda, int n_max) {
    PropertyCase pc{shapes_label("trivial part", {lambda}), "trivial-part", true, ""};
    int k = lambda.size();
    auto seq = induced_tabloid_sequence(lambda, k, n_max);
    auto restricted = check_monotone(seq, k, Partition{});
    if (!restricted.ok()) {
        pc.ok = false;
        pc.detail = restricted.str();
    }
    // Negative control: with zero maps the check must fail at the first level.
    auto broken = check_monotone(zero_map_sequence(lambda, k, std::min(n_max, k + 2)), k);
    if (broken.ok() || broken.failures.front().n != k) {
        pc.ok = false;
        pc.detail += "zero maps were not caught\n";
    }
    return pc;
}

}  // namespace

PropertyReport property_suite(unsigned seed, int count, int n_max) {
    PropertyReport report;
    report.seed = seed;
    std::mt19937 rng(seed);
    auto pick = [&](int lo, int hi) {
        std::vector<Partition> pool;
        for (int k = lo; k <= hi; ++k)
            for (const auto& p : partitions_of(k)) pool.push_back(p);
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    for (int i = 0; i < count; ++i) {
        switch (i % 6) {
        case 0:
            report.cases.push_back(additivity_case(pick(1, 3), n_max));
            break;
        case 1: {
            // Needs N = 2k with N + 1 inside the window.
            int kmax = (n_max - 1) / 2;
            Partition a = pick(0, kmax), b = pick(0, kmax);
            int k = std::max(a.size(), b.size());
            ConsistentSequence seq = (i / 6) % 2 == 0
                                         ? induced_tabloid_sequence(a, a.size(), n_max)
                                         : direct_sum(induced_specht_sequence(a, k, n_max), induced_specht_sequence(b, k, n_max));
            int N = 2 * ((i / 6) % 2 == 0 ? a.size() : k);
            report.cases.push_back(implication_case(shapes_label("implication", {a, b}), seq, N));
            break;
        }
        case 2:
            report.cases.push_back(sub_quotient_case(pick(1, 3), n_max));
            break;
        case 3:
            report.cases.push_back(sum_case(pick(0, 3), pick(0, 3), n_max));
            break;
        case 4: {
            Partition p = pick(2, 3);
            while (p.length() < 2) p = pick(2, 3);
            std::size_t r = std::uniform_int_distribution<std::size_t>(0, p.length() - 2)(rng);
            std::size_t s = std::uniform_int_distribution<std::size_t>(r + 1, p.length() - 1)(rng);
            report.cases.push_back(map_case(RowMerge{p, r, s}, n_max));
            break;
        }
        default:
            report.cases.push_back(single_lambda_case(pick(0, 3), n_max));
        }
    }
    return report;
}

std::string AffineBound::str() const {
    Rational shift = intercept / slope;
    std::string inner = "p+q";
    if (shift > 0) inner += "+" + shift.get_str();
    if (shift < 0) inner += shift.get_str();
    if (slope == 1) return "n >= " + inner;
    if (is_integer(slope)) return "n >= " + slope.get_str() + "(" + inner + ")";
    std::string num = slope.get_num() == 1 ? "" : slope.get_num().get_str();
    return "n >= " + num + "(" + inner + ")/" + slope.get_den().get_str();
}

AffineBound max_bound(const AffineBound& a, const AffineBound& b) {
    if (a.slope != b.slope) throw std::invalid_argument("bounds with different slopes have no affine maximum");
    return a.intercept >= b.intercept ? a : b;
}

std::vector<RangeRow> propagate_ranges(const RangeParams& params, int pages) {
    if (params.m <= 0) throw std::invalid_argument("m must be positive");
    if (pages < 2) throw std::invalid_argument("pages must be at least 2");
    const Rational& m = params.m;
    // Bounds for the cell of total degree s = p+q; neighbours are shifted by one.
    auto shifted = [&](const AffineBound& b, int ds) { return AffineBound{b.slope, b.intercept + b.slope * ds}; };
    AffineBound stable{m, m * params.ell}, mono{m, m * (params.ell - 1)};
    std::vector<RangeRow> rows{{2, stable, mono}};
    for (int r = 3; r <= pages; ++r) {
        // d out of the cell: uniformly stable source, monotone target.
        AffineBound out = max_bound(stable, shifted(mono, 1));
        // d into the cell: source one degree lower.
        AffineBound in = max_bound(shifted(stable, -1), mono);
        AffineBound ker_stable = out, ker_mono = mono;
        AffineBound im_stable = in, im_mono = in;
        AffineBound next_stable = max_bound(ker_stable, im_stable);
        AffineBound next_mono = max_bound(ker_mono, max_bound(im_stable, im_mono));
        stable = next_stable;
        mono = next_mono;
        rows.push_back({r, stable, mono});
    }
    return rows;
}

std::string format_ranges(const RangeParams& params, const std::vector<RangeRow>& rows) {
    std::ostringstream os;
    os << "# m=" << params.m << " ell=" << params.ell << "\n";
    os << "page\tstable\tmonotone\n";
    for (const auto& r : rows) os << r.page << "\t" << r.stable.str() << "\t" << r.monotone.str() << "\n";
    return os.str();
}

}  // namespace confstab
