#include "confstab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confstab {

namespace {

void check_rows(int ambient, const Rows& rows) {
    std::vector<bool> seen(ambient + 1, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) throw std::invalid_argument("empty row in tableau");
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw std::invalid_argument("tableau rows must weakly decrease in length");
        for (int x : rows[i]) {
            if (x < 1 || x > ambient) throw std::invalid_argument("label out of range");
            if (seen[x]) throw std::invalid_argument("repeated label");
            seen[x] = true;
        }
    }
}

std::string rows_str(const Rows& rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(rows[i][j]);
        }
    }
    return s;
}

Partition rows_shape(const Rows& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

std::vector<int> rows_support(const Rows& rows) {
    std::vector<int> s;
    for (const auto& r : rows) s.insert(s.end(), r.begin(), r.end());
    std::sort(s.begin(), s.end());
    return s;
}

Rows relabel(const Permutation& sigma, const Rows& rows, int ambient) {
    if (sigma.degree() > ambient) throw std::invalid_argument("permutation larger than the ambient set");
    Rows out = rows;
    for (auto& r : out)
        for (int& x : r) x = sigma(x);
    return out;
}

}  // namespace

PseudoTableau::PseudoTableau(int ambient, Rows rows) : ambient_(ambient), rows_(std::move(rows)) {
    check_rows(ambient_, rows_);
}

PseudoTableau PseudoTableau::parse(const std::string& text, int ambient) {
    Rows rows;
    std::stringstream ss(text);
    std::string row;
    int largest = 0;
    while (std::getline(ss, row, ';')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789 ") != std::string::npos)
                throw std::invalid_argument("bad tableau: '" + text + "'");
            r.push_back(std::stoi(tok));
            largest = std::max(largest, r.back());
        }
        rows.push_back(std::move(r));
    }
    return PseudoTableau(ambient ? ambient : largest, std::move(rows));
}

Partition PseudoTableau::shape() const { return rows_shape(rows_); }
std::vector<int> PseudoTableau::support() const { return rows_support(rows_); }

Rows PseudoTableau::columns() const {
    Rows cols(rows_.empty() ? 0 : rows_[0].size());
    for (const auto& r : rows_)
        for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
}

PseudoTableau PseudoTableau::with_ambient(int ambient) const { return PseudoTableau(ambient, rows_); }
std::string PseudoTableau::str() const { return rows_str(rows_); }

PseudoTabloid::PseudoTabloid(int ambient, Rows rows) : ambient_(ambient), rows_(std::move(rows)) {
    check_rows(ambient_, rows_);
    for (auto& r : rows_) std::sort(r.begin(), r.end());
}

PseudoTabloid::PseudoTabloid(const PseudoTableau& t) : PseudoTabloid(t.ambient(), t.rows()) {}

Partition PseudoTabloid::shape() const { return rows_shape(rows_); }
std::vector<int> PseudoTabloid::support() const { return rows_support(rows_); }
PseudoTabloid PseudoTabloid::with_ambient(int ambient) const { return PseudoTabloid(ambient, rows_); }
std::string PseudoTabloid::str() const { return "{" + rows_str(rows_) + "}"; }

std::size_t TabloidHash::operator()(const PseudoTabloid& t) const {
    std::size_t h = static_cast<std::size_t>(t.ambient()) * 0x9e3779b97f4a7c15ull;
    for (const auto& r : t.rows()) {
        h = (h ^ 0xffu) * 0x100000001b3ull;
        for (int x : r) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    }
    return h;
}

PseudoTableau act(const Permutation& sigma, const PseudoTableau& t) {
    return PseudoTableau(t.ambient(), relabel(sigma, t.rows(), t.ambient()));
}

PseudoTabloid act(const Permutation& sigma, const PseudoTabloid& t) {
    return PseudoTabloid(t.ambient(), relabel(sigma, t.rows(), t.ambient()));
}

ColumnStabilizer::ColumnStabilizer(const PseudoTableau& t) : t_(t) {}

long ColumnStabilizer::order() const {
    long o = 1;
    for (const auto& c : t_.columns())
        for (std::size_t i = 2; i <= c.size(); ++i) o *= static_cast<long>(i);
    return o;
}

void ColumnStabilizer::for_each_image(const std::function<void(const PseudoTableau&, int)>& f) const {
    Rows cols = t_.columns();
    // Each column runs through the permutations of its positions.
    std::vector<std::vector<int>> pos(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        pos[j].resize(cols[j].size());
        std::iota(pos[j].begin(), pos[j].end(), 0);
    }
    auto perm_sign = [](const std::vector<int>& p) {
        int s = 1;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (p[a] > p[b]) s = -s;
        return s;
    };
    Rows rows = t_.rows();
    while (true) {
        int sign = 1;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            sign *= perm_sign(pos[j]);
            for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][pos[j][i]];
        }
        f(PseudoTableau(t_.ambient(), rows), sign);
        std::size_t j = 0;
        while (j < cols.size() && !std::next_permutation(pos[j].begin(), pos[j].end())) ++j;
        if (j == cols.size()) break;
    }
}

void ColumnStabilizer::for_each(const std::function<void(const Permutation&, int)>& f) const {
    const Rows& orig = t_.rows();
    for_each_image([&](const PseudoTableau& image, int sign) {
        Permutation q(t_.ambient());
        std::vector<int> img(t_.ambient());
        std::iota(img.begin(), img.end(), 1);
        for (std::size_t i = 0; i < orig.size(); ++i)
            for (std::size_t j = 0; j < orig[i].size(); ++j) img[orig[i][j] - 1] = image.at(i, j);
        f(Permutation::from_images(img), sign);
    });
}

PseudoTableau strip(const PseudoTableau& full, const Partition& lambda) {
    Partition mu = full.shape();
    if (!is_horizontal_strip(lambda, mu))
        throw std::invalid_argument("strip: (" + mu.str() + ")/(" + lambda.str() + ") is not a horizontal strip");
    Rows rows;
    for (int i = 0; i < lambda.length(); ++i)
        rows.emplace_back(full.rows()[i].begin(), full.rows()[i].begin() + lambda[i]);
    return PseudoTableau(full.ambient(), rows);
}

namespace {

void choose(int ambient, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x <= ambient; ++x) {
        cur.push_back(x);
        choose(ambient, k, x + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int ambient, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    choose(ambient, k, 1, cur, out);
    return out;
}

Rows fill_rows(const Partition& shape, const std::vector<int>& word) {
    Rows rows;
    std::size_t pos = 0;
    for (int len : shape) {
        rows.emplace_back(word.begin() + pos, word.begin() + pos + len);
        pos += len;
    }
    return rows;
}

}  // namespace

std::vector<PseudoTabloid> all_pseudo_tabloids(const Partition& shape, int ambient) {
    std::vector<PseudoTabloid> out;
    if (shape.size() > ambient) return out;
    for (const auto& s : subsets(ambient, shape.size())) {
        // Assign the support to rows: ordered set partitions with the row sizes.
        std::vector<int> row_of;
        for (int i = 0; i < shape.length(); ++i) row_of.insert(row_of.end(), shape[i], i);
        do {
            Rows rows(shape.length());
            for (std::size_t j = 0; j < s.size(); ++j) rows[row_of[j]].push_back(s[j]);
            out.emplace_back(ambient, std::move(rows));
        } while (std::next_permutation(row_of.begin(), row_of.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PseudoTableau> all_pseudo_tableaux(const Partition& shape, int ambient) {
    std::vector<PseudoTableau> out;
    if (shape.size() > ambient) return out;
    for (auto s : subsets(ambient, shape.size())) {
        do {
            out.emplace_back(ambient, fill_rows(shape, s));
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return out;
}

PseudoTableau column_filling(const Partition& shape, const std::vector<int>& support, int ambient) {
    if (static_cast<int>(support.size()) != shape.size())
        throw std::invalid_argument("column_filling: support size mismatch");
    std::vector<int> s = support;
    std::sort(s.begin(), s.end());
    Rows rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].resize(shape[i]);
    std::size_t pos = 0;
    Partition conj = shape.conjugate();
    for (int j = 0; j < conj.length(); ++j)
        for (int i = 0; i < conj[j]; ++i) rows[i][j] = s[pos++];
    return PseudoTableau(ambient, rows);
}

}  // namespace confstab
