#include "confstab/manifold.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace confstab {

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw DescriptorError("intersection pairing is degenerate");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

void add_term(ManifoldDescriptor::Combination& comb, int c, const Rational& coef) {
    for (auto it = comb.begin(); it != comb.end(); ++it)
        if (it->first == c) {
            it->second += coef;
            if (it->second == 0) comb.erase(it);
            return;
        }
    if (coef != 0) comb.emplace_back(c, coef);
}

Rational coefficient(const ManifoldDescriptor::Combination& comb, int c) {
    for (const auto& [k, v] : comb)
        if (k == c) return v;
    return 0;
}

}  // namespace

ManifoldDescriptor ManifoldDescriptor::parse(const std::string& text, const std::string& origin) {
    ManifoldDescriptor m;
    struct Pending {
        int line;
        std::vector<std::string> words;
    };
    std::vector<Pending> muls, diags;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    auto fail = [&](int line, const std::string& msg) {
        throw DescriptorError(origin + ":" + std::to_string(line) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> w;
        for (std::string t; ls >> t;) w.push_back(t);
        if (w.empty()) continue;
        const std::string& kw = w[0];
        try {
            if (kw == "name" && w.size() == 2) {
                m.name_ = w[1];
            } else if (kw == "dim" && w.size() == 2) {
                m.dim_ = std::stoi(w[1]);
                if (m.dim_ < 1) fail(line_no, "dimension must be positive");
            } else if (kw == "class" && w.size() == 3) {
                for (const auto& c : m.classes_)
                    if (c.name == w[1]) fail(line_no, "duplicate class " + w[1]);
                m.classes_.push_back({w[1], std::stoi(w[2])});
            } else if (kw == "mul" && w.size() == 5) {
                muls.push_back({line_no, w});
            } else if (kw == "diag" && w.size() == 4) {
                diags.push_back({line_no, w});
            } else if (kw == "flag" && w.size() == 2) {
                m.flags_.insert(w[1]);
            } else {
                fail(line_no, "cannot parse '" + raw + "'");
            }
        } catch (const std::invalid_argument&) {
            fail(line_no, "bad number in '" + raw + "'");
        } catch (const std::out_of_range&) {
            fail(line_no, "number out of range in '" + raw + "'");
        }
    }
    if (m.dim_ < 0) throw DescriptorError(origin + ": missing 'dim'");
    if (m.classes_.empty()) throw DescriptorError(origin + ": no classes");
    if (m.name_.empty()) m.name_ = std::filesystem::path(origin).stem().string();
    for (const auto& c : m.classes_)
        if (c.degree < 0 || c.degree > m.dim_)
            throw DescriptorError(origin + ": class " + c.name + " has degree outside [0, dim]");

    auto lookup = [&](const Pending& p, const std::string& name) {
        int i = m.class_index(name);
        if (i < 0) fail(p.line, "unknown class " + name);
        return i;
    };
    auto number = [&](const Pending& p, const std::string& s) {
        try {
            return parse_rational(s);
        } catch (const std::exception&) {
            fail(p.line, "bad coefficient " + s);
        }
        return Rational(0);
    };

    int n = m.num_classes();
    m.mul_.assign(n, std::vector<Combination>(n));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& p : muls) {
        int a = lookup(p, p.words[1]), b = lookup(p, p.words[2]), c = lookup(p, p.words[3]);
        Rational coef = number(p, p.words[4]);
        if (coef != 0 && m.degree(c) != m.degree(a) + m.degree(b))
            fail(p.line, "product " + p.words[1] + "*" + p.words[2] + " has wrong degree");
        add_term(m.mul_[a][b], c, coef);
        given[a][b] = true;
    }
    if (!diags.empty()) {
        m.diagonal_.emplace();
        for (const auto& p : diags) {
            int a = lookup(p, p.words[1]), b = lookup(p, p.words[2]);
            if (m.degree(a) + m.degree(b) != m.dim_) fail(p.line, "diagonal term has degree != dim");
            m.diagonal_->emplace_back(a, b, number(p, p.words[3]));
        }
    }

    std::vector<int> units;
    for (int i = 0; i < n; ++i)
        if (m.degree(i) == 0) units.push_back(i);
    if (units.empty()) throw DescriptorError(origin + ": no degree-0 class");
    if (units.size() > 1) throw DescriptorError(origin + ": more than one degree-0 class (M must be connected)");
    m.unit_ = units[0];
    for (int x = 0; x < n; ++x)
        for (int side = 0; side < 2; ++side) {
            int a = side ? x : m.unit_, b = side ? m.unit_ : x;
            Combination expect{{x, 1}};
            if (given[a][b] && m.mul_[a][b] != expect)
                throw DescriptorError(origin + ": unit does not act as identity on " + m.classes_[x].name);
            m.mul_[a][b] = expect;
            given[a][b] = true;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!given[a][b] || given[b][a]) continue;
            int sign = (m.degree(a) * m.degree(b)) % 2 ? -1 : 1;
            for (const auto& [c, v] : m.mul_[a][b]) add_term(m.mul_[b][a], c, sign * v);
            given[b][a] = true;
        }
    m.validate();
    return m;
}

void ManifoldDescriptor::validate() {
    if (flags_.count("nonorientable")) throw DescriptorError(name_ + ": only orientable manifolds are supported");
    int n = num_classes();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int sign = (degree(a) * degree(b)) % 2 ? -1 : 1;
            for (int c = 0; c < n; ++c)
                if (coefficient(mul_[a][b], c) != sign * coefficient(mul_[b][a], c))
                    throw DescriptorError(name_ + ": graded commutativity fails for " + classes_[a].name + "*" +
                                          classes_[b].name);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Combination left, right;
                for (const auto& [x, u] : mul_[a][b])
                    for (const auto& [y, v] : mul_[x][c]) add_term(left, y, u * v);
                for (const auto& [x, u] : mul_[b][c])
                    for (const auto& [y, v] : mul_[a][x]) add_term(right, y, u * v);
                for (int y = 0; y < n; ++y)
                    if (coefficient(left, y) != coefficient(right, y))
                        throw DescriptorError(name_ + ": product is not associative on " + classes_[a].name + "," +
                                              classes_[b].name + "," + classes_[c].name);
            }
    if (!diagonal_) return;
    auto g = pairing();
    auto ginv = invert(g);
    // Expected coefficient of e_i (x) e_k: (-1)^{|e_i|} (G^{-1})_{ki}.
    std::vector<std::vector<Rational>> given(n, std::vector<Rational>(n, 0));
    for (const auto& [a, b, c] : *diagonal_) given[a][b] += c;
    bool plus = true, minus = true;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Rational e = (degree(i) % 2 ? -1 : 1) * ginv[k][i];
            plus = plus && given[i][k] == e;
            minus = minus && given[i][k] == -e;
        }
    if (!plus && !minus) throw DescriptorError(name_ + ": diagonal fails duality pairing");
}

std::vector<std::vector<Rational>> ManifoldDescriptor::pairing() const {
    int top = -1;
    for (int i = 0; i < num_classes(); ++i)
        if (degree(i) == dim_) {
            if (top >= 0) throw DescriptorError(name_ + ": top degree is not one-dimensional");
            top = i;
        }
    if (top < 0) throw DescriptorError(name_ + ": no fundamental class");
    int n = num_classes();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g[a][b] = coefficient(mul_[a][b], top);
    return g;
}

int ManifoldDescriptor::class_index(const std::string& name) const {
    for (int i = 0; i < num_classes(); ++i)
        if (classes_[i].name == name) return i;
    return -1;
}

const std::vector<ManifoldDescriptor::DiagonalTerm>& ManifoldDescriptor::diagonal() const {
    if (!diagonal_) throw DescriptorError(name_ + ": no diagonal class");
    return *diagonal_;
}

std::vector<long> ManifoldDescriptor::betti() const {
    std::vector<long> b(dim_ + 1, 0);
    for (const auto& c : classes_) ++b[c.degree];
    return b;
}

long ManifoldDescriptor::euler_characteristic() const {
    long chi = 0;
    for (const auto& c : classes_) chi += c.degree % 2 ? -1 : 1;
    return chi;
}

int ManifoldDescriptor::first_positive_degree() const {
    int k = 0;
    for (const auto& c : classes_)
        if (c.degree > 0 && (k == 0 || c.degree < k)) k = c.degree;
    return k;
}

std::string ManifoldDescriptor::str() const {
    std::ostringstream os;
    os << "name\t" << name_ << "\ndim\t" << dim_ << "\nbetti\t";
    auto b = betti();
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << "\neuler\t" << euler_characteristic() << "\ndiagonal\t" << (diagonal_ ? "yes" : "no") << "\nflags\t";
    bool first = true;
    for (const auto& f : flags_) {
        os << (first ? "" : ",") << f;
        first = false;
    }
    os << "\n";
    return os.str();
}

ManifoldDescriptor ManifoldDescriptor::load(const std::string& path) {
    std::string resolved = resolve_descriptor_path(path);
    std::ifstream in(resolved);
    if (!in) throw DescriptorError("cannot open " + resolved);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), resolved);
}

std::string resolve_descriptor_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    fs::path candidate = fs::path(CONFSTAB_DATA_DIR) / path;
    if (fs::exists(candidate)) return candidate.string();
    throw DescriptorError("no such descriptor: " + path);
}

}  // namespace confstab
