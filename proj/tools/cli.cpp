#include "confstab/cli.hpp"

#include "confstab/arnold.hpp"
#include "confstab/characters.hpp"
#include "confstab/configspace.hpp"
#include "confstab/manifold.hpp"
#include "confstab/partition.hpp"
#include "confstab/specht.hpp"
#include "confstab/stability.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace confstab {

namespace {

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Table {
public:
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void print(std::ostream& os, const std::string& format) const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], r[i].size());
            }
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (format == "pretty") {
                    os << r[i];
                    if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
                } else {
                    os << (i ? "\t" : "") << r[i];
                }
            }
            os << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string witness_path(const std::string& requested, const std::string& command) {
    if (!requested.empty()) return requested;
    return (std::filesystem::temp_directory_path() / ("confstab_" + command + "_witness.json")).string();
}

void write_json(const std::string& path, const nlohmann::json& j) { std::ofstream(path) << j.dump(2) << "\n"; }

std::string join(const std::vector<long>& v, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string poly_str(const std::vector<long>& coeffs) {
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k]) continue;
        std::string term = k == 0 ? std::to_string(coeffs[k])
                                  : (coeffs[k] == 1 ? "" : std::to_string(coeffs[k])) + "t" +
                                        (k == 1 ? "" : "^" + std::to_string(k));
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation stability for configuration spaces", "confstab"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "tsv";
    app.add_option("--format", format, "tsv or pretty")->check(CLI::IsMember({"tsv", "pretty"}));

    int n = 0, n_max = 0, i_deg = -1, m_pts = 0, d_dim = 0, pages = 3, count = 24, from = -1;
    unsigned seed = 1;
    std::string lambda_s, mu_s, manifold, m_s = "1", witness;
    int ell = 0;
    bool verify = false, explicit_complex = false, tabloid = false, zero_maps = false;
    std::function<void()> run;

    auto add_lambda = [&](CLI::App* s, bool required) {
        auto o = s->add_option("--lambda", lambda_s, "partition, e.g. 3,2,1");
        if (required) o->required();
    };
    auto add_manifold = [&](CLI::App* s) {
        s->add_option("--manifold", manifold, "descriptor file (bundled names resolve)")->required();
    };
    auto lambda = [&] { return Partition::parse(lambda_s); };

    auto* chartable = app.add_subcommand("chartable", "character table of S_n");
    chartable->add_option("--n", n)->required()->check(CLI::Range(1, kMaxCharacterDegree));
    chartable->callback([&] {
        run = [&] {
            const auto& parts = partitions_of(n);
            const auto& table = character_table(n);
            Table t;
            std::vector<std::string> head{"lambda"};
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) head.push_back(it->str());
            t.row(head);
            for (const auto& l : parts) {
                std::vector<std::string> row{l.str()};
                for (auto it = parts.rbegin(); it != parts.rend(); ++it) row.push_back(std::to_string(table.value(l, *it)));
                t.row(row);
            }
            t.print(out, format);
        };
    });

    auto* branch = app.add_subcommand("branch", "decompose Ind_{S_k x S_{n-k}}^{S_n} V_lambda");
    add_lambda(branch, true);
    branch->add_option("--n", n)->required();
    branch->add_flag("--verify", verify, "compare with the horizontal-strip rule");
    branch->add_option("--witness", witness, "witness file on failure");
    branch->callback([&] {
        run = [&] {
            Partition l = lambda();
            if (n < l.size()) throw std::invalid_argument("--n must be at least |lambda|");
            auto dec = decompose(induced_character(ClassFunction::irreducible(l), n));
            Table t;
            for (const auto& [nu, c] : dec.counts) t.row({nu.str(), std::to_string(c)});
            t.print(out, format);
            if (!verify) return;
            std::map<Partition, long, std::greater<>> expect;
            for (const auto& nu : leadsto(l, n)) expect[nu] = 1;
            if (expect != dec.counts) {
                std::string path = witness_path(witness, "branch");
                nlohmann::json j{{"lambda", l.str()}, {"n", n}, {"computed", dec.str()}};
                write_json(path, j);
                throw VerificationFailed("branching rule mismatch; witness " + path);
            }
        };
    });

    auto* claims = app.add_subcommand("claims", "verify the three claims for every generating tableau");
    add_lambda(claims, true);
    claims->add_option("--n", n)->required();
    claims->add_option("--witness", witness, "witness file on failure");
    claims->callback([&] {
        run = [&] {
            auto rep = verify_claims(lambda(), n);
            Table t;
            t.row({"mu", "tableau", "claim1", "claim2", "constant", "claim3", "cancellation", "colstab"});
            auto yn = [](bool b) { return std::string(b ? "ok" : "FAIL"); };
            nlohmann::json failures = nlohmann::json::array();
            for (const auto& r : rep.records) {
                t.row({r.mu.str(), r.tableau, yn(r.in_specht), yn(r.proportional), to_string(r.claim2_constant),
                       yn(r.higher_vanish), yn(r.cancellation), yn(r.colstab_identity)});
                if (!r.ok()) failures.push_back({{"mu", r.mu.str()}, {"tableau", r.tableau}, {"detail", r.witness}});
            }
            t.print(out, format);
            if (!failures.empty()) {
                std::string path = witness_path(witness, "claims");
                write_json(path, failures);
                throw VerificationFailed(std::to_string(failures.size()) + " failing tableaux; witness " + path);
            }
        };
    });

    auto* monotone = app.add_subcommand("monotone", "S_{n+1}-span of iota(V_mu) for mu in leadsto(lambda, n)");
    add_lambda(monotone, true);
    auto* mono_n = monotone->add_option("--n", n, "single n");
    monotone->add_option("--n-max", n_max, "every n from |lambda| to N")->excludes(mono_n);
    monotone->add_option("--witness", witness, "witness file on failure");
    monotone->callback([&] {
        run = [&] {
            Partition l = lambda();
            if (n == 0 && n_max == 0) throw std::invalid_argument("monotone needs --n or --n-max");
            int lo = n_max > 0 ? std::max(l.size(), 1) : n;
            int hi = n_max > 0 ? n_max : n;
            Table t;
            t.row({"n", "mu", "target", "isotypic_dim", "multiplicity", "span"});
            nlohmann::json failures = nlohmann::json::array();
            for (int m = lo; m <= hi; ++m) {
                auto rep = monotonicity_witness(l, m);
                for (const auto& r : rep.records) {
                    t.row({std::to_string(m), r.mu.str(), r.target.str(), std::to_string(r.isotypic_dim),
                           std::to_string(r.target_multiplicity), r.span.str()});
                    if (!r.ok())
                        failures.push_back({{"n", m}, {"mu", r.mu.str()}, {"multiplicity", r.target_multiplicity}});
                }
            }
            t.print(out, format);
            if (!failures.empty()) {
                std::string path = witness_path(witness, "monotone");
                write_json(path, failures);
                throw VerificationFailed("monotonicity fails; witness " + path);
            }
        };
    });

    auto* stable = app.add_subcommand("stable", "check uniform stability of {I_n(V_lambda)}");
    add_lambda(stable, true);
    stable->add_option("--n-max", n_max)->required();
    stable->add_option("--from", from, "N (default 2|lambda|)");
    stable->add_flag("--tabloid", tabloid, "use I_n(M^lambda) instead of I_n(V_lambda)");
    stable->add_flag("--zero-maps", zero_maps, "replace the maps by zero (negative control)");
    stable->add_option("--witness", witness, "witness file on failure");
    stable->callback([&] {
        run = [&] {
            Partition l = lambda();
            int k = l.size();
            int N = from >= 0 ? from : 2 * k;
            int lo = std::max({k, 1, std::min(N, n_max - 1)});
            auto seq = zero_maps ? zero_map_sequence(l, lo, n_max)
                                 : (tabloid ? induced_tabloid_sequence(l, lo, n_max) : induced_specht_sequence(l, lo, n_max));
            auto rep = check_uniform_stability(seq, N);
            out << "lambda\t" << l.str() << "\nrequested\t" << N << "\n" << rep.str();
            if (!rep.ok()) {
                std::string path = witness_path(witness, "stable");
                write_witness(rep, "lambda=" + l.str(), path);
                throw VerificationFailed("not uniformly stable from " + std::to_string(N) + "; witness " + path);
            }
        };
    });

    auto* properties = app.add_subcommand("properties", "seeded property suite for sub/quotient/sum/map sequences");
    properties->add_option("--seed", seed)->required();
    properties->add_option("--count", count)->check(CLI::Range(1, 1000));
    properties->add_option("--n-max", n_max, "window end (default 7)");
    properties->callback([&] {
        run = [&] {
            auto rep = property_suite(seed, count, n_max > 0 ? n_max : 7);
            out << "seed\t" << seed << "\n";
            Table t;
            t.row({"property", "case", "result"});
            for (const auto& c : rep.cases) t.row({c.property, c.label, c.ok ? "ok" : "FAIL"});
            t.print(out, format);
            out << "violations\t" << rep.violations() << "\n";
            if (!rep.ok()) {
                for (const auto& c : rep.cases)
                    if (!c.ok) err << c.label << ":\n" << c.detail << "\n";
                throw VerificationFailed("property violations with seed " + std::to_string(seed));
            }
        };
    });

    auto* ranges = app.add_subcommand("ranges", "propagate affine stable ranges through spectral sequence pages");
    ranges->add_option("--m", m_s, "slope, rational")->required();
    ranges->add_option("--ell", ell)->required();
    ranges->add_option("--pages", pages)->check(CLI::Range(2, 100));
    ranges->callback([&] {
        run = [&] {
            RangeParams params{parse_rational(m_s), ell};
            auto rows = propagate_ranges(params, pages);
            if (format == "pretty") {
                Table t;
                t.row({"page", "stable", "monotone"});
                for (const auto& r : rows) t.row({std::to_string(r.page), r.stable.str(), r.monotone.str()});
                out << "# m=" << params.m << " ell=" << params.ell << "\n";
                t.print(out, format);
            } else {
                out << format_ranges(params, rows);
            }
        };
    });

    auto* arnold = app.add_subcommand("arnold", "cohomology of C_m(R^d): Poincare polynomial and top character");
    arnold->add_option("--m", m_pts)->required()->check(CLI::Range(1, 8));
    arnold->add_option("--d", d_dim)->required()->check(CLI::Range(2, 1000));
    arnold->callback([&] {
        run = [&] {
            out << "poincare\t" << poly_str(poincare_polynomial(m_pts, d_dim)) << "\n";
            const auto& chi = top_character(m_pts, d_dim);
            const auto& parts = partitions_of(m_pts);
            Table t;
            std::vector<std::string> head{"class"}, vals{"top"};
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
                head.push_back(it->str());
                vals.push_back(to_string(chi.at(*it)));
            }
            t.row(head);
            t.row(vals);
            t.print(out, format);
            out << "decomposition\t" << decompose(chi).str() << "\n";
        };
    });

    auto* e2 = app.add_subcommand("e2", "E2 page of C_n(M) as S_n-representations");
    add_manifold(e2);
    e2->add_option("--n", n)->required()->check(CLI::Range(1, 10));
    e2->add_flag("--explicit", explicit_complex, "also build the explicit complex and cross-check");
    e2->callback([&] {
        run = [&] {
            auto M = ManifoldDescriptor::load(manifold);
            auto page = e2_page(M, n);
            std::optional<E2Complex> cx;
            if (explicit_complex) cx.emplace(M, n);
            Table t;
            std::vector<std::string> head{"p", "k", "q", "dim"};
            if (cx) head.push_back("explicit");
            head.push_back("decomposition");
            t.row(head);
            bool agree = true;
            for (const auto& [b, chi] : page) {
                std::vector<std::string> row{std::to_string(b.p), std::to_string(b.k),
                                             std::to_string(b.k * (M.dim() - 1)), to_string(chi.degree())};
                if (cx) {
                    row.push_back(std::to_string(cx->cell_dim(b)));
                    agree = agree && cx->cell_character(b) == chi;
                }
                row.push_back(decompose(chi).str());
                t.row(row);
            }
            t.print(out, format);
            if (!cx) return;
            bool d2 = cx->squares_to_zero();
            out << "characters_agree\t" << (agree ? "yes" : "no") << "\n";
            out << "d_squared_zero\t" << (d2 ? "yes" : "no") << "\n";
            out << "ordered_betti\t" << join(cx->ordered_betti()) << "\n";
            if (!agree || !d2) throw VerificationFailed("explicit complex fails its checks");
        };
    });

    auto* betti = app.add_subcommand("betti", "Betti numbers of the unordered configuration space B_n(M)");
    add_manifold(betti);
    betti->add_option("--n", n)->required()->check(CLI::Range(1, 12));
    betti->add_option("--i", i_deg, "degree (all degrees when omitted)")->check(CLI::NonNegativeNumber);
    betti->callback([&] {
        run = [&] {
            auto M = ManifoldDescriptor::load(manifold);
            if (i_deg >= 0) {
                out << betti_unordered(M, n, i_deg) << "\n";
                return;
            }
            auto all = betti_unordered_all(M, n);
            Table t;
            t.row({"i", "betti"});
            for (std::size_t i = 0; i < all.size(); ++i) t.row({std::to_string(i), std::to_string(all[i])});
            t.print(out, format);
        };
    });

    auto* color = app.add_subcommand("color-betti", "Betti numbers of C_n(M) / (S_mu1 x ... x S_{n-|mu|})");
    add_manifold(color);
    color->add_option("--mu", mu_s)->required();
    color->add_option("--n", n)->required()->check(CLI::Range(1, 12));
    color->add_option("--i", i_deg)->required()->check(CLI::NonNegativeNumber);
    color->callback([&] {
        run = [&] {
            auto M = ManifoldDescriptor::load(manifold);
            out << colored_betti(M, n, i_deg, Partition::parse(mu_s)) << "\n";
        };
    });

    auto* ranges_for = app.add_subcommand("ranges-for", "theoretical stable ranges for a manifold");
    add_manifold(ranges_for);
    ranges_for->add_option("--i", i_deg)->required()->check(CLI::NonNegativeNumber);
    ranges_for->add_option("--mu", mu_s, "colored variant");
    ranges_for->callback([&] {
        run = [&] {
            auto M = ManifoldDescriptor::load(manifold);
            std::optional<Partition> mu;
            if (!mu_s.empty()) mu = Partition::parse(mu_s);
            auto lines = stable_range_report(M, i_deg, mu);
            Table t;
            t.row({"kind", "formula", "bound"});
            for (const auto& l : lines) t.row({l.kind, l.formula, l.bound});
            t.print(out, format);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }
    try {
        run();
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kOk;
}

}  // namespace confstab
