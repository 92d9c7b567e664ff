#include "gcdheight/ideal.hpp"

#include "gcdheight/error.hpp"
#include "gcdheight/interpolation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace gcdheight {

Ideal::Ideal(int nvars, std::vector<Poly> generators) : nvars_(nvars), cache_(std::make_shared<Cache>()) {
    if (nvars < 1) throw Error(ErrorKind::Domain, "Ideal: nvars must be positive");
    for (auto& g : generators) {
        if (g.nvars() != nvars)
            throw Error(ErrorKind::Domain, "Ideal: generator has " + std::to_string(g.nvars()) +
                                               " variables, expected " + std::to_string(nvars));
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw Error(ErrorKind::Domain, "Ideal: generator is not homogeneous: " + to_string(g));
        gens_.push_back(std::move(g));
    }
}

int Ideal::max_generator_degree() const {
    int out = 0;
    for (const auto& g : gens_) out = std::max(out, *g.degree());
    return out;
}

int Ideal::min_generator_degree() const {
    if (gens_.empty()) return 0;
    int out = *gens_.front().degree();
    for (const auto& g : gens_) out = std::min(out, *g.degree());
    return out;
}

const std::vector<Poly>& Ideal::groebner() const {
    std::call_once(cache_->once, [this] { cache_->basis = compute_groebner(gens_); });
    return cache_->basis;
}

void validate(const GeomProfile& p) {
    if (p.c != p.n - p.d) throw Error(ErrorKind::InvalidProfile, "profile: c != n - d");
    if (p.c < 2)
        throw Error(ErrorKind::InvalidProfile,
                    "profile: codimension " + std::to_string(p.c) + " < 2 (the GCD height needs c >= 2)");
    if (p.degY < 1) throw Error(ErrorKind::InvalidProfile, "profile: degY must be >= 1");
    if (p.eY != 1) throw Error(ErrorKind::InvalidProfile, "profile: only eY = 1 is supported on P^n");
}

Ideal ideal_power(const Ideal& ideal, int r) {
    if (r < 1) throw Error(ErrorKind::Domain, "ideal_power: r must be >= 1");
    if (r == 1) return ideal;
    const auto& gens = ideal.generators();
    std::vector<Poly> out;
    std::unordered_set<std::string> seen;
    if (gens.empty()) return Ideal(ideal.nvars(), {});
    // Multisets of size r as non-decreasing index sequences, in lexicographic order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    for (;;) {
        Poly prod = gens[idx[0]];
        for (std::size_t k = 1; k < idx.size(); ++k) prod = prod * gens[idx[k]];
        if (seen.insert(to_string(prod)).second) out.push_back(std::move(prod));
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[k - 1];
    }
    return Ideal(ideal.nvars(), std::move(out));
}

// ---------------------------------------------------------------------------
// Graded pieces

namespace {

struct IntegerForm {
    std::vector<std::pair<Monomial, BigInt>> terms;  // decreasing grevlex
    int degree;
};

IntegerForm integer_form(const Poly& g) {
    Poly p = g.primitive();
    IntegerForm out{{}, *p.degree()};
    for (const auto& [m, c] : p.terms()) out.terms.emplace_back(m, c.get_num());
    return out;
}

template <typename Fn>
void for_each_product(const Ideal& ideal, int m, Fn&& fn) {
    for (const auto& g : ideal.generators()) {
        IntegerForm f = integer_form(g);
        if (f.degree > m) continue;
        for (const Monomial& mu : graded_monomials(ideal.nvars(), m - f.degree)) fn(f, mu);
    }
}

using MonomialIndex = std::map<Monomial, std::size_t, GrevlexGreater>;

MonomialIndex index_of(const std::vector<Monomial>& monomials) {
    MonomialIndex index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace_hint(index.end(), monomials[i], i);
    return index;
}

}  // namespace

Poly GradedPiece::to_poly(const SparseEchelon::Vec& v, int nvars) const {
    Poly::TermMap terms;
    for (const auto& [i, c] : v) terms.emplace(monomials[i], Rat(c));
    return Poly(nvars, std::move(terms));
}

GradedPiece graded_piece(const Ideal& ideal, int m) {
    if (m < 0) throw Error(ErrorKind::Domain, "graded_piece: degree must be >= 0");
    GradedPiece piece;
    piece.degree = m;
    piece.monomials = graded_monomials(ideal.nvars(), m);
    MonomialIndex index = index_of(piece.monomials);
    for_each_product(ideal, m, [&](const IntegerForm& f, const Monomial& mu) {
        if (piece.echelon.rank() == piece.monomials.size()) return;
        SparseEchelon::Vec v;
        v.reserve(f.terms.size());
        // Multiplication by mu preserves the monomial order, so indices ascend.
        for (const auto& [mono, c] : f.terms) v.emplace_back(index.at(mono * mu), c);
        piece.echelon.insert(std::move(v));
    });
    return piece;
}

ExactMatrix graded_piece_matrix(const Ideal& ideal, int m) {
    auto monomials = graded_monomials(ideal.nvars(), m);
    MonomialIndex index = index_of(monomials);
    std::vector<std::vector<std::pair<std::size_t, BigInt>>> columns;
    for_each_product(ideal, m, [&](const IntegerForm& f, const Monomial& mu) {
        std::vector<std::pair<std::size_t, BigInt>> col;
        for (const auto& [mono, c] : f.terms) col.emplace_back(index.at(mono * mu), c);
        columns.push_back(std::move(col));
    });
    ExactMatrix out(monomials.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, c] : columns[j]) out(i, j) = c;
    return out;
}

std::size_t graded_piece_dim(const Ideal& ideal, int m) { return graded_piece(ideal, m).echelon.rank(); }

std::size_t quotient_dim(const Ideal& ideal, int m) {
    if (m < 0) throw Error(ErrorKind::Domain, "quotient_dim: degree must be >= 0");
    BigInt total = binomial(ideal.n() + m, ideal.n());
    return total.get_ui() - graded_piece_dim(ideal, m);
}

// ---------------------------------------------------------------------------
// Groebner bases

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
    Poly rem(f.nvars());
    Poly p = f;
    while (!p.is_zero()) {
        const Monomial lm = p.leading_monomial();
        const Rat lc = p.leading_coefficient();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            p.sub_mul(lc / g.leading_coefficient(), lm / g.leading_monomial(), g);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += Poly::monomial(lm, lc);
            p -= Poly::monomial(lm, lc);
        }
    }
    return rem;
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Poly out = f.mul_term(1 / f.leading_coefficient(), l / f.leading_monomial());
    out.sub_mul(1 / g.leading_coefficient(), l / g.leading_monomial(), g);
    return out;
}

}  // namespace

std::vector<Poly> compute_groebner(const std::vector<Poly>& generators) {
    std::vector<Poly> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {};

    // Pending pairs ordered by (degree of lcm, j, i): the normal selection strategy.
    using Key = std::tuple<int, std::size_t, std::size_t>;
    std::set<Key> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        int deg = lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).degree();
        queue.emplace(deg, j, i);
        pending.emplace(i, j);
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!queue.empty()) {
        auto [deg, j, i] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        if (li.coprime(lj)) continue;
        Monomial l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            chain = basis[k].leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k);
        }
        if (chain) continue;
        Poly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        const std::size_t fresh = basis.size() - 1;
        for (std::size_t k = 0; k < fresh; ++k) add_pair(k, fresh);
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == i) continue;
            const Monomial& lk = basis[k].leading_monomial();
            const Monomial& li = basis[i].leading_monomial();
            if (lk.divides(li) && (lk != li || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Interreduce tails.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        reduced.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
        return grevlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

bool membership(const Poly& f, const Ideal& ideal) {
    if (f.nvars() != ideal.nvars()) throw Error(ErrorKind::Domain, "membership: variable count mismatch");
    if (f.is_zero()) return true;
    if (ideal.is_zero()) return false;
    return normal_form(f, ideal.groebner()).is_zero();
}

std::size_t standard_monomial_count(const Ideal& ideal, int m) {
    const auto& basis = ideal.groebner();
    std::size_t count = 0;
    for (const Monomial& mu : graded_monomials(ideal.nvars(), m)) {
        bool standard = std::none_of(basis.begin(), basis.end(),
                                     [&](const Poly& g) { return g.leading_monomial().divides(mu); });
        if (standard) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Hilbert polynomial

GeomProfile hilbert_profile(const Ideal& ideal, const ProfileOptions& options) {
    const int n = ideal.n();
    const int m0 = options.window_start.value_or(ideal.max_generator_degree() * options.r_context + n + 1);
    if (m0 < 0) throw Error(ErrorKind::Domain, "hilbert_profile: window start must be >= 0");

    std::vector<BigInt> values;
    for (int m = m0; m <= m0 + n + 1; ++m) values.emplace_back(static_cast<unsigned long>(quotient_dim(ideal, m)));

    if (std::all_of(values.begin(), values.end(), [](const BigInt& v) { return v == 0; }))
        throw Error(ErrorKind::EmptySubscheme, "hilbert_profile: quotient is zero on the window [" +
                                                   std::to_string(m0) + ", " + std::to_string(m0 + n + 1) +
                                                   "]; the ideal defines the empty subscheme");

    const std::span<const BigInt> all(values);
    auto first = interpolate_consecutive(m0, all.first(static_cast<std::size_t>(n + 1)));
    auto second = interpolate_consecutive(m0 + 1, all.subspan(1));
    if (first != second)
        throw Error(ErrorKind::WindowInstability,
                    "hilbert_profile: Hilbert function not yet polynomial at window start " + std::to_string(m0) +
                        "; raise the window start");
    if (first.empty()) throw Error(ErrorKind::EmptySubscheme, "hilbert_profile: Hilbert polynomial is zero");

    GeomProfile p;
    p.n = n;
    p.d = static_cast<int>(first.size()) - 1;
    p.c = n - p.d;
    Rat deg = first.back() * Rat(factorial(p.d));
    if (deg.get_den() != 1) throw Error(ErrorKind::WindowInstability, "hilbert_profile: non-integral degree");
    p.degY = deg.get_num();
    p.eY = 1;
    p.hilbert_polynomial = std::move(first);
    p.window_start = m0;
    return p;
}

// ---------------------------------------------------------------------------
// Ideal files

Ideal parse_ideal(std::string_view text) {
    std::optional<int> nvars;
    std::vector<Poly> gens;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        offset = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first);
        line = line.substr(0, line.find_last_not_of(" \t\r") + 1);

        try {
            if (!nvars) {
                auto eq = line.find('=');
                std::string key(line.substr(0, eq == std::string_view::npos ? line.size() : eq));
                key.erase(key.find_last_not_of(" \t") + 1);
                if (eq == std::string_view::npos || key != "nvars")
                    throw SyntaxError("expected 'nvars = <k>'", 0);
                std::string value(line.substr(eq + 1));
                std::size_t used = 0;
                int k = 0;
                try {
                    k = std::stoi(value, &used);
                } catch (const std::exception&) {
                    throw SyntaxError("invalid nvars value", eq + 1);
                }
                if (value.find_first_not_of(" \t", used) != std::string::npos || k < 1)
                    throw SyntaxError("invalid nvars value", eq + 1);
                nvars = k;
                continue;
            }
            gens.push_back(parse_poly(line, *nvars));
        } catch (const SyntaxError& e) {
            throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.kind() == ErrorKind::Domain ? ErrorKind::Syntax : e.kind(),
                        "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!nvars) throw Error(ErrorKind::Syntax, "ideal file: missing 'nvars = <k>' line");
    try {
        return Ideal(*nvars, std::move(gens));
    } catch (const Error& e) {
        throw Error(ErrorKind::Syntax, std::string("ideal file: ") + e.what());
    }
}

Ideal read_ideal_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open ideal file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal(ss.str());
}

std::string to_ideal_text(const Ideal& ideal) {
    std::string out = "nvars = " + std::to_string(ideal.nvars()) + "\n";
    for (const auto& g : ideal.generators()) out += to_string(g) + "\n";
    return out;
}

}  // namespace gcdheight
