#include "gcdheight/poly.hpp"

#include "gcdheight/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gcdheight {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(int nvars, int index) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exps_[i];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    // Equal degree: the monomial with the smaller exponent in the last
    // differing variable is larger.
    for (std::size_t i = a.exponents().size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

Poly::Poly(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial::one(nvars), c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p(m.nvars());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    // Grevlex is graded, so the leading monomial has maximal degree.
    return terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return is_homogeneous_of(*degree());
}

bool Poly::is_homogeneous_of(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& kv) { return kv.first.degree() == degree; });
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / leading_coefficient();
    return *this * inv;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1;
    BigInt num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& kv : out.terms_) kv.second = -kv.second;
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

void Poly::sub_mul(const Rat& c, const Monomial& mono, const Poly& other) {
    for (const auto& [m, k] : other.terms_) add_term(mono * m, -(c * k));
}

Poly Poly::mul_term(const Rat& c, const Monomial& mono) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, c * k);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    Poly parse() {
        skip_ws();
        if (pos_ == text_.size()) throw SyntaxError("empty polynomial expression", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        BigInt e = digits("exponent");
        if (e > kMaxExponent) throw SyntaxError("exponent too large", start);
        Poly out = Poly::constant(nvars_, 1);
        for (unsigned long i = 0; i < e.get_ui(); ++i) out = out * base;
        return out;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        if (c == 'x') {
            std::size_t start = pos_++;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError("expected variable index after 'x'", pos_);
            BigInt idx = digits("variable index");
            if (idx >= nvars_)
                throw Error(ErrorKind::Domain, "variable x" + idx.get_str() + " out of range for " +
                                                   std::to_string(nvars_) + " variables at position " +
                                                   std::to_string(start));
            return Poly::variable(nvars_, static_cast<int>(idx.get_si()));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = digits("number");
            BigInt den = 1;
            // p/q is a single rational literal; '/' is not a general operator.
            if (pos_ < text_.size() && text_[pos_] == '/') {
                std::size_t slash = pos_++;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw SyntaxError("expected denominator", pos_);
                den = digits("denominator");
                if (den == 0) throw SyntaxError("zero denominator", slash);
            }
            Rat q(num, den);
            q.canonicalize();
            return Poly::constant(nvars_, q);
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    BigInt digits(const char* what) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(std::string("expected ") + what, pos_);
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    static constexpr unsigned kMaxExponent = 512;

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

void append_monomial(std::ostringstream& os, const Monomial& m) {
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << i;
        if (e > 1) os << '^' << e;
    }
}

template <typename Int>
Rat eval_impl(const Poly& f, std::span<const Int> coords) {
    if (coords.size() != static_cast<std::size_t>(f.nvars()))
        throw Error(ErrorKind::Domain, "eval_poly: expected " + std::to_string(f.nvars()) + " coordinates, got " +
                                           std::to_string(coords.size()));
    Rat acc = 0;
    BigInt value;
    BigInt power;
    for (const auto& [m, c] : f.terms()) {
        value = 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (m[i] == 0) continue;
            BigInt base(coords[i]);
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m[i]));
            value *= power;
        }
        acc += c * value;
    }
    return acc;
}

}  // namespace

Poly parse_poly(std::string_view text, int nvars) {
    if (nvars < 1) throw Error(ErrorKind::Domain, "parse_poly: nvars must be positive");
    return Parser(text, nvars).parse();
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.degree() == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        append_monomial(os, m);
    }
    return os.str();
}

Rat eval_poly(const Poly& f, std::span<const BigInt> coords) { return eval_impl(f, coords); }

Rat eval_poly(const Poly& f, std::span<const long> coords) { return eval_impl(f, coords); }

std::vector<Monomial> graded_monomials(int nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars <= 0 || degree < 0) return out;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    // Enumerate compositions of `degree` into nvars parts.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = remaining;
            out.emplace_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, remaining - k);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

}  // namespace gcdheight
