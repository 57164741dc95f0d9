#include "symgen/core/polynomial.hpp"

#include "symgen/core/error.hpp"

#include <algorithm>
#include <cctype>

namespace symgen {

std::string to_string(const Generator& g) {
    return std::string(1, g.family) + "[" + std::to_string(g.index) + "]";
}

int index_grading(char /*family*/, int index) { return index; }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Generator& g, int exponent) {
    if (g.degree <= 0) throw Error("invalid-generator", "generator " + to_string(g) + " must have positive degree");
    if (exponent < 0) throw Error("invalid-monomial", "negative exponent");
    if (exponent > 0) factors_.emplace_back(g, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [g, e] : factors) {
        if (e < 0) throw Error("invalid-monomial", "negative exponent");
        if (g.degree <= 0) throw Error("invalid-generator", "generator " + to_string(g) + " must have positive degree");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == g)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(g, e);
    }
    return m;
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (const auto& [g, e] : factors_) d += g.degree * e;
    return d;
}

int Monomial::length() const noexcept {
    int n = 0;
    for (const auto& f : factors_) n += f.second;
    return n;
}

int Monomial::exponent(const Generator& g) const noexcept {
    for (const auto& [h, e] : factors_)
        if (h == g) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& [g, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += to_string(g);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
    if (coeff != 0) terms_.emplace(m, coeff);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<int> Polynomial::max_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = std::max(d.value_or(0), m.degree());
    return d;
}

bool Polynomial::is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) { return t.first.degree() == degree; });
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    return filtered([degree](const Monomial& m) { return m.degree() == degree; });
}

Polynomial Polynomial::filtered(const std::function<bool(const Monomial&)>& keep) const {
    Polynomial out;
    for (const auto& t : terms_)
        if (keep(t.first)) out.terms_.insert(out.terms_.end(), t);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::add_product(const Rational& c, const Monomial& m, const Polynomial& p) {
    if (c == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(m * pm, c * pc);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [am, ac] : a.terms_)
        for (const auto& [bm, bc] : b.terms_) out.add_term(am * bm, ac * bc);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<Generator, Polynomial>& images) const {
    std::map<std::pair<Generator, int>, Polynomial> power_cache;
    auto power_of = [&](const Generator& g, int e) -> const Polynomial& {
        auto key = std::make_pair(g, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end()) it = power_cache.emplace(key, images.at(g).pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> kept;
        Polynomial term{c};
        for (const auto& [g, e] : m.factors()) {
            if (images.count(g))
                term = term * power_of(g, e);
            else
                kept.emplace_back(g, e);
        }
        out.add_product(Rational(1), Monomial::from_factors(std::move(kept)), term);
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (m.is_unit())
            s += to_string(mag);
        else if (mag == 1)
            s += to_string(m);
        else
            s += to_string(mag) + "*" + to_string(m);
    }
    return s;
}

// ------------------------------------------------------------------ parser

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const Grading& grading) : text_(text), grading_(grading) {}

    Polynomial parse() {
        Polynomial out;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, mono] = parse_term();
            out.add_term(mono, sign * coeff);
            skip_space();
        }
        return out;
    }

private:
    std::pair<Rational, Monomial> parse_term() {
        Rational coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_number();
            skip_space();
            if (peek() != '*') return {coeff, Monomial{}};
            ++pos_;
            skip_space();
        }
        while (need_factor) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else {
                factors.push_back(parse_factor());
            }
            skip_space();
            need_factor = peek() == '*';
            if (need_factor) {
                ++pos_;
                skip_space();
            }
        }
        return {coeff, Monomial::from_factors(std::move(factors))};
    }

    Rational parse_number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    Monomial::Factor parse_factor() {
        const char family = peek();
        if (!std::isalpha(static_cast<unsigned char>(family))) fail("expected generator");
        ++pos_;
        if (peek() != '[') fail("expected '[' after generator family");
        ++pos_;
        const int index = parse_int();
        if (peek() != ']') fail("expected ']'");
        ++pos_;
        int exponent = 1;
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            exponent = parse_int();
        }
        const int degree = grading_(family, index);
        if (degree <= 0) fail("generator has non-positive degree");
        return {Generator{degree, family, index}, exponent};
    }

    int parse_int() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse", what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    const Grading& grading_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Grading& grading) {
    return PolynomialParser(text, grading).parse();
}

}  // namespace symgen
