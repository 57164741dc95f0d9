#include "symgen/qsymm/quasisymmetric.hpp"

#include "symgen/core/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace symgen::qsymm {

// ------------------------------------------------------ LinearCombination

LinearCombination::LinearCombination(const Composition& c, const Rational& coeff) { add_term(c, coeff); }

Rational LinearCombination::coefficient(const Composition& c) const {
    const auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinearCombination::add_term(const Composition& c, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
    for (const auto& [c, v] : o.terms_) add_term(c, v);
    return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& o) {
    for (const auto& [c, v] : o.terms_) add_term(c, -v);
    return *this;
}

LinearCombination& LinearCombination::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& t : terms_) t.second *= c;
    return *this;
}

// ------------------------------------------------------------- products

namespace {

using Word = std::vector<int>;
using WordCounts = std::map<Word, Integer>;

// Quasi-shuffle of two words by the first-letter recursion
//   (a u) * (b v) = a (u * bv) + b (au * v) + (a+b) (u * v).
class StuffleTable {
public:
    const WordCounts& get(const Word& u, const Word& v) {
        const auto key = std::make_pair(u, v);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        WordCounts out;
        if (u.empty()) {
            out[v] = 1;
        } else if (v.empty()) {
            out[u] = 1;
        } else {
            const Word u_tail(u.begin() + 1, u.end());
            const Word v_tail(v.begin() + 1, v.end());
            auto prepend = [&out](int letter, const WordCounts& from) {
                for (const auto& [w, k] : from) {
                    Word x;
                    x.reserve(w.size() + 1);
                    x.push_back(letter);
                    x.insert(x.end(), w.begin(), w.end());
                    out[x] += k;
                }
            };
            prepend(u[0], get(u_tail, v));
            prepend(v[0], get(u, v_tail));
            prepend(u[0] + v[0], get(u_tail, v_tail));
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::map<std::pair<Word, Word>, WordCounts> memo_;
};

}  // namespace

QSymmElement quasi_shuffle(const QSymmElement& a, const QSymmElement& b) {
    StuffleTable table;
    LinearCombination out;
    for (const auto& [ca, va] : a.terms())
        for (const auto& [cb, vb] : b.terms())
            for (const auto& [w, k] : table.get(ca.parts(), cb.parts())) out.add_term(Composition(w), va * vb * Rational(k));
    return out;
}

NSymmElement concatenate(const NSymmElement& a, const NSymmElement& b) {
    LinearCombination out;
    for (const auto& [ca, va] : a.terms())
        for (const auto& [cb, vb] : b.terms()) out.add_term(ca.concat(cb), va * vb);
    return out;
}

void CompositionTensor::add(const Composition& left, const Composition& right, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

CompositionTensor deconcatenation_coproduct(const QSymmElement& a) {
    CompositionTensor out;
    for (const auto& [c, v] : a.terms()) {
        const auto& p = c.parts();
        for (std::size_t cut = 0; cut <= p.size(); ++cut)
            out.add(Composition(std::vector<int>(p.begin(), p.begin() + static_cast<long>(cut))),
                    Composition(std::vector<int>(p.begin() + static_cast<long>(cut), p.end())), v);
    }
    return out;
}

CompositionTensor quasi_shuffle(const CompositionTensor& a, const CompositionTensor& b) {
    CompositionTensor out;
    for (const auto& [ka, va] : a.terms) {
        for (const auto& [kb, vb] : b.terms) {
            const QSymmElement left = quasi_shuffle(QSymmElement(ka.first), QSymmElement(kb.first));
            const QSymmElement right = quasi_shuffle(QSymmElement(ka.second), QSymmElement(kb.second));
            for (const auto& [l, lv] : left.terms())
                for (const auto& [r, rv] : right.terms()) out.add(l, r, va * vb * lv * rv);
        }
    }
    return out;
}

Rational pairing(const NSymmElement& a, const QSymmElement& x) {
    Rational total = 0;
    for (const auto& [c, v] : a.terms()) total += v * x.coefficient(c);
    return total;
}

Rational pairing(const NSymmElement& a, const NSymmElement& b, const CompositionTensor& t) {
    Rational total = 0;
    for (const auto& [k, v] : t.terms) total += v * a.coefficient(k.first) * b.coefficient(k.second);
    return total;
}

QSymmElement symm_into_qsymm(const symm::SymmFn& f) {
    const symm::SymmFn m = symm::convert(f, symm::SymmBasis::M);
    LinearCombination out;
    for (const auto& [mono, c] : m.value.terms()) {
        std::vector<int> parts = symm::partition_of(mono).parts();
        std::sort(parts.begin(), parts.end());
        do {
            out.add_term(Composition(parts), c);
        } while (std::next_permutation(parts.begin(), parts.end()));
    }
    // the unit m_() = 1 maps to M_()
    return out;
}

symm::SymmFn abelianize(const NSymmElement& a) {
    Polynomial out;
    for (const auto& [c, v] : a.terms()) {
        std::vector<Monomial::Factor> factors;
        for (int letter : c.parts()) factors.emplace_back(symm::generator(symm::SymmBasis::H, letter), 1);
        out.add_term(Monomial::from_factors(std::move(factors)), v);
    }
    return {symm::SymmBasis::H, out};
}

// ------------------------------------------------------- generator profile

GeneratorProfile GeneratorProfile::progression(int first, int step) {
    if (first < 1 || step < 1) throw Error("invalid-profile", "profile weights must be positive");
    GeneratorProfile p;
    p.first_ = first;
    p.step_ = step;
    return p;
}

GeneratorProfile GeneratorProfile::explicit_weights(std::vector<int> weights) {
    if (weights.empty()) throw Error("invalid-profile", "generator profile must be nonempty");
    for (int w : weights)
        if (w < 1) throw Error("invalid-profile", "profile weights must be positive");
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    GeneratorProfile p;
    p.explicit_ = std::move(weights);
    return p;
}

GeneratorProfile GeneratorProfile::parse(std::string_view text) {
    const std::string s(text);
    if (s == "all") return all_positive();
    if (s == "odd3") return progression(3, 2);
    if (s == "ko") return progression(5, 4);
    if (s.rfind("ap:", 0) == 0) {
        const auto colon = s.find(':', 3);
        if (colon == std::string::npos) throw Error("invalid-profile", "expected ap:<first>:<step>");
        try {
            return progression(std::stoi(s.substr(3, colon - 3)), std::stoi(s.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw Error("invalid-profile", "malformed profile '" + s + "'");
        }
    }
    try {
        return explicit_weights(parse_composition(s).parts());
    } catch (const Error&) {
        throw Error("invalid-profile", "unknown generator profile '" + s + "'");
    }
}

std::vector<int> GeneratorProfile::letters_up_to(int n) const {
    std::vector<int> out;
    if (!explicit_.empty()) {
        for (int w : explicit_)
            if (w <= n) out.push_back(w);
        return out;
    }
    for (int w = first_; w <= n; w += step_) out.push_back(w);
    return out;
}

bool GeneratorProfile::contains(int weight) const {
    if (!explicit_.empty()) return std::binary_search(explicit_.begin(), explicit_.end(), weight);
    return weight >= first_ && (weight - first_) % step_ == 0;
}

std::string GeneratorProfile::describe() const {
    if (!explicit_.empty()) return to_string(Composition(explicit_));
    return "ap:" + std::to_string(first_) + ":" + std::to_string(step_);
}

// ------------------------------------------------------------------ Lyndon

bool is_lyndon(const Composition& word) {
    const auto& w = word.parts();
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<int> rotation(w.begin() + static_cast<long>(i), w.end());
        rotation.insert(rotation.end(), w.begin(), w.begin() + static_cast<long>(i));
        if (!(w < rotation)) return false;
    }
    return true;
}

std::vector<Composition> lyndon_generators(int n, const GeneratorProfile& profile) {
    if (n < 1) throw Error("invalid-bound", "Lyndon weight must be at least 1");
    const std::vector<int> letters = profile.letters_up_to(n);
    std::vector<Composition> out;
    std::vector<int> word;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            Composition c(word);
            if (is_lyndon(c)) out.push_back(std::move(c));
            return;
        }
        for (int letter : letters) {
            if (letter > remaining) break;
            // a Lyndon word starts with its smallest letter
            if (!word.empty() && letter < word.front()) continue;
            word.push_back(letter);
            rec(remaining - letter);
            word.pop_back();
        }
    };
    rec(n);
    return out;
}

HilbertFlavor flavor_from_name(const std::string& name) {
    if (name == "associative") return HilbertFlavor::Associative;
    if (name == "lie") return HilbertFlavor::Lie;
    if (name == "polynomial-on-lyndon" || name == "polynomial") return HilbertFlavor::PolynomialOnLyndon;
    throw Error("invalid-argument", "unknown Hilbert series flavor '" + name + "'");
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

std::vector<Integer> word_counts(const GeneratorProfile& profile, int bound) {
    std::vector<Integer> a(static_cast<std::size_t>(bound) + 1, 0);
    a[0] = 1;
    const auto letters = profile.letters_up_to(bound);
    for (int n = 1; n <= bound; ++n)
        for (int l : letters)
            if (l <= n) a[n] += a[n - l];
    return a;
}

}  // namespace

std::vector<Integer> free_algebra_hilbert(const GeneratorProfile& profile, int bound, HilbertFlavor flavor) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    const std::size_t size = static_cast<std::size_t>(bound) + 1;
    switch (flavor) {
        case HilbertFlavor::Associative: return word_counts(profile, bound);
        case HilbertFlavor::Lie: {
            // log H(t) = sum_m L_m t^m, and m g_m = sum_{d|m} mu(m/d) d L_d
            const auto h = word_counts(profile, bound);
            std::vector<Rational> log(size, Rational(0));
            for (int k = 1; k <= bound; ++k) {
                Rational acc = Rational(h[k]) * k;
                for (int j = 1; j < k; ++j) acc -= log[j] * j * Rational(h[k - j]);
                log[k] = acc / k;
            }
            std::vector<Integer> g(size, 0);
            for (int m = 1; m <= bound; ++m) {
                Rational acc = 0;
                for (int d = 1; d <= m; ++d)
                    if (m % d == 0) acc += Rational(mobius(m / d)) * d * log[d];
                acc /= m;
                if (acc.get_den() != 1) throw Error("internal", "non-integral Lie dimension");
                g[m] = acc.get_num();
            }
            return g;
        }
        case HilbertFlavor::PolynomialOnLyndon: {
            // prod_n (1 - t^n)^{-g_n}
            std::vector<Integer> series(size, 0);
            series[0] = 1;
            for (int n = 1; n <= bound; ++n) {
                const std::size_t gens = lyndon_generators(n, profile).size();
                for (std::size_t copy = 0; copy < gens; ++copy)
                    for (int k = n; k <= bound; ++k) series[k] += series[k - n];
            }
            return series;
        }
    }
    return {};
}

// -------------------------------------------------------------------- text

QSymmElement parse_qsymm(std::string_view text) {
    LinearCombination out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> Error {
        return Error("parse", what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    skip();
    if (pos == text.size()) throw fail("empty element");
    bool first = true;
    while (pos < text.size()) {
        Rational sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff = 1;
        bool has_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            coeff = parse_rational(text.substr(start, pos - start));
            has_number = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                has_number = false;
            }
        }
        Composition c;
        if (!has_number) {
            if (pos < text.size() && text[pos] == 'M') ++pos;
            if (pos >= text.size() || text[pos] != '(') throw fail("expected composition");
            const std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) throw fail("unbalanced parenthesis");
            c = parse_composition(text.substr(pos, close - pos + 1));
            pos = close + 1;
        }
        out.add_term(c, sign * coeff);
        skip();
    }
    return out;
}

std::string to_string(const LinearCombination& a, char symbol) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [c, v] : a.terms()) {
        const bool negative = v < 0;
        const Rational mag = abs(v);
        s += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (c.empty()) {
            s += symgen::to_string(mag);
            continue;
        }
        if (mag != 1) s += symgen::to_string(mag) + "*";
        s += symbol + symgen::to_string(c);
    }
    return s;
}

}  // namespace symgen::qsymm
