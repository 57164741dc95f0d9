#include "symgen/core/error.hpp"
#include "symgen/core/linalg.hpp"
#include "symgen/symm/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace symgen::symm {

char family(SymmBasis basis) {
    switch (basis) {
        case SymmBasis::E: return 'c';
        case SymmBasis::P: return 'N';
        case SymmBasis::H: return 'h';
        case SymmBasis::M: return 'm';
    }
    return '?';
}

SymmBasis basis_from_name(const std::string& name) {
    if (name == "E" || name == "e" || name == "c") return SymmBasis::E;
    if (name == "P" || name == "p" || name == "N") return SymmBasis::P;
    if (name == "H" || name == "h") return SymmBasis::H;
    if (name == "M" || name == "m") return SymmBasis::M;
    throw Error("invalid-basis", "unknown symmetric-function basis '" + name + "'");
}

std::string basis_name(SymmBasis basis) {
    switch (basis) {
        case SymmBasis::E: return "E";
        case SymmBasis::P: return "P";
        case SymmBasis::H: return "H";
        case SymmBasis::M: return "M";
    }
    return "?";
}

int symm_grading(char /*family*/, int index) { return index; }

Monomial basis_monomial(SymmBasis basis, const Partition& lambda) {
    std::vector<Monomial::Factor> factors;
    for (int part : lambda.parts()) factors.emplace_back(generator(basis, part), 1);
    return Monomial::from_factors(std::move(factors));
}

Partition partition_of(const Monomial& m) {
    std::vector<int> parts;
    for (const auto& [g, e] : m.factors())
        for (int i = 0; i < e; ++i) parts.push_back(g.index);
    return Partition(parts);
}

namespace {

bool multiplicative(SymmBasis b) { return b != SymmBasis::M; }

Polynomial gen(SymmBasis b, int i) { return Polynomial::generator(generator(b, i)); }

// Image of generator n of `from` written in `to`, both multiplicative.
// Newton / Girard recurrences; e_0 = h_0 = 1.
class GeneratorImages {
public:
    Polynomial image(SymmBasis from, SymmBasis to, int n) {
        std::lock_guard lock(mutex_);
        auto& table = tables_[{from, to}];
        if (table.empty()) table.emplace_back(Rational(1));
        while (static_cast<int>(table.size()) <= n) table.push_back(next(from, to, table));
        return table[static_cast<std::size_t>(n)];
    }

private:
    static Polynomial next(SymmBasis from, SymmBasis to, const std::vector<Polynomial>& t) {
        const int n = static_cast<int>(t.size());
        Polynomial out;
        using B = SymmBasis;
        if (from == to) return gen(to, n);
        if (from == B::P && to == B::E) {
            // p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
            for (int i = 1; i < n; ++i) out.add_product(Rational(i % 2 ? 1 : -1), Monomial(generator(to, i)), t[n - i]);
            out.add_term(Monomial(generator(to, n)), Rational(n % 2 ? n : -n));
        } else if (from == B::E && to == B::P) {
            // n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}
            for (int i = 1; i <= n; ++i) out.add_product(Rational(i % 2 ? 1 : -1, n), Monomial(generator(to, i)), t[n - i]);
        } else if (from == B::H && to == B::P) {
            // n h_n = sum_{i=1}^{n} p_i h_{n-i}
            for (int i = 1; i <= n; ++i) out.add_product(Rational(1, n), Monomial(generator(to, i)), t[n - i]);
        } else if (from == B::P && to == B::H) {
            // p_n = n h_n - sum_{i=1}^{n-1} p_i h_{n-i}
            out.add_term(Monomial(generator(to, n)), Rational(n));
            for (int i = 1; i < n; ++i) out -= t[i] * gen(to, n - i);
        } else if ((from == B::H && to == B::E) || (from == B::E && to == B::H)) {
            // h_n = sum_{i=1}^{n} (-1)^{i-1} e_i h_{n-i}, and symmetrically
            for (int i = 1; i <= n; ++i) out.add_product(Rational(i % 2 ? 1 : -1), Monomial(generator(to, i)), t[n - i]);
        } else {
            throw Error("internal", "no generator recurrence between these bases");
        }
        return out;
    }

    std::mutex mutex_;
    std::map<std::pair<SymmBasis, SymmBasis>, std::vector<Polynomial>> tables_;
};

GeneratorImages& images() {
    static GeneratorImages instance;
    return instance;
}

Polynomial convert_multiplicative(const Polynomial& f, SymmBasis from, SymmBasis to) {
    std::map<Generator, Polynomial> subst;
    for (const auto& [m, c] : f.terms())
        for (const auto& [g, e] : m.factors())
            if (!subst.count(g)) subst.emplace(g, images().image(from, to, g.index));
    return f.substitute(subst);
}

// ---- monomial basis -------------------------------------------------------

using MCoords = std::map<Partition, Rational>;

Partition strip(std::vector<int> v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return Partition(v);
}

// Number of exponent vectors beta of the generator x_r (x in {e,h,p}) with
// beta <= nu entrywise and nu - beta a rearrangement of mu. This is the
// coefficient of m_nu in x_r * m_mu.
long count_placements(SymmBasis basis, int r, const std::vector<int>& nu, const Partition& mu) {
    long count = 0;
    std::vector<int> rest = nu;
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
        if (pos == rest.size()) {
            if (remaining == 0 && strip(rest) == mu) ++count;
            return;
        }
        const int cap = rest[pos];
        std::vector<int> choices;
        switch (basis) {
            case SymmBasis::E:
                choices = {0};
                if (remaining > 0 && cap >= 1) choices.push_back(1);
                break;
            case SymmBasis::P:
                choices = {0};
                if (remaining == r && cap >= r) choices.push_back(r);
                break;
            case SymmBasis::H:
                for (int b = 0; b <= std::min(cap, remaining); ++b) choices.push_back(b);
                break;
            case SymmBasis::M: break;
        }
        for (int b : choices) {
            rest[pos] -= b;
            rec(pos + 1, remaining - b);
            rest[pos] += b;
        }
    };
    rec(0, r);
    return count;
}

MCoords multiply_generator_in_m(const MCoords& f, SymmBasis basis, int r) {
    MCoords out;
    for (const auto& [mu, c] : f) {
        for (const auto& nu : partitions_of(mu.weight() + r)) {
            if (nu.length() > mu.length() + static_cast<std::size_t>(r)) continue;
            const long k = count_placements(basis, r, nu.parts(), mu);
            if (k == 0) continue;
            auto& slot = out[nu];
            slot += c * Rational(k);
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

MCoords monomial_in_m(SymmBasis basis, const Monomial& m) {
    MCoords acc{{Partition{}, Rational(1)}};
    for (const auto& [g, e] : m.factors())
        for (int i = 0; i < e; ++i) acc = multiply_generator_in_m(acc, basis, g.index);
    return acc;
}

Polynomial to_m(const Polynomial& f, SymmBasis from) {
    Polynomial out;
    for (const auto& [m, c] : f.terms())
        for (const auto& [lambda, k] : monomial_in_m(from, m)) out.add_term(basis_monomial(SymmBasis::M, lambda), c * k);
    return out;
}

// Writes m_mu, mu |- weight, in a multiplicative basis by inverting the
// transition matrix to M.
class MonomialInverse {
public:
    const std::map<Partition, Polynomial>& table(SymmBasis to, int weight) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(to, weight);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const auto parts = partitions_of(weight);
        std::map<Partition, std::size_t> row_of;
        for (std::size_t i = 0; i < parts.size(); ++i) row_of[parts[i]] = i;
        RationalMatrix a(parts.size(), std::vector<Rational>(parts.size(), Rational(0)));
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (const auto& [mu, c] : monomial_in_m(to, basis_monomial(to, parts[j]))) a[row_of.at(mu)][j] = c;
        std::map<Partition, Polynomial> result;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<Rational> rhs(parts.size(), Rational(0));
            rhs[i] = 1;
            const auto x = solve(a, rhs, parts.size());
            if (x.empty()) throw Error("internal", "singular transition matrix to M");
            Polynomial p;
            for (std::size_t j = 0; j < parts.size(); ++j) p.add_term(basis_monomial(to, parts[j]), x[j]);
            result.emplace(parts[i], std::move(p));
        }
        return cache_.emplace(key, std::move(result)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<SymmBasis, int>, std::map<Partition, Polynomial>> cache_;
};

MonomialInverse& monomial_inverse() {
    static MonomialInverse instance;
    return instance;
}

Polynomial from_m(const Polynomial& f, SymmBasis to) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        const Partition lambda = partition_of(m);
        Polynomial image = monomial_inverse().table(to, lambda.weight()).at(lambda);
        out += image * c;
    }
    return out;
}

}  // namespace

SymmFn convert(const SymmFn& f, SymmBasis target) {
    if (f.basis == target) return f;
    if (multiplicative(f.basis) && multiplicative(target)) return {target, convert_multiplicative(f.value, f.basis, target)};
    if (target == SymmBasis::M) return {target, to_m(f.value, f.basis)};
    return {target, from_m(f.value, target)};
}

SymmFn multiply(const SymmFn& a, const SymmFn& b) {
    if (a.basis == SymmBasis::M) {
        const SymmFn product{SymmBasis::E, convert(a, SymmBasis::E).value * convert(b, SymmBasis::E).value};
        return convert(product, SymmBasis::M);
    }
    return {a.basis, a.value * convert(b, a.basis).value};
}

}  // namespace symgen::symm
