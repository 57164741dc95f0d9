#include "symgen/genus/genus.hpp"

#include "symgen/core/error.hpp"
#include "symgen/homology/homology.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace symgen::genus {

namespace {

using symm::GeneratorStart;

// N_k written in Chern classes c[i].
Polynomial newton_in_chern(int k) {
    static std::mutex mutex;
    static std::map<int, Polynomial> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, symm::convert(symm::SymmFn::generator(symm::SymmBasis::P, k), symm::SymmBasis::E).value).first;
    return it->second;
}

std::map<Generator, Polynomial> chern_images(const ManifoldModel& m, int up_to, bool conjugate) {
    std::map<Generator, Polynomial> images;
    for (int i = 1; i <= up_to; ++i) {
        Polynomial c = m.chern_class(i);
        if (conjugate && i % 2) c = -c;
        images[symm::generator(symm::SymmBasis::E, i)] = std::move(c);
    }
    return images;
}

Polynomial newton_class(const ManifoldModel& m, int k, bool conjugate = false) {
    return m.reduce(newton_in_chern(k).substitute(chern_images(m, k, conjugate)));
}

// exp of a class with no constant term; nilpotent in the cohomology ring.
Polynomial class_exp(const ManifoldModel& m, const Polynomial& l) {
    Polynomial out(Rational(1)), power(Rational(1));
    for (int j = 1; j <= m.dim_c(); ++j) {
        power = m.multiply(power, l) * make_rational(1, j);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

Polynomial constant(const Rational& c) { return Polynomial(c); }

TruncatedSeries scalar_series(int bound, const std::function<Rational(int)>& coeff) {
    TruncatedSeries s(bound);
    for (int k = 0; k <= bound; ++k) s.set(k, constant(coeff(k)));
    return s;
}

}  // namespace

Polynomial chern_character(const ManifoldModel& m, int k) {
    if (k < 0) throw Error("invalid-argument", "Chern character degree must be nonnegative");
    if (k == 0) return Polynomial(Rational(m.dim_c()));
    if (k > m.dim_c()) return {};
    return newton_class(m, k) * (Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
}

// ---------------------------------------------------------------- series

GenusSeries GenusSeries::a_hat(int bound) {
    // sinh(x/2) / (x/2) = sum_j x^{2j} / (4^j (2j+1)!)
    const auto s = scalar_series(bound, [](int k) -> Rational {
        if (k % 2) return 0;
        Integer four = 1;
        for (int j = 0; j < k / 2; ++j) four *= 4;
        return Rational(1) / Rational(four * factorial(static_cast<unsigned>(k + 1)));
    });
    return {"A-hat", series_inv(s)};
}

GenusSeries GenusSeries::todd(int bound) {
    // (1 - e^-x) / x = sum_j (-1)^j x^j / (j+1)!
    const auto s = scalar_series(bound, [](int k) -> Rational {
        return Rational(k % 2 ? -1 : 1) / Rational(factorial(static_cast<unsigned>(k + 1)));
    });
    return {"Todd", series_inv(s)};
}

GenusSeries GenusSeries::l_genus(int bound) {
    const auto sinh_over_x =
        scalar_series(bound, [](int k) -> Rational { return k % 2 ? Rational(0) : Rational(1) / Rational(factorial(static_cast<unsigned>(k + 1))); });
    const auto cosh = scalar_series(bound, [](int k) -> Rational { return k % 2 ? Rational(0) : Rational(1) / Rational(factorial(static_cast<unsigned>(k))); });
    return {"L", series_mul(cosh, series_inv(sinh_over_x))};
}

GenusSeries GenusSeries::from_exponential(const std::string& name, const TruncatedSeries& f) {
    if (f.bound() < 1 || !f[0].is_zero() || f[1] != Polynomial(Rational(1)))
        throw Error("not-invertible", "an exponential must have the form x + O(x^2)");
    return {name, series_inv(series_shift(f, -1).truncated(f.bound() - 1))};
}

GenusSeries GenusSeries::from_name(const std::string& name, int bound) {
    if (name == "A-hat" || name == "a-hat" || name == "Ahat") return a_hat(bound);
    if (name == "Todd" || name == "todd") return todd(bound);
    if (name == "L" || name == "signature") return l_genus(bound);
    if (name == "Gamma" || name == "gamma") return from_exponential("Gamma", gamma_exponential(bound + 1));
    throw Error("unknown-series", "unknown genus series '" + name + "'");
}

TruncatedSeries GenusSeries::exponential() const {
    const TruncatedSeries inv = series_inv(characteristic);
    return series_shift(TruncatedSeries(inv.bound() + 1, inv.components()), 1);
}

// ---------------------------------------------------------------- genera

Polynomial multiplicative_class(const ManifoldModel& m, const GenusSeries& rho) {
    if (rho.characteristic.bound() < m.dim_c())
        throw Error("bound", "characteristic series of " + rho.name + " is truncated below dimension " + std::to_string(m.dim_c()));
    if (rho.characteristic[0] != Polynomial(Rational(1)))
        throw Error("constant-term", "characteristic series must start with 1");
    const TruncatedSeries log_q = series_log(rho.characteristic.truncated(m.dim_c()));
    Polynomial l;
    for (int k = 1; k <= m.dim_c(); ++k)
        if (!log_q[k].is_zero()) l += log_q[k] * newton_class(m, k);
    return class_exp(m, m.reduce(l));
}

Polynomial genus(const ManifoldModel& m, const GenusSeries& rho) { return m.pair(multiplicative_class(m, rho)); }

Rational genus_value(const ManifoldModel& m, const GenusSeries& rho) {
    const Polynomial v = genus(m, rho);
    if (!v.is_constant()) throw Error("not-rational", "genus value is symbolic: " + to_string(v));
    return v.constant_term();
}

Polynomial genus_from_exponential(const TruncatedSeries& f, int n) {
    if (n < 0) throw Error("invalid-argument", "dimension must be nonnegative");
    if (f.bound() < n + 1) throw Error("bound", "exponential must be known through x^" + std::to_string(n + 1));
    const TruncatedSeries g = series_compose_inverse(f.truncated(n + 1));
    return g[n + 1] * Rational(n + 1);
}

Generator euler_constant_symbol() { return Generator{1, 'g', 1}; }
Generator zeta_symbol(int k) { return Generator{k, 'z', k}; }

TruncatedSeries gamma_exponential(int bound) {
    if (bound < 1) throw Error("invalid-bound", "bound must be at least 1");
    TruncatedSeries e(bound - 1);
    if (bound > 1) e.set(1, Polynomial::generator(euler_constant_symbol()));
    for (int k = 2; k <= bound - 1; ++k)
        e.set(k, Polynomial::generator(zeta_symbol(k)) * make_rational(k % 2 ? 1 : -1, k));
    const TruncatedSeries ex = series_exp(e);
    return series_shift(TruncatedSeries(bound, ex.components()), 1);
}

std::vector<mzv::CertifiedReal> gamma_exponential_numeric(int bound, double target_error) {
    const TruncatedSeries f = gamma_exponential(bound);
    const double symbol_target = std::max(target_error / 1000, 4e-15);
    std::map<Generator, mzv::CertifiedReal> values;
    values[euler_constant_symbol()] = mzv::euler_gamma(symbol_target);
    for (int k = 2; k < bound; ++k) values[zeta_symbol(k)] = mzv::mzv_eval(Composition(std::vector<int>{k}), symbol_target);
    std::vector<mzv::CertifiedReal> out;
    for (int k = 0; k <= bound; ++k) {
        out.push_back(evaluate<mzv::CertifiedReal>(
            f[k], [&values](const Generator& g) { return values.at(g); },
            [](const Rational& c) {
                const double v = c.get_d();
                return mzv::CertifiedReal{v, std::abs(v) * 2.3e-16};
            }));
        if (out.back().error_bound > target_error)
            throw Error("precision", "cannot certify the Gamma exponential to within the requested error");
    }
    return out;
}

// ------------------------------------------------------------ deformation

Generator deformation_symbol(int k) { return Generator{k, 't', k}; }

namespace {

void check_index(int k) {
    if (k < 1 || k % 2 == 0) throw Error("invalid-parameter", "deformation parameters need odd k >= 1, got " + std::to_string(k));
}

}  // namespace

DeformationParameters DeformationParameters::symbolic(int max_k, GeneratorStart start) {
    DeformationParameters t;
    for (int k = start == GeneratorStart::FromZero ? 1 : 3; k <= max_k; k += 2)
        t.set(k, Polynomial::generator(deformation_symbol(k)));
    return t;
}

DeformationParameters DeformationParameters::parse(const std::string& text) {
    DeformationParameters t;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("invalid-parameter", "expected k:value, got '" + item + "'");
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error("invalid-parameter", "bad index in '" + item + "'");
        }
        check_index(k);
        if (t.values.contains(k)) throw Error("invalid-parameter", "t_" + std::to_string(k) + " given twice");
        t.set(k, Polynomial(parse_rational(item.substr(colon + 1))));
    }
    return t;
}

void DeformationParameters::set(int k, const Polynomial& value) {
    check_index(k);
    if (value.is_zero())
        values.erase(k);
    else
        values[k] = value;
}

Polynomial DeformationParameters::get(int k) const {
    const auto it = values.find(k);
    return it == values.end() ? Polynomial() : it->second;
}

int DeformationParameters::max_k() const { return values.empty() ? 0 : values.rbegin()->first; }

DeformationParameters operator+(const DeformationParameters& a, const DeformationParameters& b) {
    DeformationParameters out = a;
    for (const auto& [k, v] : b.values) out.set(k, out.get(k) + v);
    return out;
}

void check_convention(const DeformationParameters& t, GeneratorStart start) {
    if (start == GeneratorStart::FromOne && !t.get(1).is_zero())
        throw Error("excluded-parameter", "t_1 is excluded under the i > 0 convention");
}

Polynomial deform_genus(const ManifoldModel& m, const GenusSeries& rho, const DeformationParameters& t, GeneratorStart start) {
    check_convention(t, start);
    Polynomial l;
    for (const auto& [k, v] : t.values)
        if (k <= m.dim_c()) l += v * chern_character(m, k);
    return m.pair(m.multiply(multiplicative_class(m, rho), class_exp(m, m.reduce(l))));
}

GenusSeries deform_series(const GenusSeries& rho, const DeformationParameters& t, GeneratorStart start) {
    check_convention(t, start);
    const int bound = rho.characteristic.bound();
    TruncatedSeries e(bound);
    for (const auto& [k, v] : t.values)
        if (k <= bound) e.set(k, v * (Rational(1) / Rational(factorial(static_cast<unsigned>(k)))));
    return {rho.name + "~", series_mul(rho.characteristic, series_exp(e))};
}

GaussianRational evaluate_gaussian(const Polynomial& p, const std::map<Generator, GaussianRational>& values) {
    return evaluate<GaussianRational>(
        p,
        [&values](const Generator& g) {
            const auto it = values.find(g);
            if (it == values.end()) throw Error("unbound-symbol", "no value for " + to_string(g));
            return it->second;
        },
        [](const Rational& c) { return GaussianRational{c, 0}; });
}

mzv::CertifiedReal a_hat_zeta(const ManifoldModel& m, double target_error, const std::map<int, mzv::CertifiedReal>& overrides) {
    const auto t = DeformationParameters::symbolic(m.dim_c(), GeneratorStart::FromOne);
    const Polynomial value = deform_genus(m, GenusSeries::a_hat(m.dim_c()), t, GeneratorStart::FromOne);
    std::map<Generator, mzv::CertifiedReal> values;
    for (const auto& [k, v] : t.values) {
        const auto it = overrides.find(k);
        values[deformation_symbol(k)] =
            it != overrides.end() ? it->second : mzv::mzv_eval(Composition(std::vector<int>{k}), target_error / 100);
    }
    return evaluate<mzv::CertifiedReal>(
        value, [&values](const Generator& g) { return values.at(g); },
        [](const Rational& c) {
            const double v = c.get_d();
            return mzv::CertifiedReal{v, std::abs(v) * 2.3e-16};
        });
}

// ----------------------------------------------------------------- checks

bool diagonal_vanishing_check(const ManifoldModel& m, int k) {
    if (k < 0) throw Error("invalid-argument", "degree must be nonnegative");
    if (k == 0) return m.dim_c() == 0;
    if (k > m.dim_c()) return true;
    const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
    const Polynomial sum = (newton_class(m, k) + newton_class(m, k, true)) * inv;
    return m.reduce(sum).is_zero();
}

bool primitivity_check(const ManifoldModel& m, const ManifoldModel& n, int k) {
    if (k < 1 || k % 2 == 0) throw Error("invalid-argument", "primitivity is checked for odd k only");
    const ManifoldModel p = ManifoldModel::product(m, n);
    return chern_character(p, k) == chern_character(m, k) + m.embed_second_factor(n, chern_character(n, k));
}

std::vector<Integer> morphism_module_series(const ManifoldModel& m, int bound, GeneratorStart start) {
    const auto betti = m.betti();
    const auto coeff = homology::coefficient_ring_series(homology::CoefficientRing::SOmega, bound, start);
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    for (std::size_t i = 0; i < betti.size() && static_cast<int>(i) <= bound; ++i)
        for (std::size_t j = 0; i + j <= static_cast<std::size_t>(bound); ++j) out[i + j] += betti[i] * coeff[j];
    return out;
}

// --------------------------------------------------------------- coaction

Generator coaction_symbol(int i) { return Generator{4 * i + 2, 'y', 4 * i + 2}; }

Polynomial d_class(const ManifoldModel& m, int k) {
    if (k < 1) throw Error("invalid-argument", "d-class index must be positive");
    if (k > m.dim_c()) return {};
    const TruncatedSeries d = symm::d_classes(k);
    return m.reduce(d[k].substitute(chern_images(m, k, false)));
}

namespace {

struct KeyClass {
    Monomial key;
    Polynomial value;
};

// All monomials beta_alpha of real degree <= bound with P_alpha = prod d_{2i+1}^{alpha_i}.
std::vector<KeyClass> coaction_basis(const ManifoldModel& m, int bound, GeneratorStart start) {
    std::vector<int> indices;
    for (int i = start == GeneratorStart::FromZero ? 0 : 1; 4 * i + 2 <= bound; ++i) indices.push_back(i);
    std::vector<Polynomial> d;
    for (int i : indices) d.push_back(d_class(m, 2 * i + 1));
    std::vector<KeyClass> out;
    std::vector<Monomial::Factor> factors;
    std::function<void(std::size_t, int, const Polynomial&)> rec = [&](std::size_t at, int deg, const Polynomial& value) {
        if (at == indices.size()) {
            out.push_back({Monomial::from_factors(factors), value});
            return;
        }
        const int step = 4 * indices[at] + 2;
        Polynomial power = value;
        for (int e = 0; deg + e * step <= bound; ++e) {
            if (e) factors.emplace_back(coaction_symbol(indices[at]), e);
            rec(at + 1, deg + e * step, power);
            if (e) factors.pop_back();
            power = m.multiply(power, d[at]);
        }
    };
    rec(0, 0, Polynomial(Rational(1)));
    return out;
}

int key_degree(const Monomial& key) { return key.degree(); }

}  // namespace

CoactionElement coaction(const ManifoldModel& m, const Polynomial& x, int bound, GeneratorStart start) {
    if (bound < 0) throw Error("invalid-bound", "retained degree must be nonnegative");
    CoactionElement out;
    for (const auto& [key, p] : coaction_basis(m, bound, start)) {
        Polynomial v = m.multiply(x, p);
        if (!v.is_zero()) out[key] = std::move(v);
    }
    return out;
}

Polynomial counit(const CoactionElement& e) {
    const auto it = e.find(Monomial{});
    return it == e.end() ? Polynomial() : it->second;
}

IteratedCoaction coaction_then_coaction(const ManifoldModel& m, const Polynomial& x, int bound, GeneratorStart start) {
    IteratedCoaction out;
    for (const auto& [gamma, v] : coaction(m, x, bound, start))
        for (const auto& [alpha, w] : coaction(m, v, bound - key_degree(gamma), start)) out[{alpha, gamma}] = w;
    return out;
}

IteratedCoaction coaction_then_coproduct(const ManifoldModel& m, const Polynomial& x, int bound, GeneratorStart start) {
    IteratedCoaction out;
    for (const auto& [gamma, v] : coaction(m, x, bound, start)) {
        // split gamma = a * b over all exponent choices
        const auto& f = gamma.factors();
        std::vector<Monomial::Factor> left, right;
        std::function<void(std::size_t)> rec = [&](std::size_t at) {
            if (at == f.size()) {
                out[{Monomial::from_factors(left), Monomial::from_factors(right)}] = v;
                return;
            }
            for (int e = 0; e <= f[at].second; ++e) {
                left.emplace_back(f[at].first, e);
                right.emplace_back(f[at].first, f[at].second - e);
                rec(at + 1);
                left.pop_back();
                right.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

}  // namespace symgen::genus
