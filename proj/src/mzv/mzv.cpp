#include "symgen/mzv/mzv.hpp"

#include "symgen/core/bernoulli.hpp"
#include "symgen/core/error.hpp"

#include <cfloat>
#include <cmath>
#include <map>

namespace symgen::mzv {

namespace {

constexpr double kUlp = DBL_EPSILON;
constexpr long double kUlpLong = LDBL_EPSILON;

// Slack covering the rounding of one double operation producing x.
double rounding(double x) { return std::abs(x) * kUlp; }

long double to_long_double(const Rational& r) {
    // numerator and denominator may exceed double range for large Bernoulli indices
    const long double num = mpz_get_d(r.get_num_mpz_t());
    const long double den = mpz_get_d(r.get_den_mpz_t());
    return num / den;
}

// f(i) = sum_p terms[p] i^-p + E(i),  |E(i)| <= sum_q bound[q] i^-q  for every integer i >= 1.
struct Expansion {
    std::map<int, Rational> terms;
    std::map<int, long double> bound;
};

Rational rising(int s, int r) {
    Rational out = 1;
    for (int j = 0; j < r; ++j) out *= s + j;
    return out;
}

// sum_{i > N} i^-a f(i) as an expansion in N. Euler-Maclaurin on i^-s, truncated so
// every kept power is <= cap; the first omitted term bounds the remainder.
Expansion tail(int a, const Expansion& inner, int cap) {
    Expansion out;
    auto add = [&out](int power, const Rational& c) {
        if (c == 0) return;
        Rational& slot = out.terms[power];
        slot += c;
    };
    for (const auto& [p, c] : inner.terms) {
        const int s = a + p;
        add(s - 1, c / (s - 1));
        add(s, -c / 2);
        int j = 1;
        for (; s + 2 * j - 1 <= cap; ++j)
            add(s + 2 * j - 1, c * bernoulli(2 * j) / factorial(2 * j) * rising(s, 2 * j - 1));
        const Rational omitted = c * bernoulli(2 * j) / factorial(2 * j) * rising(s, 2 * j - 1);
        out.bound[s + 2 * j - 1] += std::abs(to_long_double(omitted));
    }
    for (const auto& [q, e] : inner.bound) out.bound[a + q - 1] += e / (a + q - 1);
    std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
    return out;
}

struct Value {
    long double value;
    long double error;
};

Value evaluate(const Expansion& e, long double n) {
    long double v = 0, slack = 0, err = 0;
    for (const auto& [p, c] : e.terms) {
        const long double t = to_long_double(c) * std::pow(n, static_cast<long double>(-p));
        v += t;
        slack += std::abs(t);
    }
    for (const auto& [q, b] : e.bound) err += b * std::pow(n, static_cast<long double>(-q));
    // coefficients are rounded through double
    return {v, err + slack * 4 * kUlp + std::abs(v) * e.terms.size() * kUlpLong};
}

// Tails T_j(N) = sum over N < i_{j+1} < ... < i_k of the last k - j factors, for j = 0..k.
std::vector<Expansion> tail_expansions(const std::vector<int>& s, int cap) {
    const std::size_t k = s.size();
    std::vector<Expansion> tails(k + 1);
    tails[k].terms[0] = 1;
    for (std::size_t j = k; j-- > 0;) tails[j] = tail(s[j], tails[j + 1], cap);
    return tails;
}

CertifiedReal eval_at(const std::vector<int>& s, const std::vector<Expansion>& tails, long n_cut) {
    const std::size_t k = s.size();
    // heads[j] = sum over i_1 < ... < i_j <= N of the first j factors
    std::vector<long double> heads(k + 1, 0.0L);
    heads[0] = 1;
    for (long n = 1; n <= n_cut; ++n) {
        const long double x = static_cast<long double>(n);
        for (std::size_t j = k; j >= 1; --j) heads[j] += heads[j - 1] * std::pow(x, static_cast<long double>(-s[j - 1]));
    }
    const long double head_rel = 4.0L * static_cast<long double>(n_cut + 2) * static_cast<long double>(k + 1) * kUlpLong;
    long double total = 0, err = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        const Value t = evaluate(tails[j], static_cast<long double>(n_cut));
        const long double h = heads[j], he = h * head_rel;
        total += h * t.value;
        err += h * t.error + std::abs(t.value) * he + he * t.error;
    }
    err += std::abs(total) * 4 * (k + 1) * kUlpLong;
    const double value = static_cast<double>(total);
    return {value, static_cast<double>(err) + rounding(value) + static_cast<double>(std::abs(total - value))};
}

}  // namespace

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    const double v = a.value + b.value;
    return {v, a.error_bound + b.error_bound + rounding(v)};
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    const double v = a.value - b.value;
    return {v, a.error_bound + b.error_bound + rounding(v)};
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    const double v = a.value * b.value;
    const double e = std::abs(a.value) * b.error_bound + std::abs(b.value) * a.error_bound + a.error_bound * b.error_bound;
    return {v, e * (1 + 4 * kUlp) + rounding(v)};
}

CertifiedReal scale(const CertifiedReal& a, double c) {
    const double v = a.value * c;
    return {v, a.error_bound * std::abs(c) * (1 + 2 * kUlp) + rounding(v)};
}

bool admissible(const Composition& index) { return index.empty() || index.parts().back() >= 2; }

CertifiedReal mzv_eval(const Composition& index, double target_error) {
    if (!(target_error > 0)) throw Error("invalid-argument", "target error must be positive");
    if (!admissible(index))
        throw Error("divergent", "multizeta value " + to_string(index) + " diverges: the last exponent must be at least 2");
    if (index.empty()) return {1.0, 0.0};
    const std::vector<int>& s = index.parts();
    const int cap = static_cast<int>(index.weight()) + 40;
    const auto tails = tail_expansions(s, cap);
    CertifiedReal best{0, INFINITY};
    for (long n = 16; n <= (1L << 16); n *= 4) {
        best = eval_at(s, tails, n);
        if (best.error_bound <= target_error) return best;
    }
    throw Error("precision", "cannot certify " + to_string(index) + " to within the requested error; best bound " +
                                 std::to_string(best.error_bound));
}

CertifiedReal zeta_specialize(const qsymm::QSymmElement& q, double target_error) {
    if (!(target_error > 0)) throw Error("invalid-argument", "target error must be positive");
    std::string bad;
    double weight = 0;
    for (const auto& [c, v] : q.terms()) {
        if (!admissible(c)) bad += (bad.empty() ? "" : ", ") + to_string(c);
        weight += std::abs(v.get_d());
    }
    if (!bad.empty()) throw Error("divergent", "inadmissible compositions: " + bad);
    CertifiedReal total{0, 0};
    for (const auto& [c, v] : q.terms()) {
        const double share = target_error / (2 * weight * static_cast<double>(q.terms().size()));
        const double coeff = v.get_d();
        CertifiedReal term = scale(mzv_eval(c, share), coeff);
        term.error_bound += rounding(coeff) * std::abs(term.value) * 2;
        total = total + term;
    }
    return total;
}

HomomorphismReport homomorphism_check(const qsymm::QSymmElement& a, const qsymm::QSymmElement& b, double tol) {
    if (!(tol > 0)) throw Error("invalid-argument", "tolerance must be positive");
    HomomorphismReport r;
    const double target = tol / 4;
    r.product_of_values = zeta_specialize(a, target) * zeta_specialize(b, target);
    r.value_of_product = zeta_specialize(qsymm::quasi_shuffle(a, b), target);
    r.difference = std::abs(r.product_of_values.value - r.value_of_product.value);
    r.allowed = tol + r.product_of_values.error_bound + r.value_of_product.error_bound;
    r.pass = r.difference <= r.allowed;
    return r;
}

CertifiedReal euler_gamma(double target_error) {
    if (!(target_error > 0)) throw Error("invalid-argument", "target error must be positive");
    // gamma = H_N - log N - 1/(2N) + sum_{k=1}^{J} B_{2k} / (2k N^{2k}) + R,  |R| <= next term
    constexpr long n_cut = 64;
    constexpr int terms = 10;
    long double h = 0;
    for (long i = 1; i <= n_cut; ++i) h += 1.0L / static_cast<long double>(i);
    const long double n = n_cut;
    long double v = h - std::log(n) - 1.0L / (2 * n);
    for (int k = 1; k <= terms; ++k) v += to_long_double(bernoulli(2 * k) / (2 * k)) * std::pow(n, static_cast<long double>(-2 * k));
    const long double remainder =
        std::abs(to_long_double(bernoulli(2 * terms + 2) / (2 * terms + 2))) * std::pow(n, static_cast<long double>(-2 * terms - 2));
    const double value = static_cast<double>(v);
    const double err = static_cast<double>(remainder + 8 * (n_cut + terms) * kUlpLong * (h + std::log(n))) +
                       std::abs(static_cast<double>(v - value)) + rounding(value);
    if (err > target_error)
        throw Error("precision", "cannot certify Euler's constant to within " + std::to_string(target_error));
    return {value, err};
}

}  // namespace symgen::mzv
