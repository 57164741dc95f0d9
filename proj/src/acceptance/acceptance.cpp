#include "symgen/acceptance/acceptance.hpp"

#include "symgen/core/error.hpp"
#include "symgen/genus/genus.hpp"
#include "symgen/homology/homology.hpp"
#include "symgen/mzv/mzv.hpp"
#include "symgen/qsymm/quasisymmetric.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace symgen::acceptance {

namespace {

using symm::GeneratorStart;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

// ---- criteria ----------------------------------------------------------

Outcome d_class_identity(const AcceptanceConfig&) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto r = symm::identity_check("d-classes", 30);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(r.exact_match, "mismatch at weight " + std::to_string(r.first_mismatch_weight.value_or(-1)));
    o.require(secs < 30, "took " + fmt(secs) + " s (limit 30 s)");
    o.detail = o.pass ? "exact through weight 30" : o.detail;
    return o;
}

Outcome a_class_structure(const AcceptanceConfig&) {
    Outcome o;
    const auto a = symm::a_classes(12);
    for (int i = 0; 2 * i + 1 <= 12; ++i)
        o.require(symm::is_decomposable(a[2 * i + 1]), "a_" + std::to_string(2 * i + 1) + " is not decomposable");
    for (int i = 1; 2 * i <= 12; ++i) {
        const Polynomial b = Polynomial::generator(weighted(symm::homology_family(), 2 * i));
        o.require(symm::is_decomposable(a[2 * i] - b * Rational(2)),
                  "a_" + std::to_string(2 * i) + " differs from 2 b_" + std::to_string(2 * i) + " by an indecomposable");
    }
    if (o.pass) o.detail = "i <= 6";
    return o;
}

Outcome primitives(const AcceptanceConfig& config) {
    Outcome o;
    for (int k = 1; k <= 12; ++k) {
        const auto space = symm::primitive_space(k, symm::Model::BUmodSO, config.start);
        const bool expected = symm::model_has_weight(symm::Model::BUmodSO, config.start, k);
        o.require(space.size() == (expected ? 1u : 0u),
                  "weight " + std::to_string(k) + " has dimension " + std::to_string(space.size()));
        if (space.size() == 1) {
            const auto p = symm::convert(space.front(), symm::SymmBasis::P).value;
            o.require(p.size() == 1 && p.terms().begin()->first == Monomial(symm::generator(symm::SymmBasis::P, k)),
                      "weight " + std::to_string(k) + " primitive is not a multiple of N_" + std::to_string(k));
        }
    }
    if (o.pass) o.detail = "odd weights 1-dimensional, spanned by N_k; weights <= 12";
    return o;
}

Outcome diagonal_vanishing(const AcceptanceConfig&) {
    Outcome o;
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 2 * n - 1; k += 2, ++checked)
            o.require(genus::diagonal_vanishing_check(genus::ManifoldModel::projective_space(n), k),
                      "CP" + std::to_string(n) + ", k = " + std::to_string(k));
    if (o.pass) o.detail = std::to_string(checked) + " cases";
    return o;
}

Outcome primitivity(const AcceptanceConfig&) {
    Outcome o;
    int checked = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int k = 1; k <= a + b; k += 2, ++checked)
                o.require(genus::primitivity_check(genus::ManifoldModel::projective_space(a),
                                                   genus::ManifoldModel::projective_space(b), k),
                          "CP" + std::to_string(a) + " x CP" + std::to_string(b) + ", k = " + std::to_string(k));
    if (o.pass) o.detail = std::to_string(checked) + " cases";
    return o;
}

Outcome torsor(const AcceptanceConfig& config) {
    Outcome o;
    std::mt19937 rng(config.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    const int k1 = config.start == GeneratorStart::FromZero ? 1 : 3;
    for (const auto& name : {"CP1", "CP2", "CP1xCP1"}) {
        const auto m = genus::ManifoldModel::from_name(name);
        const auto rho = genus::GenusSeries::a_hat(m.dim_c());
        o.require(genus::deform_genus(m, rho, {}, config.start) == genus::genus(m, rho), std::string(name) + ": t = 0");
        o.require(genus::deform_series(rho, {}, config.start).characteristic == rho.characteristic, std::string(name) + ": series t = 0");
        for (int trial = 0; trial < 20; ++trial) {
            genus::DeformationParameters t, s;
            for (int k = k1; k <= 5; k += 2) {
                t.set(k, Polynomial(make_rational(num(rng), den(rng))));
                s.set(k, Polynomial(make_rational(num(rng), den(rng))));
            }
            const auto lhs = genus::deform_genus(m, genus::deform_series(rho, t, config.start), s, config.start);
            o.require(lhs == genus::deform_genus(m, rho, t + s, config.start), std::string(name) + ": composition law");
        }
    }
    if (o.pass) o.detail = "20 random parameter pairs on CP1, CP2, CP1xCP1";
    return o;
}

Outcome genus_engine(const AcceptanceConfig&) {
    Outcome o;
    using genus::GenusSeries;
    using genus::ManifoldModel;
    o.require(genus::genus_value(ManifoldModel::projective_space(2), GenusSeries::a_hat(2)) == make_rational(-1, 8),
              "A-hat(CP2) != -1/8");
    for (int n = 0; n <= 6; ++n)
        o.require(genus::genus_value(ManifoldModel::projective_space(n), GenusSeries::todd(n)) == 1,
                  "Todd(CP" + std::to_string(n) + ") != 1");
    for (int n = 0; n <= 4; ++n) {
        TruncatedSeries f(n + 1);  // 1 - e^-x
        for (int k = 1; k <= n + 1; ++k)
            f.set(k, Polynomial(Rational(k % 2 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(k)))));
        o.require(genus::genus_from_exponential(f, n) == genus::genus(ManifoldModel::projective_space(n), GenusSeries::todd(n)),
                  "exponential path disagrees on CP" + std::to_string(n));
    }
    if (o.pass) o.detail = "A-hat(CP2) = -1/8, Todd(CPn) = 1 for n <= 6, both paths agree for n <= 4";
    return o;
}

Outcome gamma_exponential(const AcceptanceConfig&) {
    Outcome o;
    const auto coeffs = genus::gamma_exponential_numeric(4, 1e-12);
    const double g = mzv::euler_gamma(1e-13).value;
    const double z2 = mzv::mzv_eval(Composition(std::vector<int>{2}), 1e-13).value;
    const double z3 = mzv::mzv_eval(Composition(std::vector<int>{3}), 1e-13).value;
    const double oracle[] = {0, 1, g, g * g / 2 - z2 / 2, g * g * g / 6 - g * z2 / 2 + z3 / 3};
    double worst = 0;
    for (int k = 0; k <= 4; ++k) worst = std::max(worst, std::abs(coeffs[static_cast<std::size_t>(k)].value - oracle[k]));
    o.require(worst <= 1e-10, "deviation " + fmt(worst));
    if (o.pass) o.detail = "max deviation " + fmt(worst) + " <= 1e-10";
    return o;
}

Outcome koszul(const AcceptanceConfig&) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto ext = homology::tor_via_bar(homology::exterior_algebra({5, 9}, 24), 24).total_series();
    o.require(ext == homology::predicted_polynomial_series({6, 10}, 24), "exterior Tor differs from Q[y6, y10]");
    const auto sq = homology::tor_via_bar(homology::square_zero_extension({5, 9}, 22), 22).total_series();
    o.require(sq == homology::predicted_word_series({6, 10}, 22), "square-zero Tor differs from word count");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 60, "took " + fmt(secs) + " s (limit 60 s)");
    if (o.pass) o.detail = "exterior T = 24 and square-zero T = 22 exact";
    return o;
}

Outcome qsymm_polynomiality(const AcceptanceConfig&) {
    Outcome o;
    const auto h = qsymm::free_algebra_hilbert(qsymm::GeneratorProfile::all_positive(), 12, qsymm::HilbertFlavor::PolynomialOnLyndon);
    for (int n = 1; n <= 12; ++n)
        o.require(h[static_cast<std::size_t>(n)] == Integer(1) << (n - 1), "degree " + std::to_string(n));
    if (o.pass) o.detail = "2^(n-1) through degree 12";
    return o;
}

Outcome mzv_checks(const AcceptanceConfig& config) {
    Outcome o;
    const double pi2_6 = static_cast<double>(3.141592653589793238462643383279502884L * 3.141592653589793238462643383279502884L / 6);
    const auto z2 = mzv::mzv_eval(Composition(std::vector<int>{2}), 1e-9);
    o.require(z2.contains(pi2_6), "enclosure misses pi^2/6");
    o.require(std::abs(z2.value - pi2_6) <= 1e-8, "zeta(2) off by more than 1e-8");
    const auto z12 = mzv::mzv_eval(Composition(std::vector<int>{1, 2}), 1e-9);
    const auto z3 = mzv::mzv_eval(Composition(std::vector<int>{3}), 1e-9);
    o.require(std::abs(z12.value - z3.value) <= 2e-8, "zeta(1,2) != zeta(3)");
    std::vector<Composition> pool;
    for (int w = 2; w <= 4; ++w)
        for (const auto& c : compositions_of(w))
            if (mzv::admissible(c)) pool.push_back(c);
    std::mt19937 rng(config.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int done = 0;
    while (done < 10) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        if (a.weight() + b.weight() > 6) continue;
        const auto r = mzv::homomorphism_check(qsymm::QSymmElement(a), qsymm::QSymmElement(b), 1e-9);
        o.require(r.pass, "stuffle " + to_string(a) + " * " + to_string(b));
        ++done;
    }
    bool rejected = false;
    try {
        mzv::mzv_eval(Composition(std::vector<int>{1}), 1e-9);
    } catch (const Error& e) {
        rejected = e.code() == "divergent";
    }
    o.require(rejected, "zeta(1) was not rejected");
    if (o.pass) o.detail = "zeta(2) enclosure sound, Euler relation, 10 stuffles, zeta(1) rejected";
    return o;
}

std::vector<Integer> subsets_oracle(const std::vector<int>& letters, int bound) {
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t at, int deg) {
        if (at == letters.size()) {
            out[static_cast<std::size_t>(deg)] += 1;
            return;
        }
        rec(at + 1, deg);
        if (deg + letters[at] <= bound) rec(at + 1, deg + letters[at]);
    };
    rec(0, 0);
    return out;
}

std::vector<Integer> multisets_oracle(const std::vector<int>& letters, int bound) {
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int deg) {
        out[static_cast<std::size_t>(deg)] += 1;
        for (std::size_t k = from; k < letters.size(); ++k)
            if (deg + letters[k] <= bound) rec(k, deg + letters[k]);
    };
    rec(0, 0);
    return out;
}

Outcome series_tables(const AcceptanceConfig& config) {
    Outcome o;
    const int bound = 20;
    std::vector<int> odd, even;
    for (int i = config.start == GeneratorStart::FromZero ? 0 : 1; 4 * i + 1 <= bound; ++i) odd.push_back(4 * i + 1);
    for (int i = config.start == GeneratorStart::FromZero ? 0 : 1; 4 * i + 2 <= bound; ++i) even.push_back(4 * i + 2);
    const auto e = subsets_oracle(odd, bound);
    const auto p = multisets_oracle(even, bound);
    using homology::CoefficientRing;
    o.require(homology::coefficient_ring_series(CoefficientRing::SOmega, bound, config.start) == e, "sOmega");
    auto k = p;
    k[0] = 0;
    o.require(homology::coefficient_ring_series(CoefficientRing::KTheoryFiber, bound, config.start) == k, "KTheoryFiber");
    std::vector<Integer> thh(static_cast<std::size_t>(bound) + 1, 0);
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; i + j <= bound; ++j) thh[static_cast<std::size_t>(i + j)] += e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    o.require(homology::coefficient_ring_series(CoefficientRing::THH, bound, config.start) == thh, "THH");
    if (o.pass) o.detail = "sOmega, KTheoryFiber, THH through degree 20";
    return o;
}

Outcome coaction_laws(const AcceptanceConfig& config) {
    Outcome o;
    const auto cp2 = genus::ManifoldModel::projective_space(2);
    for (const auto& text : {"1", "x[1]", "x[1]^2"}) {
        const Polynomial x = cp2.parse_class(text);
        o.require(genus::counit(genus::coaction(cp2, x, 12, config.start)) == x, std::string("counit on ") + text);
        o.require(genus::coaction_then_coaction(cp2, x, 12, config.start) == genus::coaction_then_coproduct(cp2, x, 12, config.start),
                  std::string("coassociativity on ") + text);
    }
    if (o.pass) o.detail = "CP2, retained degree 12";
    return o;
}

struct Criterion {
    const char* name;
    int required_bound;
    Outcome (*run)(const AcceptanceConfig&);
};

const Criterion kCriteria[] = {
    {"d-class identity", 30, d_class_identity},
    {"a-class structure", 12, a_class_structure},
    {"BU/SO primitives", 12, primitives},
    {"diagonal vanishing", 11, diagonal_vanishing},
    {"primitivity of odd Chern characters", 6, primitivity},
    {"deformation torsor law", 3, torsor},
    {"genus engine", 7, genus_engine},
    {"Gamma exponential", 4, gamma_exponential},
    {"Koszul duality", 24, koszul},
    {"QSymm polynomiality", 12, qsymm_polynomiality},
    {"multizeta values", 6, mzv_checks},
    {"coefficient ring series", 20, series_tables},
    {"coaction laws", 12, coaction_laws},
};

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "";
}

int count() { return static_cast<int>(std::size(kCriteria)); }

CheckResult run_check(int id, const AcceptanceConfig& config) {
    if (id < 1 || id > count()) throw Error("invalid-argument", "no acceptance criterion " + std::to_string(id));
    const Criterion& c = kCriteria[id - 1];
    CheckResult r;
    r.id = id;
    r.name = c.name;
    r.required_bound = c.required_bound;
    if (config.bound < c.required_bound) {
        r.status = Status::Skipped;
        r.detail = "needs truncation degree " + std::to_string(c.required_bound);
        return r;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = c.run(config);
        r.status = o.pass ? Status::Pass : Status::Fail;
        r.detail = o.detail;
    } catch (const Error& e) {
        r.status = Status::Fail;
        r.detail = e.code() + ": " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_all(const AcceptanceConfig& config) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= count(); ++id) out.push_back(run_check(id, config));
    return out;
}

}  // namespace symgen::acceptance
