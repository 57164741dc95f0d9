#include "symgen/core/error.hpp"
#include "symgen/core/linalg.hpp"
#include "symgen/symm/symmetric.hpp"

namespace symgen::symm {

void HopfTensor::add(const Monomial& left, const Monomial& right, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

HopfTensor& HopfTensor::operator+=(const HopfTensor& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

HopfTensor operator*(const HopfTensor& a, const HopfTensor& b) {
    HopfTensor out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) out.add(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
}

HopfTensor primitive_tensor(const Polynomial& f) {
    HopfTensor t;
    for (const auto& [m, c] : f.terms()) {
        t.add(m, Monomial{}, c);
        t.add(Monomial{}, m, c);
    }
    return t;
}

namespace {

HopfTensor generator_coproduct(int n) {
    HopfTensor t;
    auto c = [](int i) { return i == 0 ? Monomial{} : Monomial(generator(SymmBasis::E, i)); };
    for (int i = 0; i <= n; ++i) t.add(c(i), c(n - i), Rational(1));
    return t;
}

HopfTensor monomial_coproduct(const Monomial& m) {
    HopfTensor t;
    t.add(Monomial{}, Monomial{}, Rational(1));
    for (const auto& [g, e] : m.factors()) {
        const HopfTensor dg = generator_coproduct(g.index);
        for (int i = 0; i < e; ++i) t = t * dg;
    }
    return t;
}

}  // namespace

HopfTensor coproduct(const SymmFn& f) {
    const Polynomial e = convert(f, SymmBasis::E).value;
    HopfTensor out;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [k, v] : monomial_coproduct(m).terms) out.add(k.first, k.second, c * v);
    }
    return out;
}

bool is_primitive(const SymmFn& f) {
    const Polynomial e = convert(f, SymmBasis::E).value;
    return coproduct({SymmBasis::E, e}) == primitive_tensor(e);
}

Model model_from_name(const std::string& name) {
    if (name == "BU") return Model::BU;
    if (name == "BUmodSO" || name == "BU/SO" || name == "B(U/SO)") return Model::BUmodSO;
    throw Error("invalid-model", "unknown model '" + name + "' (expected BU or BUmodSO)");
}

std::string model_name(Model model) { return model == Model::BU ? "BU" : "BUmodSO"; }

bool model_has_weight(Model model, GeneratorStart start, int weight) {
    if (weight < 1) return false;
    if (model == Model::BU) return true;
    if (weight % 2 == 0) return false;
    return !(start == GeneratorStart::FromOne && weight == 1);
}

namespace {

// Columns -> dense matrix over the union of their monomial supports.
RationalMatrix to_matrix(const std::vector<Polynomial>& columns) {
    std::map<Monomial, std::size_t> rows;
    for (const auto& p : columns)
        for (const auto& [m, c] : p.terms()) rows.try_emplace(m, rows.size());
    RationalMatrix a(rows.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms()) a[rows.at(m)][j] = c;
    return a;
}

std::vector<Polynomial> bu_primitives(int weight) {
    const auto parts = partitions_of(weight);
    std::vector<Monomial> monos;
    std::map<std::pair<Monomial, Monomial>, std::size_t> rows;
    std::vector<HopfTensor> defects;
    for (const auto& lambda : parts) {
        const Monomial m = basis_monomial(SymmBasis::E, lambda);
        monos.push_back(m);
        HopfTensor d = monomial_coproduct(m);
        d.add(m, Monomial{}, Rational(-1));
        d.add(Monomial{}, m, Rational(-1));
        for (const auto& [k, c] : d.terms) rows.try_emplace(k, rows.size());
        defects.push_back(std::move(d));
    }
    RationalMatrix a(rows.size(), std::vector<Rational>(parts.size(), Rational(0)));
    for (std::size_t j = 0; j < defects.size(); ++j)
        for (const auto& [k, c] : defects[j].terms) a[rows.at(k)][j] = c;
    std::vector<Polynomial> out;
    for (const auto& v : nullspace(a, parts.size())) {
        Polynomial p;
        for (std::size_t j = 0; j < v.size(); ++j) p.add_term(monos[j], v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

// Products of the odd d-classes of total weight `weight` with allowed
// factors; `min_factors` selects the square of the augmentation ideal.
std::vector<Polynomial> d_monomials(int weight, GeneratorStart start, std::size_t min_factors, const TruncatedSeries& d) {
    std::vector<Polynomial> out;
    for (const auto& lambda : partitions_of(weight)) {
        if (lambda.length() < min_factors) continue;
        bool allowed = true;
        for (int part : lambda.parts()) allowed = allowed && model_has_weight(Model::BUmodSO, start, part);
        if (!allowed) continue;
        Polynomial p(Rational(1));
        for (int part : lambda.parts()) p = p * d[part];
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Polynomial> c_monomials(int weight, std::size_t min_factors) {
    std::vector<Polynomial> out;
    for (const auto& lambda : partitions_of(weight))
        if (lambda.length() >= min_factors) out.emplace_back(basis_monomial(SymmBasis::E, lambda));
    return out;
}

}  // namespace

std::vector<SymmFn> primitive_space(int weight, Model model, GeneratorStart start) {
    if (weight < 1) return {};
    std::vector<Polynomial> prims = bu_primitives(weight);
    if (model == Model::BUmodSO) {
        // Image of H*(B(U/SO)) in H*(BU) is generated by the odd d-classes.
        const TruncatedSeries d = d_classes(weight);
        const std::vector<Polynomial> sub = d_monomials(weight, GeneratorStart::FromZero, 1, d);
        std::vector<Polynomial> columns = prims;
        for (const auto& s : sub) columns.push_back(s * Rational(-1));
        std::vector<Polynomial> meet;
        for (const auto& v : nullspace(to_matrix(columns), columns.size())) {
            Polynomial p;
            for (std::size_t i = 0; i < prims.size(); ++i) p += prims[i] * v[i];
            if (!p.is_zero()) meet.push_back(std::move(p));
        }
        prims = meet;
        if (!model_has_weight(model, start, weight)) prims.clear();
    }
    std::vector<SymmFn> out;
    for (auto& p : prims) out.push_back({SymmBasis::E, std::move(p)});
    return out;
}

Indecomposables indecomposables(int weight, Model model, GeneratorStart start) {
    Indecomposables result;
    if (weight < 1) return result;
    std::vector<Polynomial> all;
    std::vector<Polynomial> squares;
    std::vector<Polynomial> singles;
    if (model == Model::BU) {
        all = c_monomials(weight, 1);
        squares = c_monomials(weight, 2);
        singles.emplace_back(Monomial(generator(SymmBasis::E, weight)));
    } else {
        const TruncatedSeries d = d_classes(weight);
        all = d_monomials(weight, start, 1, d);
        squares = d_monomials(weight, start, 2, d);
        if (model_has_weight(model, start, weight)) singles.push_back(d[weight]);
    }
    const auto rank_of = [](const std::vector<Polynomial>& v) { return v.empty() ? std::size_t{0} : rank(to_matrix(v)); };
    const std::size_t square_rank = rank_of(squares);
    result.dimension = static_cast<int>(rank_of(all) - square_rank);
    std::vector<Polynomial> span = squares;
    std::size_t current = square_rank;
    for (const auto& s : singles) {
        span.push_back(s);
        const std::size_t r = rank_of(span);
        if (r > current) {
            result.representatives.push_back(s);
            current = r;
        } else {
            span.pop_back();
        }
    }
    return result;
}

bool is_decomposable(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (m.length() < 2) return false;
    return true;
}

}  // namespace symgen::symm
