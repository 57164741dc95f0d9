#include "symgen/core/error.hpp"
#include "symgen/genus/genus.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace symgen::genus {

namespace {

Error invalid(const std::string& what) { return Error("invalid-manifold", what); }

}  // namespace

ManifoldModel::ManifoldModel(std::string name, int dim_c, std::vector<CohomologyGenerator> generators,
                             Polynomial total_chern, Monomial volume)
    : name_(std::move(name)),
      dim_c_(dim_c),
      generators_(std::move(generators)),
      total_chern_(std::move(total_chern)),
      volume_(std::move(volume)) {
    if (dim_c_ < 0) throw invalid("negative dimension");
    for (const auto& g : generators_) {
        if (g.gen.degree < 1) throw invalid("generator " + to_string(g.gen) + " must have positive even real degree");
        if (g.nilpotency < 1) throw invalid("nilpotency of " + to_string(g.gen) + " must be at least 1");
    }
    for (const auto& [m, c] : total_chern_.terms())
        for (const auto& [g, e] : m.factors())
            if (!is_cohomology(g)) throw invalid("total Chern class uses unknown symbol " + to_string(g));
    total_chern_ = reduce(total_chern_);
    if (total_chern_.constant_term() != 1) throw invalid("total Chern class must have constant term 1");
    for (const auto& [g, e] : volume_.factors())
        if (!is_cohomology(g)) throw invalid("volume monomial uses unknown symbol " + to_string(g));
    if (class_degree(volume_) != dim_c_) throw invalid("volume monomial must have complex degree " + std::to_string(dim_c_));
    if (reduce(Polynomial(volume_)).is_zero()) throw invalid("volume monomial vanishes in the cohomology ring");
}

ManifoldModel ManifoldModel::point() { return {"point", 0, {}, Polynomial(Rational(1)), Monomial{}}; }

ManifoldModel ManifoldModel::projective_space(int n) {
    if (n < 0) throw invalid("CP^n needs n >= 0");
    if (n == 0) return {"CP0", 0, {}, Polynomial(Rational(1)), Monomial{}};
    const Generator x{1, 'x', 1};
    const Polynomial c = (Polynomial(Rational(1)) + Polynomial::generator(x)).pow(static_cast<unsigned>(n + 1));
    return {"CP" + std::to_string(n), n, {{x, n + 1}}, c, Monomial(x, n)};
}

int ManifoldModel::max_index() const {
    int out = 0;
    for (const auto& g : generators_) out = std::max(out, g.gen.index);
    return out;
}

Polynomial ManifoldModel::embed_second_factor(const ManifoldModel& other, const Polynomial& p) const {
    const int offset = max_index();
    std::map<Generator, Polynomial> images;
    for (const auto& g : other.generators_)
        images[g.gen] = Polynomial::generator(Generator{g.gen.degree, g.gen.family, g.gen.index + offset});
    return p.substitute(images);
}

ManifoldModel ManifoldModel::product(const ManifoldModel& m, const ManifoldModel& n) {
    std::vector<CohomologyGenerator> gens = m.generators_;
    const int offset = m.max_index();
    for (const auto& g : n.generators_)
        gens.push_back({Generator{g.gen.degree, g.gen.family, g.gen.index + offset}, g.nilpotency});
    const Polynomial vol = m.embed_second_factor(n, Polynomial(n.volume_));
    return {m.name_ + "x" + n.name_, m.dim_c_ + n.dim_c_, std::move(gens),
            m.total_chern_ * m.embed_second_factor(n, n.total_chern_), m.volume_ * vol.terms().begin()->first};
}

ManifoldModel ManifoldModel::from_name(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    std::optional<ManifoldModel> out;
    for (const auto& p : parts) {
        ManifoldModel factor = point();
        if (p == "point" || p == "pt") {
            factor = point();
        } else if (p.size() > 2 && p.rfind("CP", 0) == 0 &&
                   std::all_of(p.begin() + 2, p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int n = std::stoi(p.substr(2));
            if (n > 12) throw Error("invalid-manifold", "catalog supports CPn for n <= 12");
            factor = projective_space(n);
        } else {
            throw Error("unknown-manifold", "unknown manifold '" + name + "'");
        }
        out = out ? product(*out, factor) : factor;
    }
    return *out;
}

bool ManifoldModel::is_cohomology(const Generator& g) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const auto& c) { return c.gen == g; });
}

int ManifoldModel::class_degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [g, e] : m.factors())
        if (is_cohomology(g)) d += g.degree * e;
    return d;
}

Polynomial ManifoldModel::reduce(const Polynomial& p) const {
    return p.filtered([this](const Monomial& m) {
        if (class_degree(m) > dim_c_) return false;
        for (const auto& [g, e] : m.factors())
            for (const auto& c : generators_)
                if (c.gen == g && e >= c.nilpotency) return false;
        return true;
    });
}

Polynomial ManifoldModel::pair(const Polynomial& p) const {
    Polynomial out;
    const Polynomial reduced = reduce(p);
    for (const auto& [m, c] : reduced.terms()) {
        std::vector<Monomial::Factor> cohomology, rest;
        for (const auto& f : m.factors()) (is_cohomology(f.first) ? cohomology : rest).push_back(f);
        if (Monomial::from_factors(cohomology) == volume_) out.add_term(Monomial::from_factors(rest), c);
    }
    return out;
}

Polynomial ManifoldModel::chern_class(int i) const {
    return total_chern_.filtered([this, i](const Monomial& m) { return class_degree(m) == i; });
}

Polynomial ManifoldModel::parse_class(const std::string& text) const {
    const Grading grading = [this](char family, int index) {
        for (const auto& g : generators_)
            if (g.gen.family == family && g.gen.index == index) return g.gen.degree;
        throw Error("invalid-class", std::string("unknown symbol ") + family + "[" + std::to_string(index) + "] on " + name_);
    };
    return reduce(parse_polynomial(text, grading));
}

std::vector<Integer> ManifoldModel::betti() const {
    std::vector<Integer> out(static_cast<std::size_t>(2 * dim_c_) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int deg) {
        if (g == generators_.size()) {
            out[static_cast<std::size_t>(2 * deg)] += 1;
            return;
        }
        const auto& c = generators_[g];
        for (int e = 0; e < c.nilpotency && deg + e * c.gen.degree <= dim_c_; ++e) rec(g + 1, deg + e * c.gen.degree);
    };
    rec(0, 0);
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

std::string generator_text(const std::string& sym) {
    if (sym.size() == 1 && std::isalpha(static_cast<unsigned char>(sym[0]))) return sym + "[1]";
    return sym;
}

// Rewrites bare single-letter symbols as letter[1].
std::string expand_bare_symbols(const std::string& text, const std::vector<std::string>& bare) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        out += text[i];
        const bool is_bare = std::find(bare.begin(), bare.end(), std::string(1, text[i])) != bare.end();
        const bool next_bracket = i + 1 < text.size() && text[i + 1] == '[';
        if (is_bare && !next_bracket) out += "[1]";
    }
    return out;
}

}  // namespace

ManifoldModel ManifoldModel::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid-json", std::string("manifold file is not valid JSON: ") + e.what());
    }
    try {
        const std::string name = j.at("name").get<std::string>();
        const int dim_c = j.at("dim_c").get<int>();
        std::vector<CohomologyGenerator> gens;
        std::vector<std::string> bare;
        for (const auto& g : j.at("generators")) {
            const std::string sym = g.at("sym").get<std::string>();
            const int deg = g.at("deg").get<int>();
            if (deg <= 0 || deg % 2) throw invalid("generator " + sym + " must have positive even degree");
            if (sym.size() == 1) bare.push_back(sym);
            const Polynomial p = parse_polynomial(generator_text(sym));
            if (p.size() != 1 || p.terms().begin()->first.factors().size() != 1)
                throw invalid("bad generator symbol '" + sym + "'");
            Generator gen = p.terms().begin()->first.factors().front().first;
            gen.degree = deg / 2;
            gens.push_back({gen, g.at("nilpotency").get<int>()});
        }
        const Grading grading = [&gens](char family, int index) {
            for (const auto& g : gens)
                if (g.gen.family == family && g.gen.index == index) return g.gen.degree;
            throw invalid(std::string("unknown symbol ") + family + "[" + std::to_string(index) + "]");
        };
        const Polynomial chern = parse_polynomial(expand_bare_symbols(j.at("total_chern").get<std::string>(), bare), grading);
        const Polynomial vol = parse_polynomial(expand_bare_symbols(j.at("volume_monomial").get<std::string>(), bare), grading);
        if (vol.size() != 1 || vol.terms().begin()->second != 1) throw invalid("volume_monomial must be a single monomial");
        return {name, dim_c, std::move(gens), chern, vol.terms().begin()->first};
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid-manifold", std::string("malformed manifold description: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == "parse") throw Error("invalid-manifold", e.what());
        throw;
    }
}

std::string ManifoldModel::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name_;
    j["dim_c"] = dim_c_;
    j["generators"] = nlohmann::ordered_json::array();
    for (const auto& g : generators_)
        j["generators"].push_back({{"sym", to_string(g.gen)}, {"deg", 2 * g.gen.degree}, {"nilpotency", g.nilpotency}});
    j["total_chern"] = to_string(total_chern_);
    j["volume_monomial"] = to_string(volume_);
    return j.dump();
}

}  // namespace symgen::genus
