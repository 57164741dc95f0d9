#include "symgen/cli/cli.hpp"

#include "symgen/acceptance/acceptance.hpp"
#include "symgen/core/error.hpp"
#include "symgen/genus/genus.hpp"
#include "symgen/homology/homology.hpp"
#include "symgen/mzv/mzv.hpp"
#include "symgen/qsymm/quasisymmetric.hpp"
#include "symgen/symm/symmetric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace symgen::cli {

namespace {

using json = nlohmann::ordered_json;
using symm::GeneratorStart;

enum class Format { Json, Csv, Text };

struct RunConfig {
    int bound = 30;
    double error = 1e-9;
    GeneratorStart start = GeneratorStart::FromZero;
    std::optional<Format> format;
    std::string output;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    json data = json::object();
    std::string diagnostics;
    std::vector<std::string> columns;
    std::vector<json> rows;
    Format default_format = Format::Json;
    bool failed = false;
};

std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "";
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

std::string model_name(GeneratorStart s) { return s == GeneratorStart::FromZero ? "from-zero" : "from-one"; }

GeneratorStart parse_model(const std::string& s) {
    if (s == "from-zero" || s == "k>=0") return GeneratorStart::FromZero;
    if (s == "from-one" || s == "i>0") return GeneratorStart::FromOne;
    throw UsageError("unknown model '" + s + "' (expected from-zero or from-one)");
}

void validate(const RunConfig& c) {
    if (c.bound < 1) throw UsageError("--bound must be at least 1");
    if (!(c.error > 0)) throw UsageError("--error must be positive");
}

// Config file keys mirror the global flags.
void apply_config_file(const std::string& path, RunConfig& c) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("malformed config file '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "bound")
                c.bound = value.get<int>();
            else if (key == "error")
                c.error = value.get<double>();
            else if (key == "model")
                c.start = parse_model(value.get<std::string>());
            else if (key == "format")
                c.format = parse_format(value.get<std::string>());
            else if (key == "output")
                c.output = value.get<std::string>();
            else
                throw UsageError("unknown config key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw UsageError("bad value in config file: " + std::string(e.what()));
    }
}

json config_json(const RunConfig& c, Format f) {
    return json{{"bound", c.bound}, {"error", c.error}, {"model", model_name(c.start)}, {"format", format_name(f)}};
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string render(const Report& r, const RunConfig& c) {
    const Format f = c.format.value_or(r.default_format);
    std::ostringstream out;
    if (f == Format::Json) {
        json j = r.data;
        if (!r.columns.empty()) j["rows"] = r.rows;
        j["config"] = config_json(c, f);
        out << j.dump(2) << "\n";
    } else if (f == Format::Csv) {
        if (!r.columns.empty()) {
            for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
            out << "\n";
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(cell(row[r.columns[i]]));
                out << "\n";
            }
        } else {
            out << "key,value\n";
            for (const auto& [k, v] : r.data.items()) out << k << "," << csv_escape(cell(v)) << "\n";
        }
    } else {
        for (const auto& [k, v] : r.data.items()) out << k << ": " << cell(v) << "\n";
        if (!r.columns.empty()) {
            for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "\t" : "") << r.columns[i];
            out << "\n";
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "\t" : "") << cell(row[r.columns[i]]);
                out << "\n";
            }
        }
    }
    return out.str();
}

std::string error_json(const std::string& message, const std::string& code) {
    return json{{"error", message}, {"code", code}}.dump() + "\n";
}


json integer_json(const Integer& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

void dimension_rows(Report& r, const std::vector<Integer>& dims) {
    r.columns = {"degree", "dim"};
    for (std::size_t d = 0; d < dims.size(); ++d) r.rows.push_back(json{{"degree", d}, {"dim", integer_json(dims[d])}});
}

genus::ManifoldModel load_manifold(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("io", "cannot read manifold file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return genus::ManifoldModel::from_json(buf.str());
    }
    return genus::ManifoldModel::from_name(name);
}

json certified_json(const mzv::CertifiedReal& v) { return json{{"value", v.value}, {"error_bound", v.error_bound}}; }

}  // namespace

CliResult dispatch(const std::vector<std::string>& args) {
    CliResult result;
    CLI::App app{"symgen: exact computations with graded Hopf algebras, genera and multizeta values", "symgen"};
    app.fallthrough();
    app.require_subcommand(1);

    std::optional<int> opt_bound;
    std::optional<double> opt_error;
    std::optional<std::string> opt_model, opt_format, opt_output, opt_config;
    app.add_option("--bound", opt_bound, "Truncation degree D (default 30)");
    app.add_option("--error", opt_error, "Target error for certified numerics (default 1e-9)");
    app.add_option("--model", opt_model, "Generator convention: from-zero (k >= 0) or from-one (i > 0)");
    app.add_option("--format", opt_format, "Output format: json, csv or text");
    app.add_option("--output", opt_output, "Write the report to this file");
    app.add_option("--config", opt_config, "JSON config file; flags take precedence");

    std::function<Report(const RunConfig&)> run;
    std::string s1, s2, s3;
    int i1 = 0;
    std::optional<int> oi;
    std::optional<double> od;
    bool flag = false;

    // ---- symm
    auto* symm_cmd = app.add_subcommand("symm", "Symmetric functions");
    symm_cmd->require_subcommand(1);
    {
        auto* c = symm_cmd->add_subcommand("convert", "Change of basis");
        c->add_option("--from", s1, "Source basis: E, P, H or M")->required();
        c->add_option("--to", s2, "Target basis")->required();
        c->add_option("--expr", s3, "Polynomial, e.g. c[1]^2 - 2*c[2]")->required();
        c->callback([&] {
            run = [&](const RunConfig&) {
                const auto from = symm::basis_from_name(s1), to = symm::basis_from_name(s2);
                const symm::SymmFn f{from, parse_polynomial(s3, symm::symm_grading)};
                Report r;
                r.data = json{{"from", symm::basis_name(from)}, {"to", symm::basis_name(to)}, {"input", to_string(f.value)},
                              {"result", to_string(symm::convert(f, to).value)}};
                return r;
            };
        });
        auto* ic = symm_cmd->add_subcommand("identity-check", "Cross-check a generating-function identity");
        ic->add_option("--which", s1, "d-classes, chern-newton or a-classes")->required();
        ic->add_option("--max-weight", oi, "Largest weight (default: --bound)");
        ic->callback([&] {
            run = [&](const RunConfig& c) {
                const auto rep = symm::identity_check(s1, oi.value_or(c.bound));
                Report r;
                r.data = json{{"identity", rep.identity}, {"max_weight", rep.max_weight},
                              {"status", rep.exact_match ? "exact-match" : "mismatch"}};
                if (rep.first_mismatch_weight) r.data["first_mismatch_weight"] = *rep.first_mismatch_weight;
                r.failed = !rep.exact_match;
                return r;
            };
        });
        auto* dc = symm_cmd->add_subcommand("d-classes", "d-classes in Chern classes");
        dc->add_option("--max-weight", oi, "Largest weight (default: --bound)");
        dc->callback([&] {
            run = [&](const RunConfig& c) {
                const int n = oi.value_or(c.bound);
                if (n < 1) throw Error("invalid-bound", "--max-weight must be at least 1");
                const auto d = symm::d_classes(n);
                Report r;
                r.columns = {"weight", "class"};
                for (int k = 1; k <= n; ++k) r.rows.push_back(json{{"weight", k}, {"class", to_string(d[k])}});
                return r;
            };
        });
        auto* pr = symm_cmd->add_subcommand("primitives", "Primitive space in one weight");
        pr->add_option("--weight", i1, "Weight k")->required();
        pr->add_option("--space", s1, "BU or BUmodSO")->default_val("BUmodSO");
        pr->callback([&] {
            run = [&](const RunConfig& c) {
                const auto model = symm::model_from_name(s1);
                const auto space = symm::primitive_space(i1, model, c.start);
                Report r;
                r.data = json{{"weight", i1}, {"space", symm::model_name(model)}, {"dimension", space.size()}};
                r.columns = {"chern", "newton"};
                for (const auto& f : space)
                    r.rows.push_back(json{{"chern", to_string(f.value)},
                                          {"newton", to_string(symm::convert(f, symm::SymmBasis::P).value)}});
                return r;
            };
        });
    }

    // ---- qsymm
    auto* q_cmd = app.add_subcommand("qsymm", "Quasisymmetric functions and free algebras");
    q_cmd->require_subcommand(1);
    {
        auto* p = q_cmd->add_subcommand("product", "Quasi-shuffle product");
        p->add_option("--a", s1, "e.g. M(2,1) - 1/2*M(3)")->required();
        p->add_option("--b", s2)->required();
        p->callback([&] {
            run = [&](const RunConfig&) {
                const auto a = qsymm::parse_qsymm(s1), b = qsymm::parse_qsymm(s2);
                Report r;
                r.data = json{{"a", qsymm::to_string(a)}, {"b", qsymm::to_string(b)},
                              {"product", qsymm::to_string(qsymm::quasi_shuffle(a, b))}};
                return r;
            };
        });
        auto* l = q_cmd->add_subcommand("lyndon", "Lyndon words of one weight");
        l->add_option("--weight", i1)->required();
        l->add_option("--profile", s1, "all, odd3, ko, ap:<first>:<step> or a weight list")->default_val("all");
        l->callback([&] {
            run = [&](const RunConfig&) {
                const auto profile = qsymm::GeneratorProfile::parse(s1);
                Report r;
                json words = json::array();
                for (const auto& w : qsymm::lyndon_generators(i1, profile)) words.push_back(to_string(w));
                r.data = json{{"weight", i1}, {"profile", profile.describe()}, {"count", words.size()}, {"words", words}};
                return r;
            };
        });
        auto* h = q_cmd->add_subcommand("hilbert", "Hilbert series of a free algebra");
        h->add_option("--profile", s1)->default_val("all");
        h->add_option("--flavor", s2, "associative, lie or polynomial-on-lyndon")->default_val("associative");
        h->callback([&] {
            run = [&](const RunConfig& c) {
                Report r;
                r.default_format = Format::Csv;
                r.data = json{{"profile", qsymm::GeneratorProfile::parse(s1).describe()}, {"flavor", s2}};
                dimension_rows(r, qsymm::free_algebra_hilbert(qsymm::GeneratorProfile::parse(s1), c.bound,
                                                              qsymm::flavor_from_name(s2)));
                return r;
            };
        });
    }

    // ---- mzv
    auto* m_cmd = app.add_subcommand("mzv", "Multizeta values");
    m_cmd->require_subcommand(1);
    {
        auto* e = m_cmd->add_subcommand("eval", "Certified multizeta value, increasing index convention");
        e->add_option("--index", s1, "Composition, e.g. (2,3)")->required();
        e->callback([&] {
            run = [&](const RunConfig& c) {
                const auto idx = parse_composition(s1);
                const auto v = mzv::mzv_eval(idx, c.error);
                Report r;
                r.data = json{{"index", to_string(idx)}, {"value", v.value}, {"error_bound", v.error_bound}, {"admissible", true}};
                return r;
            };
        });
        auto* s = m_cmd->add_subcommand("specialize", "Zeta specialization of a quasisymmetric function");
        s->add_option("--expr", s1)->required();
        s->callback([&] {
            run = [&](const RunConfig& c) {
                const auto q = qsymm::parse_qsymm(s1);
                const auto v = mzv::zeta_specialize(q, c.error);
                Report r;
                r.data = json{{"expr", qsymm::to_string(q)}, {"value", v.value}, {"error_bound", v.error_bound}};
                return r;
            };
        });
        auto* st = m_cmd->add_subcommand("stuffle", "Check zeta(a) zeta(b) = zeta(a * b)");
        st->add_option("--a", s1)->required();
        st->add_option("--b", s2)->required();
        st->add_option("--tol", od, "Tolerance (default: --error)");
        st->callback([&] {
            run = [&](const RunConfig& c) {
                const auto rep = mzv::homomorphism_check(qsymm::parse_qsymm(s1), qsymm::parse_qsymm(s2), od.value_or(c.error));
                Report r;
                r.data = json{{"a", s1}, {"b", s2}, {"product_of_values", certified_json(rep.product_of_values)},
                              {"value_of_product", certified_json(rep.value_of_product)}, {"difference", rep.difference},
                              {"allowed", rep.allowed}, {"status", rep.pass ? "pass" : "fail"}};
                r.failed = !rep.pass;
                return r;
            };
        });
    }

    // ---- tor
    auto* t_cmd = app.add_subcommand("tor", "Tor over a graded algebra via the reduced bar complex");
    t_cmd->add_option("--algebra", s1, "exterior:<d,...> or squarezero:<d,...>")->required();
    t_cmd->add_option("--total", oi, "Total degree bound T (default: --bound)");
    t_cmd->add_flag("--mark-unknown", flag, "Report cells beyond the truncation as unknown instead of failing");
    t_cmd->callback([&] {
        run = [&](const RunConfig& c) {
            const auto a = homology::parse_algebra(s1, c.bound);
            const int total = oi.value_or(c.bound);
            const auto table = homology::tor_via_bar(
                a, total, flag ? homology::TruncationPolicy::MarkUnknown : homology::TruncationPolicy::Strict);
            Report r;
            r.default_format = Format::Csv;
            r.data = json{{"algebra", a.description}, {"truncation", a.truncation}, {"total_bound", total},
                          {"d_squared_zero", table.differential_squares_to_zero}};
            r.columns = {"s", "t", "total", "dim"};
            std::map<std::pair<int, int>, json> cells;  // keyed by (total, s)
            for (const auto& [st, dim] : table.dims) cells[{st.first + st.second, st.first}] = json(dim);
            for (const auto& st : table.unknown) cells[{st.first + st.second, st.first}] = json("unknown");
            for (const auto& [key, dim] : cells)
                r.rows.push_back(json{{"s", key.second}, {"t", key.first - key.second}, {"total", key.first}, {"dim", dim}});
            return r;
        };
    });

    // ---- series
    auto* se_cmd = app.add_subcommand("series", "Dimension tables of coefficient rings");
    se_cmd->add_option("--which", s1, "sOmega, THH, KTheoryFiber or morphism")->required();
    se_cmd->add_option("--manifold", s2, "Manifold for --which morphism")->default_val("point");
    se_cmd->add_option("--manifold-file", s3, "Manifold JSON file for --which morphism");
    se_cmd->callback([&] {
        run = [&](const RunConfig& c) {
            Report r;
            r.default_format = Format::Csv;
            if (s1 == "morphism") {
                const auto m = load_manifold(s2, s3);
                r.data = json{{"which", "morphism"}, {"manifold", m.name()}};
                dimension_rows(r, genus::morphism_module_series(m, c.bound, c.start));
            } else {
                const auto ring = homology::ring_from_name(s1);
                r.data = json{{"which", homology::ring_name(ring)}};
                dimension_rows(r, homology::coefficient_ring_series(ring, c.bound, c.start));
            }
            return r;
        };
    });

    // ---- genus
    auto* g_cmd = app.add_subcommand("genus", "Genera, Chern characters and deformations");
    g_cmd->require_subcommand(1);
    std::string manifold = "CP2", manifold_file, series = "A-hat", other = "CP1", params;
    auto manifold_options = [&](CLI::App* sub) {
        sub->add_option("--manifold", manifold, "Catalog name: point, CPn, products like CP1xCP2")->default_val("CP2");
        sub->add_option("--manifold-file", manifold_file, "Manifold JSON file");
    };
    {
        auto* c = g_cmd->add_subcommand("compute", "Value of a genus");
        manifold_options(c);
        c->add_option("--series", series, "A-hat, Todd, L or Gamma")->default_val("A-hat");
        c->callback([&] {
            run = [&](const RunConfig&) {
                const auto m = load_manifold(manifold, manifold_file);
                const auto rho = genus::GenusSeries::from_name(series, m.dim_c());
                Report r;
                r.data = json{{"manifold", m.name()}, {"series", rho.name}, {"value", to_string(genus::genus(m, rho))}};
                return r;
            };
        });
        auto* d = g_cmd->add_subcommand("deform", "Deformed genus");
        manifold_options(d);
        d->add_option("--series", series)->default_val("A-hat");
        d->add_option("--t", params, "Parameters k:value, e.g. 1:1/3,3:0; omit for symbolic t[k]");
        d->callback([&] {
            run = [&](const RunConfig& c) {
                const auto m = load_manifold(manifold, manifold_file);
                const auto rho = genus::GenusSeries::from_name(series, m.dim_c());
                const auto t = params.empty() ? genus::DeformationParameters::symbolic(m.dim_c(), c.start)
                                              : genus::DeformationParameters::parse(params);
                json tj = json::object();
                for (const auto& [k, v] : t.values) tj[std::to_string(k)] = to_string(v);
                Report r;
                r.data = json{{"manifold", m.name()}, {"series", rho.name}, {"t", tj},
                              {"value", to_string(genus::deform_genus(m, rho, t, c.start))}};
                return r;
            };
        });
        auto* ch = g_cmd->add_subcommand("chern-character", "ch_k of the tangent bundle");
        manifold_options(ch);
        ch->add_option("--k", i1)->required();
        ch->callback([&] {
            run = [&](const RunConfig&) {
                const auto m = load_manifold(manifold, manifold_file);
                Report r;
                r.data = json{{"manifold", m.name()}, {"k", i1}, {"class", to_string(genus::chern_character(m, i1))}};
                return r;
            };
        });
        auto* dv = g_cmd->add_subcommand("diagonal", "ch_k(TM) + ch_k(conj TM) = 0");
        manifold_options(dv);
        dv->add_option("--k", i1)->required();
        dv->callback([&] {
            run = [&](const RunConfig&) {
                const auto m = load_manifold(manifold, manifold_file);
                Report r;
                r.data = json{{"manifold", m.name()}, {"k", i1}, {"vanishes", genus::diagonal_vanishing_check(m, i1)}};
                return r;
            };
        });
        auto* pv = g_cmd->add_subcommand("primitivity", "ch_k(T(M x N)) = ch_k(TM) + ch_k(TN)");
        manifold_options(pv);
        pv->add_option("--other", other)->default_val("CP1");
        pv->add_option("--k", i1)->required();
        pv->callback([&] {
            run = [&](const RunConfig&) {
                const auto m = load_manifold(manifold, manifold_file);
                const auto n = genus::ManifoldModel::from_name(other);
                Report r;
                r.data = json{{"manifold", m.name()}, {"other", n.name()}, {"k", i1}, {"primitive", genus::primitivity_check(m, n, i1)}};
                return r;
            };
        });
        auto* ex = g_cmd->add_subcommand("exponential", "Genus of CPn through the logarithm of the exponential");
        ex->add_option("--n", i1)->required();
        ex->add_option("--series", series)->default_val("Todd");
        ex->callback([&] {
            run = [&](const RunConfig&) {
                const auto rho = genus::GenusSeries::from_name(series, i1 + 1);
                const auto m = genus::ManifoldModel::projective_space(i1);
                Report r;
                r.data = json{{"n", i1}, {"series", rho.name},
                              {"via_exponential", to_string(genus::genus_from_exponential(rho.exponential(), i1))},
                              {"via_characteristic", to_string(genus::genus(m, rho))}};
                return r;
            };
        });
        auto* ga = g_cmd->add_subcommand("gamma", "Coefficients of 1/Gamma(x)");
        ga->add_option("--order", i1, "Highest power of x")->default_val(5);
        ga->callback([&] {
            run = [&](const RunConfig& c) {
                if (i1 < 1 || i1 > 12) throw Error("invalid-bound", "--order must lie in 1..12");
                const auto f = genus::gamma_exponential(i1);
                const auto v = genus::gamma_exponential_numeric(i1, c.error);
                Report r;
                r.columns = {"power", "symbolic", "value", "error_bound"};
                for (int k = 0; k <= i1; ++k)
                    r.rows.push_back(json{{"power", k}, {"symbolic", to_string(f[k])}, {"value", v[static_cast<std::size_t>(k)].value},
                                          {"error_bound", v[static_cast<std::size_t>(k)].error_bound}});
                return r;
            };
        });
        auto* az = g_cmd->add_subcommand("a-hat-zeta", "A-hat deformed by t_k = zeta(k), odd k >= 3");
        manifold_options(az);
        az->callback([&] {
            run = [&](const RunConfig& c) {
                const auto m = load_manifold(manifold, manifold_file);
                Report r;
                r.data = json{{"manifold", m.name()}};
                r.data.update(certified_json(genus::a_hat_zeta(m, c.error)));
                return r;
            };
        });
    }

    // ---- coaction
    auto* co_cmd = app.add_subcommand("coaction", "Rational coaction on the cohomology of a manifold");
    co_cmd->add_option("--manifold", manifold)->default_val("CP2");
    co_cmd->add_option("--manifold-file", manifold_file);
    co_cmd->add_option("--class", s1, "Cohomology class, e.g. x[1]")->default_val("1");
    co_cmd->callback([&] {
        run = [&](const RunConfig& c) {
            const auto m = load_manifold(manifold, manifold_file);
            const Polynomial x = m.parse_class(s1);
            const auto e = genus::coaction(m, x, c.bound, c.start);
            Report r;
            r.data = json{{"manifold", m.name()}, {"class", to_string(x)}, {"retained_degree", c.bound},
                          {"counit", to_string(genus::counit(e))},
                          {"coassociative", genus::coaction_then_coaction(m, x, c.bound, c.start) ==
                                                genus::coaction_then_coproduct(m, x, c.bound, c.start)}};
            r.columns = {"dual_monomial", "class"};
            for (const auto& [key, v] : e) r.rows.push_back(json{{"dual_monomial", to_string(key)}, {"class", to_string(v)}});
            return r;
        };
    });

    // ---- acceptance
    auto* a_cmd = app.add_subcommand("acceptance", "Run the acceptance suite");
    a_cmd->add_option("--check", oi, "Run a single criterion");
    a_cmd->add_flag("--timings", flag, "Also put wall-clock timings in the report (stdout is then not reproducible)");
    a_cmd->callback([&] {
        run = [&](const RunConfig& c) {
            acceptance::AcceptanceConfig ac;
            ac.bound = c.bound;
            ac.start = c.start;
            const auto results = oi ? std::vector<acceptance::CheckResult>{acceptance::run_check(*oi, ac)} : acceptance::run_all(ac);
            Report r;
            int passed = 0, failed = 0, skipped = 0;
            r.columns = {"id", "name", "status", "required_bound", "detail"};
            if (flag) r.columns.push_back("seconds");
            for (const auto& x : results) {
                json row{{"id", x.id}, {"name", x.name}, {"status", acceptance::status_name(x.status)},
                         {"required_bound", x.required_bound}, {"detail", x.detail}};
                if (flag) row["seconds"] = x.seconds;
                std::ostringstream t;
                t << "criterion " << x.id << " " << acceptance::status_name(x.status) << " in " << x.seconds << " s\n";
                r.diagnostics += t.str();
                r.rows.push_back(row);
                passed += x.status == acceptance::Status::Pass;
                failed += x.status == acceptance::Status::Fail;
                skipped += x.status == acceptance::Status::Skipped;
            }
            r.data = json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
            r.failed = failed > 0;
            return r;
        };
    });

    // ---- parse
    std::vector<std::string> argv_store{"symgen"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.out = error_json(e.what(), "usage");
        return result;
    }

    RunConfig config;
    try {
        if (opt_config) apply_config_file(*opt_config, config);
        if (opt_bound) config.bound = *opt_bound;
        if (opt_error) config.error = *opt_error;
        if (opt_model) config.start = parse_model(*opt_model);
        if (opt_format) config.format = parse_format(*opt_format);
        if (opt_output) config.output = *opt_output;
        validate(config);
    } catch (const UsageError& e) {
        result.exit_code = 2;
        result.out = error_json(e.what(), "usage");
        return result;
    }
    if (!run) {
        result.exit_code = 2;
        result.out = error_json("missing subcommand", "usage");
        return result;
    }

    try {
        const Report report = run(config);
        const std::string text = render(report, config);
        result.err = report.diagnostics;
        if (!config.output.empty()) {
            std::ofstream out(config.output);
            if (!out || !(out << text)) throw Error("io", "cannot write '" + config.output + "'");
        } else {
            result.out = text;
        }
        result.exit_code = report.failed ? 1 : 0;
    } catch (const Error& e) {
        result.exit_code = 1;
        result.out = error_json(e.what(), e.code());
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.out = error_json(e.what(), "internal");
    }
    return result;
}

}  // namespace symgen::cli
