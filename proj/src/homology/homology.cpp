#include "symgen/homology/homology.hpp"

#include "symgen/core/error.hpp"
#include "symgen/core/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace symgen::homology {

const std::map<int, Rational>& GradedAlgebraPresentation::multiply(int i, int j) const {
    static const std::map<int, Rational> zero;
    const auto it = products.find({i, j});
    return it == products.end() ? zero : it->second;
}

std::vector<Integer> GradedAlgebraPresentation::hilbert_series() const {
    std::vector<Integer> out(static_cast<std::size_t>(truncation) + 1, 0);
    out[0] = 1;
    for (int d : degrees) out[static_cast<std::size_t>(d)] += 1;
    return out;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void check_truncation(int truncation) {
    if (truncation < 0) throw Error("invalid-bound", "truncation degree must be nonnegative");
}

}  // namespace

GradedAlgebraPresentation exterior_algebra(const std::vector<int>& degrees, int truncation) {
    check_truncation(truncation);
    for (int d : degrees)
        if (d <= 0 || d % 2 == 0)
            throw Error("even-degree", "exterior generators must have odd positive degree, got " + std::to_string(d));
    if (degrees.size() > 20) throw Error("invalid-argument", "too many exterior generators");
    GradedAlgebraPresentation a;
    a.truncation = truncation;
    a.description = "exterior:" + join(degrees);
    const unsigned n = static_cast<unsigned>(degrees.size());
    std::map<unsigned, int> index_of;
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int deg = 0;
        std::string name;
        for (unsigned g = 0; g < n; ++g)
            if (mask >> g & 1u) {
                deg += degrees[g];
                name += (name.empty() ? "y" : "*y") + std::to_string(degrees[g]);
            }
        if (deg > truncation) {
            a.complete = false;
            continue;
        }
        index_of[mask] = static_cast<int>(a.degrees.size());
        masks.push_back(mask);
        a.degrees.push_back(deg);
        a.names.push_back(name);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < masks.size(); ++j) {
            const unsigned s = masks[i], t = masks[j];
            if (s & t) continue;
            const auto it = index_of.find(s | t);
            if (it == index_of.end()) continue;
            // odd generators anticommute: one sign per out-of-order pair
            int swaps = 0;
            for (unsigned g = 0; g < n; ++g)
                if (t >> g & 1u) swaps += std::popcount(s >> (g + 1));
            a.products[{static_cast<int>(i), static_cast<int>(j)}][it->second] = swaps % 2 ? -1 : 1;
        }
    return a;
}

GradedAlgebraPresentation square_zero_extension(const std::vector<int>& degrees, int truncation) {
    check_truncation(truncation);
    GradedAlgebraPresentation a;
    a.truncation = truncation;
    a.description = "squarezero:" + join(degrees);
    for (int d : degrees) {
        if (d <= 0) throw Error("invalid-degree", "generator degrees must be positive, got " + std::to_string(d));
        if (d > truncation) {
            a.complete = false;
            continue;
        }
        a.degrees.push_back(d);
        a.names.push_back("y" + std::to_string(d) + (a.degrees.size() > 1 && a.degrees[a.degrees.size() - 2] == d
                                                          ? "_" + std::to_string(a.degrees.size())
                                                          : ""));
    }
    return a;
}

GradedAlgebraPresentation parse_algebra(const std::string& text, int truncation) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("invalid-algebra", "expected <kind>:<degrees>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    std::vector<int> degrees;
    std::stringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            degrees.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error("invalid-algebra", "bad degree '" + item + "' in '" + text + "'");
        }
    }
    if (kind == "exterior") return exterior_algebra(degrees, truncation);
    if (kind == "squarezero" || kind == "square-zero") return square_zero_extension(degrees, truncation);
    throw Error("invalid-algebra", "unknown algebra kind '" + kind + "'");
}

// ------------------------------------------------------------------ bar

long TorTable::dimension(int s, int t) const {
    const auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

std::vector<Integer> TorTable::total_series() const {
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    for (const auto& [st, dim] : dims) out[static_cast<std::size_t>(st.first + st.second)] += dim;
    if (!unknown.empty())
        throw Error("truncation", "Tor table has unknown cells; total series undetermined");
    return out;
}

namespace {

using Tuple = std::vector<int>;

// Ordered s-tuples of ideal basis elements with internal degree t.
std::vector<Tuple> bar_basis(const GradedAlgebraPresentation& a, int s, int t) {
    std::vector<Tuple> out;
    Tuple cur;
    std::function<void(int, int)> rec = [&](int left, int deg) {
        if (left == 0) {
            if (deg == 0) out.push_back(cur);
            return;
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            // each remaining slot needs degree >= 1
            if (a.degrees[k] > deg - (left - 1)) continue;
            cur.push_back(static_cast<int>(k));
            rec(left - 1, deg - a.degrees[k]);
            cur.pop_back();
        }
    };
    rec(s, t);
    return out;
}

// Matrix of d: B_{s,t} -> B_{s-1,t}, rows indexed by the target basis.
RationalMatrix bar_differential(const GradedAlgebraPresentation& a, const std::vector<Tuple>& source,
                                const std::vector<Tuple>& target) {
    std::map<Tuple, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;
    RationalMatrix m(target.size(), std::vector<Rational>(source.size(), Rational(0)));
    for (std::size_t col = 0; col < source.size(); ++col) {
        const Tuple& x = source[col];
        int eps = 0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            eps += a.degrees[static_cast<std::size_t>(x[i])] + 1;
            for (const auto& [k, c] : a.multiply(x[i], x[i + 1])) {
                Tuple y(x.begin(), x.begin() + static_cast<long>(i));
                y.push_back(k);
                y.insert(y.end(), x.begin() + static_cast<long>(i) + 2, x.end());
                const auto it = row_of.find(y);
                if (it == row_of.end()) throw Error("internal", "bar differential left the complex");
                m[it->second][col] += eps % 2 ? -c : c;
            }
        }
    }
    return m;
}

bool composes_to_zero(const RationalMatrix& d_low, const RationalMatrix& d_high) {
    // d_low: B_s -> B_{s-1}, d_high: B_{s+1} -> B_s
    if (d_low.empty() || d_high.empty()) return true;
    const std::size_t inner = d_high.size(), cols = d_high.front().size();
    for (const auto& row : d_low)
        for (std::size_t c = 0; c < cols; ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < inner; ++k)
                if (row[k] != 0 && d_high[k][c] != 0) acc += row[k] * d_high[k][c];
            if (acc != 0) return false;
        }
    return true;
}

}  // namespace

TorTable tor_via_bar(const GradedAlgebraPresentation& a, int bound, TruncationPolicy policy) {
    if (bound < 0) throw Error("invalid-bound", "total degree bound must be nonnegative");
    const bool reliable_everywhere = a.complete || bound <= a.truncation;
    if (!reliable_everywhere && policy == TruncationPolicy::Strict)
        throw Error("truncation", "total degree " + std::to_string(bound) + " exceeds the truncation degree " +
                                      std::to_string(a.truncation) + " of " + a.description);
    TorTable table;
    table.bound = bound;
    table.differential_squares_to_zero = true;
    table.dims[{0, 0}] = 1;
    for (int t = 1; t <= bound; ++t) {
        // a cell (s,t) only involves elements of degree <= t
        const bool reliable = a.complete || t <= a.truncation;
        std::vector<std::vector<Tuple>> basis;
        for (int s = 0; s <= bound - t + 1; ++s) basis.push_back(bar_basis(a, s, t));
        std::vector<std::size_t> ranks(basis.size() + 1, 0);  // ranks[s] = rank of d: B_s -> B_{s-1}
        RationalMatrix previous;
        for (std::size_t s = 1; s < basis.size(); ++s) {
            RationalMatrix d = bar_differential(a, basis[s], basis[s - 1]);
            if (!composes_to_zero(previous, d)) table.differential_squares_to_zero = false;
            ranks[s] = basis[s].empty() || basis[s - 1].empty() ? 0 : rank(d);
            previous = std::move(d);
        }
        for (int s = 0; s + t <= bound; ++s) {
            if (!reliable) {
                table.unknown.insert({s, t});
                continue;
            }
            const long dim = static_cast<long>(basis[static_cast<std::size_t>(s)].size()) -
                             static_cast<long>(ranks[static_cast<std::size_t>(s)]) -
                             static_cast<long>(ranks[static_cast<std::size_t>(s) + 1]);
            if (dim) table.dims[{s, t}] = dim;
        }
    }
    if (!table.differential_squares_to_zero) throw Error("internal", "bar differential does not square to zero");
    return table;
}

// --------------------------------------------------------------- series

std::vector<Integer> predicted_polynomial_series(const std::vector<int>& degrees, int bound) {
    if (bound < 0) throw Error("invalid-bound", "bound must be nonnegative");
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    out[0] = 1;
    for (int d : degrees) {
        if (d <= 0) throw Error("invalid-degree", "generator degrees must be positive");
        for (int n = d; n <= bound; ++n) out[n] += out[n - d];
    }
    return out;
}

std::vector<Integer> predicted_word_series(const std::vector<int>& degrees, int bound) {
    if (bound < 0) throw Error("invalid-bound", "bound must be nonnegative");
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    out[0] = 1;
    for (int n = 1; n <= bound; ++n)
        for (int d : degrees) {
            if (d <= 0) throw Error("invalid-degree", "generator degrees must be positive");
            if (d <= n) out[n] += out[n - d];
        }
    return out;
}

std::vector<Integer> predicted_exterior_series(const std::vector<int>& degrees, int bound) {
    if (bound < 0) throw Error("invalid-bound", "bound must be nonnegative");
    std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
    out[0] = 1;
    for (int d : degrees) {
        if (d <= 0) throw Error("invalid-degree", "generator degrees must be positive");
        for (int n = bound; n >= d; --n) out[n] += out[n - d];
    }
    return out;
}

CoefficientRing ring_from_name(const std::string& name) {
    if (name == "sOmega" || name == "somega") return CoefficientRing::SOmega;
    if (name == "THH" || name == "thh") return CoefficientRing::THH;
    if (name == "KTheoryFiber" || name == "ktheory-fiber" || name == "ktheory") return CoefficientRing::KTheoryFiber;
    throw Error("invalid-argument", "unknown coefficient ring '" + name + "'");
}

std::string ring_name(CoefficientRing ring) {
    switch (ring) {
        case CoefficientRing::SOmega: return "sOmega";
        case CoefficientRing::THH: return "THH";
        case CoefficientRing::KTheoryFiber: return "KTheoryFiber";
    }
    return "";
}

std::vector<int> generator_degrees(int offset, int bound, symm::GeneratorStart start) {
    std::vector<int> out;
    for (int i = start == symm::GeneratorStart::FromZero ? 0 : 1; 4 * i + offset <= bound; ++i) out.push_back(4 * i + offset);
    return out;
}

std::vector<Integer> coefficient_ring_series(CoefficientRing ring, int bound, symm::GeneratorStart start) {
    if (bound < 0) throw Error("invalid-bound", "bound must be nonnegative");
    const auto odd = generator_degrees(1, bound, start);
    const auto even = generator_degrees(2, bound, start);
    switch (ring) {
        case CoefficientRing::SOmega: return predicted_exterior_series(odd, bound);
        case CoefficientRing::THH: {
            const auto e = predicted_exterior_series(odd, bound);
            const auto p = predicted_polynomial_series(even, bound);
            std::vector<Integer> out(static_cast<std::size_t>(bound) + 1, 0);
            for (int i = 0; i <= bound; ++i)
                for (int j = 0; i + j <= bound; ++j) out[i + j] += e[i] * p[j];
            return out;
        }
        case CoefficientRing::KTheoryFiber: {
            auto out = predicted_polynomial_series(even, bound);
            out[0] = 0;
            return out;
        }
    }
    return {};
}

}  // namespace symgen::homology
