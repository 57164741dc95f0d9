#include "symgen/core/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace symgen {

Rational bernoulli(unsigned n) {
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        Integer binom = 1;
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binom) * table[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        table.emplace_back(-acc / Rational(m + 1));
    }
    return table[n];
}

}  // namespace symgen
