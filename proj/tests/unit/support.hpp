// Independent reference implementations used as test oracles.
#ifndef SPIKECSP_TESTS_SUPPORT_HPP
#define SPIKECSP_TESTS_SUPPORT_HPP

#include "spikecsp/compiler.hpp"
#include "spikecsp/csp.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace testing_support {

using namespace spikecsp;

// Constraint-by-constraint evaluation without any indexing.
inline bool naive_satisfied(const Csp& csp, const std::vector<ValueIndex>& a) {
    for (const auto& c : csp.constraints()) {
        if (const auto* m = std::get_if<MutexPair>(&c)) {
            if (a[m->a.var] == m->a.value && a[m->b.var] == m->b.value) return false;
        } else {
            bool any = false;
            for (const auto& l : std::get<Clause>(c).literals) any = any || a[l.var] == l.value;
            if (!any) return false;
        }
    }
    return true;
}

// Odometer over the full Cartesian product of domains.
inline std::set<std::vector<ValueIndex>> enumerate_all(const Csp& csp) {
    std::set<std::vector<ValueIndex>> out;
    const std::size_t n = csp.num_variables();
    std::vector<ValueIndex> a(n, 0);
    while (true) {
        if (naive_satisfied(csp, a)) out.insert(a);
        std::size_t i = 0;
        while (i < n && ++a[i] == csp.domain_size(i)) a[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline std::vector<ValueIndex> values_of(const Assignment& a) {
    std::vector<ValueIndex> v;
    for (const auto& x : a.values) v.push_back(*x);
    return v;
}

// E(x) = -b.x - 1/2 x.W.x with W assembled as a dense matrix from the
// motif synapse lists.
inline double dense_energy(const Network& net, const std::vector<std::uint8_t>& x) {
    const std::size_t n = net.size();
    std::vector<double> w(n * n, 0.0), b(n, 0.0);
    for (const auto& m : net.motifs()) {
        for (const auto& s : m.synapses) {
            w[s.a * n + s.b] += s.weight;
            w[s.b * n + s.a] += s.weight;
        }
        for (const auto& t : m.biases) b[t.neuron] += t.bias;
    }
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        e -= b[i] * x[i];
        for (std::size_t j = 0; j < n; ++j) e -= 0.5 * w[i * n + j] * x[i] * x[j];
    }
    return e;
}

inline std::vector<std::uint8_t> bits(std::uint64_t index, std::size_t n) {
    std::vector<std::uint8_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (index >> i) & 1U;
    return x;
}

}  // namespace testing_support

#endif  // SPIKECSP_TESTS_SUPPORT_HPP
