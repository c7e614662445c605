#include "shadowchi/group.hpp"

#include <string>

#include "shadowchi/errors.hpp"

namespace shadowchi {

namespace {

int mod(std::int64_t x, int k) {
    auto r = static_cast<int>(x % k);
    return r < 0 ? r + k : r;
}

bool odd(std::int64_t n) { return (n % 2) != 0; }

}  // namespace

MarkedGroupSpec::MarkedGroupSpec(int k, bool twisted) : k_(k), twisted_(twisted) {
    if (k < 3) throw InputError("grid modulus k must be at least 3, got " + std::to_string(k));
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    return os << "((" << g.a << ',' << g.b << ")," << g.n << ')';
}

GroupElement normalized(const MarkedGroupSpec& spec, GroupElement g) {
    g.a = mod(g.a, spec.k());
    g.b = mod(g.b, spec.k());
    return g;
}

GroupElement multiply(const MarkedGroupSpec& spec, const GroupElement& g, const GroupElement& h) {
    int ha = h.a;
    int hb = h.b;
    if (spec.twisted() && odd(g.n)) std::swap(ha, hb);
    return {mod(std::int64_t{g.a} + ha, spec.k()), mod(std::int64_t{g.b} + hb, spec.k()), g.n + h.n};
}

GroupElement inverse(const MarkedGroupSpec& spec, const GroupElement& g) {
    // g^{-1} = (-phi^{-n}(a, b), -n) and phi is an involution.
    int a = g.a;
    int b = g.b;
    if (spec.twisted() && odd(g.n)) std::swap(a, b);
    return {mod(-a, spec.k()), mod(-b, spec.k()), -g.n};
}

std::vector<Generator> generators(const MarkedGroupSpec& spec) {
    std::vector<Generator> out;
    out.reserve(static_cast<std::size_t>(spec.degree()));
    for (int eps = -1; eps <= 1; ++eps)
        for (int s1 = 1; s1 < spec.k(); ++s1)
            for (int s2 = 1; s2 < spec.k(); ++s2) out.push_back({s1, s2, eps});
    return out;
}

GroupElement swap_odd_levels(const GroupElement& g) {
    if (odd(g.n)) return {g.b, g.a, g.n};
    return g;
}

}  // namespace shadowchi
