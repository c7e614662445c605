#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace shadowchi {

// The marked group (Z_k x Z_k) x Z, either as a direct product (Delta_k) or
// as the semidirect product where 1 in Z acts by swapping coordinates
// (Gamma_k). Both carry the generating set S x {-1, 0, 1} with
// S = {(a, b) : a != 0, b != 0}.
class MarkedGroupSpec {
public:
    // Throws InputError when k < 3.
    MarkedGroupSpec(int k, bool twisted);

    static MarkedGroupSpec delta(int k) { return {k, false}; }
    static MarkedGroupSpec gamma(int k) { return {k, true}; }

    int k() const { return k_; }
    bool twisted() const { return twisted_; }

    // Number of generators, 3(k-1)^2.
    int degree() const { return 3 * (k_ - 1) * (k_ - 1); }

    friend bool operator==(const MarkedGroupSpec&, const MarkedGroupSpec&) = default;

private:
    int k_;
    bool twisted_;
};

// ((a, b), n). The grid part is always reduced mod k; n is unbounded here and
// only reduced by whoever builds a quotient.
struct GroupElement {
    int a = 0;
    int b = 0;
    std::int64_t n = 0;

    static GroupElement identity() { return {}; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

struct Generator {
    int s1 = 1;
    int s2 = 1;
    int eps = 0;

    GroupElement as_element() const { return {s1, s2, eps}; }

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Reduces the grid part into [0, k).
GroupElement normalized(const MarkedGroupSpec& spec, GroupElement g);

GroupElement multiply(const MarkedGroupSpec& spec, const GroupElement& g, const GroupElement& h);

GroupElement inverse(const MarkedGroupSpec& spec, const GroupElement& g);

// All 3(k-1)^2 generators, ordered by eps, then s1, then s2.
std::vector<Generator> generators(const MarkedGroupSpec& spec);

// The coordinate swap on odd levels. Carries Cayley edges of Gamma_k onto
// Cayley edges of Delta_k and back; it is an involution.
GroupElement swap_odd_levels(const GroupElement& g);

}  // namespace shadowchi
