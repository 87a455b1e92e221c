#pragma once

#include "zariski/combinatorics.hpp"

#include <string>
#include <vector>

namespace zariski {

// Torsion character: line i goes to zeta_d^exponents[i-1].
struct Character {
    int order = 1;
    std::vector<int> exponents;

    int exponent(int label) const { return exponents.at(label - 1); }
};

struct TriangleCycle {
    int r = 0, s = 0, t = 0;
};

ValidationReport validate_character(const Combinatorics& c, const Character& xi);
void check_cycle(const Combinatorics& c, const TriangleCycle& g);

struct InnerCyclicReport {
    bool lines_trivial = true;   // e_r = e_s = e_t = 0
    bool points_trivial = true;  // every line through the three cycle points has e = 0
    bool sums_vanish = true;     // every point on a cycle line has exponent sum 0
    std::vector<std::string> failures;

    bool ok() const { return lines_trivial && points_trivial && sums_vanish; }
};

InnerCyclicReport inner_cyclic_report(const Combinatorics& c, const Character& xi, const TriangleCycle& g);
bool is_inner_cyclic(const Combinatorics& c, const Character& xi, const TriangleCycle& g);

// xi' with xi'(alpha_phi(i)) = xi(alpha_i).
Character character_pushforward(const Character& xi, const Permutation& phi);
TriangleCycle cycle_pushforward(const TriangleCycle& g, const Permutation& phi);

// The order-5 character (1,4,3,2,0,0,1,2,3,4,0), padded with zeros to n lines.
Character builtin_character(int n_lines = 11);

}  // namespace zariski
