#pragma once

#include "zariski/combinatorics.hpp"
#include "zariski/cyclotomic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zariski {

// Line a x + b y + c z = 0.
using ProjLine = std::array<CycNum, 3>;
using ProjPoint = std::array<CycNum, 3>;
using Matrix3 = std::array<std::array<CycNum, 3>, 3>;

struct Arrangement {
    std::vector<ProjLine> lines;
    Embedding embedding;
    std::optional<mpq_class> beta;  // set for the 12-line built-ins

    int size() const { return static_cast<int>(lines.size()); }
    int field_order() const { return embedding.field_order; }
};

// First nonzero coefficient scaled to 1.
ProjLine canonical_line(const ProjLine& l);
// Last nonzero coordinate scaled to 1.
ProjPoint canonical_point(const ProjPoint& p);

ProjPoint meet(const ProjLine& a, const ProjLine& b);
CycNum det3(const ProjLine& a, const ProjLine& b, const ProjLine& c);

// Two independent concurrency tests for three lines.
bool concurrent_by_det(const ProjLine& a, const ProjLine& b, const ProjLine& c);
bool concurrent_by_meet(const ProjLine& a, const ProjLine& b, const ProjLine& c);

Combinatorics intersection_lattice(const Arrangement& a);
bool is_ordered_realization(const Arrangement& a, const Combinatorics& c);

Matrix3 identity3(int n);
CycNum det3(const Matrix3& m);
Matrix3 inverse3(const Matrix3& m);
// Row vector times matrix.
ProjLine row_times(const ProjLine& c, const Matrix3& m);

// Image of the arrangement under the point map p -> M p.
Arrangement apply_projectivity(const Arrangement& a, const Matrix3& m);
Arrangement conjugate(const Arrangement& a);

// The point map (x, y, z) -> (z, x + y - z, y) over Q(zeta_n).
Matrix3 cyclic_projectivity(int n);

// Appends x - beta z = 0 and checks the result realizes K12.
Arrangement extend_with_L12(const Arrangement& a, const mpq_class& beta);
// First beta in 2, 3, 1/2, 5, ... giving a valid extension.
mpq_class default_beta(const Arrangement& a);

std::vector<std::string> builtin_arrangement_names();
std::optional<Arrangement> builtin_arrangement_opt(const std::string& name);
Arrangement builtin_arrangement(const std::string& name);

// The eleven base equations over Q(zeta_10) with the given root index.
Arrangement base_arrangement(int root_index);

}  // namespace zariski
