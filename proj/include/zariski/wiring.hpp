#pragma once

#include "zariski/arrangement.hpp"
#include "zariski/cyclotomic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zariski {

// Affine wire y = slope * x + intercept.
struct Wire {
    int label = 0;
    CycNum slope, intercept;
};

// Fiber x = x0 of the projection (x, y) -> x.
struct VerticalLine {
    int label = 0;
    CycNum x;
};

struct AffineArrangement {
    std::vector<Wire> wires;
    std::vector<VerticalLine> verticals;
    Embedding embedding;
    int infinity_label = 0;

    int field_order() const { return embedding.field_order; }
    const Wire& wire(int label) const;
};

enum class Chart { Lambda, Standard };

// Copy of a over Q(zeta_m), m = lcm(n, q), with an embedding sending
// zeta_m^(m/q) to exp(2 pi i / q).
Arrangement lift_arrangement(const Arrangement& a, int q);

// old coordinates = S * new coordinates.
// Lambda chart: x -> lambda x, z -> lambda x - z, lambda = exp(i pi / 4); needs 8 | n.
Matrix3 lambda_chart(int n);
// Sends line r to infinity with the projection center at a point of L_r on
// no other line and giving distinct points distinct abscissae.
Matrix3 standard_chart(const Arrangement& a, int r);

AffineArrangement to_affine(const Arrangement& a, int r, const Matrix3& s);
// Lifts the field as each chart needs (8 | n for Lambda, 4 | n for Standard).
AffineArrangement to_affine(const Arrangement& a, int r, Chart chart);

// Shear x_old = x - eps * y: moves the projection center along the line at
// infinity. Throws when the result is not generic.
AffineArrangement perturb_to_generic(const AffineArrangement& aff, const CycNum& eps);
// eps = -1/2^k for the first k >= 10 giving a generic arrangement.
AffineArrangement perturb_default(const AffineArrangement& aff, mpq_class* chosen = nullptr);

struct SingularValue {
    CycNum x;
    CycNum y;
    std::vector<int> wires;
};

// Exact intersection points of a generic affine arrangement.
std::vector<SingularValue> singular_values(const AffineArrangement& aff);
// Distinct abscissae of wire intersections and vertical lines (display mode).
std::vector<CycNum> fiber_values(const AffineArrangement& aff);

bool is_generic(const AffineArrangement& aff, std::string* why = nullptr);

// Gaussian rational re + i im.
struct Gaussian {
    mpq_class re = 1, im = 0;
};

enum class Passage { Through, Above, Below };

struct PathOptions {
    Gaussian omega;                      // direction of travel; values ordered by Re(x conj(omega))
    Passage passage = Passage::Through;  // how values before the last one are traversed
    std::optional<Gaussian> final_direction;
    std::optional<int> last;  // visit only values 0..last of the sorted list
    int precision = 64;
};

struct PathNu {
    std::vector<CycNum> points;
    std::vector<CycNum> stops;  // visited values in order
    CycNum step;                // half-length h of the straight piece around each value
    int precision = 64;
};

// Raised when a waypoint lands on a strand exchange; retry with a shorter step.
class DegeneratePath : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorts values by (Re, Im) of x * conj(omega).
std::vector<CycNum> order_values(const std::vector<CycNum>& xs, const Embedding& e, const Gaussian& omega,
                                 int precision = 64);

PathNu build_path(const AffineArrangement& aff, const std::vector<CycNum>& sorted_values, const PathOptions& opts,
                  int shrink = 0);

struct NodeEvent {
    int pos = 0;             // 0-based position of the top strand of the block
    std::vector<int> wires;  // top to bottom, before the node
};

struct CrossEvent {
    int pos = 0;  // 0-based position of the upper strand
    int sign = 1;
    int over = 0, under = 0;
};

struct VerticalEvent {
    int label = 0;
};

using Event = std::variant<NodeEvent, CrossEvent, VerticalEvent>;

struct WiringDiagram {
    std::vector<int> initial_order;  // top to bottom
    std::vector<Event> events;
    std::vector<int> final_order;
};

// Strand order at x: Re(y) descending, ties by Im(y) descending.
std::vector<int> strand_order(const AffineArrangement& aff, const CycNum& x, int precision = 64);

WiringDiagram wiring_diagram(const AffineArrangement& aff, const PathNu& nu);

// build_path + wiring_diagram, shrinking the step on degenerate waypoints.
WiringDiagram compute_wiring(const AffineArrangement& aff, const std::vector<CycNum>& sorted_values,
                             const PathOptions& opts);

// Replays events and checks adjacency and the final order.
void check_consistency(const WiringDiagram& w);

std::string render_svg(const WiringDiagram& w);

CycNum gaussian(const Gaussian& g, int n);

}  // namespace zariski
