#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zariski {

// Abstract incidence data: lines 1..n_lines and the list of all points,
// each a sorted set of at least two lines.
struct Combinatorics {
    int n_lines = 0;
    std::vector<std::vector<int>> points;

    // Sorts each point and the point list.
    void canonicalize();
    bool operator==(const Combinatorics& o) const;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};

ValidationReport validate_combinatorics(const Combinatorics& c);

// Throws Error with the report text when c is invalid.
void require_valid(const Combinatorics& c);

struct IncidenceGraph {
    int n_lines = 0;
    int n_points = 0;
    // (line label, point index), point index into Combinatorics::points
    std::vector<std::pair<int, int>> edges;
};

IncidenceGraph incidence_graph(const Combinatorics& c);

// Permutation of 1..n stored 0-based: images[i-1] = image of i.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    // Cycle notation such as "(1 3 2 4)(5 6)"; missing labels are fixed.
    static Permutation parse_cycles(int n, const std::string& text);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int label) const { return images[label - 1]; }
    // (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& b) const;
    Permutation inverse() const;
    bool is_identity() const;
    std::string cycles() const;
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

// The image of c when line i is renamed phi(i).
Combinatorics relabel(const Combinatorics& c, const Permutation& phi);

bool is_automorphism(const Combinatorics& c, const Permutation& p);

struct AutGroup {
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // sorted, identity first

    int order() const { return static_cast<int>(elements.size()); }
};

constexpr int kAutSearchBound = 24;

AutGroup automorphism_group(const Combinatorics& c);

// Closure of a generator list under composition.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, int n);

struct Orbits {
    std::vector<std::vector<int>> lines;
    std::vector<std::vector<std::vector<int>>> points;
};

Orbits orbits(const Combinatorics& c, const AutGroup& g);

std::optional<Combinatorics> builtin_combinatorics_opt(const std::string& name);
Combinatorics builtin_combinatorics(const std::string& name);

// Number of multiplicity-k points through each line; used for pruning.
std::vector<std::vector<int>> line_profiles(const Combinatorics& c);

}  // namespace zariski
