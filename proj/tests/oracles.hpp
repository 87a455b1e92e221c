#pragma once

// Independent reference implementations shared by the unit tests and the
// acceptance run.

#include "zariski/combinatorics.hpp"
#include "zariski/cyclotomic.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace zariski;

using Poly = std::vector<mpq_class>;

// Naive oracle: Phi_n as prod_{d | n} (x^d - 1)^mu(n/d), computed by
// multiplying and dividing dense rational polynomials.
inline int mobius(int n)
{
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            r = -r;
        }
    return n > 1 ? -r : r;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient or remainder of a by monic-free divisor b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b)
{
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return {q, a};
}

inline Poly oracle_phi(int n)
{
    Poly num{1}, den{1};
    for (int d = 1; d <= n; ++d) {
        if (n % d)
            continue;
        Poly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        int mu = mobius(n / d);
        if (mu == 1)
            num = mul(num, f);
        else if (mu == -1)
            den = mul(den, f);
    }
    return divmod(num, den).first;
}

inline Poly reduce(const Poly& a, int n)
{
    auto r = divmod(a, oracle_phi(n)).second;
    r.resize(euler_phi(n), 0);
    return r;
}

inline Poly random_poly(std::mt19937& rng, int len)
{
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    Poly p(len);
    for (auto& c : p) {
        c = mpq_class(num(rng), den(rng));
        c.canonicalize();
    }
    return p;
}

using PointSet = std::set<std::vector<int>>;

inline PointSet point_set(const Combinatorics& c, const std::vector<int>& img)
{
    PointSet s;
    for (const auto& p : c.points) {
        std::vector<int> q;
        for (int l : p)
            q.push_back(img[l]);
        std::sort(q.begin(), q.end());
        s.insert(q);
    }
    return s;
}

// Lines grouped by color refinement: start from the number of points of
// each multiplicity through the line, then repeatedly add the multiset of
// (point size, colors of the other lines on the point).
inline std::vector<std::vector<int>> profile_classes(const Combinatorics& c)
{
    std::vector<int> color(c.n_lines + 1, 0);
    size_t n_colors = 1;
    for (int round = 0; round <= c.n_lines; ++round) {
        std::vector<std::multiset<std::vector<int>>> sig(c.n_lines + 1);
        for (const auto& p : c.points)
            for (int l : p) {
                std::vector<int> key{static_cast<int>(p.size())};
                for (int m : p)
                    if (m != l)
                        key.push_back(color[m]);
                std::sort(key.begin() + 1, key.end());
                sig[l].insert(key);
            }
        std::map<std::pair<int, std::multiset<std::vector<int>>>, int> ids;
        std::vector<int> next(c.n_lines + 1, 0);
        for (int l = 1; l <= c.n_lines; ++l)
            next[l] = ids.emplace(std::make_pair(color[l], sig[l]), static_cast<int>(ids.size())).first->second;
        color = next;
        if (ids.size() == n_colors)
            break;
        n_colors = ids.size();
    }
    std::map<int, std::vector<int>> by;
    for (int l = 1; l <= c.n_lines; ++l)
        by[color[l]].push_back(l);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : by)
        out.push_back(v);
    return out;
}

// Every permutation preserving the profile classes, checked against the
// point set directly.
inline std::vector<Permutation> brute_force_aut(const Combinatorics& c, long* tried)
{
    auto classes = profile_classes(c);
    std::vector<std::vector<int>> perms = classes;
    PointSet target = point_set(c, [&] {
        std::vector<int> id(c.n_lines + 1);
        for (int i = 0; i <= c.n_lines; ++i)
            id[i] = i;
        return id;
    }());
    std::vector<Permutation> found;
    *tried = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == classes.size()) {
            std::vector<int> img(c.n_lines + 1);
            for (size_t i = 0; i < classes.size(); ++i)
                for (size_t j = 0; j < classes[i].size(); ++j)
                    img[classes[i][j]] = perms[i][j];
            ++*tried;
            if (point_set(c, img) == target) {
                Permutation p;
                p.images.assign(img.begin() + 1, img.end());
                found.push_back(p);
            }
            return;
        }
        std::sort(perms[k].begin(), perms[k].end());
        do
            rec(k + 1);
        while (std::next_permutation(perms[k].begin(), perms[k].end()));
    };
    rec(0);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace oracle
