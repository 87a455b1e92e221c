#include "zariski/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zariski {

ProjLine canonical_line(const ProjLine& l)
{
    for (int i = 0; i < 3; ++i) {
        if (l[i].is_zero())
            continue;
        CycNum s = l[i].inverse();
        return {l[0] * s, l[1] * s, l[2] * s};
    }
    throw Error("zero line vector");
}

ProjPoint canonical_point(const ProjPoint& p)
{
    for (int i = 2; i >= 0; --i) {
        if (p[i].is_zero())
            continue;
        CycNum s = p[i].inverse();
        return {p[0] * s, p[1] * s, p[2] * s};
    }
    throw Error("zero point vector");
}

ProjPoint meet(const ProjLine& a, const ProjLine& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

CycNum det3(const ProjLine& a, const ProjLine& b, const ProjLine& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool concurrent_by_det(const ProjLine& a, const ProjLine& b, const ProjLine& c)
{
    return det3(a, b, c).is_zero();
}

bool concurrent_by_meet(const ProjLine& a, const ProjLine& b, const ProjLine& c)
{
    return canonical_point(meet(a, b)) == canonical_point(meet(a, c));
}

namespace {

void require_distinct(const Arrangement& a)
{
    std::vector<ProjLine> canon;
    for (const auto& l : a.lines) {
        for (const auto& x : l)
            if (x.order() != a.field_order())
                throw Error("line coefficient outside the arrangement's field");
        canon.push_back(canonical_line(l));
    }
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = i + 1; j < canon.size(); ++j)
            if (canon[i] == canon[j])
                throw Error("duplicate lines L" + std::to_string(i + 1) + " and L" + std::to_string(j + 1));
}

}  // namespace

Combinatorics intersection_lattice(const Arrangement& a)
{
    require_distinct(a);
    std::vector<ProjPoint> pts;
    std::vector<std::set<int>> members;
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ProjPoint p = canonical_point(meet(a.lines[i], a.lines[j]));
            size_t k = 0;
            while (k < pts.size() && pts[k] != p)
                ++k;
            if (k == pts.size()) {
                pts.push_back(p);
                members.emplace_back();
            }
            members[k].insert(i + 1);
            members[k].insert(j + 1);
        }
    Combinatorics c;
    c.n_lines = n;
    for (const auto& m : members)
        c.points.emplace_back(m.begin(), m.end());
    c.canonicalize();
    return c;
}

bool is_ordered_realization(const Arrangement& a, const Combinatorics& c)
{
    try {
        return intersection_lattice(a) == c;
    } catch (const Error&) {
        return false;
    }
}

Matrix3 identity3(int n)
{
    Matrix3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = CycNum(n, i == j ? 1L : 0L);
    return m;
}

CycNum det3(const Matrix3& m)
{
    return det3(ProjLine{m[0][0], m[0][1], m[0][2]}, ProjLine{m[1][0], m[1][1], m[1][2]},
                ProjLine{m[2][0], m[2][1], m[2][2]});
}

Matrix3 inverse3(const Matrix3& m)
{
    CycNum d = det3(m);
    if (d.is_zero())
        throw Error("singular projectivity matrix");
    CycNum s = d.inverse();
    Matrix3 r = m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            r[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * s;
        }
    return r;
}

ProjLine row_times(const ProjLine& c, const Matrix3& m)
{
    ProjLine r = {c[0] * m[0][0], c[0] * m[0][1], c[0] * m[0][2]};
    for (int i = 1; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[j] += c[i] * m[i][j];
    return r;
}

Arrangement apply_projectivity(const Arrangement& a, const Matrix3& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (x.order() != a.field_order())
                throw Error("projectivity over a different field");
    Matrix3 inv = inverse3(m);
    Arrangement r = a;
    for (auto& l : r.lines)
        l = canonical_line(row_times(l, inv));
    return r;
}

Arrangement conjugate(const Arrangement& a)
{
    Arrangement r = a;
    int n = a.embedding.field_order;
    r.embedding.root_index = ((n - a.embedding.root_index) % n + n) % n;
    if (n <= 2)
        r.embedding.root_index = a.embedding.root_index;
    return r;
}

Matrix3 cyclic_projectivity(int n)
{
    auto c = [n](long v) { return CycNum(n, v); };
    return Matrix3{{{c(0), c(0), c(1)}, {c(1), c(1), c(-1)}, {c(0), c(1), c(0)}}};
}

Arrangement base_arrangement(int root_index)
{
    const int n = 10;
    auto p = [](const char* s) { return parse_cyc(s, n); };
    Arrangement a;
    a.embedding = {n, root_index};
    check_embedding(a.embedding);
    a.lines = {
        {p("0"), p("0"), p("1")},
        {p("1"), p("1"), p("-1")},
        {p("1"), p("0"), p("0")},
        {p("0"), p("1"), p("0")},
        {p("1"), p("0"), p("-1")},
        {p("0"), p("1"), p("-1")},
        {p("-a^3"), p("0"), p("1")},
        {p("0"), p("1"), p("-a")},
        {p("a-1"), p("-1"), p("1")},
        {p("-a*(a-1)"), p("1"), p("a*(a-1)")},
        {p("-a*(a-1)"), p("1"), p("-a")},
    };
    return a;
}

Arrangement extend_with_L12(const Arrangement& a, const mpq_class& beta)
{
    Combinatorics k = builtin_combinatorics("K");
    if (!is_ordered_realization(a, k))
        throw Error("base arrangement does not realize K with the expected labels");
    int n = a.field_order();
    ProjLine l12 = {CycNum(n, 1L), CycNum(n, 0L), CycNum(n, -beta)};
    for (int i = 0; i < a.size(); ++i)
        if (canonical_line(a.lines[i]) == canonical_line(l12))
            throw Error("x - " + beta.get_str() + "*z = 0 duplicates L" + std::to_string(i + 1));
    Arrangement r = a;
    r.lines.push_back(l12);
    r.beta = beta;
    Combinatorics got = intersection_lattice(r);
    if (got == builtin_combinatorics("K12"))
        return r;
    for (const auto& p : got.points)
        if (p.size() > 2 && p.back() == 12 && p != std::vector<int>{1, 3, 5, 7, 12}) {
            std::string s;
            for (int l : p)
                s += (s.empty() ? "" : ",") + std::to_string(l);
            throw Error("x - " + beta.get_str() + "*z = 0 is not generic: passes through point {" + s + "}");
        }
    throw Error("x - " + beta.get_str() + "*z = 0 does not give K12");
}

mpq_class default_beta(const Arrangement& a)
{
    std::vector<mpq_class> order = {2, 3, mpq_class(1, 2), 5};
    // then h/q and q/h by increasing height h
    for (int h = 2; h <= 64; ++h)
        for (int q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1)
                continue;
            for (mpq_class v : {mpq_class(h, q), mpq_class(q, h)})
                if (std::find(order.begin(), order.end(), v) == order.end())
                    order.push_back(v);
        }
    for (const auto& b : order) {
        if (b == 0 || b == 1)
            continue;
        try {
            extend_with_L12(a, b);
            return b;
        } catch (const Error&) {
        }
    }
    throw Error("no generic twelfth line found");
}

std::vector<std::string> builtin_arrangement_names()
{
    return {"N+", "N-", "M+", "M-", "FN+", "FN-", "FM+", "FM-"};
}

std::optional<Arrangement> builtin_arrangement_opt(const std::string& name)
{
    std::string base = name;
    bool twelve = false;
    if (!base.empty() && base[0] == 'F') {
        twelve = true;
        base = base.substr(1);
    }
    int k;
    if (base == "N+")
        k = 3;
    else if (base == "N-")
        k = 7;
    else if (base == "M+")
        k = 1;
    else if (base == "M-")
        k = 9;
    else
        return std::nullopt;
    Arrangement a = base_arrangement(k);
    if (twelve)
        a = extend_with_L12(a, default_beta(a));
    return a;
}

Arrangement builtin_arrangement(const std::string& name)
{
    auto a = builtin_arrangement_opt(name);
    if (!a)
        throw Error("unknown built-in arrangement '" + name + "'");
    return *a;
}

}  // namespace zariski
