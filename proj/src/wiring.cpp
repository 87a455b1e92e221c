#include "zariski/wiring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zariski {

const Wire& AffineArrangement::wire(int label) const
{
    for (const auto& w : wires)
        if (w.label == label)
            return w;
    throw Error("no wire L" + std::to_string(label));
}

Arrangement lift_arrangement(const Arrangement& a, int q)
{
    Embedding e = extend_embedding(a.embedding, q);
    Arrangement r = a;
    r.embedding = e;
    for (auto& l : r.lines)
        for (auto& c : l)
            c = c.lift(e.field_order);
    return r;
}

Matrix3 lambda_chart(int n)
{
    if (n % 8)
        throw Error("the lambda chart needs exp(i pi/4), i.e. 8 | n");
    CycNum lam = CycNum::zeta(n, n / 8);
    CycNum o(n, 0L), one(n, 1L);
    return Matrix3{{{lam, o, o}, {o, one, o}, {lam, o, -one}}};
}

CycNum gaussian(const Gaussian& g, int n)
{
    CycNum r(n, g.re);
    if (g.im != 0) {
        if (n % 4)
            throw Error("complex path data needs i in the field");
        r += CycNum(n, g.im) * CycNum::zeta(n, n / 4);
    }
    return r;
}

namespace {

CycNum conj(const CycNum& v)
{
    return v.galois(v.order() - 1);
}

int sign_re(const CycNum& v, const Embedding& e, int p)
{
    return certified_sign(v, Part::Real, e, p);
}

int sign_im(const CycNum& v, const Embedding& e, int p)
{
    return certified_sign(v, Part::Imag, e, p);
}

// Pairwise intersection points of the wires, grouped exactly.
std::vector<SingularValue> wire_points(const AffineArrangement& aff)
{
    std::vector<SingularValue> pts;
    const auto& w = aff.wires;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) {
            CycNum dm = w[i].slope - w[j].slope;
            if (dm.is_zero())
                continue;
            CycNum x = (w[j].intercept - w[i].intercept) / dm;
            CycNum y = w[i].slope * x + w[i].intercept;
            size_t k = 0;
            while (k < pts.size() && !(pts[k].x == x && pts[k].y == y))
                ++k;
            if (k == pts.size())
                pts.push_back({x, y, {}});
            for (int l : {w[i].label, w[j].label})
                if (std::find(pts[k].wires.begin(), pts[k].wires.end(), l) == pts[k].wires.end())
                    pts[k].wires.push_back(l);
        }
    for (auto& p : pts)
        std::sort(p.wires.begin(), p.wires.end());
    return pts;
}

std::string label_set(const std::vector<int>& v)
{
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

bool is_generic(const AffineArrangement& aff, std::string* why)
{
    if (!aff.verticals.empty()) {
        if (why)
            *why = "L" + std::to_string(aff.verticals.front().label) + " is a fiber of the projection";
        return false;
    }
    auto pts = wire_points(aff);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].x == pts[j].x) {
                if (why)
                    *why = "points " + label_set(pts[i].wires) + " and " + label_set(pts[j].wires) +
                           " share a fiber";
                return false;
            }
    return true;
}

AffineArrangement to_affine(const Arrangement& a, int r, const Matrix3& s)
{
    if (r < 1 || r > a.size())
        throw Error("no line L" + std::to_string(r));
    int n = a.field_order();
    for (const auto& row : s)
        for (const auto& x : row)
            if (x.order() != n)
                throw Error("chart over a different field");
    if (det3(s).is_zero())
        throw Error("chart matrix is singular");
    ProjLine cr = row_times(a.lines[r - 1], s);
    if (!cr[0].is_zero() || !cr[1].is_zero() || cr[2].is_zero())
        throw Error("chart does not send L" + std::to_string(r) + " to the line at infinity");
    AffineArrangement aff;
    aff.embedding = a.embedding;
    aff.infinity_label = r;
    for (int i = 1; i <= a.size(); ++i) {
        if (i == r)
            continue;
        ProjLine c = row_times(a.lines[i - 1], s);
        if (c[1].is_zero()) {
            if (c[0].is_zero())
                throw Error("L" + std::to_string(i) + " coincides with the line at infinity");
            aff.verticals.push_back({i, -c[2] / c[0]});
        } else {
            CycNum inv = c[1].inverse();
            aff.wires.push_back({i, -c[0] * inv, -c[2] * inv});
        }
    }
    return aff;
}

Matrix3 standard_chart(const Arrangement& a, int r)
{
    if (r < 1 || r > a.size())
        throw Error("no line L" + std::to_string(r));
    int n = a.field_order();
    const ProjLine& c = a.lines[r - 1];
    int p = 0;
    while (p < 3 && c[p].is_zero())
        ++p;
    if (p == 3)
        throw Error("zero line vector");
    int q1 = (p + 1) % 3, q2 = (p + 2) % 3;
    auto unit = [n](int i) {
        ProjPoint v = {CycNum(n, 0L), CycNum(n, 0L), CycNum(n, 0L)};
        v[i] = CycNum(n, 1L);
        return v;
    };
    // kernel basis k1, k2 and a vector s3 with c . s3 = 1
    ProjPoint k1 = unit(q1), k2 = unit(q2), s3 = unit(p);
    for (int i = 0; i < 3; ++i) {
        k1[i] = k1[i] * c[p] - unit(p)[i] * c[q1];
        k2[i] = k2[i] * c[p] - unit(p)[i] * c[q2];
        s3[i] = s3[i] * c[p].inverse();
    }
    for (long t = 0; t < 200; ++t) {
        ProjPoint center;
        for (int i = 0; i < 3; ++i)
            center[i] = k1[i] + CycNum(n, t) * k2[i];
        bool on_other = false;
        for (int j = 1; j <= a.size() && !on_other; ++j) {
            if (j == r)
                continue;
            const auto& l = a.lines[j - 1];
            on_other = (l[0] * center[0] + l[1] * center[1] + l[2] * center[2]).is_zero();
        }
        if (on_other)
            continue;
        // columns: s1 = k2 (or k1 when t = 0 would repeat), s2 = center, s3
        const ProjPoint& s1 = t == 0 ? k2 : k1;
        Matrix3 m;
        for (int i = 0; i < 3; ++i) {
            m[i][0] = s1[i];
            m[i][1] = center[i];
            m[i][2] = s3[i];
        }
        if (det3(m).is_zero())
            continue;
        if (is_generic(to_affine(a, r, m)))
            return m;
    }
    throw Error("no generic projection center found on L" + std::to_string(r));
}

AffineArrangement to_affine(const Arrangement& a, int r, Chart chart)
{
    if (chart == Chart::Lambda) {
        Arrangement l = lift_arrangement(a, 8);
        return to_affine(l, r, lambda_chart(l.field_order()));
    }
    Arrangement l = lift_arrangement(a, 4);
    return to_affine(l, r, standard_chart(l, r));
}

AffineArrangement perturb_to_generic(const AffineArrangement& aff, const CycNum& eps)
{
    if (eps.is_zero())
        throw Error("perturbation epsilon must be nonzero");
    int n = aff.field_order();
    if (eps.order() != n)
        throw Error("epsilon outside the arrangement's field");
    AffineArrangement r = aff;
    r.wires.clear();
    r.verticals.clear();
    CycNum one(n, 1L);
    for (const auto& w : aff.wires) {
        CycNum d = one + w.slope * eps;
        if (d.is_zero())
            throw Error("epsilon too coarse: L" + std::to_string(w.label) + " becomes vertical");
        CycNum inv = d.inverse();
        r.wires.push_back({w.label, w.slope * inv, w.intercept * inv});
    }
    CycNum ie = eps.inverse();
    for (const auto& v : aff.verticals)
        r.wires.push_back({v.label, ie, -v.x * ie});
    std::sort(r.wires.begin(), r.wires.end(), [](const Wire& a, const Wire& b) { return a.label < b.label; });
    std::string why;
    if (!is_generic(r, &why))
        throw Error("epsilon too coarse: " + why);
    return r;
}

AffineArrangement perturb_default(const AffineArrangement& aff, mpq_class* chosen)
{
    for (int k = 10; k <= 200; ++k) {
        mpq_class e(-1);
        e /= mpq_class(mpz_class(1) << k);
        try {
            auto r = perturb_to_generic(aff, CycNum(aff.field_order(), e));
            if (chosen)
                *chosen = e;
            return r;
        } catch (const Error&) {
        }
    }
    throw Error("no generic perturbation found");
}

std::vector<SingularValue> singular_values(const AffineArrangement& aff)
{
    std::string why;
    if (!is_generic(aff, &why))
        throw Error("non-generic arrangement: " + why);
    return wire_points(aff);
}

std::vector<CycNum> fiber_values(const AffineArrangement& aff)
{
    std::vector<CycNum> xs;
    auto add = [&xs](const CycNum& x) {
        if (std::find(xs.begin(), xs.end(), x) == xs.end())
            xs.push_back(x);
    };
    for (const auto& p : wire_points(aff))
        add(p.x);
    for (const auto& v : aff.verticals)
        add(v.x);
    return xs;
}

std::vector<CycNum> order_values(const std::vector<CycNum>& xs, const Embedding& e, const Gaussian& omega,
                                 int precision)
{
    int n = e.field_order;
    CycNum wc = conj(gaussian(omega, n));
    std::vector<std::pair<CycNum, CycNum>> keyed;
    for (const auto& x : xs)
        keyed.emplace_back(x * wc, x);
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        CycNum d = a.first - b.first;
        int s = sign_re(d, e, precision);
        if (s)
            return s < 0;
        return sign_im(d, e, precision) < 0;
    });
    std::vector<CycNum> out;
    for (auto& k : keyed)
        out.push_back(k.second);
    return out;
}

namespace {

double approx_abs(const Gaussian& g)
{
    return std::hypot(g.re.get_d(), g.im.get_d());
}

// Largest power of two not above v (v > 0).
mpq_class dyadic_below(double v)
{
    mpq_class h(1);
    while (h.get_d() > v)
        h /= 2;
    while (mpq_class(h * 2).get_d() <= v)
        h *= 2;
    return h;
}

bool on_segment(const CycNum& x, const CycNum& u, const CycNum& w, const Embedding& e, int p)
{
    CycNum d = w - u;
    CycNum prod = (x - u) * conj(d);
    if (!part_witness(prod, Part::Imag).is_zero())
        return false;
    if (sign_re(prod, e, p) < 0)
        return false;
    return sign_re((w - x) * conj(d), e, p) >= 0;
}

}  // namespace

PathNu build_path(const AffineArrangement& aff, const std::vector<CycNum>& sorted, const PathOptions& opts,
                  int shrink)
{
    const Embedding& e = aff.embedding;
    const int n = e.field_order;
    const int p = opts.precision;
    PathNu nu;
    nu.precision = p;
    CycNum om = gaussian(opts.omega, n);
    if (om.is_zero())
        throw Error("path direction must be nonzero");
    CycNum omc = conj(om);
    double om_abs = approx_abs(opts.omega);

    int last = sorted.empty() ? -1 : static_cast<int>(sorted.size()) - 1;
    if (opts.last) {
        if (*opts.last < 0 || *opts.last > last)
            throw Error("path end index out of range");
        last = *opts.last;
    }

    // step size from the smallest separation of the values in the omega frame
    std::vector<std::pair<double, double>> key;
    for (const auto& x : sorted) {
        ComplexBall b = embed(x * omc, e, p);
        key.emplace_back(b.re() / om_abs, b.im() / om_abs);
    }
    double bound = 1.0;
    for (size_t i = 0; i < key.size(); ++i)
        for (size_t j = i + 1; j < key.size(); ++j)
            bound = std::min(bound, std::max(std::fabs(key[i].first - key[j].first),
                                             std::fabs(key[i].second - key[j].second)));
    double dir_abs = std::max(om_abs, opts.final_direction ? approx_abs(*opts.final_direction) : 0.0);
    mpq_class h = dyadic_below(bound / 8 / std::max(1.0, dir_abs));
    for (int i = 0; i < shrink; ++i)
        h /= 2;
    nu.step = CycNum(n, h);
    CycNum hw = CycNum(n, h) * om;

    std::vector<CycNum> pts;
    std::vector<int> through;  // per segment start: value index it passes through, or -1
    if (last < 0) {
        pts = {-om, om};
        through = {-1};
    } else {
        pts.push_back(sorted[0]);  // placeholder for the base point
        through.push_back(-1);
        for (int k = 0; k < last; ++k) {
            const CycNum& v = sorted[k];
            nu.stops.push_back(v);
            if (opts.passage == Passage::Through) {
                pts.push_back(v - hw);
                through.push_back(k);
                pts.push_back(v + hw);
                through.push_back(-1);
                continue;
            }
            if (n % 4)
                throw Error("detours need i in the field");
            CycNum off = CycNum::zeta(n, n / 4) * hw;
            if (opts.passage == Passage::Below)
                off = -off;
            for (const CycNum& q : {v - hw, v - hw + off, v + hw + off, v + hw}) {
                pts.push_back(q);
                through.push_back(-1);
            }
        }
        const CycNum& v = sorted[last];
        nu.stops.push_back(v);
        CycNum d = opts.final_direction ? CycNum(n, h) * gaussian(*opts.final_direction, n) : hw;
        pts.push_back(v - d);
        through.push_back(last);
        pts.push_back(v + d);
        through.push_back(-1);
    }

    // detour below any value that a segment would hit
    for (int guard = 0;; ++guard) {
        if (guard > 1000)
            throw Error("path construction did not settle");
        bool changed = false;
        for (size_t s = 1; s + 1 < pts.size() && !changed; ++s) {
            for (size_t k = 0; k < sorted.size(); ++k) {
                if (through[s] == static_cast<int>(k))
                    continue;
                if (!on_segment(sorted[k], pts[s], pts[s + 1], e, p))
                    continue;
                if (n % 4)
                    throw Error("detours need i in the field");
                CycNum d = pts[s + 1] - pts[s];
                ComplexBall db = embed(d, e, p);
                double len = std::hypot(db.re(), db.im());
                CycNum delta = d * CycNum(n, h / mpq_class(std::max(len, 1e-300)));
                CycNum down = -(CycNum::zeta(n, n / 4) * delta);
                const CycNum& x = sorted[k];
                std::vector<CycNum> ins = {x - delta, x - delta + down, x + delta + down, x + delta};
                pts.insert(pts.begin() + s + 1, ins.begin(), ins.end());
                through.insert(through.begin() + s + 1, 4, -1);
                changed = true;
                break;
            }
        }
        if (!changed)
            break;
    }

    // base point far along -omega, past every strand exchange on that ray
    if (last >= 0) {
        const CycNum& u = pts[1];
        const auto& w = aff.wires;
        std::vector<std::pair<CycNum, CycNum>> ties;  // (num, den): exchange at R = num/den
        double rmax = 1;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j) {
                CycNum dm = w[i].slope - w[j].slope;
                CycNum den = real_part(dm * om);
                if (den.is_zero())
                    continue;
                CycNum num = real_part(dm * u + w[i].intercept - w[j].intercept);
                double r = embed(num, e, p).re() / embed(den, e, p).re();
                rmax = std::max(rmax, std::fabs(r));
                ties.emplace_back(num, den);
            }
        mpq_class big = 1;
        while (big.get_d() <= 2 * rmax + 1)
            big *= 2;
        for (;;) {
            bool ok = true;
            for (const auto& [num, den] : ties)
                if (sign_re(CycNum(n, big) * den - num, e, p) != sign_re(den, e, p)) {
                    ok = false;
                    break;
                }
            if (ok)
                break;
            big *= 2;
        }
        pts[0] = u - CycNum(n, big) * om;
    }
    nu.points = std::move(pts);
    return nu;
}

std::vector<int> strand_order(const AffineArrangement& aff, const CycNum& x, int precision)
{
    const Embedding& e = aff.embedding;
    std::vector<std::pair<int, CycNum>> ys;
    for (const auto& w : aff.wires)
        ys.emplace_back(w.label, w.slope * x + w.intercept);
    std::stable_sort(ys.begin(), ys.end(), [&](const auto& a, const auto& b) {
        CycNum d = a.second - b.second;
        int s = sign_re(d, e, precision);
        if (s)
            return s > 0;
        return sign_im(d, e, precision) > 0;
    });
    std::vector<int> out;
    for (auto& y : ys)
        out.push_back(y.first);
    return out;
}

namespace {

class Walker {
public:
    Walker(const AffineArrangement& aff, int precision) : aff_(aff), e_(aff.embedding), p_(precision)
    {
        for (const auto& w : aff.wires)
            wire_[w.label] = &w;
    }

    WiringDiagram run(const PathNu& nu)
    {
        WiringDiagram W;
        if (nu.points.size() < 2)
            throw Error("path needs at least two points");
        auto y0 = values_at(nu.points.front());
        cur_ = sorted(y0, true);
        for (size_t i = 0; i + 1 < cur_.size(); ++i)
            if (part_witness(y0[cur_[i]] - y0[cur_[i + 1]], Part::Real).is_zero())
                throw DegeneratePath("strand exchange at the base point");
        W.initial_order = cur_;
        for (size_t s = 0; s + 1 < nu.points.size(); ++s)
            segment(nu.points[s], nu.points[s + 1], W.events);
        W.final_order = cur_;
        return W;
    }

private:
    using Values = std::map<int, CycNum>;

    Values values_at(const CycNum& x) const
    {
        Values v;
        for (const auto& w : aff_.wires)
            v.emplace(w.label, w.slope * x + w.intercept);
        return v;
    }

    int sre(const CycNum& v) const { return certified_sign(v, Part::Real, e_, p_); }
    int sim(const CycNum& v) const { return certified_sign(v, Part::Imag, e_, p_); }

    // full key (Re desc, Im desc) or Re only; stable on the current order
    std::vector<int> sorted(const Values& y, bool full) const
    {
        std::vector<int> order = cur_;
        if (order.empty())
            for (const auto& [l, v] : y)
                order.push_back(l);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            CycNum d = y.at(a) - y.at(b);
            int s = sre(d);
            if (s || !full)
                return s > 0;
            return sim(d) > 0;
        });
        return order;
    }

    void bubble(const std::vector<int>& target, const Values& y, std::vector<Event>& out)
    {
        std::map<int, int> pos;
        for (size_t i = 0; i < target.size(); ++i)
            pos[target[i]] = static_cast<int>(i);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < cur_.size(); ++i) {
                int u = cur_[i], l = cur_[i + 1];
                if (pos[u] < pos[l])
                    continue;
                CycNum d = y.at(u) - y.at(l);
                if (!part_witness(d, Part::Real).is_zero())
                    throw std::logic_error("strand exchange without a real-part tie");
                int s = sim(d);
                if (s == 0)
                    throw std::logic_error("exchange of coincident strands");
                CrossEvent c;
                c.pos = static_cast<int>(i);
                c.over = s < 0 ? u : l;  // the strand with smaller Im(y) passes over
                c.under = c.over == u ? l : u;
                c.sign = c.over == u ? 1 : -1;
                out.push_back(c);
                std::swap(cur_[i], cur_[i + 1]);
                changed = true;
            }
        }
    }

    void segment(const CycNum& a, const CycNum& b, std::vector<Event>& out)
    {
        const int n = e_.field_order;
        CycNum delta = b - a;
        Values ya = values_at(a);
        struct Crit {
            CycNum tau;
            std::vector<int> verticals;
        };
        std::vector<Crit> crit;
        const auto& w = aff_.wires;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j) {
                CycNum r1 = real_part((w[i].slope - w[j].slope) * delta);
                CycNum r0 = real_part(ya[w[i].label] - ya[w[j].label]);
                if (r1.is_zero()) {
                    if (r0.is_zero())
                        throw DegeneratePath("strands tied along a whole segment");
                    continue;
                }
                int s1 = sre(r1);
                int s0 = sre(-r0);
                if (s0 == 0)
                    throw DegeneratePath("strand exchange at a waypoint");
                if (s0 != s1)
                    continue;
                int se = sre(-r0 - r1);
                if (se == 0)
                    throw DegeneratePath("strand exchange at a waypoint");
                if (se == s1)
                    continue;
                crit.push_back({-r0 * r1.inverse(), {}});
            }
        CycNum dd = real_part(delta * conj(delta));
        for (const auto& v : aff_.verticals) {
            CycNum q = (v.x - a) * conj(delta);
            if (!part_witness(q, Part::Imag).is_zero())
                continue;
            CycNum rq = real_part(q);
            int s0 = sre(rq), s1 = sre(dd - rq);
            if (s0 == 0 || s1 == 0)
                throw DegeneratePath("vertical line at a waypoint");
            if (s0 < 0 || s1 < 0)
                continue;
            crit.push_back({rq * dd.inverse(), {v.label}});
        }
        std::stable_sort(crit.begin(), crit.end(),
                         [&](const Crit& x, const Crit& y) { return sre(x.tau - y.tau) < 0; });
        std::vector<Crit> merged;
        for (auto& c : crit) {
            if (!merged.empty() && merged.back().tau == c.tau) {
                merged.back().verticals.insert(merged.back().verticals.end(), c.verticals.begin(), c.verticals.end());
                continue;
            }
            merged.push_back(std::move(c));
        }
        for (size_t k = 0; k < merged.size(); ++k) {
            const CycNum& tau = merged[k].tau;
            Values y = values_at(a + tau * delta);

            // exchanges forced before the nodes: real parts only, unless a
            // node block would not be contiguous
            std::vector<int> tgt = sorted(y, false);
            if (!blocks_contiguous(tgt, y))
                tgt = sorted(y, true);
            bubble(tgt, y, out);

            for (size_t i = 0; i < cur_.size();) {
                size_t j = i;
                while (j + 1 < cur_.size() && y.at(cur_[j + 1]) == y.at(cur_[i]))
                    ++j;
                if (j > i) {
                    NodeEvent node;
                    node.pos = static_cast<int>(i);
                    node.wires.assign(cur_.begin() + i, cur_.begin() + j + 1);
                    out.push_back(node);
                    std::reverse(cur_.begin() + i, cur_.begin() + j + 1);
                }
                i = j + 1;
            }
            auto verts = merged[k].verticals;
            std::sort(verts.begin(), verts.end());
            for (int l : verts)
                out.push_back(VerticalEvent{l});

            CycNum next = k + 1 < merged.size() ? merged[k + 1].tau : CycNum(n, 1L);
            Values ym = values_at(a + mpq_class(1, 2) * (tau + next) * delta);
            bubble(sorted(ym, true), y, out);
        }
    }

    bool blocks_contiguous(const std::vector<int>& order, const Values& y) const
    {
        for (size_t i = 0; i < order.size(); ++i) {
            size_t last = i;
            for (size_t j = i + 1; j < order.size(); ++j)
                if (y.at(order[j]) == y.at(order[i]))
                    last = j;
            for (size_t j = i + 1; j < last; ++j)
                if (y.at(order[j]) != y.at(order[i]))
                    return false;
        }
        return true;
    }

    const AffineArrangement& aff_;
    Embedding e_;
    int p_;
    std::map<int, const Wire*> wire_;
    std::vector<int> cur_;
};

}  // namespace

WiringDiagram wiring_diagram(const AffineArrangement& aff, const PathNu& nu)
{
    for (const auto& x : nu.points)
        if (x.order() != aff.field_order())
            throw Error("path outside the arrangement's field");
    return Walker(aff, nu.precision).run(nu);
}

WiringDiagram compute_wiring(const AffineArrangement& aff, const std::vector<CycNum>& sorted_values,
                             const PathOptions& opts)
{
    for (int shrink = 0; shrink < 24; ++shrink) {
        try {
            return wiring_diagram(aff, build_path(aff, sorted_values, opts, shrink));
        } catch (const DegeneratePath&) {
        }
    }
    throw Error("could not build a non-degenerate path");
}

void check_consistency(const WiringDiagram& w)
{
    std::vector<int> c = w.initial_order;
    for (const auto& ev : w.events) {
        if (auto* nd = std::get_if<NodeEvent>(&ev)) {
            int k = static_cast<int>(nd->wires.size());
            if (nd->pos < 0 || nd->pos + k > static_cast<int>(c.size()) ||
                !std::equal(nd->wires.begin(), nd->wires.end(), c.begin() + nd->pos))
                throw Error("node event does not match the strand order");
            std::reverse(c.begin() + nd->pos, c.begin() + nd->pos + k);
        } else if (auto* cr = std::get_if<CrossEvent>(&ev)) {
            if (cr->pos < 0 || cr->pos + 1 >= static_cast<int>(c.size()))
                throw Error("crossing outside the strands");
            std::set<int> have = {c[cr->pos], c[cr->pos + 1]}, want = {cr->over, cr->under};
            if (have != want || (cr->sign != 1 && cr->sign != -1))
                throw Error("crossing does not match the strand order");
            if ((cr->sign == 1) != (c[cr->pos] == cr->over))
                throw Error("crossing sign inconsistent with the moving strand");
            std::swap(c[cr->pos], c[cr->pos + 1]);
        }
    }
    if (!w.final_order.empty() && c != w.final_order)
        throw Error("replayed order differs from the final order");
}

std::string render_svg(const WiringDiagram& w)
{
    const int dx = 40, dy = 30, left = 50, top = 30;
    std::vector<int> c = w.initial_order;
    int cols = static_cast<int>(w.events.size());
    int width = left * 2 + dx * std::max(cols, 1);
    int height = top * 2 + dy * std::max<int>(static_cast<int>(c.size()) - 1, 0);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto yat = [&](int pos) { return top + dy * pos; };
    auto seg = [&](int x0, int p0, int x1, int p1, const char* extra) {
        svg << "<line x1=\"" << x0 << "\" y1=\"" << yat(p0) << "\" x2=\"" << x1 << "\" y2=\"" << yat(p1) << "\" "
            << extra << "/>\n";
    };
    const char* ink = "stroke=\"black\" stroke-width=\"2\"";
    const char* halo = "stroke=\"white\" stroke-width=\"8\"";
    for (size_t i = 0; i < c.size(); ++i)
        svg << "<text x=\"" << left - 12 << "\" y=\"" << yat(static_cast<int>(i)) + 5
            << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"end\">" << c[i] << "</text>\n";
    int col = 0;
    for (const auto& ev : w.events) {
        int x0 = left + dx * col, x1 = x0 + dx;
        std::set<int> busy;
        if (auto* nd = std::get_if<NodeEvent>(&ev)) {
            int k = static_cast<int>(nd->wires.size());
            for (int i = 0; i < k; ++i) {
                seg(x0, nd->pos + i, x1, nd->pos + k - 1 - i, ink);
                busy.insert(nd->pos + i);
            }
            double cy = yat(nd->pos) + dy * (k - 1) / 2.0;
            svg << "<circle cx=\"" << (x0 + x1) / 2 << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
            std::reverse(c.begin() + nd->pos, c.begin() + nd->pos + k);
        } else if (auto* cr = std::get_if<CrossEvent>(&ev)) {
            int p = cr->pos;
            bool over_down = c[p] == cr->over;
            // under strand first, then the over strand on a white halo
            if (over_down) {
                seg(x0, p + 1, x1, p, ink);
                seg(x0, p, x1, p + 1, halo);
                seg(x0, p, x1, p + 1, ink);
            } else {
                seg(x0, p, x1, p + 1, ink);
                seg(x0, p + 1, x1, p, halo);
                seg(x0, p + 1, x1, p, ink);
            }
            busy = {p, p + 1};
            std::swap(c[p], c[p + 1]);
        } else if (auto* v = std::get_if<VerticalEvent>(&ev)) {
            int xm = (x0 + x1) / 2;
            svg << "<line x1=\"" << xm << "\" y1=\"" << top - 15 << "\" x2=\"" << xm << "\" y2=\"" << height - top + 15
                << "\" stroke=\"gray\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";
            svg << "<text x=\"" << xm << "\" y=\"" << height - 4
                << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << v->label
                << "</text>\n";
        }
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (!busy.count(i))
                seg(x0, i, x1, i, ink);
        ++col;
    }
    if (w.events.empty())
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            seg(left, i, left + dx, i, ink);
    int xr = left + dx * std::max(cols, 1) + 12;
    for (size_t i = 0; i < c.size(); ++i)
        svg << "<text x=\"" << xr << "\" y=\"" << yat(static_cast<int>(i)) + 5
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << c[i] << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace zariski
