#include "sl3ext/ring.hpp"

#include <algorithm>
#include <sstream>

namespace sl3ext {

namespace {

// ---------------------------------------------------------------------------
// Row lattice in Z^2 with coefficient tracking.
//
// Hermite-style reduction to a basis b1 = (p, 0), b2 = (r, s) with p, s >= 0,
// 0 <= r < p when both are present. Each basis row remembers its expression
// as an integer combination of the original generators, which is what turns
// a membership test into a Bezout certificate.
// ---------------------------------------------------------------------------

struct TRow {
    Int x, y;
    std::vector<Int> c;
};

void row_sub(TRow& r, const Int& q, const TRow& piv) {
    if (q == 0) return;
    r.x -= q * piv.x;
    r.y -= q * piv.y;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= q * piv.c[i];
}

void row_negate(TRow& r) {
    r.x = -r.x;
    r.y = -r.y;
    for (Int& c : r.c) c = -c;
}

struct Hnf2 {
    size_t ngen = 0;
    bool has_b2 = false;
    Int p = 0, r = 0, s = 0;
    std::vector<Int> cp, cb;

    bool contains(const Int& tx, const Int& ty, std::vector<Int>* coeffs) const {
        Int beta = 0;
        if (ty != 0) {
            if (!has_b2 || s == 0 || !divides(s, ty)) return false;
            beta = ty / s;
        }
        Int rem = tx - beta * r;
        Int alpha = 0;
        if (p != 0) {
            if (!divides(p, rem)) return false;
            alpha = rem / p;
        } else if (rem != 0) {
            return false;
        }
        if (coeffs) {
            coeffs->assign(ngen, Int(0));
            for (size_t i = 0; i < ngen; ++i) {
                if (p != 0) (*coeffs)[i] += alpha * cp[i];
                if (has_b2) (*coeffs)[i] += beta * cb[i];
            }
        }
        return true;
    }
};

Hnf2 hnf2(std::vector<TRow> rows) {
    Hnf2 out;
    out.ngen = rows.empty() ? 0 : rows[0].c.size();

    auto alive = [](const TRow& r) { return r.x != 0 || r.y != 0; };
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const TRow& r) { return !alive(r); }),
               rows.end());

    // clear the y column down to a single carrier row
    for (;;) {
        int piv = -1;
        int live = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].y == 0) continue;
            ++live;
            if (piv < 0 || abs(rows[i].y) < abs(rows[piv].y)) piv = int(i);
        }
        if (live <= 1) break;
        if (rows[piv].y < 0) row_negate(rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (int(i) == piv || rows[i].y == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i].y.get_mpz_t(), rows[piv].y.get_mpz_t());
            row_sub(rows[i], q, rows[piv]);
        }
    }

    TRow b2;
    bool got_b2 = false;
    for (auto& r : rows) {
        if (r.y != 0) {
            if (r.y < 0) row_negate(r);
            b2 = r;
            got_b2 = true;
        }
    }

    // gcd of the x-axis rows
    TRow b1;
    bool got_b1 = false;
    for (auto& r : rows) {
        if (r.y != 0 || r.x == 0) continue;
        if (!got_b1) {
            b1 = r;
            got_b1 = true;
            continue;
        }
        // fold r into b1 by the Euclidean algorithm on the x column
        TRow other = r;
        while (other.x != 0) {
            Int q = b1.x / other.x;
            row_sub(b1, q, other);
            std::swap(b1, other);
        }
    }
    if (got_b1 && b1.x < 0) row_negate(b1);

    if (got_b1) {
        out.p = b1.x;
        out.cp = b1.c;
    }
    if (got_b2) {
        out.has_b2 = true;
        if (got_b1 && out.p != 0) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), b2.x.get_mpz_t(), b1.x.get_mpz_t());
            row_sub(b2, q, b1);
        }
        out.r = b2.x;
        out.s = b2.y;
        out.cb = b2.c;
    }
    return out;
}

std::vector<Int> unit_coeffs(size_t n, size_t i) {
    std::vector<Int> c(n, Int(0));
    c[i] = 1;
    return c;
}

unsigned long to_ui(const Int& v) { return mpz_get_ui(v.get_mpz_t()); }

}  // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

RingPtr Ring::integers() {
    auto r = std::make_shared<Ring>(PrivateTag{});
    r->kind_ = RingKind::Integers;
    return r;
}

RingPtr Ring::integers_mod(const Int& n) {
    if (n < 2) throw error("IntegersModN requires n >= 2");
    auto r = std::make_shared<Ring>(PrivateTag{});
    r->kind_ = RingKind::IntegersModN;
    r->n_ = n;
    r->size_ = n;
    return r;
}

RingPtr Ring::localized_integers(const Int& m) {
    if (m < 2) throw error("LocalizedIntegers requires m >= 2");
    auto r = std::make_shared<Ring>(PrivateTag{});
    r->kind_ = RingKind::LocalizedIntegers;
    r->m_ = m;
    return r;
}

RingPtr Ring::quadratic_order(const Int& q) {
    if (q < 1) throw error("QuadraticOrder requires q >= 1");
    auto r = std::make_shared<Ring>(PrivateTag{});
    r->kind_ = RingKind::QuadraticOrder;
    r->q_ = q;
    return r;
}

RingPtr Ring::quotient_of(const RingPtr& base, const Elem& modulus) {
    if (!base) throw error("QuotientRing requires a base ring");
    if (base->kind() == RingKind::Integers) {
        // normalized to a residue ring
        if (modulus.u == 0) throw error("QuotientRing: zero modulus");
        Int n = abs(modulus.u);
        if (n == 1) throw error("QuotientRing: unit modulus gives the zero ring");
        return integers_mod(n);
    }
    if (base->kind() != RingKind::QuadraticOrder)
        throw error("QuotientRing base must be Integers or QuadraticOrder");
    Elem a = base->canonicalize(modulus);
    if (base->is_zero(a)) throw error("QuotientRing: zero modulus");
    if (base->is_unit(a)) throw error("QuotientRing: unit modulus gives the zero ring");

    auto r = std::make_shared<Ring>(PrivateTag{});
    r->kind_ = RingKind::QuotientRing;
    r->q_ = base->quad_q();
    r->alpha_ = a;
    r->base_ = base;

    std::vector<TRow> rows;
    rows.push_back({a.u, a.v, {}});
    rows.push_back({Int(-r->q_ * a.v), a.u, {}});
    Hnf2 h = hnf2(std::move(rows));
    if (h.p == 0 || !h.has_b2 || h.s == 0)
        throw internal_error("quotient lattice is not full rank");
    r->hp_ = h.p;
    r->hr_ = mod_floor(h.r, h.p);
    r->hs_ = h.s;
    r->size_ = r->hp_ * r->hs_;
    if (r->size_ != base->quad_norm(a))
        throw internal_error("quotient size disagrees with the norm");
    return r;
}

RingPtr make_ring_integers() { return Ring::integers(); }
RingPtr make_ring_mod(const Int& n) { return Ring::integers_mod(n); }
RingPtr make_ring_localized(const Int& m) { return Ring::localized_integers(m); }
RingPtr make_ring_quadratic(const Int& q) { return Ring::quadratic_order(q); }
RingPtr make_ring_quotient(const RingPtr& base, const Elem& modulus) {
    return Ring::quotient_of(base, modulus);
}

QuotientMap quotient_ring(const RingPtr& R, const Elem& a) { return R->quotient(a); }

// ---------------------------------------------------------------------------
// basics
// ---------------------------------------------------------------------------

Capabilities Ring::capabilities() const {
    switch (kind_) {
        case RingKind::Integers:
            return {false, true, true, true};
        case RingKind::IntegersModN:
            return {true, true, false, true};
        case RingKind::LocalizedIntegers:
            return {false, true, false, true};
        case RingKind::QuadraticOrder:
            return {false, true, true, false};
        case RingKind::QuotientRing:
            return {true, true, false, false};
    }
    throw internal_error("bad kind");
}

bool Ring::finite() const { return capabilities().finite; }

Int Ring::size() const {
    if (!finite()) throw error("size: infinite ring");
    return size_;
}

Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(const Int& k) const {
    return canonicalize(Elem{k, Int(0)});
}

Elem Ring::make(const Int& u, const Int& v) const {
    return canonicalize(Elem{u, v});
}

Elem Ring::canonicalize(Elem x) const {
    switch (kind_) {
        case RingKind::Integers:
            x.v = 0;
            return x;
        case RingKind::IntegersModN:
            x.u = mod_floor(x.u, n_);
            x.v = 0;
            return x;
        case RingKind::LocalizedIntegers: {
            if (x.v < 0) throw error("LocalizedIntegers element has negative exponent");
            if (x.u == 0) return Elem{Int(0), Int(0)};
            while (x.v > 0 && divides(m_, x.u)) {
                x.u /= m_;
                x.v -= 1;
            }
            return x;
        }
        case RingKind::QuadraticOrder:
            return x;
        case RingKind::QuotientRing:
            return quot_reduce(x);
    }
    throw internal_error("bad kind");
}

Elem Ring::quot_reduce(const Elem& x) const {
    Int beta;
    mpz_fdiv_q(beta.get_mpz_t(), x.v.get_mpz_t(), hs_.get_mpz_t());
    Int u = x.u - beta * hr_;
    Int v = x.v - beta * hs_;
    return Elem{mod_floor(u, hp_), v};
}

Elem Ring::add(const Elem& x, const Elem& y) const {
    switch (kind_) {
        case RingKind::LocalizedIntegers: {
            Int e = std::max(x.v, y.v);
            Int u = x.u * pow_ui(m_, to_ui(Int(e - x.v))) +
                    y.u * pow_ui(m_, to_ui(Int(e - y.v)));
            return canonicalize(Elem{u, e});
        }
        default:
            return canonicalize(Elem{Int(x.u + y.u), Int(x.v + y.v)});
    }
}

Elem Ring::neg(const Elem& x) const {
    return canonicalize(Elem{Int(-x.u), Int(kind_ == RingKind::LocalizedIntegers ? x.v : -x.v)});
}

Elem Ring::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

Elem Ring::mul(const Elem& x, const Elem& y) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
            return canonicalize(Elem{Int(x.u * y.u), Int(0)});
        case RingKind::LocalizedIntegers:
            return canonicalize(Elem{Int(x.u * y.u), Int(x.v + y.v)});
        case RingKind::QuadraticOrder:
        case RingKind::QuotientRing:
            return canonicalize(Elem{Int(x.u * y.u - q_ * x.v * y.v),
                                     Int(x.u * y.v + x.v * y.u)});
    }
    throw internal_error("bad kind");
}

Int Ring::quad_norm(const Elem& x) const {
    if (kind_ != RingKind::QuadraticOrder && kind_ != RingKind::QuotientRing)
        throw error("quad_norm: not a quadratic order");
    return Int(x.u * x.u + q_ * x.v * x.v);
}

// ---------------------------------------------------------------------------
// units and the Jacobson radical
// ---------------------------------------------------------------------------

bool Ring::is_unit(const Elem& x) const {
    switch (kind_) {
        case RingKind::Integers:
            return abs(x.u) == 1;
        case RingKind::IntegersModN:
            return gcd(x.u, n_) == 1;
        case RingKind::LocalizedIntegers:
            return x.u != 0 && strip_factors_of(x.u, m_) == 1;
        case RingKind::QuadraticOrder:
            return quad_norm(x) == 1;
        case RingKind::QuotientRing:
            return bezout({x}).has_value();
    }
    throw internal_error("bad kind");
}

std::optional<Elem> Ring::inverse(const Elem& x) const {
    switch (kind_) {
        case RingKind::Integers:
            if (abs(x.u) != 1) return std::nullopt;
            return x;
        case RingKind::IntegersModN: {
            auto r = mod_inverse(x.u, n_);
            if (!r) return std::nullopt;
            return Elem{*r, Int(0)};
        }
        case RingKind::LocalizedIntegers: {
            if (!is_unit(x)) return std::nullopt;
            unsigned E = smooth_exponent(x.u, m_);
            Int w = sgn(x.u) * pow_ui(m_, mpz_get_ui(x.v.get_mpz_t())) * (pow_ui(m_, E) / abs(x.u));
            return canonicalize(Elem{w, Int(E)});
        }
        case RingKind::QuadraticOrder: {
            if (quad_norm(x) != 1) return std::nullopt;
            return Elem{x.u, Int(-x.v)};
        }
        case RingKind::QuotientRing: {
            auto bz = bezout({x});
            if (!bz) return std::nullopt;
            return (*bz)[0];
        }
    }
    throw internal_error("bad kind");
}

bool Ring::jacobson_contains(const Elem& x) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::LocalizedIntegers:
        case RingKind::QuadraticOrder:
            return is_zero(x);
        case RingKind::IntegersModN:
            return divides(radical(n_), x.u);
        case RingKind::QuotientRing: {
            for (const Elem& y : elements())
                if (!is_unit(sub(one(), mul(x, y)))) return false;
            return true;
        }
    }
    throw internal_error("bad kind");
}

// ---------------------------------------------------------------------------
// Bezout certificates
// ---------------------------------------------------------------------------

std::optional<std::vector<Elem>> Ring::bezout(const std::vector<Elem>& xs) const {
    if (xs.empty()) throw error("bezout: empty tuple");
    std::optional<std::vector<Elem>> out;

    switch (kind_) {
        case RingKind::Integers: {
            std::vector<Int> ints, cs;
            for (auto& x : xs) ints.push_back(x.u);
            if (bezout_fold(ints, cs) != 1) return std::nullopt;
            std::vector<Elem> es;
            for (auto& c : cs) es.push_back(Elem{c, Int(0)});
            out = std::move(es);
            break;
        }
        case RingKind::IntegersModN: {
            std::vector<Int> ints, cs;
            for (auto& x : xs) ints.push_back(x.u);
            ints.push_back(n_);
            if (bezout_fold(ints, cs) != 1) return std::nullopt;
            std::vector<Elem> es;
            for (size_t i = 0; i + 1 < cs.size(); ++i) es.push_back(from_int(cs[i]));
            out = std::move(es);
            break;
        }
        case RingKind::LocalizedIntegers: {
            std::vector<Int> ints, cs;
            for (auto& x : xs) ints.push_back(x.u);
            Int g = bezout_fold(ints, cs);
            if (g == 0 || strip_factors_of(g, m_) != 1) return std::nullopt;
            unsigned E = smooth_exponent(g, m_);
            Int scale = pow_ui(m_, E) / g;
            std::vector<Elem> es;
            for (size_t i = 0; i < cs.size(); ++i) {
                // c_i * (m^E / g) * m^{v_i - E}
                Int num = cs[i] * scale;
                Int ev = Int(E) - xs[i].v;
                if (ev <= 0)
                    es.push_back(canonicalize(Elem{Int(num * pow_ui(m_, mpz_get_ui(Int(-ev).get_mpz_t()))), Int(0)}));
                else
                    es.push_back(canonicalize(Elem{num, ev}));
            }
            out = std::move(es);
            break;
        }
        case RingKind::QuadraticOrder:
        case RingKind::QuotientRing: {
            size_t k = xs.size();
            bool quot = kind_ == RingKind::QuotientRing;
            size_t ngen = 2 * k + (quot ? 2 : 0);
            std::vector<TRow> rows;
            for (size_t i = 0; i < k; ++i) {
                rows.push_back({xs[i].u, xs[i].v, unit_coeffs(ngen, 2 * i)});
                rows.push_back({Int(-q_ * xs[i].v), xs[i].u, unit_coeffs(ngen, 2 * i + 1)});
            }
            if (quot) {
                rows.push_back({alpha_.u, alpha_.v, unit_coeffs(ngen, 2 * k)});
                rows.push_back({Int(-q_ * alpha_.v), alpha_.u, unit_coeffs(ngen, 2 * k + 1)});
            }
            Hnf2 h = hnf2(std::move(rows));
            std::vector<Int> cs;
            if (!h.contains(Int(1), Int(0), &cs)) return std::nullopt;
            std::vector<Elem> es;
            for (size_t i = 0; i < k; ++i)
                es.push_back(canonicalize(Elem{cs[2 * i], cs[2 * i + 1]}));
            out = std::move(es);
            break;
        }
    }

    // soundness: re-evaluate the certificate before handing it out
    Elem acc = zero();
    for (size_t i = 0; i < xs.size(); ++i) acc = add(acc, mul((*out)[i], xs[i]));
    if (!is_one(acc)) throw internal_error("bezout witness failed re-evaluation");
    return out;
}

bool Ring::is_unimodular(const std::vector<Elem>& xs) const {
    switch (kind_) {
        case RingKind::Integers: {
            Int g = 0;
            for (auto& x : xs) g = gcd(g, x.u);
            return g == 1;
        }
        case RingKind::IntegersModN: {
            Int g = n_;
            for (auto& x : xs) g = gcd(g, x.u);
            return g == 1;
        }
        case RingKind::LocalizedIntegers: {
            Int g = 0;
            for (auto& x : xs) g = gcd(g, x.u);
            return g != 0 && strip_factors_of(g, m_) == 1;
        }
        default:
            return bezout(xs).has_value();
    }
}

// ---------------------------------------------------------------------------
// divisors, exact division, gcd
// ---------------------------------------------------------------------------

std::vector<Elem> Ring::divisors_up_to_units(const Elem& x) const {
    if (is_zero(x)) throw error("divisors_up_to_units: zero element");
    if (kind_ == RingKind::Integers) {
        std::vector<Elem> out;
        for (auto& d : divisors_of(x.u)) out.push_back(Elem{d, Int(0)});
        return out;
    }
    if (kind_ != RingKind::QuadraticOrder)
        throw error("divisors_up_to_units: unsupported ring");

    Int N = quad_norm(x);
    std::vector<Elem> out;
    for (const Int& k : divisors_of(N)) {
        // all d = a + b*theta with norm k, one representative per associate class
        Int bmax;
        mpz_sqrt(bmax.get_mpz_t(), Int(k / q_).get_mpz_t());
        for (Int b = 0; b <= bmax; ++b) {
            Int a2 = k - q_ * b * b, a;
            if (!is_perfect_square(a2, &a)) continue;
            std::vector<Elem> cands;
            if (q_ == 1) {
                if (a > 0) cands.push_back(Elem{a, b});
                else if (b > 0) cands.push_back(Elem{b, Int(0)});  // unit rotation of b*theta
            } else {
                if (a > 0 && b > 0) {
                    cands.push_back(Elem{a, b});
                    cands.push_back(Elem{a, Int(-b)});
                } else if (a > 0) {
                    cands.push_back(Elem{a, Int(0)});
                } else if (b > 0) {
                    cands.push_back(Elem{Int(0), b});
                }
            }
            for (const Elem& d : cands)
                if (exact_div(x, d)) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Elem& l, const Elem& r) {
        Int nl = quad_norm(l), nr = quad_norm(r);
        if (nl != nr) return nl < nr;
        if (l.u != r.u) return l.u < r.u;
        return l.v < r.v;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Elem> Ring::exact_div(const Elem& x, const Elem& d) const {
    switch (kind_) {
        case RingKind::Integers: {
            auto r = sl3ext::exact_div(x.u, d.u);
            if (!r) return std::nullopt;
            return Elem{*r, Int(0)};
        }
        case RingKind::IntegersModN: {
            auto r = solve_linear_congruence(d.u, x.u, n_);
            if (!r) return std::nullopt;
            return Elem{*r, Int(0)};
        }
        case RingKind::LocalizedIntegers: {
            if (d.u == 0) return std::nullopt;
            Int num = x.u * pow_ui(m_, mpz_get_ui(d.v.get_mpz_t()));
            Int den = d.u * pow_ui(m_, mpz_get_ui(x.v.get_mpz_t()));
            Int g = gcd(num, den);
            if (g != 0) {
                num /= g;
                den /= g;
            }
            if (strip_factors_of(den, m_) != 1) return std::nullopt;
            unsigned E = smooth_exponent(den, m_);
            Int w = num * sgn(den) * (pow_ui(m_, E) / abs(den));
            return canonicalize(Elem{w, Int(E)});
        }
        case RingKind::QuadraticOrder: {
            Int N = quad_norm(d);
            if (N == 0) return std::nullopt;
            Int tu = x.u * d.u + q_ * x.v * d.v;
            Int tv = x.v * d.u - x.u * d.v;
            if (!divides(N, tu) || !divides(N, tv)) return std::nullopt;
            return Elem{Int(tu / N), Int(tv / N)};
        }
        case RingKind::QuotientRing: {
            std::vector<TRow> rows;
            rows.push_back({d.u, d.v, unit_coeffs(4, 0)});
            rows.push_back({Int(-q_ * d.v), d.u, unit_coeffs(4, 1)});
            rows.push_back({alpha_.u, alpha_.v, unit_coeffs(4, 2)});
            rows.push_back({Int(-q_ * alpha_.v), alpha_.u, unit_coeffs(4, 3)});
            Hnf2 h = hnf2(std::move(rows));
            std::vector<Int> cs;
            if (!h.contains(x.u, x.v, &cs)) return std::nullopt;
            return canonicalize(Elem{cs[0], cs[1]});
        }
    }
    throw internal_error("bad kind");
}

std::optional<Elem> Ring::gcd_elem(const Elem& x, const Elem& y) const {
    switch (kind_) {
        case RingKind::Integers:
            return Elem{gcd(x.u, y.u), Int(0)};
        case RingKind::IntegersModN:
            return Elem{gcd(x.u, y.u), Int(0)};
        case RingKind::LocalizedIntegers: {
            Int g = gcd(x.u, y.u);
            return Elem{strip_factors_of(g, m_), Int(0)};
        }
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// quotients
// ---------------------------------------------------------------------------

QuotientMap Ring::quotient(const Elem& a0) const {
    Elem a = canonicalize(a0);
    if (is_zero(a)) throw error("quotient_ring: zero modulus");
    if (is_unit(a)) throw error("quotient_ring: unit modulus gives the zero ring");
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers:
            return {self, integers_mod(abs(a.u))};
        case RingKind::IntegersModN:
            return {self, integers_mod(gcd(a.u, n_))};
        case RingKind::LocalizedIntegers: {
            Int np = strip_factors_of(a.u, m_);
            return {self, integers_mod(np)};
        }
        case RingKind::QuadraticOrder:
            return {self, quotient_of(self, a)};
        case RingKind::QuotientRing:
            throw error("quotient_ring: quotients of quotient rings are not supported");
    }
    throw internal_error("bad kind");
}

Elem QuotientMap::reduce(const Elem& x) const {
    switch (source->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
            return target->from_int(x.u);
        case RingKind::LocalizedIntegers: {
            const Int& np = target->mod_n();
            Int mi = *mod_inverse(mod_floor(source->loc_m(), np), np);
            Int r = mod_floor(x.u, np);
            for (Int i = 0; i < x.v; ++i) r = mod_floor(r * mi, np);
            return Elem{r, Int(0)};
        }
        case RingKind::QuadraticOrder:
            return target->canonicalize(x);
        default:
            throw internal_error("bad quotient source");
    }
}

Elem QuotientMap::lift(const Elem& x) const {
    // canonical residues are already valid representatives upstream
    return source->canonicalize(x);
}

// ---------------------------------------------------------------------------
// enumeration, heights, formatting
// ---------------------------------------------------------------------------

std::vector<Elem> Ring::elements() const {
    if (!finite()) throw error("enumerate_elements: infinite ring");
    if (size_ > 1000000) throw error("enumerate_elements: ring too large");
    std::vector<Elem> out;
    if (kind_ == RingKind::IntegersModN) {
        for (Int i = 0; i < n_; ++i) out.push_back(Elem{i, Int(0)});
    } else {
        for (Int v = 0; v < hs_; ++v)
            for (Int u = 0; u < hp_; ++u) out.push_back(Elem{u, v});
    }
    return out;
}

Int Ring::height(const Elem& x) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::LocalizedIntegers:
            return abs(x.u);
        case RingKind::QuadraticOrder:
            return std::max(Int(abs(x.u)), Int(abs(x.v)));
        default:
            return Int(0);
    }
}

std::vector<Elem> Ring::elements_of_height(long h) const {
    std::vector<Elem> out;
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::LocalizedIntegers:
            if (h == 0)
                out.push_back(zero());
            else {
                out.push_back(Elem{Int(-h), Int(0)});
                out.push_back(Elem{Int(h), Int(0)});
            }
            return out;
        case RingKind::QuadraticOrder: {
            for (long u = -h; u <= h; ++u)
                for (long v = -h; v <= h; ++v)
                    if (std::max(std::abs(u), std::abs(v)) == h)
                        out.push_back(Elem{Int(u), Int(v)});
            return out;
        }
        default:
            throw error("elements_of_height: finite ring");
    }
}

std::string Ring::to_string(const Elem& x) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
            return x.u.get_str();
        case RingKind::LocalizedIntegers:
            if (x.v == 0) return x.u.get_str();
            return x.u.get_str() + "/" + m_.get_str() + "^" + x.v.get_str();
        case RingKind::QuadraticOrder:
        case RingKind::QuotientRing: {
            if (x.v == 0) return x.u.get_str();
            std::ostringstream os;
            if (x.u != 0) os << x.u.get_str();
            if (x.v == 1)
                os << (x.u != 0 ? "+" : "") << "t";
            else if (x.v == -1)
                os << "-t";
            else
                os << (x.v > 0 && x.u != 0 ? "+" : "") << x.v.get_str() << "t";
            return os.str();
        }
    }
    throw internal_error("bad kind");
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::Integers:
            return "Z";
        case RingKind::IntegersModN:
            return "Z/" + n_.get_str();
        case RingKind::LocalizedIntegers:
            return "Z[1/" + m_.get_str() + "]";
        case RingKind::QuadraticOrder:
            return "Z[t], t^2=-" + q_.get_str();
        case RingKind::QuotientRing:
            return "Z[t]/(" + base_->to_string(alpha_) + "), t^2=-" + q_.get_str();
    }
    throw internal_error("bad kind");
}

bool Ring::same_descriptor(const Ring& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::Integers:
            return true;
        case RingKind::IntegersModN:
            return n_ == other.n_;
        case RingKind::LocalizedIntegers:
            return m_ == other.m_;
        case RingKind::QuadraticOrder:
            return q_ == other.q_;
        case RingKind::QuotientRing:
            return q_ == other.q_ && alpha_ == other.alpha_;
    }
    throw internal_error("bad kind");
}

}  // namespace sl3ext
