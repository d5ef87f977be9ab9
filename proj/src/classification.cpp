#include "sl3ext/classification.hpp"

#include <map>
#include <numeric>

namespace sl3ext {

namespace {

// Residue rings run on machine integers; other finite rings go through the
// generic element tables. Both expose the same small surface.

struct ZmodView {
    unsigned long n = 0, rad = 0;
    int size() const { return int(n); }
    int add(int a, int b) const { return int((static_cast<unsigned long>(a) + b) % n); }
    int mul(int a, int b) const { return int((static_cast<unsigned long>(a) * b) % n); }
    int sub(int a, int b) const { return int((static_cast<unsigned long>(a) + n - b) % n); }
    bool is_zero(int a) const { return a == 0; }
    bool unit(int a) const { return std::gcd(static_cast<unsigned long>(a), n) == 1; }
    bool in_jacobson(int a) const { return static_cast<unsigned long>(a) % rad == 0; }
    bool unim2(int a, int b) const {
        return std::gcd(std::gcd(static_cast<unsigned long>(a), static_cast<unsigned long>(b)), n) == 1;
    }
    bool unim3(int a, int b, int c) const {
        unsigned long g = std::gcd(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return std::gcd(std::gcd(g, static_cast<unsigned long>(c)), n) == 1;
    }
    bool unim4(int a, int b, int c, int d) const {
        unsigned long g = std::gcd(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        g = std::gcd(g, static_cast<unsigned long>(c));
        return std::gcd(std::gcd(g, static_cast<unsigned long>(d)), n) == 1;
    }
    Elem elem(int i) const { return Elem{Int(long(i)), Int(0)}; }
};

struct GenericView {
    RingPtr R;
    std::vector<Elem> els;
    std::vector<int> addt, mult;
    std::vector<char> unitt, jact, unim2t;
    int n = 0;

    int size() const { return n; }
    int add(int a, int b) const { return addt[size_t(a) * n + b]; }
    int mul(int a, int b) const { return mult[size_t(a) * n + b]; }
    int sub(int a, int b) const;
    bool is_zero(int a) const { return R->is_zero(els[size_t(a)]); }
    bool unit(int a) const { return unitt[size_t(a)] != 0; }
    bool in_jacobson(int a) const { return jact[size_t(a)] != 0; }
    bool unim2(int a, int b) const { return unim2t[size_t(a) * n + b] != 0; }
    bool unim3(int a, int b, int c) const {
        return R->is_unimodular({els[size_t(a)], els[size_t(b)], els[size_t(c)]});
    }
    bool unim4(int a, int b, int c, int d) const {
        return R->is_unimodular({els[size_t(a)], els[size_t(b)], els[size_t(c)], els[size_t(d)]});
    }
    Elem elem(int i) const { return els[size_t(i)]; }
};

int GenericView::sub(int a, int b) const {
    const Elem d = R->sub(els[size_t(a)], els[size_t(b)]);
    for (int i = 0; i < n; ++i)
        if (els[size_t(i)] == d) return i;
    throw internal_error("element outside the enumeration");
}

GenericView make_generic_view(const RingPtr& R) {
    GenericView v;
    v.R = R;
    v.els = R->elements();
    v.n = int(v.els.size());
    std::map<std::pair<Int, Int>, int> index;
    for (int i = 0; i < v.n; ++i) index[{v.els[size_t(i)].u, v.els[size_t(i)].v}] = i;
    auto idx = [&](const Elem& e) { return index.at({e.u, e.v}); };
    v.addt.resize(size_t(v.n) * v.n);
    v.mult.resize(size_t(v.n) * v.n);
    v.unim2t.resize(size_t(v.n) * v.n);
    v.unitt.resize(size_t(v.n));
    v.jact.resize(size_t(v.n));
    for (int a = 0; a < v.n; ++a) {
        v.unitt[size_t(a)] = R->is_unit(v.els[size_t(a)]) ? 1 : 0;
        v.jact[size_t(a)] = R->jacobson_contains(v.els[size_t(a)]) ? 1 : 0;
        for (int b = 0; b < v.n; ++b) {
            v.addt[size_t(a) * v.n + b] = idx(R->add(v.els[size_t(a)], v.els[size_t(b)]));
            v.mult[size_t(a) * v.n + b] = idx(R->mul(v.els[size_t(a)], v.els[size_t(b)]));
            v.unim2t[size_t(a) * v.n + b] =
                R->is_unimodular({v.els[size_t(a)], v.els[size_t(b)]}) ? 1 : 0;
        }
    }
    return v;
}

ZmodView make_zmod_view(const RingPtr& R) {
    ZmodView v;
    v.n = mpz_get_ui(R->mod_n().get_mpz_t());
    v.rad = mpz_get_ui(radical(R->mod_n()).get_mpz_t());
    return v;
}

template <class V>
PredicateResult sr1_impl(const V& v) {
    const int n = v.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!v.unim2(a, b)) continue;
            bool found = false;
            for (int r = 0; r < n && !found; ++r) found = v.unit(v.add(a, v.mul(b, r)));
            if (!found) return {false, {v.elem(a), v.elem(b)}};
        }
    return {};
}

template <class V>
PredicateResult fsr_like_impl(const V& v, bool exclude_jacobson) {
    const int n = v.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!v.unim2(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (exclude_jacobson ? v.in_jacobson(c) : v.is_zero(c)) continue;
                bool found = false;
                for (int r = 0; r < n && !found; ++r) found = v.unim2(v.add(a, v.mul(b, r)), c);
                if (!found) return {false, {v.elem(a), v.elem(b), v.elem(c)}};
            }
        }
    return {};
}

template <class V>
bool simple_pair_exists(const V& v, int a, int b, int c, int d) {
    const int n = v.size();
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
            int u = v.add(v.mul(a, e), v.mul(c, f));
            int w = v.add(v.mul(b, e), v.mul(d, f));
            if (v.unim2(u, w)) return true;
        }
    return false;
}

template <class V>
bool extendable_pair_exists(const V& v, int a, int b, int c, int d, int det) {
    const int n = v.size();
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
            int u = v.add(v.mul(a, e), v.mul(c, f));
            int w = v.add(v.mul(b, e), v.mul(d, f));
            if (v.unim3(u, w, det)) return true;
        }
    return false;
}

template <class V>
void classify_matrices(const V& v, RingClassReport& rep) {
    const int n = v.size();
    rep.pi2 = rep.e2 = rep.se2 = true;
    auto note = [&](const char* pred, int a, int b, int c, int d) {
        if (!rep.counterexample)
            rep.counterexample = {std::string(pred),
                                  {v.elem(a), v.elem(b), v.elem(c), v.elem(d)}};
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!v.unim4(a, b, c, d)) continue;
                    int det = v.sub(v.mul(a, d), v.mul(b, c));
                    bool simple = simple_pair_exists(v, a, b, c, d);
                    bool ext = simple || extendable_pair_exists(v, a, b, c, d, det);
                    if (!simple) {
                        rep.se2 = false;
                        note("se2", a, b, c, d);
                        if (v.is_zero(det)) {
                            rep.pi2 = false;
                            note("pi2", a, b, c, d);
                        }
                    }
                    if (!ext) {
                        rep.e2 = false;
                        note("e2", a, b, c, d);
                    }
                }
}

template <class V>
bool ext_iff_simple_impl(const V& v) {
    const int n = v.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (!v.unim4(a, b, c, d)) continue;
                    int det = v.sub(v.mul(a, d), v.mul(b, c));
                    bool simple = simple_pair_exists(v, a, b, c, d);
                    bool ext = simple || extendable_pair_exists(v, a, b, c, d, det);
                    if (simple != ext) return false;
                }
    return true;
}

void require_finite(const RingPtr& R, long cap) {
    if (!R->finite()) throw error("classification requires a finite ring");
    if (R->size() > cap) throw error("classification cap exceeded: |R| = " + R->size().get_str());
}

template <class F>
auto with_view(const RingPtr& R, F&& f) {
    if (R->kind() == RingKind::IntegersModN) return f(make_zmod_view(R));
    return f(make_generic_view(R));
}

}  // namespace

PredicateResult sr1_check(const RingPtr& R) {
    require_finite(R, 1 << 20);
    return with_view(R, [](const auto& v) { return sr1_impl(v); });
}

PredicateResult fsr15_check(const RingPtr& R) {
    require_finite(R, 1 << 20);
    return with_view(R, [](const auto& v) { return fsr_like_impl(v, false); });
}

PredicateResult asr1_check(const RingPtr& R) {
    require_finite(R, 1 << 20);
    return with_view(R, [](const auto& v) { return fsr_like_impl(v, true); });
}

RingClassReport classify_finite_ring(const RingPtr& R, long cap) {
    require_finite(R, cap);
    RingClassReport rep;
    rep.ring = R;
    with_view(R, [&](const auto& v) {
        PredicateResult sr1 = sr1_impl(v);
        rep.sr1 = sr1.ok;
        PredicateResult fsr = fsr_like_impl(v, false);
        rep.fsr15 = fsr.ok;
        PredicateResult asr = fsr_like_impl(v, true);
        rep.asr1 = asr.ok;
        if (!rep.counterexample) {
            if (!sr1.ok) rep.counterexample = {std::string("sr1"), sr1.counterexample};
            else if (!fsr.ok) rep.counterexample = {std::string("fsr15"), fsr.counterexample};
            else if (!asr.ok) rep.counterexample = {std::string("asr1"), asr.counterexample};
        }
        classify_matrices(v, rep);
        return 0;
    });
    if ((rep.sr1 && !rep.fsr15) || (rep.fsr15 && !rep.asr1))
        throw internal_error("stable range implication chain violated");
    if ((rep.se2 && !rep.e2) || (rep.e2 && !rep.pi2))
        throw internal_error("matrix class implication chain violated");
    return rep;
}

bool extendable_iff_simple_check(const RingPtr& R, long cap) {
    require_finite(R, cap);
    return with_view(R, [](const auto& v) { return ext_iff_simple_impl(v); });
}

}  // namespace sl3ext
