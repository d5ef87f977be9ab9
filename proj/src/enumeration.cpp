#include "sl3ext/enumeration.hpp"

#include <algorithm>
#include <set>

namespace sl3ext {

std::vector<Certificate> gamma_enumerate(const Mat2& A, long bound) {
    auto R = A.R;
    if (R->kind() != RingKind::Integers)
        throw error("gamma_enumerate: only the integers are supported");
    if (bound < 1) throw error("gamma_enumerate: bound must be >= 1");
    if (!is_unimodular_mat2(A)) throw error("gamma_enumerate: matrix is not unimodular");

    const Int a = A.a.u, b = A.b.u, c = A.c.u, d = A.d.u;
    const Int B(bound);
    std::vector<Certificate> out;
    auto push = [&](const Int& e, const Int& f, const Int& s, const Int& t) {
        out.push_back(Certificate{Elem{e, 0}, Elem{f, 0}, Elem{s, 0}, Elem{t, 0}});
    };

    for (Int e = -B; e <= B; ++e)
        for (Int f = -B; f <= B; ++f) {
            Int coef_t = b * e + d * f;  // t * coef_t = 1 - (a e + c f) s
            Int us = a * e + c * f;
            for (Int s = -B; s <= B; ++s) {
                Int rhs = 1 - us * s;
                if (coef_t == 0) {
                    if (rhs != 0) continue;
                    for (Int t = -B; t <= B; ++t) push(e, f, s, t);
                } else {
                    if (!divides(coef_t, rhs)) continue;
                    Int t = rhs / coef_t;
                    if (abs(t) <= B) push(e, f, s, t);
                }
            }
        }
    return out;
}

NuSample nu_enumerate(const Mat2& A, long bound) {
    NuSample ns{A, bound, gamma_enumerate(A, bound), {}};
    Int det = det2(A).u;
    std::set<Int> vals;
    for (const Certificate& c : ns.gamma) vals.insert(Int(det + c.e.u * c.s.u + c.f.u * c.t.u));
    ns.values.assign(vals.begin(), vals.end());
    return ns;
}

bool ResidueClass::contains(const Int& v) const {
    if (modulus == 0) return v == base;
    return divides(modulus, v - base);
}

std::string ResidueClass::to_string() const {
    if (modulus == 0) return std::string("{") + base.get_str() + "}";
    return base.get_str() + " + " + modulus.get_str() + "Z";
}

ResidueClass nu_diag_closed_form(const Int& d) { return ResidueClass{Int(2), Int(d - 1)}; }

}  // namespace sl3ext
