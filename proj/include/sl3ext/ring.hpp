#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl3ext/integers.hpp"

namespace sl3ext {

/// Input or precondition violation (bad descriptor, zero modulus, ...).
class error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant; never expected on valid inputs.
class internal_error : public std::logic_error {
    using std::logic_error::logic_error;
};

enum class RingKind {
    Integers,           // Z
    IntegersModN,       // Z/n, n >= 2
    LocalizedIntegers,  // Z[1/m], m >= 2
    QuadraticOrder,     // Z[theta], theta^2 = -q, q >= 1
    QuotientRing,       // Z[theta]/(alpha), finite
};

/// One ring element in canonical form. Interpretation depends on the ring:
///   Z, Z/n:      u (v = 0);  Z/n keeps u in [0, n)
///   Z[1/m]:      u / m^v with v >= 0 minimal
///   Z[theta]:    u + v*theta
///   quotient:    u + v*theta reduced to the fundamental domain of (alpha)
struct Elem {
    Int u{0}, v{0};
    bool operator==(const Elem&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Capabilities {
    bool finite = false;
    bool bezout = false;
    bool divisor_enumeration = false;
    bool gcd = false;
};

/// Ring homomorphism R -> R/(a) together with the canonical set-section back.
struct QuotientMap {
    RingPtr source;
    RingPtr target;
    Elem reduce(const Elem& x) const;
    Elem lift(const Elem& x) const;
};

class Ring : public std::enable_shared_from_this<Ring> {
  public:
    RingKind kind() const { return kind_; }

    // descriptor parameters (valid per kind)
    const Int& mod_n() const { return n_; }        // IntegersModN
    const Int& loc_m() const { return m_; }        // LocalizedIntegers
    const Int& quad_q() const { return q_; }       // QuadraticOrder, QuotientRing
    const Elem& quot_modulus() const { return alpha_; }
    RingPtr quot_base() const { return base_; }

    Capabilities capabilities() const;
    bool finite() const;
    Int size() const;  // finite rings only

    Elem zero() const { return Elem{}; }
    Elem one() const;
    Elem from_int(const Int& k) const;
    Elem from_int(long k) const { return from_int(Int(k)); }
    /// Builds an element from raw parts and canonicalizes.
    Elem make(const Int& u, const Int& v) const;
    Elem canonicalize(Elem x) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;

    bool is_zero(const Elem& x) const { return x == zero(); }
    bool is_one(const Elem& x) const { return x == one(); }
    bool is_unit(const Elem& x) const;
    std::optional<Elem> inverse(const Elem& x) const;

    /// Bezout certificate: coefficients c with Sum c[i]*xs[i] = 1, or absent
    /// when the tuple is not unimodular. Witness choice is deterministic.
    std::optional<std::vector<Elem>> bezout(const std::vector<Elem>& xs) const;
    bool is_unimodular(const std::vector<Elem>& xs) const;

    bool jacobson_contains(const Elem& x) const;

    /// One representative per associate class of divisors of x != 0.
    /// Supported for Z and Z[theta].
    std::vector<Elem> divisors_up_to_units(const Elem& x) const;

    /// w with w*d = x, when one exists (deterministic choice).
    std::optional<Elem> exact_div(const Elem& x, const Elem& d) const;

    /// Generator of the ideal (x, y) on gcd-capable rings (Z, Z[1/m], Z/n).
    std::optional<Elem> gcd_elem(const Elem& x, const Elem& y) const;

    /// Norm of x + y*theta (QuadraticOrder / QuotientRing lifts).
    Int quad_norm(const Elem& x) const;

    QuotientMap quotient(const Elem& a) const;

    /// All elements of a finite ring, each exactly once, fixed order.
    std::vector<Elem> elements() const;

    /// Height used by bounded searches: |x| on Z, |numerator| on Z[1/m],
    /// max coefficient magnitude on Z[theta]. Finite rings have height 0.
    Int height(const Elem& x) const;
    /// Elements of exact height h on infinite rings, fixed order.
    std::vector<Elem> elements_of_height(long h) const;

    std::string to_string(const Elem& x) const;
    std::string describe() const;
    bool same_descriptor(const Ring& other) const;

    // construction
    static RingPtr integers();
    static RingPtr integers_mod(const Int& n);
    static RingPtr localized_integers(const Int& m);
    static RingPtr quadratic_order(const Int& q);
    static RingPtr quotient_of(const RingPtr& base, const Elem& modulus);

    struct PrivateTag {};
    explicit Ring(PrivateTag) {}

  private:
    RingKind kind_ = RingKind::Integers;
    Int n_, m_, q_;
    Elem alpha_;       // QuotientRing modulus, in base coordinates
    RingPtr base_;     // QuotientRing base (a QuadraticOrder)
    Int hp_, hr_, hs_; // Hermite basis (hp,0), (hr,hs) of the modulus lattice
    Int size_{0};

    friend struct QuotientMap;
    Elem quot_reduce(const Elem& x) const;
};

/// make_ring with descriptor validation; rejects zero/unit quotient moduli
/// and unsupported quotient bases. QuotientRing over Z normalizes to Z/n.
RingPtr make_ring_integers();
RingPtr make_ring_mod(const Int& n);
RingPtr make_ring_localized(const Int& m);
RingPtr make_ring_quadratic(const Int& q);
RingPtr make_ring_quotient(const RingPtr& base, const Elem& modulus);

/// quotient_ring as an operation on a handle (see Ring::quotient).
QuotientMap quotient_ring(const RingPtr& R, const Elem& a);

}  // namespace sl3ext
