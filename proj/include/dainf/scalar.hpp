#pragma once

#include <string>

#include "dainf/bigint.hpp"

namespace dainf {

enum class RingKind { integers, rationals, prime_field };

struct CoefficientRing {
    RingKind kind = RingKind::rationals;
    long long p = 0; // characteristic; 0 for Z and Q, a prime for F_p

    static CoefficientRing Z() { return {RingKind::integers, 0}; }
    static CoefficientRing Q() { return {RingKind::rationals, 0}; }
    static CoefficientRing Fp(long long p);

    bool is_field() const { return kind != RingKind::integers; }
    bool operator==(const CoefficientRing& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const CoefficientRing& o) const { return !(*this == o); }

    std::string describe() const;
    /// Parses "Z", "Q", "F5"/"Fp:5"; throws std::invalid_argument otherwise.
    static CoefficientRing parse(const std::string& s);
};

/// Exact ring element. Rationals are kept as normalized fraction pairs
/// (positive denominator, gcd 1); integers have denominator 1; prime-field
/// values are canonical residues in [0, p).
class Scalar {
public:
    Scalar() = default; // zero of an unspecified ring; usable with any ring

    static Scalar zero() { return Scalar(); }
    static Scalar of(const CoefficientRing& ring, long long v);
    static Scalar of(const CoefficientRing& ring, BigInt num, BigInt den = BigInt(1));
    /// Parses "5", "-3/7" (Q), residue strings (F_p). Throws on malformed
    /// input or division forbidden by the ring.
    static Scalar parse(const CoefficientRing& ring, const std::string& s);

    bool is_zero() const { return num_.is_zero(); }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Scalar add(const Scalar& o, const CoefficientRing& ring) const;
    Scalar sub(const Scalar& o, const CoefficientRing& ring) const;
    Scalar mul(const Scalar& o, const CoefficientRing& ring) const;
    Scalar neg(const CoefficientRing& ring) const;
    /// Division; requires a field (or an exact integer quotient over Z).
    Scalar div(const Scalar& o, const CoefficientRing& ring) const;
    Scalar inv(const CoefficientRing& ring) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;
    size_t hash() const { return num_.hash() * 31 + den_.hash(); }

private:
    BigInt num_ = BigInt(0);
    BigInt den_ = BigInt(1);

    void normalize(const CoefficientRing& ring);
};

} // namespace dainf
