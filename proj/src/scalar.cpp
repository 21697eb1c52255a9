#include "dainf/scalar.hpp"

#include <stdexcept>

namespace dainf {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt mod_pos(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r.is_negative()) r = r + p;
    return r;
}

// inverse of a mod p, p prime, 0 < a < p
BigInt mod_inv(const BigInt& a, const BigInt& p) {
    // extended Euclid
    BigInt old_r = a, r = p;
    BigInt old_s(1), s(0);
    while (!r.is_zero()) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (!old_r.is_one()) throw std::domain_error("Scalar: element not invertible mod p");
    return mod_pos(old_s, p);
}

} // namespace

CoefficientRing CoefficientRing::Fp(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("CoefficientRing: characteristic must be prime");
    return {RingKind::prime_field, p};
}

std::string CoefficientRing::describe() const {
    switch (kind) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::prime_field: return "F" + std::to_string(p);
    }
    return "?";
}

CoefficientRing CoefficientRing::parse(const std::string& s) {
    if (s == "Z" || s == "integers") return Z();
    if (s == "Q" || s == "rationals") return Q();
    std::string num;
    if (s.rfind("Fp:", 0) == 0) num = s.substr(3);
    else if (!s.empty() && s[0] == 'F') num = s.substr(1);
    if (!num.empty()) {
        try {
            return Fp(std::stoll(num));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (...) {
        }
    }
    throw std::invalid_argument("CoefficientRing: cannot parse '" + s + "'");
}

void Scalar::normalize(const CoefficientRing& ring) {
    switch (ring.kind) {
        case RingKind::prime_field: {
            BigInt p(ring.p);
            num_ = mod_pos(num_, p);
            if (!den_.is_one()) {
                BigInt d = mod_pos(den_, p);
                if (d.is_zero()) throw std::domain_error("Scalar: denominator divisible by p");
                num_ = mod_pos(num_ * mod_inv(d, p), p);
                den_ = BigInt(1);
            }
            return;
        }
        case RingKind::integers: {
            if (!den_.is_one()) {
                if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
                BigInt q, r;
                BigInt::divmod(num_, den_, q, r);
                if (!r.is_zero())
                    throw std::domain_error("Scalar: division is not exact over Z");
                num_ = q;
                den_ = BigInt(1);
            }
            return;
        }
        case RingKind::rationals: {
            if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
            if (num_.is_zero()) {
                den_ = BigInt(1);
                return;
            }
            if (den_.is_negative()) {
                num_ = -num_;
                den_ = -den_;
            }
            BigInt g = BigInt::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
            return;
        }
    }
}

Scalar Scalar::of(const CoefficientRing& ring, long long v) { return of(ring, BigInt(v)); }

Scalar Scalar::of(const CoefficientRing& ring, BigInt num, BigInt den) {
    Scalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize(ring);
    return s;
}

Scalar Scalar::parse(const CoefficientRing& ring, const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return of(ring, BigInt::from_string(s));
    if (ring.kind == RingKind::integers)
        throw std::domain_error("Scalar: fraction '" + s + "' not allowed over Z");
    return of(ring, BigInt::from_string(s.substr(0, slash)),
              BigInt::from_string(s.substr(slash + 1)));
}

Scalar Scalar::add(const Scalar& o, const CoefficientRing& ring) const {
    return of(ring, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::sub(const Scalar& o, const CoefficientRing& ring) const {
    return of(ring, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::mul(const Scalar& o, const CoefficientRing& ring) const {
    return of(ring, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::neg(const CoefficientRing& ring) const {
    Scalar r = *this;
    r.num_ = -r.num_;
    r.normalize(ring);
    return r;
}

Scalar Scalar::div(const Scalar& o, const CoefficientRing& ring) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (ring.kind == RingKind::integers)
        return of(ring, num_ * o.den_, den_ * o.num_); // normalize() enforces exactness
    return of(ring, num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv(const CoefficientRing& ring) const {
    return of(ring, 1).div(*this, ring);
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace dainf
