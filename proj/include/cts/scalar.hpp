#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cts/common.hpp"

namespace cts {

// Polynomial over GF(2) in the single indeterminate `a`, stored as a bit
// vector indexed by degree. The zero polynomial has degree -1.
class GF2Poly {
  public:
    GF2Poly() = default;
    static GF2Poly zero() { return GF2Poly(); }
    static GF2Poly one() { return monomial(0); }
    static GF2Poly a() { return monomial(1); }
    static GF2Poly monomial(int degree);

    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return degree() == 0; }
    int degree() const;  // -1 for zero
    bool coeff(int d) const;
    void flip(int d);  // toggle coefficient, re-trims

    friend GF2Poly operator+(const GF2Poly& x, const GF2Poly& y);
    friend GF2Poly operator*(const GF2Poly& x, const GF2Poly& y);
    GF2Poly& operator+=(const GF2Poly& y) { return *this = *this + y; }

    // Euclidean division; divisor must be nonzero.
    static std::pair<GF2Poly, GF2Poly> divmod(const GF2Poly& num, const GF2Poly& den);
    static GF2Poly gcd(GF2Poly x, GF2Poly y);

    bool operator==(const GF2Poly& y) const { return words_ == y.words_; }
    bool operator!=(const GF2Poly& y) const { return !(*this == y); }
    bool operator<(const GF2Poly& y) const;

    // Evaluate in GF(2^4) = GF(2)[t]/(t^4+t+1); the point is a 4-bit value.
    std::uint8_t eval_gf16(std::uint8_t point) const;

    std::string str() const;               // e.g. "a^2+a+1", "0", "1"
    static GF2Poly parse(const std::string& text);

  private:
    void trim();
    std::vector<std::uint64_t> words_;  // bit d of words_[d/64]; top word nonzero
};

// Element of the rational-function field GF(2)(a), kept gcd-reduced with a
// nonzero denominator (automatically monic over GF(2)). Equality is
// representational equality of the reduced form.
class Scalar {
  public:
    Scalar() : num_(), den_(GF2Poly::one()) {}
    explicit Scalar(int c) : num_(c % 2 ? GF2Poly::one() : GF2Poly::zero()), den_(GF2Poly::one()) {}
    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static Scalar a() { return of(GF2Poly::a()); }
    static Scalar of(const GF2Poly& p);
    static Scalar ratio(const GF2Poly& num, const GF2Poly& den);  // throws DivisionByZero

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const GF2Poly& num() const { return num_; }
    const GF2Poly& den() const { return den_; }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar inv() const;  // throws DivisionByZero on zero

    bool operator==(const Scalar& y) const { return num_ == y.num_ && den_ == y.den_; }
    bool operator!=(const Scalar& y) const { return !(*this == y); }
    bool operator<(const Scalar& y) const;

    // Replace `a` by `image` and reduce. Throws IndeterminateSubstitution if
    // the denominator of the composite vanishes identically.
    Scalar substitute(const Scalar& image) const;

    // Evaluate at a point of GF(2^4); throws DivisionByZero if the
    // denominator vanishes at the point.
    std::uint8_t eval_gf16(std::uint8_t point) const;

    std::string str() const;  // "(a+1)/a", "a^2+a", "0", "1"
    static Scalar parse(const std::string& text);

  private:
    void reduce();
    GF2Poly num_, den_;
};

// Arithmetic in GF(2^4) with modulus t^4 + t + 1 (test oracles and spot checks).
std::uint8_t gf16_mul(std::uint8_t x, std::uint8_t y);
std::uint8_t gf16_inv(std::uint8_t x);

}  // namespace cts
