#include "cts/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace cts {

GF2Poly GF2Poly::monomial(int degree) {
    GF2Poly p;
    p.words_.assign(static_cast<std::size_t>(degree / 64) + 1, 0);
    p.words_.back() = 1ULL << (degree % 64);
    return p;
}

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int GF2Poly::degree() const {
    if (words_.empty()) return -1;
    std::uint64_t top = words_.back();
    int bit = 63;
    while (!(top >> bit & 1)) --bit;
    return static_cast<int>(words_.size() - 1) * 64 + bit;
}

bool GF2Poly::coeff(int d) const {
    if (d < 0) return false;
    std::size_t w = static_cast<std::size_t>(d) / 64;
    if (w >= words_.size()) return false;
    return words_[w] >> (d % 64) & 1;
}

void GF2Poly::flip(int d) {
    std::size_t w = static_cast<std::size_t>(d) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= 1ULL << (d % 64);
    trim();
}

GF2Poly operator+(const GF2Poly& x, const GF2Poly& y) {
    GF2Poly r;
    r.words_.resize(std::max(x.words_.size(), y.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        std::uint64_t w = 0;
        if (i < x.words_.size()) w ^= x.words_[i];
        if (i < y.words_.size()) w ^= y.words_[i];
        r.words_[i] = w;
    }
    r.trim();
    return r;
}

GF2Poly operator*(const GF2Poly& x, const GF2Poly& y) {
    if (x.is_zero() || y.is_zero()) return GF2Poly();
    GF2Poly r;
    int dx = x.degree(), dy = y.degree();
    r.words_.assign(static_cast<std::size_t>((dx + dy) / 64) + 1, 0);
    for (int i = 0; i <= dx; ++i) {
        if (!x.coeff(i)) continue;
        // xor y << i into r
        int shift = i % 64;
        std::size_t base = static_cast<std::size_t>(i) / 64;
        for (std::size_t w = 0; w < y.words_.size(); ++w) {
            r.words_[base + w] ^= y.words_[w] << shift;
            if (shift && base + w + 1 < r.words_.size())
                r.words_[base + w + 1] ^= y.words_[w] >> (64 - shift);
        }
    }
    r.trim();
    return r;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::divmod(const GF2Poly& num, const GF2Poly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    GF2Poly q, r = num;
    int dd = den.degree();
    while (r.degree() >= dd) {
        int shift = r.degree() - dd;
        q.flip(shift);
        r += den * monomial(shift);
    }
    return {q, r};
}

GF2Poly GF2Poly::gcd(GF2Poly x, GF2Poly y) {
    while (!y.is_zero()) {
        GF2Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return one();
    return x;
}

bool GF2Poly::operator<(const GF2Poly& y) const {
    if (words_.size() != y.words_.size()) return words_.size() < y.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i] != y.words_[i]) return words_[i] < y.words_[i];
    return false;
}

std::uint8_t gf16_mul(std::uint8_t x, std::uint8_t y) {
    std::uint8_t r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & 0x10) x ^= 0x13;  // t^4 = t + 1
    }
    return r & 0xF;
}

std::uint8_t gf16_inv(std::uint8_t x) {
    if (!x) throw DivisionByZero("gf16 inverse of zero");
    for (std::uint8_t y = 1; y < 16; ++y)
        if (gf16_mul(x, y) == 1) return y;
    return 0;  // unreachable
}

std::uint8_t GF2Poly::eval_gf16(std::uint8_t point) const {
    std::uint8_t acc = 0;
    for (int d = degree(); d >= 0; --d) {
        acc = gf16_mul(acc, point);
        if (coeff(d)) acc ^= 1;
    }
    return acc;
}

std::string GF2Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        if (!coeff(d)) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "a";
        else
            s += "a^" + std::to_string(d);
    }
    return s;
}

namespace {

// poly := mono ('+' mono)*, mono := '0' | '1' | 'a' ('^' digits)?
GF2Poly parse_poly(const std::string& text, std::size_t& pos) {
    GF2Poly p;
    bool expect_mono = true;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        if (c == '+') {
            if (expect_mono) throw ParseError("unexpected '+' in scalar: " + text);
            expect_mono = true;
            ++pos;
            continue;
        }
        if (!expect_mono) break;
        if (c == '0') {
            ++pos;
        } else if (c == '1') {
            p.flip(0);
            ++pos;
        } else if (c == 'a') {
            ++pos;
            int d = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("missing exponent in scalar: " + text);
                d = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    d = d * 10 + (text[pos++] - '0');
            }
            p.flip(d);
        } else {
            break;
        }
        expect_mono = false;
    }
    if (expect_mono) throw ParseError("empty polynomial in scalar: " + text);
    return p;
}

GF2Poly parse_side(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '(') {
        ++pos;
        GF2Poly p = parse_poly(text, pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || text[pos] != ')') throw ParseError("missing ')' in scalar: " + text);
        ++pos;
        return p;
    }
    return parse_poly(text, pos);
}

}  // namespace

GF2Poly GF2Poly::parse(const std::string& text) {
    std::size_t pos = 0;
    GF2Poly p = parse_poly(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("trailing characters in polynomial: " + text);
    return p;
}

Scalar Scalar::of(const GF2Poly& p) {
    Scalar s;
    s.num_ = p;
    s.den_ = GF2Poly::one();
    return s;
}

Scalar Scalar::ratio(const GF2Poly& num, const GF2Poly& den) {
    if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.reduce();
    return s;
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = GF2Poly::one();
        return;
    }
    GF2Poly g = GF2Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = GF2Poly::divmod(num_, g).first;
        den_ = GF2Poly::divmod(den_, g).first;
    }
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar::ratio(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_zero() || y.is_zero()) return Scalar::zero();
    return Scalar::ratio(x.num_ * y.num_, x.den_ * y.den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("scalar inverse of zero");
    return ratio(den_, num_);
}

bool Scalar::operator<(const Scalar& y) const {
    if (num_ != y.num_) return num_ < y.num_;
    return den_ < y.den_;
}

namespace {

// p(image) written over a common power of image's denominator:
// p(u/v) = (sum_d p_d u^d v^(deg-d)) / v^deg.
GF2Poly compose_num(const GF2Poly& p, const GF2Poly& u, const GF2Poly& v) {
    int deg = p.degree();
    if (deg < 0) return GF2Poly::zero();
    GF2Poly acc;
    GF2Poly upow = GF2Poly::one();
    std::vector<GF2Poly> vpow(static_cast<std::size_t>(deg) + 1);
    vpow[0] = GF2Poly::one();
    for (int d = 1; d <= deg; ++d) vpow[static_cast<std::size_t>(d)] = vpow[static_cast<std::size_t>(d - 1)] * v;
    for (int d = 0; d <= deg; ++d) {
        if (p.coeff(d)) acc += upow * vpow[static_cast<std::size_t>(deg - d)];
        upow = upow * u;
    }
    return acc;
}

}  // namespace

Scalar Scalar::substitute(const Scalar& image) const {
    const GF2Poly& u = image.num();
    const GF2Poly& v = image.den();
    int dn = num_.degree(), dd = den_.degree();
    GF2Poly top = compose_num(num_, u, v);
    GF2Poly bot = compose_num(den_, u, v);
    // Rebalance the v-powers: num/v^dn over den/v^dd.
    if (dn > dd) {
        GF2Poly vp = GF2Poly::one();
        for (int i = 0; i < dn - dd; ++i) vp = vp * v;
        bot = bot * vp;
    } else if (dd > dn) {
        GF2Poly vp = GF2Poly::one();
        for (int i = 0; i < dd - dn; ++i) vp = vp * v;
        top = top * vp;
    }
    if (bot.is_zero()) throw IndeterminateSubstitution("denominator vanishes under substitution");
    return ratio(top, bot);
}

std::uint8_t Scalar::eval_gf16(std::uint8_t point) const {
    std::uint8_t d = den_.eval_gf16(point);
    if (!d) throw DivisionByZero("denominator vanishes at evaluation point");
    return gf16_mul(num_.eval_gf16(point), gf16_inv(d));
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const GF2Poly& p) {
        std::string s = p.str();
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

Scalar Scalar::parse(const std::string& text) {
    std::size_t pos = 0;
    GF2Poly num = parse_side(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        GF2Poly den = parse_side(text, pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw ParseError("trailing characters in scalar: " + text);
        return ratio(num, den);
    }
    if (pos != text.size()) throw ParseError("trailing characters in scalar: " + text);
    return of(num);
}

}  // namespace cts
