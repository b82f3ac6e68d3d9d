#include "cts/linalg.hpp"
#include "cts/scalar.hpp"

#include "doctest.h"

#include <vector>

using namespace cts;

namespace {

Scalar random_scalar(SplitMix64& rng, int max_deg = 4) {
    auto rand_poly = [&](bool nonzero) {
        GF2Poly p;
        for (int d = 0; d <= max_deg; ++d)
            if (rng.next() & 1) p.flip(d);
        if (nonzero && p.is_zero()) p.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1))));
        return p;
    };
    return Scalar::ratio(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_CASE("gf2 polynomial basics") {
    GF2Poly a = GF2Poly::a();
    CHECK(a.degree() == 1);
    CHECK((a + a).is_zero());
    CHECK((a * a).degree() == 2);
    GF2Poly p = GF2Poly::parse("a^2+a");
    CHECK(p.str() == "a^2+a");
    CHECK(GF2Poly::gcd(p, a) == a);
    auto [q, r] = GF2Poly::divmod(p, a);
    CHECK(q == GF2Poly::parse("a+1"));
    CHECK(r.is_zero());
}

TEST_CASE("scalar char-2 arithmetic") {
    Scalar a = Scalar::a();
    CHECK((a + a).is_zero());  // additive involution
    Scalar x = Scalar::parse("(a+1)/a");
    Scalar y = Scalar::parse("a/(a+1)");
    CHECK((x * y).is_one());  // inverse pair
    CHECK(Scalar::parse("a+1").inv().str() == "1/(a+1)");
    CHECK_THROWS_AS(Scalar::zero().inv(), DivisionByZero);
    CHECK(Scalar::parse("0").is_zero());
    CHECK(Scalar::parse("1").is_one());
    // reduction to canonical form
    CHECK(Scalar::ratio(GF2Poly::parse("a^2+a"), GF2Poly::parse("a")) == Scalar::parse("a+1"));
}

TEST_CASE("scalar substitution") {
    Scalar a = Scalar::a();
    Scalar inv_a = a.inv();
    CHECK(Scalar::parse("a+1").substitute(inv_a) == Scalar::parse("(1+a)/a"));
    CHECK(a.substitute(a) == a);
    CHECK(a.substitute(inv_a) == inv_a);
    // 0/0 style failure: substitute a -> 1 into 1/(a+1)
    CHECK_THROWS_AS(Scalar::parse("1/(a+1)").substitute(Scalar::one()), IndeterminateSubstitution);
}

TEST_CASE("field axioms on random scalars") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        if (!x.is_zero()) CHECK((x * x.inv()).is_one());
    }
}

TEST_CASE("wkiso substitutions are invertible") {
    // sigma in the group generated by a -> 1+a and a -> 1/a, with inverses.
    Scalar a = Scalar::a();
    std::vector<std::pair<Scalar, Scalar>> pairs = {
        {Scalar::parse("a+1"), Scalar::parse("a+1")},
        {Scalar::parse("1/a"), Scalar::parse("1/a")},
        {Scalar::parse("a/(a+1)"), Scalar::parse("a/(a+1)")},
        {Scalar::parse("(1+a)/a"), Scalar::parse("1/(a+1)")},
        {Scalar::parse("1/(a+1)"), Scalar::parse("(1+a)/a")},
    };
    SplitMix64 rng(7);
    for (const auto& [sigma, sigma_inv] : pairs) {
        CHECK(sigma.substitute(sigma_inv) == a);
        for (int i = 0; i < 100; ++i) {
            Scalar x = random_scalar(rng);
            CHECK(x.substitute(sigma).substitute(sigma_inv) == x);
        }
    }
}

TEST_CASE("rref and kernel over GF(2)") {
    ExactMatrix id2(2, 2);
    id2.set(0, 0, Scalar::one());
    id2.set(1, 1, Scalar::one());
    CHECK(kernel(id2).rows() == 0);

    ExactMatrix ones(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) ones.set(r, c, Scalar::one());
    ExactMatrix k = kernel(ones);
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) == Scalar::one());
    CHECK(k.at(0, 1) == Scalar::one());
}

TEST_CASE("rref of [[a,1],[1,a]] has full rank generically") {
    // Oracle: det = a^2 + 1 is a nonzero polynomial, so rank 2 over GF(2)(a).
    GF2Poly det = GF2Poly::a() * GF2Poly::a() + GF2Poly::one();
    CHECK(!det.is_zero());
    ExactMatrix m(2, 2);
    m.set(0, 0, Scalar::a());
    m.set(0, 1, Scalar::one());
    m.set(1, 0, Scalar::one());
    m.set(1, 1, Scalar::a());
    CHECK(rref(m).rank == 2);
}

TEST_CASE("rank-nullity on random sparse matrices") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(6));
        int cols = 1 + static_cast<int>(rng.below(6));
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.below(3) == 0) m.set(r, c, random_scalar(rng, 2));
        RrefResult rr = rref(m);
        ExactMatrix k = kernel(m);
        CHECK(rr.rank + k.rows() == cols);
        // Every kernel vector really is annihilated.
        for (int kr = 0; kr < k.rows(); ++kr) {
            for (int r = 0; r < rows; ++r) {
                Scalar dot;
                for (const auto& [c, v] : m.row(r)) {
                    auto it = k.row(kr).find(c);
                    if (it != k.row(kr).end()) dot += v * it->second;
                }
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("kernel evaluates consistently at GF(16) sample points") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(4));
        int cols = 2 + static_cast<int>(rng.below(4));
        ExactMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.below(2) == 0) m.set(r, c, random_scalar(rng, 2));
        ExactMatrix k = kernel(m);
        for (std::uint8_t t = 2; t < 16; ++t) {
            bool ok = true;  // skip points where any denominator vanishes
            auto safe_eval = [&](const Scalar& s) -> std::uint8_t {
                if (s.den().eval_gf16(t) == 0) {
                    ok = false;
                    return 0;
                }
                return s.eval_gf16(t);
            };
            for (int kr = 0; kr < k.rows() && ok; ++kr) {
                for (int r = 0; r < rows && ok; ++r) {
                    std::uint8_t dot = 0;
                    for (const auto& [c, v] : m.row(r)) {
                        auto it = k.row(kr).find(c);
                        if (it != k.row(kr).end()) {
                            std::uint8_t prod = gf16_mul(safe_eval(v), safe_eval(it->second));
                            if (!ok) break;
                            dot ^= prod;
                        }
                    }
                    if (ok) CHECK(dot == 0);
                }
            }
            if (ok) break;  // one valid sample point is enough per matrix
        }
    }
}

TEST_CASE("solve picks the leftmost-pivot particular solution") {
    ExactMatrix m(2, 3);
    m.set(0, 0, Scalar::one());
    m.set(0, 2, Scalar::a());
    m.set(1, 1, Scalar::one());
    ExactMatrix rhs(2, 1);
    rhs.set(0, 0, Scalar::one());
    rhs.set(1, 0, Scalar::a());
    ExactMatrix x = solve(m, rhs);
    CHECK(x.at(0, 0) == Scalar::one());
    CHECK(x.at(1, 0) == Scalar::a());
    CHECK(x.at(2, 0).is_zero());

    ExactMatrix bad(2, 1);
    bad.set(0, 0, Scalar::one());
    ExactMatrix singular(2, 1);
    singular.set(0, 0, Scalar::one());
    singular.set(1, 0, Scalar::one());
    CHECK_THROWS_AS(solve(singular, rhs), NoSolution);
}

TEST_CASE("echelon span membership and coordinates") {
    EchelonSpan span(3);
    SparseVec v1{{0, Scalar::one()}, {1, Scalar::a()}};
    SparseVec v2{{1, Scalar::one()}};
    CHECK(span.insert(v1));
    CHECK(span.insert(v2));
    CHECK(!span.insert(v1));
    SparseVec probe{{0, Scalar::a()}};
    auto coords = span.coordinates(vec_scaled(v1, Scalar::a()));
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Scalar::a());
    SparseVec outside{{2, Scalar::one()}};
    CHECK(!span.contains(outside));
}
