#include "cts/liesuper.hpp"

#include "doctest.h"

using namespace cts;

namespace {

SparseVec unit(int i) { return SparseVec{{i, Scalar::one()}}; }

// hei(2): [x,y] = z with z central.
LieSuperAlgebra heisenberg3() {
    LieSuperAlgebra g;
    g.add_basis("x", false);
    g.add_basis("y", false);
    g.add_basis("z", false);
    g.set_bracket(0, 1, unit(2));
    return g;
}

// gl(2) from the size-1 Cartan matrix (ev): e, f, h central, d grading.
LieSuperAlgebra gl2() {
    LieSuperAlgebra g;
    g.add_basis("e", false);
    g.add_basis("f", false);
    g.add_basis("h", false);
    g.add_basis("d", false);
    g.set_bracket(0, 1, unit(2));
    g.set_bracket(3, 0, unit(0));
    g.set_bracket(3, 1, unit(1));
    return g;
}

// o'(3): [e,f] = h, [h,e] = e, [h,f] = f (Cartan matrix (od)).
LieSuperAlgebra o3prime() {
    LieSuperAlgebra g;
    g.add_basis("e", false);
    g.add_basis("h", false);
    g.add_basis("f", false);
    g.set_bracket(0, 2, unit(1));
    g.set_bracket(1, 0, unit(0));
    g.set_bracket(1, 2, unit(2));
    return g;
}

}  // namespace

TEST_CASE("verify accepts valid tables and flags corrupted ones") {
    CHECK(heisenberg3().verify().empty());
    CHECK(gl2().verify().empty());
    CHECK(o3prime().verify().empty());

    LieSuperAlgebra abelian;
    abelian.add_basis("u", false);
    CHECK(abelian.verify().empty());

    LieSuperAlgebra bad = o3prime();
    bad.set_bracket(1, 0, unit(2));  // corrupt [h,e]
    auto report = bad.verify();
    REQUIRE(!report.empty());
    bool names_triple = false;
    for (const auto& line : report)
        if (line.find("Jacobi") != std::string::npos) names_triple = true;
    CHECK(names_triple);
}

TEST_CASE("derived series") {
    auto d1 = gl2().derived(1);
    CHECK(d1.algebra.dim() == 3);  // hei(2) = sl(2)
    CHECK(d1.algebra.verify().empty());

    LieSuperAlgebra abelian;
    abelian.add_basis("u", false);
    abelian.add_basis("v", false);
    CHECK(abelian.derived(1).algebra.dim() == 0);

    // squaring enters the derived algebra: osp(1|2)-style table
    LieSuperAlgebra g;
    g.add_basis("e", true);
    g.add_basis("h", false);
    g.set_square(0, unit(1));
    g.set_bracket(1, 0, unit(0));
    CHECK(g.derived(1).algebra.dim() == 2);
}

TEST_CASE("center and quotient") {
    LieSuperAlgebra h3 = heisenberg3();
    ExactMatrix c = h3.center();
    CHECK(c.rows() == 1);
    auto q = h3.quotient_by_ideal(c);
    CHECK(q.algebra.dim() == 2);
    CHECK(q.algebra.verify().empty());

    CHECK(o3prime().center().rows() == 0);

    LieSuperAlgebra abelian;
    for (int i = 0; i < 4; ++i) abelian.add_basis("u" + std::to_string(i), false);
    CHECK(abelian.center().rows() == 4);
}

TEST_CASE("desuperize keeps the bracket and drops parity") {
    LieSuperAlgebra g;
    g.add_basis("x", true);
    g.add_basis("y", true);
    g.add_basis("z", false);
    g.set_bracket(0, 1, unit(2));
    g.set_square(0, unit(2));
    LieSuperAlgebra f = g.desuperized();
    CHECK(f.sdim() == std::pair<int, int>{3, 0});
    CHECK(f.bracket(0, 1) == unit(2));
    CHECK(f.square_of_basis(0).empty());          // no longer structure
    CHECK(f.inert_squaring().count(0) == 1);      // kept as annotation
    CHECK(f.verify().empty());
}

TEST_CASE("graded derivations of hei(2)") {
    LieSuperAlgebra h3 = heisenberg3();
    ZGrading grading{1, -1, 0};
    auto rep = graded_derivations(h3, grading, 0);
    CHECK(rep.dim_derivations >= 1 + rep.dim_inner);  // outer count >= 1
    // far beyond the top degree only the zero map remains
    auto far = graded_derivations(h3, grading, 100);
    CHECK(far.dim_derivations == 0);
}

TEST_CASE("weisfeiler filtration") {
    LieSuperAlgebra abelian;
    abelian.add_basis("u", false);
    abelian.add_basis("v", false);
    ExactMatrix l0(0, 2);
    ExactMatrix lm1(0, 2);
    lm1.append_row(unit(0));
    lm1.append_row(unit(1));
    auto f = weisfeiler_filtration(abelian, l0, lm1);
    CHECK(f.depth == 1);

    // hei(2) with L0 = <z>, L-1 = <y,z>: depth 2 since [y, x] regenerates.
    LieSuperAlgebra h3 = heisenberg3();
    ExactMatrix h0(0, 3);
    h0.append_row(unit(2));
    ExactMatrix hm1(0, 3);
    hm1.append_row(unit(1));
    hm1.append_row(unit(2));
    auto fh = weisfeiler_filtration(h3, h0, hm1);
    CHECK(fh.depth >= 1);
}

TEST_CASE("simplicity verdicts") {
    CHECK(is_simple(o3prime()).verdict != Simplicity::NOT_SIMPLE);

    auto g = gl2();
    auto rep = is_simple(g);
    CHECK(rep.verdict == Simplicity::NOT_SIMPLE);
    CHECK(rep.witness_ideal.rows() > 0);

    // direct sum of two copies of o'(3)
    LieSuperAlgebra sum;
    for (int copy = 0; copy < 2; ++copy) {
        int base = copy * 3;
        sum.add_basis("e" + std::to_string(copy), false);
        sum.add_basis("h" + std::to_string(copy), false);
        sum.add_basis("f" + std::to_string(copy), false);
        sum.set_bracket(base + 0, base + 2, unit(base + 1));
        sum.set_bracket(base + 1, base + 0, unit(base + 0));
        sum.set_bracket(base + 1, base + 2, unit(base + 2));
    }
    auto sum_rep = is_simple(sum);
    CHECK(sum_rep.verdict == Simplicity::NOT_SIMPLE);
    CHECK(sum_rep.witness_ideal.rows() == 3);
}

TEST_CASE("json round trip") {
    LieSuperAlgebra g;
    g.add_basis("x", true);
    g.add_basis("h", false);
    g.set_square(0, SparseVec{{1, Scalar::a()}});
    g.set_bracket(1, 0, SparseVec{{0, Scalar::parse("(a+1)/a")}});
    LieSuperAlgebra back = LieSuperAlgebra::from_json(g.to_json());
    CHECK(back.dim() == 2);
    CHECK(back.odd(0));
    CHECK(back.square_of_basis(0) == g.square_of_basis(0));
    CHECK(back.bracket(0, 1) == g.bracket(0, 1));
}
