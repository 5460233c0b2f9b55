#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathcell/module.hpp"

using namespace pathcell;

namespace {
const SymBase A = SymBase::a();
const SymBase B = SymBase::b();
const Flavor P = Flavor::plain;
const Flavor C = Flavor::complement;
} // namespace

TEST_CASE("sphere and disk") {
    CellModule s = sphere(0, 0);
    CHECK(s.rank() == 1);
    CHECK(s.d_squared_residuals().empty());

    CellModule d = disk(0, 0);
    CHECK(d.rank() == 2);
    CHECK(d.d_squared_residuals().empty());
    // acyclic: eliminating the unit pair leaves nothing
    auto elim = eliminate_units(d);
    CHECK(elim.reduced.rank() == 0);
}

TEST_CASE("interval module") {
    CellModule i = interval_module();
    CHECK(i.rank() == 3);
    CHECK(i.d_squared_residuals().empty());
}

TEST_CASE("shift moves bidegrees and composes additively") {
    CellModule s = sphere(0, 0);
    CellModule t = shift(s, -1);
    CHECK(t.cell(0).deg == Bidegree{1, 1});
    CellModule u = shift(shift(s, 2), 3);
    CellModule v = shift(s, 5);
    CHECK(u.cell(0).deg == v.cell(0).deg);
    CellModule w = shift(s, 0);
    CHECK(w.cell(0).deg == s.cell(0).deg);
    CellModule ad = adams_shift(s, -1);
    CHECK(ad.cell(0).deg == Bidegree{0, 1});
}

TEST_CASE("cofiber of the zero map is block diagonal") {
    CellModule m = sphere(2, 1);
    CellModule n = sphere(0, 0);
    ModuleMap z = zero_map(m, n);
    CellModule c = cofiber(z);
    CHECK(c.rank() == 2);
    CHECK(c.d_squared_residuals().empty());
    CHECK(c.cell(1).deg == Bidegree{1, 1});
    CHECK(c.column(0).empty());
    CHECK(c.column(1).empty());
}

TEST_CASE("cofiber of the identity is contractible") {
    CellModule m = sphere(0, 0);
    ModuleMap id = identity_map(m);
    CellModule c = cofiber(id);
    CHECK(c.rank() == 2);
    CHECK(c.d_squared_residuals().empty());
    auto elim = eliminate_units(c);
    CHECK(elim.reduced.rank() == 0);
}

TEST_CASE("cofiber rejects non-chain maps with a residual") {
    // map sending a closed generator to a non-closed element
    CellModule m = sphere(1, 2);
    CellModule n = sphere(1, 2);
    ModuleMap f(&m, &n);
    f.add_value(0, 0, Element::totaro(A, {P, C})); // d of entry is nonzero
    CHECK(!is_chain_map(f));
    CHECK_THROWS(cofiber(f));
}

TEST_CASE("cofiber of a sphere inclusion into a disk reduces to a shifted sphere") {
    CellModule d = disk(3, 2);
    CellModule s = sphere(4, 2);
    ModuleMap incl(&s, &d);
    incl.add_value(0, 0, Element::unit()); // generator to the top cell
    REQUIRE(is_chain_map(incl));
    CellModule c = cofiber(incl);
    CHECK(c.d_squared_residuals().empty());
    auto elim = eliminate_units(c);
    REQUIRE(elim.reduced.rank() == 1);
    CHECK(elim.reduced.cell(0).deg == Bidegree{3, 2});
    CHECK(elim.reduced.column(0).empty());
}

TEST_CASE("check_homotopy: trivial cases") {
    CellModule m = sphere(1, 1);
    CellModule n = sphere(1, 1);
    ModuleMap f = zero_map(m, n);
    ModuleMap g = zero_map(m, n);
    ModuleMap h = zero_map(m, n, {-1, 0});
    CHECK(check_homotopy(h, f, g));
    ModuleMap g2(&m, &n);
    g2.add_value(0, 0, Element::unit());
    CHECK(!check_homotopy(h, f, g2));
    auto res = homotopy_residuals(h, f, g2);
    REQUIRE(res.size() == 1);
    CHECK(res[0].value == -Element::unit()); // the twisted f - g survives
}

TEST_CASE("a genuine one-cell homotopy") {
    // M free on x at (1,2); N has cells t at (1,2), s at (2,2), d(t) = 0,
    // d(s) = 0; f(x) = d(T_{a,1-a})-style: use N with s closed and
    // f - g = boundary of h
    CellModule m = sphere(1, 2);
    CellModule n("N");
    int t = n.add_cell("t", {1, 2});
    REQUIRE(t == 0);
    ModuleMap f = zero_map(m, n);
    ModuleMap g(&m, &n);
    // g(x) = d(T_{a,1-a}) t would not be closed unless the coefficient is a
    // cocycle; instead test h with coefficient differential:
    // h(x) = T_{a,1-a} t gives d h(x) = [a][1-a] t, and deg x = 1 so the
    // condition reads d h = -(f - g), i.e. g - f = [a][1-a] t
    g.add_value(0, t, multiply(Element::steinberg(A, P), Element::steinberg(A, C)));
    ModuleMap h(&m, &n, {-1, 0});
    h.add_value(0, t, Element::totaro(A, {P, C}));
    CHECK(check_homotopy(h, f, g));
}

TEST_CASE("cofiber_map: zero and identity cases") {
    CellModule w = sphere(2, 2);
    CellModule x = sphere(1, 1);
    CellModule y = sphere(2, 2);
    CellModule z = sphere(1, 1);
    ModuleMap f = zero_map(w, x);
    ModuleMap g = zero_map(y, z);
    ModuleMap al = zero_map(w, y);
    ModuleMap be = zero_map(x, z);
    ModuleMap h = zero_map(w, z, {-1, 0});
    CellModule cf = cofiber(f);
    CellModule cg = cofiber(g);
    ModuleMap F = cofiber_map(cf, cg, al, be, f, g, h);
    CHECK(is_chain_map(F));
    for (int c = 0; c < (int)cf.rank(); ++c)
        CHECK(F.value(c).empty());

    ModuleMap idf = identity_map(x);
    CellModule cid = cofiber(idf);
    ModuleMap G = cofiber_map(cid, cid, identity_map(x), identity_map(x), idf, idf,
                              zero_map(x, x, {-1, 0}));
    CHECK(is_chain_map(G));
    for (int c = 0; c < (int)cid.rank(); ++c) {
        REQUIRE(G.value(c).size() == 1);
        CHECK(G.value(c).begin()->first == c);
        CHECK(G.value(c).begin()->second == Element::unit());
    }
}

TEST_CASE("cofiber_map rejects an invalid homotopy") {
    CellModule w = sphere(1, 1);
    CellModule x = sphere(1, 1);
    ModuleMap f = identity_map(x);
    ModuleMap al = identity_map(w);
    ModuleMap be(&x, &x);
    be.add_value(0, 0, Rat(2) * Element::unit()); // beta f != f alpha
    CellModule cf = cofiber(f);
    CHECK_THROWS(cofiber_map(cf, cf, al, be, f, f, zero_map(w, x, {-1, 0})));
}

TEST_CASE("totalize: single module and two-term reduction to the cofiber") {
    CellModule m = sphere(0, 0);
    Totalization single = totalize({&m}, {}, {});
    CHECK(single.total.rank() == 1);
    CHECK(single.total.d_squared_residuals().empty());

    CellModule c1("C1");
    c1.add_cell("e", {1, 1});
    CellModule c0("C0");
    c0.add_cell("x", {1, 1});
    ModuleMap a(&c1, &c0);
    a.add_value(0, 0, Element::unit());
    Totalization two = totalize({&c1, &c0}, {&a}, {});
    CHECK(two.total.rank() == 2);
    CHECK(two.total.d_squared_residuals().empty());
    // matches the cofiber matrix: target block then shifted source block
    CellModule cf = cofiber(a);
    REQUIRE(cf.rank() == 2);
    // the cofiber stores target cells first; the totalization stores the
    // deeper column first, so compare the twisted entry
    const auto& col = two.total.column(0);
    REQUIRE(col.size() == 1);
    CHECK(col[0].second == -Element::unit()); // (-1)^{deg e} with deg e = 1
}

TEST_CASE("totalize of a strictly commuting complex with zero homotopies") {
    // C2 -> C1 -> C0 with alpha^2 = 0 has d^2 = 0 and no homotopies needed
    CellModule c2("C2");
    c2.add_cell("e", {0, 0});
    CellModule c1("C1");
    c1.add_cell("x", {0, 0});
    c1.add_cell("y", {0, 0});
    CellModule c0("C0");
    c0.add_cell("z", {0, 0});
    ModuleMap a2(&c2, &c1);
    a2.add_value(0, 0, Element::unit());
    a2.add_value(0, 1, Element::unit());
    ModuleMap a1(&c1, &c0);
    a1.add_value(0, 0, Element::unit());
    a1.add_value(1, 0, -Element::unit());
    Totalization tot = totalize({&c2, &c1, &c0}, {&a2, &a1}, {});
    CHECK(tot.total.d_squared_residuals().empty());

    // breaking alpha^2 = 0 surfaces as a d^2 residual
    ModuleMap bad(&c1, &c0);
    bad.add_value(0, 0, Element::unit());
    bad.add_value(1, 0, Element::unit());
    Totalization tot2 = totalize({&c2, &c1, &c0}, {&a2, &bad}, {});
    CHECK(!tot2.total.d_squared_residuals().empty());
}

TEST_CASE("module map Koszul application and composition") {
    CellModule m = sphere(1, 1);
    CellModule n = sphere(0, 0);
    ModuleMap f(&m, &n, {-1, 0});
    f.add_value(0, 0, Element::unit());
    ModElt x{{0, Element::steinberg(A, P)}};
    ModElt y = f.apply(x);
    REQUIRE(y.size() == 1);
    CHECK(y.begin()->second == -Element::steinberg(A, P)); // odd map crossing
    ModElt ys = f.apply_strict(x);
    CHECK(ys.begin()->second == Element::steinberg(A, P));
}

TEST_CASE("eliminate_units tracks a chain projection") {
    // d(c) = r, with a separate closed cell s carrying a decomposable entry
    CellModule m("M");
    int r = m.add_cell("r", {1, 1});
    int s = m.add_cell("s", {0, 0});
    int c = m.add_cell("c", {0, 1});
    m.set_entry(r, c, Element::unit());
    m.set_entry(s, c, Element::steinberg(A, P));
    REQUIRE(m.d_squared_residuals().empty());
    auto elim = eliminate_units(m);
    CHECK(elim.reduced.rank() == 1);
    CHECK(elim.reduced.cell(0).label == "s");
    // projection is a chain map onto the reduced module
    ModuleMap q(&m, &elim.reduced);
    for (int i = 0; i < (int)m.rank(); ++i)
        q.set_value(i, elim.projection[i]);
    CHECK(is_chain_map(q));
}
