#include "fatdelta/error.hpp"
#include "fatdelta/factorize.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace fatdelta;

namespace {

FatObject obj(const char* edges) { return FatObject::from_edges(edges); }
MonotoneMap map(int m, int n, std::vector<int> img) { return MonotoneMap(m, n, std::move(img)); }
std::vector<Letter> L(std::initializer_list<Letter> ls) { return ls; }

FatMorphism vertical(const char* dom, const char* cod, std::vector<int> top)
{
    const FatObject a = obj(dom);
    const FatObject b = obj(cod);
    return FatMorphism(a, b, map(a.m(), b.m(), std::move(top)), MonotoneMap::identity(a.n()));
}

// "-" -> "==" collapsing the edge, then adding an inner vertex
const FatMorphism& collapse_and_fill()
{
    static const FatMorphism f(obj("-"), obj("=="), map(1, 2, {0, 2}), map(1, 0, {0, 0}));
    return f;
}

} // namespace

TEST(Factorize, VerticalExamples)
{
    const VerticalFactors a = factor_vertical(vertical("", "=", {0}));
    EXPECT_EQ(a.phi, L({Letter::b(0, 1)}));
    EXPECT_TRUE(a.nu.empty());

    const VerticalFactors b = factor_vertical(vertical("=", "==", {0, 2}));
    EXPECT_TRUE(b.phi.empty());
    EXPECT_EQ(b.nu, L({Letter::v(1)}));

    const FatMorphism f = vertical("", "==", {0});
    const VerticalFactors c = factor_vertical(f);
    EXPECT_EQ(c.phi, L({Letter::b(0, 1)}));
    EXPECT_EQ(c.nu, L({Letter::v(1)}));
    std::vector<Letter> w = c.phi;
    w.insert(w.end(), c.nu.begin(), c.nu.end());
    EXPECT_EQ(eval_letters(obj(""), w), f);

    EXPECT_THROW(factor_vertical(deg_face(obj("-"), 0)), Error);
}

TEST(Factorize, HorizontalExamples)
{
    const HorizontalFactors a = factor_horizontal(std_face(obj("-"), 1));
    EXPECT_EQ(a.delta, L({Letter::s(1)}));
    EXPECT_TRUE(a.phi.empty() && a.nu.empty() && a.psi.empty() && a.tau.empty());

    const HorizontalFactors id = factor_horizontal(FatMorphism::identity(obj("-")));
    EXPECT_TRUE(id.phi.empty() && id.nu.empty() && id.delta.empty() && id.psi.empty() && id.tau.empty());

    // "" -> "=-" hitting vertex 2: fibre 0 is new and gets one more vertex at its end
    const FatMorphism f(obj(""), obj("=-"), map(0, 2, {2}), map(0, 1, {1}));
    const HorizontalFactors h = factor_horizontal(f);
    EXPECT_EQ(h.delta, L({Letter::s(0)}));
    EXPECT_EQ(h.psi, L({Letter::b(0, 1)}));
    EXPECT_TRUE(h.phi.empty() && h.nu.empty() && h.tau.empty());
    EXPECT_EQ(eval_letters(obj(""), L({Letter::s(0), Letter::b(0, 1)})), f);

    EXPECT_THROW(factor_horizontal(deg_face(obj("-"), 0)), Error);
}

TEST(Factorize, FullExamples)
{
    const NormalForm a = factor_full(deg_face(obj("-"), 0));
    EXPECT_EQ(a.sigma, L({Letter::d(0)}));
    EXPECT_EQ(a.letters(), L({Letter::d(0)}));

    const NormalForm b = factor_full(collapse_and_fill());
    EXPECT_EQ(b.sigma, L({Letter::d(0)}));
    EXPECT_EQ(b.nu, L({Letter::v(1)}));
    EXPECT_EQ(b.letters().size(), 2u);
    EXPECT_EQ(to_string(b), "sigma:[d0] phi:[] nu:[v1] delta:[] psi:[] tau:[]");
    EXPECT_EQ(to_string(b.word()), "- | d0;v1");

    const NormalForm c = factor_full(FatMorphism::identity(obj("-=-")));
    EXPECT_TRUE(c.letters().empty());
    EXPECT_EQ(c.anchor, obj("-=-"));
}

TEST(Factorize, BlockDisciplineDetectsViolations)
{
    NormalForm nf;
    nf.anchor = obj("---");
    nf.sigma = L({Letter::d(0), Letter::d(0)});
    EXPECT_EQ(check_block_discipline(nf), "");
    nf.sigma = L({Letter::d(1), Letter::d(0)});
    EXPECT_NE(check_block_discipline(nf), "");
    nf.sigma = L({Letter::v(1)});
    EXPECT_NE(check_block_discipline(nf), "");

    NormalForm p;
    p.anchor = obj("");
    p.delta = L({Letter::s(0)});
    p.psi = L({Letter::b(0, 0)});
    EXPECT_NE(check_block_discipline(p), "");
}

TEST(Factorize, RoundTripAndCanonicalUpToFour)
{
    long n = 0;
    for (const FatMorphism& f : gen::all_homs(4)) {
        const NormalForm nf = factor_full(f);
        ASSERT_EQ(check_block_discipline(nf), "") << to_string(nf);
        ASSERT_EQ(eval(nf), f) << to_string(nf);
        ASSERT_EQ(factor_full(eval(nf)), nf);
        ++n;
    }
    EXPECT_EQ(n, 1156);
}

TEST(Factorize, TernaryExamples)
{
    const Ternary t = ternary_factor(collapse_and_fill());
    EXPECT_EQ(t.d, deg_face(obj("-"), 0));
    EXPECT_EQ(t.v, vert_face(obj("=="), 1));
    EXPECT_EQ(t.h, FatMorphism::identity(obj("==")));

    const FatMorphism hz = std_face(obj("-"), 1);
    const Ternary th = ternary_factor(hz);
    EXPECT_EQ(th.d, FatMorphism::identity(hz.dom()));
    EXPECT_EQ(th.v, FatMorphism::identity(hz.dom()));
    EXPECT_EQ(th.h, hz);

    const FatMorphism dg = deg_face(obj("--"), 1);
    const Ternary td = ternary_factor(dg);
    EXPECT_EQ(td.d, dg);
    EXPECT_EQ(td.v, FatMorphism::identity(dg.cod()));
    EXPECT_EQ(td.h, FatMorphism::identity(dg.cod()));
}

TEST(Factorize, TernaryIsUniqueUpToThree)
{
    const std::vector<FatObject> objs = gen::objects_upto(3);
    for (const FatMorphism& f : gen::all_homs(3)) {
        const Ternary t = ternary_factor(f);
        ASSERT_EQ(compose(t.h, compose(t.v, t.d)), f);
        ASSERT_TRUE(class_of(t.d) & Diagonal);
        ASSERT_TRUE(class_of(t.v) & Vertical);
        ASSERT_TRUE(class_of(t.h) & Horizontal);
        int found = 0;
        for (const FatObject& x : objs) {
            if (x.m() != f.dom().m()) {
                continue;
            }
            for (const FatMorphism& d : gen::homs(f.dom(), x)) {
                if (!(class_of(d) & Diagonal)) {
                    continue;
                }
                for (const FatObject& y : objs) {
                    if (y.n() != x.n() || y.m() > f.cod().m()) {
                        continue;
                    }
                    for (const FatMorphism& v : gen::homs(x, y)) {
                        if (!(class_of(v) & Vertical)) {
                            continue;
                        }
                        const FatMorphism vd = compose(v, d);
                        for (const FatMorphism& h : gen::homs(y, f.cod())) {
                            found += (class_of(h) & Horizontal) && compose(h, vd) == f;
                        }
                    }
                }
            }
        }
        EXPECT_EQ(found, 1) << to_string(f.top()) << " " << to_string(f.bot());
    }
}

TEST(Factorize, ActiveInertExamples)
{
    const FatMorphism v = vert_face(obj("=="), 1);
    const ActiveInertFat a = active_inert_factor_fat(v);
    EXPECT_EQ(a.active, v);
    EXPECT_EQ(a.inert, FatMorphism::identity(v.cod()));

    const FatMorphism s = std_face(obj("-"), 1);
    const ActiveInertFat b = active_inert_factor_fat(s);
    EXPECT_EQ(b.active, FatMorphism::identity(s.dom()));
    EXPECT_EQ(b.inert, s);

    const FatMorphism id = FatMorphism::identity(obj("=-"));
    EXPECT_EQ(active_inert_factor_fat(id).active, id);
    EXPECT_EQ(active_inert_factor_fat(id).inert, id);
}

TEST(Factorize, ActiveInertIsUniqueUpToThree)
{
    const std::vector<FatObject> objs = gen::objects_upto(3);
    for (const FatMorphism& f : gen::all_homs(3)) {
        const ActiveInertFat ai = active_inert_factor_fat(f);
        ASSERT_EQ(compose(ai.inert, ai.active), f);
        ASSERT_TRUE(is_active_fat(ai.active));
        ASSERT_TRUE(is_inert_fat(ai.inert));
        int found = 0;
        for (const FatObject& x : objs) {
            for (const FatMorphism& a : gen::homs(f.dom(), x)) {
                if (!is_active_fat(a)) {
                    continue;
                }
                for (const FatMorphism& i : gen::homs(x, f.cod())) {
                    found += is_inert_fat(i) && compose(i, a) == f;
                }
            }
        }
        EXPECT_EQ(found, 1) << to_string(f.top()) << " " << to_string(f.bot());
    }
}
