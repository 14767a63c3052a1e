#include "fatdelta/error.hpp"
#include "fatdelta/faces.hpp"
#include "fatdelta/factorize.hpp"
#include "fatdelta/literals.hpp"
#include "fatdelta/oracle.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

using namespace fatdelta;

namespace {

FatObject obj(const char* edges) { return FatObject::from_edges(edges); }
MonotoneMap map(int m, int n, std::vector<int> img) { return MonotoneMap(m, n, std::move(img)); }

long binom(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

bool lex_sorted(const std::vector<MonotoneMap>& maps)
{
    return std::is_sorted(maps.begin(), maps.end(),
                          [](const MonotoneMap& a, const MonotoneMap& b) { return a.images() < b.images(); });
}

} // namespace

TEST(Oracle, MapEnumerationExamples)
{
    EXPECT_EQ(enum_mono(0, 1), (std::vector<MonotoneMap>{map(0, 1, {0}), map(0, 1, {1})}));
    EXPECT_EQ(enum_monotone(1, 0), (std::vector<MonotoneMap>{map(1, 0, {0, 0})}));
    EXPECT_EQ(enum_epi(2, 1), (std::vector<MonotoneMap>{map(2, 1, {0, 0, 1}), map(2, 1, {0, 1, 1})}));
}

TEST(Oracle, MapCountsMatchClosedForms)
{
    for (int m = 0; m <= 6; ++m) {
        for (int n = 0; n <= 6; ++n) {
            const std::vector<MonotoneMap> all = enum_monotone(m, n);
            EXPECT_EQ(static_cast<long>(all.size()), binom(m + n + 1, m + 1));
            EXPECT_EQ(static_cast<long>(enum_mono(m, n).size()), binom(n + 1, m + 1));
            EXPECT_EQ(static_cast<long>(enum_epi(m, n).size()), binom(m, n));
            EXPECT_TRUE(lex_sorted(all));
            const std::vector<MonotoneMap> ref = gen::maps(m, n);
            EXPECT_EQ(std::set<MonotoneMap>(all.begin(), all.end()), std::set<MonotoneMap>(ref.begin(), ref.end()));
        }
    }
}

TEST(Oracle, ObjectEnumeration)
{
    EXPECT_EQ(enum_objects(0), (std::vector<FatObject>{obj("")}));
    const std::vector<FatObject> two = enum_objects(2);
    EXPECT_EQ(std::set<FatObject>(two.begin(), two.end()),
              (std::set<FatObject>{obj("--"), obj("-="), obj("=-"), obj("==")}));
    EXPECT_EQ(two.size(), 4u);
    EXPECT_EQ(enum_objects(10).size(), 1024u);
    for (int m = 0; m <= 8; ++m) {
        const std::vector<FatObject> objs = enum_objects(m);
        EXPECT_EQ(objs.size(), size_t{1} << m);
        EXPECT_TRUE(std::is_sorted(objs.begin(), objs.end(), [](const FatObject& a, const FatObject& b) {
            return a.eta().images() < b.eta().images();
        }));
        const std::vector<FatObject> ref = gen::objects(m);
        EXPECT_EQ(std::set<FatObject>(objs.begin(), objs.end()), std::set<FatObject>(ref.begin(), ref.end()));
    }
    EXPECT_EQ(enum_objects_upto(3).size(), 15u);
    EXPECT_THROW(enum_objects(-1), Error);
}

TEST(Oracle, HomExamples)
{
    const HomSet a = enum_hom(obj(""), obj("-"));
    ASSERT_EQ(a.morphisms.size(), 2u);
    EXPECT_EQ(a.morphisms[0].top(), map(0, 1, {0}));
    EXPECT_EQ(a.morphisms[1].top(), map(0, 1, {1}));
    EXPECT_TRUE(enum_hom(obj("="), obj("-")).morphisms.empty());
    const HomSet c = enum_hom(obj("-"), obj("-"));
    ASSERT_EQ(c.morphisms.size(), 1u);
    EXPECT_EQ(c.morphisms[0], FatMorphism::identity(obj("-")));
}

TEST(Oracle, HomSetsMatchBruteForceAndCompose)
{
    const std::vector<FatObject> objs = gen::objects_upto(3);
    for (const FatObject& a : objs) {
        for (const FatObject& b : objs) {
            const std::vector<FatMorphism> ab = enum_hom(a, b).morphisms;
            const std::vector<FatMorphism> ref = gen::homs(a, b);
            ASSERT_EQ(std::set<FatMorphism>(ab.begin(), ab.end()), std::set<FatMorphism>(ref.begin(), ref.end()))
                << format_object(a) << " " << format_object(b);
            EXPECT_EQ(ab.size(), ref.size());
            EXPECT_TRUE(std::is_sorted(ab.begin(), ab.end(), [](const FatMorphism& f, const FatMorphism& g) {
                return f.top().images() < g.top().images();
            }));
        }
    }
    const std::vector<FatObject> small = gen::objects_upto(2);
    for (const FatObject& a : small) {
        for (const FatObject& b : small) {
            for (const FatObject& c : small) {
                const std::vector<FatMorphism> ac = enum_hom(a, c).morphisms;
                for (const FatMorphism& f : enum_hom(a, b).morphisms) {
                    for (const FatMorphism& g : enum_hom(b, c).morphisms) {
                        EXPECT_NE(std::find(ac.begin(), ac.end(), compose(g, f)), ac.end());
                    }
                }
            }
        }
    }
}

TEST(Oracle, FactorizationsLandInHomSets)
{
    for (const FatMorphism& f : gen::all_homs(3)) {
        const FatMorphism g = eval(factor_full(f));
        const std::vector<FatMorphism> hs = enum_hom(f.dom(), f.cod()).morphisms;
        EXPECT_NE(std::find(hs.begin(), hs.end(), g), hs.end());
    }
}

TEST(Oracle, UniversalExamples)
{
    UniversalData po;
    po.first = map(1, 0, {0, 0});
    po.second = MonotoneMap::identity(1);
    po.pushout = pushout_along_epi(po.first, po.second);
    EXPECT_TRUE(verify_universal(UniversalKind::Pushout, po, 4));

    UniversalData lift;
    lift.lift = cocartesian_lift(obj("="), map(1, 2, {0, 1}));
    EXPECT_TRUE(verify_universal(UniversalKind::Cocartesian, lift, 4));

    UniversalData pb;
    pb.first = map(0, 1, {1});
    pb.second = map(2, 1, {0, 1, 1});
    pb.pullback = pullback_along_mono(pb.first, pb.second);
    EXPECT_TRUE(verify_universal(UniversalKind::Pullback, pb, 4));
}

TEST(Oracle, UniversalRejectsCorruptedCandidates)
{
    UniversalData po;
    po.first = map(1, 0, {0, 0});
    po.second = map(1, 2, {0, 1});
    Pushout bad = pushout_along_epi(po.first, po.second);
    bad.from_n = map(0, 1, {1});
    po.pushout = bad;
    EXPECT_FALSE(verify_universal(UniversalKind::Pushout, po, 4));

    // a valid square that is not the pushout: the bottom collapses too much
    UniversalData po2;
    po2.first = MonotoneMap::identity(1);
    po2.second = MonotoneMap::identity(1);
    po2.pushout = Pushout{0, map(1, 0, {0, 0}), map(1, 0, {0, 0})};
    EXPECT_FALSE(verify_universal(UniversalKind::Pushout, po2, 4));

    UniversalData pb;
    pb.first = map(0, 1, {1});
    pb.second = map(2, 1, {0, 1, 1});
    pb.pullback = Pullback{0, map(0, 2, {1}), map(0, 0, {0})};
    EXPECT_FALSE(verify_universal(UniversalKind::Pullback, pb, 4));

    // "" -> "=" lies over [0] -> [1] but the lift of that mono is "" -> "-"
    UniversalData lift;
    lift.lift = step(obj(""), Letter::b(0, 1));
    EXPECT_FALSE(verify_universal(UniversalKind::Cocartesian, lift, 3));

    EXPECT_THROW(verify_universal(UniversalKind::Pushout, UniversalData{}, 3), Error);
}

TEST(Oracle, AuditPassesAndSerializes)
{
    AuditOptions o;
    o.max_m = 0;
    EXPECT_TRUE(audit(o).ok());

    o.max_m = 3;
    const AuditReport rep = audit(o);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.rules.size(), all_rules.size());
    const nlohmann::json j = nlohmann::json::parse(rep.to_json());
    EXPECT_EQ(j["max_size"], 3);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["rules"].size(), 11u);
    EXPECT_EQ(j["rules"][0]["rule"], "dd");
    EXPECT_GT(j["rules"][0]["instances"].get<long>(), 0);
    std::vector<std::string> names;
    for (const auto& s : j["sections"]) {
        names.push_back(s["name"]);
        EXPECT_EQ(s["failures"], 0);
    }
    EXPECT_EQ(names, (std::vector<std::string>{"relations", "factorization", "normal-form agreement",
                                                "adjunctions", "monoidal", "opfibration", "active-inert"}));
}

TEST(Oracle, AuditReportsInjectedFaults)
{
    AuditOptions o;
    o.max_m = 2;
    o.corrupt = {RuleId::sw};
    const AuditReport rep = audit(o);
    EXPECT_FALSE(rep.ok());
    for (const RuleReport& r : rep.rules) {
        EXPECT_EQ(r.failures > 0, r.rule == RuleId::sw) << to_string(r.rule);
    }
    EXPECT_GT(rep.sections.front().failures, 0);
    EXPECT_NE(rep.sections.front().first_counterexample.find("sw"), std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(rep.to_json());
    EXPECT_EQ(j["ok"], false);
    EXPECT_TRUE(j["rules"][10].contains("first_failure"));
}

TEST(Oracle, FactorizationCheck)
{
    const AuditSection s = check_factorization(3);
    EXPECT_EQ(s.checked, static_cast<long>(gen::all_homs(3).size()));
    EXPECT_EQ(s.failures, 0);
}
