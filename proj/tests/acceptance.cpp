// Exhaustive acceptance checks with wall-clock limits. Prints one PASS/FAIL
// line per criterion; exits non-zero if any criterion fails or overruns.
// Usage: fatdelta_acceptance [criterion numbers...]

#include "fatdelta/faces.hpp"
#include "fatdelta/factorize.hpp"
#include "fatdelta/literals.hpp"
#include "fatdelta/oracle.hpp"
#include "fatdelta/relations.hpp"
#include "fatdelta/rewrite.hpp"

#include "support/generators.hpp"
#include "support/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace fatdelta;

namespace {

struct Outcome
{
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++checked;
        if (!ok && failed++ == 0) {
            first_failure = what();
        }
    }
};

struct Criterion
{
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

// Memoized brute-force hom sets.
class Homs
{
public:
    const std::vector<FatMorphism>& operator()(const FatObject& a, const FatObject& b)
    {
        auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, enum_hom(a, b).morphisms).first;
        }
        return it->second;
    }

private:
    std::map<std::pair<FatObject, FatObject>, std::vector<FatMorphism>> cache_;
};

std::vector<FatMorphism> homs_upto(int max_m, Homs& homs)
{
    std::vector<FatMorphism> out;
    const std::vector<FatObject> objs = enum_objects_upto(max_m);
    for (const FatObject& a : objs) {
        for (const FatObject& b : objs) {
            const std::vector<FatMorphism>& hs = homs(a, b);
            out.insert(out.end(), hs.begin(), hs.end());
        }
    }
    return out;
}

std::string show(const FatMorphism& f) { return format_morphism(f); }

// Class membership from the definitions, independent of class_of.
bool diagonal(const FatMorphism& f) { return f.top().is_identity(); }
bool vertical(const FatMorphism& f) { return f.bot().is_identity(); }
bool horizontal(const FatMorphism& f)
{
    if (!f.bot().is_mono()) {
        return false;
    }
    // pullback: the top image is the whole preimage of the bottom image
    const std::vector<int>& top = f.top().images();
    const std::vector<int>& bot = f.bot().images();
    for (int v = 0; v <= f.cod().m(); ++v) {
        const bool over_image = std::binary_search(bot.begin(), bot.end(), f.cod().eta()(v));
        const bool hit = std::binary_search(top.begin(), top.end(), v);
        if (over_image != hit) {
            return false;
        }
    }
    return true;
}

bool active_map(const MonotoneMap& f)
{
    return f.images().front() == 0 && f.images().back() == f.cod_size();
}

bool inert_map(const MonotoneMap& f)
{
    for (size_t i = 1; i < f.images().size(); ++i) {
        if (f.images()[i] != f.images()[i - 1] + 1) {
            return false;
        }
    }
    return true;
}

Outcome simplicial_identities()
{
    const gen::IdentityTally t = gen::simplicial_identities(6);
    return {t.checked, t.failed, t.first_failure};
}

Outcome object_census()
{
    Outcome o;
    for (int m = 0; m <= 10; ++m) {
        const std::vector<FatObject> objs = enum_objects(m);
        const std::set<FatObject> distinct(objs.begin(), objs.end());
        o.check(objs.size() == (size_t{1} << m) && distinct.size() == objs.size(),
                [&] { return "m=" + std::to_string(m) + " gives " + std::to_string(objs.size()); });
    }
    return o;
}

Outcome relation_soundness()
{
    Outcome o;
    for (const RuleReport& r : check_all(5)) {
        o.checked += r.instances;
        o.failed += r.failures;
        if (r.failures > 0 && o.first_failure.empty()) {
            o.first_failure = std::string(to_string(r.rule)) + " at " + format_object(r.first_failure->anchor);
        }
        if (r.instances == 0) {
            o.check(false, [&] { return std::string(to_string(r.rule)) + " has no instances"; });
        }
    }
    return o;
}

Outcome derived_rules()
{
    Outcome o;
    for (RuleId r : all_rules) {
        if (is_primary(r)) {
            continue;
        }
        for (const FatObject& a : enum_objects_upto(4)) {
            for (const Instance& inst : enumerate_instances(r, a)) {
                const size_t len = std::max(expand_bordering(inst.lhs).size(), expand_bordering(inst.rhs).size());
                o.check(derivable_by_primary(a, inst.lhs, inst.rhs, len),
                        [&] { return std::string(to_string(r)) + " " + to_string(Word{a, inst.lhs}); });
            }
        }
    }
    return o;
}

Outcome factorization_round_trip()
{
    const AuditSection s = check_factorization(5);
    return {s.checked, s.failures, s.first_counterexample};
}

// Depth-first over words with a stack of prefix morphisms and prefix normal
// forms, so each new letter costs one composition and one append.
Outcome normal_form_uniqueness()
{
    Outcome o;
    constexpr size_t max_len = 4;
    for (const FatObject& anchor : enum_objects_upto(4)) {
        std::vector<Letter> w;
        std::vector<FatObject> objs{anchor};
        std::vector<FatMorphism> evals{FatMorphism::identity(anchor)};
        NormalForm empty;
        empty.anchor = anchor;
        std::vector<NormalForm> nfs{empty};

        std::function<void()> visit = [&] {
            for (const Letter& l : letters_at(objs.back())) {
                const FatMorphism s = step(objs.back(), l);
                w.push_back(l);
                objs.push_back(s.cod());
                evals.push_back(compose(s, evals.back()));
                nfs.push_back(normalize_append(nfs.back(), l));

                const NormalForm& nf = nfs.back();
                o.check(nf == factor_full(evals.back()), [&] { return "agreement " + to_string(Word{anchor, w}); });

                // Rewrites inside a proper prefix p were checked when p was
                // visited, and the normal form is a left fold over letters, so
                // only windows ending at the last letter are new.
                std::vector<Rewrite> tail;
                for (size_t pos = w.size() >= 3 ? w.size() - 3 : 0; pos < w.size(); ++pos) {
                    for (Rewrite& rw : rewrites_at(objs[pos], w, pos)) {
                        if (rw.pos + rw.len == w.size()) {
                            tail.push_back(std::move(rw));
                        }
                    }
                }
                for (const Rewrite& rw : tail) {
                    NormalForm alt = nfs[rw.pos];
                    for (const Letter& r : rw.replacement) {
                        alt = normalize_append(alt, r);
                    }
                    for (size_t i = rw.pos + rw.len; i < w.size(); ++i) {
                        alt = normalize_append(alt, w[i]);
                    }
                    o.check(alt == nf, [&] {
                        return "stability " + to_string(Word{anchor, w}) + " via " + to_string(rw.rc->rule);
                    });
                }

                if (w.size() < max_len) {
                    visit();
                }
                w.pop_back();
                objs.pop_back();
                evals.pop_back();
                nfs.pop_back();
            }
        };
        visit();
    }
    return o;
}

Outcome ternary_uniqueness()
{
    Outcome o;
    Homs homs;
    const std::vector<FatObject> objs = enum_objects_upto(4);
    for (const FatMorphism& f : homs_upto(4, homs)) {
        const Ternary t = ternary_factor(f);
        o.check(compose(t.h, compose(t.v, t.d)) == f, [&] { return "recompose " + show(f); });
        o.check(diagonal(t.d) && vertical(t.v) && horizontal(t.h), [&] { return "classes " + show(f); });
        o.check((class_of(t.d) & Diagonal) && (class_of(t.v) & Vertical) && (class_of(t.h) & Horizontal),
                [&] { return "class_of " + show(f); });
        int found = 0;
        for (const FatObject& x : objs) {
            for (const FatMorphism& d : homs(f.dom(), x)) {
                if (!diagonal(d)) {
                    continue;
                }
                for (const FatObject& y : objs) {
                    for (const FatMorphism& v : homs(x, y)) {
                        if (!vertical(v)) {
                            continue;
                        }
                        const FatMorphism vd = compose(v, d);
                        for (const FatMorphism& h : homs(y, f.cod())) {
                            found += horizontal(h) && compose(h, vd) == f;
                        }
                    }
                }
            }
        }
        o.check(found == 1, [&] { return std::to_string(found) + " triples for " + show(f); });
    }
    return o;
}

Outcome adjunctions()
{
    Outcome o;
    Homs homs;
    for (const FatObject& eta : enum_objects_upto(4)) {
        const int m = eta.m();
        const FatMorphism counit = flat_counit(eta);
        const FatMorphism unit = sharp_unit(eta);
        for (int k = 0; k <= 4; ++k) {
            const std::vector<FatMorphism>& from_flat = homs(incl_flat(k), eta);
            const std::vector<MonotoneMap> into = enum_mono(k, m);
            std::set<FatMorphism> hit;
            for (const MonotoneMap& t : into) {
                hit.insert(compose(counit, incl_flat(t)));
            }
            o.check(from_flat.size() == into.size()
                        && hit == std::set<FatMorphism>(from_flat.begin(), from_flat.end()),
                    [&] { return "flat " + format_object(eta) + " k=" + std::to_string(k); });

            const std::vector<FatMorphism>& to_sharp = homs(eta, incl_sharp(k));
            const std::vector<MonotoneMap> out = enum_mono(m, k);
            hit.clear();
            for (const MonotoneMap& t : out) {
                hit.insert(compose(incl_sharp(t), unit));
            }
            o.check(to_sharp.size() == out.size()
                        && hit == std::set<FatMorphism>(to_sharp.begin(), to_sharp.end()),
                    [&] { return "sharp " + format_object(eta) + " k=" + std::to_string(k); });
        }
        // triangles: the projection of the counit and unit is the identity
        o.check(counit.top().is_identity() && unit.top().is_identity(),
                [&] { return "triangle at " + format_object(eta); });
    }
    for (int k = 0; k <= 4; ++k) {
        o.check(flat_counit(incl_flat(k)) == FatMorphism::identity(incl_flat(k)),
                [&] { return "flat triangle k=" + std::to_string(k); });
        o.check(sharp_unit(incl_sharp(k)) == FatMorphism::identity(incl_sharp(k)),
                [&] { return "sharp triangle k=" + std::to_string(k); });
    }
    return o;
}

Outcome opfibration()
{
    Outcome o;
    for (const FatObject& eta : enum_objects_upto(4)) {
        for (int k = eta.m(); k <= 4; ++k) {
            for (const MonotoneMap& t : enum_mono(eta.m(), k)) {
                const FatMorphism lift = cocartesian_lift(eta, t);
                o.check(lift.dom() == eta && lift.top() == t && verify_cocartesian(lift, 4),
                        [&] { return format_object(eta) + " along " + to_string(t); });
            }
        }
    }
    return o;
}

Outcome monoidal()
{
    Outcome o;
    std::vector<FatObject> objs = enum_objects_upto(3);
    const FatObject unit = FatObject::empty();
    objs.push_back(unit);
    for (const FatObject& a : objs) {
        o.check(sum(unit, a) == a && sum(a, unit) == a, [&] { return "unit " + format_object(a); });
        for (const FatObject& b : objs) {
            for (const FatObject& c : objs) {
                o.check(sum(sum(a, b), c) == sum(a, sum(b, c)), [&] {
                    return "assoc " + format_object(a) + " " + format_object(b) + " " + format_object(c);
                });
            }
        }
    }
    for (const FatObject& a : enum_objects_upto(4)) {
        for (const FatObject& b : enum_objects_upto(4)) {
            o.check(marked_sum(a, b) == vee_obj(vee_obj(a, incl_sharp(1)), b),
                    [&] { return "marked sum " + format_object(a) + " " + format_object(b); });
            o.check(sum(a, b) == vee_obj(vee_obj(a, incl_flat(1)), b),
                    [&] { return "sum " + format_object(a) + " " + format_object(b); });
        }
    }
    const FatObject x = FatObject::from_edges("-=");
    const FatObject y = FatObject::from_edges("=-");
    o.check(sum(x, y).edges() == "-=-=-", [&] { return "sum example " + sum(x, y).edges(); });
    o.check(vee_obj(x, y).edges() == "-==-", [&] { return "vee example " + vee_obj(x, y).edges(); });
    o.check(marked_sum(x, y).edges() == "-===-", [&] { return "marked example " + marked_sum(x, y).edges(); });
    return o;
}

Outcome universal_properties()
{
    Outcome o;
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (int k = 0; k <= 4; ++k) {
                for (const MonotoneMap& e : enum_epi(m, n)) {
                    for (const MonotoneMap& a : enum_mono(m, k)) {
                        o.check(verify_pushout(e, a, pushout_along_epi(e, a), 5),
                                [&] { return "pushout " + to_string(e) + " " + to_string(a); });
                    }
                }
                // cospan [m] >-> [n] <<- [k]
                for (const MonotoneMap& b : enum_mono(m, n)) {
                    for (const MonotoneMap& q : enum_epi(k, n)) {
                        o.check(verify_pullback(b, q, pullback_along_mono(b, q), 5),
                                [&] { return "pullback " + to_string(b) + " " + to_string(q); });
                    }
                }
            }
        }
    }
    // factorizations of monotone maps up to size 5; brute-force uniqueness up to size 4
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            for (const MonotoneMap& f : enum_monotone(m, n)) {
                const ActiveInert ai = active_inert_factor(f);
                o.check(compose_maps(ai.inert, ai.active) == f && active_map(ai.active) && inert_map(ai.inert),
                        [&] { return "active-inert " + to_string(f); });
                const EpiMono em = epi_mono_factor(f);
                o.check(compose_maps(em.mono, em.epi) == f && em.epi.is_epi() && em.mono.is_mono(),
                        [&] { return "epi-mono " + to_string(f); });
                if (m > 4 || n > 4) {
                    continue;
                }
                int active_inert = 0;
                int epi_mono = 0;
                for (int j = 0; j <= std::max(m, n); ++j) {
                    for (const MonotoneMap& a : enum_monotone(m, j)) {
                        for (const MonotoneMap& i : enum_monotone(j, n)) {
                            if (compose_maps(i, a) != f) {
                                continue;
                            }
                            active_inert += active_map(a) && inert_map(i);
                            epi_mono += a.is_epi() && i.is_mono();
                        }
                    }
                }
                o.check(active_inert == 1 && epi_mono == 1, [&] { return "uniqueness " + to_string(f); });
            }
        }
    }
    // fat active-inert factorization
    Homs homs;
    const std::vector<FatObject> objs = enum_objects_upto(4);
    for (const FatMorphism& f : homs_upto(4, homs)) {
        const ActiveInertFat ai = active_inert_factor_fat(f);
        o.check(compose(ai.inert, ai.active) == f && is_active_fat(ai.active) && is_inert_fat(ai.inert),
                [&] { return "fat active-inert " + show(f); });
        int found = 0;
        for (const FatObject& x : objs) {
            for (const FatMorphism& a : homs(f.dom(), x)) {
                if (!is_active_fat(a)) {
                    continue;
                }
                for (const FatMorphism& i : homs(x, f.cod())) {
                    found += compose(i, a) == f && is_inert_fat(i);
                }
            }
        }
        o.check(found == 1, [&] { return std::to_string(found) + " fat active-inert pairs for " + show(f); });
    }
    return o;
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {1, "simplicial identities, m <= 6", 1, simplicial_identities},
        {2, "object census 2^m, m <= 10", 1, object_census},
        {3, "relations hold on all anchors m <= 5", 60, relation_soundness},
        {4, "derived rules from primary rules, m <= 4", 60, derived_rules},
        {5, "factorization round trip, m <= 5", 120, factorization_round_trip},
        {6, "normal form agreement and rewrite stability, words <= 4, m <= 4", 120, normal_form_uniqueness},
        {7, "ternary factorization unique, m <= 4", 60, ternary_uniqueness},
        {8, "adjunction hom counts and triangles, m, k <= 4", 10, adjunctions},
        {9, "cocartesian lifts, m <= 4", 30, opfibration},
        {10, "monoidal laws and sum strings", 5, monoidal},
        {11, "pushouts, pullbacks, active-inert, sizes <= 4 (5)", 30, universal_properties},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() && !selected.count(c.id)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        std::string error;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool ok = error.empty() && out.failed == 0 && out.checked > 0 && in_time;
        failures += !ok;
        std::printf("%s %2d  %-66s %9ld checks  %8.3f s / %g s", ok ? "PASS" : "FAIL", c.id, c.title,
                    out.checked, secs, c.limit_s);
        if (!error.empty()) {
            std::printf("  error: %s", error.c_str());
        } else if (out.failed > 0) {
            std::printf("  %ld failures, first: %s", out.failed, out.first_failure.c_str());
        } else if (!in_time) {
            std::printf("  over time limit");
        }
        std::printf("\n");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
