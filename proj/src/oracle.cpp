#include "fatdelta/oracle.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/factorize.hpp"
#include "fatdelta/literals.hpp"
#include "fatdelta/rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace fatdelta {

namespace {

void monotone_rec(int m, int n, std::vector<int>& img, std::vector<MonotoneMap>& out)
{
    if (static_cast<int>(img.size()) == m + 1) {
        out.emplace_back(m, n, img);
        return;
    }
    const int lo = img.empty() ? 0 : img.back();
    for (int y = lo; y <= n; ++y) {
        img.push_back(y);
        monotone_rec(m, n, img, out);
        img.pop_back();
    }
}

class Section
{
public:
    explicit Section(std::string name) { m_s.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe)
    {
        ++m_s.checked;
        if (!ok) {
            if (m_s.failures++ == 0) {
                m_s.first_counterexample = describe();
            }
        }
    }
    AuditSection done() { return std::move(m_s); }

private:
    AuditSection m_s;
};

std::string morphism_text(const FatMorphism& f) { return format_morphism(f); }

void agreement_rec(Section& s, const FatMorphism& prefix_eval, const NormalForm& prefix_nf,
                   std::vector<Letter>& letters, int remaining)
{
    if (remaining == 0) {
        return;
    }
    for (const Letter& l : letters_at(prefix_eval.cod())) {
        letters.push_back(l);
        const FatMorphism f = compose(step(prefix_eval.cod(), l), prefix_eval);
        std::optional<NormalForm> nf;
        std::string err;
        try {
            nf = normalize_append(prefix_nf, l);
        } catch (const Error& e) {
            err = e.what();
        }
        const bool ok = nf && *nf == factor_full(f);
        s.check(ok, [&] {
            return to_string(Word{prefix_nf.anchor, letters}) + " "
                   + (nf ? to_string(*nf) : err);
        });
        if (nf) {
            agreement_rec(s, f, *nf, letters, remaining - 1);
        }
        letters.pop_back();
    }
}

AuditSection audit_agreement(int max_m, int max_word)
{
    Section s("normal-form agreement");
    for (const FatObject& anchor : enum_objects_upto(max_m)) {
        std::vector<Letter> letters;
        NormalForm nf;
        nf.anchor = anchor;
        agreement_rec(s, FatMorphism::identity(anchor), nf, letters, max_word);
    }
    return s.done();
}

AuditSection audit_adjunctions(int max_m)
{
    Section s("adjunctions");
    for (const FatObject& o : enum_objects_upto(max_m)) {
        const int m = o.m();
        const FatMorphism counit = flat_counit(o);
        const FatMorphism unit = sharp_unit(o);
        for (int k = 0; k <= max_m; ++k) {
            const HomSet from_flat = enum_hom(incl_flat(k), o);
            const std::vector<MonotoneMap> monos_in = enum_mono(k, m);
            s.check(from_flat.morphisms.size() == monos_in.size(), [&] {
                return "|Hom(flat(" + std::to_string(k) + "), " + format_object(o) + ")| = "
                       + std::to_string(from_flat.morphisms.size());
            });
            for (const FatMorphism& f : from_flat.morphisms) {
                s.check(compose(counit, incl_flat(f.top())) == f,
                        [&] { return "flat transpose of " + morphism_text(f); });
            }
            for (const MonotoneMap& t : monos_in) {
                s.check(compose(counit, incl_flat(t)).top() == t,
                        [&] { return "flat transpose of " + to_string(t); });
            }

            const HomSet to_sharp = enum_hom(o, incl_sharp(k));
            const std::vector<MonotoneMap> monos_out = enum_mono(m, k);
            s.check(to_sharp.morphisms.size() == monos_out.size(), [&] {
                return "|Hom(" + format_object(o) + ", sharp(" + std::to_string(k) + "))| = "
                       + std::to_string(to_sharp.morphisms.size());
            });
            for (const FatMorphism& f : to_sharp.morphisms) {
                s.check(compose(incl_sharp(f.top()), unit) == f,
                        [&] { return "sharp transpose of " + morphism_text(f); });
            }
            for (const MonotoneMap& t : monos_out) {
                s.check(compose(incl_sharp(t), unit).top() == t,
                        [&] { return "sharp transpose of " + to_string(t); });
            }
        }
        // triangle identities
        s.check(flat_counit(incl_flat(m)) == FatMorphism::identity(incl_flat(m)),
                [&] { return "flat triangle at " + std::to_string(m); });
        s.check(counit.top().is_identity(), [&] { return "flat triangle at " + format_object(o); });
        s.check(sharp_unit(incl_sharp(m)) == FatMorphism::identity(incl_sharp(m)),
                [&] { return "sharp triangle at " + std::to_string(m); });
        s.check(unit.top().is_identity(), [&] { return "sharp triangle at " + format_object(o); });
    }
    return s.done();
}

AuditSection audit_monoidal(int max_m)
{
    Section s("monoidal");
    const std::vector<FatObject> small = enum_objects_upto(std::min(max_m, 3));
    const FatObject unit = FatObject::empty();
    for (const FatObject& a : small) {
        s.check(sum(unit, a) == a && sum(a, unit) == a,
                [&] { return "unit law at " + format_object(a); });
        for (const FatObject& b : small) {
            for (const FatObject& c : small) {
                s.check(sum(sum(a, b), c) == sum(a, sum(b, c)), [&] {
                    return "associativity at " + format_object(a) + ", " + format_object(b) + ", "
                           + format_object(c);
                });
            }
        }
    }
    const std::vector<FatObject> objs = enum_objects_upto(max_m);
    for (const FatObject& a : objs) {
        for (const FatObject& b : objs) {
            s.check(marked_sum(a, b) == vee_obj(vee_obj(a, incl_sharp(1)), b)
                        && sum(a, b) == vee_obj(vee_obj(a, incl_flat(1)), b),
                    [&] { return "sum via vee at " + format_object(a) + ", " + format_object(b); });
        }
    }
    const FatObject x = FatObject::from_edges("-=");
    const FatObject y = FatObject::from_edges("=-");
    s.check(format_object(sum(x, y)) == "-=-=-", [] { return "sum display"; });
    s.check(format_object(vee_obj(x, y)) == "-==-", [] { return "vee display"; });
    s.check(format_object(marked_sum(x, y)) == "-===-", [] { return "marked sum display"; });
    return s.done();
}

AuditSection audit_opfibration(int max_m)
{
    Section s("opfibration");
    for (const FatObject& o : enum_objects_upto(max_m)) {
        for (int k = o.m(); k <= max_m; ++k) {
            for (const MonotoneMap& top : enum_mono(o.m(), k)) {
                const FatMorphism lift = cocartesian_lift(o, top);
                s.check(verify_cocartesian(lift, max_m),
                        [&] { return "lift of " + to_string(top) + " at " + format_object(o); });
            }
        }
    }
    return s.done();
}

AuditSection audit_active_inert(int max_m)
{
    Section s("active-inert");
    const std::vector<FatObject> objs = enum_objects_upto(max_m);
    for (const FatObject& a : objs) {
        for (const FatObject& b : objs) {
            for (const FatMorphism& f : enum_hom(a, b).morphisms) {
                const ActiveInertFat ai = active_inert_factor_fat(f);
                s.check(compose(ai.inert, ai.active) == f && is_active_fat(ai.active)
                            && is_inert_fat(ai.inert),
                        [&] { return morphism_text(f); });
            }
        }
    }
    return s.done();
}

} // namespace

std::vector<MonotoneMap> enum_monotone(int m, int n)
{
    std::vector<MonotoneMap> out;
    if (m < -1 || n < -1 || (n == -1 && m >= 0)) {
        return out;
    }
    std::vector<int> img;
    monotone_rec(m, n, img, out);
    return out;
}

std::vector<MonotoneMap> enum_epi(int m, int n)
{
    std::vector<MonotoneMap> out = enum_monotone(m, n);
    std::erase_if(out, [](const MonotoneMap& f) { return !f.is_epi(); });
    return out;
}

std::vector<MonotoneMap> enum_mono(int m, int n)
{
    std::vector<MonotoneMap> out = enum_monotone(m, n);
    std::erase_if(out, [](const MonotoneMap& f) { return !f.is_mono(); });
    return out;
}

std::vector<FatObject> enum_objects(int m)
{
    if (m < 0) {
        throw Error("enum_objects: m must be >= 0");
    }
    std::vector<FatObject> out;
    // image lists in lexicographic order: fewest fibres first within each prefix
    std::vector<MonotoneMap> epis;
    for (int n = 0; n <= m; ++n) {
        for (MonotoneMap& e : enum_epi(m, n)) {
            epis.push_back(std::move(e));
        }
    }
    std::sort(epis.begin(), epis.end(), [](const MonotoneMap& a, const MonotoneMap& b) {
        return a.images() < b.images();
    });
    for (MonotoneMap& e : epis) {
        out.emplace_back(std::move(e));
    }
    return out;
}

std::vector<FatObject> enum_objects_upto(int max_m)
{
    std::vector<FatObject> out;
    for (int m = 0; m <= max_m; ++m) {
        for (FatObject& o : enum_objects(m)) {
            out.push_back(std::move(o));
        }
    }
    return out;
}

HomSet enum_hom(const FatObject& a, const FatObject& b)
{
    HomSet hs{a, b, {}};
    for (const MonotoneMap& top : enum_mono(a.m(), b.m())) {
        std::vector<int> bot(static_cast<size_t>(a.n() + 1), -1);
        bool ok = true;
        for (int x = 0; x <= a.m() && ok; ++x) {
            int& slot = bot[static_cast<size_t>(a.eta()(x))];
            const int v = b.eta()(top(x));
            if (slot < 0) {
                slot = v;
            } else if (slot != v) {
                ok = false;
            }
        }
        if (ok) {
            hs.morphisms.emplace_back(a, b, top, MonotoneMap(a.n(), b.n(), std::move(bot)));
        }
    }
    return hs;
}

bool verify_pushout(const MonotoneMap& e, const MonotoneMap& a, const Pushout& po, int max_size)
{
    if (compose_maps(po.from_n, e) != compose_maps(po.from_k, a)) {
        return false;
    }
    for (int x = 0; x <= max_size; ++x) {
        const std::vector<MonotoneMap> mediators = enum_monotone(po.cod_size, x);
        for (const MonotoneMap& u : enum_monotone(e.cod_size(), x)) {
            for (const MonotoneMap& w : enum_monotone(a.cod_size(), x)) {
                if (compose_maps(u, e) != compose_maps(w, a)) {
                    continue;
                }
                const auto count = std::count_if(mediators.begin(), mediators.end(), [&](const MonotoneMap& h) {
                    return compose_maps(h, po.from_n) == u && compose_maps(h, po.from_k) == w;
                });
                if (count != 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool verify_pullback(const MonotoneMap& b, const MonotoneMap& k, const Pullback& pb, int max_size)
{
    if (compose_maps(k, pb.to_m) != compose_maps(b, pb.to_n)) {
        return false;
    }
    for (int y = 0; y <= max_size; ++y) {
        const std::vector<MonotoneMap> mediators = enum_monotone(y, pb.dom_size);
        for (const MonotoneMap& p : enum_monotone(y, k.dom_size())) {
            for (const MonotoneMap& q : enum_monotone(y, b.dom_size())) {
                if (compose_maps(k, p) != compose_maps(b, q)) {
                    continue;
                }
                const auto count = std::count_if(mediators.begin(), mediators.end(), [&](const MonotoneMap& h) {
                    return compose_maps(pb.to_m, h) == p && compose_maps(pb.to_n, h) == q;
                });
                if (count != 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool verify_cocartesian(const FatMorphism& lift, int max_m)
{
    const FatObject& o = lift.dom();
    const FatObject& c = lift.cod();
    for (const FatObject& target : enum_objects_upto(max_m)) {
        const HomSet from_c = enum_hom(c, target);
        for (const FatMorphism& h : enum_hom(o, target).morphisms) {
            for (const MonotoneMap& t : enum_mono(c.m(), target.m())) {
                if (compose_maps(t, lift.top()) != h.top()) {
                    continue;
                }
                const auto count = std::count_if(from_c.morphisms.begin(), from_c.morphisms.end(),
                                                 [&](const FatMorphism& g) {
                                                     return g.top() == t && compose(g, lift) == h;
                                                 });
                if (count != 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool verify_universal(UniversalKind kind, const UniversalData& data, int max_size)
{
    switch (kind) {
    case UniversalKind::Pushout:
        if (!data.pushout) {
            throw Error("verify_universal: pushout candidate missing");
        }
        return verify_pushout(data.first, data.second, *data.pushout, max_size);
    case UniversalKind::Pullback:
        if (!data.pullback) {
            throw Error("verify_universal: pullback candidate missing");
        }
        return verify_pullback(data.first, data.second, *data.pullback, max_size);
    case UniversalKind::Cocartesian:
        if (!data.lift) {
            throw Error("verify_universal: lift candidate missing");
        }
        return verify_cocartesian(*data.lift, max_size);
    }
    return false;
}

AuditSection check_factorization(int max_m)
{
    Section s("factorization");
    const std::vector<FatObject> objs = enum_objects_upto(max_m);
    for (const FatObject& a : objs) {
        for (const FatObject& b : objs) {
            for (const FatMorphism& f : enum_hom(a, b).morphisms) {
                const NormalForm nf = factor_full(f);
                const std::string discipline = check_block_discipline(nf);
                s.check(discipline.empty() && eval(nf) == f, [&] {
                    return morphism_text(f) + " -> " + to_string(nf) + " " + discipline;
                });
            }
        }
    }
    return s.done();
}

bool AuditReport::ok() const
{
    return std::all_of(sections.begin(), sections.end(), [](const AuditSection& s) { return s.failures == 0; })
           && std::all_of(rules.begin(), rules.end(), [](const RuleReport& r) { return r.failures == 0; });
}

std::string AuditReport::to_json() const
{
    nlohmann::ordered_json j;
    j["max_size"] = max_m;
    j["ok"] = ok();
    j["sections"] = nlohmann::ordered_json::array();
    for (const AuditSection& s : sections) {
        nlohmann::ordered_json e;
        e["name"] = s.name;
        e["checked"] = s.checked;
        e["failures"] = s.failures;
        if (s.failures) {
            e["first_counterexample"] = s.first_counterexample;
        }
        j["sections"].push_back(std::move(e));
    }
    j["rules"] = nlohmann::ordered_json::array();
    for (const RuleReport& r : rules) {
        nlohmann::ordered_json e;
        e["rule"] = to_string(r.rule);
        e["instances"] = r.instances;
        e["failures"] = r.failures;
        if (r.first_failure) {
            const Instance& inst = *r.first_failure;
            e["first_failure"] = {
                {"case", inst.rc->label},
                {"anchor", format_object(inst.anchor)},
                {"lhs", to_string(inst.lhs)},
                {"rhs", to_string(inst.rhs)},
            };
        }
        j["rules"].push_back(std::move(e));
    }
    return j.dump(2);
}

AuditReport audit(const AuditOptions& opts)
{
    AuditReport rep;
    rep.max_m = opts.max_m;
    if (opts.max_m < 0) {
        return rep;
    }
    rep.rules = check_all(opts.max_m, all_rules, opts.corrupt);
    AuditSection rel;
    rel.name = "relations";
    for (const RuleReport& r : rep.rules) {
        rel.checked += r.instances;
        rel.failures += r.failures;
        if (r.first_failure && rel.first_counterexample.empty()) {
            const Instance& inst = *r.first_failure;
            rel.first_counterexample = std::string(to_string(r.rule)) + " at \""
                                       + format_object(inst.anchor) + "\": " + to_string(inst.lhs)
                                       + " vs " + to_string(inst.rhs);
        }
    }
    rep.sections.push_back(std::move(rel));
    rep.sections.push_back(check_factorization(opts.max_m));
    rep.sections.push_back(audit_agreement(opts.max_m, opts.max_word));
    rep.sections.push_back(audit_adjunctions(opts.max_m));
    rep.sections.push_back(audit_monoidal(opts.max_m));
    rep.sections.push_back(audit_opfibration(opts.max_m));
    rep.sections.push_back(audit_active_inert(opts.max_m));
    return rep;
}

} // namespace fatdelta
