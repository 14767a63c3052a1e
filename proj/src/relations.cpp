#include "fatdelta/relations.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fatdelta {

namespace {

constexpr IndexExpr ix(IndexExpr::Base base, int c = 0, int ce = 0) { return {base, c, ce}; }
constexpr EpsExpr E0{0, 0};
constexpr EpsExpr E1{1, 0};
constexpr EpsExpr Ee{0, 1};
constexpr EpsExpr E1me{1, -1};

constexpr auto I = IndexExpr::I;
constexpr auto J = IndexExpr::J;
constexpr auto Bv = IndexExpr::Bv;

TemplateLetter D(IndexExpr x) { return {LetterKind::D, x, E0}; }
TemplateLetter S(IndexExpr x) { return {LetterKind::S, x, E0}; }
TemplateLetter V(IndexExpr x) { return {LetterKind::V, x, E0}; }
TemplateLetter B(IndexExpr x, EpsExpr e) { return {LetterKind::B, x, e}; }

// Vertex inserted by the first letter of the left-hand side, in its codomain.
int lhs_bv(const CaseContext& c) { return inserted_vertex(c.anchor, c.lhs[0]); }

// Vertex inserted by the second letter of the left-hand side.
int lhs_second_bv(const CaseContext& c)
{
    return inserted_vertex(step_object(c.anchor, c.lhs[0]), c.lhs[1]);
}

bool i_le_j(const CaseContext& c) { return c.a.i <= c.a.j; }
bool i_lt_j(const CaseContext& c) { return c.a.i < c.a.j; }
bool i_gt_j(const CaseContext& c) { return c.a.i > c.a.j; }
bool i_eq_j(const CaseContext& c) { return c.a.i == c.a.j; }
bool i_ne_j(const CaseContext& c) { return c.a.i != c.a.j; }
bool always(const CaseContext&) { return true; }

bool splits_new_edge(const CaseContext& c)
{
    return c.a.i + 1 <= c.anchor.n() && c.a.j == c.anchor.ip(c.a.i + 1);
}

std::vector<RuleCase> build_cases()
{
    std::vector<RuleCase> out;
    auto add = [&](RuleId r, std::string label, std::vector<TemplateLetter> lhs,
                   std::vector<TemplateLetter> rhs, CaseCondition cond) {
        RuleCase rc{r, std::move(label), std::move(lhs), std::move(rhs), cond};
        for (const auto* side : {&rc.lhs, &rc.rhs}) {
            for (const TemplateLetter& t : *side) {
                rc.uses_i |= t.index.base == I;
                rc.uses_j |= t.index.base == J;
                rc.uses_e |= t.index.ce != 0 || t.eps.ce != 0;
            }
        }
        out.push_back(std::move(rc));
    };

    add(RuleId::dd, "i<=j", {D(ix(I)), D(ix(J))}, {D(ix(J, 1)), D(ix(I))}, i_le_j);
    add(RuleId::hh, "i<=j", {S(ix(J)), S(ix(I))}, {S(ix(I)), S(ix(J, 1))}, i_le_j);
    add(RuleId::vv, "i<=j", {V(ix(J)), V(ix(I))}, {V(ix(I)), V(ix(J, 1))}, i_le_j);
    add(RuleId::hv, "bv<j", {V(ix(J)), S(ix(I))}, {S(ix(I)), V(ix(J, 1))},
        [](const CaseContext& c) { return lhs_second_bv(c) < c.a.j; });
    add(RuleId::hv, "j<bv", {V(ix(J)), S(ix(I))}, {S(ix(I)), V(ix(J))},
        [](const CaseContext& c) { return c.a.j < lhs_second_bv(c); });
    add(RuleId::dv, "j=ip", {D(ix(I)), V(ix(J))}, {B(ix(I, 1, -1), Ee), D(ix(I))}, splits_new_edge);
    add(RuleId::dv, "j!=ip", {D(ix(I)), V(ix(J))}, {V(ix(J)), D(ix(I))},
        [](const CaseContext& c) { return !splits_new_edge(c); });
    add(RuleId::hd, "i<j", {S(ix(I)), D(ix(J))}, {D(ix(J, -1)), S(ix(I))}, i_lt_j);
    add(RuleId::hd, "i=j+e", {S(ix(I)), D(ix(J))}, {B(ix(J), Ee)},
        [](const CaseContext& c) { return c.a.i == c.a.j + c.a.e; });
    add(RuleId::hd, "j+1<i", {S(ix(I)), D(ix(J))}, {D(ix(J)), S(ix(I, -1))},
        [](const CaseContext& c) { return c.a.j + 1 < c.a.i; });

    add(RuleId::ww1, "", {B(ix(I), E1me), B(ix(J), Ee)}, {B(ix(J), Ee), B(ix(I), E1me)}, always);
    add(RuleId::ww2, "i!=j", {B(ix(I), Ee), B(ix(J), Ee)}, {B(ix(J), Ee), B(ix(I), Ee)}, i_ne_j);
    add(RuleId::ww2, "i=j", {B(ix(I), Ee), B(ix(J), Ee)}, {B(ix(I), Ee), V(ix(Bv, 1, -1))}, i_eq_j);
    add(RuleId::wd, "i>j", {S(ix(I)), B(ix(J), Ee)}, {B(ix(J), Ee), S(ix(I))}, i_gt_j);
    add(RuleId::wd, "i=j", {S(ix(I)), B(ix(J), Ee)}, {S(ix(I)), B(ix(J), E1me)}, i_eq_j);
    add(RuleId::wd, "i<j", {S(ix(I)), B(ix(J), Ee)}, {B(ix(J, -1), Ee), S(ix(I))}, i_lt_j);
    add(RuleId::vw, "j<bv+1-e", {B(ix(I), Ee), V(ix(J))}, {V(ix(J)), B(ix(I), Ee)},
        [](const CaseContext& c) { return c.a.j < lhs_bv(c) + 1 - c.a.e; });
    add(RuleId::vw, "j=bv+1-e", {B(ix(I), Ee), V(ix(J))}, {B(ix(I), Ee), B(ix(I), Ee)},
        [](const CaseContext& c) { return c.a.j == lhs_bv(c) + 1 - c.a.e; });
    add(RuleId::vw, "j>bv+1-e", {B(ix(I), Ee), V(ix(J))}, {V(ix(J, -1)), B(ix(I), Ee)},
        [](const CaseContext& c) { return c.a.j > lhs_bv(c) + 1 - c.a.e; });
    add(RuleId::sw, "j>i-1+e", {B(ix(I), Ee), D(ix(J))}, {D(ix(J)), B(ix(I), Ee)},
        [](const CaseContext& c) { return c.a.j > c.a.i - 1 + c.a.e; });
    add(RuleId::sw, "j=i-1+e (v)", {B(ix(I), Ee), D(ix(J))}, {D(ix(J)), V(ix(Bv))},
        [](const CaseContext& c) { return c.a.j == c.a.i - 1 + c.a.e; });
    add(RuleId::sw, "j=i-1+e (b)", {B(ix(I), Ee), D(ix(J))}, {B(ix(I, -1, 2), E1me), D(ix(J))},
        [](const CaseContext& c) { return c.a.j == c.a.i - 1 + c.a.e; });
    add(RuleId::sw, "j<i-1+e", {B(ix(I), Ee), D(ix(J))}, {D(ix(J)), B(ix(I, -1), Ee)},
        [](const CaseContext& c) { return c.a.j < c.a.i - 1 + c.a.e; });
    return out;
}

std::vector<TemplateLetter> expand_template(const std::vector<TemplateLetter>& side)
{
    std::vector<TemplateLetter> out;
    for (const TemplateLetter& t : side) {
        if (t.kind != LetterKind::B) {
            out.push_back(t);
            continue;
        }
        out.push_back(S(ix(t.index.base, t.index.c + t.eps.c, t.index.ce + t.eps.ce)));
        out.push_back(D(t.index));
    }
    return out;
}

// The primary cases with b letters written as (s, d). The definitional case
// of hd becomes trivial in this form and is dropped.
std::vector<RuleCase> build_expanded_cases()
{
    std::vector<RuleCase> out;
    for (const RuleCase& rc : rule_cases()) {
        if (!is_primary(rc.rule) || (rc.rule == RuleId::hd && rc.rhs.size() == 1)) {
            continue;
        }
        RuleCase e = rc;
        e.lhs = expand_template(rc.lhs);
        e.rhs = expand_template(rc.rhs);
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<RuleCase>& expanded_cases()
{
    static const std::vector<RuleCase> cases = build_expanded_cases();
    return cases;
}

int eval_index(const IndexExpr& x, const Assignment& a, int bv)
{
    const int base = x.base == I ? a.i : x.base == J ? a.j : bv;
    return base + x.c + x.ce * a.e;
}

// Builds a template side; nullopt if an index is negative.
std::optional<std::vector<Letter>> build_side(const std::vector<TemplateLetter>& side,
                                              const Assignment& a, int bv)
{
    std::vector<Letter> out;
    out.reserve(side.size());
    for (const TemplateLetter& t : side) {
        const int idx = eval_index(t.index, a, bv);
        const int eps = t.eps.c + t.eps.ce * a.e;
        if (idx < 0 || eps < 0 || eps > 1) {
            return std::nullopt;
        }
        out.push_back({t.kind, idx, t.kind == LetterKind::B ? eps : 0});
    }
    return out;
}

// Candidate assignments for matching a template side against concrete letters.
std::vector<Assignment> solve(const RuleCase& rc, const std::vector<TemplateLetter>& side,
                              std::span<const Letter> seg, int range)
{
    std::optional<int> vi = rc.uses_i ? std::nullopt : std::optional<int>(0);
    std::optional<int> vj = rc.uses_j ? std::nullopt : std::optional<int>(0);
    std::optional<int> ve = rc.uses_e ? std::nullopt : std::optional<int>(0);
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t k = 0; k < side.size(); ++k) {
            const TemplateLetter& t = side[k];
            const Letter& x = seg[k];
            if (t.kind == LetterKind::B && t.eps.ce != 0 && !ve) {
                const int num = x.eps - t.eps.c;
                if (num % t.eps.ce != 0) {
                    return {};
                }
                ve = num / t.eps.ce;
            }
            if (t.index.base == Bv) {
                continue;
            }
            std::optional<int>& var = t.index.base == I ? vi : vj;
            if (t.index.ce == 0) {
                if (!var) {
                    var = x.index - t.index.c;
                }
            } else if (ve && !var) {
                var = x.index - t.index.c - t.index.ce * *ve;
            } else if (var && !ve) {
                const int num = x.index - *var - t.index.c;
                if (num % t.index.ce != 0) {
                    return {};
                }
                ve = num / t.index.ce;
            }
        }
    }
    if (ve && (*ve < 0 || *ve > 1)) {
        return {};
    }
    std::vector<Assignment> out;
    const int ilo = vi ? *vi : 0, ihi = vi ? *vi : range;
    const int jlo = vj ? *vj : 0, jhi = vj ? *vj : range;
    const int elo = ve ? *ve : 0, ehi = ve ? *ve : 1;
    for (int i = ilo; i <= ihi; ++i) {
        for (int j = jlo; j <= jhi; ++j) {
            for (int e = elo; e <= ehi; ++e) {
                out.push_back({i, j, e});
            }
        }
    }
    return out;
}

bool kinds_match(const std::vector<TemplateLetter>& side, std::span<const Letter> seg)
{
    for (size_t k = 0; k < side.size(); ++k) {
        if (side[k].kind != seg[k].kind) {
            return false;
        }
    }
    return true;
}

void scan_cases(const std::vector<RuleCase>& cases, const FatObject& at,
                std::span<const Letter> letters, size_t pos, const RewriteFilter& filter,
                std::vector<Rewrite>& out)
{
    const int range = at.m() + 4;
    for (const RuleCase& rc : cases) {
        if (!(filter.rules & rule_bit(rc.rule))) {
            continue;
        }
        for (int dir = 0; dir < 2; ++dir) {
            const bool forward = dir == 0;
            if ((forward && !filter.forward) || (!forward && !filter.backward)) {
                continue;
            }
            const std::vector<TemplateLetter>& side = forward ? rc.lhs : rc.rhs;
            if (pos + side.size() > letters.size()) {
                continue;
            }
            const std::span<const Letter> seg = letters.subspan(pos, side.size());
            if (!kinds_match(side, seg)) {
                continue;
            }
            for (const Assignment& a : solve(rc, side, seg, range)) {
                std::optional<Instance> inst = instantiate(rc, at, a);
                if (!inst) {
                    continue;
                }
                const std::vector<Letter>& matched = forward ? inst->lhs : inst->rhs;
                if (!std::equal(matched.begin(), matched.end(), seg.begin(), seg.end())) {
                    continue;
                }
                const std::vector<Letter>& repl = forward ? inst->rhs : inst->lhs;
                const bool dup = std::any_of(out.begin(), out.end(), [&](const Rewrite& r) {
                    return r.rc == &rc && r.forward == forward && r.pos == pos
                           && r.replacement == repl;
                });
                if (!dup) {
                    out.push_back({&rc, forward, a, pos, side.size(), repl});
                }
            }
        }
    }
}

} // namespace

const char* to_string(RuleId r)
{
    switch (r) {
    case RuleId::dd: return "dd";
    case RuleId::hh: return "hh";
    case RuleId::vv: return "vv";
    case RuleId::hv: return "hv";
    case RuleId::dv: return "dv";
    case RuleId::hd: return "hd";
    case RuleId::ww1: return "ww1";
    case RuleId::ww2: return "ww2";
    case RuleId::wd: return "wd";
    case RuleId::vw: return "vw";
    case RuleId::sw: return "sw";
    }
    return "?";
}

std::optional<RuleId> parse_rule_id(std::string_view name)
{
    for (RuleId r : all_rules) {
        if (name == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

bool is_primary(RuleId r)
{
    switch (r) {
    case RuleId::dd:
    case RuleId::hh:
    case RuleId::vv:
    case RuleId::hv:
    case RuleId::dv:
    case RuleId::hd: return true;
    default: return false;
    }
}

const std::vector<RuleCase>& rule_cases()
{
    static const std::vector<RuleCase> cases = build_cases();
    return cases;
}

std::vector<const RuleCase*> cases_of(RuleId r)
{
    std::vector<const RuleCase*> out;
    for (const RuleCase& rc : rule_cases()) {
        if (rc.rule == r) {
            out.push_back(&rc);
        }
    }
    return out;
}

std::optional<Instance> instantiate(const RuleCase& rc, const FatObject& anchor, const Assignment& a)
{
    auto lhs = build_side(rc.lhs, a, 0);
    if (!lhs || first_invalid(anchor, *lhs) >= 0) {
        return std::nullopt;
    }
    const int bv = inserted_vertex(anchor, lhs->front());
    auto rhs = build_side(rc.rhs, a, bv);
    if (!rhs || first_invalid(anchor, *rhs) >= 0) {
        return std::nullopt;
    }
    const CaseContext ctx{anchor, a, *lhs};
    if (!rc.condition(ctx)) {
        return std::nullopt;
    }
    return Instance{&rc, anchor, a, std::move(*lhs), std::move(*rhs)};
}

bool check_rule(RuleId r, const FatObject& anchor, const Assignment& a)
{
    bool any = false;
    for (const RuleCase* rc : cases_of(r)) {
        std::optional<Instance> inst = instantiate(*rc, anchor, a);
        if (!inst) {
            continue;
        }
        any = true;
        if (eval_letters(anchor, inst->lhs) != eval_letters(anchor, inst->rhs)) {
            return false;
        }
    }
    if (!any) {
        throw Error(std::string("check_rule: no valid instance of ") + to_string(r)
                    + " for this anchor and assignment");
    }
    return true;
}

std::vector<Instance> enumerate_instances(RuleId r, const FatObject& anchor)
{
    std::vector<Instance> out;
    const int range = anchor.m() + 4;
    for (const RuleCase* rc : cases_of(r)) {
        for (int i = 0; i <= (rc->uses_i ? range : 0); ++i) {
            for (int j = 0; j <= (rc->uses_j ? range : 0); ++j) {
                for (int e = 0; e <= (rc->uses_e ? 1 : 0); ++e) {
                    std::optional<Instance> inst = instantiate(*rc, anchor, {i, j, e});
                    if (!inst) {
                        continue;
                    }
                    const bool dup = std::any_of(out.begin(), out.end(), [&](const Instance& x) {
                        return x.rc == inst->rc && x.lhs == inst->lhs && x.rhs == inst->rhs;
                    });
                    if (!dup) {
                        out.push_back(std::move(*inst));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<RuleReport> check_all(int max_m, std::span<const RuleId> rules,
                                  std::span<const RuleId> corrupt)
{
    std::vector<RuleReport> reports;
    for (RuleId r : rules) {
        RuleReport rep;
        rep.rule = r;
        const bool corrupted = std::find(corrupt.begin(), corrupt.end(), r) != corrupt.end();
        for (int m = 0; m <= max_m; ++m) {
            for (const FatObject& anchor : enum_objects(m)) {
                for (Instance& inst : enumerate_instances(r, anchor)) {
                    ++rep.instances;
                    std::vector<Letter> rhs = inst.rhs;
                    if (corrupted) {
                        ++rhs.back().index;
                    }
                    const bool ok = first_invalid(anchor, rhs) < 0
                                    && eval_letters(anchor, inst.lhs) == eval_letters(anchor, rhs);
                    if (!ok) {
                        if (!rep.first_failure) {
                            inst.rhs = rhs;
                            rep.first_failure = std::move(inst);
                        }
                        ++rep.failures;
                    }
                }
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<Rewrite> rewrites_at(const FatObject& at, std::span<const Letter> letters, size_t pos,
                                 const RewriteFilter& filter)
{
    std::vector<Rewrite> out;
    scan_cases(filter.expanded_primary ? expanded_cases() : rule_cases(), at, letters, pos, filter,
               out);
    return out;
}

std::vector<Rewrite> all_rewrites(const Word& w, const RewriteFilter& filter)
{
    std::vector<Rewrite> out;
    const std::vector<FatObject> objs = word_objects(w.anchor, w.letters);
    for (size_t pos = 0; pos < w.letters.size(); ++pos) {
        std::vector<Rewrite> here = rewrites_at(objs[pos], w.letters, pos, filter);
        out.insert(out.end(), std::make_move_iterator(here.begin()),
                   std::make_move_iterator(here.end()));
    }
    return out;
}

std::vector<Letter> apply_rewrite(std::span<const Letter> letters, const Rewrite& rw)
{
    std::vector<Letter> out(letters.begin(), letters.begin() + static_cast<long>(rw.pos));
    out.insert(out.end(), rw.replacement.begin(), rw.replacement.end());
    out.insert(out.end(), letters.begin() + static_cast<long>(rw.pos + rw.len), letters.end());
    return out;
}

std::vector<Letter> expand_bordering(std::span<const Letter> letters)
{
    std::vector<Letter> out;
    for (const Letter& l : letters) {
        if (l.kind == LetterKind::B) {
            out.push_back(Letter::s(l.index + l.eps));
            out.push_back(Letter::d(l.index));
        } else {
            out.push_back(l);
        }
    }
    return out;
}

bool derivable_by_primary(const FatObject& anchor, const std::vector<Letter>& from,
                          const std::vector<Letter>& to, size_t max_len)
{
    const std::vector<Letter> start = expand_bordering(from);
    const std::vector<Letter> goal = expand_bordering(to);
    RewriteFilter filter;
    filter.expanded_primary = true;
    std::set<std::vector<Letter>> seen{start};
    std::deque<std::vector<Letter>> queue{start};
    while (!queue.empty()) {
        std::vector<Letter> w = std::move(queue.front());
        queue.pop_front();
        if (w == goal) {
            return true;
        }
        for (const Rewrite& rw : all_rewrites(Word{anchor, w}, filter)) {
            std::vector<Letter> next = apply_rewrite(w, rw);
            if (next.size() <= max_len && seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

} // namespace fatdelta
