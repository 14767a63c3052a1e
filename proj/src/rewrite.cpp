#include "fatdelta/rewrite.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/literals.hpp"

#include <functional>

namespace fatdelta {

namespace {

using Pred = std::function<bool(const std::vector<Letter>&)>;

Pred kinds_are(LetterKind a, LetterKind b)
{
    return [a, b](const std::vector<Letter>& r) {
        return r.size() == 2 && r[0].kind == a && r[1].kind == b;
    };
}

// Ranks of non-degenerate letters inside the mixed part of a word.
enum Rank
{
    BOld = 1,
    VOld = 2,
    Std = 3,
    BNew = 4,
    VNew = 5,
};

struct LetterInfo
{
    Rank rank = Std;
    int fibre = 0; ///< final fibre of the inserted vertex
};

class Normalizer
{
public:
    Normalizer(FatObject anchor, std::vector<Letter> letters, const NormalizeOptions& opts)
        : m_anchor(std::move(anchor))
        , m_letters(std::move(letters))
        , m_opts(opts)
    {
        if (m_opts.check_steps) {
            m_reference = eval_letters(m_anchor, m_letters);
        }
    }

    std::vector<Letter> run()
    {
        while (push_degenerate_left()) {
        }
        while (sort_degenerate()) {
        }
        while (fix_mixed()) {
        }
        return m_letters;
    }

    // Block split of a normalized word.
    NormalForm split() const
    {
        NormalForm nf;
        nf.anchor = m_anchor;
        const size_t start = d_prefix();
        nf.sigma.assign(m_letters.begin(), m_letters.begin() + static_cast<long>(start));
        const std::vector<LetterInfo> info = mixed_info(start);
        for (size_t k = start; k < m_letters.size(); ++k) {
            switch (info[k - start].rank) {
            case BOld: nf.phi.push_back(m_letters[k]); break;
            case VOld: nf.nu.push_back(m_letters[k]); break;
            case Std: nf.delta.push_back(m_letters[k]); break;
            case BNew: nf.psi.push_back(m_letters[k]); break;
            case VNew: nf.tau.push_back(m_letters[k]); break;
            }
        }
        return nf;
    }

private:
    [[noreturn]] void unhandled(size_t pos, const std::string& what) const
    {
        throw Error("normalize: " + what + " at position " + std::to_string(pos) + " of "
                    + format_object(m_anchor) + " | " + to_string(m_letters));
    }

    size_t d_prefix() const
    {
        size_t k = 0;
        while (k < m_letters.size() && m_letters[k].kind == LetterKind::D) {
            ++k;
        }
        return k;
    }

    // Applies the unique rewrite of the pair at pos allowed by the rule
    // selection and accepted by pred.
    void rewrite_pair(size_t pos, RuleId rule, bool forward, const Pred& pred)
    {
        if (++m_steps > m_opts.budget) {
            unhandled(pos, "rewrite budget exhausted");
        }
        const FatObject at = word_cod(m_anchor, {m_letters.begin(), m_letters.begin() + static_cast<long>(pos)});
        RewriteFilter filter;
        filter.rules = rule_bit(rule);
        filter.forward = forward;
        filter.backward = !forward;
        const Rewrite* chosen = nullptr;
        const std::vector<Rewrite> found = rewrites_at(at, m_letters, pos, filter);
        for (const Rewrite& rw : found) {
            if (rw.len != 2 || !pred(rw.replacement)) {
                continue;
            }
            if (chosen && chosen->replacement != rw.replacement) {
                unhandled(pos, std::string("ambiguous rewrite by ") + to_string(rule));
            }
            chosen = &rw;
        }
        if (!chosen) {
            unhandled(pos, std::string("no rewrite by ") + to_string(rule) + " for the pair "
                               + to_string(m_letters[pos]) + "," + to_string(m_letters[pos + 1]));
        }
        m_letters = apply_rewrite(m_letters, *chosen);
        if (m_opts.check_steps && eval_letters(m_anchor, m_letters) != *m_reference) {
            unhandled(pos, std::string("rewrite by ") + to_string(rule) + " changed the morphism");
        }
    }

    // Moves the first stray degenerated face one step to the left.
    bool push_degenerate_left()
    {
        for (size_t k = 1; k < m_letters.size(); ++k) {
            if (m_letters[k].kind != LetterKind::D || m_letters[k - 1].kind == LetterKind::D) {
                continue;
            }
            switch (m_letters[k - 1].kind) {
            case LetterKind::V:
                rewrite_pair(k - 1, RuleId::dv, false, kinds_are(LetterKind::D, LetterKind::V));
                break;
            case LetterKind::S:
                rewrite_pair(k - 1, RuleId::hd, true, [](const std::vector<Letter>& r) {
                    return (r.size() == 1 && r[0].kind == LetterKind::B)
                           || (r.size() == 2 && r[0].kind == LetterKind::D);
                });
                break;
            case LetterKind::B:
                rewrite_pair(k - 1, RuleId::sw, true, [](const std::vector<Letter>& r) {
                    return r.size() == 2 && r[0].kind == LetterKind::D;
                });
                break;
            case LetterKind::D: break;
            }
            return true;
        }
        return false;
    }

    bool sort_degenerate()
    {
        const size_t end = d_prefix();
        for (size_t k = 0; k + 1 < end; ++k) {
            if (m_letters[k].index > m_letters[k + 1].index) {
                rewrite_pair(k, RuleId::dd, false, kinds_are(LetterKind::D, LetterKind::D));
                return true;
            }
        }
        return false;
    }

    // Rank and final fibre of every letter from `start` on (no D letters there).
    std::vector<LetterInfo> mixed_info(size_t start) const
    {
        const std::vector<FatObject> objs = word_objects(m_anchor, m_letters);
        const size_t len = m_letters.size() - start;
        std::vector<int> pos(len);
        std::vector<bool> old_fibre(static_cast<size_t>(objs[start].n() + 1), true);
        for (size_t k = 0; k < len; ++k) {
            const Letter& l = m_letters[start + k];
            const int q = inserted_vertex(objs[start + k], l);
            for (size_t t = 0; t < k; ++t) {
                pos[t] += pos[t] >= q ? 1 : 0;
            }
            pos[k] = q;
            if (l.kind == LetterKind::S) {
                old_fibre.insert(old_fibre.begin() + l.index, false);
            }
        }
        const FatObject& last = objs.back();
        std::vector<LetterInfo> info(len);
        for (size_t k = 0; k < len; ++k) {
            const int fibre = last.eta()(pos[k]);
            const bool old = old_fibre[static_cast<size_t>(fibre)];
            switch (m_letters[start + k].kind) {
            case LetterKind::B: info[k].rank = old ? BOld : BNew; break;
            case LetterKind::V: info[k].rank = old ? VOld : VNew; break;
            default: info[k].rank = Std; break;
            }
            info[k].fibre = fibre;
        }
        return info;
    }

    // One repair step on the part after the degenerated faces.
    bool fix_mixed()
    {
        const size_t start = d_prefix();
        if (m_letters.size() - start < 1) {
            return false;
        }
        const std::vector<LetterInfo> info = mixed_info(start);

        // A start extension on a new fibre travels to the standard face that
        // created the fibre and is turned into an end extension there.
        for (size_t k = 0; k < info.size(); ++k) {
            const Letter& l = m_letters[start + k];
            if (info[k].rank != BNew || l.eps != 0) {
                continue;
            }
            if (k == 0) {
                unhandled(start, "extension on a new fibre before any standard face");
            }
            const size_t at = start + k;
            const Letter& prev = m_letters[at - 1];
            const LetterInfo& pinfo = info[k - 1];
            if (prev.kind == LetterKind::S && pinfo.fibre == info[k].fibre) {
                rewrite_pair(at - 1, RuleId::wd, true, [](const std::vector<Letter>& r) {
                    return r.size() == 2 && r[0].kind == LetterKind::S && r[1].kind == LetterKind::B
                           && r[1].eps == 1;
                });
            } else if (prev.kind == LetterKind::S) {
                rewrite_pair(at - 1, RuleId::wd, true, kinds_are(LetterKind::B, LetterKind::S));
            } else if (prev.kind == LetterKind::V) {
                rewrite_pair(at - 1, RuleId::vw, false, kinds_are(LetterKind::B, LetterKind::V));
            } else if (prev.eps == 0 && pinfo.fibre == info[k].fibre) {
                rewrite_pair(at - 1, RuleId::ww2, true, kinds_are(LetterKind::B, LetterKind::V));
            } else {
                swap_bordering(at - 1);
            }
            return true;
        }

        for (size_t k = 0; k + 1 < info.size(); ++k) {
            const size_t at = start + k;
            const Letter& a = m_letters[at];
            const Letter& b = m_letters[at + 1];
            const Rank ra = info[k].rank;
            const Rank rb = info[k + 1].rank;
            if (ra < rb) {
                continue;
            }
            if (ra > rb) {
                swap_mixed(at);
                return true;
            }
            switch (a.kind) {
            case LetterKind::B:
                if (std::pair(a.index, a.eps) == std::pair(b.index, b.eps)) {
                    rewrite_pair(at, RuleId::ww2, true, kinds_are(LetterKind::B, LetterKind::V));
                    return true;
                }
                if (std::pair(a.index, a.eps) > std::pair(b.index, b.eps)) {
                    swap_bordering(at);
                    return true;
                }
                break;
            case LetterKind::V:
                if (a.index >= b.index) {
                    rewrite_pair(at, RuleId::vv, true, kinds_are(LetterKind::V, LetterKind::V));
                    return true;
                }
                break;
            case LetterKind::S:
                if (a.index >= b.index) {
                    rewrite_pair(at, RuleId::hh, true, kinds_are(LetterKind::S, LetterKind::S));
                    return true;
                }
                break;
            case LetterKind::D: unhandled(at, "degenerated face inside the mixed part");
            }
        }
        return false;
    }

    void swap_bordering(size_t at)
    {
        const RuleId rule = m_letters[at].eps != m_letters[at + 1].eps ? RuleId::ww1 : RuleId::ww2;
        rewrite_pair(at, rule, true, kinds_are(LetterKind::B, LetterKind::B));
    }

    // Exchanges the pair at `at`, moving the second letter in front.
    void swap_mixed(size_t at)
    {
        const LetterKind a = m_letters[at].kind;
        const LetterKind b = m_letters[at + 1].kind;
        using K = LetterKind;
        if (a == K::S && b == K::B) {
            rewrite_pair(at, RuleId::wd, true, kinds_are(K::B, K::S));
        } else if (a == K::B && b == K::S) {
            rewrite_pair(at, RuleId::wd, false, kinds_are(K::S, K::B));
        } else if (a == K::S && b == K::V) {
            rewrite_pair(at, RuleId::hv, false, kinds_are(K::V, K::S));
        } else if (a == K::V && b == K::S) {
            rewrite_pair(at, RuleId::hv, true, kinds_are(K::S, K::V));
        } else if (a == K::V && b == K::B) {
            rewrite_pair(at, RuleId::vw, false, kinds_are(K::B, K::V));
        } else if (a == K::B && b == K::V) {
            rewrite_pair(at, RuleId::vw, true, kinds_are(K::V, K::B));
        } else if (a == K::B && b == K::B) {
            swap_bordering(at);
        } else if (a == K::V && b == K::V) {
            const bool forward = m_letters[at].index >= m_letters[at + 1].index;
            rewrite_pair(at, RuleId::vv, forward, kinds_are(K::V, K::V));
        } else {
            unhandled(at, "no exchange rule for the pair " + to_string(m_letters[at]) + ","
                              + to_string(m_letters[at + 1]));
        }
    }

    FatObject m_anchor;
    std::vector<Letter> m_letters;
    NormalizeOptions m_opts;
    std::optional<FatMorphism> m_reference;
    long m_steps = 0;
};

bool block_out_of_order(const Letter& a, const Letter& b)
{
    switch (a.kind) {
    case LetterKind::D: return a.index > b.index;
    case LetterKind::B: return std::pair(a.index, a.eps) > std::pair(b.index, b.eps);
    default: return a.index >= b.index;
    }
}

} // namespace

Word sort_block(const Word& w)
{
    for (const Letter& l : w.letters) {
        if (l.kind != w.letters.front().kind) {
            throw Error("sort_block: letters of different kinds");
        }
    }
    if (first_invalid(w.anchor, w.letters) >= 0) {
        throw Error("sort_block: word is ill typed");
    }
    std::vector<Letter> letters = w.letters;
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<FatObject> objs = word_objects(w.anchor, letters);
        for (size_t k = 0; k + 1 < letters.size(); ++k) {
            if (!block_out_of_order(letters[k], letters[k + 1])) {
                continue;
            }
            RewriteFilter filter;
            RuleId rule = RuleId::dd;
            switch (letters[k].kind) {
            case LetterKind::D: rule = RuleId::dd; filter.forward = false; break;
            case LetterKind::S: rule = RuleId::hh; filter.backward = false; break;
            case LetterKind::V: rule = RuleId::vv; filter.backward = false; break;
            case LetterKind::B:
                rule = letters[k].eps != letters[k + 1].eps ? RuleId::ww1 : RuleId::ww2;
                filter.backward = false;
                break;
            }
            filter.rules = rule_bit(rule);
            for (const Rewrite& rw : rewrites_at(objs[k], letters, k, filter)) {
                if (rw.len == 2 && rw.replacement[0].kind == letters[k].kind
                    && rw.replacement[1].kind == letters[k].kind) {
                    letters = apply_rewrite(letters, rw);
                    changed = true;
                    break;
                }
            }
            if (changed) {
                break;
            }
        }
    }
    return Word{w.anchor, std::move(letters)};
}

NormalForm normalize_append(const NormalForm& nf, const Letter& l, const NormalizeOptions& opts)
{
    std::vector<Letter> letters = nf.letters();
    letters.push_back(l);
    if (first_invalid(nf.anchor, letters) >= 0) {
        throw Error("normalize: letter " + to_string(l) + " cannot be applied after "
                    + to_string(Word{nf.anchor, nf.letters()}));
    }
    Normalizer n(nf.anchor, std::move(letters), opts);
    n.run();
    return n.split();
}

NormalForm normalize_word(const Word& w, const NormalizeOptions& opts)
{
    const int bad = first_invalid(w.anchor, w.letters);
    if (bad >= 0) {
        throw Error("normalize: letter " + std::to_string(bad) + " ("
                    + to_string(w.letters[static_cast<size_t>(bad)]) + ") of " + to_string(w)
                    + " cannot be applied");
    }
    NormalForm nf;
    nf.anchor = w.anchor;
    for (const Letter& l : w.letters) {
        nf = normalize_append(nf, l, opts);
    }
    return nf;
}

bool words_equal(const Word& w1, const Word& w2)
{
    if (w1.anchor != w2.anchor) {
        throw Error("words_equal: the words start at different objects");
    }
    const bool by_nf = normalize_word(w1) == normalize_word(w2);
    const bool by_eval = eval_word(w1) == eval_word(w2);
    if (by_nf != by_eval) {
        throw Error("words_equal: normal forms and composites disagree for " + to_string(w1)
                    + " and " + to_string(w2));
    }
    return by_nf;
}

} // namespace fatdelta
