#pragma once

#include "fatdelta/word.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatdelta {

enum class RuleId
{
    dd,
    hh,
    vv,
    hv,
    dv,
    hd,
    ww1,
    ww2,
    wd,
    vw,
    sw,
};

inline constexpr std::array<RuleId, 11> all_rules = {
    RuleId::dd, RuleId::hh, RuleId::vv,  RuleId::hv, RuleId::dv, RuleId::hd,
    RuleId::ww1, RuleId::ww2, RuleId::wd, RuleId::vw, RuleId::sw,
};

const char* to_string(RuleId r);
std::optional<RuleId> parse_rule_id(std::string_view name);
/// The six relations among the generators d, s, v.
bool is_primary(RuleId r);

/// Values of the rule variables i, j and eps.
struct Assignment
{
    int i = 0;
    int j = 0;
    int e = 0;

    bool operator==(const Assignment&) const = default;
};

/**
 * An index in a rule template: base + c + ce * eps, where the base is one of
 * the variables or the position of the vertex inserted by the first letter
 * of the left-hand side.
 */
struct IndexExpr
{
    enum Base
    {
        I,
        J,
        Bv,
    };
    Base base = I;
    int c = 0;
    int ce = 0;
};

/// c + ce * eps
struct EpsExpr
{
    int c = 0;
    int ce = 0;
};

struct TemplateLetter
{
    LetterKind kind = LetterKind::D;
    IndexExpr index;
    EpsExpr eps;
};

struct CaseContext;
using CaseCondition = bool (*)(const CaseContext&);

/// One case of a relation: lhs = rhs whenever the condition holds.
struct RuleCase
{
    RuleId rule = RuleId::dd;
    std::string label;
    std::vector<TemplateLetter> lhs;
    std::vector<TemplateLetter> rhs;
    CaseCondition condition = nullptr;
    bool uses_i = false;
    bool uses_j = false;
    bool uses_e = false;
};

struct CaseContext
{
    const FatObject& anchor;
    const Assignment& a;
    const std::vector<Letter>& lhs;
};

/// All cases of all eleven relations, in application order.
const std::vector<RuleCase>& rule_cases();
std::vector<const RuleCase*> cases_of(RuleId r);

/// A concrete instance of a relation at an anchor.
struct Instance
{
    const RuleCase* rc = nullptr;
    FatObject anchor;
    Assignment a;
    std::vector<Letter> lhs;
    std::vector<Letter> rhs;
};

/// Builds both sides; nullopt unless both are well typed and the condition holds.
std::optional<Instance> instantiate(const RuleCase& rc, const FatObject& anchor,
                                    const Assignment& a);

/// True iff both instantiated sides evaluate to the same morphism. Throws
/// Error for an invalid instantiation.
bool check_rule(RuleId r, const FatObject& anchor, const Assignment& a);

/// Every distinct instance of the rule at the anchor.
std::vector<Instance> enumerate_instances(RuleId r, const FatObject& anchor);

struct RuleReport
{
    RuleId rule = RuleId::dd;
    long instances = 0;
    long failures = 0;
    std::optional<Instance> first_failure;
};

/// Checks every instance of the selected rules on all anchors with m <= max_m.
/// A rule listed in `corrupt` has its right-hand side perturbed (fault injection).
std::vector<RuleReport> check_all(int max_m, std::span<const RuleId> rules = all_rules,
                                  std::span<const RuleId> corrupt = {});

/// One application of a relation inside a word.
struct Rewrite
{
    const RuleCase* rc = nullptr;
    bool forward = true;
    Assignment a;
    size_t pos = 0;
    size_t len = 0;
    std::vector<Letter> replacement;
};

struct RewriteFilter
{
    /// Bitmask over RuleId; all rules by default.
    unsigned rules = ~0u;
    bool forward = true;
    bool backward = true;
    /// Use only the primary rules, with b letters expanded into (s, d).
    bool expanded_primary = false;
};

inline unsigned rule_bit(RuleId r) { return 1u << static_cast<unsigned>(r); }

/// Rewrites whose matched segment starts at `pos`. `at` is the object the
/// letter at `pos` is applied to.
std::vector<Rewrite> rewrites_at(const FatObject& at, std::span<const Letter> letters, size_t pos,
                                 const RewriteFilter& filter = {});

/// Rewrites at every position of the word.
std::vector<Rewrite> all_rewrites(const Word& w, const RewriteFilter& filter = {});

std::vector<Letter> apply_rewrite(std::span<const Letter> letters, const Rewrite& rw);

/// Replace each b_i^eps by s_{i+eps}, d_i.
std::vector<Letter> expand_bordering(std::span<const Letter> letters);

/// Whether `to` is reachable from `from` using only the primary rules
/// (b letters expanded), within words of at most max_len letters.
bool derivable_by_primary(const FatObject& anchor, const std::vector<Letter>& from,
                          const std::vector<Letter>& to, size_t max_len);

} // namespace fatdelta
