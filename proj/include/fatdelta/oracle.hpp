#pragma once

#include "fatdelta/fatcat.hpp"
#include "fatdelta/relations.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fatdelta {

// Brute-force enumerations. All lists are in lexicographic order of image lists.

std::vector<MonotoneMap> enum_monotone(int m, int n);
std::vector<MonotoneMap> enum_epi(int m, int n);
std::vector<MonotoneMap> enum_mono(int m, int n);
/// All 2^m objects with top row [m].
std::vector<FatObject> enum_objects(int m);
/// Objects with top row of size at most max_m, by size then lexicographically.
std::vector<FatObject> enum_objects_upto(int max_m);

struct HomSet
{
    FatObject dom;
    FatObject cod;
    std::vector<FatMorphism> morphisms;
};

/// Every morphism a -> b, ordered by top map. The bottom map is forced by
/// the top because a's projection is surjective.
HomSet enum_hom(const FatObject& a, const FatObject& b);

/// Pushout of e (epi) and a (mono) in the simplex category: for every cone
/// into [x] with x <= max_size exactly one mediating map exists.
bool verify_pushout(const MonotoneMap& e, const MonotoneMap& a, const Pushout& po, int max_size);
/// Pullback of b (mono) and k (epi), tested against cones from [y], y <= max_size.
bool verify_pullback(const MonotoneMap& b, const MonotoneMap& k, const Pullback& pb, int max_size);
/// Cocartesian property of lift over its top map: for every h out of the
/// lift's domain into an object with m <= max_m and every mono t with
/// top(h) = t o top(lift), exactly one g over t satisfies g o lift = h.
bool verify_cocartesian(const FatMorphism& lift, int max_m);

enum class UniversalKind
{
    Pushout,
    Pullback,
    Cocartesian,
};

/// Data for verify_universal. Pushout: (first, second) = (e, a) with the
/// candidate legs in pushout. Pullback: (first, second) = (b, k) with the
/// candidate in pullback. Cocartesian: the candidate lift.
struct UniversalData
{
    MonotoneMap first;
    MonotoneMap second;
    std::optional<Pushout> pushout;
    std::optional<Pullback> pullback;
    std::optional<FatMorphism> lift;
};

bool verify_universal(UniversalKind kind, const UniversalData& data, int max_size);

struct AuditSection
{
    std::string name;
    long checked = 0;
    long failures = 0;
    std::string first_counterexample;
};

struct AuditReport
{
    int max_m = 0;
    std::vector<AuditSection> sections;
    std::vector<RuleReport> rules;

    bool ok() const;
    /// JSON text with per-section and per-rule counts.
    std::string to_json() const;
};

/// Round trip eval(factor_full(f)) = f with block discipline, over every
/// morphism between objects with m <= max_m.
AuditSection check_factorization(int max_m);

struct AuditOptions
{
    int max_m = 3;
    /// Longest word for the normal-form agreement section.
    int max_word = 3;
    /// Rules whose right-hand side is perturbed, to show failures are caught.
    std::vector<RuleId> corrupt;
};

AuditReport audit(const AuditOptions& opts);

} // namespace fatdelta
