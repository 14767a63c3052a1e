#pragma once

#include "fatdelta/simplex.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatdelta {

/// Role of a vertex inside its fibre.
enum class VertexClass
{
    Standard,
    InnerMarked,
    LeftBordering,
    RightBordering,
};

const char* to_string(VertexClass c);

/**
 * An object of fat Delta: an epimorphism eta : [m] ->> [n].
 *
 * Equivalently a marking of the m edges of [m]; edge e is marked iff
 * eta(e) == eta(e+1). The image list of eta is the canonical identity, the
 * edge string ("-" unmarked, "=" marked) and the fibre-size list are views.
 * The empty augmented object exists only as the unit of the ordinal sum.
 */
class FatObject
{
public:
    /// The object [0] (empty edge string).
    FatObject();
    explicit FatObject(MonotoneMap eta);

    static FatObject empty();
    static FatObject from_edges(std::string_view edges);
    static FatObject from_fibres(std::span<const int> fibre_sizes);

    const MonotoneMap& eta() const { return m_eta; }
    int m() const { return m_eta.dom_size(); }
    int n() const { return m_eta.cod_size(); }
    bool is_empty() const { return m() < 0; }

    bool edge_marked(int e) const { return m_eta(e) == m_eta(e + 1); }
    /// Edge string; throws for the empty object, which has no edge string.
    std::string edges() const;
    std::vector<int> fibre_sizes() const;

    /// Smallest vertex of fibre i.
    int ip(int i) const;
    /// Greatest vertex of fibre i.
    int ep(int i) const;
    VertexClass classify(int v) const;

    bool operator==(const FatObject&) const = default;
    auto operator<=>(const FatObject&) const = default;

private:
    MonotoneMap m_eta;
};

std::vector<int> fibre_sizes(const FatObject& o);
VertexClass classify_vertex(const FatObject& o, int v);

/// Classes of the ternary factorization. Diagonal: top identity. Vertical:
/// bottom identity. Horizontal: mono bottom and the square a pullback, so
/// only isomorphisms are both vertical and horizontal. A morphism may
/// belong to several classes.
enum MorphismClass : unsigned
{
    Diagonal = 1u,
    Vertical = 2u,
    Horizontal = 4u,
};

/**
 * A commutative square
 *
 *     [m]  --top-->  [m']
 *      |eta           |kappa
 *     [n]  --bot-->  [n']
 *
 * with top a mono. Construction validates sizes and commutativity.
 */
class FatMorphism
{
public:
    FatMorphism(FatObject dom, FatObject cod, MonotoneMap top, MonotoneMap bot);

    static FatMorphism identity(const FatObject& o);

    const FatObject& dom() const { return m_dom; }
    const FatObject& cod() const { return m_cod; }
    const MonotoneMap& top() const { return m_top; }
    const MonotoneMap& bot() const { return m_bot; }

    bool operator==(const FatMorphism&) const = default;
    auto operator<=>(const FatMorphism&) const = default;

private:
    FatObject m_dom;
    FatObject m_cod;
    MonotoneMap m_top;
    MonotoneMap m_bot;
};

/// g after f.
FatMorphism compose(const FatMorphism& g, const FatMorphism& f);
inline FatMorphism identity(const FatObject& o) { return FatMorphism::identity(o); }
inline bool equal(const FatMorphism& f, const FatMorphism& g) { return f == g; }

unsigned class_of(const FatMorphism& f);

// Projections: the domain row lands in the semi-simplex category, the
// codomain row in the simplex category.
inline int proj_plus(const FatObject& o) { return o.m(); }
inline const MonotoneMap& proj_plus(const FatMorphism& f) { return f.top(); }
inline int proj_delta(const FatObject& o) { return o.n(); }
inline const MonotoneMap& proj_delta(const FatMorphism& f) { return f.bot(); }

/// [k] with nothing marked.
FatObject incl_flat(int k);
/// [k] ->> [0], everything marked.
FatObject incl_sharp(int k);
FatMorphism incl_flat(const MonotoneMap& mono);
FatMorphism incl_sharp(const MonotoneMap& mono);

/// Unit eta -> sharp(m) of the right adjunction (identity on top).
FatMorphism sharp_unit(const FatObject& o);
/// Counit flat(m) -> eta of the left adjunction (identity on top).
FatMorphism flat_counit(const FatObject& o);

/// The lift of a mono along the domain projection; its square is a pushout.
FatMorphism cocartesian_lift(const FatObject& o, const MonotoneMap& top);

/// Relative ordinal sum: join with an unmarked edge between the two pieces.
FatObject sum(const FatObject& a, const FatObject& b);
FatMorphism sum(const FatMorphism& f, const FatMorphism& g);
/// Relative vee product: glue last vertex of a to first vertex of b.
FatObject vee_obj(const FatObject& a, const FatObject& b);
/// Marked sum: join with a marked edge.
FatObject marked_sum(const FatObject& a, const FatObject& b);
/// Vee product of two active morphisms.
FatMorphism vee_active(const FatMorphism& f, const FatMorphism& g);

} // namespace fatdelta
