#include "fatdelta/fatcat.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/faces.hpp"

#include <algorithm>

namespace fatdelta {

const char* to_string(VertexClass c)
{
    switch (c) {
    case VertexClass::Standard: return "standard";
    case VertexClass::InnerMarked: return "inner-marked";
    case VertexClass::LeftBordering: return "left-bordering";
    case VertexClass::RightBordering: return "right-bordering";
    }
    return "?";
}

FatObject::FatObject() = default;

FatObject::FatObject(MonotoneMap eta)
    : m_eta(std::move(eta))
{
    if (!m_eta.is_epi()) {
        throw Error("object: " + to_string(m_eta) + " is not an epimorphism");
    }
    if ((m_eta.dom_size() < 0) != (m_eta.cod_size() < 0)) {
        throw Error("object: only the empty ordinal maps onto the empty ordinal");
    }
}

FatObject FatObject::empty()
{
    return FatObject(MonotoneMap(-1, -1, {}));
}

FatObject FatObject::from_edges(std::string_view edges)
{
    std::vector<int> img;
    img.reserve(edges.size() + 1);
    img.push_back(0);
    int level = 0;
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e] == '-') {
            ++level;
        } else if (edges[e] != '=') {
            throw Error("edge string: unexpected character '" + std::string(1, edges[e])
                        + "' at position " + std::to_string(e));
        }
        img.push_back(level);
    }
    return FatObject(MonotoneMap(static_cast<int>(edges.size()), level, std::move(img)));
}

FatObject FatObject::from_fibres(std::span<const int> fibre_sizes)
{
    if (fibre_sizes.empty()) {
        return empty();
    }
    std::vector<int> img;
    for (size_t i = 0; i < fibre_sizes.size(); ++i) {
        if (fibre_sizes[i] < 0) {
            throw Error("fibre list: negative fibre size at position " + std::to_string(i));
        }
        img.insert(img.end(), static_cast<size_t>(fibre_sizes[i] + 1), static_cast<int>(i));
    }
    const int m = static_cast<int>(img.size()) - 1;
    return FatObject(MonotoneMap(m, static_cast<int>(fibre_sizes.size()) - 1, std::move(img)));
}

std::string FatObject::edges() const
{
    if (is_empty()) {
        throw Error("the empty object has no edge string");
    }
    std::string out;
    out.reserve(static_cast<size_t>(m()));
    for (int e = 0; e < m(); ++e) {
        out.push_back(edge_marked(e) ? '=' : '-');
    }
    return out;
}

std::vector<int> FatObject::fibre_sizes() const
{
    std::vector<int> out(static_cast<size_t>(n() + 1), -1);
    for (int y : m_eta.images()) {
        ++out[static_cast<size_t>(y)];
    }
    return out;
}

int FatObject::ip(int i) const
{
    if (i < 0 || i > n()) {
        throw Error("ip: fibre index " + std::to_string(i) + " out of range");
    }
    const auto& img = m_eta.images();
    return static_cast<int>(std::lower_bound(img.begin(), img.end(), i) - img.begin());
}

int FatObject::ep(int i) const
{
    if (i < 0 || i > n()) {
        throw Error("ep: fibre index " + std::to_string(i) + " out of range");
    }
    const auto& img = m_eta.images();
    return static_cast<int>(std::upper_bound(img.begin(), img.end(), i) - img.begin()) - 1;
}

VertexClass FatObject::classify(int v) const
{
    if (v < 0 || v > m()) {
        throw Error("classify: vertex " + std::to_string(v) + " out of range");
    }
    const int lo = ip(m_eta(v));
    const int hi = ep(m_eta(v));
    if (lo == v && v == hi) {
        return VertexClass::Standard;
    }
    if (lo != v && v != hi) {
        return VertexClass::InnerMarked;
    }
    return lo == v ? VertexClass::LeftBordering : VertexClass::RightBordering;
}

std::vector<int> fibre_sizes(const FatObject& o) { return o.fibre_sizes(); }
VertexClass classify_vertex(const FatObject& o, int v) { return o.classify(v); }

FatMorphism::FatMorphism(FatObject dom, FatObject cod, MonotoneMap top, MonotoneMap bot)
    : m_dom(std::move(dom))
    , m_cod(std::move(cod))
    , m_top(std::move(top))
    , m_bot(std::move(bot))
{
    if (m_top.dom_size() != m_dom.m() || m_top.cod_size() != m_cod.m()
        || m_bot.dom_size() != m_dom.n() || m_bot.cod_size() != m_cod.n()) {
        throw Error("morphism: sizes of top " + to_string(m_top) + " / bottom " + to_string(m_bot)
                    + " do not match the objects");
    }
    if (!m_top.is_mono()) {
        throw Error("morphism: top " + to_string(m_top) + " is not a monomorphism");
    }
    for (int x = 0; x <= m_dom.m(); ++x) {
        if (m_cod.eta()(m_top(x)) != m_bot(m_dom.eta()(x))) {
            throw Error("morphism: square does not commute at vertex " + std::to_string(x));
        }
    }
}

FatMorphism FatMorphism::identity(const FatObject& o)
{
    return FatMorphism(o, o, MonotoneMap::identity(o.m()), MonotoneMap::identity(o.n()));
}

FatMorphism compose(const FatMorphism& g, const FatMorphism& f)
{
    if (f.cod() != g.dom()) {
        throw Error("compose: codomain of the first morphism is not the domain of the second");
    }
    return FatMorphism(f.dom(), g.cod(), compose_maps(g.top(), f.top()),
                       compose_maps(g.bot(), f.bot()));
}

unsigned class_of(const FatMorphism& f)
{
    unsigned out = 0;
    if (f.top().is_identity() && f.bot().is_epi()) {
        out |= Diagonal;
    }
    if (f.bot().is_identity()) {
        out |= Vertical;
    }
    if (f.bot().is_mono()) {
        // the square is a pullback iff the top hits every vertex over the bottom's image
        const std::vector<int>& img = f.bot().images();
        int over = 0;
        for (int x = 0; x <= f.cod().m(); ++x) {
            over += std::binary_search(img.begin(), img.end(), f.cod().eta()(x));
        }
        if (over == f.dom().m() + 1) {
            out |= Horizontal;
        }
    }
    return out;
}

FatObject incl_flat(int k)
{
    if (k < 0) {
        throw Error("incl_flat: k must be >= 0");
    }
    return FatObject(MonotoneMap::identity(k));
}

FatObject incl_sharp(int k)
{
    if (k < 0) {
        throw Error("incl_sharp: k must be >= 0");
    }
    return FatObject(MonotoneMap::terminal(k));
}

FatMorphism incl_flat(const MonotoneMap& mono)
{
    return FatMorphism(incl_flat(mono.dom_size()), incl_flat(mono.cod_size()), mono, mono);
}

FatMorphism incl_sharp(const MonotoneMap& mono)
{
    return FatMorphism(incl_sharp(mono.dom_size()), incl_sharp(mono.cod_size()), mono,
                       MonotoneMap::identity(0));
}

FatMorphism sharp_unit(const FatObject& o)
{
    return FatMorphism(o, incl_sharp(o.m()), MonotoneMap::identity(o.m()),
                       MonotoneMap::terminal(o.n()));
}

FatMorphism flat_counit(const FatObject& o)
{
    return FatMorphism(incl_flat(o.m()), o, MonotoneMap::identity(o.m()), o.eta());
}

FatMorphism cocartesian_lift(const FatObject& o, const MonotoneMap& top)
{
    if (top.dom_size() != o.m()) {
        throw Error("cocartesian_lift: top must start at [" + std::to_string(o.m()) + "]");
    }
    Pushout po = pushout_along_epi(o.eta(), top);
    return FatMorphism(o, FatObject(po.from_k), top, po.from_n);
}

FatObject sum(const FatObject& a, const FatObject& b)
{
    return FatObject(ordinal_sum(a.eta(), b.eta()));
}

FatMorphism sum(const FatMorphism& f, const FatMorphism& g)
{
    return FatMorphism(sum(f.dom(), g.dom()), sum(f.cod(), g.cod()), ordinal_sum(f.top(), g.top()),
                       ordinal_sum(f.bot(), g.bot()));
}

FatObject vee_obj(const FatObject& a, const FatObject& b)
{
    if (a.is_empty() || b.is_empty()) {
        throw Error("vee_obj: the empty object has no vee product");
    }
    return FatObject(vee(a.eta(), b.eta()));
}

FatObject marked_sum(const FatObject& a, const FatObject& b)
{
    if (a.is_empty() || b.is_empty()) {
        throw Error("marked_sum: the empty object has no marked sum");
    }
    std::vector<int> img(a.eta().images());
    for (int y : b.eta().images()) {
        img.push_back(a.n() + y);
    }
    return FatObject(MonotoneMap(a.m() + b.m() + 1, a.n() + b.n(), std::move(img)));
}

FatMorphism vee_active(const FatMorphism& f, const FatMorphism& g)
{
    if (!is_active_fat(f) || !is_active_fat(g)) {
        throw Error("vee_active: both morphisms must be active");
    }
    return FatMorphism(vee_obj(f.dom(), g.dom()), vee_obj(f.cod(), g.cod()), vee(f.top(), g.top()),
                       vee(f.bot(), g.bot()));
}

} // namespace fatdelta
