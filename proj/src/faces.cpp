#include "fatdelta/faces.hpp"

#include "fatdelta/error.hpp"

namespace fatdelta {

namespace {

std::string letter_error(const FatObject& o, const Letter& l)
{
    return "letter " + to_string(l) + " cannot be applied to " + to_string(o.eta());
}

// Position of the new vertex for S i: right after the last vertex of fibre i-1.
int std_slot_vertex(const FatObject& o, int i)
{
    return i == 0 ? 0 : o.ep(i - 1) + 1;
}

bool inner_slot(const FatObject& o, int p)
{
    if (p < 1 || p > o.m()) {
        return false;
    }
    // p is inside a fibre iff its left neighbour edge is marked
    return o.eta()(p - 1) == o.eta()(p);
}

MonotoneMap insert_vertex(const MonotoneMap& eta, int q, int value, int shift)
{
    std::vector<int> img;
    img.reserve(eta.images().size() + 1);
    for (int x = 0; x < q; ++x) {
        img.push_back(eta(x));
    }
    img.push_back(value);
    for (int x = q; x <= eta.dom_size(); ++x) {
        img.push_back(eta(x) + shift);
    }
    return MonotoneMap(eta.dom_size() + 1, eta.cod_size() + shift, std::move(img));
}

} // namespace

std::string to_string(const Letter& l)
{
    switch (l.kind) {
    case LetterKind::D: return "d" + std::to_string(l.index);
    case LetterKind::S: return "s" + std::to_string(l.index);
    case LetterKind::V: return "v" + std::to_string(l.index);
    case LetterKind::B: return "b" + std::to_string(l.index) + "." + std::to_string(l.eps);
    }
    return "?";
}

bool can_step(const FatObject& o, const Letter& l)
{
    if (o.is_empty() || l.index < 0) {
        return false;
    }
    switch (l.kind) {
    case LetterKind::D: return l.eps == 0 && l.index <= o.n() - 1;
    case LetterKind::S: return l.eps == 0 && l.index <= o.n() + 1;
    case LetterKind::V: return l.eps == 0 && inner_slot(o, l.index);
    case LetterKind::B: return (l.eps == 0 || l.eps == 1) && l.index <= o.n();
    }
    return false;
}

int inserted_vertex(const FatObject& o, const Letter& l)
{
    if (!can_step(o, l)) {
        throw Error(letter_error(o, l));
    }
    switch (l.kind) {
    case LetterKind::D: return -1;
    case LetterKind::S: return std_slot_vertex(o, l.index);
    case LetterKind::V: return l.index;
    case LetterKind::B: return l.eps == 0 ? o.ip(l.index) : o.ep(l.index) + 1;
    }
    return -1;
}

FatObject step_object(const FatObject& o, const Letter& l)
{
    if (!can_step(o, l)) {
        throw Error(letter_error(o, l));
    }
    const MonotoneMap& eta = o.eta();
    switch (l.kind) {
    case LetterKind::D:
        return FatObject(compose_maps(degeneracy_map(o.n() - 1, l.index), eta));
    case LetterKind::S:
        return FatObject(insert_vertex(eta, std_slot_vertex(o, l.index), l.index, 1));
    case LetterKind::V:
        return FatObject(insert_vertex(eta, l.index, eta(l.index - 1), 0));
    case LetterKind::B: {
        const int q = inserted_vertex(o, l);
        return FatObject(insert_vertex(eta, q, l.index, 0));
    }
    }
    throw Error(letter_error(o, l));
}

FatMorphism step(const FatObject& o, const Letter& l)
{
    FatObject cod = step_object(o, l);
    switch (l.kind) {
    case LetterKind::D:
        return FatMorphism(o, cod, MonotoneMap::identity(o.m()), degeneracy_map(o.n() - 1, l.index));
    case LetterKind::S:
        return FatMorphism(o, cod, face_map(o.m() + 1, inserted_vertex(o, l)),
                           face_map(o.n() + 1, l.index));
    case LetterKind::V:
    case LetterKind::B:
        return FatMorphism(o, cod, face_map(o.m() + 1, inserted_vertex(o, l)),
                           MonotoneMap::identity(o.n()));
    }
    throw Error(letter_error(o, l));
}

std::vector<Letter> letters_at(const FatObject& o)
{
    std::vector<Letter> out;
    if (o.is_empty()) {
        return out;
    }
    for (int i = 0; i <= o.n() - 1; ++i) {
        out.push_back(Letter::d(i));
    }
    for (int i = 0; i <= o.n() + 1; ++i) {
        out.push_back(Letter::s(i));
    }
    for (int p = 1; p <= o.m(); ++p) {
        if (inner_slot(o, p)) {
            out.push_back(Letter::v(p));
        }
    }
    for (int i = 0; i <= o.n(); ++i) {
        out.push_back(Letter::b(i, 0));
        out.push_back(Letter::b(i, 1));
    }
    return out;
}

FatMorphism deg_face(const FatObject& o, int i)
{
    if (o.is_empty() || i < 0 || i > o.n() - 1) {
        throw Error("deg_face: need 0 <= i <= n-1 (i=" + std::to_string(i)
                    + ", n=" + std::to_string(o.n()) + ")");
    }
    return step(o, Letter::d(i));
}

FatMorphism std_face(const FatObject& o, int i)
{
    if (o.is_empty() || i < 0 || i > o.n()) {
        throw Error("std_face: fibre index " + std::to_string(i) + " out of range");
    }
    if (o.ip(i) != o.ep(i)) {
        throw Error("std_face: fibre " + std::to_string(i) + " is not a single standard vertex");
    }
    if (o.n() == 0) {
        throw Error("std_face: removing the only vertex leaves no object");
    }
    const int bv = o.ip(i);
    std::vector<int> img;
    for (int x = 0; x <= o.m(); ++x) {
        if (x != bv) {
            const int y = o.eta()(x);
            img.push_back(y > i ? y - 1 : y);
        }
    }
    FatObject dom(MonotoneMap(o.m() - 1, o.n() - 1, std::move(img)));
    return FatMorphism(dom, o, face_map(o.m(), bv), face_map(o.n(), i));
}

FatMorphism vert_face(const FatObject& o, int p)
{
    if (o.is_empty() || p < 0 || p > o.m() || o.classify(p) != VertexClass::InnerMarked) {
        throw Error("vert_face: vertex " + std::to_string(p) + " is not inner marked");
    }
    const MonotoneMap top = face_map(o.m(), p);
    return FatMorphism(FatObject(compose_maps(o.eta(), top)), o, top, MonotoneMap::identity(o.n()));
}

FatMorphism bord_ext(const FatObject& o, int i, int eps)
{
    if (eps != 0 && eps != 1) {
        throw Error("bord_ext: eps must be 0 or 1");
    }
    return compose(deg_face(o, i), std_face(o, i + eps));
}

std::optional<Letter> recognize(const FatMorphism& f)
{
    const MonotoneMap& top = f.top();
    const MonotoneMap& bot = f.bot();
    std::optional<Letter> guess;
    if (top.is_identity() && bot.dom_size() == bot.cod_size() + 1 && bot.is_epi()) {
        guess = Letter::d(epi_to_degeneracies(bot).front());
    } else if (top.cod_size() == top.dom_size() + 1) {
        if (bot.cod_size() == bot.dom_size() + 1 && bot.is_mono()) {
            guess = Letter::s(mono_to_faces(bot).front());
        } else if (bot.is_identity()) {
            guess = classify_single_vertical(f);
        }
    }
    if (guess && can_step(f.dom(), *guess) && step(f.dom(), *guess) == f) {
        return guess;
    }
    return std::nullopt;
}

Letter classify_single_vertical(const FatMorphism& f)
{
    if (!f.bot().is_identity() || f.top().cod_size() != f.top().dom_size() + 1) {
        throw Error("classify_single_vertical: need an identity bottom and a single-face top");
    }
    const int p = mono_to_faces(f.top()).front();
    const FatObject& cod = f.cod();
    const int fibre = cod.eta()(p);
    switch (cod.classify(p)) {
    case VertexClass::InnerMarked: return Letter::v(p);
    case VertexClass::LeftBordering: return Letter::b(fibre, 0);
    case VertexClass::RightBordering: return Letter::b(fibre, 1);
    case VertexClass::Standard: break;
    }
    // a standard vertex would be a whole fibre missing from the domain
    throw Error("classify_single_vertical: removed vertex is standard");
}

bool is_active_fat(const FatMorphism& f)
{
    if (!is_active(f.top())) {
        return false;
    }
    const Pushout po = pushout_along_epi(f.dom().eta(), f.top());
    return po.from_k == f.cod().eta() && po.from_n == f.bot();
}

bool is_inert_fat(const FatMorphism& f)
{
    return is_inert(f.top());
}

} // namespace fatdelta
