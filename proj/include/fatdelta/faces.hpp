#pragma once

#include "fatdelta/fatcat.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace fatdelta {

enum class LetterKind
{
    D, ///< degenerated face
    S, ///< standard face
    V, ///< vertical face
    B, ///< bordering extension
};

/**
 * One generator occurrence. The meaning of the index depends on the object
 * the letter is applied to:
 *
 *  - D i  marks the unmarked edge between fibres i and i+1;
 *  - S i  inserts a new one-vertex fibre so that it becomes fibre i;
 *  - V p  inserts an inner marked vertex at position p;
 *  - B i,eps attaches a vertex at the start (eps = 0) or end (eps = 1) of
 *    fibre i. It is the S step at i+eps followed by the D step at i.
 */
struct Letter
{
    LetterKind kind = LetterKind::D;
    int index = 0;
    int eps = 0;

    static Letter d(int i) { return {LetterKind::D, i, 0}; }
    static Letter s(int i) { return {LetterKind::S, i, 0}; }
    static Letter v(int p) { return {LetterKind::V, p, 0}; }
    static Letter b(int i, int eps) { return {LetterKind::B, i, eps}; }

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// `d3`, `s1`, `v2`, `b2.0`
std::string to_string(const Letter& l);

/// Whether the letter can be applied to an object with domain o.
bool can_step(const FatObject& o, const Letter& l);
/// Codomain of step(o, l), without building the square.
FatObject step_object(const FatObject& o, const Letter& l);
/// The face with domain o described by l.
FatMorphism step(const FatObject& o, const Letter& l);
/// Position in the codomain of the vertex the letter inserts; -1 for D.
int inserted_vertex(const FatObject& o, const Letter& l);
/// All letters applicable at o, ordered by (kind, index, eps).
std::vector<Letter> letters_at(const FatObject& o);

// Codomain-parameterized constructors.

/// d_i : o -> (o with the edge between fibres i and i+1 marked).
FatMorphism deg_face(const FatObject& o, int i);
/// s_i : (o without its standard vertex in fibre i) -> o.
FatMorphism std_face(const FatObject& o, int i);
/// v_p : (o without the inner marked vertex p) -> o.
FatMorphism vert_face(const FatObject& o, int p);
/// b_i^eps = d_i after s_{i+eps}.
FatMorphism bord_ext(const FatObject& o, int i, int eps);

/// The letter whose step reproduces f, if f is a single face.
std::optional<Letter> recognize(const FatMorphism& f);
/// For f with identity bottom and a single-face top: a V or B letter.
Letter classify_single_vertical(const FatMorphism& f);

/// Top active and the square a pushout.
bool is_active_fat(const FatMorphism& f);
bool is_inert_fat(const FatMorphism& f);

} // namespace fatdelta
