#pragma once

#include "fatdelta/word.hpp"

#include <string>
#include <vector>

namespace fatdelta {

/**
 * The six-block decomposition of a morphism, each block in application
 * order starting from the anchor:
 *
 *   sigma  degenerated faces, weakly increasing
 *   phi    bordering extensions on fibres hit by the bottom map
 *   nu     vertical faces on those fibres
 *   delta  standard faces creating the remaining fibres
 *   psi    bordering extensions (eps = 1) on the new fibres
 *   tau    vertical faces on the new fibres
 */
struct NormalForm
{
    FatObject anchor;
    std::vector<Letter> sigma;
    std::vector<Letter> phi;
    std::vector<Letter> nu;
    std::vector<Letter> delta;
    std::vector<Letter> psi;
    std::vector<Letter> tau;

    std::vector<Letter> letters() const;
    Word word() const { return Word{anchor, letters()}; }
    bool operator==(const NormalForm&) const = default;
};

FatMorphism eval(const NormalForm& nf);
/// `sigma:[d0] phi:[] nu:[v1] delta:[] psi:[] tau:[]`
std::string to_string(const NormalForm& nf);

/// Empty string if the block kinds and index orders are canonical,
/// otherwise a description of the first violation.
std::string check_block_discipline(const NormalForm& nf);

struct VerticalFactors
{
    std::vector<Letter> phi;
    std::vector<Letter> nu;
};

/// For f with identity bottom: bordering vertices of the codomain missing
/// from the image of the top become B letters, inner ones V letters.
VerticalFactors factor_vertical(const FatMorphism& f);

struct HorizontalFactors
{
    std::vector<Letter> phi;
    std::vector<Letter> nu;
    std::vector<Letter> delta;
    std::vector<Letter> psi;
    std::vector<Letter> tau;
};

/// For f with mono bottom, through the pullback of the codomain along it.
HorizontalFactors factor_horizontal(const FatMorphism& f);

NormalForm factor_full(const FatMorphism& f);

struct Ternary
{
    FatMorphism d; ///< diagonal
    FatMorphism v; ///< vertical
    FatMorphism h; ///< horizontal
};

/// f = h o v o d
Ternary ternary_factor(const FatMorphism& f);

struct ActiveInertFat
{
    FatMorphism active;
    FatMorphism inert;
};

/// f = inert o active, the active part a pushout square.
ActiveInertFat active_inert_factor_fat(const FatMorphism& f);

} // namespace fatdelta
