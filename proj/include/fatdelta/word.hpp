#pragma once

#include "fatdelta/faces.hpp"

#include <string>
#include <vector>

namespace fatdelta {

/// Letters in application order, starting at an anchor object.
struct Word
{
    FatObject anchor;
    std::vector<Letter> letters;

    bool operator==(const Word&) const = default;
};

/// Index of the first letter that cannot be applied, or -1 if none.
int first_invalid(const FatObject& anchor, const std::vector<Letter>& letters);
bool well_typed(const Word& w);

/// Objects visited while applying the letters: anchor first, codomain last.
std::vector<FatObject> word_objects(const FatObject& anchor, const std::vector<Letter>& letters);
FatObject word_cod(const FatObject& anchor, const std::vector<Letter>& letters);

/// Composite of the steps; the identity for the empty word.
FatMorphism eval_word(const Word& w);
FatMorphism eval_letters(const FatObject& anchor, const std::vector<Letter>& letters);

std::string to_string(const std::vector<Letter>& letters);
/// `anchor | l1;l2;...`
std::string to_string(const Word& w);

} // namespace fatdelta
