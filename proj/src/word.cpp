#include "fatdelta/word.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/literals.hpp"

namespace fatdelta {

int first_invalid(const FatObject& anchor, const std::vector<Letter>& letters)
{
    FatObject o = anchor;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (!can_step(o, letters[k])) {
            return static_cast<int>(k);
        }
        o = step_object(o, letters[k]);
    }
    return -1;
}

bool well_typed(const Word& w)
{
    return first_invalid(w.anchor, w.letters) < 0;
}

std::vector<FatObject> word_objects(const FatObject& anchor, const std::vector<Letter>& letters)
{
    std::vector<FatObject> out;
    out.reserve(letters.size() + 1);
    out.push_back(anchor);
    for (size_t k = 0; k < letters.size(); ++k) {
        if (!can_step(out.back(), letters[k])) {
            throw Error("word: letter " + std::to_string(k) + " (" + to_string(letters[k])
                        + ") cannot be applied to " + format_object(out.back()));
        }
        out.push_back(step_object(out.back(), letters[k]));
    }
    return out;
}

FatObject word_cod(const FatObject& anchor, const std::vector<Letter>& letters)
{
    return word_objects(anchor, letters).back();
}

FatMorphism eval_letters(const FatObject& anchor, const std::vector<Letter>& letters)
{
    FatMorphism acc = FatMorphism::identity(anchor);
    for (size_t k = 0; k < letters.size(); ++k) {
        if (!can_step(acc.cod(), letters[k])) {
            throw Error("word: letter " + std::to_string(k) + " (" + to_string(letters[k])
                        + ") cannot be applied to " + format_object(acc.cod()));
        }
        acc = compose(step(acc.cod(), letters[k]), acc);
    }
    return acc;
}

FatMorphism eval_word(const Word& w)
{
    return eval_letters(w.anchor, w.letters);
}

std::string to_string(const std::vector<Letter>& letters)
{
    std::string out;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (k) {
            out += ';';
        }
        out += to_string(letters[k]);
    }
    return out;
}

std::string to_string(const Word& w)
{
    return format_object(w.anchor) + " | " + to_string(w.letters);
}

} // namespace fatdelta
