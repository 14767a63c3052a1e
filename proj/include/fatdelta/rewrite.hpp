#pragma once

#include "fatdelta/factorize.hpp"
#include "fatdelta/relations.hpp"

namespace fatdelta {

struct NormalizeOptions
{
    /// Re-evaluate the word after every rewrite and fail if it changed.
    bool check_steps = false;
    /// Maximum number of rewrites per appended letter.
    long budget = 10000;
};

/// Sorts a word whose letters all have one kind, using that kind's
/// self-relation. Repeated bordering extensions stay adjacent.
Word sort_block(const Word& w);

/// Normal form of nf followed by one more letter, obtained by rewriting.
NormalForm normalize_append(const NormalForm& nf, const Letter& l,
                            const NormalizeOptions& opts = {});

/// Normal form of a word, appending its letters one at a time. Throws
/// Error if the word is ill typed, if the budget runs out, or if an
/// adjacent pair has no applicable rule.
NormalForm normalize_word(const Word& w, const NormalizeOptions& opts = {});

/// Equality in the presented category. Throws Error if the normal forms
/// and the evaluated morphisms disagree.
bool words_equal(const Word& w1, const Word& w2);

} // namespace fatdelta
