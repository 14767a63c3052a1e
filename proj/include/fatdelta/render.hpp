#pragma once

#include "fatdelta/factorize.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fatdelta {

enum class RenderFormat
{
    Dot,
    Tikz,
};

/// "dot" or "tikz"; nullopt otherwise.
std::optional<RenderFormat> parse_render_format(std::string_view name);

/// A square with the top rows above the bottom rows and the projections as
/// vertical arrows. An identity is drawn as a single node.
std::string render(const FatMorphism& f, RenderFormat format);

/// The chain of squares of the normal-form word, one per letter, with the
/// top arrows labelled by the letters.
std::string render(const NormalForm& nf, RenderFormat format);

} // namespace fatdelta
