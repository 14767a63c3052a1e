#include "fatdelta/render.hpp"

#include "fatdelta/literals.hpp"

#include <sstream>
#include <vector>

namespace fatdelta {

namespace {

std::string images_label(const MonotoneMap& f)
{
    std::string out = "[";
    for (size_t k = 0; k < f.images().size(); ++k) {
        out += (k ? "," : "") + std::to_string(f.images()[k]);
    }
    return out + "]";
}

std::string ordinal(int n) { return "[" + std::to_string(n) + "]"; }

std::string object_label(const FatObject& o)
{
    return o.is_empty() ? "()" : o.edges();
}

// A chain of columns: column k holds objects[k]; arrow k joins columns k and k+1.
struct Chain
{
    std::vector<FatObject> objects;
    std::vector<std::string> top_labels;
    std::vector<std::string> bot_labels;
};

std::string dot(const Chain& c)
{
    std::ostringstream out;
    out << "digraph fat {\n  rankdir=TB;\n  node [shape=plaintext];\n";
    if (c.objects.size() == 1) {
        const FatObject& o = c.objects[0];
        const std::string edges = object_label(o);
        out << "  x0 [label=\"" << ordinal(o.m()) << " ->> " << ordinal(o.n())
            << (edges.empty() ? "" : " " + edges) << "\"];\n}\n";
        return out.str();
    }
    for (size_t k = 0; k < c.objects.size(); ++k) {
        const FatObject& o = c.objects[k];
        out << "  t" << k << " [label=\"" << ordinal(o.m()) << "\"];\n";
        out << "  b" << k << " [label=\"" << ordinal(o.n()) << "\"];\n";
    }
    out << "  { rank=same;";
    for (size_t k = 0; k < c.objects.size(); ++k) {
        out << " t" << k << ";";
    }
    out << " }\n  { rank=same;";
    for (size_t k = 0; k < c.objects.size(); ++k) {
        out << " b" << k << ";";
    }
    out << " }\n";
    for (size_t k = 0; k < c.objects.size(); ++k) {
        out << "  t" << k << " -> b" << k << " [arrowhead=normalnormal, label=\""
            << object_label(c.objects[k]) << "\"];\n";
    }
    for (size_t k = 0; k + 1 < c.objects.size(); ++k) {
        out << "  t" << k << " -> t" << k + 1 << " [dir=both, arrowtail=icurve, label=\""
            << c.top_labels[k] << "\"];\n";
        out << "  b" << k << " -> b" << k + 1 << " [label=\"" << c.bot_labels[k] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string tikz_label(const std::string& s) { return "\"\\texttt{" + s + "}\""; }

std::string tikz(const Chain& c)
{
    std::ostringstream out;
    out << "\\begin{tikzcd}\n";
    if (c.objects.size() == 1) {
        const FatObject& o = c.objects[0];
        const std::string edges = object_label(o);
        out << "  {" << ordinal(o.m()) << " \\twoheadrightarrow " << ordinal(o.n())
            << (edges.empty() ? "" : "\\ \\texttt{" + edges + "}") << "}\n\\end{tikzcd}\n";
        return out.str();
    }
    const size_t last = c.objects.size() - 1;
    out << " ";
    for (size_t k = 0; k <= last; ++k) {
        out << " {" << ordinal(c.objects[k].m()) << "}";
        out << " \\arrow[d, two heads, " << tikz_label(object_label(c.objects[k])) << "']";
        if (k < last) {
            out << " \\arrow[r, hook, " << tikz_label(c.top_labels[k]) << "] &";
        }
    }
    out << " \\\\\n ";
    for (size_t k = 0; k <= last; ++k) {
        out << " {" << ordinal(c.objects[k].n()) << "}";
        if (k < last) {
            out << " \\arrow[r";
            if (!c.bot_labels[k].empty()) {
                out << ", " << tikz_label(c.bot_labels[k]) << "'";
            }
            out << "] &";
        }
    }
    out << "\n\\end{tikzcd}\n";
    return out.str();
}

std::string emit(const Chain& c, RenderFormat format)
{
    return format == RenderFormat::Dot ? dot(c) : tikz(c);
}

} // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name)
{
    if (name == "dot") {
        return RenderFormat::Dot;
    }
    if (name == "tikz") {
        return RenderFormat::Tikz;
    }
    return std::nullopt;
}

std::string render(const FatMorphism& f, RenderFormat format)
{
    Chain c;
    c.objects.push_back(f.dom());
    if (f != FatMorphism::identity(f.dom())) {
        c.objects.push_back(f.cod());
        c.top_labels.push_back(images_label(f.top()));
        c.bot_labels.push_back(images_label(f.bot()));
    }
    return emit(c, format);
}

std::string render(const NormalForm& nf, RenderFormat format)
{
    const std::vector<Letter> letters = nf.letters();
    Chain c;
    c.objects = word_objects(nf.anchor, letters);
    for (const Letter& l : letters) {
        c.top_labels.push_back(to_string(l));
        c.bot_labels.emplace_back();
    }
    return emit(c, format);
}

} // namespace fatdelta
