#include "fatdelta/literals.hpp"

#include "fatdelta/error.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>

namespace fatdelta {

namespace {

using json = nlohmann::json;

// Minimal cursor over a literal; errors report the absolute position.
class Cursor
{
public:
    Cursor(std::string_view text, std::string_view what)
        : m_text(text)
        , m_what(what)
    {
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    bool done()
    {
        skip_ws();
        return m_pos >= m_text.size();
    }
    bool peek(char c)
    {
        skip_ws();
        return m_pos < m_text.size() && m_text[m_pos] == c;
    }
    void expect(std::string_view token)
    {
        skip_ws();
        if (m_text.substr(m_pos, token.size()) != token) {
            fail("expected '" + std::string(token) + "'");
        }
        m_pos += token.size();
    }
    int integer()
    {
        skip_ws();
        int value = 0;
        const char* begin = m_text.data() + m_pos;
        const char* end = m_text.data() + m_text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            fail("expected an integer");
        }
        m_pos += static_cast<size_t>(ptr - begin);
        return value;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(std::string(m_what) + " syntax error at position " + std::to_string(m_pos) + ": "
                    + msg + " in \"" + std::string(m_text) + "\"");
    }

private:
    std::string_view m_text;
    std::string_view m_what;
    size_t m_pos = 0;
};

std::vector<int> int_list(Cursor& c, char open, char close)
{
    std::vector<int> out;
    c.expect(std::string(1, open));
    if (c.peek(close)) {
        c.expect(std::string(1, close));
        return out;
    }
    for (;;) {
        out.push_back(c.integer());
        if (c.peek(close)) {
            c.expect(std::string(1, close));
            return out;
        }
        c.expect(",");
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

FatObject object_from_json(const json& j, const char* field)
{
    if (j.is_string()) {
        return parse_object(j.get<std::string>());
    }
    if (j.is_array()) {
        std::vector<int> sizes = j.get<std::vector<int>>();
        return FatObject::from_fibres(sizes);
    }
    throw Error(std::string("morphism: field '") + field + "' must be an edge string");
}

} // namespace

MonotoneMap parse_map(std::string_view text)
{
    Cursor c(text, "map");
    const int m = c.integer();
    c.expect("->");
    const int n = c.integer();
    c.expect(":");
    std::vector<int> img = int_list(c, '[', ']');
    if (!c.done()) {
        c.fail("trailing characters");
    }
    return MonotoneMap(m, n, std::move(img));
}

FatObject parse_object(std::string_view text)
{
    const std::string_view t = trim(text);
    if (!t.empty() && t.front() == '(') {
        Cursor c(t, "object");
        std::vector<int> sizes = int_list(c, '(', ')');
        if (!c.done()) {
            c.fail("trailing characters");
        }
        return FatObject::from_fibres(sizes);
    }
    return FatObject::from_edges(t);
}

Letter parse_letter(std::string_view text)
{
    const std::string_view t = trim(text);
    Cursor c(t, "letter");
    if (t.empty()) {
        c.fail("empty letter");
    }
    Letter l;
    switch (t.front()) {
    case 'd': l.kind = LetterKind::D; break;
    case 's': l.kind = LetterKind::S; break;
    case 'v': l.kind = LetterKind::V; break;
    case 'b': l.kind = LetterKind::B; break;
    default: c.fail("unknown letter kind");
    }
    c.expect(t.substr(0, 1));
    l.index = c.integer();
    if (l.index < 0) {
        c.fail("negative index");
    }
    if (l.kind == LetterKind::B) {
        c.expect(".");
        l.eps = c.integer();
        if (l.eps != 0 && l.eps != 1) {
            c.fail("eps must be 0 or 1");
        }
    }
    if (!c.done()) {
        c.fail("trailing characters");
    }
    return l;
}

Word parse_word(std::string_view text)
{
    const size_t bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw Error("word syntax error: expected '<object> | <letters>' in \"" + std::string(text)
                    + "\"");
    }
    Word w{parse_object(text.substr(0, bar)), {}};
    std::string_view rest = trim(text.substr(bar + 1));
    while (!rest.empty()) {
        const size_t semi = rest.find(';');
        w.letters.push_back(parse_letter(rest.substr(0, semi)));
        if (semi == std::string_view::npos) {
            break;
        }
        rest = rest.substr(semi + 1);
    }
    return w;
}

FatMorphism parse_morphism(std::string_view json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("morphism syntax error: ") + e.what());
    }
    if (!j.is_object()) {
        throw Error("morphism: expected a JSON object");
    }
    for (const char* field : {"dom", "cod", "top", "bot"}) {
        if (!j.contains(field)) {
            throw Error(std::string("morphism: missing field '") + field + "'");
        }
    }
    try {
        FatObject dom = object_from_json(j["dom"], "dom");
        FatObject cod = object_from_json(j["cod"], "cod");
        auto top = j["top"].get<std::vector<int>>();
        auto bot = j["bot"].get<std::vector<int>>();
        MonotoneMap t(dom.m(), cod.m(), std::move(top));
        MonotoneMap b(dom.n(), cod.n(), std::move(bot));
        return FatMorphism(std::move(dom), std::move(cod), std::move(t), std::move(b));
    } catch (const json::exception& e) {
        throw Error(std::string("morphism: ") + e.what());
    }
}

std::string format_object(const FatObject& o)
{
    return o.is_empty() ? "()" : o.edges();
}

std::string format_morphism(const FatMorphism& f)
{
    nlohmann::ordered_json j;
    j["dom"] = format_object(f.dom());
    j["cod"] = format_object(f.cod());
    j["top"] = f.top().images();
    j["bot"] = f.bot().images();
    return j.dump();
}

} // namespace fatdelta
