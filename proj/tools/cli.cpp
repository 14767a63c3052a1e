#include "cli.hpp"

#include "fatdelta/error.hpp"
#include "fatdelta/factorize.hpp"
#include "fatdelta/literals.hpp"
#include "fatdelta/oracle.hpp"
#include "fatdelta/relations.hpp"
#include "fatdelta/render.hpp"
#include "fatdelta/rewrite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fatdelta::cli {

namespace {

using nlohmann::ordered_json;

std::string trim(std::string_view s)
{
    const size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// A morphism literal given inline or as a path to a file holding one.
FatMorphism read_morphism(const std::string& arg)
{
    const std::string t = trim(arg);
    if (!t.empty() && t.front() == '{') {
        return parse_morphism(t);
    }
    std::ifstream in(arg);
    if (!in) {
        throw Error("cannot read morphism file '" + arg + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_morphism(buf.str());
}

Word read_word(const std::string& text)
{
    Word w = parse_word(text);
    const int bad = first_invalid(w.anchor, w.letters);
    if (bad >= 0) {
        throw Error("letter " + std::to_string(bad) + " (" + to_string(w.letters[static_cast<size_t>(bad)])
                    + ") cannot be applied in word '" + text + "'");
    }
    return w;
}

ordered_json letters_json(const std::vector<Letter>& ls)
{
    ordered_json a = ordered_json::array();
    for (const Letter& l : ls) {
        a.push_back(to_string(l));
    }
    return a;
}

ordered_json nf_json(const NormalForm& nf)
{
    ordered_json j;
    j["word"] = to_string(nf.word());
    j["blocks"] = {
        {"sigma", letters_json(nf.sigma)}, {"phi", letters_json(nf.phi)},
        {"nu", letters_json(nf.nu)},       {"delta", letters_json(nf.delta)},
        {"psi", letters_json(nf.psi)},     {"tau", letters_json(nf.tau)},
    };
    j["morphism"] = ordered_json::parse(format_morphism(eval(nf)));
    return j;
}

std::vector<RuleId> parse_rules(const std::vector<std::string>& names)
{
    std::vector<RuleId> out;
    for (const std::string& n : names) {
        const std::optional<RuleId> r = parse_rule_id(n);
        if (!r) {
            throw Error("unknown rule '" + n + "'");
        }
        out.push_back(*r);
    }
    return out;
}

std::string detect_kind(const std::string& text)
{
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') {
        return "morphism";
    }
    if (t.find('|') != std::string::npos) {
        return "word";
    }
    if (t.find("->") != std::string::npos) {
        return "map";
    }
    if (t.size() >= 2 && std::string_view("dsvb").find(t[0]) != std::string_view::npos
        && std::isdigit(static_cast<unsigned char>(t[1]))) {
        return "letter";
    }
    return "object";
}

// Edge strings and words may start with '-'. Arguments that cannot be
// option names get this marker so the parser keeps them positional.
constexpr char literal_mark = '\x01';

bool needs_mark(const std::string& a)
{
    if (a.empty() || a[0] != '-' || a == "--") {
        return false;
    }
    const size_t k = a.size() > 1 && a[1] == '-' ? 2 : 1;
    return k >= a.size() || !std::isalpha(static_cast<unsigned char>(a[k]));
}

struct Options
{
    bool json = false;
    std::string output;
    int max_size = 3;
    int max_word = 3;
    std::vector<std::string> rules;
    std::vector<std::string> corrupt;
    std::string format = "dot";
    std::string kind = "auto";
    bool normal_form = false;
    std::vector<std::string> positional;
};

int cmd_parse(const Options& o, std::ostream& out)
{
    const std::string& text = o.positional.at(0);
    const std::string kind = o.kind == "auto" ? detect_kind(text) : o.kind;
    std::string canonical;
    ordered_json j;
    j["kind"] = kind;
    if (kind == "object") {
        const FatObject x = parse_object(text);
        canonical = format_object(x);
        j["m"] = x.m();
        j["n"] = x.n();
        j["eta"] = x.eta().images();
        j["fibres"] = x.fibre_sizes();
    } else if (kind == "map") {
        canonical = to_string(parse_map(text));
    } else if (kind == "letter") {
        canonical = to_string(parse_letter(text));
    } else if (kind == "word") {
        const Word w = read_word(text);
        canonical = to_string(w);
        j["morphism"] = ordered_json::parse(format_morphism(eval_word(w)));
    } else if (kind == "morphism") {
        canonical = format_morphism(parse_morphism(text));
    } else {
        throw Error("unknown literal kind '" + kind + "'");
    }
    j["canonical"] = canonical;
    if (o.json) {
        out << j.dump(2) << "\n";
    } else {
        out << canonical << "\n";
    }
    return Ok;
}

int cmd_compose(const Options& o, std::ostream& out)
{
    const FatMorphism f = read_morphism(o.positional.at(0));
    const FatMorphism g = read_morphism(o.positional.at(1));
    if (f.cod() != g.dom()) {
        throw Error("cannot compose: codomain " + format_object(f.cod()) + " differs from domain "
                    + format_object(g.dom()));
    }
    out << format_morphism(compose(g, f)) << "\n";
    return Ok;
}

int cmd_factor(const Options& o, std::ostream& out)
{
    const NormalForm nf = factor_full(read_morphism(o.positional.at(0)));
    if (o.json) {
        out << nf_json(nf).dump(2) << "\n";
    } else {
        out << to_string(nf.word()) << "\n" << to_string(nf) << "\n";
    }
    return Ok;
}

int cmd_normalize(const Options& o, std::ostream& out)
{
    const NormalForm nf = normalize_word(read_word(o.positional.at(0)));
    if (o.json) {
        out << nf_json(nf).dump(2) << "\n";
    } else {
        out << to_string(nf.word()) << "\n" << to_string(nf) << "\n";
    }
    return Ok;
}

int cmd_word_eq(const Options& o, std::ostream& out)
{
    const Word w1 = read_word(o.positional.at(0));
    const Word w2 = read_word(o.positional.at(1));
    const bool eq = words_equal(w1, w2);
    if (o.json) {
        ordered_json j;
        j["equal"] = eq;
        j["normal_forms"] = {to_string(normalize_word(w1).word()), to_string(normalize_word(w2).word())};
        out << j.dump(2) << "\n";
    } else {
        out << (eq ? "equal" : "different") << "\n";
    }
    return Ok;
}

int cmd_hom(const Options& o, std::ostream& out)
{
    const HomSet h = enum_hom(parse_object(o.positional.at(0)), parse_object(o.positional.at(1)));
    if (o.json) {
        ordered_json a = ordered_json::array();
        for (const FatMorphism& f : h.morphisms) {
            a.push_back(ordered_json::parse(format_morphism(f)));
        }
        out << a.dump(2) << "\n";
    } else {
        for (const FatMorphism& f : h.morphisms) {
            out << format_morphism(f) << "\n";
        }
    }
    return Ok;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const std::vector<FatObject> objs = enum_objects_upto(o.max_size);
    if (o.json) {
        ordered_json a = ordered_json::array();
        for (const FatObject& x : objs) {
            a.push_back({{"edges", format_object(x)}, {"m", x.m()}, {"n", x.n()}, {"fibres", x.fibre_sizes()}});
        }
        out << a.dump(2) << "\n";
        return Ok;
    }
    out << "m\tn\tedges\tfibres\n";
    for (const FatObject& x : objs) {
        out << x.m() << "\t" << x.n() << "\t\"" << format_object(x) << "\"\t(";
        const std::vector<int> g = x.fibre_sizes();
        for (size_t k = 0; k < g.size(); ++k) {
            out << (k ? "," : "") << g[k];
        }
        out << ")\n";
    }
    return Ok;
}

int cmd_check_relations(const Options& o, std::ostream& out, std::ostream& err)
{
    std::vector<RuleId> rules = parse_rules(o.rules);
    if (rules.empty()) {
        rules.assign(all_rules.begin(), all_rules.end());
    }
    const std::vector<RuleReport> reps = check_all(o.max_size, rules, parse_rules(o.corrupt));
    bool ok = true;
    ordered_json j = ordered_json::array();
    for (const RuleReport& r : reps) {
        ok &= r.failures == 0;
        j.push_back({{"rule", to_string(r.rule)}, {"instances", r.instances}, {"failures", r.failures}});
        if (!o.json) {
            out << to_string(r.rule) << "\t" << r.instances << " instances\t" << r.failures << " failures\n";
        }
    }
    if (o.json) {
        out << j.dump(2) << "\n";
    }
    for (const RuleReport& r : reps) {
        if (!r.first_failure) {
            continue;
        }
        const Instance& inst = *r.first_failure;
        err << "counterexample for " << to_string(r.rule) << " (" << inst.rc->label << ") at anchor \""
            << format_object(inst.anchor) << "\"\n";
        err << "  lhs " << to_string(inst.lhs) << " = " << format_morphism(eval_letters(inst.anchor, inst.lhs))
            << "\n";
        err << "  rhs " << to_string(inst.rhs) << " = ";
        if (first_invalid(inst.anchor, inst.rhs) < 0) {
            err << format_morphism(eval_letters(inst.anchor, inst.rhs)) << "\n";
        } else {
            err << "(ill typed)\n";
        }
        break;
    }
    return ok ? Ok : Counterexample;
}

int cmd_check_factorization(const Options& o, std::ostream& out, std::ostream& err)
{
    const AuditSection s = check_factorization(o.max_size);
    if (o.json) {
        out << ordered_json{{"checked", s.checked}, {"failures", s.failures}}.dump(2) << "\n";
    } else {
        out << s.checked << " morphisms\t" << s.failures << " failures\n";
    }
    if (s.failures) {
        err << "counterexample: " << s.first_counterexample << "\n";
        return Counterexample;
    }
    return Ok;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err)
{
    AuditOptions ao;
    ao.max_m = o.max_size;
    ao.max_word = o.max_word;
    ao.corrupt = parse_rules(o.corrupt);
    const AuditReport rep = audit(ao);
    if (o.json) {
        out << rep.to_json() << "\n";
    } else {
        for (const AuditSection& s : rep.sections) {
            out << s.name << "\t" << s.checked << " checked\t" << s.failures << " failures\n";
        }
    }
    for (const AuditSection& s : rep.sections) {
        if (s.failures) {
            err << "counterexample in " << s.name << ": " << s.first_counterexample << "\n";
        }
    }
    return rep.ok() ? Ok : Counterexample;
}

int cmd_render(const Options& o, std::ostream& out)
{
    const std::optional<RenderFormat> fmt = parse_render_format(o.format);
    if (!fmt) {
        throw Error("unknown render format '" + o.format + "'");
    }
    const std::string& input = o.positional.at(0);
    if (detect_kind(input) == "word") {
        out << render(normalize_word(read_word(input)), *fmt);
        return Ok;
    }
    const FatMorphism f = read_morphism(input);
    out << (o.normal_form ? render(factor_full(f), *fmt) : render(f, *fmt));
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generators, relations and normal forms in fat Delta", "fd"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("-o,--output", o.output, "Write data to this file instead of stdout");

    auto max_size = [&](CLI::App* c, const std::string& what) {
        c->add_option("--max-size", o.max_size, what)->envname("FD_MAX_SIZE")->check(CLI::NonNegativeNumber)->capture_default_str();
    };

    CLI::App* parse = app.add_subcommand("parse", "Parse a literal and print its canonical form");
    parse->add_option("text", o.positional, "Literal")->required()->expected(1);
    parse->add_option("--kind", o.kind, "auto, object, map, letter, word or morphism")->capture_default_str();

    CLI::App* comp = app.add_subcommand("compose", "Print g after f");
    comp->add_option("f", o.positional, "First morphism (JSON or file)")->required()->expected(2);

    CLI::App* factor = app.add_subcommand("factor", "Normal form of a morphism");
    factor->add_option("morphism", o.positional, "Morphism (JSON or file)")->required()->expected(1);

    CLI::App* norm = app.add_subcommand("normalize", "Normal form of a word");
    norm->add_option("word", o.positional, "Word 'anchor | l1;l2;...'")->required()->expected(1);

    CLI::App* weq = app.add_subcommand("word-eq", "Decide equality of two words");
    weq->add_option("words", o.positional, "Two words")->required()->expected(2);

    CLI::App* hom = app.add_subcommand("hom", "List all morphisms between two objects");
    hom->add_option("objects", o.positional, "Domain and codomain")->required()->expected(2);

    CLI::App* enumerate = app.add_subcommand("enumerate", "List objects up to a size");
    max_size(enumerate, "Largest m");

    CLI::App* rel = app.add_subcommand("check-relations", "Verify the relations on all anchors");
    max_size(rel, "Largest anchor m");
    rel->add_option("--rule", o.rules, "Restrict to these rules");
    rel->add_option("--corrupt", o.corrupt, "Perturb these rules to exercise failure reporting");

    CLI::App* fac = app.add_subcommand("check-factorization", "Round-trip every morphism through its normal form");
    max_size(fac, "Largest object m");

    CLI::App* aud = app.add_subcommand("audit", "Run every exhaustive check");
    max_size(aud, "Largest object m");
    aud->add_option("--max-word", o.max_word, "Longest word for normal-form agreement")->capture_default_str();
    aud->add_option("--corrupt", o.corrupt, "Perturb these rules to exercise failure reporting");

    CLI::App* ren = app.add_subcommand("render", "DOT or TikZ diagram of a morphism or a word's normal form");
    ren->add_option("input", o.positional, "Morphism (JSON or file) or word")->required()->expected(1);
    ren->add_option("--format", o.format, "dot or tikz")->capture_default_str();
    ren->add_flag("--normal-form", o.normal_form, "Draw the normal-form chain of a morphism");

    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        rev.push_back(needs_mark(*it) ? literal_mark + *it : *it);
    }
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ValidationFailure;
    }

    for (std::string& p : o.positional) {
        if (!p.empty() && p[0] == literal_mark) {
            p.erase(0, 1);
        }
    }

    std::ostringstream data;
    int code = Ok;
    try {
        CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "parse") code = cmd_parse(o, data);
        else if (name == "compose") code = cmd_compose(o, data);
        else if (name == "factor") code = cmd_factor(o, data);
        else if (name == "normalize") code = cmd_normalize(o, data);
        else if (name == "word-eq") code = cmd_word_eq(o, data);
        else if (name == "hom") code = cmd_hom(o, data);
        else if (name == "enumerate") code = cmd_enumerate(o, data);
        else if (name == "check-relations") code = cmd_check_relations(o, data, err);
        else if (name == "check-factorization") code = cmd_check_factorization(o, data, err);
        else if (name == "audit") code = cmd_audit(o, data, err);
        else if (name == "render") code = cmd_render(o, data);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ValidationFailure;
    }

    if (o.output.empty()) {
        out << data.str();
    } else {
        std::ofstream file(o.output);
        if (!file || !(file << data.str())) {
            err << "error: cannot write '" << o.output << "'\n";
            return ValidationFailure;
        }
    }
    return code;
}

} // namespace fatdelta::cli
