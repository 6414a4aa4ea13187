#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "gbr/errors.hpp"
#include "gbr/word.hpp"

namespace gbr {

// Text grammar for words, whitespace-insensitive between tokens:
//
//   word  := "id[" obj "]" | token (";" token)*
//   token := kind "[" obj ">" obj "]" | kind "[111," pos "]"
//   kind  := "f" | "g" | "t" | "d"      obj := "3" | "12" | "21" | "111"
//   pos   := "1" | "2"
//
// "t[111,1]" crosses strands 1 and 2 positively; "d" is the negative parity.

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t at = 0;

    void skip_ws() {
        while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    }
    bool done() {
        skip_ws();
        return at >= text.size();
    }
    char peek() {
        skip_ws();
        return at < text.size() ? text[at] : '\0';
    }
    char take() {
        skip_ws();
        if (at >= text.size()) throw ParseError(at, "unexpected end of input");
        return text[at++];
    }
    void expect(char c) {
        char got = take();
        if (got != c)
            throw ParseError(at - 1, std::string("expected '") + c + "', found '" + got + "'");
    }
    Partition object() {
        skip_ws();
        std::size_t start = at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
        auto p = partition_from(text.substr(start, at - start));
        if (!p) throw ParseError(start, "expected an object (3, 12, 21 or 111)");
        return *p;
    }
};

inline Generator token(Cursor& c) {
    std::size_t start = c.at;
    char k = c.take();
    GenKind kind;
    switch (k) {
        case 'f': kind = GenKind::Fork; break;
        case 'g': kind = GenKind::Merge; break;
        case 't': kind = GenKind::PosCross; break;
        case 'd': kind = GenKind::NegCross; break;
        default: throw ParseError(c.at - 1, std::string("unknown generator kind '") + k + "'");
    }
    c.expect('[');
    Partition src = c.object();
    Generator g{kind, src, src, 0};
    if (c.peek() == ',') {
        c.take();
        char pos = c.take();
        if (pos != '1' && pos != '2') throw ParseError(c.at - 1, "crossing position must be 1 or 2");
        g.target = src;
        g.position = static_cast<std::uint8_t>(pos - '0');
    } else {
        c.expect('>');
        g.target = c.object();
    }
    c.expect(']');
    if (!is_legal(g))
        throw IllegalGenerator(start, "no such generator: " +
                                          std::string(c.text.substr(start, c.at - start)));
    return g;
}

}  // namespace detail

inline Word parse_word(std::string_view text) {
    detail::Cursor c{text};
    c.skip_ws();
    if (c.text.substr(c.at, 3) == "id[") {
        c.at += 3;
        Partition p = c.object();
        c.expect(']');
        if (!c.done()) throw ParseError(c.at, "trailing input after identity word");
        return Word(p);
    }
    Word w = [&] {
        Generator first = detail::token(c);
        Word out(first.source);
        out.append(first);
        return out;
    }();
    while (!c.done()) {
        c.expect(';');
        Generator g = detail::token(c);
        if (g.source != w.target())
            throw EndpointMismatch(std::string(to_string(w.target())),
                                   std::string(to_string(g.source)));
        w.append(g);
    }
    return w;
}

// Canonical rendering; parse_word(render(w)) == w, and distinct words render
// distinctly.
inline std::string render(const Word& w) {
    if (w.is_identity()) return "id[" + std::string(to_string(w.source())) + "]";
    std::string out;
    for (const Generator& g : w.steps()) {
        if (!out.empty()) out += " ; ";
        out += to_token(g);
    }
    return out;
}

}  // namespace gbr
