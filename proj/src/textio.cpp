#include "cylcalc/textio.hpp"

#include <cctype>

namespace cylcalc {
namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> content_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != '\n') continue;
        std::string_view line = trimmed(text.substr(start, i - start));
        if (!line.empty() && line.front() != '#') out.push_back(line);
        start = i + 1;
    }
    return out;
}

// Joins the content lines with ';' so that one-item-per-line files parse
// with the same list grammar as inline text.
std::string squash_lines(std::string_view text) {
    std::string out;
    for (const auto& line : content_lines(text)) {
        if (!out.empty()) out += "; ";
        out += std::string(line);
    }
    return out;
}

bool consume_prefix(std::string_view& s, std::string_view word) {
    std::string_view t = trimmed(s);
    if (t.substr(0, word.size()) != word) return false;
    s = t.substr(word.size());
    return true;
}

}  // namespace

VarSet parse_varset(std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty() || s.front() != '{') throw ParseError(0, "expected '{'");
    if (s.back() != '}') throw ParseError(s.size() - 1, "expected '}'");
    std::string_view body = trimmed(s.substr(1, s.size() - 2));
    VarSet out;
    if (body.empty()) return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] != ',') continue;
        std::string_view item = trimmed(body.substr(start, i - start));
        if (item.empty()) throw ParseError(start, "blank variable index");
        std::uint64_t v = 0;
        for (char ch : item) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(start, "malformed variable index");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > 0xFFFFFFFEull) throw ParseError(start, "variable index too large");
        }
        out.insert(static_cast<VarIndex>(v));
        start = i + 1;
    }
    return out;
}

IdealPresentation parse_ideal_entry(std::string_view text) {
    std::string squashed = squash_lines(text);
    std::string_view s = squashed;
    if (consume_prefix(s, "level")) {
        std::string_view rest = trimmed(s);
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) throw ParseError(0, "expected ':' after the level");
        VarSet level = parse_varset(rest.substr(0, colon));
        std::vector<Polynomial> gens = parse_polynomial_list(rest.substr(colon + 1));
        return IdealPresentation(level, std::move(gens));
    }
    return IdealPresentation::span(parse_polynomial_list(squashed));
}

LeveledIdeal parse_leveled_ideal(std::string_view text) {
    LeveledIdeal out;
    for (const auto& line : content_lines(text)) out.entries.push_back(parse_ideal_entry(line));
    return out;
}

LocallyClosedPiece parse_piece(std::string_view text) {
    std::string_view s = trimmed(text);
    if (!consume_prefix(s, "level"))
        throw ParseError(0, "expected 'level' at the start of a piece");
    if (!consume_prefix(s, ":")) throw ParseError(0, "expected ':' after 'level'");
    std::size_t close = s.find('}');
    if (close == std::string_view::npos) throw ParseError(0, "expected a variable set");
    VarSet level = parse_varset(s.substr(0, close + 1));
    s = s.substr(close + 1);
    if (!consume_prefix(s, ";")) throw ParseError(0, "expected ';' after the level");

    auto read_part = [&s](std::string_view keyword) {
        if (!consume_prefix(s, keyword))
            throw ParseError(0, "expected '" + std::string(keyword) + "'");
        if (!consume_prefix(s, ":"))
            throw ParseError(0, "expected ':' after '" + std::string(keyword) + "'");
        std::string_view t = trimmed(s);
        if (t.empty() || t.front() != '[') throw ParseError(0, "expected '['");
        std::size_t end = t.find(']');
        if (end == std::string_view::npos) throw ParseError(0, "expected ']'");
        std::vector<Polynomial> gens = parse_polynomial_list(t.substr(1, end - 1));
        s = t.substr(end + 1);
        return gens;
    };

    std::vector<Polynomial> closed = read_part("closed");
    if (!consume_prefix(s, ";")) throw ParseError(0, "expected ';' after the closed part");
    std::vector<Polynomial> removed = read_part("removed");
    if (!trimmed(s).empty()) throw ParseError(0, "trailing characters after the piece");

    return LocallyClosedPiece{level, IdealPresentation(level, std::move(closed)),
                              IdealPresentation(level, std::move(removed))};
}

std::string render_piece(const LocallyClosedPiece& piece) {
    auto render_list = [](const IdealPresentation& ideal) {
        std::string s = "[";
        for (std::size_t i = 0; i < ideal.generators().size(); ++i)
            s += (i ? "; " : "") + ideal.generators()[i].to_string();
        return s + "]";
    };
    return "level: " + piece.level.to_string() + "; closed: " + render_list(piece.closed) +
           "; removed: " + render_list(piece.removed);
}

CylinderSet parse_cylinder(std::string_view text) {
    CylinderSet out;
    std::string squashed;
    for (const auto& line : content_lines(text)) {
        if (!squashed.empty()) squashed += "|";
        squashed += std::string(line);
    }
    if (trimmed(squashed) == "empty") return out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= squashed.size(); ++i) {
        if (i < squashed.size() && squashed[i] != '|') continue;
        std::string_view piece = trimmed(std::string_view(squashed).substr(start, i - start));
        if (!piece.empty()) out.pieces.push_back(parse_piece(piece));
        start = i + 1;
    }
    if (out.pieces.empty()) throw ParseError(0, "no pieces; write 'empty' for the empty cylinder");
    return out;
}

std::string render_cylinder(const CylinderSet& c) {
    if (c.pieces.empty()) return "empty";
    std::string s;
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        if (i) s += "\n";
        s += render_piece(c.pieces[i]);
    }
    return s;
}

std::vector<CylinderSet> parse_cylinder_list(std::string_view text) {
    std::vector<CylinderSet> out;
    std::string block;
    auto flush = [&]() {
        if (trimmed(block).empty()) return;
        out.push_back(parse_cylinder(block));
        block.clear();
    };
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != '\n') continue;
        std::string_view line = trimmed(text.substr(start, i - start));
        if (line == "---") {
            flush();
        } else {
            block += std::string(line) + "\n";
        }
        start = i + 1;
    }
    flush();
    return out;
}

std::vector<CoverMember> parse_cover(std::string_view text) {
    std::vector<CoverMember> out;
    for (const auto& line : content_lines(text)) out.push_back(CoverMember{parse_ideal_entry(line)});
    return out;
}

SystemDocument parse_system_document(std::string_view text) {
    SystemDocument doc;
    for (const auto& raw : content_lines(text)) {
        std::string_view line = raw;
        if (consume_prefix(line, "level")) {
            std::string_view rest = trimmed(line);
            std::size_t sep = rest.find(" vars");
            if (sep == std::string_view::npos)
                throw ParseError(0, "expected 'vars' in a level line");
            std::string name(trimmed(rest.substr(0, sep)));
            if (name.empty()) throw ParseError(0, "blank level name");
            doc.system.add_level(name, parse_varset(rest.substr(sep + 5)));
        } else if (consume_prefix(line, "map")) {
            std::string_view rest = trimmed(line);
            std::size_t arrow = rest.find("->");
            if (arrow == std::string_view::npos)
                throw ParseError(0, "expected '->' in a map line");
            std::string from(trimmed(rest.substr(0, arrow)));
            std::string_view tail = trimmed(rest.substr(arrow + 2));
            std::size_t brace = tail.find('{');
            if (brace == std::string_view::npos || tail.back() != '}')
                throw ParseError(0, "expected '{ ... }' in a map line");
            std::string to(trimmed(tail.substr(0, brace)));
            std::string_view body = trimmed(tail.substr(brace + 1, tail.size() - brace - 2));
            SubstitutionSystem::Substitution images;
            if (!body.empty()) {
                std::size_t start = 0;
                for (std::size_t i = 0; i <= body.size(); ++i) {
                    if (i < body.size() && body[i] != ';') continue;
                    std::string_view item = trimmed(body.substr(start, i - start));
                    start = i + 1;
                    if (item.empty()) continue;
                    std::size_t a = item.find("->");
                    if (a == std::string_view::npos)
                        throw ParseError(0, "expected 't<k> -> polynomial' in a map body");
                    std::string_view lhs = trimmed(item.substr(0, a));
                    if (lhs.size() < 2 || lhs.front() != 't')
                        throw ParseError(0, "substituted variable must look like t0");
                    std::uint64_t v = 0;
                    for (char ch : lhs.substr(1)) {
                        if (!std::isdigit(static_cast<unsigned char>(ch)))
                            throw ParseError(0, "substituted variable must look like t0");
                        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
                        if (v > 0xFFFFFFFEull) throw ParseError(0, "variable index too large");
                    }
                    images[static_cast<VarIndex>(v)] = parse_polynomial(item.substr(a + 2));
                }
            }
            doc.system.add_map(from, to, std::move(images));
        } else if (consume_prefix(line, "entry")) {
            std::string_view rest = line;
            if (!consume_prefix(rest, "at"))
                throw ParseError(0, "expected 'entry at <level>:'");
            std::string_view tail = trimmed(rest);
            std::size_t colon = tail.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(0, "expected ':' in an entry line");
            std::string name(trimmed(tail.substr(0, colon)));
            std::size_t id = doc.system.index_of(name);
            std::vector<Polynomial> gens = parse_polynomial_list(tail.substr(colon + 1));
            doc.entries.push_back(
                {name, IdealPresentation(doc.system.vars_of(id), std::move(gens))});
        } else {
            throw ParseError(0, "unrecognized line: " + std::string(raw));
        }
    }
    return doc;
}

}  // namespace cylcalc
