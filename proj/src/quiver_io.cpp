#include "quiverlab/quiver_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace quiverlab {
namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> split(std::string_view line, int offset) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({std::string(line.substr(start, i - start)), offset + static_cast<int>(start) + 1});
    }
    return out;
}

struct RelationLine {
    int line;
    std::vector<Token> tokens;
};

[[noreturn]] void fail(int line, int column, const std::string& what) { throw ParseError(line, column, what); }

Relation parse_relation(const Quiver& q, const RelationLine& rl) {
    std::vector<Term> terms;
    Rational sign(1);
    Rational coefficient(1);
    bool have_coefficient = false;
    std::vector<int> word;
    int word_column = 0;

    auto flush = [&](int column) {
        if (word.empty()) fail(rl.line, column, "expected a path word");
        try {
            terms.push_back({sign * coefficient, Path::from_arrows(q, word)});
        } catch (const Error& e) {
            fail(rl.line, word_column, e.what());
        }
        word.clear();
        sign = Rational(1);
        coefficient = Rational(1);
        have_coefficient = false;
    };

    for (const Token& tok : rl.tokens) {
        std::string text = tok.text;
        int column = tok.column;
        if (text == "+" || text == "-") {
            if (!word.empty()) {
                flush(column);
            } else if (!terms.empty() || have_coefficient) {
                fail(rl.line, column, "operator without a preceding term");
            }
            if (text == "-") sign = -sign;
            continue;
        }
        if (word.empty() && !q.find_arrow(text) && (text[0] == '+' || text[0] == '-')) {
            if (text[0] == '-') sign = -sign;
            text.erase(0, 1);
            ++column;
        }
        if (const auto star = text.find('*'); star != std::string::npos && word.empty() && !q.find_arrow(text)) {
            try {
                coefficient = Rational::parse(text.substr(0, star));
            } catch (const std::exception&) {
                fail(rl.line, column, "bad coefficient '" + text.substr(0, star) + "'");
            }
            if (coefficient.is_zero()) fail(rl.line, column, "zero coefficient");
            have_coefficient = true;
            column += static_cast<int>(star) + 1;
            text.erase(0, star + 1);
            if (text.empty()) continue;
        }
        const auto arrow = q.find_arrow(text);
        if (!arrow) throw ParseError(rl.line, column, "unknown arrow '" + text + "'");
        if (word.empty()) word_column = column;
        word.push_back(*arrow);
    }
    flush(rl.tokens.empty() ? 1 : rl.tokens.back().column);
    try {
        return Relation(std::move(terms));
    } catch (const Error& e) {
        throw Error(e.code(), "line " + std::to_string(rl.line) + ": " + e.what());
    }
}

std::string term_text(const Quiver& q, const Term& t, bool first) {
    std::string out;
    const bool neg = t.coefficient.sign() < 0;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    const Rational mag = abs(t.coefficient);
    if (!mag.is_one()) out += mag.to_string() + "*";
    return out + t.path.to_string(q);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, std::vector<Token>>> arrow_lines;
    std::vector<RelationLine> relation_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto colon = raw.find(':');
        if (colon == std::string::npos) fail(line_no, static_cast<int>(first) + 1, "expected 'keyword:'");
        std::string keyword = raw.substr(first, colon - first);
        while (!keyword.empty() && std::isspace(static_cast<unsigned char>(keyword.back()))) keyword.pop_back();
        auto tokens = split(std::string_view(raw).substr(colon + 1), static_cast<int>(colon) + 1);
        if (keyword == "vertices") {
            for (const Token& t : tokens) {
                if (std::find(vertices.begin(), vertices.end(), t.text) != vertices.end())
                    fail(line_no, t.column, "vertex '" + t.text + "' declared twice");
                vertices.push_back(t.text);
            }
        } else if (keyword == "arrow") {
            if (tokens.size() != 3)
                fail(line_no, tokens.empty() ? static_cast<int>(colon) + 2 : tokens.front().column,
                     "arrow line needs: name source target");
            arrow_lines.emplace_back(line_no, std::move(tokens));
        } else if (keyword == "relation") {
            if (tokens.empty()) fail(line_no, static_cast<int>(colon) + 2, "empty relation");
            relation_lines.push_back({line_no, std::move(tokens)});
        } else {
            fail(line_no, static_cast<int>(first) + 1, "unknown keyword '" + keyword + "'");
        }
    }

    std::vector<Arrow> arrows;
    std::set<std::string> arrow_names;
    for (const auto& [line, toks] : arrow_lines) {
        auto find = [&](const Token& t) {
            auto it = std::find(vertices.begin(), vertices.end(), t.text);
            if (it == vertices.end()) fail(line, t.column, "unknown vertex '" + t.text + "'");
            return static_cast<int>(it - vertices.begin());
        };
        if (!arrow_names.insert(toks[0].text).second)
            fail(line, toks[0].column, "arrow '" + toks[0].text + "' declared twice");
        for (char c : toks[0].text) {
            if (c == '*' || c == '+') fail(line, toks[0].column, "arrow names may not contain '*' or '+'");
        }
        arrows.push_back({toks[0].text, find(toks[1]), find(toks[2])});
    }
    Quiver quiver(std::move(vertices), std::move(arrows));

    std::vector<Relation> relations;
    for (const auto& rl : relation_lines) relations.push_back(parse_relation(quiver, rl));
    return Presentation(std::move(quiver), std::move(relations));
}

std::string serialize(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    std::string out = "vertices:";
    for (const auto& v : q.vertices()) out += " " + v;
    out += "\n";
    for (const Arrow& a : q.arrows()) out += "arrow: " + a.name + " " + q.vertex(a.source) + " " + q.vertex(a.target) + "\n";
    for (const Relation& r : pres.relations()) {
        out += "relation: ";
        for (size_t i = 0; i < r.terms().size(); ++i) out += term_text(q, r.terms()[i], i == 0);
        out += "\n";
    }
    return out;
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

}  // namespace quiverlab
