#include "sullivan/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace sullivan {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Recursive-descent parser over one expression. Columns are reported 1-based
/// relative to the start of the enclosing line.
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const std::vector<std::string>& names, std::size_t line,
                     std::size_t column_offset)
        : text_(text), names_(names), line_(line), column_offset_(column_offset) {}

    Element parse() {
        skip_space();
        if (at_end()) fail("expected an expression");
        Element out;
        Rational sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1 : 1;
            skip_space();
        }
        out += term() * sign;
        while (true) {
            skip_space();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
            sign = take() == '-' ? -1 : 1;
            skip_space();
            out += term() * sign;
        }
        return out;
    }

private:
    Element term() {
        if (at_end()) fail("expected a term");
        Rational coefficient = 1;
        bool has_coefficient = false;
        if (is_digit(peek())) {
            coefficient = rational();
            has_coefficient = true;
            skip_space();
        }
        if (at_end() || !is_ident_start(peek())) {
            if (!has_coefficient) fail("expected a number or generator name");
            return Element::scalar(coefficient);
        }
        Element mono = Element::scalar(coefficient);
        while (true) {
            mono = wedge(mono, Element::generator(generator()));
            skip_space();
            if (at_end() || peek() != '^') break;
            take();
            skip_space();
            if (at_end() || !is_ident_start(peek())) fail("expected a generator name after '^'");
        }
        return mono;
    }

    Rational rational() {
        const std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) take();
        std::string_view literal = text_.substr(start, pos_ - start);
        std::string den;
        if (!at_end() && peek() == '/') {
            take();
            const std::size_t den_start = pos_;
            while (!at_end() && is_digit(peek())) take();
            if (pos_ == den_start) fail("expected a denominator after '/'");
            den = std::string(text_.substr(den_start, pos_ - den_start));
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", den_start);
        }
        return Rational::parse(den.empty() ? std::string(literal) : std::string(literal) + "/" + den);
    }

    std::size_t generator() {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) take();
        const std::string name(text_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        fail("unknown generator '" + name + "'", start);
    }

    [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const {
        throw ParseError(line_, column_offset_ + at + 1, message);
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t line_;
    std::size_t column_offset_;
    std::size_t pos_ = 0;
};

struct Word {
    std::string_view text;
    std::size_t column;  // 0-based
};

std::optional<Word> next_word(std::string_view line, std::size_t& pos) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) return std::nullopt;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) && line[pos] != '=') ++pos;
    if (pos == start) ++pos;  // lone '='
    return Word{line.substr(start, pos - start), start};
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !is_ident_start(s.front())) return false;
    for (char c : s)
        if (!is_ident_char(c)) return false;
    return true;
}

}  // namespace

Dga parse_model(std::string_view text) {
    Presentation p;
    std::map<std::size_t, Element> differentials;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t pos = 0;
        auto keyword = next_word(line, pos);
        if (!keyword) continue;

        if (keyword->text == "generator") {
            bool any = false;
            while (auto name = next_word(line, pos)) {
                if (!is_identifier(name->text) || name->text == "d" || name->text == "generator")
                    throw ParseError(line_no, name->column + 1, "invalid generator name '" + std::string(name->text) + "'");
                for (const auto& existing : p.generators)
                    if (existing == name->text)
                        throw ParseError(line_no, name->column + 1, "generator '" + existing + "' declared twice");
                p.generators.emplace_back(name->text);
                any = true;
            }
            if (!any) throw ParseError(line_no, line.size() + 1, "expected a generator name");
        } else if (keyword->text == "d") {
            auto name = next_word(line, pos);
            if (!name) throw ParseError(line_no, line.size() + 1, "expected a generator name after 'd'");
            std::optional<std::size_t> index;
            for (std::size_t i = 0; i < p.generators.size(); ++i)
                if (p.generators[i] == name->text) index = i;
            if (!index)
                throw ParseError(line_no, name->column + 1, "undeclared generator '" + std::string(name->text) + "'");
            if (differentials.count(*index))
                throw ParseError(line_no, name->column + 1,
                                 "second differential for '" + std::string(name->text) + "'");
            auto eq = next_word(line, pos);
            if (!eq || eq->text != "=") throw ParseError(line_no, eq ? eq->column + 1 : line.size() + 1, "expected '='");
            differentials[*index] = ExpressionParser(line.substr(pos), p.generators, line_no, pos).parse();
        } else {
            throw ParseError(line_no, keyword->column + 1,
                             "expected 'generator' or 'd', found '" + std::string(keyword->text) + "'");
        }
    }

    p.differentials.resize(p.generators.size());
    for (auto& [index, image] : differentials) p.differentials[index] = std::move(image);
    return Dga(std::move(p));
}

Dga load_model(const std::string& source) {
    if (source == kHeisenbergModelName) return Dga::heisenberg();
    std::ifstream file(source, std::ios::binary);
    if (!file) throw InputError("cannot read model file '" + source + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_model(buffer.str());
}

Element parse_element(const Dga& dga, std::string_view text) {
    return ExpressionParser(text, dga.names(), 1, 0).parse();
}

}  // namespace sullivan
