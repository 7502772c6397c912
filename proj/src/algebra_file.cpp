#include "upsemi/algebra_file.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace upsemi {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ": " + message),
      line_(line)
{
}

namespace {

struct Line
{
    int number;
    std::string_view text;
};

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Non-empty, non-comment lines with 1-based numbering.
std::vector<Line> significant_lines(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        ++number;
        const std::string_view stripped = strip(raw);
        if (!stripped.empty() && stripped.front() != '#')
            lines.push_back({number, stripped});
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return lines;
}

int parse_int(std::string_view token, int line, const std::string& what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "malformed " + what + " '" + std::string(token) + "'");
    return value;
}

// "key: value" headers; the key is fixed, the value is a single integer.
int parse_header(const Line& line, std::string_view key)
{
    const std::string expected = std::string(key) + ": N";
    if (line.text.substr(0, key.size()) != key || line.text.size() <= key.size() ||
        line.text[key.size()] != ':')
        throw ParseError(line.number, "expected '" + expected + "' header");
    return parse_int(strip(line.text.substr(key.size() + 1)), line.number,
                     std::string(key) + " value");
}

CayleyTable parse_table(const std::vector<Line>& lines, std::size_t& cursor, int order,
                        int section_line)
{
    std::vector<ElementIndex> entries;
    entries.reserve(static_cast<std::size_t>(order) * order);
    for (int row = 0; row < order; ++row) {
        if (cursor >= lines.size())
            throw ParseError(lines.empty() ? section_line : lines.back().number,
                             "expected " + std::to_string(order) + " table rows, got " +
                                 std::to_string(row));
        const Line& line = lines[cursor++];
        std::istringstream stream{std::string(line.text)};
        std::string token;
        int count = 0;
        while (stream >> token) {
            const int value = parse_int(token, line.number, "table entry");
            if (value < 0 || value >= order)
                throw ParseError(line.number, "entry " + std::to_string(value) + " out of range");
            entries.push_back(ElementIndex(value));
            ++count;
        }
        if (count != order)
            throw ParseError(line.number, "expected " + std::to_string(order) +
                                              " entries per row, got " + std::to_string(count));
    }
    return CayleyTable(order, std::move(entries));
}

} // namespace

AlgebraFile parse_algebra_file(std::string_view text)
{
    const std::vector<Line> lines = significant_lines(text);
    std::size_t cursor = 0;

    const auto next_line = [&](const char* expectation) -> const Line& {
        if (cursor >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                             std::string("missing ") + expectation);
        return lines[cursor++];
    };

    const int order = parse_header(next_line("'order: N' header"), "order");
    if (order < 1 || order > max_order)
        throw ParseError(lines[cursor - 1].number,
                         "order " + std::to_string(order) + " outside supported range 1.." +
                             std::to_string(max_order));

    const Line& zero_line = next_line("'zero: K' header");
    const int zero = parse_header(zero_line, "zero");
    if (zero < 0 || zero >= order)
        throw ParseError(zero_line.number, "zero " + std::to_string(zero) + " out of range");

    const Line& dot_line = next_line("'dot:' section");
    if (dot_line.text != "dot:")
        throw ParseError(dot_line.number, "expected 'dot:' section");
    AlgebraFile file;
    file.order = order;
    file.zero = ElementIndex(zero);
    file.dot = parse_table(lines, cursor, order, dot_line.number);

    if (cursor < lines.size()) {
        const Line& star_line = lines[cursor++];
        if (star_line.text != "star:")
            throw ParseError(star_line.number, "expected 'star:' section or end of file");
        file.star = parse_table(lines, cursor, order, star_line.number);
        if (cursor < lines.size())
            throw ParseError(lines[cursor].number, "unexpected content after star table");
    }
    return file;
}

std::string format_algebra_file(const AlgebraFile& file)
{
    std::ostringstream out;
    out << "order: " << file.order << "\n";
    out << "zero: " << int(file.zero) << "\n";
    const auto write_table = [&](const CayleyTable& t) {
        for (int x = 0; x < t.order(); ++x) {
            for (int y = 0; y < t.order(); ++y)
                out << (y ? " " : "") << int(t.at(x, y));
            out << "\n";
        }
    };
    out << "dot:\n";
    write_table(file.dot);
    if (file.star) {
        out << "star:\n";
        write_table(*file.star);
    }
    return out.str();
}

} // namespace upsemi
