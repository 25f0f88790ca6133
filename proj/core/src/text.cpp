#include "partdeck/text.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace partdeck {

namespace {

bool blank(std::string_view s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    const std::string_view body = trimmed(text);
    if (body == "-") return {};
    if (body.empty())
        throw ParseError("empty partition text; the empty partition is written \"-\"");

    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() &&
               std::isspace(static_cast<unsigned char>(body[pos])))
            ++pos;
        if (pos == body.size()) break;
        std::size_t end = pos;
        while (end < body.size() &&
               !std::isspace(static_cast<unsigned char>(body[end])))
            ++end;
        const std::string_view token = body.substr(pos, end - pos);
        std::int64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("not an integer part: \"" + std::string(token) + "\"");
        values.push_back(value);
        pos = end;
    }
    return normalize(values);
}

DeletionDeck parse_deck(std::istream& in, std::uint64_t k, std::ostream* diagnostics) {
    std::vector<Partition> members;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view body = trimmed(line);
        if (body.empty() || blank(body) || body.front() == '#') continue;
        Partition p = parse_partition(body);
        bool duplicate = false;
        for (const auto& m : members)
            if (m == p) { duplicate = true; break; }
        if (duplicate) {
            if (diagnostics)
                *diagnostics << "warning: duplicate deck member ignored: "
                             << to_text(p) << '\n';
            continue;
        }
        members.push_back(std::move(p));
    }
    return DeletionDeck(k, std::move(members));
}

std::string render_ferrers(const Partition& p) {
    if (p.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += '\n';
        out.append(static_cast<std::size_t>(p.parts()[i]), '#');
    }
    return out;
}

}  // namespace partdeck
