#include "kufam/set_family.hpp"

#include <algorithm>
#include <optional>

#include "kufam/errors.hpp"

namespace kufam {

namespace {

// Memory guard for the bitset representation; family files label elements
// with small integers in practice.
constexpr std::uint64_t kMaxElement = 1u << 20;

struct HeaderValues {
    std::optional<std::uint32_t> s;
    std::optional<std::uint32_t> n;
};

std::string_view strip_comment(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    return line;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line_no) {
    if (token.empty()) throw ParseError("empty token", line_no);
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            throw ParseError("non-integer token '" + std::string(token) + "'", line_no);
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > kMaxElement)
            throw ParseError("value '" + std::string(token) + "' exceeds the supported range",
                             line_no);
    }
    return value;
}

HeaderValues parse_header(std::string_view line, std::size_t line_no) {
    HeaderValues header;
    for (std::string_view token : split_tokens(line.substr(2))) {
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos)
            throw FormatError("malformed header token '" + std::string(token) + "'");
        const std::string_view key = token.substr(0, eq);
        const std::uint64_t value = parse_uint(token.substr(eq + 1), line_no);
        if (key == "s") {
            if (header.s) throw FormatError("duplicate s in header");
            header.s = static_cast<std::uint32_t>(value);
        } else if (key == "n") {
            if (header.n) throw FormatError("duplicate n in header");
            header.n = static_cast<std::uint32_t>(value);
        } else {
            throw FormatError("unknown header key '" + std::string(key) + "'");
        }
    }
    if (header.s && *header.s == 0) throw FormatError("header s must be positive");
    if (header.n && *header.n == 0) throw FormatError("header n must be positive");
    return header;
}

}  // namespace

SetFamily::SetFamily(std::uint32_t s, std::uint32_t n, std::vector<MemberSet> members)
    : s_(s), n_(n), members_(std::move(members)) {
    if (s_ == 0) throw DomainError("uniformity s must be positive");
    if (n_ == 0) throw DomainError("ground-set size n must be positive");
    for (const MemberSet& m : members_) {
        if (m.size() != s_)
            throw DomainError("member " + format_member(m) + " has size " +
                              std::to_string(m.size()) + ", expected " + std::to_string(s_));
        if (!m.empty() && m.max_element() >= n_)
            throw DomainError("member " + format_member(m) + " exceeds ground set [0," +
                              std::to_string(n_) + ")");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::subfamily(std::span<const std::uint32_t> indices) const {
    std::vector<MemberSet> picked;
    picked.reserve(indices.size());
    for (std::uint32_t i : indices) {
        if (i >= members_.size())
            throw DomainError("subfamily index " + std::to_string(i) + " out of range");
        picked.push_back(members_[i]);
    }
    return SetFamily(s_, n_, std::move(picked));
}

SetFamily parse_family(std::string_view text) {
    HeaderValues header;
    bool saw_header = false;
    bool saw_member = false;
    std::optional<std::uint32_t> inferred_s;
    std::uint32_t max_element = 0;
    std::vector<MemberSet> members;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::string_view line = strip_comment(raw);
        if (line.empty()) continue;

        if (line.substr(0, 2) == "%%") {
            if (saw_header || saw_member)
                throw FormatError("header must be the first content line");
            header = parse_header(line, line_no);
            saw_header = true;
            continue;
        }

        const std::vector<std::string_view> tokens = split_tokens(line);
        const std::uint32_t expected =
            header.s ? *header.s : inferred_s.value_or(static_cast<std::uint32_t>(tokens.size()));
        if (tokens.size() != expected)
            throw UniformityError("member has " + std::to_string(tokens.size()) +
                                      " elements, expected " + std::to_string(expected),
                                  line_no);
        if (!inferred_s) inferred_s = expected;

        std::vector<ElementId> elems;
        elems.reserve(tokens.size());
        for (std::string_view t : tokens)
            elems.push_back(static_cast<ElementId>(parse_uint(t, line_no)));

        MemberSet m((std::span<const ElementId>(elems)));
        if (m.size() != tokens.size())
            throw ParseError("duplicate element within member", line_no);
        if (header.n && !m.empty() && m.max_element() >= *header.n)
            throw FormatError("element " + std::to_string(m.max_element()) +
                              " on line " + std::to_string(line_no) +
                              " exceeds header n=" + std::to_string(*header.n));
        if (!m.empty()) max_element = std::max(max_element, m.max_element());
        members.push_back(std::move(m));
        saw_member = true;
    }

    if (!saw_member) {
        if (!header.s)
            throw FormatError("empty family requires a '%% s=<int> n=<int>' header");
        return SetFamily(*header.s, header.n.value_or(*header.s), {});
    }

    const std::uint32_t s = header.s ? *header.s : *inferred_s;
    const std::uint32_t n = header.n ? *header.n : max_element + 1;
    return SetFamily(s, n, std::move(members));
}

std::string serialize_family(const SetFamily& family) {
    std::uint32_t max_element = 0;
    for (const MemberSet& m : family.members())
        max_element = std::max(max_element, m.max_element());

    std::string out;
    // Header only when re-parsing would infer different s/n.
    if (family.empty() || family.ground_size() != max_element + 1) {
        out += "%% s=" + std::to_string(family.uniformity()) +
               " n=" + std::to_string(family.ground_size()) + "\n";
    }
    for (const MemberSet& m : family.members()) {
        bool sep = false;
        for (ElementId e : m.elements()) {
            if (sep) out += ' ';
            out += std::to_string(e);
            sep = true;
        }
        out += '\n';
    }
    return out;
}

}  // namespace kufam
