#include "toric/fan_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace toric {

namespace {

std::string kind_name(FanParseError::Kind kind) {
    return kind == FanParseError::Kind::Syntax ? "syntax error" : "semantic error";
}

std::string format(FanParseError::Kind kind, std::size_t line, const std::string& field, const std::string& msg) {
    std::string out = kind_name(kind);
    if (line) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " (" + field + ")";
    return out + ": " + msg;
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& field, const std::string& msg) {
    throw FanParseError(FanParseError::Kind::Syntax, line, field, msg);
}

[[noreturn]] void semantic(std::size_t line, const std::string& field, const std::string& msg) {
    throw FanParseError(FanParseError::Kind::Semantic, line, field, msg);
}

// "[a,b,...]" with whitespace already removed.
std::vector<Integer> parse_vector(const std::string& s, std::size_t line, const std::string& field) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') syntax(line, field, "expected [a,b,...], got '" + s + "'");
    std::vector<Integer> out;
    const std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Integer v;
        if (item.empty() || v.set_str(item, 10) != 0) syntax(line, field, "'" + item + "' is not an integer");
        out.push_back(v);
    }
    if (body.back() == ',') syntax(line, field, "trailing comma");
    return out;
}

struct Entry {
    std::vector<Integer> values;
    std::size_t line;
};

}  // namespace

FanParseError::FanParseError(Kind kind, std::size_t line, std::string field, const std::string& message)
    : InputError(format(kind, line, field, message), field), kind_(kind), line_(line) {}

Fan parse_fan_file(const std::string& text) {
    std::optional<std::size_t> rank;
    std::size_t rank_line = 0;
    std::optional<std::vector<Entry>> rays, cones;
    std::vector<Entry>* section = nullptr;
    std::string section_name;

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (line.front() != '[') {
            const auto colon = line.find(':');
            if (colon == std::string::npos) syntax(line_no, "", "expected 'key:' or a bracketed vector");
            const std::string key = line.substr(0, colon);
            std::string rest = line.substr(colon + 1);
            if (key == "rank") {
                if (rank) semantic(line_no, "rank", "duplicate field");
                long value = 0;
                try {
                    std::size_t used = 0;
                    value = std::stol(rest, &used);
                    if (used != rest.size()) throw std::invalid_argument(rest);
                } catch (const std::exception&) {
                    syntax(line_no, "rank", "'" + rest + "' is not an integer");
                }
                if (value <= 0) semantic(line_no, "rank", "rank must be positive");
                rank = static_cast<std::size_t>(value);
                rank_line = line_no;
                section = nullptr;
                continue;
            }
            if (key != "rays" && key != "max_cones") syntax(line_no, key, "unknown field '" + key + "'");
            auto& target = key == "rays" ? rays : cones;
            if (target) semantic(line_no, key, "duplicate field");
            target.emplace();
            section = &*target;
            section_name = key;
            line = rest;
            if (line.empty()) continue;
        }
        if (!section) syntax(line_no, "", "vector outside of a rays: or max_cones: section");
        // one or more vectors on this line
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto close = line.find(']', pos);
            if (close == std::string::npos) syntax(line_no, section_name, "unterminated vector");
            section->push_back({parse_vector(line.substr(pos, close - pos + 1), line_no, section_name), line_no});
            pos = close + 1;
            if (pos < line.size() && line[pos] == ',') ++pos;
        }
    }

    if (!rank) semantic(0, "rank", "missing field 'rank'");
    if (!rays) semantic(0, "rays", "missing field 'rays'");
    if (!cones) semantic(0, "max_cones", "missing field 'max_cones'");
    if (rays->empty()) semantic(0, "rays", "no rays listed");
    if (cones->empty()) semantic(0, "max_cones", "no maximal cones listed");
    if (*rank > kMaxRank)
        semantic(rank_line, "rank", "rank " + std::to_string(*rank) + " exceeds " + std::to_string(kMaxRank));

    std::vector<IntVector> ray_vectors;
    for (const auto& e : *rays) {
        if (e.values.size() != *rank)
            semantic(e.line, "rays",
                     "ray has length " + std::to_string(e.values.size()) + ", expected " + std::to_string(*rank));
        if (is_zero(e.values)) semantic(e.line, "rays", "zero ray");
        if (content(e.values) != 1) semantic(e.line, "rays", "ray is not primitive");
        ray_vectors.push_back(e.values);
    }
    std::vector<std::vector<std::size_t>> cone_indices;
    for (const auto& e : *cones) {
        if (e.values.empty()) semantic(e.line, "max_cones", "empty cone");
        std::vector<std::size_t> idx;
        for (const auto& v : e.values) {
            if (v < 0 || v >= static_cast<long>(ray_vectors.size()))
                semantic(e.line, "max_cones", "ray index " + v.get_str() + " out of range");
            idx.push_back(v.get_ui());
        }
        cone_indices.push_back(std::move(idx));
    }
    try {
        return Fan(*rank, std::move(ray_vectors), std::move(cone_indices));
    } catch (const FanParseError&) {
        throw;
    } catch (const InputError& e) {
        semantic(0, e.field(), e.what());
    }
}

std::string serialize_fan(const Fan& fan) {
    std::ostringstream out;
    out << "rank: " << fan.rank() << "\nrays:\n";
    for (const auto& r : fan.rays()) {
        out << "  [";
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ", " : "") << r[i];
        out << "]\n";
    }
    out << "max_cones:\n";
    for (const auto& c : fan.max_cones()) {
        out << "  [";
        for (std::size_t i = 0; i < c.rays.size(); ++i) out << (i ? ", " : "") << c.rays[i];
        out << "]\n";
    }
    return out.str();
}

}  // namespace toric
