#ifndef MAGT_LEVEL_IO_HPP
#define MAGT_LEVEL_IO_HPP

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "magt/level.hpp"

namespace magt {

// LEVEL v1 text format (line-oriented, ASCII, LF):
//
//   LEVEL v1
//   size: <W> <H>
//   grid:
//   <H rows of W chars, '#' wall / '.' floor>
//   door <id> <x> <y> <points>
//   button <id> <x> <y>
//   connect <button-id> <door-id>[,<door-id>...]
//   agent <x> <y>
//
// Unknown directives are errors. Blank lines are permitted between
// directives. Coordinates are 0-based, x rightward, y downward.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

inline Level load_level(const std::string& text) {
    using detail::parse_int;
    using detail::split_ws;

    std::vector<std::string_view> lines;
    {
        size_t start = 0;
        std::string_view sv(text);
        while (start <= sv.size()) {
            size_t nl = sv.find('\n', start);
            if (nl == std::string_view::npos) {
                lines.push_back(sv.substr(start));
                break;
            }
            lines.push_back(sv.substr(start, nl - start));
            start = nl + 1;
        }
    }

    auto syntax = [](int line, int col, const std::string& msg) {
        return LevelError(LevelErrorCode::SyntaxError, msg, line, col);
    };

    size_t ln = 0;  // 0-based index into lines
    auto skip_blank = [&] {
        while (ln < lines.size() && split_ws(lines[ln]).empty()) ++ln;
    };

    skip_blank();
    if (ln >= lines.size() || lines[ln] != "LEVEL v1") {
        throw syntax(static_cast<int>(ln + 1), 1, "expected 'LEVEL v1' header");
    }
    ++ln;

    skip_blank();
    Level level;
    {
        if (ln >= lines.size()) throw syntax(static_cast<int>(ln + 1), 1, "expected 'size: <W> <H>'");
        auto toks = split_ws(lines[ln]);
        if (toks.size() != 3 || toks[0] != "size:" || !parse_int(toks[1], level.width) ||
            !parse_int(toks[2], level.height) || level.width <= 0 || level.height <= 0) {
            throw syntax(static_cast<int>(ln + 1), 1, "expected 'size: <W> <H>' with positive dimensions");
        }
        ++ln;
    }

    skip_blank();
    if (ln >= lines.size() || split_ws(lines[ln]).size() != 1 || split_ws(lines[ln])[0] != "grid:") {
        throw syntax(static_cast<int>(ln + 1), 1, "expected 'grid:'");
    }
    ++ln;

    level.cells.assign(static_cast<size_t>(level.width) * level.height, CellKind::Wall);
    for (int y = 0; y < level.height; ++y, ++ln) {
        if (ln >= lines.size()) throw syntax(static_cast<int>(ln + 1), 1, "grid row missing");
        std::string_view row = lines[ln];
        if (static_cast<int>(row.size()) != level.width) {
            throw syntax(static_cast<int>(ln + 1), static_cast<int>(row.size()) + 1,
                         "grid row has wrong length");
        }
        for (int x = 0; x < level.width; ++x) {
            if (row[x] == '#') {
                level.set_cell({x, y}, CellKind::Wall);
            } else if (row[x] == '.') {
                level.set_cell({x, y}, CellKind::Floor);
            } else {
                throw syntax(static_cast<int>(ln + 1), x + 1, "grid cell must be '#' or '.'");
            }
        }
    }

    auto add_object = [&](GameObject obj, int line) {
        if (level.objects.count(obj.id)) {
            throw LevelError(LevelErrorCode::DuplicateId, "duplicate object id '" + obj.id + "'", line, 1);
        }
        level.objects.emplace(obj.id, std::move(obj));
    };

    for (; ln < lines.size(); ++ln) {
        auto toks = split_ws(lines[ln]);
        if (toks.empty()) continue;
        const int line_no = static_cast<int>(ln + 1);
        if (toks[0] == "door") {
            GameObject obj;
            obj.kind = ObjectKind::Door;
            int x, y, pts;
            if (toks.size() != 5 || !parse_int(toks[2], x) || !parse_int(toks[3], y) ||
                !parse_int(toks[4], pts) || pts < 0) {
                throw syntax(line_no, 1, "expected 'door <id> <x> <y> <points>'");
            }
            obj.id = std::string(toks[1]);
            obj.position = {x, y};
            obj.points = pts;
            add_object(std::move(obj), line_no);
        } else if (toks[0] == "button") {
            GameObject obj;
            obj.kind = ObjectKind::Button;
            int x, y;
            if (toks.size() != 4 || !parse_int(toks[2], x) || !parse_int(toks[3], y)) {
                throw syntax(line_no, 1, "expected 'button <id> <x> <y>'");
            }
            obj.id = std::string(toks[1]);
            obj.position = {x, y};
            add_object(std::move(obj), line_no);
        } else if (toks[0] == "connect") {
            if (toks.size() != 3) {
                throw syntax(line_no, 1, "expected 'connect <button-id> <door-id>[,<door-id>...]'");
            }
            const std::string bid(toks[1]);
            const GameObject* b = level.find(bid);
            if (!b || b->kind != ObjectKind::Button) {
                throw LevelError(LevelErrorCode::UnknownButtonId, "unknown button id '" + bid + "'", line_no, 1);
            }
            std::string_view list = toks[2];
            size_t pos = 0;
            while (pos <= list.size()) {
                size_t comma = list.find(',', pos);
                std::string_view did_sv =
                    comma == std::string_view::npos ? list.substr(pos) : list.substr(pos, comma - pos);
                if (did_sv.empty()) throw syntax(line_no, 1, "empty door id in connect list");
                const std::string did(did_sv);
                const GameObject* d = level.find(did);
                if (!d || d->kind != ObjectKind::Door) {
                    throw LevelError(LevelErrorCode::UnknownDoorId, "unknown door id '" + did + "'", line_no, 1);
                }
                level.connections[bid].insert(did);
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        } else if (toks[0] == "agent") {
            int x, y;
            if (toks.size() != 3 || !parse_int(toks[1], x) || !parse_int(toks[2], y)) {
                throw syntax(line_no, 1, "expected 'agent <x> <y>'");
            }
            level.spawn_points.push_back({x, y});
        } else {
            throw syntax(line_no, 1, "unknown directive '" + std::string(toks[0]) + "'");
        }
    }

    level.validate();
    return level;
}

// Canonical text form: objects sorted by id, connect lists sorted, spawn
// points in declaration order. serialize_level(load_level(t)) reparses to an
// equal Level, and the output is byte-stable across runs.
inline std::string serialize_level(const Level& level) {
    std::ostringstream out;
    out << "LEVEL v1\n";
    out << "size: " << level.width << ' ' << level.height << '\n';
    out << "grid:\n";
    for (int y = 0; y < level.height; ++y) {
        for (int x = 0; x < level.width; ++x) {
            out << (level.cell({x, y}) == CellKind::Wall ? '#' : '.');
        }
        out << '\n';
    }
    for (const auto& [id, obj] : level.objects) {
        if (obj.kind != ObjectKind::Door) continue;
        out << "door " << id << ' ' << obj.position.x << ' ' << obj.position.y << ' ' << obj.points << '\n';
    }
    for (const auto& [id, obj] : level.objects) {
        if (obj.kind != ObjectKind::Button) continue;
        out << "button " << id << ' ' << obj.position.x << ' ' << obj.position.y << '\n';
    }
    for (const auto& [bid, doors] : level.connections) {
        if (doors.empty()) continue;
        out << "connect " << bid << ' ';
        bool first = true;
        for (const auto& did : doors) {
            if (!first) out << ',';
            out << did;
            first = false;
        }
        out << '\n';
    }
    for (const Vec2& s : level.spawn_points) {
        out << "agent " << s.x << ' ' << s.y << '\n';
    }
    return out.str();
}

}  // namespace magt

#endif  // MAGT_LEVEL_IO_HPP
