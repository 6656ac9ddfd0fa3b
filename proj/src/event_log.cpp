#include "fcsim/event_log.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fcsim {

namespace {

constexpr const char* kEventColumns =
    "tick\tseq\tuser\tcontent\tsurface\tposition\tfresh\tstage\tplayed\twatch_time_s\t"
    "outcome\tengaged\tarm";

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

[[noreturn]] void bad_record(size_t line_no, const std::string& why) {
    throw EventLogError("event log: malformed record at line " + std::to_string(line_no) +
                        ": " + why);
}

template <typename T>
T parse_int(const std::string& s, size_t line_no, const char* field) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        bad_record(line_no, std::string("bad integer in field '") + field + "'");
    return v;
}

double parse_double(const std::string& s, size_t line_no, const char* field) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        bad_record(line_no, std::string("bad number in field '") + field + "'");
    }
}

}  // namespace

std::string format_event(const ImpressionEvent& ev) {
    std::ostringstream os;
    os << ev.tick << '\t' << ev.seq << '\t' << ev.user_id << '\t' << ev.content_id << '\t'
       << to_string(ev.surface) << '\t' << ev.position << '\t' << (ev.fresh ? 1 : 0) << '\t'
       << to_string(ev.stage) << '\t' << (ev.played ? 1 : 0) << '\t'
       << format_double(ev.watch_time_s) << '\t'
       << (ev.outcome ? to_string(*ev.outcome) : "-") << '\t' << (ev.engaged ? 1 : 0) << '\t'
       << ev.arm;
    return os.str();
}

ImpressionEvent parse_event(const std::string& line, size_t line_no) {
    auto fields = split_tabs(line);
    if (fields.size() != 13)
        bad_record(line_no, "expected 13 fields, got " + std::to_string(fields.size()));
    ImpressionEvent ev;
    ev.tick = parse_int<Tick>(fields[0], line_no, "tick");
    ev.seq = parse_int<uint64_t>(fields[1], line_no, "seq");
    ev.user_id = parse_int<uint32_t>(fields[2], line_no, "user");
    ev.content_id = parse_int<uint32_t>(fields[3], line_no, "content");
    try {
        ev.surface = surface_from_string(fields[4]);
        ev.stage = stage_from_string(fields[7]);
    } catch (const std::invalid_argument& e) {
        bad_record(line_no, e.what());
    }
    ev.position = parse_int<uint16_t>(fields[5], line_no, "position");
    ev.fresh = parse_int<int>(fields[6], line_no, "fresh") != 0;
    ev.played = parse_int<int>(fields[8], line_no, "played") != 0;
    ev.watch_time_s = parse_double(fields[9], line_no, "watch_time_s");
    if (fields[10] != "-") {
        try {
            ev.outcome = outcome_from_string(fields[10]);
        } catch (const std::invalid_argument& e) {
            bad_record(line_no, e.what());
        }
    }
    ev.engaged = parse_int<int>(fields[11], line_no, "engaged") != 0;
    ev.arm = parse_int<int16_t>(fields[12], line_no, "arm");
    if (ev.outcome.has_value() != ev.played)
        bad_record(line_no, "outcome must be present iff played");
    return ev;
}

void write_event_log(std::span<const ImpressionEvent> events, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw EventLogError("event log: cannot open for writing: " + path);
    out << '#' << kEventLogSchema << '\t' << kEventColumns << '\n';
    for (const auto& ev : events) out << format_event(ev) << '\n';
    if (!out) throw EventLogError("event log: write failed: " + path);
}

std::vector<ImpressionEvent> read_event_log(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EventLogError("event log: cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();

    if (data.empty()) throw EventLogError("event log: empty file: " + path);
    if (data.back() != '\n')
        throw EventLogError("event log: truncated final record at byte offset " +
                            std::to_string(data.size()) + " in " + path);

    std::vector<ImpressionEvent> events;
    size_t start = 0, line_no = 0;
    while (start < data.size()) {
        const size_t end = data.find('\n', start);
        const std::string line = data.substr(start, end - start);
        ++line_no;
        if (line_no == 1) {
            const std::string expected = std::string("#") + kEventLogSchema + '\t' + kEventColumns;
            if (line != expected) {
                if (line.starts_with("#fcsim-events/"))
                    throw EventLogError("event log: schema version mismatch, expected " +
                                        std::string(kEventLogSchema));
                throw EventLogError("event log: missing schema header");
            }
        } else {
            events.push_back(parse_event(line, line_no));
        }
        start = end + 1;
    }
    return events;
}

void write_contents_table(std::span<const ContentState> contents,
                          std::span<const GenreSpec> genres, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw EventLogError("contents table: cannot open for writing: " + path);
    out << '#' << kContentsSchema
        << "\tid\tgenre\tcreated_at\tduration_s\tfinal_views\tmin_views_met_at\tstage\n";
    for (const auto& c : contents) {
        out << c.id << '\t' << genres[c.genre].name << '\t' << c.created_at << '\t'
            << format_double(c.duration_s) << '\t' << c.views << '\t';
        if (c.min_views_met_at) out << *c.min_views_met_at;
        else out << '-';
        out << '\t' << to_string(c.stage) << '\n';
    }
    if (!out) throw EventLogError("contents table: write failed: " + path);
}

std::vector<ContentMeta> read_contents_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EventLogError("contents table: cannot open: " + path);
    std::vector<ContentMeta> rows;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (!line.starts_with(std::string("#") + kContentsSchema))
                throw EventLogError("contents table: missing or mismatched schema header");
            continue;
        }
        auto fields = split_tabs(line);
        if (fields.size() != 7)
            throw EventLogError("contents table: malformed record at line " +
                                std::to_string(line_no));
        ContentMeta m;
        m.id = parse_int<uint32_t>(fields[0], line_no, "id");
        m.genre = fields[1];
        m.created_at = parse_int<Tick>(fields[2], line_no, "created_at");
        m.duration_s = parse_double(fields[3], line_no, "duration_s");
        m.final_views = parse_int<uint64_t>(fields[4], line_no, "final_views");
        if (fields[5] != "-") m.min_views_met_at = parse_int<Tick>(fields[5], line_no, "min_views_met_at");
        m.stage = stage_from_string(fields[6]);
        rows.push_back(std::move(m));
    }
    return rows;
}

}  // namespace fcsim
