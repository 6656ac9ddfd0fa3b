#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcsim/domain.hpp"

namespace fcsim {

struct EventLogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kEventLogSchema = "fcsim-events/v1";

// Newline-delimited TSV with a versioned header line. Lossless round-trip.
void write_event_log(std::span<const ImpressionEvent> events, const std::string& path);
std::vector<ImpressionEvent> read_event_log(const std::string& path);

std::string format_event(const ImpressionEvent& ev);
ImpressionEvent parse_event(const std::string& line, size_t line_no);

// Content metadata sidecar, enough to rebuild a full ledger from the log.
struct ContentMeta {
    uint32_t id = 0;
    std::string genre;
    Tick created_at = 0;
    double duration_s = 0.0;
    uint64_t final_views = 0;
    std::optional<Tick> min_views_met_at;
    Stage stage = Stage::Early;
};

inline constexpr const char* kContentsSchema = "fcsim-contents/v1";

void write_contents_table(std::span<const ContentState> contents,
                          std::span<const GenreSpec> genres, const std::string& path);
std::vector<ContentMeta> read_contents_table(const std::string& path);

}  // namespace fcsim
