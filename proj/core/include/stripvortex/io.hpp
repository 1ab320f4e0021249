#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stripvortex/config.hpp"
#include "stripvortex/geometry.hpp"

namespace stripvortex {

struct FrameRecord;

/// Parse and fully validate a JSON configuration.  Unknown keys are rejected;
/// errors name the offending path ("$.contours[0].radius: ...").
SimConfig parse_config(std::string_view text);

/// Canonical JSON for a config; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& config);

/// Instantiate the preset contours at the configured node count.
PatchSystem build_initial_system(const SimConfig& config);

/// JSON Lines, one frame per line, numbers with 17 significant digits so
/// 64-bit floats round-trip exactly.
void write_frames(const std::vector<FrameRecord>& frames, std::ostream& os);
void write_frames(const std::vector<FrameRecord>& frames, const std::string& path);

std::vector<FrameRecord> read_frames(std::istream& is);
std::vector<FrameRecord> read_frames_file(const std::string& path);

/// Entry point behind the command-line tool; returns the process exit code
/// (0 success, 1 usage/config error, 2 runtime breakdown).
int cli_main(int argc, char** argv);

} // namespace stripvortex
