#pragma once

#include "lcmsim/engine.hpp"

namespace lcmsim {

/// Line-delimited text form of a trace: a header (scenario echo,
/// model, palette, schedule) followed by one record per event, all
/// rationals as "num/den". Serialization is canonical: parsing and
/// re-serializing a trace reproduces it byte for byte.
std::string serialize_trace(const Trace& trace);
Trace parse_trace(const std::string& text);

std::string serialize_frame(const FrameChoice& frame);
FrameChoice parse_frame(const std::string& s);
std::string serialize_profile(const ProgressProfile& p);
ProgressProfile parse_profile(const std::string& s);

void save_trace(const Trace& trace, const std::string& path);
Trace load_trace(const std::string& path);

}  // namespace lcmsim
