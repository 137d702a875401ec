// Copyright 2026 The qudit-pulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Pulse schedule files: a JSON array, in time order, of
//   {"axis": "x" | "y", "levels": [j, k], "angle": <radians>}
// Angles are written with 17 significant digits so a save/load cycle is exact.

#ifndef QUDIT_PULSE_SCHEDULE_IO_HPP
#define QUDIT_PULSE_SCHEDULE_IO_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "qudit_pulse/pulse.hpp"

namespace qudit_pulse {

inline std::string format_angle(double angle) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", angle);
    return buf;
}

inline std::string schedule_to_string(const PulseSchedule &s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Pulse &p = s[i];
        os << (i ? ",\n " : "\n ") << "{\"axis\": \"" << (p.axis() == Axis::X ? "x" : "y")
           << "\", \"levels\": [" << p.low() << ", " << p.high()
           << "], \"angle\": " << format_angle(p.angle()) << "}";
    }
    os << (s.empty() ? "]" : "\n]") << "\n";
    return os.str();
}

inline nlohmann::json schedule_to_json(const PulseSchedule &s) {
    return nlohmann::json::parse(schedule_to_string(s));
}

inline PulseSchedule schedule_from_json(const nlohmann::json &doc) {
    auto malformed = [](const std::string &why) {
        throw Error(ErrorCode::MalformedJson, "malformed schedule: " + why);
    };
    if (!doc.is_array()) malformed("top level must be an array");
    PulseSchedule out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const nlohmann::json &item = doc[i];
        const std::string where = "pulse " + std::to_string(i);
        if (!item.is_object()) malformed(where + " is not an object");
        if (!item.contains("axis") || !item["axis"].is_string())
            malformed(where + ": missing string field 'axis'");
        if (!item.contains("levels") || !item["levels"].is_array() || item["levels"].size() != 2)
            malformed(where + ": 'levels' must be a two-element array");
        if (!item.contains("angle") || !item["angle"].is_number())
            malformed(where + ": missing numeric field 'angle'");
        for (const auto &lv : item["levels"])
            if (!lv.is_number_integer()) malformed(where + ": levels must be integers");

        const std::string axis = item["axis"].get<std::string>();
        Axis a;
        if (axis == "x" || axis == "X") a = Axis::X;
        else if (axis == "y" || axis == "Y") a = Axis::Y;
        else throw Error(ErrorCode::UnknownAxis, where + ": unknown axis '" + axis + "'");

        const auto j = item["levels"][0].get<long long>();
        const auto k = item["levels"][1].get<long long>();
        if (j < 0 || j > 3 || k < 0 || k > 3)
            throw Error(ErrorCode::LevelsOutOfRange, where + ": levels must lie in 0..3");
        if (j == k)
            throw Error(ErrorCode::DegenerateTransition, where + ": levels must be distinct");
        out.push_back(Pulse::make(a, static_cast<int>(j), static_cast<int>(k),
                                  item["angle"].get<double>()));
    }
    return out;
}

inline PulseSchedule schedule_from_string(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::MalformedJson, std::string("malformed schedule: ") + e.what());
    }
    return schedule_from_json(doc);
}

/// Reads a schedule file; with `lower` set, Y pulses are replaced by their
/// X-pulse lowering using that ancilla policy.
inline PulseSchedule load_schedule(const std::string &path,
                                   std::optional<AncillaPolicy> lower = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open schedule file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    PulseSchedule s = schedule_from_string(buf.str());
    return lower ? lower_schedule(s, *lower) : s;
}

inline void save_schedule(const PulseSchedule &s, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write schedule file '" + path + "'");
    out << schedule_to_string(s);
    if (!out) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_SCHEDULE_IO_HPP
