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

#include "qudit_pulse/schedule_io.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qudit_pulse/gates.hpp"
#include "test_util.hpp"

using namespace qudit_pulse;

namespace {

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qudit_pulse_test_" + name)).string();
}

}  // namespace

TEST(schedule_io, round_trip_is_bit_exact) {
    for (GateName g : {GateName::ISWAP, GateName::H_A, GateName::H_B, GateName::H_AB}) {
        const PulseSchedule s = compile(g).schedule;
        EXPECT_EQ(schedule_from_string(schedule_to_string(s)), s);
    }
    const PulseSchedule odd = {Pulse::x(0, 1, 0.1 + 0.2), Pulse::y(2, 3, -1e-300),
                               Pulse::x(1, 3, 123456.789012345678)};
    EXPECT_EQ(schedule_from_string(schedule_to_string(odd)), odd);
}

TEST(schedule_io, json_layout) {
    const nlohmann::json j = schedule_to_json({Pulse::x(1, 2, 3 * std::numbers::pi)});
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["axis"], "x");
    EXPECT_EQ(j[0]["levels"], nlohmann::json::array({1, 2}));
    EXPECT_EQ(j[0]["angle"].get<double>(), 3 * std::numbers::pi);
    EXPECT_EQ(schedule_to_string({}), "[]\n");
}

TEST(schedule_io, errors) {
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "x", "levels": [2, 2], "angle": 1}])"),
                    ErrorCode::DegenerateTransition);
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "x", "levels": [0, 4], "angle": 1}])"),
                    ErrorCode::LevelsOutOfRange);
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "z", "levels": [0, 1], "angle": 1}])"),
                    ErrorCode::UnknownAxis);
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "x", "levels": [0, 1]})"),
                    ErrorCode::MalformedJson);
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "x", "levels": [0, 1]}])"),
                    ErrorCode::MalformedJson);
    EXPECT_QP_ERROR(schedule_from_string(R"({"axis": "x"})"), ErrorCode::MalformedJson);
    EXPECT_QP_ERROR(schedule_from_string(R"([{"axis": "x", "levels": [0.5, 1], "angle": 1}])"),
                    ErrorCode::MalformedJson);
    EXPECT_QP_ERROR(load_schedule(temp_path("does_not_exist.json")), ErrorCode::Io);
}

TEST(schedule_io, y_pulse_file_matches_direct_matrix) {
    const std::string path = temp_path("y_pulse.json");
    {
        std::ofstream out(path);
        out << R"([{"axis": "y", "levels": [0, 2], "angle": 0.7}, {"axis": "x", "levels": [1, 3], "angle": 1.1}])";
    }
    const PulseSchedule raw = load_schedule(path);
    const PulseSchedule lowered = load_schedule(path, AncillaPolicy::Lowest);
    std::filesystem::remove(path);
    EXPECT_FALSE(is_x_only(raw));
    EXPECT_TRUE(is_x_only(lowered));
    EXPECT_EQ(lowered.size(), 4u);
    const oracle::M4 want = oracle::rx_by_exponential(1, 3, 1.1) * oracle::ry_by_exponential(0, 2, 0.7);
    EXPECT_LT((schedule_unitary(lowered) - want).norm(), 1e-12);
    EXPECT_LT((schedule_unitary(raw) - want).norm(), 1e-12);
}

TEST(schedule_io, save_then_load) {
    const std::string path = temp_path("save.json");
    const PulseSchedule s = compile(GateName::H_B).schedule;
    save_schedule(s, path);
    EXPECT_EQ(load_schedule(path), s);
    std::filesystem::remove(path);
}
