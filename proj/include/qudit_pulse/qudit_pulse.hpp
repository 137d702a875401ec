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

#ifndef QUDIT_PULSE_QUDIT_PULSE_HPP
#define QUDIT_PULSE_QUDIT_PULSE_HPP

#include "qudit_pulse/core.hpp"
#include "qudit_pulse/entropy.hpp"
#include "qudit_pulse/error.hpp"
#include "qudit_pulse/gates.hpp"
#include "qudit_pulse/harness.hpp"
#include "qudit_pulse/pulse.hpp"
#include "qudit_pulse/sampling.hpp"
#include "qudit_pulse/schedule_io.hpp"
#include "qudit_pulse/state_prep.hpp"
#include "qudit_pulse/version.hpp"

#endif  // QUDIT_PULSE_QUDIT_PULSE_HPP
