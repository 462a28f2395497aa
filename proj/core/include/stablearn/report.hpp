// Copyright 2026 The stablearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLEARN_REPORT_HPP_
#define STABLEARN_REPORT_HPP_

#include <string>
#include <vector>

#include "stablearn/learner.hpp"

namespace stablearn {

// JSON document for one learned state: the resolved configuration and
// profile constants, the verified group as sign+letter strings, the frame
// tableau row images and its gate realization, the residual amplitudes
// interleaved (re, im, re, im, ...), and the copy diagnostics. Everything
// except wall_seconds is deterministic for a fixed config and source.
std::string learned_state_report(const LearnedState& state,
                                 const LearnerConfig& cfg,
                                 double wall_seconds);

// JSON fragment for the configuration alone (embedded by the report above).
std::string learner_config_json(const LearnerConfig& cfg, std::size_t n);

// CSV rows "n,r,trials,empirical_p,bound" with a header line.
std::string intersection_csv(const std::vector<IntersectionStats>& rows);

}  // namespace stablearn

#endif  // STABLEARN_REPORT_HPP_
