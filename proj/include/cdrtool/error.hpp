/*
 * Copyright 2026 The cdrtool Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cdrtool {

// Process exit codes shared by the CLI and the pipeline runner.
enum ExitCode : int {
  kExitOk = 0,
  kExitDataQuality = 1,
  kExitConfig = 2,
  kExitInternal = 3,
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or missing configuration, unusable arguments, unreadable config files.
struct ConfigError : Error {
  using Error::Error;
};

// Input data violated a hard quality gate (malformed-row budget exceeded,
// every station removed by the activity threshold, ...).
struct DataQualityError : Error {
  using Error::Error;
};

// A consistency invariant that should hold by construction was violated.
struct InternalError : Error {
  using Error::Error;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) != nullptr) return kExitConfig;
  if (dynamic_cast<const DataQualityError*>(&e) != nullptr) return kExitDataQuality;
  return kExitInternal;
}

}  // namespace cdrtool
