/*
 * Copyright 2026 The llsdim authors
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

namespace llsdim {

// Errors carry a stable token (machine-readable, e.g. "NotPseudocompactType")
// plus a human detail string. Input errors map to CLI exit 2, condition
// failures to exit 1.
enum class ErrorKind { Input, Condition };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string token, const std::string& detail)
        : std::runtime_error(token + ": " + detail),
          kind_(kind),
          token_(std::move(token)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& token() const { return token_; }

private:
    ErrorKind kind_;
    std::string token_;
};

[[noreturn]] inline void fail_input(std::string token, const std::string& detail) {
    throw Error(ErrorKind::Input, std::move(token), detail);
}

[[noreturn]] inline void fail_condition(std::string token, const std::string& detail) {
    throw Error(ErrorKind::Condition, std::move(token), detail);
}

}  // namespace llsdim
