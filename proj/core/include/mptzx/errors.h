// Copyright 2026 The mptzx Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mptzx {

/// Malformed serialized input. `where` is a JSON pointer or "line:column".
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &where, const std::string &what)
        : std::runtime_error(where + ": " + what), where_(where) {
    }
    const std::string &where() const {
        return where_;
    }

   private:
    std::string where_;
};

/// A rewrite rule was asked to fire where its precondition does not hold.
class RuleNotApplicable : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two curves never intersect on their common grid.
class NoCrossingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A fit cannot be carried out on the supplied data.
class FitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public FitError {
   public:
    using FitError::FitError;
};

/// Invalid experiment configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(const std::string &field, const std::string &what)
        : std::runtime_error("config field '" + field + "': " + what), field_(field) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

}  // namespace mptzx
