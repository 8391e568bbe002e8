// Copyright 2026 The DataGraph Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace datagraph {

enum class ErrorKind {
  SelfLoop,
  UnknownNode,
  UnknownEdge,
  UnknownAttribute,
  LengthMismatch,
  KindMismatch,
  DimensionError,
  NotSquare,
  NotSymmetric,
  NonFinite,
  UnsortedThresholds,
  Disconnected,
  EmptyGraph,
  BadK,
  DuplicateKey,
  EmptySet,
  ShapeMismatch,
  BadWindow,
  Io,
  Ragged,
  Parse,
  Version,
  Corrupt,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace datagraph
