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

#include "datagraph/errors.hpp"

namespace datagraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::UnsortedThresholds: return "UnsortedThresholds";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadWindow: return "BadWindow";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Ragged: return "Ragged";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Version: return "Version";
    case ErrorKind::Corrupt: return "Corrupt";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace datagraph
