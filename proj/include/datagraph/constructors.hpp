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

#include <string>

#include "datagraph/array.hpp"
#include "datagraph/data_graph.hpp"

namespace datagraph {

struct MeshOptions {
  bool diagonal = false;
  std::string attr_base = "weight";
};

/// Node-weighted mesh over the entries of a p x q matrix. Node (i,j) (1-based
/// tuple key, row-major insertion) carries attribute `attr_base`; edges join
/// horizontal and vertical neighbors, plus both diagonals if requested.
DataGraph matrix_to_graph(const Matrix& m, const MeshOptions& options = {});

/// Same p x q mesh for a p x q x r tensor; slice k is stored as attribute
/// attr_base + std::to_string(k) for k = 1..r.
DataGraph matrix_to_graph(const Tensor3& t, const MeshOptions& options = {});

/// Dispatches on rank; anything other than 2-D or 3-D is a DimensionError.
DataGraph matrix_to_graph(const NdArray& a, const MeshOptions& options = {});

/// One node per tensor entry keyed (i,j,k), k outermost then i then j;
/// edges along each single axis, no diagonals; attribute "weight".
DataGraph tensor_to_graph(const Tensor3& t);
DataGraph tensor_to_graph(const NdArray& a);

/// Complete undirected graph on integer keys 1..p whose edge (i,j), i < j,
/// holds s(i,j) under `attr`. The diagonal is ignored.
DataGraph symmetric_matrix_to_graph(const Matrix& s, const std::string& attr = "weight",
                                    double tol = 1e-9);

Tensor3 to_tensor3(const NdArray& a);
Matrix to_matrix(const NdArray& a);

}  // namespace datagraph
