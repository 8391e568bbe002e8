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

#include "datagraph/constructors.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "datagraph/errors.hpp"

namespace datagraph {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::NonFinite, std::string(what) + " entry " + std::to_string(i + 1) +
                                            " (row-major) is not finite");
    }
  }
}

auto as_key(std::size_t one_based) { return static_cast<std::int64_t>(one_based); }

// p x q mesh nodes keyed (i,j), row-major, with 4- or 8-neighbor edges.
DataGraph build_mesh(std::size_t p, std::size_t q, bool diagonal) {
  DataGraph g(GraphKind::Undirected);
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = 1; j <= q; ++j) g.add_node(NodeKey::tuple(as_key(i), as_key(j)));
  auto at = [q](std::size_t i, std::size_t j) { return i * q + j; };
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (j + 1 < q) g.add_edge_by_index(at(i, j), at(i, j + 1));
      if (i + 1 < p) g.add_edge_by_index(at(i, j), at(i + 1, j));
      if (diagonal && i + 1 < p) {
        if (j + 1 < q) g.add_edge_by_index(at(i, j), at(i + 1, j + 1));
        if (j > 0) g.add_edge_by_index(at(i, j), at(i + 1, j - 1));
      }
    }
  }
  return g;
}

}  // namespace

DataGraph matrix_to_graph(const Matrix& m, const MeshOptions& options) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorKind::DimensionError, "matrix must have at least one row and column");
  }
  require_finite(m.values(), "matrix");
  auto g = build_mesh(m.rows(), m.cols(), options.diagonal);
  g.add_node_dataset(m.values(), options.attr_base);
  return g;
}

DataGraph matrix_to_graph(const Tensor3& t, const MeshOptions& options) {
  if (t.dim0() == 0 || t.dim1() == 0 || t.dim2() == 0) {
    throw Error(ErrorKind::DimensionError, "tensor dimensions must be positive");
  }
  require_finite(t.values(), "tensor");
  auto g = build_mesh(t.dim0(), t.dim1(), options.diagonal);
  const auto slice = t.dim0() * t.dim1();
  for (std::size_t k = 0; k < t.dim2(); ++k) {
    g.add_node_dataset(t.values().subspan(k * slice, slice),
                       options.attr_base + std::to_string(k + 1));
  }
  return g;
}

DataGraph matrix_to_graph(const NdArray& a, const MeshOptions& options) {
  if (a.ndim() == 2) return matrix_to_graph(to_matrix(a), options);
  if (a.ndim() == 3) return matrix_to_graph(to_tensor3(a), options);
  throw Error(ErrorKind::DimensionError, "matrix_to_graph accepts 2-D or 3-D input, got " +
                                             std::to_string(a.ndim()) + "-D");
}

DataGraph tensor_to_graph(const Tensor3& t) {
  const auto p = t.dim0(), q = t.dim1(), r = t.dim2();
  if (p == 0 || q == 0 || r == 0) {
    throw Error(ErrorKind::DimensionError, "tensor dimensions must be positive");
  }
  require_finite(t.values(), "tensor");
  DataGraph g(GraphKind::Undirected);
  for (std::size_t k = 1; k <= r; ++k)
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = 1; j <= q; ++j)
        g.add_node(NodeKey::tuple(as_key(i), as_key(j), as_key(k)));
  auto at = [p, q](std::size_t i, std::size_t j, std::size_t k) { return (k * p + i) * q + j; };
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        if (j + 1 < q) g.add_edge_by_index(at(i, j, k), at(i, j + 1, k));
        if (i + 1 < p) g.add_edge_by_index(at(i, j, k), at(i + 1, j, k));
        if (k + 1 < r) g.add_edge_by_index(at(i, j, k), at(i, j, k + 1));
      }
    }
  }
  // Tensor3 storage order is exactly the node insertion order above.
  g.add_node_dataset(t.values(), "weight");
  return g;
}

DataGraph tensor_to_graph(const NdArray& a) {
  if (a.ndim() != 3) {
    throw Error(ErrorKind::DimensionError,
                "tensor_to_graph requires 3-D input, got " + std::to_string(a.ndim()) + "-D");
  }
  return tensor_to_graph(to_tensor3(a));
}

DataGraph symmetric_matrix_to_graph(const Matrix& s, const std::string& attr, double tol) {
  const auto p = s.rows();
  if (p != s.cols()) {
    throw Error(ErrorKind::NotSquare, "matrix is " + std::to_string(s.rows()) + "x" +
                                          std::to_string(s.cols()));
  }
  require_finite(s.values(), "matrix");
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      auto dev = std::abs(s(i, j) - s(j, i));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg << "entries (" << wi + 1 << "," << wj + 1 << ") and (" << wj + 1 << "," << wi + 1
        << ") differ by " << worst << " (tolerance " << tol << ")";
    throw Error(ErrorKind::NotSymmetric, msg.str());
  }
  DataGraph g(GraphKind::Undirected);
  for (std::size_t i = 1; i <= p; ++i) g.add_node(NodeKey(as_key(i)));
  std::vector<double> weights;
  weights.reserve(p * (p - 1) / 2);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      g.add_edge_by_index(i, j);
      weights.push_back(s(i, j));
    }
  }
  g.add_edge_dataset(weights, attr);
  return g;
}

Tensor3 to_tensor3(const NdArray& a) {
  if (a.ndim() != 3) throw Error(ErrorKind::DimensionError, "expected a 3-D array");
  const auto p = a.shape[0], q = a.shape[1], r = a.shape[2];
  if (a.values.size() != p * q * r) throw Error(ErrorKind::ShapeMismatch, "value count != shape");
  Tensor3 t(p, q, r);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < r; ++k) t(i, j, k) = a.values[(i * q + j) * r + k];
  return t;
}

Matrix to_matrix(const NdArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::DimensionError, "expected a 2-D array");
  Matrix m(a.shape[0], a.shape[1]);
  if (a.values.size() != m.rows() * m.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "value count != shape");
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = a.values[i * m.cols() + j];
  return m;
}

}  // namespace datagraph
