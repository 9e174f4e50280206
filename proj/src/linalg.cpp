// Copyright 2026 The nomura-kit Authors.
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

#include "nomura_kit/linalg.hpp"

#include <Eigen/Dense>

#include "nomura_kit/errors.hpp"

namespace nk::linalg {
namespace {

using EMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EMat> view(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  return Eigen::Map<const EMat>(m.data(), n, n);
}

ComplexMatrix from_eigen(const EMat& e) {
  const auto n = static_cast<std::size_t>(e.rows());
  return ComplexMatrix(n, std::vector<Complex>(e.data(), e.data() + e.size()));
}

}  // namespace

ComplexMatrix inverse(const ComplexMatrix& m) {
  m.ensure_valid();
  Eigen::PartialPivLU<EMat> lu(view(m));
  // PartialPivLU does not report singularity; a vanishing pivot shows up as
  // a tiny reciprocal condition estimate.
  if (!(lu.rcond() > 1e-14)) throw SingularMatrix("matrix is numerically singular");
  return from_eigen(lu.inverse());
}

Complex determinant(const ComplexMatrix& m) {
  if (m.empty()) return Complex(1.0, 0.0);
  return Eigen::PartialPivLU<EMat>(view(m)).determinant();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  m.ensure_valid();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view(m)));
  if (solver.info() != Eigen::Success) throw NoConvergence("Hermitian eigensolver did not converge");
  HermitianEigen out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  out.vectors = from_eigen(EMat(solver.eigenvectors()));
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  m.ensure_valid();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(view(m)), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NoConvergence("Hermitian eigensolver did not converge");
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size()};
}

}  // namespace nk::linalg
