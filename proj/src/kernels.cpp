#include "qgr/kernels.hpp"

namespace qgr::kernels {

namespace ref {

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]) {
  const std::size_t mask = std::size_t{1} << bit;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  for (std::size_t i = 0; i < dim / 2; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    const std::size_t i1 = i0 | mask;
    const cxd a0 = state[i0];
    const cxd a1 = state[i1];
    state[i0] = m[0] * a0 + m[1] * a1;
    state[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1) {
  const std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < dim; ++i) state[i] *= (i & mask) ? d1 : d0;
}

void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit) {
  const std::size_t cm = std::size_t{1} << control_bit;
  const std::size_t tm = std::size_t{1} << target_bit;
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & cm) && !(i & tm)) std::swap(state[i], state[i | tm]);
}

void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  const std::size_t m = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & m) == m) state[i] = -state[i];
}

void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  const std::size_t ma = std::size_t{1} << bit_a;
  const std::size_t mb = std::size_t{1} << bit_b;
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & ma) && !(i & mb)) std::swap(state[i], state[i ^ ma ^ mb]);
}

void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit) {
  const std::size_t tm = std::size_t{1} << target_bit;
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & control_mask) == control_mask && !(i & tm))
      std::swap(state[i], state[i | tm]);
}

void scale(cxd* state, std::size_t dim, cxd factor) {
  for (std::size_t i = 0; i < dim; ++i) state[i] *= factor;
}

void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cxd* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = cxd(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const cxd aik = a[i * n + k];
      const cxd* bk = b + k * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cxd acc(0.0, 0.0);
    const cxd* ai = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

}  // namespace ref

namespace par {

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]) {
  const std::size_t mask = std::size_t{1} << bit;
  const std::size_t lo = mask - 1;
  const std::size_t hi = ~lo;
  const std::int64_t half = static_cast<std::int64_t>(dim / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < half; ++i) {
    const std::size_t i0 = ((i & hi) << 1) | (i & lo);
    const std::size_t i1 = i0 | mask;
    const cxd a0 = state[i0];
    const cxd a1 = state[i1];
    state[i0] = m[0] * a0 + m[1] * a1;
    state[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1) {
  const std::size_t mask = std::size_t{1} << bit;
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) state[i] *= (i & mask) ? d1 : d0;
}

void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit) {
  const std::size_t cm = std::size_t{1} << control_bit;
  const std::size_t tm = std::size_t{1} << target_bit;
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    if ((i & cm) && !(i & tm)) std::swap(state[i], state[i | tm]);
}

void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  const std::size_t m = (std::size_t{1} << bit_a) | (std::size_t{1} << bit_b);
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    if ((static_cast<std::size_t>(i) & m) == m) state[i] = -state[i];
}

void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  const std::size_t ma = std::size_t{1} << bit_a;
  const std::size_t mb = std::size_t{1} << bit_b;
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    if ((i & ma) && !(i & mb)) std::swap(state[i], state[i ^ ma ^ mb]);
}

void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit) {
  const std::size_t tm = std::size_t{1} << target_bit;
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    if ((static_cast<std::uint64_t>(i) & control_mask) == control_mask &&
        !(i & tm))
      std::swap(state[i], state[i | tm]);
}

void scale(cxd* state, std::size_t dim, cxd factor) {
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) state[i] *= factor;
}

void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n) {
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    cxd* ci = c + i * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] = cxd(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const cxd aik = a[i * n + k];
      const cxd* bk = b + k * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n) {
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    cxd acc(0.0, 0.0);
    const cxd* ai = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

}  // namespace par

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]) {
  if (dim >= kParallelDim)
    par::apply1(state, dim, bit, m);
  else
    ref::apply1(state, dim, bit, m);
}

void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1) {
  if (dim >= kParallelDim)
    par::apply_diag1(state, dim, bit, d0, d1);
  else
    ref::apply_diag1(state, dim, bit, d0, d1);
}

void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit) {
  if (dim >= kParallelDim)
    par::apply_cnot(state, dim, control_bit, target_bit);
  else
    ref::apply_cnot(state, dim, control_bit, target_bit);
}

void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  if (dim >= kParallelDim)
    par::apply_cz(state, dim, bit_a, bit_b);
  else
    ref::apply_cz(state, dim, bit_a, bit_b);
}

void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b) {
  if (dim >= kParallelDim)
    par::apply_swap(state, dim, bit_a, bit_b);
  else
    ref::apply_swap(state, dim, bit_a, bit_b);
}

void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit) {
  if (dim >= kParallelDim)
    par::apply_mcx(state, dim, control_mask, target_bit);
  else
    ref::apply_mcx(state, dim, control_mask, target_bit);
}

void scale(cxd* state, std::size_t dim, cxd factor) {
  if (dim >= kParallelDim)
    par::scale(state, dim, factor);
  else
    ref::scale(state, dim, factor);
}

void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n) {
  if (n >= kParallelMat)
    par::matmul(a, b, c, n);
  else
    ref::matmul(a, b, c, n);
}

void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n) {
  if (n >= kParallelMat)
    par::matvec(a, x, y, n);
  else
    ref::matvec(a, x, y, n);
}

}  // namespace qgr::kernels
