#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qgr::kernels {

using cxd = std::complex<double>;

/// State dimension at or above which the dispatching entry points take
/// the OpenMP path. Below it the serial reference is faster.
inline constexpr std::size_t kParallelDim = std::size_t{1} << 12;
/// Matrix size (rows) at or above which matmul/matvec parallelize.
inline constexpr std::size_t kParallelMat = 128;

/// Serial reference kernels. These are the semantic ground truth; the
/// parallel variants must match them exactly and are tested against
/// them element-wise.
///
/// All state kernels address qubits by bit position from the LSB of
/// the basis index. `m` is a row-major 2x2 matrix.
namespace ref {

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]);
void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1);
void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit);
void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b);
void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b);
/// X on target_bit where all bits of control_mask are 1.
void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit);
void scale(cxd* state, std::size_t dim, cxd factor);

/// C = A * B, all n x n row-major.
void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n);
/// y = A * x.
void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n);

}  // namespace ref

/// OpenMP variants. With OpenMP disabled they fall through to ref.
/// Every amplitude is written by exactly one iteration, so results are
/// bit-identical to the serial kernels regardless of thread count.
namespace par {

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]);
void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1);
void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit);
void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b);
void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b);
void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit);
void scale(cxd* state, std::size_t dim, cxd factor);

void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n);
void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n);

}  // namespace par

// Size-dispatching entry points used by the rest of the library.

void apply1(cxd* state, std::size_t dim, int bit, const cxd m[4]);
void apply_diag1(cxd* state, std::size_t dim, int bit, cxd d0, cxd d1);
void apply_cnot(cxd* state, std::size_t dim, int control_bit, int target_bit);
void apply_cz(cxd* state, std::size_t dim, int bit_a, int bit_b);
void apply_swap(cxd* state, std::size_t dim, int bit_a, int bit_b);
void apply_mcx(cxd* state, std::size_t dim, std::uint64_t control_mask,
               int target_bit);
void scale(cxd* state, std::size_t dim, cxd factor);
void matmul(const cxd* a, const cxd* b, cxd* c, std::size_t n);
void matvec(const cxd* a, const cxd* x, cxd* y, std::size_t n);

}  // namespace qgr::kernels
