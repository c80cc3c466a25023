#ifndef QCONG_DETAIL_KRONECKER_HPP
#define QCONG_DETAIL_KRONECKER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qcong/int.hpp"

namespace qcong::detail {

/// Dense product of two coefficient arrays by Kronecker substitution:
/// both operands are packed into single integers at a limb-aligned
/// stride wide enough for every product coefficient, multiplied once
/// by GMP, and unpacked with balanced digits so signs survive.
/// Result length is a.size() + b.size() - 1 (empty if either is empty).
std::vector<Int> kronecker_multiply(std::span<const Int> a, std::span<const Int> b);

/// Schoolbook product with the same contract; the reference path.
std::vector<Int> schoolbook_multiply(std::span<const Int> a, std::span<const Int> b);

/// Picks one of the above by operand size.
std::vector<Int> multiply_dense(std::span<const Int> a, std::span<const Int> b);

}  // namespace qcong::detail

#endif  // QCONG_DETAIL_KRONECKER_HPP
