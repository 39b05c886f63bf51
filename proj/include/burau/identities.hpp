#pragma once

#include "burau/finite_group.hpp"
#include "burau/words.hpp"

namespace burau {

/// Projective mod-2 images agree.
bool gamma_equal(const GroupWord &a, const GroupWord &b);
bool gamma_identity(const GroupWord &w);

/// (yxy) b_i (yxy)^-1 = b_1^-1 b_{i+1}.
bool yxy_conjugates_b(int i);
/// b_{-i} = (yxy)^-i b_i^-1 (yxy)^i.
bool b_negative_from_b(int i);
/// (yxy)^-1 b_{-i} (yxy) = b_{-1}^-1 b_{-i-1}.
bool yxy_conjugates_b_negative(int i);
/// (yxy)^-1 x_i (yxy) = x_i x_{i+1}^-1.
bool yxy_conjugates_x(int i);

/// <x_0^2, ..., x_j^2> enumerated projectively.
FiniteGroupTable x_square_subgroup(int j);

/// [x_i, x_j] lies in <x_0^2, ..., x_bound^2>.
bool commutator_in_x_squares(int i, int j, int bound);

/// For 0 <= i < N:
/// [x_i, x_{N+1}] = [x_i, x_N] x_N^-2 (yxy)^-1 (x_{N-1}^-1 ... x_i^-1) x_N (yxy) x_i x_{N+1}.
bool commutator_expansion(int i, int N);

/// For 0 <= i <= N, the element
/// C = [x_i, x_{N+1}] ((yxy)^-1 (x_N^-1 ... x_i^-1) (yxy) x_i x_{N+1})^-1
/// lies in <x_0^2, ..., x_N^2>.
bool commutator_central_part(int i, int N);

/// The words x_i and family_x as a GroupWord with the default depth bound
/// lifted to i.
GroupWord x_word(int i);

} // namespace burau
