#pragma once

#include <array>
#include <string>
#include <vector>

#include "burau/matrix3.hpp"
#include "burau/words.hpp"

namespace burau {

enum class Ring { Int, F2 };

/// The three reduced Burau generator matrices over Z[t, 1/t]:
///     s1 -> [[-t, 1, 0], [0, 1, 0], [0, 0, 1]]
///     s2 -> [[1, 0, 0], [t, -t, 1], [0, 0, 1]]
///     s3 -> [[1, 0, 0], [0, 1, 0], [0, t, -t]]
struct BurauConvention {
	std::array<MatZ, 3> sigma;

	static const BurauConvention &standard();

	/// Names of the failed constraints (braid relations over Z, and the mod-2
	/// images of x and y against the reference matrices). Empty when valid.
	std::vector<std::string> violations() const;
};

/// Reference mod-2 matrices of x = s1 s2 s3, y = s1 s2 s3 s1 and yxy.
MatF2 reference_x_f2();
MatF2 reference_y_f2();
MatF2 reference_yxy_f2();

MatZ sigma_matrix_z(int i);
MatF2 sigma_matrix_f2(int i);

/// Product of generator matrices in word order. XYT words without t are
/// mapped to braids first; t raises UsageError.
MatZ eval_braid_z(const GroupWord &w);
MatF2 eval_braid_f2(const GroupWord &w);

/// Projective class of the mod-2 image.
ProjF2 gamma_eval(const GroupWord &w);

/// Image under the mod-2 representation is the identity.
bool kernel_mod2(const GroupWord &w);
/// Image under the mod-2 representation is a scalar matrix.
bool kernel_gamma(const GroupWord &w);

LaurentZ det_of_word_z(const GroupWord &w);
LaurentF2 det_of_word_f2(const GroupWord &w);

inline constexpr int kDefaultKernelDepth = 6;

} // namespace burau
