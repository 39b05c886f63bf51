#pragma once

#include "burau/matrix3.hpp"
#include "burau/rational.hpp"
#include "burau/words.hpp"

namespace burau {

inline constexpr int kDefaultConjDepth = 5;

/// M_f over F2(t), with D = (1 + t)^2 and g = f (1 + t^2):
///     [ f,                 f + 1 + t,         f + 1 + t     ]
///     [ t^3 / D,           t / D,             t^3 / D       ]
///     [ (g+t+t^2+t^3) / D, (g+1+t+t^3) / D,   (g + 1) / D   ]
struct ConjugatorMf {
	RationalF2 f;
	MatRF matrix;
};

/// Throws ConsistencyError when the determinant is not t^2.
ConjugatorMf build_mf(const RationalF2 &f);

/// The matrix M (entries as printed independently of the M_f formula).
MatRF conjugator_m();

/// Mod-2 images of x and yxy and of family_x(i), embedded in F2(t).
MatRF x_matrix_rf();
MatRF yxy_matrix_rf();
MatRF family_x_matrix_rf(int i);

/// M x M^-1 = t [yxy, x] and M (yxy) M^-1 = yxy, exactly over F2(t).
bool check_eq4(const MatRF &m);
inline bool check_eq4(const ConjugatorMf &mf) { return check_eq4(mf.matrix); }

/// M^k X_i M^-k equals X_{i+k} projectively. Throws ResourceError when
/// i + k exceeds depth and UsageError for i < 0 or k < 1.
bool conj_power_check(int i, int k, int depth = kDefaultConjDepth);

/// M X_i M^-1 = [yxy, X_i], exactly when `projective` is false.
bool conjugation_step_check(int i, bool projective);

/// The exact identity for X_1.
bool lemma34_check();

/// With M standing for the stable letter: X_i^4 is scalar, and the
/// conjugates M^j X_i^2 M^-j, |j| <= window, commute pairwise projectively.
/// Throws ResourceError for i > depth or window > 4.
bool lamplighter_window_check(int i, int window, int depth = kDefaultConjDepth);

/// Image of an XYT word with x, y their mod-2 matrices and the stable letter
/// t sent to `stable`.
MatRF eval_with_stable_letter(const GroupWord &w, const MatRF &stable);

} // namespace burau
