#pragma once

#include "qmetric/algebra_maps.hpp"
#include "qmetric/error.hpp"
#include "qmetric/kernels.hpp"
#include "qmetric/linalg.hpp"
#include "qmetric/lip_norms.hpp"
#include "qmetric/matrix.hpp"
#include "qmetric/matrix_io.hpp"
#include "qmetric/mk_distance.hpp"
#include "qmetric/simplex.hpp"
#include "qmetric/tolerance.hpp"

namespace qmetric {
inline constexpr const char* kVersion = QMETRIC_VERSION;
}
