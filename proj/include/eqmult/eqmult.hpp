#pragma once

// Spanning-set matrix-vector multiplication for group equivariant linear
// layers between tensor power spaces of R^n, for O(n), SO(n), Sp(n), and S_n.
// Weight matrices are handled through their set partition diagrams: a diagram
// is factored as permutation . planar . permutation, the planar part splits
// into a tensor product of small factors, and the multiplication runs stage
// by stage as contractions, transfers, and copies. A dense matrix oracle
// provides exact ground truth.

#include "eqmult/bench.hpp"
#include "eqmult/dense.hpp"
#include "eqmult/diagram.hpp"
#include "eqmult/error.hpp"
#include "eqmult/factor.hpp"
#include "eqmult/layer.hpp"
#include "eqmult/multiply.hpp"
#include "eqmult/op_count.hpp"
#include "eqmult/permutation.hpp"
#include "eqmult/prng.hpp"
#include "eqmult/tensor_vector.hpp"
