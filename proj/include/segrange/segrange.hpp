// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <segrange/algorithms/algorithms.hpp>
#include <segrange/containers/dense_matrix.hpp>
#include <segrange/containers/distributed_vector.hpp>
#include <segrange/containers/matrix_market.hpp>
#include <segrange/containers/sparse_matrix.hpp>
#include <segrange/core/concepts.hpp>
#include <segrange/core/distribution.hpp>
#include <segrange/runtime/runtime.hpp>
#include <segrange/views/views.hpp>
