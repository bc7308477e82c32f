// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <segrange/algorithms/copy.hpp>
#include <segrange/algorithms/for_each.hpp>
#include <segrange/algorithms/reduce.hpp>
#include <segrange/algorithms/scan.hpp>
#include <segrange/algorithms/sort.hpp>
