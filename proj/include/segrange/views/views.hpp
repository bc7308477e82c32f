// SPDX-FileCopyrightText: segrange contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <segrange/views/transform.hpp>
#include <segrange/views/trim.hpp>
#include <segrange/views/view_base.hpp>
#include <segrange/views/zip.hpp>
