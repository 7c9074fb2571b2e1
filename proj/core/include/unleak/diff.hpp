//===--- diff.hpp - unified diff rendering ---------------------*- C++ -*-===//
// Part of unleak, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//===----------------------------------------------------------------------===//
#pragma once

#include <string>
#include <string_view>

namespace unleak {

/// Standard unified diff with three context lines. Returns the empty string
/// when the inputs are identical. Headers are `--- a/<path>` / `+++ b/<path>`.
std::string unified_diff(std::string_view before, std::string_view after,
                         std::string_view path);

}  // namespace unleak
