// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 parcs contributors
#pragma once

namespace parcs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace parcs
