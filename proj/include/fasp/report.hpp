// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace fasp {

inline constexpr int kReportDigits = 6;

/// x rounded to `digits` significant digits (non-finite values pass through).
double round_sig(double x, int digits = kReportDigits);

/// %.6g-style text; "nan", "inf" and "-inf" for non-finite values.
std::string format_sig(double x, int digits = kReportDigits);

}  // namespace fasp
