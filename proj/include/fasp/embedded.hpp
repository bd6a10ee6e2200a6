// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace fasp::embedded {

/// data/golden_tables_v1.csv as compiled in.
const std::string& golden_tables_csv();
/// data/case_study.csv as compiled in.
const std::string& case_study_csv();

}  // namespace fasp::embedded
