// Copyright (c) dynclique contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dynclique/algorithms.hpp"

namespace dynclique {

bool is_reduction(Task from, Task to);
// Wraps the solver's outputs for the weaker task without touching its messages.
Algorithm reduce_solver(Task from, Task to, const Algorithm& solver);
NodeOutput reduce_output(Task to, const NodeOutput& out);

} // namespace dynclique
