// Copyright 2026 The swapbudget Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "budget.hpp"
#include "decoherence.hpp"
#include "errors.hpp"
#include "exchange_gate.hpp"
#include "montecarlo.hpp"
#include "noise_control.hpp"
#include "quantum_core.hpp"
#include "spec_file.hpp"
