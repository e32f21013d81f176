// Copyright 2026 The qslm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QSLM_QSLM_HPP
#define QSLM_QSLM_HPP

#include "qslm/error.hpp"
#include "qslm/experiments.hpp"
#include "qslm/io.hpp"
#include "qslm/metrics.hpp"
#include "qslm/norms.hpp"
#include "qslm/qsl.hpp"
#include "qslm/unitary.hpp"

#endif  // QSLM_QSLM_HPP
