// Copyright 2026 The Turnkit Authors
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


// Umbrella header for the turn calculus library.

#pragma once

#include "turnkit/errors.hpp"
#include "turnkit/optics.hpp"
#include "turnkit/pancharatnam.hpp"
#include "turnkit/poincare.hpp"
#include "turnkit/su2.hpp"
#include "turnkit/synthesis.hpp"
#include "turnkit/turns.hpp"
#include "turnkit/vec3.hpp"
