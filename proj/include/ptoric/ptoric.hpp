// Copyright 2026 The ptoric Authors.
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

#pragma once

#include "ptoric/code.hpp"
#include "ptoric/corpus.hpp"
#include "ptoric/errors.hpp"
#include "ptoric/gf.hpp"
#include "ptoric/intlat.hpp"
#include "ptoric/matrix.hpp"
#include "ptoric/oracle.hpp"
#include "ptoric/order.hpp"
#include "ptoric/polytope.hpp"
#include "ptoric/variety.hpp"
