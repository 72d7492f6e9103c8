/* Copyright 2026 The iet-words Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Umbrella header.

#ifndef IETWORDS_IETWORDS_HPP
#define IETWORDS_IETWORDS_HPP

#include "ietwords/analysis.hpp"
#include "ietwords/boundary_set.hpp"
#include "ietwords/coding.hpp"
#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"
#include "ietwords/instances.hpp"
#include "ietwords/interval_map.hpp"
#include "ietwords/scalar_text.hpp"
#include "ietwords/spec_io.hpp"
#include "ietwords/subdivision.hpp"

#endif  // IETWORDS_IETWORDS_HPP
