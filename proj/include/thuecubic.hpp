/*
   Copyright 2026 The thuecubic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef THUECUBIC_HPP
#define THUECUBIC_HPP

// Core library. serialize.hpp and cli.hpp pull in the vendored JSON and
// CLI11 headers and are included separately.

#include "thuecubic/bareiss.hpp"
#include "thuecubic/cubic.hpp"
#include "thuecubic/embedding.hpp"
#include "thuecubic/exact.hpp"
#include "thuecubic/identities.hpp"
#include "thuecubic/polynomial.hpp"
#include "thuecubic/rational_roots.hpp"
#include "thuecubic/reference_tables.hpp"
#include "thuecubic/reproduction.hpp"
#include "thuecubic/resolvent.hpp"
#include "thuecubic/scan.hpp"
#include "thuecubic/thue.hpp"

#endif  // THUECUBIC_HPP
