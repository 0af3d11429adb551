/*
   Copyright 2026 The enda-lab authors

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

#ifndef ENDA_ENDA_HPP
#define ENDA_ENDA_HPP

#include "bijection.hpp"
#include "endo.hpp"
#include "error.hpp"
#include "gsolve.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "ring.hpp"
#include "sampling.hpp"
#include "selftest.hpp"
#include "serialize.hpp"

#endif  // ENDA_ENDA_HPP
