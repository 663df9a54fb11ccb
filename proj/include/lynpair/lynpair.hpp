/* Copyright 2026 The lynpair Authors. All Rights Reserved.
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

#ifndef LYNPAIR_LYNPAIR_HPP
#define LYNPAIR_LYNPAIR_HPP

#include "lynpair/catalog.hpp"
#include "lynpair/error.hpp"
#include "lynpair/gs.hpp"
#include "lynpair/io.hpp"
#include "lynpair/lie.hpp"
#include "lynpair/monomial.hpp"
#include "lynpair/numeric.hpp"
#include "lynpair/pairs.hpp"
#include "lynpair/word.hpp"

#endif
