/*
   Copyright 2026 The skewring Authors

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

#ifndef SKEWRING_SKEWRING_HPP
#define SKEWRING_SKEWRING_HPP

#include "algebra.hpp"
#include "catalogue.hpp"
#include "config.hpp"
#include "criteria.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "finite_ring.hpp"
#include "galois_field.hpp"
#include "group_action.hpp"
#include "instance.hpp"
#include "report.hpp"
#include "skew_group_ring.hpp"
#include "suite.hpp"

#endif  // SKEWRING_SKEWRING_HPP
