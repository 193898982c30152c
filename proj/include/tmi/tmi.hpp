// Copyright 2026 The Authors.
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

#ifndef TMI_TMI_HPP
#define TMI_TMI_HPP

#include "tmi/complex.hpp"
#include "tmi/error.hpp"
#include "tmi/gamma.hpp"
#include "tmi/homology.hpp"
#include "tmi/io.hpp"
#include "tmi/linalg.hpp"
#include "tmi/monomial.hpp"
#include "tmi/oracle.hpp"
#include "tmi/parallel.hpp"
#include "tmi/resolution.hpp"
#include "tmi/veronese.hpp"

#endif  // TMI_TMI_HPP
