// Copyright 2026 The qrace Authors
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

#include <stdexcept>
#include <string>

namespace qrace {

// Invalid caller input: violated parameter invariant or precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine could not meet its tolerance (quadrature depth,
// non-unimodal search bracket, series that does not converge).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A simulated trial exceeded its cycle cap.
class SimulationCapError : public std::runtime_error {
 public:
  explicit SimulationCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrace
