/*
 *   Copyright 2026 The sgpd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SGPD_SPRINGS_HPP_
#define SGPD_SPRINGS_HPP_

#include <memory>
#include <vector>

#include "sgpd/table.hpp"

namespace sgpd {

  struct SpringReport {
    // Elements with empty right set.
    ElementSet springs;
    // Elements whose right set is nonempty and consists of springs only.
    ElementSet derived_dead;
    // Window elements whose empty right set only reflects the truncation.
    // These are not springs and are excluded from the two sets above.
    ElementSet boundary_artifacts;
  };

  SpringReport find_springs(SemigroupoidTable const& table);

  enum class DespringMode { Finest, Universal };

  struct IdempotentClass {
    // The adjoined idempotent, as an element of the extended table.
    ElementId  unit;
    // The springs it serves, as elements of the base table.
    ElementSet springs;
  };

  struct SpringExtension {
    std::shared_ptr<SemigroupoidTable const> base;
    std::shared_ptr<SemigroupoidTable const> extended;
    std::vector<IdempotentClass>             classes;
    DespringMode                             mode = DespringMode::Finest;
    // True when the base had no springs; extended is then the base itself.
    bool no_springs = false;
  };

  // Adjoins one idempotent per class of springs.  In Finest mode the classes
  // are generated by g ~ fg for composable (f, g) with g a spring; Universal
  // mode uses a single class.  Element ids of the base are preserved.
  SpringExtension despring(std::shared_ptr<SemigroupoidTable const> table,
                           DespringMode                             mode);

  char const* mode_name(DespringMode mode) noexcept;

}  // namespace sgpd

#endif  // SGPD_SPRINGS_HPP_
