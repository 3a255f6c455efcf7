/*
   Copyright 2026 The qh Authors

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

#ifndef QH_FIXTURES_HPP
#define QH_FIXTURES_HPP

#include <memory>
#include <string>
#include <vector>

#include "qh/gwdata.hpp"

namespace qh {

/// A built-in spec + table pair. The table points into the owned spec,
/// so fixtures are shared_ptr-held and immutable.
struct Fixture {
  std::string name;
  std::shared_ptr<const ManifoldSpec> spec;
  std::shared_ptr<const GwTable> table;
};

/// Built-in fixtures:
///   cp1..cp4    complex projective spaces (x^{n+1} = q small tables plus
///               the genuine low-degree higher-point invariants inside the
///               declared completeness window)
///   s2xs2       the product of two spheres
///   bigsymp     synthetic: degenerate at the trivial deformation point,
///               generically semisimple
///   nilpotent   synthetic Q[e]/(e^2): identically zero discriminant
///   cancel      synthetic: two equal-energy classes with cancelling
///               three-point values at z = 1 (capacity witness fixture)
std::vector<std::string> fixtureNames();
Fixture makeFixture(const std::string& name);

}  // namespace qh

#endif  // QH_FIXTURES_HPP
