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

// Walks through one coincidence of splitting fields: f_{-6} and f_{54}.
// A solution of F_{-6}(x, y) = lambda gives n, the resolvent sextic confirms
// it, and the root map sends a root of f_{-6} to a root of f_{54}.

#include <iostream>

#include "thuecubic.hpp"

int main() {
    using namespace thuecubic;
    const Int m = -6;

    std::cout << "f_m = " << cubic_poly(m).to_string() << ", group " << to_string(classify(m).tag) << '\n';

    const PrimitiveSolution s{Int(-9), Int(2), form_value(m, Int(-9), Int(2))};
    const Rat n = n_from_solution(m, s);
    std::cout << "F_m(-9, 2) = " << s.lambda << "  ->  n = " << n << '\n';

    const IsomReport r = isom_test(m, n.get_num());
    std::cout << "R_{m,n} rational roots:";
    for (const auto& u : r.roots) std::cout << ' ' << u;
    std::cout << "  (DT " << to_string(r.dt) << ")\n";

    // The image of a root of f_m satisfies f_n.
    const CubicFieldElement t = CubicFieldElement::generator(m);
    const CubicFieldElement e = apply_root_map(m, s.x, s.y, t);
    const Int nn = n.get_num();
    const CubicFieldElement one{m, {Rat(1), Rat(0), Rat(0)}};
    const CubicFieldElement value = e * e * e + Rat(nn) * e + Rat(nn) * one;
    std::cout << "f_n(image of the root) = 0: " << std::boolalpha
              << (value == CubicFieldElement(m, {Rat(0), Rat(0), Rat(0)})) << '\n';

    for (const auto& row : paired_solutions(m, nn))
        std::cout << "paired: F_m" << "(" << row.forward.x << "," << row.forward.y << ") = " << row.forward.lambda
                  << ",  F_n(" << row.backward.x << "," << row.backward.y << ") = " << row.backward.lambda << '\n';
}
