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

#ifndef THUECUBIC_BAREISS_HPP
#define THUECUBIC_BAREISS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thuecubic {

/// Dense row-major square matrix over an exact ring.
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    std::size_t size() const { return n_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t n_;
    std::vector<T> data_;
};

/*
 * Fraction-free Gaussian elimination (Bareiss). Every division is exact in
 * an integral domain, so T = mpz_class never leaves the integers and the
 * intermediate entries stay bounded by minors of the input.
 */
template <class T>
T bareiss_determinant(SquareMatrix<T> a) {
    const std::size_t n = a.size();
    if (n == 0) return T(1);
    T prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return T(0);
            a.swap_rows(k, piv);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = v / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return sgn < 0 ? T(-det) : det;
}

}  // namespace thuecubic

#endif  // THUECUBIC_BAREISS_HPP
