#include "trindex/sylvester.hpp"

#include <stdexcept>

namespace trindex {

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int sign{1};
    Int prev{1};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    int df = intpoly::degree(f);
    int dg = intpoly::degree(g);
    if (df < 0 || dg < 0) return 0;
    if (df == 0) return ipow(f[0], dg);
    if (dg == 0) return ipow(g[0], df);
    const int n = df + dg;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int row = 0; row < dg; ++row)
        for (int j = 0; j <= df; ++j) m[row][row + j] = f[df - j];
    for (int row = 0; row < df; ++row)
        for (int j = 0; j <= dg; ++j) m[dg + row][row + j] = g[dg - j];
    return bareiss_determinant(std::move(m));
}

Int discriminant_resultant(const Trinomial& t) {
    IntPoly f = t.poly();
    if (intpoly::degree(f) != 9)
        throw std::domain_error("discriminant_resultant: degenerate trinomial");
    // n = 9: (-1)^(n(n-1)/2) = +1, lc = 1.
    return resultant(f, intpoly::derivative(f));
}

}  // namespace trindex
