#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace legendrian {

using Rational = boost::multiprecision::mpq_rational;

namespace lp {

template <class T>
struct Result {
    bool feasible = false;
    bool bounded = true;
    T value{};
    std::vector<T> x;
};

namespace detail {

template <class T>
bool negative(const T& v) {
    if constexpr (std::is_floating_point_v<T>) return v < T(-1e-9);
    else return v < 0;
}
template <class T>
bool positive(const T& v) {
    if constexpr (std::is_floating_point_v<T>) return v > T(1e-9);
    else return v > 0;
}

// Dense tableau, Bland's rule. Row m holds the objective (reduced costs, value in rhs).
template <class T>
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_((rows + 1) * (cols + 1)), basis_(rows) {}

    T& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
    T& rhs(std::size_t r) { return at(r, n_); }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const T inv = T(1) / at(pr, pc);
        for (std::size_t c = 0; c <= n_; ++c) at(pr, c) *= inv;
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == pr) continue;
            const T f = at(r, pc);
            if (f == 0) continue;
            for (std::size_t c = 0; c <= n_; ++c)
                if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
        }
        basis_[pr] = pc;
    }

    // Minimizes the objective row over columns < allowed. Returns false if unbounded.
    bool run(std::size_t allowed) {
        for (;;) {
            std::size_t pc = allowed;
            for (std::size_t c = 0; c < allowed; ++c)
                if (negative(at(m_, c))) { pc = c; break; }
            if (pc == allowed) return true;
            std::size_t pr = m_;
            T best{};
            for (std::size_t r = 0; r < m_; ++r) {
                if (!positive(at(r, pc))) continue;
                T ratio = rhs(r) / at(r, pc);
                if (pr == m_ || ratio < best || (ratio == best && basis_[r] < basis_[pr])) {
                    pr = r;
                    best = ratio;
                }
            }
            if (pr == m_) return false;
            pivot(pr, pc);
        }
    }

    std::size_t rows() const { return m_; }

private:
    std::size_t m_, n_;
    std::vector<T> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

// minimize c.x subject to A x >= b, x >= 0.
template <class T>
Result<T> minimize(const std::vector<std::vector<T>>& A, const std::vector<T>& b, const std::vector<T>& c) {
    const std::size_t m = A.size(), n = c.size();
    // columns: x (n), surplus (m), artificial (m)
    detail::Tableau<T> tab(m, n + 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? T(-A[i][j]) : A[i][j];
        tab.at(i, n + i) = flip ? T(1) : T(-1);
        tab.at(i, n + m + i) = T(1);
        tab.rhs(i) = flip ? T(-b[i]) : b[i];
        tab.basis()[i] = n + m + i;
    }
    // phase one objective: sum of artificials, expressed in nonbasic columns
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n + m; ++j) {
            const std::size_t col = j == n + m ? n + 2 * m : j;
            tab.at(m, col) -= tab.at(i, col);
        }
    tab.run(n + m);
    Result<T> res;
    if (detail::negative(T(tab.rhs(m)))) return res;
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis()[i] < n + m) continue;
        for (std::size_t j = 0; j < n + m; ++j)
            if (detail::positive(tab.at(i, j)) || detail::negative(tab.at(i, j))) {
                tab.pivot(i, j);
                break;
            }
    }
    for (std::size_t j = 0; j <= n + 2 * m; ++j) tab.at(m, j) = T(0);
    for (std::size_t j = 0; j < n; ++j) tab.at(m, j) = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bj = tab.basis()[i];
        if (bj >= n) continue;
        const T f = tab.at(m, bj);
        if (f == 0) continue;
        for (std::size_t j = 0; j <= n + 2 * m; ++j) tab.at(m, j) -= f * tab.at(i, j);
    }
    res.feasible = true;
    res.bounded = tab.run(n + m);
    res.x.assign(n, T(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis()[i] < n) res.x[tab.basis()[i]] = tab.rhs(i);
    res.value = -tab.rhs(m);
    return res;
}

template <class T>
bool feasible(const std::vector<std::vector<T>>& A, const std::vector<T>& b, std::size_t nvars) {
    return minimize<T>(A, b, std::vector<T>(nvars, T(0))).feasible;
}

}  // namespace lp
}  // namespace legendrian
