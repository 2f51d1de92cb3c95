#include "toruscalc/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toruscalc {

namespace {

bool all_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void axpy(RatVector& y, const Rational& a, std::span<const Rational> x)
{
    if (y.size() < x.size())
        y.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            y[i] += a * x[i];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input)
{
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Integer> diagonal;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: nonzero entry of least absolute value in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found)
            break;

        for (;;) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(t, j), a(pi, j));
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a(i, t), a(i, pj));

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a(i, j) -= q * a(t, j);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a(i, j) -= q * a(i, t);
                if (a(t, j) != 0)
                    clean = false;
            }

            if (clean) {
                // Enforce divisibility: a remainder in the block restarts with a smaller pivot.
                bool divides = true;
                for (std::size_t i = t + 1; i < rows && divides; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj)
                                a(t, jj) += a(i, jj);
                            divides = false;
                            break;
                        }
                if (divides)
                    break;
            }

            found = false;
            for (std::size_t i = t; i < rows; ++i) {
                if (a(i, t) != 0 && (!found || abs(a(i, t)) < abs(a(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = t;
                }
            }
            for (std::size_t j = t; j < cols; ++j) {
                if (a(t, j) != 0 && (!found || abs(a(t, j)) < abs(a(pi, pj)))) {
                    found = true;
                    pi = t;
                    pj = j;
                }
            }
        }
        diagonal.push_back(abs(a(t, t)));
    }

    SmithForm form;
    form.rank = diagonal.size();
    form.invariant_factors = std::move(diagonal);
    return form;
}

Integer gcd_of(std::span<const Integer> entries)
{
    Integer g = 0;
    for (const auto& x : entries)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_primitive(std::span<const Integer> v)
{
    return gcd_of(v) == 1;
}

bool is_direct_summand(std::span<const IntVector> vectors)
{
    if (vectors.empty())
        return true;
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != n)
            throw std::invalid_argument("is_direct_summand: vectors of different lengths");
    if (vectors.size() > n)
        return false;
    const SmithForm form = smith_normal_form(IntMatrix::from_columns(n, vectors));
    if (form.rank != vectors.size())
        return false;
    return std::all_of(form.invariant_factors.begin(), form.invariant_factors.end(),
                       [](const Integer& d) { return d == 1; });
}

std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RankKernel rank_and_kernel(const RatMatrix& input)
{
    RatMatrix m = input;
    const auto pivots = rref(m);
    RankKernel result;
    result.rank = pivots.size();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        result.kernel_basis.push_back(std::move(v));
    }
    return result;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix copy = m;
    return rref(copy).size();
}

bool Subspace::add(std::span<const Rational> v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("Subspace::add: dimension mismatch");
    RatVector w(v.begin(), v.end());
    RatVector comb(generators_ + 1);
    comb[generators_] = 1;
    for (const auto& row : rows_) {
        if (w[row.pivot] == 0)
            continue;
        const Rational c = w[row.pivot];
        axpy(w, -c, row.values);
        axpy(comb, -c, row.combination);
    }
    ++generators_;
    auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
    if (it == w.end())
        return false;

    const std::size_t pivot = static_cast<std::size_t>(it - w.begin());
    const Rational inv = 1 / w[pivot];
    for (auto& x : w)
        x *= inv;
    for (auto& x : comb)
        x *= inv;
    for (auto& row : rows_) {
        if (row.values[pivot] == 0)
            continue;
        const Rational c = row.values[pivot];
        axpy(row.values, -c, w);
        axpy(row.combination, -c, comb);
    }
    Row fresh{pivot, std::move(w), std::move(comb)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(fresh));
    return true;
}

RatVector Subspace::reduce(std::span<const Rational> v) const
{
    RatVector w(v.begin(), v.end());
    for (const auto& row : rows_)
        if (w[row.pivot] != 0) {
            const Rational c = w[row.pivot];
            axpy(w, -c, row.values);
        }
    return w;
}

bool Subspace::contains(std::span<const Rational> v) const
{
    return all_zero(reduce(v));
}

std::optional<RatVector> Subspace::coordinates(std::span<const Rational> v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("Subspace::coordinates: dimension mismatch");
    RatVector w(v.begin(), v.end());
    RatVector coeff(generators_);
    for (const auto& row : rows_) {
        if (w[row.pivot] == 0)
            continue;
        const Rational c = w[row.pivot];
        axpy(w, -c, row.values);
        axpy(coeff, c, row.combination);
    }
    if (!all_zero(w))
        return std::nullopt;
    coeff.resize(generators_);
    return coeff;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace toruscalc
