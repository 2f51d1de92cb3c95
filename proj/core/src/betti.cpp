#include "toruscalc/betti.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toruscalc {

BettiVector BettiVector::unit(int degree)
{
    BettiVector b = zero(degree);
    b.ranks_[static_cast<std::size_t>(degree)] = 1;
    return b;
}

long BettiVector::operator[](int degree) const
{
    if (degree < 0 || degree > top_degree())
        return 0;
    return ranks_[static_cast<std::size_t>(degree)];
}

void BettiVector::set(int degree, long rank)
{
    if (degree < 0)
        throw std::out_of_range("BettiVector: negative degree");
    if (rank < 0)
        throw std::invalid_argument("BettiVector: negative rank");
    if (degree > top_degree())
        ranks_.resize(static_cast<std::size_t>(degree) + 1, 0);
    ranks_[static_cast<std::size_t>(degree)] = rank;
}

BettiVector& BettiVector::operator+=(const BettiVector& other)
{
    if (other.ranks_.size() > ranks_.size())
        ranks_.resize(other.ranks_.size(), 0);
    for (std::size_t i = 0; i < other.ranks_.size(); ++i)
        ranks_[i] += other.ranks_[i];
    return *this;
}

BettiVector BettiVector::suspend() const
{
    std::vector<long> shifted(ranks_.size() + 1, 0);
    std::copy(ranks_.begin(), ranks_.end(), shifted.begin() + 1);
    return BettiVector(std::move(shifted));
}

BettiVector BettiVector::padded(int top) const
{
    for (int d = top + 1; d <= top_degree(); ++d)
        if ((*this)[d] != 0)
            throw std::invalid_argument("BettiVector::padded: nonzero rank above requested top degree");
    std::vector<long> r(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d <= std::min(top, top_degree()); ++d)
        r[static_cast<std::size_t>(d)] = (*this)[d];
    return BettiVector(std::move(r));
}

long BettiVector::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t i = 0; i < ranks_.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * ranks_[i];
    return chi;
}

bool BettiVector::is_poincare_symmetric(int dimension) const
{
    if (top_degree() > dimension)
        for (int d = dimension + 1; d <= top_degree(); ++d)
            if ((*this)[d] != 0)
                return false;
    for (int i = 0; i <= dimension; ++i)
        if ((*this)[i] != (*this)[dimension - i])
            return false;
    return true;
}

std::string BettiVector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ranks_.size(); ++i)
        os << (i ? "," : "") << ranks_[i];
    os << ')';
    return os.str();
}

bool operator==(const BettiVector& a, const BettiVector& b)
{
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int d = 0; d <= top; ++d)
        if (a[d] != b[d])
            return false;
    return true;
}

BettiVector WedgeDecomposition::reduced_betti() const
{
    BettiVector b;
    for (const auto& [dim, mult] : summands)
        b.add(dim, mult);
    return b;
}

long binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

BettiVector torus_betti(int k)
{
    if (k < 0)
        throw std::invalid_argument("torus_betti: k must be nonnegative");
    std::vector<long> r(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        r[static_cast<std::size_t>(i)] = binomial(k, i);
    return BettiVector(std::move(r));
}

WedgeDecomposition orbit_complement_wedge(int n, int orbit_dim)
{
    if (n < 1 || orbit_dim < 1 || orbit_dim > n)
        throw std::out_of_range("orbit_complement_wedge: need 1 <= orbit_dim <= n");
    WedgeDecomposition w;
    for (int i = 1; i <= orbit_dim; ++i)
        w.summands.emplace_back(2 * n - 1 - i, binomial(orbit_dim, i));
    return w;
}

namespace {

BettiVector recursive_impl(int n, int k, std::map<std::pair<int, int>, BettiVector>& memo)
{
    if (auto it = memo.find({n, k}); it != memo.end())
        return it->second;
    BettiVector result;
    if (k == n) {
        // U([n], n) is S^{2n} minus a circle orbit.
        result = BettiVector::unit(2 * n - 2);
    } else {
        // Pushout of null-homotopic maps: U([n], k+1) v S^{2n-2} v Sigma U([n-1], k).
        result = recursive_impl(n, k + 1, memo);
        result += recursive_impl(n - 1, k, memo).suspend();
        result += BettiVector::unit(2 * n - 2);
    }
    memo.emplace(std::make_pair(n, k), result);
    return result;
}

void check_conn_sum_range(int n, int k, const char* who)
{
    if (n < 2 || k < 1 || k > n)
        throw std::out_of_range(std::string(who) + ": need n >= 2 and 1 <= k <= n");
}

}  // namespace

BettiVector orbit_complement_recursive(int n, int lattice_index)
{
    if (n < 1 || lattice_index < 1 || lattice_index > n)
        throw std::out_of_range("orbit_complement_recursive: need 1 <= k <= n");
    std::map<std::pair<int, int>, BettiVector> memo;
    return recursive_impl(n, lattice_index, memo);
}

BettiVector conn_sum_betti_closed(int n, int k)
{
    check_conn_sum_range(n, k, "conn_sum_betti_closed");
    BettiVector b = BettiVector::zero(2 * n);
    b.set(0, 1);
    b.set(2 * n, 1);

    if (n == 2) {
        b.set(1, k - 1);
        b.set(3, k - 1);
        b.set(2, 2);
        return b;
    }

    const int k_prime = std::min(k, n - 3);
    for (int j = 1; j <= k_prime; ++j) {
        b.add(2 * n - 1 - j, binomial(k, j));
        b.add(j + 1, binomial(k, j));
    }
    if (k == n - 2 || k == n - 1 || k == n) {
        const long q = (k == n) ? 1 : 0;
        b.add(n + 1, q + binomial(k, n - 2));
        b.add(n - 1, binomial(k, n - 2) + q);
    }
    if (k > n - 2)
        b.add(n, 2 * binomial(k, n - 1));
    return b;
}

BettiVector conn_sum_betti_mv(int n, int k)
{
    check_conn_sum_range(n, k, "conn_sum_betti_mv");

    // X = U_B cup U_C with U_B contractible, U_C ~ (Sigma T^k) v U([n], n-k+1)
    // and U_B cap U_C ~ S^{2n-1}.
    BettiVector torus_reduced = torus_betti(k);
    torus_reduced.set(0, 0);
    const BettiVector wedge =
        torus_reduced.suspend() + orbit_complement_wedge(n, k).reduced_betti();
    const BettiVector intersection = BettiVector::unit(2 * n - 1);

    // Rank of H~_m(S^{2n-1}) -> H~_m(U_C). Only m = 2n-1 can be nonzero; it
    // must vanish because H_{2n} of a closed orientable 2n-manifold has rank 1.
    const auto inclusion_rank = [](int) { return 0L; };

    BettiVector b = BettiVector::zero(2 * n);
    b.set(0, 1);
    for (int m = 1; m <= 2 * n; ++m) {
        const long cokernel = wedge[m] - inclusion_rank(m);
        const long kernel = intersection[m - 1] - inclusion_rank(m - 1);
        b.set(m, cokernel + kernel);
    }
    return b;
}

}  // namespace toruscalc
