#include "toruscalc/cdga_models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toruscalc {

// ---------------------------------------------------------------- subsets

SubsetIndex SubsetIndex::from_mask(unsigned mask)
{
    SubsetIndex s;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i))
            s.members.push_back(i + 1);
    return s;
}

unsigned SubsetIndex::mask() const
{
    unsigned m = 0;
    for (int i : members)
        m |= 1u << (i - 1);
    return m;
}

SubsetIndex SubsetIndex::complement(int k) const
{
    return from_mask(((1u << k) - 1) & ~mask());
}

std::string SubsetIndex::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t t = 0; t < members.size(); ++t)
        os << (t ? "," : "") << members[t];
    os << '}';
    return os.str();
}

std::vector<SubsetIndex> all_subsets(int k)
{
    std::vector<SubsetIndex> out;
    for (unsigned m = 0; m < (1u << k); ++m)
        out.push_back(SubsetIndex::from_mask(m));
    return out;
}

int shuffle_sign(const SubsetIndex& i, const SubsetIndex& j)
{
    if (i.mask() & j.mask())
        return 0;
    long inversions = 0;
    for (int x : i.members)
        for (int y : j.members)
            if (x > y)
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

namespace {

// ---------------------------------------------------------------- word algebras

struct Gen {
    std::string name;
    int degree;
};

using Exponents = std::vector<int>;

/// Quotient of the free graded-commutative algebra on `gens` by the monomial
/// ideal spanned by every monomial outside the chosen basis.
class WordAlgebra {
public:
    explicit WordAlgebra(std::vector<Gen> gens) : gens_(std::move(gens)) {}

    int gen(const std::string& name) const
    {
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (gens_[g].name == name)
                return static_cast<int>(g);
        throw std::logic_error("WordAlgebra: unknown generator " + name);
    }

    void add_monomial(const Exponents& e)
    {
        if (index_.count(e))
            return;
        index_.emplace(e, static_cast<int>(monomials_.size()));
        monomials_.push_back(e);
    }

    const std::vector<Exponents>& monomials() const { return monomials_; }
    int size() const { return static_cast<int>(monomials_.size()); }

    int degree(const Exponents& e) const
    {
        int d = 0;
        for (std::size_t g = 0; g < e.size(); ++g)
            d += e[g] * gens_[g].degree;
        return d;
    }

    std::string label(const Exponents& e) const
    {
        std::string s;
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (e[g] == 0)
                continue;
            s += gens_[g].name;
            if (e[g] > 1)
                s += "^" + std::to_string(e[g]);
        }
        return s.empty() ? "1" : s;
    }

    /// Signed product of two ascending monomials; zero if it leaves the basis.
    SparseVector mono_product(const Exponents& x, const Exponents& y) const
    {
        Exponents z(gens_.size());
        long parity = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            z[g] = x[g] + y[g];
            if (gens_[g].degree % 2 != 0 && z[g] > 1)
                return {};
            // Each letter of y at g moves past the letters of x above g.
            for (std::size_t h = g + 1; h < gens_.size(); ++h)
                parity += long(y[g]) * gens_[g].degree * x[h] * gens_[h].degree;
        }
        auto it = index_.find(z);
        if (it == index_.end())
            return {};
        return SparseVector{{it->second, Rational(parity % 2 ? -1 : 1)}};
    }

    SparseVector multiply(const SparseVector& x, const SparseVector& y) const
    {
        SparseVector out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y)
                add_scaled(out, a * b, mono_product(monomials_[static_cast<std::size_t>(i)],
                                                     monomials_[static_cast<std::size_t>(j)]));
        return out;
    }

    /// Product of the generators in the given order, in this basis.
    SparseVector word(const std::vector<std::string>& letters) const
    {
        SparseVector v{{index_.at(Exponents(gens_.size())), Rational(1)}};
        for (const auto& name : letters) {
            Exponents e(gens_.size());
            e[static_cast<std::size_t>(gen(name))] = 1;
            SparseVector next;
            for (const auto& [i, a] : v)
                add_scaled(next, a, mono_product(monomials_[static_cast<std::size_t>(i)], e));
            v = std::move(next);
        }
        return v;
    }

    /// Leibniz extension of d on generators (given as elements of this algebra).
    SparseVector leibniz(const Exponents& m, const std::vector<SparseVector>& d_gen) const
    {
        std::vector<int> letters;
        for (std::size_t g = 0; g < m.size(); ++g)
            for (int t = 0; t < m[g]; ++t)
                letters.push_back(static_cast<int>(g));
        SparseVector out;
        int prefix_degree = 0;
        for (std::size_t t = 0; t < letters.size(); ++t) {
            SparseVector left = word_of(letters, 0, t);
            SparseVector right = word_of(letters, t + 1, letters.size());
            const auto term = multiply(multiply(left, d_gen[static_cast<std::size_t>(letters[t])]), right);
            add_scaled(out, prefix_degree % 2 ? -1 : 1, term);
            prefix_degree += gens_[static_cast<std::size_t>(letters[t])].degree;
        }
        return out;
    }

    /// Builds the CDGA; `differential` maps a basis index to its image.
    CdgaPtr build(const std::function<SparseVector(int)>& differential) const
    {
        CdgaBuilder b;
        for (const auto& m : monomials_)
            b.add_basis(label(m), degree(m));
        b.set_unit(SparseVector{{index_.at(Exponents(gens_.size())), Rational(1)}});
        for (int i = 0; i < size(); ++i) {
            for (int j = 0; j < size(); ++j)
                b.set_product(i, j, mono_product(monomials_[static_cast<std::size_t>(i)],
                                                 monomials_[static_cast<std::size_t>(j)]));
            if (differential)
                b.set_differential(i, differential(i));
        }
        return std::move(b).build();
    }

private:
    SparseVector word_of(const std::vector<int>& letters, std::size_t from, std::size_t to) const
    {
        Exponents e(gens_.size());
        for (std::size_t t = from; t < to; ++t)
            ++e[static_cast<std::size_t>(letters[t])];
        // Letters are ascending, so the sub-word is already normalized.
        auto it = index_.find(e);
        if (it == index_.end())
            return {};
        return SparseVector{{it->second, Rational(1)}};
    }

    std::vector<Gen> gens_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, int> index_;
};

std::string a_name(int i) { return "a" + std::to_string(i); }
std::string da_name(int i) { return "da" + std::to_string(i); }

std::vector<std::string> a_letters(const SubsetIndex& s)
{
    std::vector<std::string> out;
    for (int i : s.members)
        out.push_back(a_name(i));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> x, const std::vector<std::string>& y)
{
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

void check_nk(int n, int k, const char* who)
{
    if (n < 2 || k < 1 || k > n || 2 * n - k - 1 < 1)
        throw std::out_of_range(std::string(who) + ": need n >= 2 and 1 <= k <= n");
}

std::vector<Gen> a_gens(int k)
{
    std::vector<Gen> g;
    for (int i = 1; i <= k; ++i)
        g.push_back({a_name(i), 1});
    return g;
}

WordAlgebra exterior_words(int k)
{
    WordAlgebra w(a_gens(k));
    for (const auto& s : all_subsets(k)) {
        Exponents e(static_cast<std::size_t>(k));
        for (int i : s.members)
            e[static_cast<std::size_t>(i - 1)] = 1;
        w.add_monomial(e);
    }
    return w;
}

WordAlgebra boundary_words(int n, int k)
{
    auto gens = a_gens(k);
    gens.push_back({"b", 2 * n - k - 1});
    WordAlgebra w(gens);
    for (int tail = 0; tail <= 1; ++tail)
        for (const auto& s : all_subsets(k)) {
            Exponents e(static_cast<std::size_t>(k) + 1);
            for (int i : s.members)
                e[static_cast<std::size_t>(i - 1)] = 1;
            e[static_cast<std::size_t>(k)] = tail;
            w.add_monomial(e);
        }
    return w;
}

WordAlgebra complement_words(int n, int k)
{
    auto gens = a_gens(k);
    gens.push_back({"b'", 2 * n - k - 1});
    gens.push_back({"c", 2 * n});
    WordAlgebra w(gens);
    const auto width = static_cast<std::size_t>(k) + 2;
    w.add_monomial(Exponents(width));
    Exponents c(width);
    c[width - 1] = 1;
    w.add_monomial(c);
    for (const auto& s : all_subsets(k)) {
        Exponents e(width);
        for (int i : s.members)
            e[static_cast<std::size_t>(i - 1)] = 1;
        e[static_cast<std::size_t>(k)] = 1;
        w.add_monomial(e);
    }
    return w;
}

WordAlgebra truncated_free_words(int k, int truncation)
{
    auto gens = a_gens(k);
    for (int i = 1; i <= k; ++i)
        gens.push_back({da_name(i), 2});
    WordAlgebra w(gens);
    // Enumerate exponent vectors of total degree <= truncation.
    Exponents e(static_cast<std::size_t>(2 * k));
    std::function<void(int, int)> rec = [&](int g, int deg) {
        if (g == 2 * k) {
            w.add_monomial(e);
            return;
        }
        const int gd = g < k ? 1 : 2;
        const int max_e = g < k ? 1 : (truncation - deg) / 2;
        for (int x = 0; x <= max_e && deg + x * gd <= truncation; ++x) {
            e[static_cast<std::size_t>(g)] = x;
            rec(g + 1, deg + x * gd);
        }
        e[static_cast<std::size_t>(g)] = 0;
    };
    rec(0, 0);
    // Ascending degree order keeps the basis listing readable.
    std::vector<Exponents> sorted = w.monomials();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Exponents& x, const Exponents& y) { return w.degree(x) < w.degree(y); });
    WordAlgebra out(gens);
    for (const auto& m : sorted)
        out.add_monomial(m);
    return out;
}

/// The monomial lies in I: two or more da's, or one da_s together with some a_i, i <= s.
bool in_I(const Exponents& e, int k)
{
    int das = 0;
    int s = 0;
    for (int i = 1; i <= k; ++i) {
        das += e[static_cast<std::size_t>(k + i - 1)];
        if (e[static_cast<std::size_t>(k + i - 1)] > 0)
            s = i;
    }
    if (das >= 2)
        return true;
    if (das == 0)
        return false;
    for (int i = 1; i <= s; ++i)
        if (e[static_cast<std::size_t>(i - 1)] > 0)
            return true;
    return false;
}

}  // namespace

// ---------------------------------------------------------------- basic models

CdgaPtr exterior_torus_model(int k)
{
    if (k < 0)
        throw std::out_of_range("exterior_torus_model: k must be nonnegative");
    return exterior_words(k).build(nullptr);
}

CdgaPtr boundary_model(int n, int k)
{
    check_nk(n, k, "boundary_model");
    return boundary_words(n, k).build(nullptr);
}

namespace {

CdgaPtr build_complement(const WordAlgebra& w, int k)
{
    std::vector<std::string> top{"b'"};
    for (int i = 1; i <= k; ++i)
        top.push_back(a_name(i));
    const SparseVector source = w.word(top);  // +-e_m for m = a_1..a_k b'
    const SparseVector c = w.word({"c"});
    const int m = source.begin()->first;
    const Rational sign = source.begin()->second;
    return w.build([&](int i) { return i == m ? scaled(c, sign) : SparseVector{}; });
}

}  // namespace

CdgaPtr complement_model(int n, int k)
{
    check_nk(n, k, "complement_model");
    return build_complement(complement_words(n, k), k);
}

std::string alpha_label(const SubsetIndex& i)
{
    return "alpha" + i.to_string();
}

std::string alpha_dual_label(const SubsetIndex& i)
{
    return "alpha#" + i.to_string();
}

CdgaPtr model_A(int n, int k)
{
    check_nk(n, k, "model_A");
    CdgaBuilder b;
    const int one = b.add_basis("1", 0);
    std::vector<std::pair<int, int>> pairs;  // (s^{-1} alpha_I, alpha_I^#)
    std::vector<int> sizes;
    for (const auto& s : all_subsets(k)) {
        if (s.empty())
            continue;
        const int sz = static_cast<int>(s.size());
        const int x = b.add_basis(alpha_label(s), sz + 1);
        const int y = b.add_basis(alpha_dual_label(s), 2 * n - 1 - sz);
        pairs.emplace_back(x, y);
        sizes.push_back(sz);
    }
    const int mu = b.add_basis("mu", 2 * n);
    b.set_unit(basis_vector(one));
    for (int i = 0; i < b.size(); ++i) {
        b.set_product(one, i, basis_vector(i));
        b.set_product(i, one, basis_vector(i));
    }
    (void)mu;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [x, y] = pairs[t];
        const long parity = long(sizes[t] + 1) * (2 * n - 1 - sizes[t]);
        b.set_product(x, y, SparseVector{{mu, Rational(-1)}});
        b.set_product(y, x, SparseVector{{mu, Rational(parity % 2 ? 1 : -1)}});
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------- E'

namespace {

struct EprimeParts {
    WordAlgebra words;
    EprimeConstruction construction;
};

EprimeParts build_eprime(int k)
{
    if (k < 1)
        throw std::out_of_range("eprime_model: k must be positive");
    const int truncation = k + 2;
    WordAlgebra t = truncated_free_words(k, truncation);
    std::vector<SparseVector> d_gen;
    for (int i = 1; i <= k; ++i)
        d_gen.push_back(t.word({da_name(i)}));
    for (int i = 1; i <= k; ++i)
        d_gen.emplace_back();

    EprimeConstruction ec;
    ec.truncated = t.build([&](int i) { return t.leibniz(t.monomials()[static_cast<std::size_t>(i)], d_gen); });

    std::vector<SparseVector> generators;
    std::map<int, int> expected_dims;
    for (int i = 0; i < t.size(); ++i)
        if (in_I(t.monomials()[static_cast<std::size_t>(i)], k)) {
            generators.push_back(basis_vector(i));
            ++expected_dims[t.degree(t.monomials()[static_cast<std::size_t>(i)])];
        }
    ec.ideal = ideal_closure(ec.truncated, generators);
    ec.ideal_is_differential = ec.ideal.closed && graded_dimensions(ec.ideal.span) == expected_dims;

    const BettiVector h = subcomplex_betti(*ec.truncated, ec.ideal.span);
    ec.ideal_acyclic = true;
    for (int p = 0; p < truncation; ++p)
        if (h[p] != 0)
            ec.ideal_acyclic = false;
    ec.ideal.acyclic = ec.ideal_acyclic;

    ec.quotient = quotient_cdga(ec.ideal);

    std::set<std::string> expected;
    for (const auto& s : all_subsets(k)) {
        Exponents e(static_cast<std::size_t>(2 * k));
        for (int i : s.members)
            e[static_cast<std::size_t>(i - 1)] = 1;
        expected.insert(t.label(e));
        for (int sdx = 1; sdx <= k; ++sdx) {
            if (!s.empty() && s.members.front() <= sdx)
                continue;
            Exponents f = e;
            f[static_cast<std::size_t>(k + sdx - 1)] = 1;
            expected.insert(t.label(f));
        }
    }
    std::set<std::string> actual;
    const Cdga& q = *ec.quotient.algebra;
    for (int i = 0; i < q.dimension(); ++i)
        actual.insert(q.label(i));
    ec.basis_matches = actual == expected;
    return EprimeParts{std::move(t), std::move(ec)};
}

}  // namespace

EprimeConstruction eprime_construction(int k)
{
    return build_eprime(k).construction;
}

CdgaPtr eprime_model(int k)
{
    return build_eprime(k).construction.quotient.algebra;
}

// ---------------------------------------------------------------- phi, phi', pullback

namespace {

/// Shared construction state for one (n, k).
struct Context {
    int n;
    int k;
    WordAlgebra cw;
    WordAlgebra bw;
    CdgaPtr C;
    CdgaPtr B;
    EprimeParts ep;
    CdgaPtr E;
    CdgaPtr Bp;

    Context(int n_, int k_)
        : n(n_), k(k_), cw(boundary_words(n_, k_)), bw(complement_words(n_, k_)),
          C(cw.build(nullptr)), B(build_complement(bw, k_)), ep(build_eprime(k_)),
          E(ep.construction.quotient.algebra), Bp(tensor_cdga(E, B))
    {
    }

    SparseVector e_word(const std::vector<std::string>& letters) const
    {
        return ep.construction.quotient.projection.apply(ep.words.word(letters));
    }
    SparseVector b_word(const std::vector<std::string>& letters) const { return bw.word(letters); }
    SparseVector c_word(const std::vector<std::string>& letters) const { return cw.word(letters); }

    /// f : E' -> C, a_i -> a_i, da_i -> 0.
    SparseVector f_image(int e_index) const
    {
        const auto& rep = ep.construction.quotient.representatives[static_cast<std::size_t>(e_index)];
        const auto& exps = ep.words.monomials()[static_cast<std::size_t>(rep.begin()->first)];
        std::vector<std::string> letters;
        for (int i = 1; i <= k; ++i) {
            if (exps[static_cast<std::size_t>(k + i - 1)] > 0)
                return {};
            if (exps[static_cast<std::size_t>(i - 1)] > 0)
                letters.push_back(a_name(i));
        }
        return c_word(letters);
    }

    Morphism make_phi() const
    {
        Morphism f;
        f.name = "phi";
        f.source = B;
        f.target = C;
        const int width = k + 2;
        for (int i = 0; i < B->dimension(); ++i) {
            const auto& exps = bw.monomials()[static_cast<std::size_t>(i)];
            if (exps[static_cast<std::size_t>(width - 1)] > 0) {
                f.images.emplace_back();  // c -> 0
                continue;
            }
            std::vector<std::string> tail;
            for (int a = 1; a <= k; ++a)
                if (exps[static_cast<std::size_t>(a - 1)] > 0)
                    tail.push_back(a_name(a));
            if (exps[static_cast<std::size_t>(k)] == 0) {
                f.images.push_back(C->unit());
                continue;
            }
            // b' a_J -> b a_J, compared through the normalized words.
            const SparseVector src = b_word(concat({"b'"}, tail));
            f.images.push_back(scaled(c_word(concat({"b"}, tail)), src.begin()->second));
        }
        return f;
    }

    Morphism make_phi_prime(const Morphism& ph) const
    {
        Morphism f;
        f.name = "phi'";
        f.source = Bp;
        f.target = C;
        for (int i = 0; i < E->dimension(); ++i) {
            const auto fi = f_image(i);
            for (int j = 0; j < B->dimension(); ++j)
                f.images.push_back(C->multiply(fi, ph.images[static_cast<std::size_t>(j)]));
        }
        return f;
    }
};

Morphism verified(Morphism f)
{
    const auto report = verify_morphism(f);
    if (!f.chain_map || !f.algebra_map)
        throw std::logic_error(f.name + " failed verification: " +
                               (report.failures.empty() ? std::string() : report.failures.front()));
    return f;
}

}  // namespace

Morphism phi(int n, int k)
{
    check_nk(n, k, "phi");
    Context ctx(n, k);
    return verified(ctx.make_phi());
}

Morphism phi_prime(int n, int k)
{
    check_nk(n, k, "phi_prime");
    Context ctx(n, k);
    return verified(ctx.make_phi_prime(ctx.make_phi()));
}

PullbackResult pullback_kernel(const Morphism& f, const Morphism& g)
{
    if (f.target != g.target)
        throw std::invalid_argument("pullback_kernel: maps must share their target");
    const Cdga& x = *f.source;
    const Cdga& y = *g.source;
    const Cdga& z = *f.target;
    PullbackResult result;
    result.product = product_cdga(f.source, g.source);
    const int off = x.dimension();

    GradedVectors basis;
    std::vector<std::string> labels;
    const int top = std::max(x.max_degree(), y.max_degree());
    for (int p = 0; p <= top; ++p) {
        const auto& xi = x.indices_of_degree(p);
        const auto& yi = y.indices_of_degree(p);
        std::vector<RatVector> cols;
        for (int i : xi)
            cols.push_back(z.to_dense(f.images[static_cast<std::size_t>(i)], p));
        for (int j : yi) {
            auto col = z.to_dense(g.images[static_cast<std::size_t>(j)], p);
            for (auto& c : col)
                c = -c;
            cols.push_back(std::move(col));
        }
        if (cols.empty())
            continue;
        const auto rk = rank_and_kernel(RatMatrix::from_columns(static_cast<std::size_t>(z.dimension_in_degree(p)), cols));
        for (const auto& kv : rk.kernel_basis) {
            SparseVector v, left, right;
            for (std::size_t t = 0; t < xi.size(); ++t)
                if (kv[t] != 0) {
                    v.emplace(xi[t], kv[t]);
                    left.emplace(xi[t], kv[t]);
                }
            for (std::size_t t = 0; t < yi.size(); ++t)
                if (kv[xi.size() + t] != 0) {
                    v.emplace(yi[t] + off, kv[xi.size() + t]);
                    right.emplace(yi[t], kv[xi.size() + t]);
                }
            labels.push_back("(" + x.render(left) + ", " + y.render(right) + ")");
            basis[p].push_back(std::move(v));
        }
    }
    result.kernel = subalgebra(result.product, basis, labels);
    return result;
}

// ---------------------------------------------------------------- D, J, D/J, xi, D-bar

namespace {

struct ElementKit {
    const Context& ctx;
    const Morphism& ph;
    const Morphism& php;
    const Cdga& P;

    SparseVector tens(const SparseVector& x, const SparseVector& y) const
    {
        return tensor_element(*ctx.E, *ctx.B, x, y);
    }
    SparseVector pair(const SparseVector& x, const SparseVector& y) const
    {
        return pair_element(*ctx.Bp, x, y);
    }
    SparseVector a(const SubsetIndex& s) const { return ctx.e_word(a_letters(s)); }
    /// da_{i1} a_{i2} ... a_{il}
    SparseVector da(const SubsetIndex& s) const
    {
        std::vector<std::string> letters{da_name(s.members.front())};
        for (std::size_t t = 1; t < s.members.size(); ++t)
            letters.push_back(a_name(s.members[t]));
        return ctx.e_word(letters);
    }
    SparseVector bpa(const std::vector<std::string>& tail) const { return ctx.b_word(concat({"b'"}, tail)); }
    SparseVector c() const { return ctx.b_word({"c"}); }
    SparseVector one_e() const { return ctx.E->unit(); }
    SparseVector one_b() const { return ctx.B->unit(); }

    SparseVector residual(const SparseVector& x, const SparseVector& y) const
    {
        SparseVector r = php.apply(x);
        add_scaled(r, -1, ph.apply(y));
        return r;
    }
    bool member(const SparseVector& x, const SparseVector& y) const { return residual(x, y).empty(); }

    /// The y in span{1, b' a_J} with phi(y) = phi'(x).
    SparseVector lift(const SparseVector& x) const
    {
        const SparseVector target = php.apply(x);
        if (target.empty())
            return {};
        const int p = *ctx.C->degree_of(target);
        const auto& idx = ctx.B->indices_of_degree(p);
        Subspace s(static_cast<std::size_t>(ctx.C->dimension_in_degree(p)));
        for (int j : idx)
            s.add(ctx.C->to_dense(ph.images[static_cast<std::size_t>(j)], p));
        const auto coeff = s.coordinates(ctx.C->to_dense(target, p));
        if (!coeff)
            throw std::logic_error("lift: phi'(x) outside the image of phi");
        SparseVector y;
        for (std::size_t t = 0; t < idx.size(); ++t)
            if ((*coeff)[t] != 0)
                y.emplace(idx[t], (*coeff)[t]);
        return y;
    }

    ListedElement fixed(std::string family, std::string printed, const SparseVector& x, const SparseVector& y) const
    {
        ListedElement e{std::move(family), std::move(printed), member(x, y), false, pair(x, y)};
        if (!e.printed_member)
            throw std::logic_error("listed element " + e.family + " " + e.printed + " is not in D");
        return e;
    }

    /// (x, y) with y as printed; replaced by (x, lift(x)) if that is not in D.
    ListedElement lifted(std::string family, std::string printed, const SparseVector& x, const SparseVector& y) const
    {
        ListedElement e{std::move(family), std::move(printed), member(x, y), false, pair(x, y)};
        if (!e.printed_member) {
            e.adjusted = true;
            e.vector = pair(x, lift(x));
        }
        return e;
    }

    /// (x + sign * z, 0) with the printed sign; the sign is re-solved if needed.
    ListedElement signed_sum(std::string family, std::string printed, const SparseVector& x, int sign,
                             const SparseVector& z) const
    {
        SparseVector v = x;
        add_scaled(v, sign, z);
        ListedElement e{std::move(family), std::move(printed), member(v, {}), false, pair(v, {})};
        if (!e.printed_member) {
            const SparseVector u = php.apply(x);
            const SparseVector w = php.apply(z);
            if (w.empty())
                throw std::logic_error("signed_sum: cannot solve sign for " + e.family);
            const int key = w.begin()->first;
            const Rational tau = u.count(key) ? Rational(-u.at(key) / w.begin()->second) : Rational(0);
            SparseVector fixed_v = x;
            add_scaled(fixed_v, tau, z);
            if (!member(fixed_v, {}))
                throw std::logic_error("signed_sum: no sign places " + e.family + " in D");
            e.adjusted = true;
            e.vector = pair(fixed_v, {});
        }
        return e;
    }
};

std::string power_sign(int e)
{
    return e % 2 ? "-" : "+";
}

std::vector<std::string> all_a(int k)
{
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(a_name(i));
    return out;
}

SparseVector to_d(const SubalgebraResult& d, const SparseVector& v, const std::string& what)
{
    auto c = coordinates_in(d, v);
    if (!c)
        throw std::logic_error(what + " does not lie in D");
    return *c;
}

}  // namespace

SurgeryModels build_surgery_models(int n, int k)
{
    check_nk(n, k, "build_surgery_models");
    Context ctx(n, k);
    SurgeryModels m;
    m.n = n;
    m.k = k;
    m.C = ctx.C;
    m.B = ctx.B;
    m.Eprime = ctx.E;
    m.Bprime = ctx.Bp;
    m.eprime = ctx.ep.construction;
    m.phi = verified(ctx.make_phi());
    m.phi_prime = verified(ctx.make_phi_prime(m.phi));

    PullbackResult pb = pullback_kernel(m.phi_prime, m.phi);
    m.P = pb.product;
    m.d_inclusion = std::move(pb.kernel);
    m.D = m.d_inclusion.algebra;

    const ElementKit kit{ctx, m.phi, m.phi_prime, *m.P};
    const auto subsets = all_subsets(k);
    const SubsetIndex full = SubsetIndex::from_mask((1u << k) - 1);
    const auto zero = SparseVector{};

    // Listed generators of D.
    for (const auto& s : subsets)
        if (!s.empty())
            m.gen_D.push_back(kit.fixed("(da_I, 0)", "I=" + s.to_string(), kit.tens(kit.da(s), kit.one_b()), zero));
    m.gen_D.push_back(kit.fixed("(c, 0)", "", kit.tens(kit.one_e(), kit.c()), zero));
    m.gen_D.push_back(kit.fixed("(0, c)", "", zero, kit.c()));
    for (const auto& s : subsets)
        m.gen_D.push_back(kit.lifted("(a_I⊗b', (-1)^|I| b'a_I)", "I=" + s.to_string(),
                                     kit.tens(kit.a(s), kit.bpa({})),
                                     scaled(kit.bpa(a_letters(s)), s.size() % 2 ? -1 : 1)));
    for (const auto& s : subsets)
        m.gen_D.push_back(kit.fixed("(1⊗b'a_I, b'a_I)", "I=" + s.to_string(), kit.tens(kit.one_e(), kit.bpa(a_letters(s))),
                                    kit.bpa(a_letters(s))));
    for (const auto& s : subsets)
        for (const auto& j : subsets) {
            const unsigned jm = j.mask();
            if ((jm & ~s.mask()) || jm == s.mask())
                continue;
            const SubsetIndex jp = SubsetIndex::from_mask(s.mask() & ~jm);
            m.gen_D.push_back(kit.signed_sum("(a_I⊗b' + sign(rho) a_J⊗b'a_J', 0)",
                                             "I=" + s.to_string() + " J=" + j.to_string() + " J'=" + jp.to_string(),
                                             kit.tens(kit.a(s), kit.bpa({})), shuffle_sign(j, jp),
                                             kit.tens(kit.a(j), kit.bpa(a_letters(jp)))));
        }

    // The listed elements of J, as printed.
    const SparseVector cc = kit.tens(kit.one_e(), kit.c());
    m.j_list.push_back(kit.fixed("(c, c)", "", cc, kit.c()));
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        SparseVector x = kit.tens(kit.da(s), kit.bpa(a_letters(s.complement(k))));
        add_scaled(x, -1, cc);
        m.j_list.push_back(kit.fixed("(da_I⊗b'a_I^c - c, 0)", "I=" + s.to_string(), x, zero));
    }
    m.j_list.push_back(kit.lifted("(a_[k]⊗b', (-1)^k b'a_[k])", power_sign(k),
                                  kit.tens(kit.a(full), kit.bpa({})),
                                  scaled(kit.bpa(all_a(k)), k % 2 ? -1 : 1)));
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        const SubsetIndex sc = s.complement(k);
        m.j_list.push_back(kit.signed_sum("(a_I⊗b'a_I^c + sign(rho) b'a_[k], 0)", "I=" + s.to_string(),
                                          kit.tens(kit.a(s), kit.bpa(a_letters(sc))), shuffle_sign(s, sc),
                                          kit.tens(kit.one_e(), kit.bpa(all_a(k)))));
    }
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        for (const auto& j : subsets) {
            if (j.mask() == s.complement(k).mask())
                continue;
            const std::string printed = "I=" + s.to_string() + " J=" + j.to_string();
            m.j_list.push_back(kit.fixed("(da_I⊗b'a_J, 0)", printed, kit.tens(kit.da(s), kit.bpa(a_letters(j))), zero));
            m.j_list.push_back(kit.lifted("(a_I⊗b'a_J, (-1)^|I| b'a_I a_J)", printed,
                                          kit.tens(kit.a(s), kit.bpa(a_letters(j))),
                                          scaled(kit.bpa(concat(a_letters(s), a_letters(j))), s.size() % 2 ? -1 : 1)));
        }
    }
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        m.j_list.push_back(kit.fixed("(da_I'⊗c, 0)", "I'=" + s.to_string(), kit.tens(kit.da(s), kit.c()), zero));
        m.j_list.push_back(kit.fixed("(da_I'⊗b'a_[k], 0)", "I'=" + s.to_string(),
                                     kit.tens(kit.da(s), kit.bpa(all_a(k))), zero));
    }

    // Amended list. For disjoint I, J with U = I+J, (a_I⊗b'a_J, ...) is kept
    // only when min I < min U^c; otherwise the relation to 1⊗b'a_U is used.
    // Overlapping I, J and (a_I⊗c, 0) are added.
    m.j_list_amended.push_back(kit.fixed("(c, c)", "", cc, kit.c()));
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        // The sign of c is the one making this d(a_I⊗b'a_I^c + sign(rho) b'a_[k], 0).
        const SparseVector lead = kit.tens(kit.da(s), kit.bpa(a_letters(s.complement(k))));
        const ListedElement f4 = kit.signed_sum("", "", kit.tens(kit.a(s), kit.bpa(a_letters(s.complement(k)))),
                                                shuffle_sign(s, s.complement(k)),
                                                kit.tens(kit.one_e(), kit.bpa(all_a(k))));
        const SparseVector lead_pair = kit.pair(lead, zero);
        SparseVector x = m.P->d(f4.vector);
        const auto& [lead_index, lead_coeff] = *lead_pair.begin();
        if (!x.count(lead_index))
            throw std::logic_error("d(a_I⊗b'a_I^c + ..., 0) misses da_I⊗b'a_I^c");
        x = scaled(x, lead_coeff / x.at(lead_index));
        SparseVector printed = lead;
        add_scaled(printed, -1, cc);
        const SparseVector printed_pair = kit.pair(printed, zero);
        ListedElement e{"(da_I⊗b'a_I^c - c, 0)", "I=" + s.to_string(), kit.member(printed, zero),
                        x != printed_pair, x};
        m.j_list_amended.push_back(std::move(e));
    }
    m.j_list_amended.push_back(kit.lifted("(a_[k]⊗b', (-1)^k b'a_[k])", power_sign(k),
                                          kit.tens(kit.a(full), kit.bpa({})),
                                          scaled(kit.bpa(all_a(k)), k % 2 ? -1 : 1)));
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        for (const auto& j : subsets) {
            const std::string printed = "I=" + s.to_string() + " J=" + j.to_string();
            const SubsetIndex u = SubsetIndex::from_mask(s.mask() | j.mask());
            const SubsetIndex uc = u.complement(k);
            if (s.mask() & j.mask()) {
                m.j_list_amended.push_back(kit.lifted("(a_I⊗b'a_J, 0)", printed,
                                                      kit.tens(kit.a(s), kit.bpa(a_letters(j))), zero));
            } else if (!uc.empty() && s.members.front() < uc.members.front()) {
                m.j_list_amended.push_back(kit.lifted("(a_I⊗b'a_J, (-1)^|I| b'a_I a_J)", printed,
                                                      kit.tens(kit.a(s), kit.bpa(a_letters(j))),
                                                      scaled(kit.bpa(a_letters(u)), s.size() % 2 ? -1 : 1)));
            } else {
                m.j_list_amended.push_back(kit.signed_sum("(a_I⊗b'a_J + sign(rho) b'a_{I+J}, 0)", printed,
                                                          kit.tens(kit.a(s), kit.bpa(a_letters(j))),
                                                          shuffle_sign(s, j),
                                                          kit.tens(kit.one_e(), kit.bpa(a_letters(u)))));
            }
            if (j.mask() != s.complement(k).mask())
                m.j_list_amended.push_back(
                    kit.fixed("(da_I⊗b'a_J, 0)", printed, kit.tens(kit.da(s), kit.bpa(a_letters(j))), zero));
        }
        m.j_list_amended.push_back(kit.fixed("(da_I'⊗c, 0)", "I'=" + s.to_string(), kit.tens(kit.da(s), kit.c()), zero));
        m.j_list_amended.push_back(kit.fixed("(a_I⊗c, 0)", "I=" + s.to_string(), kit.tens(kit.a(s), kit.c()), zero));
    }

    auto close = [&](const std::vector<ListedElement>& list) {
        std::vector<SparseVector> gens;
        for (const auto& e : list)
            gens.push_back(to_d(m.d_inclusion, e.vector, e.family));
        return ideal_closure(m.D, gens);
    };
    m.J_printed = close(m.j_list);
    m.J = close(m.j_list_amended);
    m.quotient = quotient_cdga(m.J);
    m.DJ = m.quotient.algebra;

    // xi : A -> D and its composite with the projection.
    m.A = model_A(n, k);
    m.xi.name = "xi";
    m.xi.source = m.A;
    m.xi.target = m.D;
    m.xi.images.resize(static_cast<std::size_t>(m.A->dimension()));
    m.xi.images[static_cast<std::size_t>(m.A->index("1"))] = m.D->unit();
    m.xi.images[static_cast<std::size_t>(m.A->index("mu"))] = to_d(m.d_inclusion, kit.pair(zero, kit.c()), "(0,c)");
    for (const auto& s : subsets) {
        if (s.empty())
            continue;
        m.xi.images[static_cast<std::size_t>(m.A->index(alpha_label(s)))] =
            to_d(m.d_inclusion, kit.pair(kit.tens(kit.da(s), kit.one_b()), zero), "xi(alpha)");
        const auto tail = a_letters(s.complement(k));
        m.xi.images[static_cast<std::size_t>(m.A->index(alpha_dual_label(s)))] =
            to_d(m.d_inclusion, kit.pair(kit.tens(kit.one_e(), kit.bpa(tail)), kit.bpa(tail)), "xi(alpha#)");
    }
    // Sign of xi(alpha#_I) so that xi(alpha_I) xi(alpha#_I) = -xi(mu) modulo J.
    {
        const auto& proj = m.quotient.projection;
        const SparseVector mu = proj.apply(m.xi.images[static_cast<std::size_t>(m.A->index("mu"))]);
        for (const auto& s : subsets) {
            if (s.empty())
                continue;
            auto& dual = m.xi.images[static_cast<std::size_t>(m.A->index(alpha_dual_label(s)))];
            const auto& alpha = m.xi.images[static_cast<std::size_t>(m.A->index(alpha_label(s)))];
            const SparseVector prod = proj.apply(m.D->multiply(alpha, dual));
            const int key = mu.begin()->first;
            if (!prod.count(key))
                continue;
            const Rational lambda = prod.at(key) / mu.at(key);
            if (lambda == 1) {
                dual = scaled(dual, -1);
                ++m.xi_dual_signs_flipped;
            }
        }
    }
    verify_morphism(m.xi);
    m.pi_xi.name = "pi xi";
    m.pi_xi.source = m.A;
    m.pi_xi.target = m.DJ;
    for (const auto& img : m.xi.images)
        m.pi_xi.images.push_back(m.quotient.projection.apply(img));
    verify_morphism(m.pi_xi);
    verify_morphism(m.quotient.projection);

    // D-bar: the kernel of phi' - phi restricted to (E' (+) B) x B.
    {
        const Cdga& e = *ctx.E;
        const Cdga& b = *ctx.B;
        const int unit_e = e.unit().begin()->first;
        const int unit_b = b.unit().begin()->first;
        std::set<int> columns;
        for (int i = 0; i < e.dimension(); ++i)
            columns.insert(i * b.dimension() + unit_b);
        for (int j = 0; j < b.dimension(); ++j)
            columns.insert(unit_e * b.dimension() + j);
        for (int j = 0; j < b.dimension(); ++j)
            columns.insert(ctx.Bp->dimension() + j);

        std::map<int, std::vector<int>> by_degree;
        for (int col : columns)
            by_degree[m.P->degree(col)].push_back(col);
        for (const auto& [p, cols] : by_degree) {
            std::vector<RatVector> dense;
            for (int col : cols) {
                const SparseVector v = basis_vector(col);
                SparseVector x, y;
                if (col < ctx.Bp->dimension())
                    x = v;
                else
                    y = basis_vector(col - ctx.Bp->dimension());
                dense.push_back(ctx.C->to_dense(kit.residual(x, y), p));
            }
            const auto rk = rank_and_kernel(
                RatMatrix::from_columns(static_cast<std::size_t>(ctx.C->dimension_in_degree(p)), dense));
            for (const auto& kv : rk.kernel_basis) {
                SparseVector v;
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (kv[t] != 0)
                        v.emplace(cols[t], kv[t]);
                m.dbar[p].push_back(to_d(m.d_inclusion, v, "D-bar element"));
            }
        }

        m.dbar_list.push_back(ListedElement{"(1, 1)", "", true, false, m.P->unit()});
        for (const auto& s : subsets)
            if (!s.empty())
                m.dbar_list.push_back(kit.fixed("(da_I, 0)", "I=" + s.to_string(), kit.tens(kit.da(s), kit.one_b()), zero));
        m.dbar_list.push_back(kit.fixed("(c, 0)", "", kit.tens(kit.one_e(), kit.c()), zero));
        m.dbar_list.push_back(kit.fixed("(0, c)", "", zero, kit.c()));
        for (const auto& s : subsets)
            m.dbar_list.push_back(kit.fixed("(b'a_I, b'a_I)", "I=" + s.to_string(),
                                            kit.tens(kit.one_e(), kit.bpa(a_letters(s))), kit.bpa(a_letters(s))));
    }
    m.eta = m.xi;
    m.eta.name = "eta";
    verify_morphism(m.eta);
    return m;
}

// ---------------------------------------------------------------- verification

bool ModelVerification::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
}

const std::vector<std::string>& model_check_groups()
{
    static const std::vector<std::string> groups{"axioms", "models",   "pullback", "ideal",
                                                 "quotient", "pi-xi", "eta"};
    return groups;
}

namespace {

std::string first_failure(const CheckReport& r)
{
    return r.failures.empty() ? std::string() : r.failures.front();
}

Subspace graded_span(const Cdga& x, const GradedVectors& g, int p)
{
    Subspace s(static_cast<std::size_t>(x.dimension_in_degree(p)));
    if (auto it = g.find(p); it != g.end())
        for (const auto& v : it->second)
            s.add(x.to_dense(v, p));
    return s;
}

BettiVector sphere_betti(int dim)
{
    BettiVector b = BettiVector::unit(dim);
    b.set(0, 1);
    return b;
}

BettiVector product_betti(const BettiVector& x, const BettiVector& y)
{
    BettiVector out;
    for (int i = 0; i <= x.top_degree(); ++i)
        for (int j = 0; j <= y.top_degree(); ++j)
            if (x[i] * y[j] != 0)
                out.add(i + j, x[i] * y[j]);
    return out;
}

}  // namespace

ModelVerification verify_models(const SurgeryModels& m, const std::set<std::string>& groups)
{
    ModelVerification v;
    v.n = m.n;
    v.k = m.k;
    const int n = m.n;
    const int k = m.k;
    auto add = [&](const std::string& group, const std::string& name, bool ok, std::string detail = {}) {
        v.checks.push_back({group, name, ok, std::move(detail)});
    };
    auto want = [&](const std::string& g) { return groups.count(g) > 0; };

    v.h_D = cohomology_betti(*m.D);
    v.h_DJ = cohomology_betti(*m.DJ);
    v.h_A = cohomology_betti(*m.A);
    v.h_Dbar = subcomplex_betti(*m.D, m.dbar);
    const BettiVector mv = conn_sum_betti_mv(n, k);

    if (want("axioms")) {
        const std::vector<std::pair<std::string, CdgaPtr>> algebras{
            {"C", m.C}, {"B", m.B}, {"E'", m.Eprime}, {"B'", m.Bprime}, {"D", m.D}, {"D/J", m.DJ}, {"A", m.A}};
        for (const auto& [name, x] : algebras) {
            const auto r = check_axioms(*x);
            add("axioms", name, r.ok, r.ok ? "dim " + std::to_string(x->dimension()) : first_failure(r));
        }
    }

    if (want("models")) {
        add("models", "phi chain and algebra map", m.phi.chain_map && m.phi.algebra_map);
        add("models", "phi' chain and algebra map", m.phi_prime.chain_map && m.phi_prime.algebra_map);
        add("models", "phi' surjective", m.phi_prime.surjective);
        add("models", "I is a differential ideal", m.eprime.ideal_is_differential);
        add("models", "H(I) = 0", m.eprime.ideal_acyclic);
        add("models", "E' basis", m.eprime.basis_matches);
        add("models", "H(E') = Q", cohomology_betti(*m.Eprime) == BettiVector{1});
        const BettiVector hc = cohomology_betti(*m.C);
        add("models", "H(C) = H(T^k) (x) H(S^{2n-k-1})", hc == product_betti(torus_betti(k), sphere_betti(2 * n - k - 1)),
            hc.to_string());
        BettiVector wedge = orbit_complement_wedge(n, k).reduced_betti();
        wedge.add(0, 1);
        const BettiVector hb = cohomology_betti(*m.B);
        add("models", "H(B) = complement wedge", hb == wedge, hb.to_string());
    }

    if (want("pullback")) {
        int adjusted = 0;
        for (const auto& e : m.gen_D)
            adjusted += e.adjusted ? 1 : 0;
        add("pullback", "listed generators lie in D", true,
            std::to_string(m.gen_D.size()) + " listed, " + std::to_string(adjusted) + " with re-solved sign");
        const Cdga& d = *m.D;
        auto contains = [&](const SparseVector& pv) { return coordinates_in(m.d_inclusion, pv).has_value(); };
        const int off = m.Bprime->dimension();
        SparseVector c0 = pair_element(*m.Bprime, tensor_element(*m.Eprime, *m.B, m.Eprime->unit(),
                                                                 basis_vector(m.B->index("c"))), {});
        add("pullback", "(1,1), (c,0), (0,c) in D",
            contains(m.P->unit()) && contains(c0) && contains(basis_vector(off + m.B->index("c"))));
        add("pullback", "H(D) = MV", v.h_D == mv, v.h_D.to_string());
        add("pullback", "D dimension", true, std::to_string(d.dimension()));
    }

    if (want("ideal")) {
        auto span_check = [&](const std::vector<ListedElement>& list, const IdealBasis& ideal, const std::string& which) {
            std::vector<SparseVector> listed;
            int adjusted = 0;
            for (const auto& e : list) {
                listed.push_back(*coordinates_in(m.d_inclusion, e.vector));
                adjusted += e.adjusted ? 1 : 0;
            }
            const GradedVectors span = graded_basis(*m.D, listed);
            std::size_t span_total = 0, closure_total = 0;
            std::string escaped;
            for (const auto& [p, vs] : ideal.span) {
                const Subspace sp = graded_span(*m.D, span, p);
                closure_total += vs.size();
                for (const auto& x : vs)
                    if (!sp.contains(m.D->to_dense(x, p)) && escaped.empty())
                        escaped = "; escapes in degree " + std::to_string(p) + ": " +
                                  m.P->render(m.d_inclusion.inclusion.apply(x));
            }
            for (const auto& [p, vs] : span)
                span_total += vs.size();
            add("ideal", "closure of " + which + " J' list = its span", escaped.empty() && span_total == closure_total,
                std::to_string(list.size()) + " listed, span " + std::to_string(span_total) + ", closure " +
                    std::to_string(closure_total) + ", " + std::to_string(adjusted) + " with re-solved sign" + escaped);
        };
        span_check(m.j_list, m.J_printed, "printed");
        add("ideal", "H(printed J) = 0", m.J_printed.acyclic);
        span_check(m.j_list_amended, m.J, "amended");
        add("ideal", "J closed under d and products", m.J.closed);
        add("ideal", "H(J) = 0", m.J.acyclic);
    }

    if (want("quotient")) {
        const auto& pi = m.quotient.projection;
        add("quotient", "pi chain map", pi.chain_map);
        add("quotient", "pi algebra map", pi.algebra_map);
        add("quotient", "pi quasi-isomorphism", is_quasi_iso(pi));
        add("quotient", "H(D/J) = MV", v.h_DJ == mv, v.h_DJ.to_string());
    }

    if (want("pi-xi")) {
        add("pi-xi", "pi xi chain map", m.pi_xi.chain_map);
        add("pi-xi", "pi xi algebra map", m.pi_xi.algebra_map,
            m.pi_xi.algebra_map ? std::string() : first_failure(check_algebra_map(m.pi_xi)));
        add("pi-xi", "pi xi quasi-isomorphism", is_quasi_iso(m.pi_xi));
        add("pi-xi", "H(A) = MV", v.h_A == mv, v.h_A.to_string());
    }

    if (want("eta")) {
        add("eta", "D-bar is a sub-complex", is_subcomplex(*m.D, m.dbar));
        bool listed_ok = true;
        GradedVectors listed;
        for (const auto& e : m.dbar_list) {
            const auto c = coordinates_in(m.d_inclusion, e.vector);
            if (!c) {
                listed_ok = false;
                continue;
            }
            const int p = *m.D->degree_of(*c);
            listed_ok = listed_ok && graded_span(*m.D, m.dbar, p).contains(m.D->to_dense(*c, p));
            listed[p].push_back(*c);
        }
        listed_ok = listed_ok && graded_dimensions(graded_basis(*m.D, [&] {
                        std::vector<SparseVector> all;
                        for (const auto& [p, vs] : listed)
                            all.insert(all.end(), vs.begin(), vs.end());
                        return all;
                    }())) == graded_dimensions(m.dbar) &&
                    graded_dimensions(listed) == graded_dimensions(m.dbar);
        add("eta", "listed D-bar basis", listed_ok, std::to_string(m.dbar_list.size()) + " elements");
        const auto top = m.dbar.find(2 * n);
        add("eta", "dim D-bar^{2n} = 2", top != m.dbar.end() && top->second.size() == 2);
        bool in_dbar = true;
        for (int i = 0; i < m.A->dimension(); ++i) {
            const auto& img = m.eta.images[static_cast<std::size_t>(i)];
            const int p = m.A->degree(i);
            in_dbar = in_dbar && graded_span(*m.D, m.dbar, p).contains(m.D->to_dense(img, p));
        }
        add("eta", "eta lands in D-bar", in_dbar);
        add("eta", "eta injective", m.eta.injective);
        add("eta", "eta chain map", m.eta.chain_map);
        add("eta", "D-bar -> D quasi-isomorphism", is_quasi_iso(identity_morphism(m.D), &m.dbar, nullptr));
        add("eta", "H(D-bar) = H(A)", v.h_Dbar == v.h_A, v.h_Dbar.to_string());
    }
    return v;
}

}  // namespace toruscalc
