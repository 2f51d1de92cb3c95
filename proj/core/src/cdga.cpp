#include "toruscalc/cdga.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toruscalc/toricring.hpp"

namespace toruscalc {

namespace {

const SparseVector kZero;
const std::vector<int> kNoIndices;

int koszul(long exponent)
{
    return (exponent % 2 == 0) ? 1 : -1;
}

void prune(SparseVector& v)
{
    for (auto it = v.begin(); it != v.end();)
        it = (it->second == 0) ? v.erase(it) : std::next(it);
}

std::string short_vector(const Cdga& x, const SparseVector& v)
{
    return x.render(v);
}

}  // namespace

void add_scaled(SparseVector& target, const Rational& scale, const SparseVector& v)
{
    if (scale == 0)
        return;
    for (const auto& [i, c] : v) {
        auto [it, inserted] = target.try_emplace(i, scale * c);
        if (!inserted) {
            it->second += scale * c;
            if (it->second == 0)
                target.erase(it);
        }
    }
}

SparseVector scaled(const SparseVector& v, const Rational& scale)
{
    SparseVector out;
    add_scaled(out, scale, v);
    return out;
}

SparseVector basis_vector(int index)
{
    return SparseVector{{index, Rational(1)}};
}

// ---------------------------------------------------------------- builder

int CdgaBuilder::add_basis(std::string label, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("CdgaBuilder: negative degree for " + label);
    basis_.push_back({std::move(label), degree});
    return static_cast<int>(basis_.size()) - 1;
}

void CdgaBuilder::set_product(int i, int j, SparseVector value)
{
    prune(value);
    if (value.empty())
        products_.erase({i, j});
    else
        products_[{i, j}] = std::move(value);
}

void CdgaBuilder::set_differential(int i, SparseVector value)
{
    prune(value);
    if (value.empty())
        differential_.erase(i);
    else
        differential_[i] = std::move(value);
}

CdgaPtr CdgaBuilder::build() &&
{
    std::shared_ptr<Cdga> x(new Cdga());
    const int n = size();
    auto check_index = [n](int i) {
        if (i < 0 || i >= n)
            throw std::out_of_range("CdgaBuilder: basis index out of range");
    };

    x->basis_ = std::move(basis_);
    x->position_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& b = x->basis_[static_cast<std::size_t>(i)];
        if (!x->by_label_.emplace(b.label, i).second)
            throw std::invalid_argument("CdgaBuilder: duplicate label " + b.label);
        x->max_degree_ = std::max(x->max_degree_, b.degree);
        if (static_cast<int>(x->by_degree_.size()) <= b.degree)
            x->by_degree_.resize(static_cast<std::size_t>(b.degree) + 1);
        auto& slot = x->by_degree_[static_cast<std::size_t>(b.degree)];
        x->position_[static_cast<std::size_t>(i)] = static_cast<int>(slot.size());
        slot.push_back(i);
    }

    prune(unit_);
    for (const auto& [i, c] : unit_) {
        check_index(i);
        if (x->degree(i) != 0)
            throw std::invalid_argument("CdgaBuilder: unit has a component of positive degree");
    }
    x->unit_ = std::move(unit_);

    x->rows_.resize(static_cast<std::size_t>(n));
    for (auto& [key, value] : products_) {
        const auto [i, j] = key;
        check_index(i);
        check_index(j);
        for (const auto& [t, c] : value) {
            check_index(t);
            if (x->degree(t) != x->degree(i) + x->degree(j))
                throw std::invalid_argument("CdgaBuilder: product " + x->label(i) + "*" + x->label(j) +
                                            " has the wrong degree");
        }
        x->rows_[static_cast<std::size_t>(i)].emplace_back(j, std::move(value));
    }

    x->differential_.resize(static_cast<std::size_t>(n));
    for (auto& [i, value] : differential_) {
        check_index(i);
        for (const auto& [t, c] : value) {
            check_index(t);
            if (x->degree(t) != x->degree(i) + 1)
                throw std::invalid_argument("CdgaBuilder: d(" + x->label(i) + ") has the wrong degree");
        }
        x->differential_[static_cast<std::size_t>(i)] = std::move(value);
    }
    return x;
}

// ---------------------------------------------------------------- Cdga

std::optional<int> Cdga::index_of(const std::string& label) const
{
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

int Cdga::index(const std::string& label) const
{
    auto i = index_of(label);
    if (!i)
        throw std::out_of_range("Cdga: no basis element labelled " + label);
    return *i;
}

const std::vector<int>& Cdga::indices_of_degree(int degree) const
{
    if (degree < 0 || degree >= static_cast<int>(by_degree_.size()))
        return kNoIndices;
    return by_degree_[static_cast<std::size_t>(degree)];
}

const SparseVector& Cdga::product(int i, int j) const
{
    const auto& row = rows_.at(static_cast<std::size_t>(i));
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& entry, int key) { return entry.first < key; });
    if (it == row.end() || it->first != j)
        return kZero;
    return it->second;
}

SparseVector Cdga::multiply(const SparseVector& x, const SparseVector& y) const
{
    SparseVector out;
    for (const auto& [i, a] : x) {
        if (rows_[static_cast<std::size_t>(i)].empty())
            continue;
        for (const auto& [j, b] : y) {
            const auto& p = product(i, j);
            if (!p.empty())
                add_scaled(out, a * b, p);
        }
    }
    return out;
}

SparseVector Cdga::d(const SparseVector& x) const
{
    SparseVector out;
    for (const auto& [i, c] : x)
        add_scaled(out, c, differential(i));
    return out;
}

bool Cdga::has_zero_differential() const
{
    return std::all_of(differential_.begin(), differential_.end(),
                       [](const SparseVector& v) { return v.empty(); });
}

std::optional<int> Cdga::degree_of(const SparseVector& x) const
{
    std::optional<int> deg;
    for (const auto& [i, c] : x) {
        if (c == 0)
            continue;
        if (deg && *deg != degree(i))
            return std::nullopt;
        deg = degree(i);
    }
    return deg;
}

RatVector Cdga::to_dense(const SparseVector& x, int deg) const
{
    RatVector v(static_cast<std::size_t>(dimension_in_degree(deg)));
    for (const auto& [i, c] : x) {
        if (degree(i) != deg)
            throw std::invalid_argument("Cdga::to_dense: component " + label(i) + " not in degree " +
                                        std::to_string(deg));
        v[static_cast<std::size_t>(position_in_degree(i))] = c;
    }
    return v;
}

SparseVector Cdga::from_dense(const RatVector& v, int deg) const
{
    const auto& idx = indices_of_degree(deg);
    if (v.size() != idx.size())
        throw std::invalid_argument("Cdga::from_dense: dimension mismatch");
    SparseVector out;
    for (std::size_t p = 0; p < v.size(); ++p)
        if (v[p] != 0)
            out.emplace(idx[p], v[p]);
    return out;
}

RatMatrix Cdga::differential_matrix(int deg) const
{
    const auto& src = indices_of_degree(deg);
    RatMatrix m(static_cast<std::size_t>(dimension_in_degree(deg + 1)), src.size());
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& [t, c] : differential(src[j]))
            m(static_cast<std::size_t>(position_in_degree(t)), j) = c;
    return m;
}

std::string Cdga::render(const SparseVector& x) const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x) {
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1)
            os << mag.get_str() << '*';
        os << label(i);
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- morphisms

SparseVector Morphism::apply(const SparseVector& x) const
{
    SparseVector out;
    for (const auto& [i, c] : x)
        add_scaled(out, c, images.at(static_cast<std::size_t>(i)));
    return out;
}

Morphism identity_morphism(CdgaPtr x)
{
    Morphism f;
    f.name = "id";
    f.source = x;
    f.target = x;
    for (int i = 0; i < x->dimension(); ++i)
        f.images.push_back(basis_vector(i));
    return f;
}

void CheckReport::fail(std::string message)
{
    ok = false;
    if (failures.size() < 32)
        failures.push_back(std::move(message));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix)
{
    if (!other.ok)
        ok = false;
    for (const auto& f : other.failures)
        if (failures.size() < 32)
            failures.push_back(prefix + f);
}

CheckReport check_axioms(const Cdga& x)
{
    CheckReport r;
    const int n = x.dimension();

    if (x.unit().empty() || x.degree_of(x.unit()) != 0)
        r.fail("unit is not a nonzero element of degree 0");
    for (int i = 0; i < n; ++i) {
        const auto e = basis_vector(i);
        if (x.multiply(x.unit(), e) != e || x.multiply(e, x.unit()) != e)
            r.fail("unit law fails on " + x.label(i));
    }

    for (int i = 0; i < n; ++i) {
        const auto& di = x.differential(i);
        for (const auto& [t, c] : di)
            if (x.degree(t) != x.degree(i) + 1)
                r.fail("d(" + x.label(i) + ") has the wrong degree");
        if (!x.d(di).empty())
            r.fail("d^2 != 0 on " + x.label(i));
        for (const auto& [j, v] : x.product_row(i))
            for (const auto& [t, c] : v)
                if (x.degree(t) != x.degree(i) + x.degree(j))
                    r.fail("product " + x.label(i) + "*" + x.label(j) + " has the wrong degree");
    }

    // Graded commutativity: every nonzero product appears in some row.
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : x.product_row(i))
            if (x.product(j, i) != scaled(v, koszul(long(x.degree(i)) * x.degree(j))))
                r.fail("graded commutativity fails on " + x.label(i) + ", " + x.label(j));

    // Leibniz on all pairs, including those with zero product.
    for (int i = 0; i < n; ++i) {
        const auto ei = basis_vector(i);
        const auto& di = x.differential(i);
        for (int j = 0; j < n; ++j) {
            const auto ej = basis_vector(j);
            SparseVector rhs = x.multiply(di, ej);
            add_scaled(rhs, koszul(x.degree(i)), x.multiply(ei, x.differential(j)));
            if (x.d(x.product(i, j)) != rhs)
                r.fail("Leibniz fails on " + x.label(i) + ", " + x.label(j));
        }
    }

    // Associativity: (e_i e_j) e_k can only be nonzero for k in a row of a
    // term of e_i e_j, and e_i (e_j e_k) only for k in row j.
    for (int i = 0; i < n; ++i) {
        const auto ei = basis_vector(i);
        for (int j = 0; j < n; ++j) {
            const auto& ij = x.product(i, j);
            std::set<int> ks;
            for (const auto& [k, v] : x.product_row(j))
                ks.insert(k);
            for (const auto& [t, c] : ij)
                for (const auto& [k, v] : x.product_row(t))
                    ks.insert(k);
            for (int k : ks) {
                const auto left = x.multiply(ij, basis_vector(k));
                const auto right = x.multiply(ei, x.product(j, k));
                if (left != right)
                    r.fail("associativity fails on " + x.label(i) + ", " + x.label(j) + ", " + x.label(k));
            }
        }
    }
    return r;
}

CheckReport check_degree_preserving(const Morphism& f)
{
    CheckReport r;
    if (static_cast<int>(f.images.size()) != f.source->dimension()) {
        r.fail(f.name + ": image count differs from source dimension");
        return r;
    }
    for (int i = 0; i < f.source->dimension(); ++i) {
        const auto& img = f.images[static_cast<std::size_t>(i)];
        if (img.empty())
            continue;
        if (f.target->degree_of(img) != f.source->degree(i))
            r.fail(f.name + ": image of " + f.source->label(i) + " has the wrong degree");
    }
    return r;
}

CheckReport check_chain_map(const Morphism& f)
{
    CheckReport r;
    for (int i = 0; i < f.source->dimension(); ++i) {
        const auto lhs = f.apply(f.source->differential(i));
        const auto rhs = f.target->d(f.images[static_cast<std::size_t>(i)]);
        if (lhs != rhs)
            r.fail(f.name + ": f(d " + f.source->label(i) + ") = " + short_vector(*f.target, lhs) +
                   " but d f(" + f.source->label(i) + ") = " + short_vector(*f.target, rhs));
    }
    return r;
}

CheckReport check_algebra_map(const Morphism& f)
{
    CheckReport r;
    if (f.apply(f.source->unit()) != f.target->unit())
        r.fail(f.name + ": unit not preserved");
    const int n = f.source->dimension();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto lhs = f.apply(f.source->product(i, j));
            const auto rhs = f.target->multiply(f.images[static_cast<std::size_t>(i)],
                                                f.images[static_cast<std::size_t>(j)]);
            if (lhs != rhs)
                r.fail(f.name + ": not multiplicative on " + f.source->label(i) + ", " + f.source->label(j));
        }
    return r;
}

CheckReport verify_morphism(Morphism& f)
{
    CheckReport r = check_degree_preserving(f);
    if (!r.ok)
        return r;
    const auto chain = check_chain_map(f);
    const auto algebra = check_algebra_map(f);
    f.chain_map = chain.ok;
    f.algebra_map = algebra.ok;
    r.merge(chain);
    r.merge(algebra);

    f.injective = true;
    f.surjective = true;
    const int top = std::max(f.source->max_degree(), f.target->max_degree());
    for (int p = 0; p <= top; ++p) {
        const auto& src = f.source->indices_of_degree(p);
        std::vector<RatVector> cols;
        for (int i : src)
            cols.push_back(f.target->to_dense(f.images[static_cast<std::size_t>(i)], p));
        const auto rk = rank(RatMatrix::from_columns(
            static_cast<std::size_t>(f.target->dimension_in_degree(p)), cols));
        if (rk != src.size())
            f.injective = false;
        if (static_cast<int>(rk) != f.target->dimension_in_degree(p))
            f.surjective = false;
    }
    return r;
}

// ---------------------------------------------------------------- cohomology

namespace {

std::vector<SparseVector> degree_basis(const Cdga& x, const GradedVectors* sub, int p)
{
    if (sub) {
        auto it = sub->find(p);
        return it == sub->end() ? std::vector<SparseVector>{} : it->second;
    }
    std::vector<SparseVector> out;
    for (int i : x.indices_of_degree(p))
        out.push_back(basis_vector(i));
    return out;
}

Subspace span_in_degree(const Cdga& x, int p, const std::vector<SparseVector>& vectors)
{
    Subspace s(static_cast<std::size_t>(x.dimension_in_degree(p)));
    for (const auto& v : vectors)
        s.add(x.to_dense(v, p));
    return s;
}

int top_degree_of(const Cdga& x, const GradedVectors* sub)
{
    if (!sub)
        return x.max_degree();
    int top = 0;
    for (const auto& [p, vs] : *sub)
        if (!vs.empty())
            top = std::max(top, p);
    return top;
}

}  // namespace

CohomologyData cohomology_data(const Cdga& x, const GradedVectors* sub)
{
    CohomologyData data;
    const int top = top_degree_of(x, sub);
    data.betti = BettiVector::zero(top);

    std::vector<SparseVector> previous;  // basis of S^{p-1}
    for (int p = 0; p <= top; ++p) {
        const auto basis = degree_basis(x, sub, p);

        auto& boundaries = data.boundaries[p];
        for (const auto& s : previous) {
            auto b = x.d(s);
            if (!b.empty())
                boundaries.push_back(std::move(b));
        }

        // Cycles: kernel of the coefficient map c -> d(sum c_i s_i).
        std::vector<RatVector> cols;
        for (const auto& s : basis)
            cols.push_back(x.to_dense(x.d(s), p + 1));
        const auto rk = rank_and_kernel(
            RatMatrix::from_columns(static_cast<std::size_t>(x.dimension_in_degree(p + 1)), cols));
        std::vector<SparseVector> cycles;
        if (p == 0 && !x.unit().empty() && x.d(x.unit()).empty()) {
            if (!sub || span_in_degree(x, 0, basis).contains(x.to_dense(x.unit(), 0)))
                cycles.push_back(x.unit());
        }
        for (const auto& c : rk.kernel_basis) {
            SparseVector z;
            for (std::size_t i = 0; i < c.size(); ++i)
                add_scaled(z, c[i], basis[i]);
            cycles.push_back(std::move(z));
        }

        Subspace s = span_in_degree(x, p, boundaries);
        auto& reps = data.representatives[p];
        for (auto& z : cycles)
            if (s.add(x.to_dense(z, p)))
                reps.push_back(std::move(z));
        data.betti.set(p, static_cast<long>(reps.size()));
        previous = basis;
    }
    return data;
}

BettiVector cohomology_betti(const Cdga& x)
{
    return cohomology_data(x).betti;
}

BettiVector subcomplex_betti(const Cdga& x, const GradedVectors& sub)
{
    return cohomology_data(x, &sub).betti;
}

bool is_subcomplex(const Cdga& x, const GradedVectors& sub)
{
    for (const auto& [p, vs] : sub) {
        const auto next = degree_basis(x, &sub, p + 1);
        const Subspace s = span_in_degree(x, p + 1, next);
        for (const auto& v : vs) {
            if (x.degree_of(v) && *x.degree_of(v) != p)
                return false;
            if (!s.contains(x.to_dense(x.d(v), p + 1)))
                return false;
        }
    }
    return true;
}

bool is_quasi_iso(const Morphism& f, const GradedVectors* source_sub, const GradedVectors* target_sub)
{
    const auto src = cohomology_data(*f.source, source_sub);
    const auto tgt = cohomology_data(*f.target, target_sub);
    if (!(src.betti == tgt.betti))
        return false;

    const Cdga& y = *f.target;
    for (const auto& [p, reps] : src.representatives) {
        if (reps.empty())
            continue;
        if (target_sub) {
            const Subspace t = span_in_degree(y, p, degree_basis(y, target_sub, p));
            for (const auto& r : reps)
                if (!t.contains(y.to_dense(f.apply(r), p)))
                    return false;
        }
        Subspace s = span_in_degree(y, p, tgt.boundaries.at(p));
        for (const auto& r : reps)
            if (!s.add(y.to_dense(f.apply(r), p)))
                return false;
    }
    return true;
}

GradedVectors graded_basis(const Cdga& x, const std::vector<SparseVector>& vectors)
{
    GradedVectors out;
    std::map<int, Subspace> spans;
    for (const auto& v : vectors) {
        if (v.empty())
            continue;
        const auto p = x.degree_of(v);
        if (!p)
            throw std::invalid_argument("graded_basis: inhomogeneous vector " + x.render(v));
        auto [it, fresh] = spans.try_emplace(*p, static_cast<std::size_t>(x.dimension_in_degree(*p)));
        if (it->second.add(x.to_dense(v, *p)))
            out[*p].push_back(v);
    }
    return out;
}

std::map<int, int> graded_dimensions(const GradedVectors& g)
{
    std::map<int, int> out;
    for (const auto& [p, vs] : g)
        if (!vs.empty())
            out[p] = static_cast<int>(vs.size());
    return out;
}

// ---------------------------------------------------------------- ideals, sub and quotient algebras

IdealBasis ideal_closure(CdgaPtr parent, const std::vector<SparseVector>& generators)
{
    const Cdga& x = *parent;
    IdealBasis ideal;
    ideal.parent = parent;
    std::map<int, Subspace> spans;
    std::deque<SparseVector> queue;

    auto offer = [&](SparseVector v) {
        if (v.empty())
            return;
        const auto p = x.degree_of(v);
        if (!p)
            throw std::invalid_argument("ideal_closure: inhomogeneous element " + x.render(v));
        auto [it, fresh] = spans.try_emplace(*p, static_cast<std::size_t>(x.dimension_in_degree(*p)));
        if (it->second.add(x.to_dense(v, *p))) {
            ideal.span[*p].push_back(v);
            queue.push_back(std::move(v));
        }
    };

    for (const auto& g : generators)
        offer(g);
    while (!queue.empty()) {
        const SparseVector v = std::move(queue.front());
        queue.pop_front();
        offer(x.d(v));
        for (int i = 0; i < x.dimension(); ++i)
            offer(x.multiply(basis_vector(i), v));
    }

    // Re-verify closure directly on the final basis.
    ideal.closed = true;
    for (const auto& [p, vs] : ideal.span) {
        for (const auto& v : vs) {
            std::vector<SparseVector> images{x.d(v)};
            for (int i = 0; i < x.dimension(); ++i) {
                images.push_back(x.multiply(basis_vector(i), v));
                images.push_back(x.multiply(v, basis_vector(i)));
            }
            for (const auto& w : images) {
                if (w.empty())
                    continue;
                const int q = *x.degree_of(w);
                auto it = spans.find(q);
                if (it == spans.end() || !it->second.contains(x.to_dense(w, q)))
                    ideal.closed = false;
            }
        }
    }
    const BettiVector b = subcomplex_betti(x, ideal.span);
    ideal.acyclic = b == BettiVector{};
    return ideal;
}

SubalgebraResult subalgebra(CdgaPtr parent, const GradedVectors& basis, const std::vector<std::string>& labels)
{
    const Cdga& x = *parent;
    CdgaBuilder builder;
    std::vector<SparseVector> vectors;
    std::map<int, Subspace> spans;
    std::map<int, std::vector<int>> sub_index;  // degree -> builder indices in order

    for (const auto& [p, vs] : basis) {
        auto [it, fresh] = spans.try_emplace(p, static_cast<std::size_t>(x.dimension_in_degree(p)));
        for (const auto& v : vs) {
            if (v.empty() || x.degree_of(v) != p)
                throw std::invalid_argument("subalgebra: basis vector of the wrong degree");
            if (!it->second.add(x.to_dense(v, p)))
                throw std::invalid_argument("subalgebra: dependent basis vectors");
            const std::size_t k = vectors.size();
            std::string label = k < labels.size() ? labels[k] : x.render(v);
            sub_index[p].push_back(builder.add_basis(std::move(label), p));
            vectors.push_back(v);
        }
    }

    auto coords = [&](const SparseVector& w, const char* what) -> SparseVector {
        if (w.empty())
            return {};
        const int q = *x.degree_of(w);
        auto it = spans.find(q);
        std::optional<RatVector> c;
        if (it != spans.end())
            c = it->second.coordinates(x.to_dense(w, q));
        if (!c)
            throw std::invalid_argument(std::string("subalgebra: span not closed under ") + what);
        SparseVector out;
        const auto& idx = sub_index.at(q);
        for (std::size_t t = 0; t < c->size(); ++t)
            if ((*c)[t] != 0)
                out.emplace(idx[t], (*c)[t]);
        return out;
    };

    const int n = static_cast<int>(vectors.size());
    builder.set_unit(coords(x.unit(), "the unit"));
    for (int a = 0; a < n; ++a) {
        builder.set_differential(a, coords(x.d(vectors[static_cast<std::size_t>(a)]), "d"));
        for (int b = 0; b < n; ++b)
            builder.set_product(a, b, coords(x.multiply(vectors[static_cast<std::size_t>(a)],
                                                        vectors[static_cast<std::size_t>(b)]),
                                             "products"));
    }

    SubalgebraResult result;
    result.algebra = std::move(builder).build();
    result.inclusion.name = "inclusion";
    result.inclusion.source = result.algebra;
    result.inclusion.target = parent;
    result.inclusion.images = std::move(vectors);
    return result;
}

std::optional<SparseVector> coordinates_in(const SubalgebraResult& sub, const SparseVector& parent_vector)
{
    if (parent_vector.empty())
        return SparseVector{};
    const Cdga& x = *sub.inclusion.target;
    const Cdga& s = *sub.algebra;
    const auto p = x.degree_of(parent_vector);
    if (!p)
        return std::nullopt;
    const auto& idx = s.indices_of_degree(*p);
    Subspace span(static_cast<std::size_t>(x.dimension_in_degree(*p)));
    for (int i : idx)
        span.add(x.to_dense(sub.inclusion.images[static_cast<std::size_t>(i)], *p));
    const auto c = span.coordinates(x.to_dense(parent_vector, *p));
    if (!c)
        return std::nullopt;
    SparseVector out;
    for (std::size_t t = 0; t < c->size(); ++t)
        if ((*c)[t] != 0)
            out.emplace(idx[t], (*c)[t]);
    return out;
}

QuotientResult quotient_cdga(const IdealBasis& ideal)
{
    const Cdga& x = *ideal.parent;
    struct DegreeData {
        Subspace span;
        std::vector<std::size_t> rep_generator;  // generator index of each representative
        std::vector<int> rep_index;              // quotient basis index
    };
    std::map<int, DegreeData> data;
    CdgaBuilder builder;
    QuotientResult result;

    for (int p = 0; p <= x.max_degree(); ++p) {
        DegreeData dd{Subspace(static_cast<std::size_t>(x.dimension_in_degree(p))), {}, {}};
        if (auto it = ideal.span.find(p); it != ideal.span.end())
            for (const auto& v : it->second)
                dd.span.add(x.to_dense(v, p));
        std::vector<int> order = x.indices_of_degree(p);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x.label(a) < x.label(b); });
        for (int i : order) {
            const std::size_t g = dd.span.generator_count();
            if (dd.span.add(x.to_dense(basis_vector(i), p))) {
                dd.rep_generator.push_back(g);
                dd.rep_index.push_back(builder.add_basis(x.label(i), p));
                result.representatives.push_back(basis_vector(i));
            }
        }
        data.emplace(p, std::move(dd));
    }

    auto reduce = [&](const SparseVector& w) -> SparseVector {
        if (w.empty())
            return {};
        const int q = *x.degree_of(w);
        const auto& dd = data.at(q);
        const auto c = dd.span.coordinates(x.to_dense(w, q));
        SparseVector out;
        for (std::size_t t = 0; t < dd.rep_generator.size(); ++t) {
            const Rational& coeff = (*c)[dd.rep_generator[t]];
            if (coeff != 0)
                out.emplace(dd.rep_index[t], coeff);
        }
        return out;
    };

    const auto& reps = result.representatives;
    const int n = static_cast<int>(reps.size());
    builder.set_unit(reduce(x.unit()));
    for (int a = 0; a < n; ++a) {
        builder.set_differential(a, reduce(x.d(reps[static_cast<std::size_t>(a)])));
        const int i = reps[static_cast<std::size_t>(a)].begin()->first;
        for (const auto& [j, v] : x.product_row(i)) {
            (void)v;
            for (int b = 0; b < n; ++b)
                if (reps[static_cast<std::size_t>(b)].begin()->first == j)
                    builder.set_product(a, b, reduce(x.product(i, j)));
        }
    }
    result.algebra = std::move(builder).build();

    result.projection.name = "projection";
    result.projection.source = ideal.parent;
    result.projection.target = result.algebra;
    for (int i = 0; i < x.dimension(); ++i)
        result.projection.images.push_back(reduce(basis_vector(i)));
    return result;
}

// ---------------------------------------------------------------- tensor and product

SparseVector tensor_element(const Cdga& x, const Cdga& y, const SparseVector& a, const SparseVector& b)
{
    (void)x;
    SparseVector out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b)
            add_scaled(out, ca * cb, basis_vector(i * y.dimension() + j));
    return out;
}

CdgaPtr tensor_cdga(CdgaPtr xp, CdgaPtr yp)
{
    const Cdga& x = *xp;
    const Cdga& y = *yp;
    const int m = y.dimension();
    CdgaBuilder builder;
    for (int i = 0; i < x.dimension(); ++i)
        for (int j = 0; j < m; ++j)
            builder.add_basis(x.label(i) + "⊗" + y.label(j), x.degree(i) + y.degree(j));
    builder.set_unit(tensor_element(x, y, x.unit(), y.unit()));

    for (int i1 = 0; i1 < x.dimension(); ++i1)
        for (const auto& [i2, xv] : x.product_row(i1))
            for (int j1 = 0; j1 < m; ++j1)
                for (const auto& [j2, yv] : y.product_row(j1)) {
                    const int s = koszul(long(y.degree(j1)) * x.degree(i2));
                    builder.set_product(i1 * m + j1, i2 * m + j2, scaled(tensor_element(x, y, xv, yv), s));
                }

    for (int i = 0; i < x.dimension(); ++i)
        for (int j = 0; j < m; ++j) {
            SparseVector dv = tensor_element(x, y, x.differential(i), basis_vector(j));
            add_scaled(dv, koszul(x.degree(i)), tensor_element(x, y, basis_vector(i), y.differential(j)));
            builder.set_differential(i * m + j, std::move(dv));
        }
    return std::move(builder).build();
}

SparseVector pair_element(const Cdga& x, const SparseVector& a, const SparseVector& b)
{
    SparseVector out = a;
    for (const auto& [j, c] : b)
        out.emplace(j + x.dimension(), c);
    return out;
}

CdgaPtr product_cdga(CdgaPtr xp, CdgaPtr yp, const std::string& left_tag, const std::string& right_tag)
{
    const Cdga& x = *xp;
    const Cdga& y = *yp;
    const int off = x.dimension();
    CdgaBuilder builder;
    for (int i = 0; i < x.dimension(); ++i)
        builder.add_basis("(" + left_tag + x.label(i) + ",0)", x.degree(i));
    for (int j = 0; j < y.dimension(); ++j)
        builder.add_basis("(0," + right_tag + y.label(j) + ")", y.degree(j));
    builder.set_unit(pair_element(x, x.unit(), y.unit()));

    auto shift = [off](const SparseVector& v) {
        SparseVector out;
        for (const auto& [j, c] : v)
            out.emplace(j + off, c);
        return out;
    };
    for (int i = 0; i < x.dimension(); ++i) {
        builder.set_differential(i, x.differential(i));
        for (const auto& [j, v] : x.product_row(i))
            builder.set_product(i, j, v);
    }
    for (int i = 0; i < y.dimension(); ++i) {
        builder.set_differential(i + off, shift(y.differential(i)));
        for (const auto& [j, v] : y.product_row(i))
            builder.set_product(i + off, j + off, shift(v));
    }
    return std::move(builder).build();
}

// ---------------------------------------------------------------- cohomology ring

FiniteGradedRing cohomology_ring(CdgaPtr xp)
{
    const Cdga& x = *xp;
    const CohomologyData data = cohomology_data(x);

    CdgaBuilder builder;
    std::map<int, std::vector<int>> index;  // degree -> ring basis indices
    std::map<int, Subspace> spans;          // boundaries first, then representatives
    std::map<int, std::size_t> first_rep;   // generator index of the first representative
    std::vector<SparseVector> reps;
    for (const auto& [p, rs] : data.representatives) {
        auto [it, fresh] = spans.try_emplace(p, static_cast<std::size_t>(x.dimension_in_degree(p)));
        for (const auto& b : data.boundaries.at(p))
            it->second.add(x.to_dense(b, p));
        first_rep[p] = it->second.generator_count();
        for (const auto& r : rs) {
            it->second.add(x.to_dense(r, p));
            index[p].push_back(builder.add_basis("[" + x.render(r) + "]", p));
            reps.push_back(r);
        }
    }

    auto to_classes = [&](const SparseVector& w) -> SparseVector {
        if (w.empty())
            return {};
        const int q = *x.degree_of(w);
        const auto c = spans.at(q).coordinates(x.to_dense(w, q));
        if (!c)
            throw std::logic_error("cohomology_ring: product of cycles is not a cycle");
        SparseVector out;
        const auto& idx = index[q];
        for (std::size_t t = 0; t < idx.size(); ++t)
            if ((*c)[first_rep[q] + t] != 0)
                out.emplace(idx[t], (*c)[first_rep[q] + t]);
        return out;
    };
    std::map<int, Subspace> boundary_spans;
    for (const auto& [q, bs] : data.boundaries) {
        auto [it, fresh] = boundary_spans.try_emplace(q, static_cast<std::size_t>(x.dimension_in_degree(q)));
        for (const auto& v : bs)
            it->second.add(x.to_dense(v, q));
    }
    auto in_boundaries = [&](const SparseVector& w) {
        if (w.empty())
            return true;
        const int q = *x.degree_of(w);
        auto it = boundary_spans.find(q);
        return it != boundary_spans.end() && it->second.contains(x.to_dense(w, q));
    };

    const int n = static_cast<int>(reps.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            builder.set_product(a, b, to_classes(x.multiply(reps[static_cast<std::size_t>(a)],
                                                            reps[static_cast<std::size_t>(b)])));
        // Representative independence: cycle * boundary must be a boundary.
        for (const auto& [q, bs] : data.boundaries)
            for (const auto& bd : bs)
                if (!in_boundaries(x.multiply(reps[static_cast<std::size_t>(a)], bd)))
                    throw std::logic_error("cohomology_ring: product not well defined on classes");
    }
    builder.set_unit(to_classes(x.unit()));
    CdgaPtr ring = std::move(builder).build();

    std::optional<int> fundamental;
    const int top = data.betti.top_degree();
    for (int p = top; p >= 0; --p) {
        if (data.betti[p] == 0)
            continue;
        if (data.betti[p] == 1)
            fundamental = index[p].front();
        break;
    }
    return FiniteGradedRing(ring, fundamental);
}

}  // namespace toruscalc
