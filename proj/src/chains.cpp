#include "prismhom/chains.hpp"

#include <ostream>
#include <sstream>

namespace prismhom {

Chain Chain::generator(std::size_t degree, std::size_t index, std::int64_t coeff)
{
    Chain c(degree);
    c.add(index, coeff);
    return c;
}

std::int64_t Chain::coefficient(std::size_t index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? 0 : it->second;
}

void Chain::add(std::size_t index, std::int64_t coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other)
{
    for (const auto& [i, c] : other.terms_)
        add(i, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other)
{
    for (const auto& [i, c] : other.terms_)
        add(i, -c);
    return *this;
}

Chain& Chain::operator*=(std::int64_t k)
{
    if (k == 0)
        terms_.clear();
    for (auto& [i, c] : terms_)
        c *= k;
    return *this;
}

ChainComplex::ChainComplex(std::vector<std::size_t> counts) : counts_(std::move(counts))
{
    columns_.resize(counts_.size());
    for (std::size_t n = 0; n < counts_.size(); ++n)
        columns_[n].resize(counts_[n]);
}

void ChainComplex::set_boundary(std::size_t degree, std::size_t index, const Chain& boundary)
{
    if (degree == 0 || degree > max_degree() || index >= counts_[degree])
        throw InputError("no generator (" + std::to_string(degree) + "," + std::to_string(index) + ")");
    if (!boundary.is_zero() && boundary.degree() + 1 != degree)
        throw InputError("boundary has the wrong degree");
    Column col;
    col.reserve(boundary.terms().size());
    for (const auto& [i, c] : boundary.terms()) {
        if (i >= counts_[degree - 1])
            throw InputError("boundary references unknown generator (" + std::to_string(degree - 1) + "," +
                             std::to_string(i) + ")");
        col.emplace_back(i, c);
    }
    columns_[degree][index] = std::move(col);
}

Chain ChainComplex::boundary_of(std::size_t degree, std::size_t index) const
{
    if (degree == 0)
        return Chain(0);
    Chain out(degree - 1);
    for (const auto& [i, c] : columns_[degree][index])
        out.add(i, c);
    return out;
}

Chain boundary(const Chain& c, const ChainComplex& k)
{
    if (c.degree() == 0)
        throw InputError("boundary of a degree-0 chain");
    Chain out(c.degree() - 1);
    for (const auto& [g, coeff] : c.terms()) {
        if (c.degree() > k.max_degree() || g >= k.count(c.degree()))
            throw InputError("unknown generator (" + std::to_string(c.degree()) + "," + std::to_string(g) + ")");
        for (const auto& [i, b] : k.column(c.degree(), g))
            out.add(i, coeff * b);
    }
    return out;
}

std::vector<SquareViolation> verify_d_squared(const ChainComplex& k, std::size_t lo, std::size_t hi)
{
    std::vector<SquareViolation> out;
    for (std::size_t n = std::max<std::size_t>(lo, 2); n <= std::min(hi, k.max_degree()); ++n)
        for (std::size_t g = 0; g < k.count(n); ++g) {
            Chain r = boundary(k.boundary_of(n, g), k);
            if (!r.is_zero())
                out.push_back({{n, g}, std::move(r)});
        }
    return out;
}

IntMatrix boundary_matrix(const ChainComplex& k, std::size_t n)
{
    const std::size_t rows = n == 0 ? 0 : k.count(n - 1);
    IntMatrix m(rows, k.count(n));
    if (n == 0 || n > k.max_degree())
        return m;
    for (std::size_t j = 0; j < k.count(n); ++j)
        for (const auto& [i, c] : k.column(n, j))
            m(i, j) = c;
    return m;
}

std::string to_string(const HomologyGroup& h)
{
    std::ostringstream out;
    bool first = true;
    if (h.free_rank > 0) {
        out << "Z";
        if (h.free_rank > 1)
            out << "^" << h.free_rank;
        first = false;
    }
    for (const auto& d : h.torsion) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return first ? "0" : out.str();
}

namespace {

void check_degree(const ChainComplex& k, std::size_t n, bool allow_truncation)
{
    if (n > k.max_degree())
        throw InputError("degree " + std::to_string(n) + " exceeds the built complex (max " +
                         std::to_string(k.max_degree()) + ")");
    if (n == k.max_degree() && !allow_truncation)
        throw InputError("homology in the top degree " + std::to_string(n) +
                         " needs the next boundary; rebuild with a higher degree or allow truncation");
}

} // namespace

HomologyGroup homology(const ChainComplex& k, std::size_t n, bool allow_truncation)
{
    check_degree(k, n, allow_truncation);
    const auto out = invariant_factors(boundary_matrix(k, n));
    const auto in = n < k.max_degree() ? invariant_factors(boundary_matrix(k, n + 1)) : InvariantFactors{};
    HomologyGroup h;
    h.free_rank = k.count(n) - out.rank() - in.rank();
    for (const auto& d : in.factors)
        if (d > 1)
            h.torsion.push_back(d);
    return h;
}

bool HomologyClass::is_zero() const
{
    for (const auto& x : free)
        if (x != 0)
            return false;
    for (const auto& x : torsion)
        if (x != 0)
            return false;
    return true;
}

std::string to_string(const HomologyClass& c)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < c.free.size(); ++i)
        out << (i ? "," : "") << c.free[i];
    out << "|";
    for (std::size_t i = 0; i < c.torsion.size(); ++i)
        out << (i ? "," : "") << c.torsion[i];
    out << "]";
    return out.str();
}

namespace {

template <typename Int>
struct Decomposed
{
    std::vector<Int> image_factors;
    Matrix<Int> u;
    std::size_t tail_rank = 0;
    Matrix<Int> tail_v_inv;
};

template <typename Int>
Decomposed<Int> decompose(const ChainComplex& k, std::size_t n)
{
    const std::size_t cn = k.count(n);
    const std::size_t cin = n < k.max_degree() ? k.count(n + 1) : 0;

    // Incoming boundary d_{n+1}: C_{n+1} -> C_n.
    Matrix<Int> b(cn, cin);
    for (std::size_t j = 0; j < cin; ++j)
        for (const auto& [i, c] : k.column(n + 1, j))
            b(i, j) = Int(c);
    auto in = smith_normal_form(std::move(b), {.left = true, .right = false});
    const std::size_t r = in.rank();

    // Outgoing boundary in the new basis: A * U^{-1}; its first r columns vanish.
    const std::size_t cout = n == 0 ? 0 : k.count(n - 1);
    Matrix<Int> tail(cout, cn - r);
    if (n > 0)
        for (std::size_t j = 0; j < cn; ++j)
            for (const auto& [i, a] : k.column(n, j))
                for (std::size_t col = r; col < cn; ++col)
                    if (in.u_inv(j, col) != Int(0))
                        tail(i, col - r) = tail(i, col - r) + Int(a) * in.u_inv(j, col);
    auto out = smith_normal_form(std::move(tail), {.left = false, .right = true});

    Decomposed<Int> d;
    d.image_factors = std::move(in.factors);
    d.u = std::move(in.u);
    d.tail_rank = out.rank();
    d.tail_v_inv = std::move(out.v_inv);
    return d;
}

template <typename Int>
Matrix<BigInt> widen(const Matrix<Int>& m)
{
    Matrix<BigInt> w(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            w(i, j) = to_big(m(i, j));
    return w;
}

} // namespace

HomologyDecomposition::HomologyDecomposition(const ChainComplex& k, std::size_t n, bool allow_truncation)
    : degree_(n)
{
    check_degree(k, n, allow_truncation);
    outgoing_.reserve(k.count(n));
    for (std::size_t j = 0; j < k.count(n); ++j)
        outgoing_.push_back(n == 0 ? ChainComplex::Column{} : k.column(n, j));
    target_count_ = n == 0 ? 0 : k.count(n - 1);

    try {
        auto d = decompose<CheckedInt>(k, n);
        for (const auto& f : d.image_factors)
            image_factors_.push_back(to_big(f));
        u_ = widen(d.u);
        tail_rank_ = d.tail_rank;
        tail_v_inv_ = widen(d.tail_v_inv);
    } catch (const OverflowError&) {
        auto d = decompose<BigInt>(k, n);
        image_factors_ = std::move(d.image_factors);
        u_ = std::move(d.u);
        tail_rank_ = d.tail_rank;
        tail_v_inv_ = std::move(d.tail_v_inv);
    }
    group_.free_rank = k.count(n) - image_factors_.size() - tail_rank_;
    for (const auto& f : image_factors_)
        if (f > 1)
            group_.torsion.push_back(f);
}

HomologyClass HomologyDecomposition::class_of(const Chain& z) const
{
    if (!z.is_zero() && z.degree() != degree_)
        throw InputError("chain of degree " + std::to_string(z.degree()) + " given for H_" + std::to_string(degree_));
    const std::size_t cn = outgoing_.size();
    Chain residue(degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [g, c] : z.terms()) {
        if (g >= cn)
            throw InputError("unknown generator " + std::to_string(g));
        for (const auto& [i, a] : outgoing_[g])
            residue.add(i, c * a);
    }
    if (!residue.is_zero())
        throw InputError("chain is not a cycle");

    std::vector<BigInt> y(cn);
    for (std::size_t i = 0; i < cn; ++i)
        for (const auto& [g, c] : z.terms())
            if (u_(i, g) != 0)
                y[i] += u_(i, g) * c;

    HomologyClass out;
    const std::size_t r = image_factors_.size();
    for (std::size_t i = 0; i < r; ++i) {
        const BigInt& d = image_factors_[i];
        if (d > 1) {
            BigInt m = y[i] % d;
            if (m < 0)
                m += d;
            out.torsion.push_back(m);
        }
    }
    const std::size_t tail = cn - r;
    for (std::size_t i = tail_rank_; i < tail; ++i) {
        BigInt w = 0;
        for (std::size_t j = 0; j < tail; ++j)
            if (y[r + j] != 0 && tail_v_inv_(i, j) != 0)
                w += tail_v_inv_(i, j) * y[r + j];
        out.free.push_back(w);
    }
    return out;
}

void write_sparse_triplets(std::ostream& out, const ChainComplex& k)
{
    for (std::size_t n = 1; n <= k.max_degree(); ++n)
        for (std::size_t j = 0; j < k.count(n); ++j)
            for (const auto& [i, c] : k.column(n, j))
                out << n << ' ' << i << ' ' << j << ' ' << c << '\n';
}

} // namespace prismhom
