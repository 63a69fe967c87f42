#include "prismhom/snf.hpp"

#include <utility>

namespace prismhom {

namespace {

template <typename Int>
Int abs_value(const Int& x)
{
    return x < Int(0) ? -x : x;
}

template <typename Int>
class Reducer
{
public:
    Reducer(Matrix<Int> m, SnfTracking tracking) : a_(std::move(m)), tracking_(tracking)
    {
        if (tracking_.left) {
            res_.u = Matrix<Int>::identity(a_.rows());
            res_.u_inv = Matrix<Int>::identity(a_.rows());
        }
        if (tracking_.right) {
            res_.v = Matrix<Int>::identity(a_.cols());
            res_.v_inv = Matrix<Int>::identity(a_.cols());
        }
    }

    SnfResult<Int> run()
    {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            if (!place_pivot(t))
                break;
            clear_cross(t);
            if (a_(t, t) < Int(0))
                negate_row(t);
            res_.factors.push_back(a_(t, t));
        }
        return std::move(res_);
    }

private:
    // Moves a smallest nonzero entry of the trailing block to (t, t).
    bool place_pivot(std::size_t t)
    {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        Int best(0);
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const Int& x = a_(i, j);
                if (x == Int(0))
                    continue;
                Int ax = abs_value(x);
                if (!found || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == Int(1))
                        goto done;
                }
            }
    done:
        if (!found)
            return false;
        swap_rows(t, pi);
        swap_cols(t, pj);
        return true;
    }

    void clear_cross(std::size_t t)
    {
        for (;;) {
            bool dirty = false;
            // Column below the pivot.
            std::size_t smallest = t;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == Int(0))
                    continue;
                Int q = a_(i, t) / a_(t, t);
                if (q != Int(0))
                    add_row(i, t, -q);
                if (a_(i, t) != Int(0)) {
                    dirty = true;
                    if (smallest == t || abs_value(a_(i, t)) < abs_value(a_(smallest, t)))
                        smallest = i;
                }
            }
            if (dirty) {
                swap_rows(t, smallest);
                continue;
            }
            // Row right of the pivot.
            smallest = t;
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == Int(0))
                    continue;
                Int q = a_(t, j) / a_(t, t);
                if (q != Int(0))
                    add_col(j, t, -q);
                if (a_(t, j) != Int(0)) {
                    dirty = true;
                    if (smallest == t || abs_value(a_(t, j)) < abs_value(a_(t, smallest)))
                        smallest = j;
                }
            }
            if (dirty) {
                swap_cols(t, smallest);
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            const Int p = a_(t, t);
            if (abs_value(p) == Int(1))
                return;
            bool fixed = false;
            for (std::size_t i = t + 1; i < a_.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (a_(i, j) % p != Int(0)) {
                        add_row(t, i, Int(1));
                        fixed = true;
                        break;
                    }
            if (!fixed)
                return;
        }
    }

    // row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const Int& q)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (a_(k, j) != Int(0))
                a_(i, j) = a_(i, j) + q * a_(k, j);
        if (tracking_.left) {
            auto& u = res_.u;
            for (std::size_t j = 0; j < u.cols(); ++j)
                if (u(k, j) != Int(0))
                    u(i, j) = u(i, j) + q * u(k, j);
            // U^{-1} <- U^{-1} E^{-1}: col_k -= q * col_i
            auto& w = res_.u_inv;
            for (std::size_t r = 0; r < w.rows(); ++r)
                if (w(r, i) != Int(0))
                    w(r, k) = w(r, k) - q * w(r, i);
        }
    }

    // col_j += q * col_k
    void add_col(std::size_t j, std::size_t k, const Int& q)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            if (a_(i, k) != Int(0))
                a_(i, j) = a_(i, j) + q * a_(i, k);
        if (tracking_.right) {
            auto& v = res_.v;
            for (std::size_t r = 0; r < v.rows(); ++r)
                if (v(r, k) != Int(0))
                    v(r, j) = v(r, j) + q * v(r, k);
            // V^{-1} <- E^{-1} V^{-1}: row_k -= q * row_j
            auto& w = res_.v_inv;
            for (std::size_t c = 0; c < w.cols(); ++c)
                if (w(j, c) != Int(0))
                    w(k, c) = w(k, c) - q * w(j, c);
        }
    }

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k)
            return;
        for (std::size_t j = 0; j < a_.cols(); ++j)
            std::swap(a_(i, j), a_(k, j));
        if (tracking_.left) {
            for (std::size_t j = 0; j < res_.u.cols(); ++j)
                std::swap(res_.u(i, j), res_.u(k, j));
            for (std::size_t r = 0; r < res_.u_inv.rows(); ++r)
                std::swap(res_.u_inv(r, i), res_.u_inv(r, k));
        }
    }

    void swap_cols(std::size_t j, std::size_t k)
    {
        if (j == k)
            return;
        for (std::size_t i = 0; i < a_.rows(); ++i)
            std::swap(a_(i, j), a_(i, k));
        if (tracking_.right) {
            for (std::size_t r = 0; r < res_.v.rows(); ++r)
                std::swap(res_.v(r, j), res_.v(r, k));
            for (std::size_t c = 0; c < res_.v_inv.cols(); ++c)
                std::swap(res_.v_inv(j, c), res_.v_inv(k, c));
        }
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(i, j) = -a_(i, j);
        if (tracking_.left) {
            for (std::size_t j = 0; j < res_.u.cols(); ++j)
                res_.u(i, j) = -res_.u(i, j);
            for (std::size_t r = 0; r < res_.u_inv.rows(); ++r)
                res_.u_inv(r, i) = -res_.u_inv(r, i);
        }
    }

    Matrix<Int> a_;
    SnfTracking tracking_;
    SnfResult<Int> res_;
};

} // namespace

template <typename Int>
SnfResult<Int> smith_normal_form(Matrix<Int> m, SnfTracking tracking)
{
    return Reducer<Int>(std::move(m), tracking).run();
}

template SnfResult<CheckedInt> smith_normal_form(Matrix<CheckedInt>, SnfTracking);
template SnfResult<BigInt> smith_normal_form(Matrix<BigInt>, SnfTracking);

InvariantFactors invariant_factors(const IntMatrix& m)
{
    InvariantFactors out;
    try {
        Matrix<CheckedInt> c(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                c(i, j) = m(i, j);
        for (const auto& d : smith_normal_form(std::move(c), {}).factors)
            out.factors.push_back(to_big(d));
    } catch (const OverflowError&) {
        Matrix<BigInt> b(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                b(i, j) = m(i, j);
        out.factors = smith_normal_form(std::move(b), {}).factors;
    }
    return out;
}

} // namespace prismhom
