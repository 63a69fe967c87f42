/**
 * Smith normal form over the integers.
 *
 * Elimination first runs on checked 64-bit integers; on overflow the whole
 * computation is repeated with arbitrary-precision integers.
 */
#ifndef PRISMHOM_SNF_HPP
#define PRISMHOM_SNF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prismhom {

using BigInt = boost::multiprecision::cpp_int;

struct OverflowError : std::overflow_error
{
    OverflowError() : std::overflow_error("64-bit overflow") {}
};

/// int64 wrapper whose arithmetic throws OverflowError instead of wrapping.
class CheckedInt
{
public:
    CheckedInt(std::int64_t v = 0) : v_(v) {}
    std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return a.v_ / b.v_; }
    friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return a.v_ % b.v_; }
    CheckedInt operator-() const { return CheckedInt(0) - *this; }
    friend auto operator<=>(const CheckedInt&, const CheckedInt&) = default;
    friend bool operator==(const CheckedInt&, const CheckedInt&) = default;

private:
    std::int64_t v_;
};

inline BigInt to_big(CheckedInt v) { return BigInt(v.value()); }
inline BigInt to_big(const BigInt& v) { return v; }

/// Dense row-major integer matrix.
template <typename Int>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = Int(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Which transformation matrices to accumulate alongside U * M * V = D.
struct SnfTracking
{
    bool left = false;  // U and U^{-1}
    bool right = false; // V and V^{-1}
};

template <typename Int>
struct SnfResult
{
    /// Diagonal entries d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Int> factors;
    Matrix<Int> u, u_inv, v, v_inv;
    std::size_t rank() const { return factors.size(); }
};

template <typename Int>
SnfResult<Int> smith_normal_form(Matrix<Int> m, SnfTracking tracking);

extern template SnfResult<CheckedInt> smith_normal_form(Matrix<CheckedInt>, SnfTracking);
extern template SnfResult<BigInt> smith_normal_form(Matrix<BigInt>, SnfTracking);

/// Invariant factors and rank only, with automatic precision escalation.
struct InvariantFactors
{
    std::vector<BigInt> factors;
    std::size_t rank() const { return factors.size(); }
};

InvariantFactors invariant_factors(const IntMatrix& m);

} // namespace prismhom

#endif
