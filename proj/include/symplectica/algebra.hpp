#pragma once

// Exact linear algebra over GF(p), p an odd prime below 256.
//
// Field elements are single bytes. Every subspace is stored through its
// reduced row-echelon basis, which makes equality and hashing plain byte
// comparisons.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symplectica/error.hpp"

namespace symplectica {

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

bool is_prime(unsigned value);

/// Prime field GF(p) with 3 <= p <= 251.
class Field {
public:
    explicit Field(unsigned p);

    unsigned p() const noexcept { return p_; }

    Elem add(Elem a, Elem b) const noexcept {
        unsigned s = unsigned(a) + b;
        return Elem(s >= p_ ? s - p_ : s);
    }
    Elem sub(Elem a, Elem b) const noexcept {
        return Elem(a >= b ? a - b : a + p_ - b);
    }
    Elem neg(Elem a) const noexcept { return Elem(a == 0 ? 0 : p_ - a); }
    Elem mul(Elem a, Elem b) const noexcept { return Elem((unsigned(a) * b) % p_); }
    /// Throws Error(domain) for a == 0.
    Elem inv(Elem a) const;
    Elem reduce(long long value) const noexcept {
        long long r = value % static_cast<long long>(p_);
        return Elem(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

private:
    unsigned p_;
    std::array<Elem, 256> inv_{};
};

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static Matrix identity(std::size_t n);
    /// Entries are reduced modulo p on the way in.
    static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<Elem>& data() const noexcept { return data_; }

    void append_row(std::span<const Elem> values);
    Matrix transposed() const;

    std::vector<std::vector<int>> to_nested() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
/// Stack the rows of `b` under those of `a`; column counts must agree.
Matrix stack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;                 // rank x cols, zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);

/// Inverse of a square matrix; Error(domain) when singular.
Matrix inverse(const Field& f, const Matrix& m);

/// A subspace of GF(p)^n held by its canonical RREF basis.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t n);
    static Subspace full(std::size_t n);
    /// Row space of `m` (rank may be lower than the row count).
    static Subspace span(const Field& f, const Matrix& m);
    static Subspace span_vectors(const Field& f, std::size_t n, const std::vector<Vec>& vectors);
    /// Wraps a basis that is already canonical; no checks in release builds.
    static Subspace from_canonical(std::size_t n, std::size_t k, std::vector<Elem> basis);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dim() const noexcept { return k_; }
    const std::vector<Elem>& bytes() const noexcept { return basis_; }
    std::span<const Elem> row(std::size_t i) const { return {basis_.data() + i * n_, n_}; }
    Matrix basis() const { return Matrix(k_, n_, basis_); }
    std::vector<std::size_t> pivots() const;

    bool is_zero() const noexcept { return k_ == 0; }

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<Elem> basis_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

/// {x : m x = 0}; its dimension is cols - rank(m).
Subspace kernel(const Field& f, const Matrix& m);
Subspace sum(const Field& f, const Subspace& u, const Subspace& w);
Subspace intersect(const Field& f, const Subspace& u, const Subspace& w);
/// True iff w is a subspace of u.
bool contains(const Field& f, const Subspace& u, const Subspace& w);
bool contains_vector(const Field& f, const Subspace& u, std::span<const Elem> v);

/// Image of the row space under x -> M x.
Subspace image(const Field& f, const Matrix& m, const Subspace& u);

/// Scale so the first nonzero entry is 1. Returns false for the zero vector.
bool normalize_projective(const Field& f, Vec& v);

/// All k-subspaces of GF(p)^n, sorted by canonical basis bytes.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n, std::size_t k);
/// All k-subspaces of u, sorted.
std::vector<Subspace> subspaces_of(const Field& f, const Subspace& u, std::size_t k);
/// Projective points (1-subspaces) of u, sorted.
std::vector<Subspace> points_of(const Field& f, const Subspace& u);
/// Visit every normalized nonzero coefficient vector of length `len`.
void for_each_projective_vector(const Field& f, std::size_t len, const std::function<void(const Vec&)>& fn);

/// Gaussian binomial [n choose k]_p (fits 64 bits for the instances handled here).
std::uint64_t gaussian_binomial(unsigned p, unsigned n, unsigned k);

} // namespace symplectica
