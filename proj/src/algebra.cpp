#include "symplectica/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace symplectica {

bool is_prime(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d)
        if (value % d == 0) return false;
    return true;
}

Field::Field(unsigned p) : p_(p) {
    if (p == 2) fail(ErrorCode::invalid_argument, "characteristic 2 unsupported");
    if (!is_prime(p)) fail(ErrorCode::invalid_argument, "p must be prime");
    if (p > 251) fail(ErrorCode::invalid_argument, "p must be at most 251");
    for (unsigned a = 1; a < p; ++a)
        for (unsigned b = 1; b < p; ++b)
            if ((a * b) % p == 1) {
                inv_[a] = Elem(b);
                break;
            }
}

Elem Field::inv(Elem a) const {
    if (a % p_ == 0) fail(ErrorCode::domain, "inverse of zero");
    return inv_[a];
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) fail(ErrorCode::invalid_argument, "matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorCode::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.reduce(rows[r][c]);
    }
    return m;
}

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) fail(ErrorCode::invalid_argument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<std::vector<int>> Matrix::to_nested() const {
    std::vector<std::vector<int>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::invalid_argument, "matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            unsigned acc = 0;
            for (std::size_t t = 0; t < a.cols(); ++t) acc += unsigned(a.at(i, t)) * b.at(t, j);
            out.at(i, j) = Elem(acc % f.p());
        }
    return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) fail(ErrorCode::invalid_argument, "stack: column mismatch");
    std::vector<Elem> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix(a.rows() + b.rows(), a.cols(), std::move(data));
}

namespace {

// In-place Gauss-Jordan on a rows x cols buffer; returns pivot columns.
std::vector<std::size_t> reduce_in_place(const Field& f, std::vector<Elem>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols, a.begin() + r * cols);
        Elem* pr = a.data() + r * cols;
        Elem s = f.inv(pr[c]);
        if (s != 1)
            for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elem* pi = a.data() + i * cols;
            Elem factor = pi[c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) pi[j] = f.sub(pi[j], f.mul(factor, pr[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RrefResult rref(const Field& f, const Matrix& m) {
    std::vector<Elem> buf = m.data();
    auto pivots = reduce_in_place(f, buf, m.rows(), m.cols());
    buf.resize(pivots.size() * m.cols());
    RrefResult out;
    out.rank = pivots.size();
    out.reduced = Matrix(out.rank, m.cols(), std::move(buf));
    out.pivots = std::move(pivots);
    return out;
}

std::size_t rank(const Field& f, const Matrix& m) {
    std::vector<Elem> buf = m.data();
    return reduce_in_place(f, buf, m.rows(), m.cols()).size();
}

Matrix inverse(const Field& f, const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) fail(ErrorCode::invalid_argument, "inverse of non-square matrix");
    std::vector<Elem> aug(n * 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m.at(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    auto pivots = reduce_in_place(f, aug, n, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::domain, "matrix is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug[i * 2 * n + n + j];
    return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(std::size_t n) {
    Subspace s;
    s.n_ = n;
    return s;
}

Subspace Subspace::full(std::size_t n) {
    Subspace s;
    s.n_ = n;
    s.k_ = n;
    s.basis_ = Matrix::identity(n).data();
    return s;
}

Subspace Subspace::span(const Field& f, const Matrix& m) {
    Subspace s;
    s.n_ = m.cols();
    std::vector<Elem> buf = m.data();
    auto pivots = reduce_in_place(f, buf, m.rows(), m.cols());
    s.k_ = pivots.size();
    buf.resize(s.k_ * s.n_);
    s.basis_ = std::move(buf);
    return s;
}

Subspace Subspace::span_vectors(const Field& f, std::size_t n, const std::vector<Vec>& vectors) {
    Matrix m(0, n);
    for (const auto& v : vectors) m.append_row(v);
    return span(f, m);
}

Subspace Subspace::from_canonical(std::size_t n, std::size_t k, std::vector<Elem> basis) {
    Subspace s;
    s.n_ = n;
    s.k_ = k;
    s.basis_ = std::move(basis);
    return s;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        std::size_t c = 0;
        while (basis_[i * n_ + c] == 0) ++c;
        out.push_back(c);
    }
    return out;
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < k_; ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < n_; ++j) os << int(basis_[i * n_ + j]);
    }
    os << '>';
    return os.str();
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ (s.ambient_dim() * 131 + s.dim());
    for (Elem e : s.bytes()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

Subspace kernel(const Field& f, const Matrix& m) {
    const std::size_t n = m.cols();
    auto r = rref(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix basis(0, n);
    Vec x(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = f.neg(r.reduced.at(i, free));
        basis.append_row(x);
    }
    return Subspace::span(f, basis);
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim()) fail(ErrorCode::invalid_argument, "ambient dimension mismatch");
}

// Annihilator under the standard dot product.
Subspace annihilator(const Field& f, const Subspace& u) {
    if (u.is_zero()) return Subspace::full(u.ambient_dim());
    return kernel(f, u.basis());
}

} // namespace

Subspace sum(const Field& f, const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    if (w.is_zero()) return u;
    if (u.is_zero()) return w;
    return Subspace::span(f, stack(u.basis(), w.basis()));
}

Subspace intersect(const Field& f, const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    if (u.is_zero() || w.is_zero()) return Subspace::zero(u.ambient_dim());
    if (contains(f, u, w)) return w;
    if (contains(f, w, u)) return u;
    auto au = annihilator(f, u);
    auto aw = annihilator(f, w);
    return kernel(f, stack(au.basis(), aw.basis()));
}

bool contains_vector(const Field& f, const Subspace& u, std::span<const Elem> v) {
    const std::size_t n = u.ambient_dim();
    if (v.size() != n) fail(ErrorCode::invalid_argument, "vector length mismatch");
    Vec r(v.begin(), v.end());
    auto piv = u.pivots();
    for (std::size_t i = 0; i < u.dim(); ++i) {
        Elem c = r[piv[i]];
        if (c == 0) continue;
        auto row = u.row(i);
        for (std::size_t j = 0; j < n; ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool contains(const Field& f, const Subspace& u, const Subspace& w) {
    require_same_ambient(u, w);
    if (w.dim() > u.dim()) return false;
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (!contains_vector(f, u, w.row(i))) return false;
    return true;
}

Subspace image(const Field& f, const Matrix& m, const Subspace& u) {
    const std::size_t n = u.ambient_dim();
    if (m.rows() != n || m.cols() != n) fail(ErrorCode::invalid_argument, "image: matrix shape mismatch");
    Matrix rows(u.dim(), n);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        auto src = u.row(i);
        for (std::size_t r = 0; r < n; ++r) {
            unsigned acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc += unsigned(m.at(r, c)) * src[c];
            rows.at(i, r) = Elem(acc % f.p());
        }
    }
    return Subspace::span(f, rows);
}

bool normalize_projective(const Field& f, Vec& v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return false;
    Elem s = f.inv(*it);
    if (s != 1)
        for (auto& e : v) e = f.mul(e, s);
    return true;
}

void for_each_projective_vector(const Field& f, std::size_t len, const std::function<void(const Vec&)>& fn) {
    const unsigned p = f.p();
    Vec v(len, 0);
    for (std::size_t lead = 0; lead < len; ++lead) {
        // v = (0,...,0,1,*,...,*) with the 1 at `lead`
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        const std::size_t tail = len - lead - 1;
        for (;;) {
            fn(v);
            std::size_t j = 0;
            while (j < tail) {
                Elem& e = v[len - 1 - j];
                if (++e < p) break;
                e = 0;
                ++j;
            }
            if (j == tail) break;
        }
    }
}

namespace {

void enumerate_rref(const Field& f, std::size_t n, std::size_t k, const std::function<void(std::vector<Elem>&)>& fn) {
    const unsigned p = f.p();
    std::vector<std::size_t> piv(k);
    std::vector<Elem> m(k * n);
    std::vector<std::size_t> free_pos;

    // Iterate pivot column sets in increasing order.
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
        if (idx == k) {
            std::vector<bool> is_piv(n, false);
            for (auto c : piv) is_piv[c] = true;
            free_pos.clear();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = piv[i] + 1; c < n; ++c)
                    if (!is_piv[c]) free_pos.push_back(i * n + c);
            std::fill(m.begin(), m.end(), 0);
            for (std::size_t i = 0; i < k; ++i) m[i * n + piv[i]] = 1;
            for (;;) {
                fn(m);
                std::size_t j = 0;
                while (j < free_pos.size()) {
                    Elem& e = m[free_pos[j]];
                    if (++e < p) break;
                    e = 0;
                    ++j;
                }
                if (j == free_pos.size()) break;
            }
            return;
        }
        for (std::size_t c = start; c + (k - idx) <= n; ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n, std::size_t k) {
    if (k > n) fail(ErrorCode::invalid_argument, "subspace dimension exceeds ambient dimension");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(n));
        return out;
    }
    enumerate_rref(f, n, k, [&](std::vector<Elem>& m) { out.push_back(Subspace::from_canonical(n, k, m)); });
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.bytes() < b.bytes(); });
    return out;
}

std::vector<Subspace> subspaces_of(const Field& f, const Subspace& u, std::size_t k) {
    const std::size_t d = u.dim();
    if (k > d) fail(ErrorCode::invalid_argument, "subspace dimension exceeds container dimension");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace::zero(u.ambient_dim()));
        return out;
    }
    const Matrix b = u.basis();
    enumerate_rref(f, d, k, [&](std::vector<Elem>& coeffs) {
        out.push_back(Subspace::span(f, multiply(f, Matrix(k, d, coeffs), b)));
    });
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.bytes() < b.bytes(); });
    return out;
}

std::vector<Subspace> points_of(const Field& f, const Subspace& u) {
    return subspaces_of(f, u, 1);
}

std::uint64_t gaussian_binomial(unsigned p, unsigned n, unsigned k) {
    if (k > n) return 0;
    // prod (p^{n-i} - 1) / (p^{i+1} - 1), exact at every step
    unsigned __int128 num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        unsigned __int128 a = 1, b = 1;
        for (unsigned t = 0; t < n - i; ++t) a *= p;
        for (unsigned t = 0; t < i + 1; ++t) b *= p;
        num *= (a - 1);
        den *= (b - 1);
    }
    return static_cast<std::uint64_t>(num / den);
}

} // namespace symplectica
