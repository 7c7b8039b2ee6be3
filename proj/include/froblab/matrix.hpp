#pragma once

// Dense exact linear algebra over a froblab field: RREF, kernels, images,
// Kronecker products and tensor-factor permutations.  Everything is a pure
// function of immutable inputs; results with a span semantics are returned
// in canonical reduced row-echelon form so that equality of subspaces is
// equality of representations.
//
// Index convention (normative for the whole library): the basis vector
// (i, j) of X (x) Y has flat index i * dim(Y) + j.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "froblab/errors.hpp"
#include "froblab/field.hpp"

namespace froblab {

template <class F>
class Vector {
public:
    using Elem = typename F::Elem;

    Vector(F field, std::size_t n) : field_(std::move(field)), a_(n, field_.zero()) {}
    Vector(F field, std::vector<Elem> entries)
        : field_(std::move(field)), a_(std::move(entries)) {}

    std::size_t size() const { return a_.size(); }
    const F& field() const { return field_; }

    Elem& operator[](std::size_t i) { return a_[i]; }
    const Elem& operator[](std::size_t i) const { return a_[i]; }

    const std::vector<Elem>& entries() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Vector& o) const {
        if (field_ != o.field_ || a_.size() != o.a_.size()) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    Vector operator+(const Vector& o) const {
        require_same_field(field_, o.field_, "vector addition");
        if (size() != o.size()) throw DimensionMismatch("vector sizes differ");
        Vector r(field_, size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }
    Vector operator-(const Vector& o) const {
        require_same_field(field_, o.field_, "vector subtraction");
        if (size() != o.size()) throw DimensionMismatch("vector sizes differ");
        Vector r(field_, size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }
    Vector scaled(const Elem& c) const {
        Vector r(field_, size());
        if (field_.is_zero(c)) return r;
        for (std::size_t i = 0; i < size(); ++i) r[i] = field_.mul(c, a_[i]);
        return r;
    }

private:
    F field_;
    std::vector<Elem> a_;
};

template <class F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
    Vector<F> v(field, n);
    v[i] = field.one();
    return v;
}

template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "matrix addition");
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "matrix subtraction");
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-() const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.neg(a_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(field_, o.field_, "matrix multiplication");
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product: " + shape_str() + " * " + o.shape_str());
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Elem& bkj = o.at(k, j);
                    if (field_.is_zero(bkj)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, bkj));
                }
            }
        }
        return r;
    }

    Vector<F> operator*(const Vector<F>& v) const {
        require_same_field(field_, v.field(), "matrix-vector product");
        if (cols_ != v.size())
            throw DimensionMismatch("matrix-vector product: " + shape_str() + " * vec(" +
                                    std::to_string(v.size()) + ")");
        Vector<F> r(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (field_.is_zero(aik)) continue;
                if (field_.is_zero(v[k])) continue;
                r[i] = field_.add(r[i], field_.mul(aik, v[k]));
            }
        }
        return r;
    }

    Matrix scaled(const Elem& c) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(c, a_[i]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Vector<F> row(std::size_t i) const {
        Vector<F> v(field_, cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    Vector<F> col(std::size_t j) const {
        Vector<F> v(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_row(std::size_t i, const Vector<F>& v) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void set_col(std::size_t j, const Vector<F>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check_same_shape(const Matrix& o, const char* where) const {
        require_same_field(field_, o.field_, where);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string(where) + ": " + shape_str() + " vs " +
                                    o.shape_str());
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
Matrix<F> matrix_from_rows(const F& field, const std::vector<Vector<F>>& rows,
                           std::size_t cols) {
    Matrix<F> m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length differs from cols");
        m.set_row(i, rows[i]);
    }
    return m;
}

// Stack b below a.
template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    require_same_field(a.field(), b.field(), "vstack");
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    Matrix<F> r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

// Place b to the right of a.
template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    require_same_field(a.field(), b.field(), "hstack");
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    Matrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Reduced row-echelon form and friends
// ---------------------------------------------------------------------------

template <class F>
struct RrefResult {
    Matrix<F> mat;                   // zero rows removed, pivots normalized to 1
    std::vector<std::size_t> pivots; // pivot column of each surviving row, ascending
};

// Deterministic leftmost-pivot elimination with exact division.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F& K = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!K.is_zero(m.at(i, c))) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        if (!K.is_one(m.at(r, c))) {
            auto inv = K.inv(m.at(r, c));
            for (std::size_t j = c; j < cols; ++j) {
                if (K.is_zero(m.at(r, j))) continue;
                m.at(r, j) = K.mul(inv, m.at(r, j));
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const auto f = m.at(i, c);
            if (K.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) {
                if (K.is_zero(m.at(r, j))) continue;
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<F> out(K, r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return {std::move(out), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).mat.rows();
}

// A linear subspace of K^ambient, stored as its unique RREF basis
// (one basis vector per row, pivot columns ascending).
template <class F>
struct Subspace {
    std::size_t ambient;
    Matrix<F> basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.rows(); }
    const F& field() const { return basis.field(); }
};

template <class F>
Subspace<F> span_of_rows(const Matrix<F>& rows) {
    auto r = rref(rows);
    return Subspace<F>{rows.cols(), std::move(r.mat), std::move(r.pivots)};
}

template <class F>
Subspace<F> zero_subspace(const F& field, std::size_t ambient) {
    return Subspace<F>{ambient, Matrix<F>(field, 0, ambient), {}};
}

template <class F>
Subspace<F> full_subspace(const F& field, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    std::iota(piv.begin(), piv.end(), std::size_t{0});
    return Subspace<F>{ambient, Matrix<F>::identity(field, ambient), std::move(piv)};
}

// Canonical basis of the null space {v : m v = 0}.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
    const F& K = m.field();
    auto r = rref(m);
    const auto& piv = r.pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;

    Matrix<F> basis(K, m.cols() - piv.size(), m.cols());
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = K.one();
        for (std::size_t i = 0; i < piv.size(); ++i)
            basis.at(row, piv[i]) = K.neg(r.mat.at(i, c));
        ++row;
    }
    return span_of_rows(basis);
}

// Column space, canonicalized.
template <class F>
Subspace<F> image(const Matrix<F>& m) {
    return span_of_rows(m.transpose());
}

// Any solution of m x = rhs, or nothing if inconsistent (free variables 0).
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& rhs) {
    require_same_field(m.field(), rhs.field(), "solve");
    if (m.rows() != rhs.size()) throw DimensionMismatch("solve: rhs length differs from rows");
    const F& K = m.field();
    Matrix<F> aug(K, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    auto r = rref(std::move(aug));
    Vector<F> x(K, m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt; // pivot in rhs column
        x[r.pivots[i]] = r.mat.at(i, m.cols());
    }
    return x;
}

// ---------------------------------------------------------------------------
// Tensor utilities
// ---------------------------------------------------------------------------

// Kronecker product under the flat index convention: block (i,j) of the
// result is a(i,j) * b, so kron(a,b) realizes the map x (x) y -> a x (x) b y.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    require_same_field(a.field(), b.field(), "kron");
    const F& K = a.field();
    Matrix<F> r(K, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a.at(i, j);
            if (K.is_zero(aij)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const auto& bkl = b.at(k, l);
                    if (K.is_zero(bkl)) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = K.mul(aij, bkl);
                }
        }
    }
    return r;
}

inline std::size_t tensor_total(const std::vector<std::size_t>& dims) {
    std::size_t t = 1;
    for (auto d : dims) t *= d;
    return t;
}

inline std::size_t tensor_flat(const std::vector<std::size_t>& dims,
                               const std::vector<std::size_t>& idx) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
    return f;
}

inline std::vector<std::size_t> tensor_unflat(const std::vector<std::size_t>& dims,
                                              std::size_t flat) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    return idx;
}

// Permutation matrix reordering tensor factors.  Slot t of the output tuple
// is factor perm[t] of the input: with dims (d_0,...,d_{k-1}) the basis
// vector (x_0,...,x_{k-1}) maps to (x_{perm[0]},...,x_{perm[k-1]}).  The
// swap on two factors is tensor_permute({m,n}, {1,0}).
template <class F>
Matrix<F> tensor_permute(const F& field, const std::vector<std::size_t>& dims,
                         const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size())
        throw DimensionMismatch("tensor_permute: permutation length differs from factor count");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p])
            throw DimensionMismatch("tensor_permute: not a permutation");
        seen[p] = true;
    }
    std::vector<std::size_t> out_dims(dims.size());
    for (std::size_t t = 0; t < perm.size(); ++t) out_dims[t] = dims[perm[t]];
    const std::size_t total = tensor_total(dims);
    Matrix<F> m(field, total, total);
    std::vector<std::size_t> out_idx(dims.size());
    for (std::size_t f = 0; f < total; ++f) {
        auto idx = tensor_unflat(dims, f);
        for (std::size_t t = 0; t < perm.size(); ++t) out_idx[t] = idx[perm[t]];
        m.at(tensor_flat(out_dims, out_idx), f) = field.one();
    }
    return m;
}

// ---------------------------------------------------------------------------
// Incremental RREF span accumulator
// ---------------------------------------------------------------------------

// Maintains the canonical RREF basis of a growing span; insertion keeps the
// representation fully reduced, so to_subspace() is always canonical.
template <class F>
class SpanBuilder {
public:
    using Elem = typename F::Elem;

    SpanBuilder(F field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }

    // Reduces v against the current basis; returns the residual.
    Vector<F> reduce(Vector<F> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (field_.is_zero(c)) continue;
            Elem f = c; // v -= f * row_i
            for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
                if (field_.is_zero(rows_[i][j])) continue;
                v[j] = field_.sub(v[j], field_.mul(f, rows_[i][j]));
            }
        }
        return v;
    }

    bool contains(const Vector<F>& v) const { return reduce(v).is_zero(); }

    // Returns true if v enlarged the span.
    bool insert(const Vector<F>& v) {
        if (v.size() != ambient_) throw DimensionMismatch("SpanBuilder: ambient mismatch");
        Vector<F> w = reduce(v);
        std::size_t lead = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (!field_.is_zero(w[j])) { lead = j; break; }
        }
        if (lead == ambient_) return false;
        if (!field_.is_one(w[lead])) w = w.scaled(field_.inv(w[lead]));
        // eliminate the new pivot from existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = rows_[i][lead];
            if (field_.is_zero(c)) continue;
            Elem f = c;
            for (std::size_t j = lead; j < ambient_; ++j) {
                if (field_.is_zero(w[j])) continue;
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, w[j]));
            }
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, lead);
        rows_.insert(rows_.begin() + pos, std::move(w));
        return true;
    }

    Subspace<F> to_subspace() const {
        Matrix<F> b(field_, rows_.size(), ambient_);
        for (std::size_t i = 0; i < rows_.size(); ++i) b.set_row(i, rows_[i]);
        return Subspace<F>{ambient_, std::move(b), pivots_};
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<Vector<F>> rows_; // RREF rows, pivot columns ascending
    std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Subspace predicates and lattice operations
// ---------------------------------------------------------------------------

template <class F>
void require_same_ambient(const Subspace<F>& a, const Subspace<F>& b, const char* where) {
    require_same_field(a.field(), b.field(), where);
    if (a.ambient != b.ambient)
        throw DimensionMismatch(std::string(where) + ": ambient dimensions differ");
}

// Equality of spans = equality of canonical bases.
template <class F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "subspace_equal");
    return a.basis == b.basis;
}

template <class F>
bool subspace_contains(const Subspace<F>& s, const Vector<F>& v) {
    require_same_field(s.field(), v.field(), "subspace_contains");
    if (v.size() != s.ambient) throw DimensionMismatch("subspace_contains: ambient mismatch");
    const F& K = s.field();
    Vector<F> w = v;
    for (std::size_t i = 0; i < s.basis.rows(); ++i) {
        const auto& c = w[s.pivots[i]];
        if (K.is_zero(c)) continue;
        auto f = c;
        for (std::size_t j = s.pivots[i]; j < s.ambient; ++j) {
            if (K.is_zero(s.basis.at(i, j))) continue;
            w[j] = K.sub(w[j], K.mul(f, s.basis.at(i, j)));
        }
    }
    return w.is_zero();
}

template <class F>
bool subspace_leq(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "subspace_leq");
    for (std::size_t i = 0; i < a.basis.rows(); ++i)
        if (!subspace_contains(b, a.basis.row(i))) return false;
    return true;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "subspace_sum");
    return span_of_rows(vstack(a.basis, b.basis));
}

// Intersection via the kernel of [A^T | -B^T].
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b, "subspace_intersect");
    const F& K = a.field();
    Matrix<F> sys = hstack(a.basis.transpose(), -b.basis.transpose());
    auto combos = kernel(sys); // rows: (alpha | beta) with A^T alpha = B^T beta
    Matrix<F> vecs(K, combos.dim(), a.ambient);
    for (std::size_t r = 0; r < combos.dim(); ++r) {
        for (std::size_t i = 0; i < a.basis.rows(); ++i) {
            const auto& c = combos.basis.at(r, i);
            if (K.is_zero(c)) continue;
            for (std::size_t j = 0; j < a.ambient; ++j) {
                if (K.is_zero(a.basis.at(i, j))) continue;
                vecs.at(r, j) = K.add(vecs.at(r, j), K.mul(c, a.basis.at(i, j)));
            }
        }
    }
    return span_of_rows(vecs);
}

// Coordinates of v in the RREF basis of s; throws if v is outside the span.
template <class F>
Vector<F> coordinates_in(const Subspace<F>& s, const Vector<F>& v) {
    const F& K = s.field();
    Vector<F> coords(K, s.dim());
    Vector<F> w = v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto c = w[s.pivots[i]];
        coords[i] = c;
        if (K.is_zero(c)) continue;
        for (std::size_t j = s.pivots[i]; j < s.ambient; ++j) {
            if (K.is_zero(s.basis.at(i, j))) continue;
            w[j] = K.sub(w[j], K.mul(c, s.basis.at(i, j)));
        }
    }
    if (!w.is_zero())
        throw VerificationFailed("coordinates_in: vector not in subspace");
    return coords;
}

template <class F>
std::string to_string(const Matrix<F>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.field().to_string(m.at(i, j));
        os << "]" << (i + 1 < m.rows() ? "\n" : "");
    }
    os << "]";
    return os.str();
}

} // namespace froblab
