#pragma once

// Finite-dimensional unital associative algebras presented by structure
// constants, their regular representations, the enveloping algebra
// A^e = A (x) A^op, and the builtin catalog (exterior algebra on two
// generators, cyclic and symmetric group algebras, matrix algebras,
// truncated polynomial rings).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "froblab/errors.hpp"
#include "froblab/matrix.hpp"

namespace froblab {

template <class F>
class AlgebraPresentation {
public:
    using Elem = typename F::Elem;

    // Validates associativity and the unit axiom eagerly; throws
    // AlgebraAxiomError naming the first offending triple.
    AlgebraPresentation(F field, std::size_t n, std::vector<std::string> basis_names,
                        std::vector<Elem> structure, Vector<F> unit)
        : field_(std::move(field)),
          n_(n),
          names_(std::move(basis_names)),
          c_(std::move(structure)),
          unit_(std::move(unit)) {
        if (names_.size() != n_) throw InputError("basis name count differs from dim");
        if (c_.size() != n_ * n_ * n_) throw InputError("structure tensor has wrong size");
        if (unit_.size() != n_) throw InputError("unit vector has wrong length");
        validate();
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vector<F>& unit() const { return unit_; }

    // coefficient of e_k in e_i * e_j
    const Elem& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    const std::vector<Elem>& structure() const { return c_; }

    const std::optional<Vector<F>>& default_counit() const { return default_counit_; }
    void set_default_counit(Vector<F> eps) { default_counit_ = std::move(eps); }

    const std::string& builtin_name() const { return builtin_name_; }
    void set_builtin_name(std::string s) { builtin_name_ = std::move(s); }

private:
    void validate() const {
        const F& K = field_;
        // associativity on basis triples: (e_i e_j) e_k == e_i (e_j e_k)
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    for (std::size_t m = 0; m < n_; ++m) {
                        Elem lhs = K.zero(), rhs = K.zero();
                        for (std::size_t l = 0; l < n_; ++l) {
                            if (!K.is_zero(c(i, j, l)) && !K.is_zero(c(l, k, m)))
                                lhs = K.add(lhs, K.mul(c(i, j, l), c(l, k, m)));
                            if (!K.is_zero(c(j, k, l)) && !K.is_zero(c(i, l, m)))
                                rhs = K.add(rhs, K.mul(c(j, k, l), c(i, l, m)));
                        }
                        if (!K.eq(lhs, rhs))
                            throw AlgebraAxiomError(
                                "associativity fails at (" + names_[i] + ", " + names_[j] +
                                ", " + names_[k] + "), coefficient of " + names_[m]);
                    }
                }
        // unit axiom
        for (std::size_t i = 0; i < n_; ++i) {
            Vector<F> ei = unit_vector(field_, n_, i);
            if (mul_vectors(unit_, ei) != ei || mul_vectors(ei, unit_) != ei)
                throw AlgebraAxiomError("unit axiom fails at basis element " + names_[i]);
        }
    }

    Vector<F> mul_vectors(const Vector<F>& x, const Vector<F>& y) const {
        const F& K = field_;
        Vector<F> z(field_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (K.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (K.is_zero(y[j])) continue;
                Elem xy = K.mul(x[i], y[j]);
                for (std::size_t k = 0; k < n_; ++k) {
                    if (K.is_zero(c(i, j, k))) continue;
                    z[k] = K.add(z[k], K.mul(xy, c(i, j, k)));
                }
            }
        }
        return z;
    }

    F field_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<Elem> c_; // c[(i*n+j)*n+k]
    Vector<F> unit_;
    std::optional<Vector<F>> default_counit_;
    std::string builtin_name_;

    template <class G>
    friend Vector<G> multiply(const AlgebraPresentation<G>&, const Vector<G>&,
                              const Vector<G>&);
};

template <class F>
Vector<F> multiply(const AlgebraPresentation<F>& alg, const Vector<F>& x,
                   const Vector<F>& y) {
    require_same_field(alg.field(), x.field(), "multiply");
    require_same_field(alg.field(), y.field(), "multiply");
    if (x.size() != alg.dim() || y.size() != alg.dim())
        throw DimensionMismatch("multiply: vector length differs from algebra dim");
    return alg.mul_vectors(x, y);
}

// Matrix of b |-> a b in the basis.
template <class F>
Matrix<F> left_regular(const AlgebraPresentation<F>& alg, const Vector<F>& a) {
    const F& K = alg.field();
    const std::size_t n = alg.dim();
    Matrix<F> m(K, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (K.is_zero(alg.c(i, j, k))) continue;
                m.at(k, j) = K.add(m.at(k, j), K.mul(a[i], alg.c(i, j, k)));
            }
    }
    return m;
}

// Matrix of b |-> b a in the basis.
template <class F>
Matrix<F> right_regular(const AlgebraPresentation<F>& alg, const Vector<F>& a) {
    const F& K = alg.field();
    const std::size_t n = alg.dim();
    Matrix<F> m(K, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (K.is_zero(alg.c(j, i, k))) continue;
                m.at(k, j) = K.add(m.at(k, j), K.mul(a[i], alg.c(j, i, k)));
            }
    }
    return m;
}

template <class F>
Matrix<F> left_regular_basis(const AlgebraPresentation<F>& alg, std::size_t i) {
    return left_regular(alg, unit_vector(alg.field(), alg.dim(), i));
}

template <class F>
Matrix<F> right_regular_basis(const AlgebraPresentation<F>& alg, std::size_t i) {
    return right_regular(alg, unit_vector(alg.field(), alg.dim(), i));
}

// Presentation with the reversed product: e_i *op e_j = e_j e_i.
template <class F>
AlgebraPresentation<F> opposite(const AlgebraPresentation<F>& alg) {
    const std::size_t n = alg.dim();
    std::vector<typename F::Elem> c(n * n * n, alg.field().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = alg.c(j, i, k);
    return AlgebraPresentation<F>(alg.field(), n, alg.basis_names(), std::move(c), alg.unit());
}

// The enveloping algebra A^e = A (x) A^op: basis e_i (x) e_j at flat index
// i*n+j, product (a (x) a')(b (x) b') = ab (x) b'a', unit 1 (x) 1.
template <class F>
struct EnvelopingAlgebra {
    AlgebraPresentation<F> presentation;
};

template <class F>
EnvelopingAlgebra<F> enveloping(const AlgebraPresentation<F>& alg) {
    const F& K = alg.field();
    const std::size_t n = alg.dim();
    const std::size_t m = n * n;
    std::vector<typename F::Elem> c(m * m * m, K.zero());
    // (e_i (x) e_j)(e_k (x) e_l) = (e_i e_k) (x) (e_l e_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const std::size_t u = i * n + j, v = k * n + l;
                    for (std::size_t r = 0; r < n; ++r) {
                        if (K.is_zero(alg.c(i, k, r))) continue;
                        for (std::size_t s = 0; s < n; ++s) {
                            if (K.is_zero(alg.c(l, j, s))) continue;
                            c[(u * m + v) * m + (r * n + s)] =
                                K.mul(alg.c(i, k, r), alg.c(l, j, s));
                        }
                    }
                }
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            names.push_back(alg.basis_names()[i] + "⊗" + alg.basis_names()[j]);
    Vector<F> unit(K, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (K.is_zero(alg.unit()[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (K.is_zero(alg.unit()[j])) continue;
            unit[i * n + j] = K.mul(alg.unit()[i], alg.unit()[j]);
        }
    }
    return EnvelopingAlgebra<F>{
        AlgebraPresentation<F>(K, m, std::move(names), std::move(c), std::move(unit))};
}

// Action matrices of the A^e basis elements on A (x) A under the convention
// (b (x) b') . (x (x) y) = b x (x) y b'.  Entry u = i*n+j is kron(L_i, R_j).
// This is simultaneously the left regular representation of A^e.
template <class F>
std::vector<Matrix<F>> env_action_on_AA(const AlgebraPresentation<F>& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix<F>> left, right;
    left.reserve(n);
    right.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        left.push_back(left_regular_basis(alg, i));
        right.push_back(right_regular_basis(alg, i));
    }
    std::vector<Matrix<F>> acts;
    acts.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acts.push_back(kron(left[i], right[j]));
    return acts;
}

// Action matrices of the A^e basis on A itself: (b (x) b') . a = b a b'.
template <class F>
std::vector<Matrix<F>> env_action_on_A(const AlgebraPresentation<F>& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix<F>> acts;
    acts.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<F> li = left_regular_basis(alg, i);
        for (std::size_t j = 0; j < n; ++j) acts.push_back(li * right_regular_basis(alg, j));
    }
    return acts;
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
struct StructureBuilder {
    const F& K;
    std::size_t n;
    std::vector<typename F::Elem> c;

    StructureBuilder(const F& field, std::size_t dim)
        : K(field), n(dim), c(dim * dim * dim, field.zero()) {}

    void set(std::size_t i, std::size_t j, std::size_t k, long coeff) {
        c[(i * n + j) * n + k] = K.from_long(coeff);
    }
};

inline std::vector<std::vector<int>> sym3_elements() {
    // one-line notation on {0,1,2}; index 0 is the identity
    return {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
}

inline std::string sym3_name(const std::vector<int>& p) {
    if (p[0] == 0 && p[1] == 1 && p[2] == 2) return "e";
    // cycle notation with 1-based letters
    std::vector<bool> seen(3, false);
    std::string out;
    for (int s = 0; s < 3; ++s) {
        if (seen[s] || p[s] == s) continue;
        std::string cyc = "(";
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc += std::to_string(cur + 1);
            cur = p[cur];
        }
        cyc += ")";
        out += cyc;
    }
    return out;
}

} // namespace detail

// Builtin presentations.  Names: exterior2, group_cyclic (param = order),
// group_sym3, matrix (param = size), trunc_poly (param = truncation degree).
// Each carries its canonical counit as the default.
template <class F>
AlgebraPresentation<F> builtin(const F& K, const std::string& name, std::size_t param = 0) {
    using B = detail::StructureBuilder<F>;
    if (name == "exterior2") {
        // basis (1, x, y, xy); x^2 = y^2 = 0, yx = -xy
        B b(K, 4);
        for (std::size_t i = 0; i < 4; ++i) { b.set(0, i, i, 1); if (i) b.set(i, 0, i, 1); }
        b.set(1, 2, 3, 1);  // x*y = xy
        b.set(2, 1, 3, -1); // y*x = -xy
        Vector<F> unit = unit_vector(K, 4, 0);
        AlgebraPresentation<F> alg(K, 4, {"1", "x", "y", "xy"}, std::move(b.c), unit);
        Vector<F> eps(K, 4);
        eps[3] = K.one(); // coefficient of xy
        alg.set_default_counit(std::move(eps));
        alg.set_builtin_name("exterior2");
        return alg;
    }
    if (name == "group_cyclic") {
        if (param < 1) throw InputError("group_cyclic needs param >= 1");
        const std::size_t k = param;
        B b(K, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b.set(i, j, (i + j) % k, 1);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i)
            names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
        AlgebraPresentation<F> alg(K, k, std::move(names), std::move(b.c),
                                   unit_vector(K, k, 0));
        Vector<F> eps(K, k);
        eps[0] = K.one(); // coefficient of the identity element
        alg.set_default_counit(std::move(eps));
        alg.set_builtin_name("group_cyclic");
        return alg;
    }
    if (name == "group_sym3") {
        auto elts = detail::sym3_elements();
        const std::size_t k = elts.size();
        B b(K, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                // composition (s t)(x) = s(t(x))
                std::vector<int> st(3);
                for (int x = 0; x < 3; ++x) st[x] = elts[i][elts[j][x]];
                std::size_t idx = 0;
                while (elts[idx] != st) ++idx;
                b.set(i, j, idx, 1);
            }
        std::vector<std::string> names;
        for (const auto& p : elts) names.push_back(detail::sym3_name(p));
        AlgebraPresentation<F> alg(K, k, std::move(names), std::move(b.c),
                                   unit_vector(K, k, 0));
        Vector<F> eps(K, k);
        eps[0] = K.one();
        alg.set_default_counit(std::move(eps));
        alg.set_builtin_name("group_sym3");
        return alg;
    }
    if (name == "matrix") {
        if (param < 1) throw InputError("matrix needs param >= 1");
        const std::size_t k = param, n = k * k;
        B b(K, n);
        // E_{ij} E_{lm} = delta_{jl} E_{im}
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t m = 0; m < k; ++m)
                    b.set(i * k + j, j * k + m, i * k + m, 1);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        Vector<F> unit(K, n);
        for (std::size_t i = 0; i < k; ++i) unit[i * k + i] = K.one();
        AlgebraPresentation<F> alg(K, n, std::move(names), std::move(b.c), std::move(unit));
        Vector<F> eps(K, n); // trace
        for (std::size_t i = 0; i < k; ++i) eps[i * k + i] = K.one();
        alg.set_default_counit(std::move(eps));
        alg.set_builtin_name("matrix");
        return alg;
    }
    if (name == "trunc_poly") {
        if (param < 1) throw InputError("trunc_poly needs param >= 1");
        const std::size_t k = param;
        B b(K, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j + i < k; ++j) b.set(i, j, i + j, 1);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < k; ++i)
            names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        AlgebraPresentation<F> alg(K, k, std::move(names), std::move(b.c),
                                   unit_vector(K, k, 0));
        Vector<F> eps(K, k);
        eps[k - 1] = K.one(); // coefficient of x^{k-1}
        alg.set_default_counit(std::move(eps));
        alg.set_builtin_name("trunc_poly");
        return alg;
    }
    throw InputError("unknown builtin algebra '" + name + "'");
}

// Builtins exercised by the verification suite, with their parameters.
inline std::vector<std::pair<std::string, std::size_t>> builtin_catalog() {
    return {{"exterior2", 0}, {"group_cyclic", 2}, {"group_cyclic", 3}, {"group_sym3", 0},
            {"matrix", 2},    {"matrix", 3},       {"trunc_poly", 2},   {"trunc_poly", 3}};
}

inline std::string builtin_label(const std::string& name, std::size_t param) {
    return param ? name + "(" + std::to_string(param) + ")" : name;
}

} // namespace froblab
