// Copyright 2026 The Schwinger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHWINGER_QOPS_H
#define SCHWINGER_QOPS_H

#include <compare>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "schwinger/hgraph.h"
#include "schwinger/rational.h"

namespace schwinger {

/// Normally ordered quadratic monomial. Create2(i,j) = a_i^† a_j^† and
/// Annih2(i,j) = a_i a_j with i <= j; Mixed(i,j) = a_i^† a_j.
struct Monomial {
    enum class Kind : int { kUnit = 0, kMixed = 1, kCreate2 = 2, kAnnih2 = 3 };

    Kind kind = Kind::kUnit;
    int i = 0;
    int j = 0;

    static Monomial unit() {
        return {};
    }
    static Monomial create2(int i, int j) {
        return {Kind::kCreate2, std::min(i, j), std::max(i, j)};
    }
    static Monomial annih2(int i, int j) {
        return {Kind::kAnnih2, std::min(i, j), std::max(i, j)};
    }
    static Monomial mixed(int i, int j) {
        return {Kind::kMixed, i, j};
    }

    Monomial adjoint() const;

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;

    std::string str() const;
};

/// All quadratic monomials on n modes plus Unit: Mixed (n^2), Create2 and
/// Annih2 (n(n+1)/2 each), then Unit last.
std::vector<Monomial> quadratic_basis(int n_modes);

/// A single ladder operator a_mode or a_mode^†.
struct Ladder {
    int mode;
    bool dagger;
};

/// Scalar value of [x, y] for ladder operators: [a_i, a_j^†] = delta_ij.
int ladder_bracket(const Ladder &x, const Ladder &y);

namespace detail {

inline bool coeff_is_zero(const GaussRational &c) {
    return c.is_zero();
}
inline bool coeff_is_zero(const std::complex<double> &c) {
    return c == std::complex<double>(0.0, 0.0);
}
inline GaussRational coeff_conj(const GaussRational &c) {
    return c.conj();
}
inline std::complex<double> coeff_conj(const std::complex<double> &c) {
    return std::conj(c);
}

}  // namespace detail

/// Formal product of at most two ladder operators times a coefficient.
template <typename Coeff>
struct RawTerm {
    Coeff coeff;
    std::vector<Ladder> ops;
};

/// Quadratic boson operator in canonical normally ordered form. Zero
/// coefficients are never stored.
///
/// QuadOp (Gaussian-rational coefficients) feeds the exact kernel path;
/// ApproxQuadOp carries floating coefficients that arise from eigenvectors.
template <typename Coeff>
class BasicQuadOp {
   public:
    using coeff_type = Coeff;
    using TermMap = std::map<Monomial, Coeff>;

    BasicQuadOp() = default;
    BasicQuadOp(const Monomial &m, Coeff c) {
        add(m, std::move(c));
    }
    static BasicQuadOp identity() {
        return BasicQuadOp(Monomial::unit(), Coeff(1));
    }

    void add(const Monomial &m, const Coeff &c) {
        if (detail::coeff_is_zero(c)) {
            return;
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (detail::coeff_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    Coeff coefficient(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    const TermMap &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    /// Largest mode index referenced, or -1.
    int max_mode() const {
        int m = -1;
        for (const auto &[mono, c] : terms_) {
            if (mono.kind != Monomial::Kind::kUnit) {
                m = std::max({m, mono.i, mono.j});
            }
        }
        return m;
    }

    BasicQuadOp adjoint() const {
        BasicQuadOp out;
        for (const auto &[m, c] : terms_) {
            out.add(m.adjoint(), detail::coeff_conj(c));
        }
        return out;
    }
    bool is_hermitian() const {
        return *this == adjoint();
    }

    BasicQuadOp &operator+=(const BasicQuadOp &other) {
        for (const auto &[m, c] : other.terms_) {
            add(m, c);
        }
        return *this;
    }
    BasicQuadOp &operator-=(const BasicQuadOp &other) {
        for (const auto &[m, c] : other.terms_) {
            add(m, -c);
        }
        return *this;
    }
    BasicQuadOp &operator*=(const Coeff &s) {
        if (detail::coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto &[m, c] : terms_) {
            c *= s;
        }
        return *this;
    }
    friend BasicQuadOp operator+(BasicQuadOp a, const BasicQuadOp &b) {
        return a += b;
    }
    friend BasicQuadOp operator-(BasicQuadOp a, const BasicQuadOp &b) {
        return a -= b;
    }
    friend BasicQuadOp operator*(BasicQuadOp a, const Coeff &s) {
        return a *= s;
    }
    friend BasicQuadOp operator*(const Coeff &s, BasicQuadOp a) {
        return a *= s;
    }
    BasicQuadOp operator-() const {
        return *this * Coeff(-1);
    }

    bool operator==(const BasicQuadOp &other) const {
        return terms_ == other.terms_;
    }

    std::string str() const;

   private:
    TermMap terms_;
};

using QuadOp = BasicQuadOp<GaussRational>;
using ApproxQuadOp = BasicQuadOp<std::complex<double>>;

/// Rewrites a formal sum of products of at most two ladder operators into
/// the canonical basis using [a_i, a_j^†] = delta_ij. Throws
/// std::invalid_argument on degree-1 or degree > 2 products.
template <typename Coeff>
BasicQuadOp<Coeff> normal_order(const std::vector<RawTerm<Coeff>> &raw) {
    BasicQuadOp<Coeff> out;
    for (const auto &term : raw) {
        if (term.ops.empty()) {
            out.add(Monomial::unit(), term.coeff);
            continue;
        }
        if (term.ops.size() != 2) {
            throw std::invalid_argument("normal_order: product of " + std::to_string(term.ops.size()) +
                                        " ladder operators is not quadratic");
        }
        const Ladder &x = term.ops[0];
        const Ladder &y = term.ops[1];
        if (x.dagger && y.dagger) {
            out.add(Monomial::create2(x.mode, y.mode), term.coeff);
        } else if (!x.dagger && !y.dagger) {
            out.add(Monomial::annih2(x.mode, y.mode), term.coeff);
        } else if (x.dagger) {
            out.add(Monomial::mixed(x.mode, y.mode), term.coeff);
        } else {
            // a_i a_j^† = a_j^† a_i + delta_ij
            out.add(Monomial::mixed(y.mode, x.mode), term.coeff);
            if (x.mode == y.mode) {
                out.add(Monomial::unit(), term.coeff);
            }
        }
    }
    return out;
}

/// Ladder-operator word of a canonical monomial (empty for Unit).
std::vector<Ladder> monomial_word(const Monomial &m);

/// [A, B] = normal_order(AB - BA); quadratic in, quadratic out.
template <typename Coeff>
BasicQuadOp<Coeff> commutator(const BasicQuadOp<Coeff> &a, const BasicQuadOp<Coeff> &b) {
    std::vector<RawTerm<Coeff>> raw;
    for (const auto &[ma, ca] : a.terms()) {
        if (ma.kind == Monomial::Kind::kUnit) {
            continue;
        }
        auto x = monomial_word(ma);
        for (const auto &[mb, cb] : b.terms()) {
            if (mb.kind == Monomial::Kind::kUnit) {
                continue;
            }
            auto y = monomial_word(mb);
            Coeff c = ca * cb;
            // [x0 x1, y0 y1] = x0 y0 [x1,y1] + [x1,y0] x0 y1 + [x0,y1] y0 x1 + [x0,y0] y1 x1
            if (int s = ladder_bracket(x[1], y[1])) {
                raw.push_back({c * Coeff(s), {x[0], y[0]}});
            }
            if (int s = ladder_bracket(x[1], y[0])) {
                raw.push_back({c * Coeff(s), {x[0], y[1]}});
            }
            if (int s = ladder_bracket(x[0], y[1])) {
                raw.push_back({c * Coeff(s), {y[0], x[1]}});
            }
            if (int s = ladder_bracket(x[0], y[0])) {
                raw.push_back({c * Coeff(s), {y[1], x[1]}});
            }
        }
    }
    return normal_order(raw);
}

/// Anti-Hermitian generator K = sum_{j<k} G_jk (a_j^† a_k^† - a_j a_k); the
/// evolved state is exp(rK)|0> with r the squeezing parameter.
QuadOp hamiltonian_generator(const HGraph &graph);

enum class SpinComponent { kX, kY, kZ, kZero };

const char *component_name(SpinComponent c);

/// Schwinger spin operator of the ordered pair (a, b). Throws
/// ValidationError when a == b.
QuadOp schwinger_spin(std::pair<int, int> pair, SpinComponent component);

/// Number operator N_k.
QuadOp number_op(int mode);

/// True iff the Unit and every Create2 coefficient vanish.
template <typename Coeff>
bool nullifies_vacuum(const BasicQuadOp<Coeff> &op) {
    for (const auto &[m, c] : op.terms()) {
        if (m.kind == Monomial::Kind::kUnit || m.kind == Monomial::Kind::kCreate2) {
            return false;
        }
    }
    return true;
}

/// Linear combination sum_j q_j Q_j + p_j P_j with Q = (a + a^†)/sqrt2 and
/// P = i(a^† - a)/sqrt2.
template <typename Real>
struct BasicLinearForm {
    std::vector<Real> q;
    std::vector<Real> p;

    BasicLinearForm() = default;
    explicit BasicLinearForm(int n_modes) : q(n_modes, Real(0)), p(n_modes, Real(0)) {
    }
    static BasicLinearForm from(std::vector<Real> qc, std::vector<Real> pc) {
        if (qc.size() != pc.size()) {
            throw std::invalid_argument("LinearForm: q and p coefficient lists differ in length");
        }
        BasicLinearForm f;
        f.q = std::move(qc);
        f.p = std::move(pc);
        return f;
    }
    int n_modes() const {
        return static_cast<int>(q.size());
    }
    bool is_zero() const {
        for (size_t k = 0; k < q.size(); ++k) {
            if (q[k] != Real(0) || p[k] != Real(0)) {
                return false;
            }
        }
        return true;
    }
};

using LinearForm = BasicLinearForm<mpq_class>;
using ApproxLinearForm = BasicLinearForm<double>;

/// Symmetrized product (f1 f2 + f2 f1)/2 in normal order.
QuadOp quad_product(const LinearForm &f1, const LinearForm &f2);
ApproxQuadOp quad_product(const ApproxLinearForm &f1, const ApproxLinearForm &f2);

ApproxQuadOp to_approx(const QuadOp &op);

/// Serialization records {kind, i, j, re, im} with 1-based modes (0 for unit).
nlohmann::json quadop_to_json(const QuadOp &op);
QuadOp quadop_from_json(const nlohmann::json &doc);

}  // namespace schwinger

#endif
