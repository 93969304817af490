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

#include "schwinger/qops.h"

#include <sstream>

namespace schwinger {

Monomial Monomial::adjoint() const {
    switch (kind) {
        case Kind::kUnit:
            return unit();
        case Kind::kMixed:
            return mixed(j, i);
        case Kind::kCreate2:
            return annih2(i, j);
        case Kind::kAnnih2:
            return create2(i, j);
    }
    return unit();
}

std::string Monomial::str() const {
    auto mode = [](int k) { return std::to_string(k + 1); };
    switch (kind) {
        case Kind::kUnit:
            return "1";
        case Kind::kMixed:
            return "a" + mode(i) + "+ a" + mode(j);
        case Kind::kCreate2:
            return "a" + mode(i) + "+ a" + mode(j) + "+";
        case Kind::kAnnih2:
            return "a" + mode(i) + " a" + mode(j);
    }
    return "?";
}

std::vector<Monomial> quadratic_basis(int n_modes) {
    std::vector<Monomial> out;
    for (int i = 0; i < n_modes; ++i) {
        for (int j = 0; j < n_modes; ++j) {
            out.push_back(Monomial::mixed(i, j));
        }
    }
    for (int i = 0; i < n_modes; ++i) {
        for (int j = i; j < n_modes; ++j) {
            out.push_back(Monomial::create2(i, j));
        }
    }
    for (int i = 0; i < n_modes; ++i) {
        for (int j = i; j < n_modes; ++j) {
            out.push_back(Monomial::annih2(i, j));
        }
    }
    out.push_back(Monomial::unit());
    return out;
}

int ladder_bracket(const Ladder &x, const Ladder &y) {
    if (x.mode != y.mode || x.dagger == y.dagger) {
        return 0;
    }
    return x.dagger ? -1 : 1;
}

std::vector<Ladder> monomial_word(const Monomial &m) {
    switch (m.kind) {
        case Monomial::Kind::kUnit:
            return {};
        case Monomial::Kind::kMixed:
            return {{m.i, true}, {m.j, false}};
        case Monomial::Kind::kCreate2:
            return {{m.i, true}, {m.j, true}};
        case Monomial::Kind::kAnnih2:
            return {{m.i, false}, {m.j, false}};
    }
    return {};
}

template <typename Coeff>
std::string BasicQuadOp<Coeff>::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if constexpr (std::is_same_v<Coeff, GaussRational>) {
            out << c.str();
        } else {
            out << c;
        }
        out << "*[" << m.str() << "]";
    }
    return out.str();
}

template class BasicQuadOp<GaussRational>;
template class BasicQuadOp<std::complex<double>>;

QuadOp hamiltonian_generator(const HGraph &graph) {
    QuadOp k;
    for (const auto &e : graph.edges()) {
        k.add(Monomial::create2(e.a, e.b), GaussRational(e.weight));
        k.add(Monomial::annih2(e.a, e.b), GaussRational(-e.weight));
    }
    return k;
}

const char *component_name(SpinComponent c) {
    switch (c) {
        case SpinComponent::kX:
            return "x";
        case SpinComponent::kY:
            return "y";
        case SpinComponent::kZ:
            return "z";
        case SpinComponent::kZero:
            return "0";
    }
    return "?";
}

QuadOp schwinger_spin(std::pair<int, int> pair, SpinComponent component) {
    const auto [a, b] = pair;
    if (a == b) {
        throw ValidationError("spin pair (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                              ") must use two distinct modes");
    }
    const GaussRational half = GaussRational::frac(1, 2);
    QuadOp op;
    switch (component) {
        case SpinComponent::kX:
            op.add(Monomial::mixed(a, b), half);
            op.add(Monomial::mixed(b, a), half);
            break;
        case SpinComponent::kY:
            // (1/2i)(a^† b - a b^†) = -i/2 a^† b + i/2 b^† a
            op.add(Monomial::mixed(a, b), GaussRational(0, mpq_class(-1, 2)));
            op.add(Monomial::mixed(b, a), GaussRational(0, mpq_class(1, 2)));
            break;
        case SpinComponent::kZ:
            op.add(Monomial::mixed(a, a), half);
            op.add(Monomial::mixed(b, b), -half);
            break;
        case SpinComponent::kZero:
            op.add(Monomial::mixed(a, a), half);
            op.add(Monomial::mixed(b, b), half);
            break;
    }
    return op;
}

QuadOp number_op(int mode) {
    return QuadOp(Monomial::mixed(mode, mode), GaussRational(1));
}

namespace {

// sqrt2 * f expressed on ladder operators: coefficient of a_j is q_j - i p_j,
// of a_j^† is q_j + i p_j.
template <typename Real, typename Coeff>
std::vector<std::pair<Ladder, Coeff>> scaled_ladders(const BasicLinearForm<Real> &f) {
    std::vector<std::pair<Ladder, Coeff>> out;
    for (int j = 0; j < f.n_modes(); ++j) {
        if (f.q[j] == Real(0) && f.p[j] == Real(0)) {
            continue;
        }
        if constexpr (std::is_same_v<Coeff, GaussRational>) {
            out.push_back({{j, false}, GaussRational(f.q[j], -f.p[j])});
            out.push_back({{j, true}, GaussRational(f.q[j], f.p[j])});
        } else {
            out.push_back({{j, false}, Coeff(f.q[j], -f.p[j])});
            out.push_back({{j, true}, Coeff(f.q[j], f.p[j])});
        }
    }
    return out;
}

template <typename Real, typename Coeff>
BasicQuadOp<Coeff> symmetrized_product(const BasicLinearForm<Real> &f1, const BasicLinearForm<Real> &f2) {
    if (f1.n_modes() != f2.n_modes()) {
        throw std::invalid_argument("quad_product: forms act on different mode counts");
    }
    auto l1 = scaled_ladders<Real, Coeff>(f1);
    auto l2 = scaled_ladders<Real, Coeff>(f2);
    std::vector<RawTerm<Coeff>> raw;
    for (const auto &[x, cx] : l1) {
        for (const auto &[y, cy] : l2) {
            Coeff c = cx * cy;
            raw.push_back({c, {x, y}});
            raw.push_back({c, {y, x}});
        }
    }
    // (f1 f2 + f2 f1)/2 = (L1 L2 + L2 L1)/4 with L = sqrt2 f.
    BasicQuadOp<Coeff> out = normal_order(raw);
    if constexpr (std::is_same_v<Coeff, GaussRational>) {
        out *= GaussRational::frac(1, 4);
    } else {
        out *= Coeff(0.25);
    }
    return out;
}

}  // namespace

QuadOp quad_product(const LinearForm &f1, const LinearForm &f2) {
    return symmetrized_product<mpq_class, GaussRational>(f1, f2);
}

ApproxQuadOp quad_product(const ApproxLinearForm &f1, const ApproxLinearForm &f2) {
    return symmetrized_product<double, std::complex<double>>(f1, f2);
}

ApproxQuadOp to_approx(const QuadOp &op) {
    ApproxQuadOp out;
    for (const auto &[m, c] : op.terms()) {
        out.add(m, c.to_complex());
    }
    return out;
}

namespace {

const char *kind_name(Monomial::Kind k) {
    switch (k) {
        case Monomial::Kind::kUnit:
            return "unit";
        case Monomial::Kind::kMixed:
            return "mixed";
        case Monomial::Kind::kCreate2:
            return "create2";
        case Monomial::Kind::kAnnih2:
            return "annih2";
    }
    return "?";
}

}  // namespace

nlohmann::json quadop_to_json(const QuadOp &op) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[m, c] : op.terms()) {
        bool unit = m.kind == Monomial::Kind::kUnit;
        out.push_back({{"kind", kind_name(m.kind)},
                       {"i", unit ? 0 : m.i + 1},
                       {"j", unit ? 0 : m.j + 1},
                       {"re", rational_string(c.re)},
                       {"im", rational_string(c.im)}});
    }
    return out;
}

QuadOp quadop_from_json(const nlohmann::json &doc) {
    if (!doc.is_array()) {
        throw ParseError("operator document must be an array of term records");
    }
    QuadOp out;
    for (size_t k = 0; k < doc.size(); ++k) {
        const auto &rec = doc[k];
        std::string where = "term[" + std::to_string(k) + "]";
        try {
            std::string kind = rec.at("kind").get<std::string>();
            int i = rec.at("i").get<int>() - 1;
            int j = rec.at("j").get<int>() - 1;
            GaussRational c(parse_rational(rec.at("re").get<std::string>()),
                            parse_rational(rec.at("im").get<std::string>()));
            Monomial m;
            if (kind == "unit") {
                m = Monomial::unit();
            } else if (i < 0 || j < 0) {
                throw ValidationError(where + " has a non-positive mode index");
            } else if (kind == "mixed") {
                m = Monomial::mixed(i, j);
            } else if (kind == "create2") {
                m = Monomial::create2(i, j);
            } else if (kind == "annih2") {
                m = Monomial::annih2(i, j);
            } else {
                throw ParseError(where + " has unknown kind '" + kind + "'");
            }
            out.add(m, c);
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(where + ": " + e.what());
        } catch (const std::invalid_argument &e) {
            if (dynamic_cast<const ValidationError *>(&e)) {
                throw;
            }
            throw ParseError(where + ": " + e.what());
        }
    }
    return out;
}

}  // namespace schwinger
