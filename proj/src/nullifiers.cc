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


#include "schwinger/nullifiers.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <Eigen/Dense>

#include "schwinger/heisenberg.h"

namespace schwinger {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

std::map<Monomial, size_t> basis_index(int n_modes) {
    std::map<Monomial, size_t> idx;
    const auto basis = quadratic_basis(n_modes);
    for (size_t k = 0; k < basis.size(); ++k) {
        idx.emplace(basis[k], k);
    }
    return idx;
}

constexpr SpinComponent kLabelOrder[] = {SpinComponent::kZero, SpinComponent::kZ, SpinComponent::kX,
                                         SpinComponent::kY};

std::string pair_label(std::pair<int, int> p) {
    return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

// Reversing a pair and shifting its new first mode by pi maps
// (J0, Jz, Jx, Jy) coordinates to (J0, -Jz, -Jx, Jy).
template <typename T>
void canonicalize_coords(std::vector<T> &coords, size_t n_pairs) {
    for (size_t p = 1; p < n_pairs; p += 2) {
        coords[4 * p + 1] = -coords[4 * p + 1];
        coords[4 * p + 2] = -coords[4 * p + 2];
    }
}

ExactVector unit_vector(size_t dim, size_t k) {
    ExactVector v(dim);
    v[k] = GaussRational(1);
    return v;
}

CMatrix to_cmatrix(const std::vector<ExactVector> &columns, size_t rows) {
    CMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        for (size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r].to_complex();
        }
    }
    return m;
}

// Orthonormal basis of the column space, singular values below tol dropped.
CMatrix orthonormal_columns(const CMatrix &m, double tol) {
    if (m.cols() == 0) {
        return CMatrix(m.rows(), 0);
    }
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
    const auto &s = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > tol) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

// Numeric reduced row echelon form with unit pivots.
std::vector<std::vector<std::complex<double>>> numeric_rref(CMatrix rows, double tol) {
    Eigen::Index lead = 0;
    const Eigen::Index n_rows = rows.rows();
    for (Eigen::Index c = 0; c < rows.cols() && lead < n_rows; ++c) {
        Eigen::Index best = lead;
        for (Eigen::Index r = lead + 1; r < n_rows; ++r) {
            if (std::abs(rows(r, c)) > std::abs(rows(best, c))) {
                best = r;
            }
        }
        if (std::abs(rows(best, c)) <= tol) {
            continue;
        }
        rows.row(lead).swap(rows.row(best));
        rows.row(lead) /= rows(lead, c);
        for (Eigen::Index r = 0; r < n_rows; ++r) {
            if (r != lead) {
                rows.row(r) -= rows(r, c) * rows.row(lead);
            }
        }
        ++lead;
    }
    std::vector<std::vector<std::complex<double>>> out;
    for (Eigen::Index r = 0; r < lead; ++r) {
        std::vector<std::complex<double>> v(rows.cols());
        for (Eigen::Index c = 0; c < rows.cols(); ++c) {
            double re = rows(r, c).real();
            double im = rows(r, c).imag();
            v[c] = {std::abs(re) < 1e-12 ? 0.0 : re, std::abs(im) < 1e-12 ? 0.0 : im};
        }
        out.push_back(std::move(v));
    }
    return out;
}

ApproxQuadOp hermitian_part(const ApproxQuadOp &op) {
    if (op.is_hermitian()) {
        return op;
    }
    return (op + op.adjoint()) * std::complex<double>(0.5);
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

template <typename T, typename IsZero, typename Format>
std::string join_terms(const std::vector<T> &coords, const SpinPairing &pairing, IsZero is_zero, Format format) {
    const auto labels = spin_labels(pairing);
    std::string out;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (is_zero(coords[k])) {
            continue;
        }
        auto [negative, text] = format(coords[k]);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k + 1 == coords.size()) {
            out += text.empty() ? "1" : text;
        } else {
            out += text.empty() ? labels[k] : text + " " + labels[k];
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ExactVector quadratic_coords(const QuadOp &op, int n_modes) {
    if (op.max_mode() >= n_modes) {
        throw ValidationError("operator acts on mode " + std::to_string(op.max_mode() + 1) + " but only " +
                              std::to_string(n_modes) + " modes are available");
    }
    const auto idx = basis_index(n_modes);
    ExactVector v(idx.size());
    for (const auto &[m, c] : op.terms()) {
        v[idx.at(m)] = c;
    }
    return v;
}

QuadOp from_quadratic_coords(const ExactVector &coords, int n_modes) {
    const auto basis = quadratic_basis(n_modes);
    if (coords.size() != basis.size()) {
        throw std::invalid_argument("coordinate vector does not match the quadratic basis size");
    }
    QuadOp op;
    for (size_t k = 0; k < basis.size(); ++k) {
        op.add(basis[k], coords[k]);
    }
    return op;
}

OperatorBasis ad_kernel(const QuadOp &k, int n_modes) {
    if (n_modes < 0) {
        n_modes = k.max_mode() + 1;
    }
    const auto basis = quadratic_basis(n_modes);
    const size_t dim = basis.size();
    // Columns: [K, X] for every non-identity monomial X.
    std::vector<ExactVector> columns;
    columns.reserve(dim - 1);
    for (size_t c = 0; c + 1 < dim; ++c) {
        columns.push_back(quadratic_coords(commutator(k, QuadOp(basis[c], GaussRational(1))), n_modes));
    }
    OperatorBasis out;
    out.trivial_unit = true;
    for (auto &v : exact_kernel(ExactMatrix::from_columns(columns, dim))) {
        v.emplace_back();
        out.elements.push_back(from_quadratic_coords(v, n_modes));
    }
    return out;
}

std::vector<std::string> spin_labels(const SpinPairing &pairing) {
    std::vector<std::string> out;
    for (const auto &p : pairing.pairs()) {
        for (SpinComponent c : kLabelOrder) {
            out.push_back("J" + std::string(component_name(c)) + pair_label(p));
        }
    }
    out.emplace_back("1");
    return out;
}

OperatorBasis spin_span(const SpinPairing &pairing) {
    OperatorBasis out;
    for (const auto &p : pairing.pairs()) {
        for (SpinComponent c : kLabelOrder) {
            out.elements.push_back(schwinger_spin(p, c));
        }
    }
    out.elements.push_back(QuadOp::identity());
    return out;
}

QuadOp from_spin_coords(const ExactVector &coords, const SpinPairing &pairing) {
    const auto span = spin_span(pairing);
    if (coords.size() != span.elements.size()) {
        throw std::invalid_argument("spin coordinate vector does not match the pairing");
    }
    QuadOp op;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) {
            op += span.elements[k] * coords[k];
        }
    }
    return op;
}

namespace {

std::vector<ExactVector> kernel_with_unit(const HGraph &g) {
    const int n = g.n_modes();
    std::vector<ExactVector> out;
    for (const auto &op : ad_kernel(hamiltonian_generator(g), n).elements) {
        out.push_back(quadratic_coords(op, n));
    }
    out.push_back(quadratic_coords(QuadOp::identity(), n));
    return out;
}

std::vector<ExactVector> spin_coords_basis(const SpinPairing &pairing, int n_modes) {
    std::vector<ExactVector> out;
    for (const auto &op : spin_span(pairing).elements) {
        out.push_back(quadratic_coords(op, n_modes));
    }
    return out;
}

}  // namespace

std::vector<ExactNullifier> exact_spin_nullifiers(const HGraph &g, const SpinPairing &pairing, bool canonical) {
    const int n = g.n_modes();
    pairing.check_fits(n);
    const auto basis = quadratic_basis(n);
    const Intersection meet = exact_intersection(kernel_with_unit(g), spin_coords_basis(pairing, n));
    if (meet.vectors.empty()) {
        return {};
    }
    // Vacuum condition: no identity and no pair-creation component.
    std::vector<size_t> constrained;
    for (size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].kind == Monomial::Kind::kUnit || basis[k].kind == Monomial::Kind::kCreate2) {
            constrained.push_back(k);
        }
    }
    ExactMatrix conditions(constrained.size(), meet.vectors.size());
    for (size_t r = 0; r < constrained.size(); ++r) {
        for (size_t c = 0; c < meet.vectors.size(); ++c) {
            conditions(r, c) = meet.vectors[c][constrained[r]];
        }
    }
    const size_t n_spin = meet.coords_in_b.front().size();
    std::vector<ExactVector> rows;
    for (const auto &t : exact_kernel(conditions)) {
        ExactVector v(n_spin);
        for (size_t c = 0; c < t.size(); ++c) {
            if (t[c].is_zero()) {
                continue;
            }
            for (size_t k = 0; k < n_spin; ++k) {
                v[k] += t[c] * meet.coords_in_b[c][k];
            }
        }
        if (canonical) {
            canonicalize_coords(v, pairing.size());
        }
        rows.push_back(std::move(v));
    }
    if (rows.empty()) {
        return {};
    }
    const SpinPairing used = canonical ? canonical_relabeling(pairing).pairing : pairing;
    const RowEchelon ech = reduced_row_echelon(ExactMatrix::from_rows(rows, n_spin));
    std::vector<ExactNullifier> out;
    for (size_t r = 0; r < ech.reduced.rows(); ++r) {
        ExactVector v = ech.reduced.row(r);
        out.push_back({from_spin_coords(v, used), std::move(v)});
    }
    return out;
}

std::vector<GradedElement> graded_span_intersection(const std::vector<std::pair<ApproxQuadOp, double>> &candidates,
                                                   const std::vector<QuadOp> &span, int n_modes) {
    if (candidates.empty() || span.empty()) {
        return {};
    }
    const auto idx = basis_index(n_modes);
    const size_t dim = idx.size();
    std::vector<CVector> coords;
    std::vector<double> levels;
    for (const auto &[op, rate] : candidates) {
        if (op.max_mode() >= n_modes) {
            throw ValidationError("candidate operator acts outside the mode range");
        }
        CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
        for (const auto &[m, c] : op.terms()) {
            v(static_cast<Eigen::Index>(idx.at(m))) = c;
        }
        coords.push_back(std::move(v));
        const double r = rate;
        if (std::none_of(levels.begin(), levels.end(), [&](double l) { return std::abs(l - r) < 1e-9; })) {
            levels.push_back(rate);
        }
    }
    std::sort(levels.rbegin(), levels.rend());

    std::vector<ExactVector> span_coords;
    for (const auto &op : span) {
        span_coords.push_back(quadratic_coords(op, n_modes));
    }
    const CMatrix spin = to_cmatrix(span_coords, dim);
    const CMatrix us = orthonormal_columns(spin, kSpanResidual);
    const auto spin_solver = spin.colPivHouseholderQr();

    std::vector<GradedElement> out;
    CMatrix found(static_cast<Eigen::Index>(dim), 0);
    for (double level : levels) {
        std::vector<const CVector *> cols;
        for (size_t k = 0; k < candidates.size(); ++k) {
            if (candidates[k].second > level - 1e-9) {
                cols.push_back(&coords[k]);
            }
        }
        CMatrix pm(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) {
            pm.col(static_cast<Eigen::Index>(c)) = *cols[c];
        }
        const CMatrix up = orthonormal_columns(pm, kSpanResidual);
        if (up.cols() == 0) {
            continue;
        }
        // Directions of span(candidates) with no component outside the span.
        const CMatrix residual = up - us * (us.adjoint() * up);
        Eigen::JacobiSVD<CMatrix> svd(residual, Eigen::ComputeFullV);
        std::vector<Eigen::Index> null_dirs;
        for (Eigen::Index k = 0; k < up.cols(); ++k) {
            const double s = k < svd.singularValues().size() ? svd.singularValues()(k) : 0.0;
            if (s < kSpanResidual) {
                null_dirs.push_back(k);
            }
        }
        if (null_dirs.empty()) {
            continue;
        }
        CMatrix meet(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(null_dirs.size()));
        for (size_t k = 0; k < null_dirs.size(); ++k) {
            meet.col(static_cast<Eigen::Index>(k)) = up * svd.matrixV().col(null_dirs[k]);
        }
        const CMatrix fresh = orthonormal_columns(meet - found * (found.adjoint() * meet), kSpanResidual);
        if (fresh.cols() == 0) {
            continue;
        }
        CMatrix coord_rows(fresh.cols(), spin.cols());
        for (Eigen::Index k = 0; k < fresh.cols(); ++k) {
            coord_rows.row(k) = spin_solver.solve(CVector(fresh.col(k))).transpose();
        }
        for (auto &c : numeric_rref(coord_rows, kSpanResidual)) {
            out.push_back({std::move(c), level});
        }
        CMatrix grown(static_cast<Eigen::Index>(dim), found.cols() + fresh.cols());
        grown << found, fresh;
        found = orthonormal_columns(grown, kSpanResidual);
    }
    return out;
}

std::vector<AsymptoticNullifier> asymptotic_spin_nullifiers(const HGraph &g, const SpinPairing &pairing,
                                                            bool canonical) {
    const int n = g.n_modes();
    pairing.check_fits(n);
    std::vector<CvNullifier> squeezed;
    for (auto &f : cv_nullifiers(diagonalize(g))) {
        if (f.kind == CvNullifier::Kind::kSqueezed) {
            squeezed.push_back(std::move(f));
        }
    }
    std::vector<std::pair<ApproxQuadOp, double>> products;
    for (size_t a = 0; a < squeezed.size(); ++a) {
        for (size_t b = a; b < squeezed.size(); ++b) {
            products.emplace_back(quad_product(squeezed[a].form, squeezed[b].form),
                                  squeezed[a].rate + squeezed[b].rate);
        }
    }
    const SpinPairing used = canonical ? canonical_relabeling(pairing).pairing : pairing;
    const OperatorBasis used_span = spin_span(used);
    std::vector<AsymptoticNullifier> out;
    for (auto &elem : graded_span_intersection(products, spin_span(pairing).elements, n)) {
        if (canonical) {
            canonicalize_coords(elem.coords, pairing.size());
        }
        AsymptoticNullifier a;
        a.rate = elem.rate;
        for (size_t k = 0; k < elem.coords.size(); ++k) {
            if (elem.coords[k] != std::complex<double>(0.0, 0.0)) {
                a.op += to_approx(used_span.elements[k]) * elem.coords[k];
            }
        }
        a.spin = std::move(elem.coords);
        out.push_back(std::move(a));
    }
    return out;
}

NullifierSet find_nullifiers(const HGraph &g, const SpinPairing &pairing, bool canonical) {
    NullifierSet set;
    set.pairing = canonical ? canonical_relabeling(pairing).pairing : pairing;
    set.exact = exact_spin_nullifiers(g, pairing, canonical);
    set.asymptotic = asymptotic_spin_nullifiers(g, pairing, canonical);
    return set;
}

OperatorBasis number_conserving_constants(const HGraph &g) {
    const int n = g.n_modes();
    const auto basis = quadratic_basis(n);
    std::vector<ExactVector> mixed;
    for (size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].kind == Monomial::Kind::kMixed) {
            mixed.push_back(unit_vector(basis.size(), k));
        }
    }
    OperatorBasis out;
    out.trivial_unit = true;
    for (const auto &v : exact_intersection(kernel_with_unit(g), mixed).vectors) {
        out.elements.push_back(from_quadratic_coords(v, n));
    }
    return out;
}

size_t span_dimension(const std::vector<QuadOp> &ops, int n_modes) {
    if (ops.empty()) {
        return 0;
    }
    std::vector<ExactVector> rows;
    for (const auto &op : ops) {
        rows.push_back(quadratic_coords(op, n_modes));
    }
    return exact_rank(ExactMatrix::from_rows(rows, rows.front().size()));
}

std::vector<std::vector<VerificationRow>> verify_nullifiers(const std::vector<ApproxQuadOp> &ops, const HGraph &g,
                                                            const std::vector<double> &r_grid, int cutoff,
                                                            bool raise_cutoff) {
    std::vector<ApproxQuadOp> herm;
    for (const auto &op : ops) {
        if (op.max_mode() >= g.n_modes()) {
            throw ValidationError("nullifier acts on mode " + std::to_string(op.max_mode() + 1) +
                                  " outside the graph");
        }
        herm.push_back(hermitian_part(op));
    }
    std::vector<std::vector<VerificationRow>> out(ops.size());
    for (double r : r_grid) {
        int used = cutoff;
        FockVector state = evolve_vacuum(g, r, used);
        while (raise_cutoff && state.norm_deficit > kDeficitWarning && used + 2 <= cutoff + kMaxCutoffRaise) {
            used += 2;
            state = evolve_vacuum(g, r, used);
        }
        if (state.norm_deficit > kDeficitWarning) {
            throw TruncationError("cutoff " + std::to_string(used) + " too small at r = " + format_real(r) +
                                  ": norm deficit " + format_real(state.norm_deficit) + " exceeds " +
                                  format_real(kDeficitWarning));
        }
        for (size_t k = 0; k < herm.size(); ++k) {
            const Moments m = expectation_variance(herm[k], state);
            out[k].push_back({r, m.expectation, m.variance, state.norm_deficit, used});
        }
    }
    return out;
}

std::vector<VerificationRow> verify_nullifier(const ApproxQuadOp &op, const HGraph &g,
                                              const std::vector<double> &r_grid, int cutoff) {
    return verify_nullifiers({op}, g, r_grid, cutoff).front();
}

std::vector<VerificationRow> verify_nullifier(const QuadOp &op, const HGraph &g, const std::vector<double> &r_grid,
                                              int cutoff) {
    return verify_nullifier(to_approx(op), g, r_grid, cutoff);
}

std::string spin_expression(const ExactVector &coords, const SpinPairing &pairing) {
    return join_terms(
        coords, pairing, [](const GaussRational &c) { return c.is_zero(); },
        [](const GaussRational &c) -> std::pair<bool, std::string> {
            if (c.is_real()) {
                const bool neg = sgn(c.re) < 0;
                const mpq_class mag = neg ? mpq_class(-c.re) : c.re;
                return {neg, mag == 1 ? "" : mag.get_str()};
            }
            return {false, c.str()};
        });
}

std::string spin_expression(const std::vector<std::complex<double>> &coords, const SpinPairing &pairing) {
    return join_terms(
        coords, pairing, [](const std::complex<double> &c) { return std::abs(c) < 1e-12; },
        [](const std::complex<double> &c) -> std::pair<bool, std::string> {
            if (std::abs(c.imag()) < 1e-12) {
                const double mag = std::abs(c.real());
                return {c.real() < 0, std::abs(mag - 1.0) < 1e-12 ? "" : format_real(mag)};
            }
            return {false, "(" + format_real(c.real()) + (c.imag() < 0 ? "" : "+") + format_real(c.imag()) + "i)"};
        });
}

nlohmann::json verification_to_json(const std::vector<VerificationRow> &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &row : rows) {
        out.push_back({{"r", row.r},
                       {"expectation_re", row.expectation.real()},
                       {"expectation_im", row.expectation.imag()},
                       {"variance", row.variance},
                       {"norm_deficit", row.norm_deficit},
                       {"cutoff", row.cutoff}});
    }
    return out;
}

nlohmann::json nullifier_report(const NullifierSet &set, const std::vector<std::vector<VerificationRow>> &exact_checks,
                                const std::vector<std::vector<VerificationRow>> &asymptotic_checks) {
    const auto labels = spin_labels(set.pairing);
    nlohmann::json pairing = nlohmann::json::array();
    for (const auto &[a, b] : set.pairing.pairs()) {
        pairing.push_back({a + 1, b + 1});
    }
    nlohmann::json exact = nlohmann::json::array();
    for (size_t k = 0; k < set.exact.size(); ++k) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (size_t c = 0; c < labels.size(); ++c) {
            if (!set.exact[k].spin[c].is_zero()) {
                coeffs[labels[c]] = set.exact[k].spin[c].str();
            }
        }
        exact.push_back({{"kind", "exact"},
                         {"rate", 0.0},
                         {"expression", spin_expression(set.exact[k].spin, set.pairing)},
                         {"spin_coefficients", std::move(coeffs)},
                         {"verification", k < exact_checks.size() ? verification_to_json(exact_checks[k])
                                                                   : nlohmann::json::array()}});
    }
    nlohmann::json asym = nlohmann::json::array();
    for (size_t k = 0; k < set.asymptotic.size(); ++k) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (size_t c = 0; c < labels.size(); ++c) {
            const auto v = set.asymptotic[k].spin[c];
            if (v != std::complex<double>(0.0, 0.0)) {
                coeffs[labels[c]] = {{"re", v.real()}, {"im", v.imag()}};
            }
        }
        asym.push_back({{"kind", "asymptotic"},
                        {"rate", set.asymptotic[k].rate},
                        {"expression", spin_expression(set.asymptotic[k].spin, set.pairing)},
                        {"spin_coefficients", std::move(coeffs)},
                        {"verification", k < asymptotic_checks.size() ? verification_to_json(asymptotic_checks[k])
                                                                       : nlohmann::json::array()}});
    }
    return {{"pairing", std::move(pairing)},
            {"labels", labels},
            {"exact", std::move(exact)},
            {"asymptotic", std::move(asym)}};
}

}  // namespace schwinger
