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

#ifndef SCHWINGER_RATIONAL_H
#define SCHWINGER_RATIONAL_H

#include <complex>
#include <string>

#include <gmpxx.h>

namespace schwinger {

/// Exact element of Q(i): re + i*im with arbitrary-precision rational parts.
struct GaussRational {
    mpq_class re;
    mpq_class im;

    GaussRational() : re(0), im(0) {
    }
    GaussRational(long value) : re(value), im(0) {  // NOLINT(google-explicit-constructor)
    }
    GaussRational(mpq_class real, mpq_class imag = 0) : re(std::move(real)), im(std::move(imag)) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussRational i() {
        return {0, 1};
    }
    static GaussRational frac(long num, long den) {
        return {mpq_class(num, den)};
    }

    bool is_zero() const {
        return sgn(re) == 0 && sgn(im) == 0;
    }
    bool is_real() const {
        return sgn(im) == 0;
    }

    GaussRational conj() const {
        return {re, -im};
    }
    GaussRational inverse() const;

    GaussRational &operator+=(const GaussRational &other);
    GaussRational &operator-=(const GaussRational &other);
    GaussRational &operator*=(const GaussRational &other);
    GaussRational &operator/=(const GaussRational &other);

    GaussRational operator-() const {
        return {-re, -im};
    }

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }

    bool operator==(const GaussRational &other) const {
        return re == other.re && im == other.im;
    }
    bool operator!=(const GaussRational &other) const {
        return !(*this == other);
    }

    std::string str() const;
};

GaussRational operator+(GaussRational a, const GaussRational &b);
GaussRational operator-(GaussRational a, const GaussRational &b);
GaussRational operator*(GaussRational a, const GaussRational &b);
GaussRational operator/(GaussRational a, const GaussRational &b);

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
mpq_class parse_rational(const std::string &text);

/// Serializes as "p/q" (always with an explicit denominator).
std::string rational_string(const mpq_class &value);

}  // namespace schwinger

#endif
