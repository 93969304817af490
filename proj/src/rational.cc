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

#include "schwinger/rational.h"

#include <stdexcept>

namespace schwinger {

GaussRational GaussRational::inverse() const {
    mpq_class norm = re * re + im * im;
    if (sgn(norm) == 0) {
        throw std::domain_error("division by zero Gaussian rational");
    }
    return {re / norm, -im / norm};
}

GaussRational &GaussRational::operator+=(const GaussRational &other) {
    re += other.re;
    im += other.im;
    return *this;
}

GaussRational &GaussRational::operator-=(const GaussRational &other) {
    re -= other.re;
    im -= other.im;
    return *this;
}

GaussRational &GaussRational::operator*=(const GaussRational &other) {
    if (sgn(im) == 0 && sgn(other.im) == 0) {
        re *= other.re;
        return *this;
    }
    mpq_class r = re * other.re - im * other.im;
    mpq_class m = re * other.im + im * other.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
}

GaussRational &GaussRational::operator/=(const GaussRational &other) {
    if (sgn(other.im) == 0) {
        if (sgn(other.re) == 0) {
            throw std::domain_error("division by zero Gaussian rational");
        }
        re /= other.re;
        im /= other.re;
        return *this;
    }
    return *this *= other.inverse();
}

GaussRational operator+(GaussRational a, const GaussRational &b) {
    return a += b;
}
GaussRational operator-(GaussRational a, const GaussRational &b) {
    return a -= b;
}
GaussRational operator*(GaussRational a, const GaussRational &b) {
    return a *= b;
}
GaussRational operator/(GaussRational a, const GaussRational &b) {
    return a /= b;
}

std::string GaussRational::str() const {
    if (sgn(im) == 0) {
        return re.get_str();
    }
    if (sgn(re) == 0) {
        return im.get_str() + "i";
    }
    return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i)";
}

mpq_class parse_rational(const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational string");
    }
    mpq_class value;
    if (value.set_str(text, 10) != 0 || sgn(value.get_den()) == 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    value.canonicalize();
    return value;
}

std::string rational_string(const mpq_class &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace schwinger
