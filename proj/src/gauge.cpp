#include "opal/gauge.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace opal {

namespace {

// C(n + k, k) as an exact rational-free integer for n >= -k.
std::int64_t binom_shifted(std::int64_t s, unsigned i) {
    // C(s + i, i) = prod_{j=1..i} (s + j) / j
    mpz_class acc = 1;
    for (unsigned j = 1; j <= i; ++j) acc *= (s + j);
    for (unsigned j = 1; j <= i; ++j) acc /= j;
    return static_cast<std::int64_t>(acc.get_si());
}

}  // namespace

Staircase Staircase::of(std::size_t m, std::vector<MultiIndex> exponents) {
    std::vector<MultiIndex> minimal;
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    for (const auto& e : exponents) {
        bool dominated = false;
        for (const auto& kept : exponents) {
            if (kept != e && exp_divides(kept, e)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(e);
    }
    return Staircase{m, std::move(minimal)};
}

Staircase staircase_of(const GroebnerBasis& basis) {
    const std::size_t m = basis.spec()->num_derivations();
    std::vector<MultiIndex> exps;
    for (const auto& g : basis.elements()) exps.push_back(g.leading(basis.order()).first);
    return Staircase::of(m, std::move(exps));
}

std::int64_t hilbert_count(const Staircase& staircase, unsigned s) {
    std::int64_t count = 0;
    MultiIndex point(staircase.m, 0);
    auto shadowed = [&] {
        for (const auto& e : staircase.exponents)
            if (exp_divides(e, point)) return true;
        return false;
    };
    // walk all points of total degree <= s
    auto walk = [&](auto&& self, std::size_t slot, unsigned budget) -> void {
        if (slot + 1 == staircase.m || staircase.m == 0) {
            if (staircase.m == 0) {
                count += shadowed() ? 0 : 1;
                return;
            }
            for (unsigned v = 0; v <= budget; ++v) {
                point[slot] = v;
                if (!shadowed()) ++count;
            }
            point[slot] = 0;
            return;
        }
        for (unsigned v = 0; v <= budget; ++v) {
            point[slot] = v;
            self(self, slot + 1, budget - v);
        }
        point[slot] = 0;
    };
    if (staircase.m == 0) return 0;
    walk(walk, 0, s);
    return count;
}

std::int64_t NumericalPolynomial::evaluate(std::int64_t s) const {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < binomial_coefficients.size(); ++i)
        value += binomial_coefficients[i] * binom_shifted(s, static_cast<unsigned>(i));
    return value;
}

bool NumericalPolynomial::is_zero() const {
    for (auto a : binomial_coefficients)
        if (a != 0) return false;
    return true;
}

int NumericalPolynomial::degree() const {
    for (std::size_t i = binomial_coefficients.size(); i-- > 0;)
        if (binomial_coefficients[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string NumericalPolynomial::to_binomial_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = binomial_coefficients.size(); i-- > 0;) {
        std::int64_t a = binomial_coefficients[i];
        if (a == 0) continue;
        if (first)
            out << (a < 0 ? "-" : "");
        else
            out << (a < 0 ? " - " : " + ");
        first = false;
        std::int64_t mag = a < 0 ? -a : a;
        if (i == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << "*";
        out << "C(s+" << i << "," << i << ")";
    }
    return out.str();
}

std::string NumericalPolynomial::to_monomial_string() const {
    // expand sum a_i C(s+i, i) into rational monomial coefficients
    std::size_t n = binomial_coefficients.size();
    std::vector<Rational> coeffs(std::max<std::size_t>(n, 1), Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (binomial_coefficients[i] == 0) continue;
        // C(s+i, i) = prod_{j=1..i} (s + j) / i!
        std::vector<Rational> poly = {Rational(1)};
        for (unsigned j = 1; j <= i; ++j) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] += poly[k] * Rational(j);
            }
            poly = std::move(next);
        }
        Rational factor(binomial_coefficients[i]);
        for (unsigned j = 2; j <= i; ++j) factor /= j;
        for (std::size_t k = 0; k < poly.size(); ++k) coeffs[k] += poly[k] * factor;
    }
    bool all_zero = true;
    for (const auto& c : coeffs) all_zero = all_zero && c == 0;
    if (all_zero) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        Rational c = coeffs[k];
        if (c == 0) continue;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (c < 0) c = -c;
        if (k == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1) out << c.get_str() << "*";
        out << "s";
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

namespace {

// Degree sum of the componentwise max over all staircase subsets is the
// stabilization bound; the bounding-box corner dominates it.
unsigned stabilization_bound(const Staircase& staircase) {
    unsigned bound = 0;
    for (std::size_t v = 0; v < staircase.m; ++v) {
        unsigned best = 0;
        for (const auto& e : staircase.exponents) best = std::max(best, e[v]);
        bound += best;
    }
    return bound;
}

// Exact solve of the (m+1)x(m+1) system sum_i a_i C(s0+r+i, i) = h(s0+r).
std::vector<Rational> fit_binomial(const std::vector<std::int64_t>& values, unsigned s0,
                                   std::size_t m) {
    const std::size_t n = m + 1;
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            mat[r][i] = Rational(binom_shifted(static_cast<std::int64_t>(s0) + r,
                                               static_cast<unsigned>(i)));
        mat[r][n] = Rational(values[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && mat[pivot][col] == 0) ++pivot;
        assert(pivot < n);
        std::swap(mat[col], mat[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || mat[row][col] == 0) continue;
            Rational factor = mat[row][col] / mat[col][col];
            for (std::size_t k = col; k <= n; ++k) mat[row][k] -= factor * mat[col][k];
        }
    }
    std::vector<Rational> solution(n);
    for (std::size_t i = 0; i < n; ++i) solution[i] = mat[i][n] / mat[i][i];
    return solution;
}

NumericalPolynomial fit_and_verify(const Staircase& staircase) {
    const std::size_t m = staircase.m;
    const unsigned bound = stabilization_bound(staircase);
    // verify through the window where the count is certainly polynomial
    const unsigned horizon = bound + 2 * static_cast<unsigned>(m) + 3;
    std::vector<std::int64_t> counts(horizon + 1);
    for (unsigned s = 0; s <= horizon; ++s) counts[s] = hilbert_count(staircase, s);

    for (unsigned s0 = 0; s0 + m <= horizon; ++s0) {
        std::vector<std::int64_t> window(counts.begin() + s0, counts.begin() + s0 + m + 1);
        std::vector<Rational> fit = fit_binomial(window, s0, m);
        bool integral = true;
        for (const auto& a : fit) integral = integral && a.get_den() == 1;
        if (!integral) continue;
        NumericalPolynomial candidate;
        candidate.valid_from = s0;
        for (const auto& a : fit)
            candidate.binomial_coefficients.push_back(
                static_cast<std::int64_t>(mpz_class(a.get_num()).get_si()));
        bool ok = true;
        for (unsigned s = s0; s <= horizon && ok; ++s)
            ok = candidate.evaluate(s) == counts[s];
        if (ok) return candidate;
    }
    // unreachable: beyond the bound the count is exactly polynomial
    assert(false);
    return {};
}

unsigned scan_valid_from(const Staircase& staircase, const NumericalPolynomial& omega,
                         unsigned upper) {
    unsigned valid = upper;
    while (valid > 0 && omega.evaluate(valid - 1) == hilbert_count(staircase, valid - 1))
        --valid;
    return valid;
}

}  // namespace

NumericalPolynomial dimension_polynomial(const Staircase& staircase) {
    return fit_and_verify(staircase);
}

NumericalPolynomial dimension_polynomial_m2(const Staircase& staircase) {
    if (staircase.m != 2) throw WrongArity("closed form requires exactly two derivations");
    NumericalPolynomial omega;
    if (staircase.exponents.empty()) {
        // zero ideal: all of C(s+2, 2)
        omega.binomial_coefficients = {0, 0, 1};
        omega.valid_from = 0;
        return omega;
    }
    std::vector<MultiIndex> sorted = staircase.exponents;
    std::sort(sorted.begin(), sorted.end());  // i ascending, hence j descending
    const std::int64_t i1 = sorted.front()[0];
    const std::int64_t jt = sorted.back()[1];
    const std::int64_t d = i1 + jt;

    std::int64_t w = 0;
    for (std::int64_t i = i1; i < static_cast<std::int64_t>(sorted.back()[0]); ++i) {
        for (std::int64_t j = jt; j < static_cast<std::int64_t>(sorted.front()[1]); ++j) {
            bool shadowed = false;
            for (const auto& e : sorted)
                if (e[0] <= i && e[1] <= j) {
                    shadowed = true;
                    break;
                }
            if (!shadowed) ++w;
        }
    }

    // d*s + (3d - d^2)/2 + |W| in the basis {1, C(s+1,1)}
    omega.binomial_coefficients = {(d - d * d) / 2 + w, d, 0};
    if (omega.is_zero()) {
        omega.valid_from = 0;
        return omega;
    }
    unsigned bound = stabilization_bound(staircase);
    omega.valid_from = scan_valid_from(staircase, omega, bound);
    return omega;
}

Gauge gauge_of(const NumericalPolynomial& omega) {
    int degree = omega.degree();
    if (degree < 0) return Gauge{-1, 0};
    return Gauge{degree, omega.binomial_coefficients[static_cast<std::size_t>(degree)]};
}

std::string Gauge::to_string() const {
    return "(" + std::to_string(tau) + ", " + std::to_string(a_tau) + ")";
}

Gauge gauge_of_basis(const GroebnerBasis& basis) {
    return gauge_of(dimension_polynomial(staircase_of(basis)));
}

Gauge gauge_of_ideal(const LeftIdeal& ideal, const TermOrder& ord,
                     const BuchbergerOptions& options) {
    return gauge_of_basis(buchberger(ideal, ord, options));
}

}  // namespace opal
