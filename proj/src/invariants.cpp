#include "braidforge/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidforge {

std::vector<int> ComponentPartition::ids() const {
    std::vector<int> out;
    out.reserve(cycles.size());
    for (const auto& cycle : cycles) out.push_back(cycle.front());
    return out;
}

int ComponentPartition::id_of(int strand) const {
    for (const auto& cycle : cycles)
        if (std::find(cycle.begin(), cycle.end(), strand) != cycle.end()) return cycle.front();
    throw std::invalid_argument("id_of: strand " + std::to_string(strand) + " out of range");
}

ComponentPartition closure_components(const BraidWord& w) {
    ComponentPartition part;
    part.strands = w.strands();
    part.cycles = permutation_of(w).cycles();
    return part;
}

long long LinkingMatrix::pair(int id_i, int id_j) const {
    const auto at = [&](int id) {
        const auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end())
            throw std::invalid_argument("linking: unknown component id " + std::to_string(id));
        return static_cast<std::size_t>(it - ids.begin());
    };
    return lk[at(id_i)][at(id_j)];
}

std::vector<long long> LinkingMatrix::multiset() const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) out.push_back(lk[i][j]);
    std::sort(out.begin(), out.end());
    return out;
}

long long LinkingMatrix::min_offdiag() const {
    const std::vector<long long> values = multiset();
    if (values.empty()) throw std::logic_error("min_offdiag: fewer than two components");
    return values.front();
}

LinkingMatrix linking_matrix(const BraidWord& w) {
    const ComponentPartition part = closure_components(w);
    const int p = w.strands();
    std::vector<int> comp_index(p + 1, 0);
    for (int ci = 0; ci < part.count(); ++ci)
        for (int strand : part.cycles[ci]) comp_index[strand] = ci;

    std::vector<std::vector<long long>> raw(part.count(), std::vector<long long>(part.count(), 0));
    std::vector<int> strand_at(p);
    std::iota(strand_at.begin(), strand_at.end(), 1);
    for (int g : w.letters()) {
        const int i = std::abs(g);
        const int ca = comp_index[strand_at[i - 1]];
        const int cb = comp_index[strand_at[i]];
        if (ca != cb) {
            const int sign = g > 0 ? 1 : -1;
            raw[ca][cb] += sign;
            raw[cb][ca] += sign;
        }
        std::swap(strand_at[i - 1], strand_at[i]);
    }

    LinkingMatrix out;
    out.ids = part.ids();
    out.lk.assign(part.count(), std::vector<long long>(part.count(), 0));
    for (int i = 0; i < part.count(); ++i) {
        for (int j = i + 1; j < part.count(); ++j) {
            if (raw[i][j] % 2 != 0)
                throw std::logic_error("linking_matrix: odd raw crossing count between components " +
                                       std::to_string(out.ids[i]) + " and " + std::to_string(out.ids[j]));
            out.lk[i][j] = out.lk[j][i] = raw[i][j] / 2;
        }
    }
    return out;
}

long long euler_characteristic(const BraidWord& w) {
    if (!is_positive(w))
        throw std::invalid_argument("euler_characteristic: non-positive word");
    return static_cast<long long>(w.strands()) - w.length();
}

namespace {

// ---- reduced Burau product -------------------------------------------------
//
// (n-1)x(n-1) matrices over Z[t, t^-1]. Right-multiplying by the matrix of
// sigma_i^{+-1} changes only column i:
//   sigma_i:      col_i <- t*col_{i-1} - t*col_i + col_{i+1}
//   sigma_i^{-1}: col_i <- col_{i-1} - t^{-1}*col_i + t^{-1}*col_{i+1}
// (columns 0 and n are zero).

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix burau_product(const BraidWord& w) {
    const int m = w.strands() - 1;
    Matrix mat(m, std::vector<LaurentPoly>(m));
    for (int r = 0; r < m; ++r) mat[r][r] = LaurentPoly(1);
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    for (int g : w.letters()) {
        const int i = std::abs(g);
        for (int r = 0; r < m; ++r) {
            LaurentPoly next;
            if (g > 0) {
                if (i >= 2) next += t * mat[r][i - 2];
                next -= t * mat[r][i - 1];
                if (i < m) next += mat[r][i];
            } else {
                if (i >= 2) next += mat[r][i - 2];
                next -= tinv * mat[r][i - 1];
                if (i < m) next += tinv * mat[r][i];
            }
            mat[r][i - 1] = std::move(next);
        }
    }
    return mat;
}

// ---- det of a Laurent-entry matrix -----------------------------------------
//
// Evaluation / interpolation with CRT over word-size primes. Row content
// t^{m_r} is factored out first so entries live in Z[t]; the number of sample
// points comes from the row-degree bound and the prime count from the
// permanent bound on the coefficient 1-norms. Both bounds use the actual
// matrix, so typical inputs need a handful of primes.

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 2^64 with these witnesses
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_with_product_above(const BigInt& bound) {
    std::vector<std::uint64_t> primes;
    BigInt product = 1;
    std::uint64_t candidate = (1ull << 62) - 1;
    while (product <= bound) {
        while (!is_prime_u64(candidate)) --candidate;
        primes.push_back(candidate);
        product *= candidate;
        --candidate;
    }
    return primes;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return powmod(a % p, p - 2, p);
}

// Dense Z coefficients of one entry, reduced mod p (exponents 0..deg).
std::vector<std::uint64_t> entry_mod_p(const LaurentPoly& poly, std::uint64_t p) {
    if (poly.is_zero()) return {};
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(poly.max_exp()) + 1, 0);
    for (const auto& [e, c] : poly.terms()) {
        BigInt r = c % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        coeffs[static_cast<std::size_t>(e)] = r.convert_to<std::uint64_t>();
    }
    return coeffs;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& coeffs, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    return acc;
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const std::size_t m = a.size();
    std::uint64_t det = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = k;
        while (pivot < m && a[pivot][k] == 0) ++pivot;
        if (pivot == m) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, a[k][k], p);
        const std::uint64_t inv = inv_mod(a[k][k], p);
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i][k] == 0) continue;
            const std::uint64_t f = mulmod(a[i][k], inv, p);
            for (std::size_t j = k; j < m; ++j) {
                const std::uint64_t sub = mulmod(f, a[k][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
    }
    return det;
}

// Newton interpolation at nodes 0..deg; returns coefficient vector mod p.
std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& values,
                                           std::uint64_t p) {
    const std::size_t n = values.size();
    std::vector<std::uint64_t> dd = values;  // divided differences in place
    std::vector<std::uint64_t> inv(n, 1);
    for (std::size_t j = 1; j < n; ++j) inv[j] = inv_mod(j, p);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = mulmod((dd[i] + p - dd[i - 1]) % p, inv[j], p);

    std::vector<std::uint64_t> coeffs(n, 0), basis(n, 0);
    basis[0] = 1;
    std::size_t basis_deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d <= basis_deg; ++d)
            coeffs[d] = (coeffs[d] + mulmod(dd[i], basis[d], p)) % p;
        if (i + 1 < n) {
            // basis *= (x - i), high coefficient first so old values survive
            for (std::size_t d = basis_deg + 1;; --d) {
                const std::uint64_t lower = d > 0 ? basis[d - 1] : 0;
                const std::uint64_t cur = d <= basis_deg ? basis[d] : 0;
                basis[d] = (lower + p - mulmod(cur, i % p, p)) % p;
                if (d == 0) break;
            }
            ++basis_deg;
        }
    }
    return coeffs;
}

// det of (mat) with LaurentPoly entries, exact.
LaurentPoly laurent_det(const Matrix& mat) {
    const std::size_t m = mat.size();
    if (m == 0) return LaurentPoly(1);

    int shift_total = 0;
    Matrix rows = mat;
    for (std::size_t r = 0; r < m; ++r) {
        bool all_zero = true;
        int row_min = 0;
        for (const LaurentPoly& e : rows[r]) {
            if (e.is_zero()) continue;
            row_min = all_zero ? e.min_exp() : std::min(row_min, e.min_exp());
            all_zero = false;
        }
        if (all_zero) return LaurentPoly();
        if (row_min != 0) {
            for (LaurentPoly& e : rows[r]) e = e.shifted(-row_min);
            shift_total += row_min;
        }
    }

    int degree_bound = 0;
    BigInt norm_bound = 1;
    for (std::size_t r = 0; r < m; ++r) {
        int row_deg = 0;
        BigInt row_norm = 0;
        for (const LaurentPoly& e : rows[r]) {
            if (e.is_zero()) continue;
            row_deg = std::max(row_deg, e.max_exp());
            row_norm += e.one_norm();
        }
        degree_bound += row_deg;
        norm_bound *= row_norm;
    }

    const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
    const std::vector<std::uint64_t> primes = primes_with_product_above(2 * norm_bound);

    std::vector<std::vector<std::uint64_t>> coeffs_per_prime;
    coeffs_per_prime.reserve(primes.size());
    for (const std::uint64_t p : primes) {
        std::vector<std::vector<std::vector<std::uint64_t>>> dense(
            m, std::vector<std::vector<std::uint64_t>>(m));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) dense[r][c] = entry_mod_p(rows[r][c], p);

        std::vector<std::uint64_t> values(points);
        std::vector<std::vector<std::uint64_t>> at_x(m, std::vector<std::uint64_t>(m));
        for (std::size_t x = 0; x < points; ++x) {
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c) at_x[r][c] = eval_mod(dense[r][c], x, p);
            values[x] = det_mod(at_x, p);
        }
        coeffs_per_prime.push_back(interpolate_mod(values, p));
    }

    // CRT with balanced lift
    BigInt modulus = 1;
    for (std::uint64_t p : primes) modulus *= p;
    LaurentPoly det;
    for (std::size_t d = 0; d < points; ++d) {
        BigInt value = 0, partial = 1;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            const std::uint64_t p = primes[pi];
            // Garner step: value' = value + partial * ((residue - value) / partial mod p)
            BigInt diff = (BigInt(coeffs_per_prime[pi][d]) - value) % static_cast<long long>(p);
            if (diff < 0) diff += static_cast<long long>(p);
            const std::uint64_t partial_mod =
                (partial % static_cast<long long>(p)).convert_to<std::uint64_t>();
            const std::uint64_t step =
                mulmod(diff.convert_to<std::uint64_t>(), inv_mod(partial_mod, p), p);
            value += partial * step;
            partial *= p;
        }
        if (value * 2 > modulus) value -= modulus;
        if (value != 0) det += LaurentPoly::monomial(value, static_cast<int>(d));
    }
    return det.shifted(shift_total);
}

}  // namespace

LaurentPoly alexander_polynomial(const BraidWord& w) {
    const int n = w.strands();
    if (n < 2) throw std::invalid_argument("alexander_polynomial: needs at least 2 strands");

    Matrix mat = burau_product(w);
    for (int r = 0; r < n - 1; ++r) mat[r][r] -= LaurentPoly(1);

    const LaurentPoly det = laurent_det(mat);
    if (det.is_zero()) return LaurentPoly();

    const LaurentPoly t_minus_1 = LaurentPoly::monomial(1, 1) - LaurentPoly(1);
    const LaurentPoly tn_minus_1 = LaurentPoly::monomial(1, n) - LaurentPoly(1);
    return normalize_up_to_units((det * t_minus_1).exact_div(tn_minus_1));
}

InvariantBundle invariant_bundle(const BraidWord& w) {
    if (!is_positive(w))
        throw std::invalid_argument("invariant_bundle: non-positive word");
    InvariantBundle bundle;
    const ComponentPartition part = closure_components(w);
    bundle.component_count = part.count();
    bundle.euler_char = euler_characteristic(w);
    bundle.linking_multiset = linking_matrix(w).multiset();
    bundle.alexander = w.strands() == 1 ? LaurentPoly(1) : alexander_polynomial(w);
    return bundle;
}

bool bundles_match(const InvariantBundle& a, const InvariantBundle& b) {
    return a == b;
}

}  // namespace braidforge
