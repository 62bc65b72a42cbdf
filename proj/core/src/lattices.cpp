#include "chowkit/lattices.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "chowkit/errors.hpp"

namespace chowkit {

namespace {

using Matrix = std::vector<std::vector<Int>>;

void swap_rows(Matrix& m, std::size_t i, std::size_t j) {
    if (i != j) std::swap(m[i], m[j]);
}

void add_row_multiple(Matrix& m, std::size_t dst, std::size_t src,
                      const Int& factor) {
    for (std::size_t c = 0; c < m[dst].size(); ++c)
        m[dst][c] += factor * m[src][c];
}

// floor division, so remainders land in [0, |b|)
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

std::vector<std::vector<Int>> hermite_normal_form(Matrix rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols)
            throw precondition_error("ragged matrix");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        // Euclid on the column entries below pivot_row until one survives.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[r][col]) < abs(rows[best][col]))
                    best = r;
            }
            if (best == rows.size()) break; // column is zero below the pivot
            swap_rows(rows, pivot_row, best);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                const Int q = floor_div(rows[r][col], rows[pivot_row][col]);
                add_row_multiple(rows, r, pivot_row, -q);
                if (rows[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (auto& v : rows[pivot_row]) v = -v;
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < pivot_row; ++r) {
            const Int q = floor_div(rows[r][col], rows[pivot_row][col]);
            if (q != 0) add_row_multiple(rows, r, pivot_row, -q);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::vector<Int> smith_normal_form_diagonal(Matrix m) {
    if (m.empty() || m[0].empty()) return {};
    const std::size_t nrows = m.size(), ncols = m[0].size();
    for (const auto& r : m)
        if (r.size() != ncols) throw precondition_error("ragged matrix");

    auto col_op = [&](std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t r = 0; r < nrows; ++r) m[r][dst] += factor * m[r][src];
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < nrows; ++r) std::swap(m[r][i], m[r][j]);
    };

    std::vector<Int> diag;
    std::size_t k = 0;
    while (k < nrows && k < ncols) {
        // Move a nonzero entry of the trailing block to (k, k).
        std::size_t pr = nrows, pc = ncols;
        for (std::size_t r = k; r < nrows && pr == nrows; ++r)
            for (std::size_t c = k; c < ncols; ++c)
                if (m[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == nrows) break;
        swap_rows(m, k, pr);
        swap_cols(k, pc);

        while (true) {
            // Column phase: Euclid on column k until it is zero below (k,k).
            while (true) {
                std::size_t best = k;
                for (std::size_t r = k + 1; r < nrows; ++r)
                    if (m[r][k] != 0 &&
                        (m[k][k] == 0 || abs(m[r][k]) < abs(m[k][k])))
                        best = r;
                swap_rows(m, k, best);
                bool clear = true;
                for (std::size_t r = k + 1; r < nrows; ++r) {
                    if (m[r][k] == 0) continue;
                    add_row_multiple(m, r, k, -floor_div(m[r][k], m[k][k]));
                    if (m[r][k] != 0) clear = false;
                }
                if (clear) break;
            }
            // Row phase: Euclid on row k until it is zero right of (k,k).
            while (true) {
                std::size_t best = k;
                for (std::size_t c = k + 1; c < ncols; ++c)
                    if (m[k][c] != 0 &&
                        (m[k][k] == 0 || abs(m[k][c]) < abs(m[k][k])))
                        best = c;
                swap_cols(k, best);
                bool clear = true;
                for (std::size_t c = k + 1; c < ncols; ++c) {
                    if (m[k][c] == 0) continue;
                    col_op(c, k, -floor_div(m[k][c], m[k][k]));
                    if (m[k][c] != 0) clear = false;
                }
                if (clear) break;
            }
            // Column operations may have re-dirtied the column.
            bool column_clear = true;
            for (std::size_t r = k + 1; r < nrows; ++r)
                if (m[r][k] != 0) column_clear = false;
            if (column_clear) break;
        }
        diag.push_back(abs(m[k][k]));
        ++k;
    }

    // Enforce the divisibility chain d_1 | d_2 | ...
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[i] == 0) std::swap(diag[i], diag[j]);
            if (diag[j] == 0) continue;
            const Int g = boost::multiprecision::gcd(diag[i], diag[j]);
            if (g == diag[i]) continue;
            const Int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

Int IntegerLattice::index() const {
    if (rank() != ambient_rank) return 0;
    Int det = 1; // HNF is upper triangular along its pivots
    for (int i = 0; i < rank(); ++i) {
        Int pivot = 0;
        for (const Int& v : basis[i])
            if (v != 0) {
                pivot = v;
                break;
            }
        det *= pivot;
    }
    return abs(det);
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_rank)
        throw precondition_error("vector has the wrong dimension");
    std::vector<Int> rest = v;
    for (const auto& row : basis) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        if (rest[pivot] % row[pivot] != 0) {
            // The pivot columns of later rows are zero here, so no later row
            // can fix a non-divisible entry.
            return false;
        }
        const Int q = rest[pivot] / row[pivot];
        for (std::size_t c = 0; c < row.size(); ++c) rest[c] -= q * row[c];
    }
    return std::all_of(rest.begin(), rest.end(),
                       [](const Int& x) { return x == 0; });
}

nlohmann::json IntegerLattice::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : basis) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    return nlohmann::json{{"ambient_rank", ambient_rank}, {"basis", rows}};
}

IntegerLattice congruence_sublattice(const std::vector<Int>& coeffs,
                                     const Int& modulus) {
    if (coeffs.empty()) throw precondition_error("empty coefficient vector");
    if (modulus < 1) throw precondition_error("modulus must be >= 1");
    const int n = static_cast<int>(coeffs.size());

    // Solutions of coeffs . v == 0 (mod modulus): the kernel of the 1 x (n+1)
    // matrix [coeffs | modulus], projected away from the last coordinate.
    // Column-reduce [coeffs | modulus] with a unimodular transform tracked in
    // U; kernel columns are those transformed to zero.
    std::vector<Int> a = coeffs;
    a.push_back(modulus);
    Matrix U(n + 1, std::vector<Int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) U[i][i] = 1;

    // Gcd sweep: keep the pivot in position 0.
    while (true) {
        int best = -1;
        for (int i = 1; i <= n; ++i)
            if (a[i] != 0 && (best == -1 || abs(a[i]) < abs(a[best]))) best = i;
        if (best == -1) break;
        if (a[0] == 0 || abs(a[best]) < abs(a[0])) {
            std::swap(a[0], a[best]);
            std::swap(U[0], U[best]); // U rows track column ops transposed
        }
        for (int i = 1; i <= n; ++i) {
            if (a[i] == 0) continue;
            const Int q = floor_div(a[i], a[0]);
            a[i] -= q * a[0];
            for (int c = 0; c <= n; ++c) U[i][c] -= q * U[0][c];
        }
        bool done = true;
        for (int i = 1; i <= n; ++i)
            if (a[i] != 0) done = false;
        if (done) break;
    }

    Matrix rows;
    for (int i = 0; i <= n; ++i) {
        if (a[i] != 0) continue;
        std::vector<Int> v(U[i].begin(), U[i].begin() + n);
        rows.push_back(std::move(v));
    }
    IntegerLattice out;
    out.ambient_rank = n;
    out.basis = hermite_normal_form(std::move(rows));
    if (out.rank() != n)
        throw integrity_error("congruence sublattice is not full rank");
    return out;
}

std::vector<Int> smith_invariants(const IntegerLattice& sub, int ambient_rank) {
    if (sub.ambient_rank != ambient_rank)
        throw precondition_error("ambient rank mismatch");
    std::vector<Int> diag = smith_normal_form_diagonal(sub.basis);
    std::vector<Int> out;
    for (const Int& d : diag)
        if (d != 0) out.push_back(d);
    while (static_cast<int>(out.size()) < ambient_rank) out.push_back(0);
    return out;
}

LinearizationExponents linearization_exponents(const Int& d, const Int& m,
                                               const Int& n) {
    if (!(m > 0 && m < n))
        throw precondition_error("require 0 < m < n");
    if (d < 1) throw precondition_error("require d >= 1");
    const Int md = m * d;
    const Int l = boost::multiprecision::lcm(Int(n + 1), md);
    LinearizationExponents out{l / md, l / (n + 1)};
    if (out.k * md != out.p * (n + 1))
        throw integrity_error("linearization exponents are inconsistent");
    return out;
}

} // namespace chowkit
