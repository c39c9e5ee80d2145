#include "nilgen/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "nilgen/errors.hpp"

namespace nilgen::detail {

TriangularLattice::TriangularLattice(const std::vector<Integer>& diagonal) {
    const std::size_t l = diagonal.size();
    rows_.assign(l, Row(l, Integer(0)));
    for (std::size_t i = 0; i < l; ++i) {
        if (diagonal[i] <= 0) throw invalid_input_error("lattice diagonal must be positive");
        rows_[i][i] = diagonal[i];
    }
}

void TriangularLattice::insert(Row v) {
    const std::size_t l = rows_.size();
    if (v.size() != l) throw invalid_input_error("lattice insert: dimension mismatch");
    for (std::size_t i = 0; i < l; ++i) {
        if (sgn(v[i]) == 0) continue;
        Integer& pivot = rows_[i][i];
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[i].get_mpz_t(), pivot.get_mpz_t());
        if (sgn(r) == 0) {
            // v is reducible at this column without touching the basis.
            for (std::size_t j = i; j < l; ++j) v[j] -= q * rows_[i][j];
            continue;
        }
        // Replace row i by the gcd combination, transform v to kill column i.
        Integer g, a, b;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(),
                   pivot.get_mpz_t(), v[i].get_mpz_t());
        const Integer row_scale = pivot / g;
        const Integer v_scale = v[i] / g;
        for (std::size_t j = i; j < l; ++j) {
            Integer new_row = a * rows_[i][j] + b * v[j];
            Integer new_v = row_scale * v[j] - v_scale * rows_[i][j];
            rows_[i][j] = std::move(new_row);
            v[j] = std::move(new_v);
        }
    }
}

Integer TriangularLattice::diagonal_product() const {
    Integer out = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) out *= rows_[i][i];
    return out;
}

void TriangularLattice::normalize() {
    const std::size_t l = rows_.size();
    for (std::size_t i = 0; i < l; ++i) {
        const Integer& pivot = rows_[i][i];
        for (std::size_t j = 0; j < i; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows_[j][i].get_mpz_t(), pivot.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t c = i; c < l; ++c) rows_[j][c] -= q * rows_[i][c];
        }
    }
}

bool TriangularLattice::contains(Row v) const {
    const std::size_t l = rows_.size();
    if (v.size() != l) throw invalid_input_error("lattice membership: dimension mismatch");
    for (std::size_t i = 0; i < l; ++i) {
        if (sgn(v[i]) == 0) continue;
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[i].get_mpz_t(), rows_[i][i].get_mpz_t());
        if (sgn(r) != 0) return false;
        for (std::size_t j = i; j < l; ++j) v[j] -= q * rows_[i][j];
    }
    return true;
}

Row TriangularLattice::solve(Row v) const {
    const std::size_t l = rows_.size();
    Row coeffs(l, Integer(0));
    for (std::size_t i = 0; i < l; ++i) {
        if (sgn(v[i]) == 0) continue;
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[i].get_mpz_t(), rows_[i][i].get_mpz_t());
        if (sgn(r) != 0) throw std::logic_error("TriangularLattice::solve on a non-member");
        for (std::size_t j = i; j < l; ++j) v[j] -= q * rows_[i][j];
        coeffs[i] = q;
    }
    return coeffs;
}

Mat left_kernel(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    const std::size_t cols = m[0].size();
    Mat work = m;
    Mat transform(n, Row(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) transform[i][i] = 1;

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t pivot_row = rank;
        while (pivot_row < n && sgn(work[pivot_row][c]) == 0) ++pivot_row;
        if (pivot_row == n) continue;
        std::swap(work[pivot_row], work[rank]);
        std::swap(transform[pivot_row], transform[rank]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            while (sgn(work[i][c]) != 0) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), work[i][c].get_mpz_t(), work[rank][c].get_mpz_t());
                if (sgn(q) != 0) {
                    for (std::size_t j = 0; j < cols; ++j) work[i][j] -= q * work[rank][j];
                    for (std::size_t j = 0; j < n; ++j) transform[i][j] -= q * transform[rank][j];
                }
                if (sgn(work[i][c]) != 0) {
                    std::swap(work[i], work[rank]);
                    std::swap(transform[i], transform[rank]);
                }
            }
        }
        ++rank;
    }
    return Mat(transform.begin() + static_cast<std::ptrdiff_t>(rank), transform.end());
}

namespace {

void swap_columns(Mat& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Integer> smith_diagonal(Mat m) {
    const std::size_t n = m.size();
    const std::size_t cols = n == 0 ? 0 : m[0].size();
    const std::size_t steps = std::min(n, cols);
    std::vector<Integer> diag;

    for (std::size_t t = 0; t < steps; ++t) {
        // Locate any nonzero entry in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < n && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (sgn(m[i][j]) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        std::swap(m[pi], m[t]);
        swap_columns(m, pj, t);

        for (;;) {
            // Clear column t with row operations.
            for (std::size_t i = t + 1; i < n; ++i) {
                while (sgn(m[i][t]) != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                    if (sgn(q) != 0)
                        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (sgn(m[i][t]) != 0) std::swap(m[i], m[t]);
                }
            }
            // Clear row t with column operations; may refill the column.
            bool column_dirty = false;
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (sgn(m[t][j]) != 0) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                    if (sgn(q) != 0)
                        for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                    if (sgn(m[t][j]) != 0) {
                        swap_columns(m, j, t);
                        column_dirty = true;
                    }
                }
            }
            if (column_dirty) continue;
            // Pivot must divide every remaining entry for true invariant
            // factors; fold a violating row in and redo the elimination.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        diag.push_back(abs(m[t][t]));
    }
    diag.resize(steps, Integer(0));
    return diag;
}

}  // namespace nilgen::detail
