#include "cts/linalg.hpp"

#include <algorithm>

namespace cts {

void vec_add_scaled(SparseVec& dst, const SparseVec& src, Scalar c) {
    if (c.is_zero()) return;
    for (const auto& [i, v] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            dst.emplace(i, v * c);
        } else {
            it->second += v * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

SparseVec vec_scaled(const SparseVec& v, const Scalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    for (const auto& [i, x] : v) r.emplace(i, x * c);
    return r;
}

bool vec_is_zero(const SparseVec& v) { return v.empty(); }

const Scalar& ExactMatrix::at(int r, int c) const {
    static const Scalar kZero;
    const SparseVec& row = data_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? kZero : it->second;
}

void ExactMatrix::set(int r, int c, const Scalar& v) {
    SparseVec& row = data_[static_cast<std::size_t>(r)];
    if (v.is_zero())
        row.erase(c);
    else
        row[c] = v;
}

void ExactMatrix::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    SparseVec& row = data_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

void ExactMatrix::append_row(const SparseVec& v) {
    data_.push_back(v);
    ++rows_;
}

int ExactMatrix::nnz() const {
    int n = 0;
    for (const auto& row : data_) n += static_cast<int>(row.size());
    return n;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<std::size_t>(r)]) t.set(c, r, v);
    return t;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (const auto& [k, xv] : x.row(i))
            for (const auto& [j, yv] : y.row(k)) r.add(i, j, xv * yv);
    return r;
}

RrefResult rref(const ExactMatrix& m) {
    std::vector<SparseVec> work;
    work.reserve(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

    RrefResult res;
    res.reduced = ExactMatrix(0, m.cols());
    std::vector<SparseVec> done;
    std::vector<int> done_pivot;

    for (int c = 0; c < m.cols(); ++c) {
        std::size_t pick = work.size();
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (!work[r].empty() && work[r].begin()->first == c) {
                pick = r;
                break;
            }
        }
        if (pick == work.size()) continue;
        SparseVec pivot_row = std::move(work[pick]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
        Scalar inv = pivot_row.begin()->second.inv();
        pivot_row = vec_scaled(pivot_row, inv);
        for (auto& row : work) {
            auto it = row.find(c);
            if (it != row.end()) vec_add_scaled(row, pivot_row, it->second);
        }
        for (std::size_t i = 0; i < done.size(); ++i) {
            auto it = done[i].find(c);
            if (it != done[i].end()) vec_add_scaled(done[i], pivot_row, it->second);
        }
        done.push_back(std::move(pivot_row));
        done_pivot.push_back(c);
    }
    for (const auto& row : done) res.reduced.append_row(row);
    res.pivot_cols = done_pivot;
    res.rank = static_cast<int>(done.size());
    return res;
}

ExactMatrix kernel(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    ExactMatrix k(0, m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        SparseVec v;
        v[c] = Scalar::one();
        for (int r = 0; r < rr.reduced.rows(); ++r) {
            const Scalar& entry = rr.reduced.at(r, c);
            if (!entry.is_zero()) v[rr.pivot_cols[static_cast<std::size_t>(r)]] = entry;  // char 2: no sign
        }
        k.append_row(v);
    }
    return k;
}

ExactMatrix image(const ExactMatrix& m) {
    RrefResult rr = rref(m);
    ExactMatrix t = m.transposed();
    ExactMatrix im(0, m.rows());
    for (int c : rr.pivot_cols) im.append_row(t.row(c));
    return im;
}

ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& rhs) {
    // Row-reduce [m | rhs] simultaneously.
    ExactMatrix aug(m.rows(), m.cols() + rhs.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        for (const auto& [c, v] : rhs.row(r)) aug.set(r, m.cols() + c, v);
    }
    RrefResult rr = rref(aug);
    ExactMatrix x(m.cols(), rhs.cols());
    for (int r = 0; r < rr.reduced.rows(); ++r) {
        int p = rr.pivot_cols[static_cast<std::size_t>(r)];
        if (p >= m.cols()) throw NoSolution("inconsistent linear system");
        for (const auto& [c, v] : rr.reduced.row(r))
            if (c >= m.cols()) x.set(p, c - m.cols(), v);
    }
    return x;
}

ExactMatrix quotient_basis(const ExactMatrix& span, int ambient_dim) {
    RrefResult rr = rref(span);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_dim), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    ExactMatrix q(0, ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        SparseVec v;
        v[c] = Scalar::one();
        q.append_row(v);
    }
    return q;
}

ExactMatrix intersect(const ExactMatrix& x, const ExactMatrix& y) {
    // Kernel of [x^T | y^T] gives coefficient pairs (u, w) with u x = w y.
    ExactMatrix stacked(x.cols(), x.rows() + y.rows());
    for (int r = 0; r < x.rows(); ++r)
        for (const auto& [c, v] : x.row(r)) stacked.set(c, r, v);
    for (int r = 0; r < y.rows(); ++r)
        for (const auto& [c, v] : y.row(r)) stacked.set(c, x.rows() + r, v);
    ExactMatrix k = kernel(stacked);
    ExactMatrix result(0, x.cols());
    for (int r = 0; r < k.rows(); ++r) {
        SparseVec combo;
        for (const auto& [i, coef] : k.row(r)) {
            if (i < x.rows()) vec_add_scaled(combo, x.row(i), coef);
        }
        if (!vec_is_zero(combo)) result.append_row(combo);
    }
    return rref(result).reduced;
}

SparseVec EchelonSpan::reduce(const SparseVec& v) const {
    SparseVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto it = r.find(pivots_[i]);
        if (it != r.end()) vec_add_scaled(r, rows_[i], it->second);
    }
    return r;
}

bool EchelonSpan::insert(const SparseVec& v) {
    SparseVec r = v;
    SparseVec coords;
    coords[static_cast<int>(rows_.size())] = Scalar::one();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto it = r.find(pivots_[i]);
        if (it != r.end()) {
            Scalar c = it->second;
            vec_add_scaled(r, rows_[i], c);
            vec_add_scaled(coords, history_[i], c);
        }
    }
    if (r.empty()) return false;
    Scalar inv = r.begin()->second.inv();
    int pivot = r.begin()->first;
    r = vec_scaled(r, inv);
    coords = vec_scaled(coords, inv);
    // Back-substitute into existing rows to keep the reduced form.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto it = rows_[i].find(pivot);
        if (it != rows_[i].end()) {
            Scalar c = it->second;
            vec_add_scaled(rows_[i], r, c);
            vec_add_scaled(history_[i], coords, c);
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    history_.push_back(std::move(coords));
    return true;
}

std::optional<SparseVec> EchelonSpan::coordinates(const SparseVec& v) const {
    SparseVec r = v;
    SparseVec coords;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto it = r.find(pivots_[i]);
        if (it != r.end()) {
            Scalar c = it->second;
            vec_add_scaled(r, rows_[i], c);
            SparseVec h = history_[i];
            vec_add_scaled(coords, h, c);
        }
    }
    if (!r.empty()) return std::nullopt;
    return coords;
}

ExactMatrix EchelonSpan::to_matrix() const {
    ExactMatrix m(0, ambient_);
    for (const auto& r : rows_) m.append_row(r);
    return m;
}

}  // namespace cts
