#include "nrt/codes.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "nrt/errors.hpp"

namespace nrt {

namespace {

// q^e if it stays within `cap`, nullopt otherwise.
std::optional<uint64_t> pow_within(uint64_t q, int e, uint64_t cap) {
    uint64_t acc = 1;
    for (int i = 0; i < e; ++i) {
        if (acc > cap / q) return std::nullopt;
        acc *= q;
        if (acc > cap) return std::nullopt;
    }
    return acc;
}

void check_same_space(const CodeMatrix& a, const CodeMatrix& b) {
    if (a.n() != b.n() || a.m() != b.m())
        throw DimensionMismatch("matrices of different shape");
    if (!same_field(a.field(), b.field()))
        throw MixedFields("matrices over different fields");
}

}  // namespace

std::vector<FieldElement> CodeMatrix::row(int i) const {
    std::vector<FieldElement> r;
    r.reserve(m_);
    for (int j = 0; j < m_; ++j) r.push_back(at(i, j));
    return r;
}

Monomial ShapeVector::exponents() const {
    Monomial mono(e.size() + 1, 0);
    mono[0] = e0;
    for (size_t j = 0; j < e.size(); ++j) mono[j + 1] = e[j];
    return mono;
}

int rho_row(const std::vector<FieldElement>& v) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
        if (!v[j].is_zero()) return j + 1;
    return 0;
}

int rho_matrix(const CodeMatrix& a) {
    int total = 0;
    for (int i = 0; i < a.n(); ++i) {
        for (int j = a.m() - 1; j >= 0; --j) {
            if (a.idx_at(i, j) != 0) {
                total += j + 1;
                break;
            }
        }
    }
    return total;
}

ShapeVector shape_of(const CodeMatrix& a) {
    ShapeVector s;
    s.e.assign(a.m(), 0);
    for (int i = 0; i < a.n(); ++i) {
        int w = 0;
        for (int j = a.m() - 1; j >= 0; --j) {
            if (a.idx_at(i, j) != 0) {
                w = j + 1;
                break;
            }
        }
        if (w == 0)
            ++s.e0;
        else
            ++s.e[w - 1];
    }
    return s;
}

FieldElement nrt_inner_product(const CodeMatrix& a, const CodeMatrix& b) {
    check_same_space(a, b);
    const Field& f = a.field();
    uint32_t acc = 0;
    int m = a.m();
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < m; ++j)
            acc = f.add(acc, f.mul(a.idx_at(i, j), b.idx_at(i, m - 1 - j)));
    return f.element(acc);
}

LinearCode LinearCode::from_generators(FieldPtr field, int n, int m,
                                       const std::vector<std::vector<uint32_t>>& rows) {
    const int cols = n * m;
    if (rows.empty()) return zero_code(std::move(field), n, m);
    GFMatrix g(field, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw DimensionMismatch("generator row length != n*m");
        for (int j = 0; j < cols; ++j) {
            if (rows[i][j] >= field->q()) throw DegreeMismatch("element index out of range");
            g.at(static_cast<int>(i), j) = rows[i][j];
        }
    }
    auto red = gf_rref(g);
    GFMatrix gen(field, red.rank, cols);
    for (int i = 0; i < red.rank; ++i)
        for (int j = 0; j < cols; ++j) gen.at(i, j) = red.mat.at(i, j);
    return LinearCode(std::move(field), n, m, std::move(gen), red.rank);
}

LinearCode LinearCode::zero_code(FieldPtr field, int n, int m) {
    GFMatrix gen(field, 0, n * m);
    return LinearCode(std::move(field), n, m, std::move(gen), 0);
}

CodeMatrix LinearCode::codeword(uint64_t message_index) const {
    CodeMatrix w(field_, n_, m_);
    const Field& f = *field_;
    const uint64_t q = f.q();
    // big-endian digits of the message in canonical element order
    for (int t = r_ - 1; t >= 0; --t) {
        auto digit = static_cast<uint32_t>(message_index % q);
        message_index /= q;
        if (digit == 0) continue;
        for (int pos = 0; pos < n_ * m_; ++pos) {
            uint32_t g = gen_.at(t, pos);
            if (g == 0) continue;
            auto& cell = w.idx_at(pos / m_, pos % m_);
            cell = f.add(cell, f.mul(digit, g));
        }
    }
    return w;
}

uint64_t LinearCode::size() const {
    auto s = pow_within(field_->q(), r_, UINT64_MAX);
    if (!s) throw DegreeMismatch("code size exceeds 64 bits");
    return *s;
}

LinearCode dual_code(const LinearCode& c) {
    const int cols = c.n() * c.m();
    if (c.dim() == 0) {
        // everything pairs to zero with the zero code
        std::vector<std::vector<uint32_t>> rows;
        for (int i = 0; i < cols; ++i) {
            std::vector<uint32_t> unit(cols, 0);
            unit[i] = c.field().one_index();
            rows.push_back(std::move(unit));
        }
        return LinearCode::from_generators(c.field_ptr(), c.n(), c.m(), rows);
    }
    // <A,B> = flat(A) . rev(flat(B)) where rev reverses each length-m row
    // block, so the dual is the kernel of the row-reversed generator matrix.
    GFMatrix constraints(c.field_ptr(), c.dim(), cols);
    const int m = c.m();
    for (int t = 0; t < c.dim(); ++t)
        for (int i = 0; i < c.n(); ++i)
            for (int j = 0; j < m; ++j)
                constraints.at(t, i * m + j) = c.generators().at(t, i * m + (m - 1 - j));
    auto basis = gf_kernel(constraints);
    return LinearCode::from_generators(c.field_ptr(), c.n(), c.m(), basis);
}

bool is_self_dual(const LinearCode& c) {
    if (2 * c.dim() != c.n() * c.m()) return false;
    return dual_code(c) == c;
}

namespace {

// One worker's share of the message space, tallied by shape.
void tally_range(const LinearCode& c, uint64_t lo, uint64_t hi,
                 std::map<Monomial, uint64_t>& out) {
    const Field& f = c.field();
    const uint64_t q = f.q();
    const int r = c.dim();
    const int n = c.n(), m = c.m();
    const GFMatrix& gen = c.generators();

    std::vector<uint32_t> msg(r, 0);
    uint64_t rem = lo;
    for (int t = r - 1; t >= 0; --t) {
        msg[t] = static_cast<uint32_t>(rem % q);
        rem /= q;
    }
    std::vector<uint32_t> word(static_cast<size_t>(n) * m);
    Monomial expo(m + 1);
    for (uint64_t idx = lo; idx < hi; ++idx) {
        std::fill(word.begin(), word.end(), 0u);
        for (int t = 0; t < r; ++t) {
            if (msg[t] == 0) continue;
            for (int pos = 0; pos < n * m; ++pos) {
                uint32_t g = gen.at(t, pos);
                if (g != 0) word[pos] = f.add(word[pos], f.mul(msg[t], g));
            }
        }
        std::fill(expo.begin(), expo.end(), 0);
        for (int i = 0; i < n; ++i) {
            int w = 0;
            for (int j = m - 1; j >= 0; --j) {
                if (word[static_cast<size_t>(i) * m + j] != 0) {
                    w = j + 1;
                    break;
                }
            }
            ++expo[w];
        }
        ++out[expo];
        // odometer step
        for (int t = r - 1; t >= 0; --t) {
            if (++msg[t] < q) break;
            msg[t] = 0;
        }
    }
}

}  // namespace

MultiPoly shape_enumerator(const LinearCode& c, uint64_t budget, int threads) {
    auto total = pow_within(c.field().q(), c.dim(), budget);
    if (!total)
        throw BudgetExceeded("q^dim exceeds the enumeration budget");

    std::map<Monomial, uint64_t> tally;
    if (threads <= 1 || *total < 1024) {
        tally_range(c, 0, *total, tally);
    } else {
        int workers = std::min<int>(threads, 64);
        std::vector<std::map<Monomial, uint64_t>> parts(workers);
        std::vector<std::thread> pool;
        uint64_t chunk = *total / workers + 1;
        for (int w = 0; w < workers; ++w) {
            uint64_t lo = std::min<uint64_t>(*total, w * chunk);
            uint64_t hi = std::min<uint64_t>(*total, lo + chunk);
            pool.emplace_back(tally_range, std::cref(c), lo, hi, std::ref(parts[w]));
        }
        for (auto& t : pool) t.join();
        for (auto& part : parts)
            for (auto& [mono, count] : part) tally[mono] += count;
    }

    MultiPoly h(c.m() + 1);
    for (const auto& [mono, count] : tally) h.add_term(mono, Rational(count));
    return h;
}

namespace {

// Lexicographic r-subsets of {0..cols-1}.
std::vector<std::vector<int>> combinations(int cols, int r) {
    std::vector<std::vector<int>> out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    if (r > cols) return out;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == cols - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// All RREF generator matrices with the given pivot columns, in canonical
// element order of the free entries; calls sink(rows) for each.
template <class Sink>
void emit_rref_forms(const FieldPtr& field, int cols, const std::vector<int>& pivots,
                     Sink&& sink) {
    const int r = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    // free coordinates: to the right of each row's pivot, skipping pivot cols
    std::vector<std::pair<int, int>> free_pos;
    for (int t = 0; t < r; ++t)
        for (int ccol = pivots[t] + 1; ccol < cols; ++ccol)
            if (!is_pivot[ccol]) free_pos.emplace_back(t, ccol);

    std::vector<std::vector<uint32_t>> rows(r, std::vector<uint32_t>(cols, 0));
    for (int t = 0; t < r; ++t) rows[t][pivots[t]] = field->one_index();

    std::vector<uint32_t> dial(free_pos.size(), 0);
    const uint32_t q = field->q();
    while (true) {
        for (size_t i = 0; i < free_pos.size(); ++i)
            rows[free_pos[i].first][free_pos[i].second] = dial[i];
        sink(rows);
        size_t i = free_pos.size();
        while (i > 0 && ++dial[i - 1] == q) dial[--i] = 0;
        if (i == 0) break;
    }
}

bool rows_self_orthogonal(const FieldPtr& field, int n, int m,
                          const std::vector<std::vector<uint32_t>>& rows) {
    const Field& f = *field;
    for (size_t s = 0; s < rows.size(); ++s) {
        for (size_t t = s; t < rows.size(); ++t) {
            uint32_t acc = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j)
                    acc = f.add(acc, f.mul(rows[s][static_cast<size_t>(i) * m + j],
                                           rows[t][static_cast<size_t>(i) * m + (m - 1 - j)]));
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<LinearCode> enumerate_codes(const FieldPtr& field, int n, int m, int r) {
    const int cols = n * m;
    if (r < 0 || r > cols) throw DimensionMismatch("code dimension out of range");
    std::vector<LinearCode> out;
    for (const auto& pivots : combinations(cols, r)) {
        emit_rref_forms(field, cols, pivots, [&](const std::vector<std::vector<uint32_t>>& rows) {
            out.push_back(LinearCode::from_generators(field, n, m, rows));
        });
    }
    return out;
}

std::vector<LinearCode> enumerate_self_dual_codes(const FieldPtr& field, int n, int m,
                                                  uint64_t budget, int threads) {
    const int cols = n * m;
    if (cols % 2 != 0) throw OddAmbient("self-dual codes need n*m even");
    if (!pow_within(field->q(), cols, budget))
        throw BudgetExceeded("q^(nm) exceeds the enumeration budget");
    const int r = cols / 2;
    auto pivot_sets = combinations(cols, r);

    auto scan = [&](size_t lo, size_t hi, std::vector<LinearCode>& found) {
        for (size_t k = lo; k < hi; ++k) {
            emit_rref_forms(field, cols, pivot_sets[k],
                            [&](const std::vector<std::vector<uint32_t>>& rows) {
                                if (rows_self_orthogonal(field, n, m, rows))
                                    found.push_back(
                                        LinearCode::from_generators(field, n, m, rows));
                            });
        }
    };

    std::vector<LinearCode> out;
    if (threads <= 1 || pivot_sets.size() < 2) {
        scan(0, pivot_sets.size(), out);
    } else {
        int workers = std::min<int>({threads, 64, static_cast<int>(pivot_sets.size())});
        std::vector<std::vector<LinearCode>> parts(workers);
        std::vector<std::thread> pool;
        size_t chunk = pivot_sets.size() / workers + 1;
        for (int w = 0; w < workers; ++w) {
            size_t lo = std::min(pivot_sets.size(), w * chunk);
            size_t hi = std::min(pivot_sets.size(), lo + chunk);
            pool.emplace_back(scan, lo, hi, std::ref(parts[w]));
        }
        for (auto& t : pool) t.join();
        for (auto& part : parts)
            for (auto& code : part) out.push_back(std::move(code));
    }
    return out;
}

}  // namespace nrt
