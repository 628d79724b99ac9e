#include "gt/linalg.hpp"

#include <stdexcept>

namespace gt {

namespace {

void make_primitive(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (sgn(row.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y on sorted sparse rows
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            mpz_class v = a * x[i].second - b * y[j].second;
            if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

RatRow subtract_scaled(const RatRow& x, const mpq_class& f, const IntRow& y) {
    RatRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i]);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -f * mpq_class(y[j].second));
            ++j;
        } else {
            mpq_class v = x[i].second - f * mpq_class(y[j].second);
            if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

IntRow to_primitive_int_row(const RatRow& row) {
    mpz_class l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (sgn(v) == 0) continue;
        mpz_class n = v.get_num() * (l / v.get_den());
        out.emplace_back(c, std::move(n));
    }
    make_primitive(out);
    return out;
}

IntRow to_primitive_int_row(const std::map<int, mpq_class>& row) {
    RatRow r(row.begin(), row.end());
    return to_primitive_int_row(r);
}

bool Echelon::insert(IntRow row) {
    make_primitive(row);
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(row.front().first, std::move(row));
            return true;
        }
        const IntRow& p = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        mpz_class a = p.front().second / g;
        mpz_class b = row.front().second / g;
        row = combine(a, row, b, p);
        make_primitive(row);
    }
    return false;
}

RatRow Echelon::reduce(const RatRow& v) const {
    RatRow cur = v;
    std::size_t pos = 0;
    while (pos < cur.size()) {
        int col = cur[pos].first;
        auto it = pivots_.find(col);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        mpq_class f = cur[pos].second / mpq_class(it->second.front().second);
        cur = subtract_scaled(cur, f, it->second);
        // entries before pos are untouched: pivot rows only have columns >= their pivot
    }
    return cur;
}

std::vector<int> Echelon::free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < columns_; ++c)
        if (!pivots_.count(c)) out.push_back(c);
    return out;
}

std::vector<std::vector<mpq_class>> Echelon::nullspace() const {
    // reduced echelon form over Q
    std::map<int, std::map<int, mpq_class>> rref;
    for (const auto& [piv, row] : pivots_) {
        auto& r = rref[piv];
        mpq_class lead(row.front().second);
        for (const auto& [c, v] : row) r[c] = mpq_class(v) / lead;
    }
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        int piv = it->first;
        const auto& prow = it->second;
        for (auto& [other, r] : rref) {
            if (other == piv) continue;
            auto f = r.find(piv);
            if (f == r.end()) continue;
            mpq_class factor = f->second;
            for (const auto& [c, v] : prow) {
                mpq_class nv = r[c] - factor * v;
                if (sgn(nv) == 0)
                    r.erase(c);
                else
                    r[c] = nv;
            }
        }
    }
    std::vector<std::vector<mpq_class>> basis;
    for (int fcol : free_columns()) {
        std::vector<mpq_class> x(columns_, 0);
        x[fcol] = 1;
        for (const auto& [piv, r] : rref) {
            auto f = r.find(fcol);
            if (f != r.end()) x[piv] = -f->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank_of(const std::vector<RatRow>& rows, int columns) {
    Echelon e(columns);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace gt
