#include "hypermorse/linalg.hpp"

#include "hypermorse/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hypermorse {

namespace {

using Column = std::vector<Scalar>;

void check_stop(const std::stop_token& stop) {
    if (stop.stop_requested()) throw Cancelled();
}

// a := a*s + b*t for whole columns
void combine(const Ring& ring, Column& a, const Scalar& s, const Column& b, const Scalar& t) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0) {
            if (s != 1) a[i] = ring.mul(a[i], s);
            continue;
        }
        a[i] = ring.normalize(a[i] * s + b[i] * t);
    }
}

// Two-column unimodular step: afterwards ck[r] = gcd(ck[r], cj[r]) and cj[r] = 0.
void gcd_step(const Ring& ring, Column& ck, Column& cj, Column& tk, Column& tj, std::size_t r) {
    mpz_class a = ck[r].get_num(), b = cj[r].get_num();
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Scalar ua(mpz_class(a / g)), ub(mpz_class(b / g));
    Scalar ss(s), tt(t);
    auto mix = [&](Column& x, Column& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            Scalar nx = ss * x[i] + tt * y[i];
            Scalar ny = ua * y[i] - ub * x[i];
            x[i] = ring.normalize(std::move(nx));
            y[i] = ring.normalize(std::move(ny));
        }
    };
    mix(ck, cj);
    mix(tk, tj);
}

ExactMatrix columns_to_matrix(const Ring& ring, std::size_t rows, const std::vector<Column>& cols,
                              std::size_t first, std::size_t last) {
    ExactMatrix m(ring, rows, last - first);
    for (std::size_t c = first; c < last; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (cols[c][r] != 0) m.set(r, c - first, cols[c][r]);
    return m;
}

}  // namespace

ColumnEchelon column_echelon(const ExactMatrix& m, std::stop_token stop) {
    const Ring& ring = m.ring();
    const std::size_t rows = m.rows(), n = m.cols();
    std::vector<Column> cols(n), trans(n, Column(n));
    for (std::size_t c = 0; c < n; ++c) {
        cols[c] = m.column(c);
        trans[c][c] = 1;
    }

    std::vector<std::size_t> pivots;
    std::size_t k = 0;
    for (std::size_t r = 0; r < rows && k < n; ++r) {
        check_stop(stop);
        std::size_t first = n;
        for (std::size_t j = k; j < n; ++j)
            if (cols[j][r] != 0) {
                first = j;
                break;
            }
        if (first == n) continue;
        if (first != k) {
            std::swap(cols[first], cols[k]);
            std::swap(trans[first], trans[k]);
        }

        if (ring.is_field()) {
            Scalar inv = ring.inverse(cols[k][r]);
            combine(ring, cols[k], inv, cols[k], 0);
            combine(ring, trans[k], inv, trans[k], 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k || cols[j][r] == 0) continue;
                Scalar f = ring.neg(cols[j][r]);
                combine(ring, cols[j], 1, cols[k], f);
                combine(ring, trans[j], 1, trans[k], f);
            }
        } else {
            for (std::size_t j = k + 1; j < n; ++j)
                if (cols[j][r] != 0) gcd_step(ring, cols[k], cols[j], trans[k], trans[j], r);
            if (cols[k][r] < 0) {
                combine(ring, cols[k], -1, cols[k], 0);
                combine(ring, trans[k], -1, trans[k], 0);
            }
            const mpz_class piv = cols[k][r].get_num();
            for (std::size_t j = 0; j < k; ++j) {
                if (cols[j][r] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_num_mpz_t(), piv.get_mpz_t());
                if (q == 0) continue;
                Scalar f(mpz_class(-q));
                combine(ring, cols[j], 1, cols[k], f);
                combine(ring, trans[j], 1, trans[k], f);
            }
        }
        pivots.push_back(r);
        ++k;
    }

    return ColumnEchelon{columns_to_matrix(ring, rows, cols, 0, n), columns_to_matrix(ring, n, trans, 0, n),
                         std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return column_echelon(m).rank(); }

// ---------------------------------------------------------------------------

ChainSpace ChainSpace::span(const ExactMatrix& generators, std::stop_token stop) {
    auto ech = column_echelon(generators, stop);
    std::vector<std::size_t> keep(ech.rank());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    return ChainSpace(ech.reduced.select_cols(keep), std::move(ech.pivot_rows));
}

ChainSpace ChainSpace::zero(Ring ring, std::size_t ambient_dim) { return ChainSpace(ExactMatrix(ring, ambient_dim, 0), {}); }

ChainSpace ChainSpace::full(Ring ring, std::size_t ambient_dim) {
    std::vector<std::size_t> all(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
    return coordinate(ring, ambient_dim, all);
}

ChainSpace ChainSpace::coordinate(Ring ring, std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> idx(indices);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    ExactMatrix b(ring, ambient_dim, idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= ambient_dim) throw InternalError("coordinate index out of range");
        b.set(idx[i], i, 1);
    }
    return ChainSpace(std::move(b), std::move(idx));
}

std::optional<std::vector<Scalar>> ChainSpace::coordinates(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_dim()) throw InternalError("chain length does not match the ambient dimension");
    const Ring& R = ring();
    std::vector<Scalar> rest(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rest[i] = R.normalize(v[i]);
    std::vector<Scalar> coef(rank());
    for (std::size_t c = 0; c < rank(); ++c) {
        const std::size_t p = pivots_[c];
        // rows above the pivot must already be cleared
        for (std::size_t r = c == 0 ? 0 : pivots_[c - 1] + 1; r < p; ++r)
            if (rest[r] != 0) return std::nullopt;
        if (rest[p] == 0) continue;
        const Scalar& piv = basis_(p, c);
        Scalar q;
        if (R.is_field()) {
            q = R.mul(rest[p], R.inverse(piv));
        } else {
            if (!mpz_divisible_p(rest[p].get_num_mpz_t(), piv.get_num_mpz_t())) return std::nullopt;
            q = Scalar(mpz_class(rest[p].get_num() / piv.get_num()));
        }
        coef[c] = q;
        for (std::size_t r = p; r < rest.size(); ++r)
            if (basis_(r, c) != 0) rest[r] = R.sub(rest[r], q * basis_(r, c));
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coef;
}

bool ChainSpace::contains(const ChainSpace& other) const {
    for (std::size_t c = 0; c < other.rank(); ++c)
        if (!contains(other.basis().column(c))) return false;
    return true;
}

ChainSpace sum(const ChainSpace& a, const ChainSpace& b) { return ChainSpace::span(hconcat(a.basis(), b.basis())); }

namespace {

// Kernel of m as explicit generator columns.
ExactMatrix kernel_generators(const ExactMatrix& m) {
    auto ech = column_echelon(m);
    std::vector<std::size_t> idx;
    for (std::size_t c = ech.rank(); c < m.cols(); ++c) idx.push_back(c);
    return ech.transform.select_cols(idx);
}

ExactMatrix negated(const ExactMatrix& m) { return ExactMatrix(m.ring(), m.rows(), m.cols()) - m; }

}  // namespace

ChainSpace kernel_of(const ExactMatrix& m) { return ChainSpace::span(kernel_generators(m)); }

ChainSpace image_of(const ExactMatrix& m, const ChainSpace& a) { return ChainSpace::span(m * a.basis()); }

ChainSpace intersection(const ChainSpace& a, const ChainSpace& b) {
    if (a.rank() == 0 || b.rank() == 0) return ChainSpace::zero(a.ring(), a.ambient_dim());
    ExactMatrix k = kernel_generators(hconcat(a.basis(), negated(b.basis())));
    std::vector<std::size_t> top(a.rank());
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
    return ChainSpace::span(a.basis() * k.select_rows(top));
}

ChainSpace preimage_under(const ExactMatrix& m, const ChainSpace& b) {
    ExactMatrix k = kernel_generators(hconcat(m, negated(b.basis())));
    std::vector<std::size_t> top(m.cols());
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
    return ChainSpace::span(k.select_rows(top));
}

// ---------------------------------------------------------------------------

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat zidentity(std::size_t n) {
    ZMat m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ExactMatrix from_z(const ZMat& z, std::size_t rows, std::size_t cols) {
    ExactMatrix m(Ring::integers(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (z[r][c] != 0) m.set(r, c, Scalar(z[r][c]));
    return m;
}

}  // namespace

SmithForm smith_normal_form(const ExactMatrix& input, bool with_transforms, std::stop_token stop) {
    if (input.ring().kind() != Ring::Kind::integers) throw ValidationError("Smith normal form requires the ring Z");
    const std::size_t R = input.rows(), C = input.cols();
    ZMat a(R, std::vector<mpz_class>(C));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c) a[r][c] = input(r, c).get_num();
    ZMat L = with_transforms ? zidentity(R) : ZMat{}, V = with_transforms ? zidentity(C) : ZMat{};

    auto row_add = [&](std::size_t dst, std::size_t src, const mpz_class& f) {  // row dst += f * row src
        for (std::size_t c = 0; c < C; ++c) a[dst][c] += f * a[src][c];
        if (with_transforms)
            for (std::size_t c = 0; c < R; ++c) L[dst][c] += f * L[src][c];
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t r = 0; r < R; ++r) a[r][dst] += f * a[r][src];
        if (with_transforms)
            for (std::size_t r = 0; r < C; ++r) V[r][dst] += f * V[r][src];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (with_transforms) std::swap(L[i], L[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        if (with_transforms)
            for (auto& row : V) std::swap(row[i], row[j]);
    };

    std::vector<mpz_class> factors;
    const std::size_t lim = std::min(R, C);
    for (std::size_t t = 0; t < lim; ++t) {
        check_stop(stop);
        for (;;) {
            // smallest nonzero entry of the trailing block goes to (t, t)
            std::size_t br = R, bc = C;
            for (std::size_t r = t; r < R; ++r)
                for (std::size_t c = t; c < C; ++c)
                    if (a[r][c] != 0 && (br == R || abs(a[r][c]) < abs(a[br][bc]))) br = r, bc = c;
            if (br == R) goto done;
            if (br != t) row_swap(br, t);
            if (bc != t) col_swap(bc, t);

            bool clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (a[r][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_add(r, t, -q);
                if (a[r][t] != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (a[t][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
                col_add(c, t, -q);
                if (a[t][c] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t r = t + 1; r < R && divides; ++r)
                for (std::size_t c = t + 1; c < C; ++c)
                    if (!mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
                        row_add(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < C; ++c) a[t][c] = -a[t][c];
            if (with_transforms)
                for (std::size_t c = 0; c < R; ++c) L[t][c] = -L[t][c];
        }
        factors.push_back(a[t][t]);
    }
done:
    SmithForm out;
    out.factors = std::move(factors);
    if (with_transforms) {
        out.left = from_z(L, R, R);
        out.right = from_z(V, C, C);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> HomologyResult::betti() const {
    std::vector<std::size_t> b;
    for (const auto& d : degrees) b.push_back(d.betti);
    return b;
}

std::size_t HomologyResult::betti(int n) const {
    for (const auto& d : degrees)
        if (d.degree == n) return d.betti;
    return 0;
}

long HomologyResult::euler_characteristic() const {
    long chi = 0;
    for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long>(d.betti);
    return chi;
}

bool same_homology(const HomologyResult& a, const HomologyResult& b) {
    if (!(a.ring == b.ring)) return false;
    auto at = [](const HomologyResult& h, std::size_t i) {
        return i < h.degrees.size() ? h.degrees[i] : DegreeHomology{static_cast<int>(i), 0, {}};
    };
    const std::size_t n = std::max(a.degrees.size(), b.degrees.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto x = at(a, i), y = at(b, i);
        if (x.betti != y.betti || x.torsion != y.torsion) return false;
    }
    return true;
}

std::string describe(const HomologyResult& h) {
    std::ostringstream os;
    os << h.ring.name() << ":";
    for (const auto& d : h.degrees) {
        os << " H" << d.degree << "=" << d.betti;
        for (const auto& t : d.torsion) os << "+Z/" << t.get_str();
    }
    return os.str();
}

std::optional<ClosureViolation> find_closure_violation(const std::vector<ChainSpace>& spaces,
                                                       const std::vector<ExactMatrix>& boundaries) {
    for (std::size_t n = 1; n < spaces.size(); ++n) {
        const auto& S = spaces[n];
        for (std::size_t c = 0; c < S.rank(); ++c) {
            auto chain = S.basis().column(c);
            if (!spaces[n - 1].contains(boundaries[n].apply(chain)))
                return ClosureViolation{static_cast<int>(n), std::move(chain)};
        }
    }
    return std::nullopt;
}

ExactMatrix restricted_boundary(const ChainSpace& source, const ChainSpace& target, const ExactMatrix& boundary) {
    ExactMatrix d(source.ring(), target.rank(), source.rank());
    for (std::size_t c = 0; c < source.rank(); ++c) {
        auto coords = target.coordinates(boundary.apply(source.basis().column(c)));
        if (!coords) throw ValidationError("boundary of a chain leaves the subcomplex");
        for (std::size_t r = 0; r < coords->size(); ++r)
            if ((*coords)[r] != 0) d.set(r, c, (*coords)[r]);
    }
    return d;
}

HomologyResult homology_of_subcomplex(const std::vector<ChainSpace>& spaces,
                                      const std::vector<ExactMatrix>& boundaries, std::stop_token stop) {
    if (spaces.empty()) throw InternalError("homology of an empty list of chain spaces");
    if (boundaries.size() < spaces.size()) throw InternalError("missing boundary matrices");
    const Ring ring = spaces.front().ring();

    if (auto bad = find_closure_violation(spaces, boundaries)) {
        std::ostringstream os;
        os << "chain spaces are not closed under the boundary in degree " << bad->degree;
        std::ostringstream w;
        w << "degree " << bad->degree << " chain:";
        for (const auto& x : bad->chain) w << ' ' << to_string(x);
        throw ValidationError(os.str(), {w.str()});
    }

    const std::size_t top = spaces.size();
    // d[n]: spaces[n] -> spaces[n-1] in canonical bases; d[top] = 0
    std::vector<ExactMatrix> d;
    std::vector<std::size_t> rk(top + 1, 0);
    d.emplace_back(ring, 0, spaces[0].rank());
    for (std::size_t n = 1; n < top; ++n) {
        check_stop(stop);
        d.push_back(restricted_boundary(spaces[n], spaces[n - 1], boundaries[n]));
        rk[n] = rank(d.back());
    }

    HomologyResult out;
    out.ring = ring;
    for (std::size_t n = 0; n < top; ++n) {
        DegreeHomology h;
        h.degree = static_cast<int>(n);
        h.betti = spaces[n].rank() - rk[n] - rk[n + 1];
        if (!ring.is_field() && n + 1 < top && rk[n + 1] > 0) {
            auto snf = smith_normal_form(d[n + 1], false, stop);
            for (const auto& f : snf.factors)
                if (f > 1) h.torsion.push_back(f);
        }
        out.degrees.push_back(std::move(h));
    }
    return out;
}

}  // namespace hypermorse
