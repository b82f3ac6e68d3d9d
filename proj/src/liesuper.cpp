#include "cts/liesuper.hpp"

#include <algorithm>

#include "json.hpp"

namespace cts {

using nlohmann::ordered_json;

std::pair<int, int> LieSuperAlgebra::sdim() const {
    int ev = 0, od = 0;
    for (auto p : parity_) (p ? od : ev) += 1;
    return {ev, od};
}

int LieSuperAlgebra::add_basis(const std::string& label, bool odd) {
    labels_.push_back(label);
    parity_.push_back(odd ? 1 : 0);
    return dim() - 1;
}

void LieSuperAlgebra::set_bracket(int i, int j, const SparseVec& v) {
    auto key = std::minmax(i, j);
    if (vec_is_zero(v))
        bracket_.erase({key.first, key.second});
    else
        bracket_[{key.first, key.second}] = v;
}

void LieSuperAlgebra::add_bracket(int i, int j, int k, const Scalar& c) {
    auto key = std::minmax(i, j);
    SparseVec& v = bracket_[{key.first, key.second}];
    auto it = v.find(k);
    if (it == v.end()) {
        if (!c.is_zero()) v.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
    if (v.empty()) bracket_.erase({key.first, key.second});
}

const SparseVec& LieSuperAlgebra::bracket(int i, int j) const {
    static const SparseVec kEmpty;
    auto key = std::minmax(i, j);
    auto it = bracket_.find({key.first, key.second});
    return it == bracket_.end() ? kEmpty : it->second;
}

void LieSuperAlgebra::set_square(int i, const SparseVec& v) {
    if (vec_is_zero(v))
        squaring_.erase(i);
    else
        squaring_[i] = v;
}

const SparseVec& LieSuperAlgebra::square_of_basis(int i) const {
    static const SparseVec kEmpty;
    auto it = squaring_.find(i);
    return it == squaring_.end() ? kEmpty : it->second;
}

SparseVec LieSuperAlgebra::bracket_vec(const SparseVec& x, const SparseVec& y) const {
    SparseVec r;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) vec_add_scaled(r, bracket(i, j), ci * cj);
    return r;
}

SparseVec LieSuperAlgebra::square_vec(const SparseVec& x) const {
    SparseVec r;
    for (const auto& [i, ci] : x) vec_add_scaled(r, square_of_basis(i), ci * ci);
    for (auto it = x.begin(); it != x.end(); ++it) {
        auto jt = it;
        for (++jt; jt != x.end(); ++jt) vec_add_scaled(r, bracket(it->first, jt->first), it->second * jt->second);
    }
    return r;
}

std::optional<bool> LieSuperAlgebra::parity_of(const SparseVec& v) const {
    std::optional<bool> p;
    for (const auto& [i, c] : v) {
        (void)c;
        bool pi = odd(i);
        if (!p)
            p = pi;
        else if (*p != pi)
            return std::nullopt;
    }
    return p;
}

std::vector<std::string> LieSuperAlgebra::verify(int max_violations) const {
    std::vector<std::string> bad;
    int n = dim();
    auto note = [&](const std::string& s) {
        if (static_cast<int>(bad.size()) < max_violations) bad.push_back(s);
    };

    // [x,x] = 0 for every basis element (for odd x this is the polarization
    // of the squaring at x = y, so it must vanish identically too).
    for (int i = 0; i < n && static_cast<int>(bad.size()) < max_violations; ++i)
        if (!vec_is_zero(bracket(i, i))) note("[x,x] != 0 at basis " + label(i));

    // squaring must land in the even part and only be set on odd elements
    for (const auto& [i, sq] : squaring_) {
        if (!odd(i)) note("squaring set on even basis " + label(i));
        for (const auto& [k, c] : sq) {
            (void)c;
            if (odd(k)) note("square of " + label(i) + " has odd component " + label(k));
        }
    }

    // bracket parity additivity
    for (const auto& [key, v] : bracket_) {
        bool want = odd(key.first) ^ odd(key.second);
        for (const auto& [k, c] : v) {
            (void)c;
            if (odd(k) != want) {
                note("bracket [" + label(key.first) + "," + label(key.second) + "] breaks parity");
                break;
            }
        }
    }

    // Jacobi on distinct triples: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0.
    for (int i = 0; i < n && static_cast<int>(bad.size()) < max_violations; ++i) {
        SparseVec ei{{i, Scalar::one()}};
        for (int j = i + 1; j < n; ++j) {
            SparseVec ej{{j, Scalar::one()}};
            for (int k = j + 1; k < n; ++k) {
                SparseVec ek{{k, Scalar::one()}};
                SparseVec s = bracket_vec(ei, bracket(j, k));
                vec_add_scaled(s, bracket_vec(ej, bracket(k, i)), Scalar::one());
                vec_add_scaled(s, bracket_vec(ek, bracket(i, j)), Scalar::one());
                if (!vec_is_zero(s)) {
                    note("Jacobi fails on (" + label(i) + "," + label(j) + "," + label(k) + ")");
                    if (static_cast<int>(bad.size()) >= max_violations) break;
                }
            }
            if (static_cast<int>(bad.size()) >= max_violations) break;
        }
    }

    // [x^2, y] = [x, [x, y]] for odd x.
    for (int i = 0; i < n && static_cast<int>(bad.size()) < max_violations; ++i) {
        if (!odd(i)) continue;
        SparseVec ei{{i, Scalar::one()}};
        const SparseVec& sq = square_of_basis(i);
        for (int j = 0; j < n; ++j) {
            SparseVec ej{{j, Scalar::one()}};
            SparseVec lhs = bracket_vec(sq, ej);
            SparseVec rhs = bracket_vec(ei, bracket(i, j));
            vec_add_scaled(lhs, rhs, Scalar::one());
            if (!vec_is_zero(lhs)) {
                note("squaring identity fails on (" + label(i) + "," + label(j) + ")");
                if (static_cast<int>(bad.size()) >= max_violations) break;
            }
        }
    }
    return bad;
}

namespace {

// Parity-graded echelon span over a superalgebra's basis.
struct GradedSpan {
    EchelonSpan even, odd;
    explicit GradedSpan(int ambient) : even(ambient), odd(ambient) {}
    bool insert(const LieSuperAlgebra& g, const SparseVec& v) {
        if (vec_is_zero(v)) return false;
        auto p = g.parity_of(v);
        return (p && *p) ? odd.insert(v) : even.insert(v);
    }
    bool contains(const LieSuperAlgebra& g, const SparseVec& v) const {
        if (vec_is_zero(v)) return true;
        auto p = g.parity_of(v);
        return (p && *p) ? odd.contains(v) : even.contains(v);
    }
    int dim() const { return even.dim() + odd.dim(); }
    ExactMatrix to_matrix(int ambient) const {
        ExactMatrix m(0, ambient);
        for (const auto& r : even.rows()) m.append_row(r);
        for (const auto& r : odd.rows()) m.append_row(r);
        return m;
    }
};

}  // namespace

LieSuperAlgebra::Sub LieSuperAlgebra::subalgebra(const ExactMatrix& span_rows) const {
    GradedSpan span(dim());
    for (int r = 0; r < span_rows.rows(); ++r) span.insert(*this, span_rows.row(r));
    ExactMatrix basis = span.to_matrix(dim());

    EchelonSpan full(dim());
    std::vector<SparseVec> rows;
    for (int r = 0; r < basis.rows(); ++r) {
        rows.push_back(basis.row(r));
        full.insert(basis.row(r));
    }

    Sub out;
    for (int r = 0; r < basis.rows(); ++r) {
        auto p = parity_of(rows[static_cast<std::size_t>(r)]);
        out.algebra.add_basis("s" + std::to_string(r), p && *p);
    }
    auto express = [&](const SparseVec& v) -> SparseVec {
        auto coords = full.coordinates(v);
        if (!coords) throw Error("subalgebra: span not closed under bracket/squaring");
        return *coords;
    };
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = i; j < basis.rows(); ++j) {
            SparseVec br = bracket_vec(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
            if (!vec_is_zero(br)) out.algebra.set_bracket(i, j, express(br));
        }
    for (int i = 0; i < basis.rows(); ++i) {
        if (!out.algebra.odd(i)) continue;
        SparseVec sq = square_vec(rows[static_cast<std::size_t>(i)]);
        if (!vec_is_zero(sq)) out.algebra.set_square(i, express(sq));
    }
    out.embedding = basis;
    return out;
}

LieSuperAlgebra::Sub LieSuperAlgebra::derived(int iterations) const {
    if (iterations <= 0) throw InvalidParams("derived: iterations must be >= 1");
    ExactMatrix gens(0, dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = i; j < dim(); ++j)
            if (!vec_is_zero(bracket(i, j))) gens.append_row(bracket(i, j));
    for (const auto& [i, sq] : squaring_) {
        (void)i;
        gens.append_row(sq);
    }
    Sub sub = subalgebra(gens);
    if (iterations == 1) return sub;
    Sub deeper = sub.algebra.derived(iterations - 1);
    // compose embeddings
    ExactMatrix composed(0, dim());
    for (int r = 0; r < deeper.embedding.rows(); ++r) {
        SparseVec v;
        for (const auto& [k, c] : deeper.embedding.row(r)) vec_add_scaled(v, sub.embedding.row(k), c);
        composed.append_row(v);
    }
    deeper.embedding = composed;
    return deeper;
}

ExactMatrix LieSuperAlgebra::center() const {
    // x central iff [x, b_j] = 0 for all j; solve the joint kernel.
    int n = dim();
    ExactMatrix constraints(0, n);
    // row index: (j, k) component of [x, b_j]; columns: coordinates of x.
    std::map<std::pair<int, int>, SparseVec> rows;
    for (int i = 0; i < n; ++i) {
        SparseVec ei{{i, Scalar::one()}};
        for (int j = 0; j < n; ++j) {
            const SparseVec& br = bracket(i, j);
            for (const auto& [k, c] : br) {
                rows[{j, k}][i] = c;
            }
        }
    }
    for (auto& [key, row] : rows) {
        (void)key;
        constraints.append_row(row);
    }
    return kernel(constraints);
}

LieSuperAlgebra::Quot LieSuperAlgebra::quotient_by_ideal(const ExactMatrix& ideal_rows) const {
    GradedSpan ideal(dim());
    for (int r = 0; r < ideal_rows.rows(); ++r) ideal.insert(*this, ideal_rows.row(r));

    // ideal checks: [I, g] in I, squares of odd ideal elements in I
    for (const auto& part : {&ideal.even, &ideal.odd})
        for (const auto& row : part->rows()) {
            for (int j = 0; j < dim(); ++j) {
                SparseVec ej{{j, Scalar::one()}};
                if (!ideal.contains(*this, bracket_vec(row, ej)))
                    throw Error("quotient: span is not an ideal (bracket escapes)");
            }
        }
    for (const auto& row : ideal.odd.rows())
        if (!ideal.contains(*this, square_vec(row)))
            throw Error("quotient: squaring does not descend (odd ideal square escapes)");

    auto reduce_mod = [&](SparseVec v) {
        v = ideal.even.reduce(v);
        v = ideal.odd.reduce(v);
        return v;
    };

    // complement representatives: standard basis vectors at free columns
    std::vector<int> reps;
    EchelonSpan probe(dim());
    for (const auto& r : ideal.even.rows()) probe.insert(r);
    for (const auto& r : ideal.odd.rows()) probe.insert(r);
    for (int i = 0; i < dim(); ++i) {
        SparseVec ei{{i, Scalar::one()}};
        if (probe.insert(ei)) reps.push_back(i);
    }

    Quot out;
    out.representative = reps;
    std::map<int, int> new_index;
    for (std::size_t r = 0; r < reps.size(); ++r) {
        new_index[reps[r]] = static_cast<int>(r);
        out.algebra.add_basis(label(reps[r]), odd(reps[r]));
    }
    auto project = [&](const SparseVec& v) {
        SparseVec reduced = reduce_mod(v);
        SparseVec coords;
        for (const auto& [k, c] : reduced) {
            auto it = new_index.find(k);
            if (it == new_index.end()) throw Error("quotient: residual outside representatives");
            coords[it->second] = c;
        }
        return coords;
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
            SparseVec br = bracket(reps[i], reps[j]);
            if (!vec_is_zero(br)) out.algebra.set_bracket(static_cast<int>(i), static_cast<int>(j), project(br));
        }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!odd(reps[i])) continue;
        const SparseVec& sq = square_of_basis(reps[i]);
        if (!vec_is_zero(sq)) out.algebra.set_square(static_cast<int>(i), project(sq));
    }
    return out;
}

LieSuperAlgebra LieSuperAlgebra::desuperized() const {
    LieSuperAlgebra f;
    f.labels_ = labels_;
    f.parity_.assign(labels_.size(), 0);
    f.bracket_ = bracket_;
    f.annotation_squaring_ = squaring_;
    return f;
}

namespace {

// One parity sector of the degree-d derivation solve; der_odd selects the
// parity of the derivation itself.
DerivationReport graded_derivations_sector(const LieSuperAlgebra& g, const ZGrading& grading, int d, bool der_odd) {
    int n = g.dim();
    // unknown u(i,t): coefficient of b_t in D(b_i), allowed when deg t = deg i + d
    std::map<std::pair<int, int>, int> unknown;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            if (grading[static_cast<std::size_t>(t)] == grading[static_cast<std::size_t>(i)] + d &&
                g.odd(t) == (g.odd(i) ^ der_odd)) {
                int id = static_cast<int>(unknown.size());
                unknown[{i, t}] = id;
            }
    if (unknown.empty()) return DerivationReport{0, 0};

    std::map<std::pair<std::pair<int, int>, int>, SparseVec> eq;  // ((i,j), k) -> row
    auto add_eq = [&](std::pair<int, int> pair_key, int k, int uid, const Scalar& c) {
        if (c.is_zero()) return;
        SparseVec& row = eq[{pair_key, k}];
        auto it = row.find(uid);
        if (it == row.end())
            row.emplace(uid, c);
        else {
            it->second += c;
            if (it->second.is_zero()) row.erase(it);
        }
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // D[b_i,b_j] + [D b_i, b_j] + [b_i, D b_j] = 0
            const SparseVec& br = g.bracket(i, j);
            for (const auto& [m, c] : br)
                for (int t = 0; t < n; ++t)
                    if (auto it = unknown.find({m, t}); it != unknown.end()) add_eq({i, j}, t, it->second, c);
            for (int t = 0; t < n; ++t) {
                if (auto it = unknown.find({i, t}); it != unknown.end())
                    for (const auto& [k, c] : g.bracket(t, j)) add_eq({i, j}, k, it->second, c);
                if (auto it = unknown.find({j, t}); it != unknown.end())
                    for (const auto& [k, c] : g.bracket(i, t)) add_eq({i, j}, k, it->second, c);
            }
        }
    }
    // D(b_i^2) + [D b_i, b_i] = 0 for odd b_i
    for (int i = 0; i < n; ++i) {
        if (!g.odd(i)) continue;
        const SparseVec& sq = g.square_of_basis(i);
        for (const auto& [m, c] : sq)
            for (int t = 0; t < n; ++t)
                if (auto it = unknown.find({m, t}); it != unknown.end()) add_eq({i, i}, t, it->second, c);
        for (int t = 0; t < n; ++t)
            if (auto it = unknown.find({i, t}); it != unknown.end())
                for (const auto& [k, c] : g.bracket(t, i)) add_eq({i, i}, k, it->second, c);
    }

    ExactMatrix constraints(0, static_cast<int>(unknown.size()));
    for (auto& [key, row] : eq) {
        (void)key;
        constraints.append_row(row);
    }
    ExactMatrix der = kernel(constraints);

    // inner derivations: ad(x) for x in g_d of the matching parity
    EchelonSpan inner(static_cast<int>(unknown.size()));
    int dim_inner = 0;
    for (int x = 0; x < n; ++x) {
        if (grading[static_cast<std::size_t>(x)] != d || g.odd(x) != der_odd) continue;
        SparseVec coords;
        for (int i = 0; i < n; ++i)
            for (const auto& [k, c] : g.bracket(x, i)) {
                auto it = unknown.find({i, k});
                if (it == unknown.end()) continue;  // grading-inconsistent entries impossible
                coords[it->second] = c;
            }
        if (inner.insert(coords)) ++dim_inner;
    }
    DerivationReport rep;
    rep.dim_derivations = der.rows();
    rep.dim_inner = dim_inner;
    return rep;
}

}  // namespace

DerivationReport graded_derivations(const LieSuperAlgebra& g, const ZGrading& grading, int d) {
    DerivationReport ev = graded_derivations_sector(g, grading, d, false);
    DerivationReport od = graded_derivations_sector(g, grading, d, true);
    return DerivationReport{ev.dim_derivations + od.dim_derivations, ev.dim_inner + od.dim_inner};
}

Filtration weisfeiler_filtration(const LieSuperAlgebra& g, const ExactMatrix& l0, const ExactMatrix& lm1) {
    int n = g.dim();
    GradedSpan s0(n), s1(n);
    for (int r = 0; r < l0.rows(); ++r) s0.insert(g, l0.row(r));
    for (int r = 0; r < l0.rows(); ++r) s1.insert(g, l0.row(r));
    for (int r = 0; r < lm1.rows(); ++r) s1.insert(g, lm1.row(r));

    // L0 must be a subalgebra and L-1 must be L0-invariant
    for (const auto& part : {&s0.even, &s0.odd})
        for (const auto& x : part->rows())
            for (const auto& part2 : {&s0.even, &s0.odd})
                for (const auto& y : part2->rows())
                    if (!s0.contains(g, g.bracket_vec(x, y))) throw InvalidSeed("L0 is not a subalgebra");
    for (const auto& part : {&s0.even, &s0.odd})
        for (const auto& x : part->rows())
            for (const auto& part2 : {&s1.even, &s1.odd})
                for (const auto& y : part2->rows())
                    if (!s1.contains(g, g.bracket_vec(x, y))) throw InvalidSeed("L-1 is not L0-invariant");

    Filtration out;
    std::vector<GradedSpan> neg{s1};
    // L_{-i-1} = [L_{-1}, L_{-i}] + L_{-i}
    while (true) {
        GradedSpan next = neg.back();
        bool grew = false;
        for (const auto& part : {&s1.even, &s1.odd})
            for (const auto& x : part->rows())
                for (const auto& part2 : {&neg.back().even, &neg.back().odd})
                    for (const auto& y : part2->rows())
                        if (next.insert(g, g.bracket_vec(x, y))) grew = true;
        if (!grew) break;
        neg.push_back(next);
    }
    out.depth = static_cast<int>(neg.size());
    for (auto& s : neg) out.negative.push_back(s.to_matrix(n));

    // L_i = {x in L_{i-1} : [x, L_{-1}] in L_{i-1}}
    ExactMatrix prev = s0.to_matrix(n);
    GradedSpan prev_span = s0;
    while (prev.rows() > 0) {
        // solve for combos of prev rows staying inside prev under bracketing with L_{-1}
        ExactMatrix constraints(0, prev.rows());
        // For each generator y of L_{-1} and each coordinate outside prev: constraint rows.
        std::map<std::pair<int, int>, SparseVec> rows;
        int ygen = 0;
        for (const auto& part : {&s1.even, &s1.odd})
            for (const auto& y : part->rows()) {
                for (int r = 0; r < prev.rows(); ++r) {
                    SparseVec br = g.bracket_vec(prev.row(r), y);
                    SparseVec residual = prev_span.even.reduce(br);
                    residual = prev_span.odd.reduce(residual);
                    for (const auto& [k, c] : residual) rows[{ygen, k}][r] = c;
                }
                ++ygen;
            }
        for (auto& [key, row] : rows) {
            (void)key;
            constraints.append_row(row);
        }
        ExactMatrix combos = kernel(constraints);
        ExactMatrix next(0, n);
        GradedSpan next_span(n);
        for (int r = 0; r < combos.rows(); ++r) {
            SparseVec v;
            for (const auto& [idx, c] : combos.row(r)) vec_add_scaled(v, prev.row(idx), c);
            if (!vec_is_zero(v) && next_span.insert(g, v)) next.append_row(v);
        }
        if (next.rows() == prev.rows()) break;  // stabilized
        out.positive.push_back(next);
        prev = next;
        prev_span = next_span;
        if (next.rows() == 0) break;
    }
    return out;
}

SimplicityReport is_simple(const LieSuperAlgebra& g, const std::vector<SparseVec>& test_vectors,
                           bool exhaustive_hint) {
    SimplicityReport rep;
    rep.witness_ideal = ExactMatrix(0, g.dim());
    if (g.dim() == 0) {
        rep.verdict = Simplicity::NOT_SIMPLE;
        return rep;
    }
    // derived(g) must equal g
    if (g.derived(1).algebra.dim() != g.dim()) {
        rep.verdict = Simplicity::NOT_SIMPLE;
        ExactMatrix gens(0, g.dim());
        for (int i = 0; i < g.dim(); ++i)
            for (int j = i; j < g.dim(); ++j)
                if (!vec_is_zero(g.bracket(i, j))) gens.append_row(g.bracket(i, j));
        rep.witness_ideal = rref(gens).reduced;
        return rep;
    }
    ExactMatrix c = g.center();
    if (c.rows() > 0) {
        rep.verdict = Simplicity::NOT_SIMPLE;
        rep.witness_ideal = c;
        return rep;
    }

    std::vector<SparseVec> seeds = test_vectors;
    bool exhaustive = exhaustive_hint && !seeds.empty();
    if (seeds.empty()) {
        for (int i = 0; i < g.dim(); ++i) seeds.push_back(SparseVec{{i, Scalar::one()}});
        SplitMix64 rng(0x5EEDULL);
        for (int t = 0; t < 64; ++t) {
            SparseVec v;
            for (int i = 0; i < g.dim(); ++i)
                if (rng.next() & 1) v[i] = Scalar::one();
            if (!vec_is_zero(v)) seeds.push_back(v);
        }
    }

    for (const auto& seed : seeds) {
        // spin the ideal generated by seed
        GradedSpan span(g.dim());
        std::vector<SparseVec> frontier;
        auto push = [&](const SparseVec& v) {
            if (span.insert(g, v)) frontier.push_back(v);
        };
        push(seed);
        while (!frontier.empty() && span.dim() < g.dim()) {
            SparseVec v = frontier.back();
            frontier.pop_back();
            for (int i = 0; i < g.dim(); ++i) {
                SparseVec ei{{i, Scalar::one()}};
                push(g.bracket_vec(ei, v));
            }
            auto p = g.parity_of(v);
            if (p && *p) push(g.square_vec(v));
        }
        if (span.dim() < g.dim()) {
            rep.verdict = Simplicity::NOT_SIMPLE;
            rep.witness_ideal = span.to_matrix(g.dim());
            return rep;
        }
    }
    rep.verdict = exhaustive ? Simplicity::SIMPLE : Simplicity::INCONCLUSIVE;
    return rep;
}

std::string LieSuperAlgebra::to_json() const {
    ordered_json j;
    j["basis"] = labels_;
    j["parity"] = parity_;
    ordered_json br = ordered_json::array();
    for (const auto& [key, v] : bracket_) {
        ordered_json terms = ordered_json::array();
        for (const auto& [k, c] : v) terms.push_back({k, c.str()});
        br.push_back({key.first, key.second, terms});
    }
    j["bracket"] = br;
    ordered_json sq = ordered_json::array();
    for (const auto& [i, v] : squaring_) {
        ordered_json terms = ordered_json::array();
        for (const auto& [k, c] : v) terms.push_back({k, c.str()});
        sq.push_back({i, terms});
    }
    j["squaring"] = sq;
    return j.dump();
}

LieSuperAlgebra LieSuperAlgebra::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    LieSuperAlgebra g;
    auto labels = j.at("basis");
    auto parity = j.at("parity");
    for (std::size_t i = 0; i < labels.size(); ++i)
        g.add_basis(labels[i].get<std::string>(), parity[i].get<int>() != 0);
    for (const auto& entry : j.at("bracket")) {
        SparseVec v;
        for (const auto& term : entry[2]) v[term[0].get<int>()] = Scalar::parse(term[1].get<std::string>());
        g.set_bracket(entry[0].get<int>(), entry[1].get<int>(), v);
    }
    for (const auto& entry : j.at("squaring")) {
        SparseVec v;
        for (const auto& term : entry[1]) v[term[0].get<int>()] = Scalar::parse(term[1].get<std::string>());
        g.set_square(entry[0].get<int>(), v);
    }
    return g;
}

}  // namespace cts
