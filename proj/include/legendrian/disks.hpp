#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"
#include "lagrangian.hpp"
#include "simplex.hpp"

namespace legendrian {

// Immersed polygons with one positive corner. `negatives` lists the negative
// corners counterclockwise from the positive one; `count` is the number of
// distinct disks with that corner word.
struct Disk {
    int positive;
    std::vector<int> negatives;
    std::int64_t count;
};

struct DiskSet {
    std::vector<Disk> disks;
    std::uint64_t nodes = 0;
};

// Bounded regions of the diagram split into sweep cells (slab, gap).
struct Faces {
    std::vector<std::vector<int>> cell;              // slab -> gap -> face, -1 if unbounded
    std::vector<std::vector<int>> coeff;             // face -> per crossing area coefficient
    int count = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> p;
    int add() {
        p.push_back(static_cast<int>(p.size()));
        return p.back();
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace detail

inline Faces compute_faces(const std::vector<SweepEvent>& ev, int ncross) {
    detail::UnionFind uf;
    const int outer = uf.add();
    std::vector<std::vector<int>> ids(ev.size() + 1);
    std::vector<int> ns(ev.size() + 1, 0);
    for (std::size_t k = 0; k < ev.size(); ++k)
        ns[k + 1] = ns[k] + (ev[k].type == 'B' ? 2 : ev[k].type == 'D' ? -2 : 0);
    for (std::size_t s = 0; s <= ev.size(); ++s)
        for (int j = 0; j + 1 < ns[s]; ++j) ids[s].push_back(uf.add());
    auto cid = [&](std::size_t s, int j) { return (j < 0 || j + 1 >= ns[s]) ? outer : ids[s][j]; };
    for (std::size_t k = 0; k < ev.size(); ++k) {
        const int n = ns[k], p = ev[k].p;
        for (int j = -1; j < n; ++j) {
            const int L = cid(k, j);
            if (ev[k].type == 'B') {
                if (j < p - 1) uf.unite(L, cid(k + 1, j));
                else if (j == p - 1) { uf.unite(L, cid(k + 1, p - 1)); uf.unite(L, cid(k + 1, p + 1)); }
                else uf.unite(L, cid(k + 1, j + 2));
            } else if (ev[k].type == 'X') {
                if (j != p) uf.unite(L, cid(k + 1, j));
            } else {
                if (j < p - 1) uf.unite(L, cid(k + 1, j));
                else if (j == p - 1 || j == p + 1) uf.unite(L, cid(k + 1, p - 1));
                else if (j > p + 1) uf.unite(L, cid(k + 1, j - 2));
            }
        }
    }
    Faces f;
    std::map<int, int> fid;
    const int out_root = uf.find(outer);
    f.cell.resize(ev.size() + 1);
    for (std::size_t s = 0; s <= ev.size(); ++s)
        for (int j = 0; j + 1 < ns[s]; ++j) {
            const int r = uf.find(ids[s][j]);
            if (r == out_root) { f.cell[s].push_back(-1); continue; }
            auto [it, fresh] = fid.emplace(r, static_cast<int>(fid.size()));
            f.cell[s].push_back(it->second);
        }
    f.count = static_cast<int>(fid.size());
    f.coeff.assign(f.count, std::vector<int>(ncross, 0));
    auto add = [&](std::size_t s, int j, int c, int v) {
        const int r = uf.find(cid(s, j));
        if (r != out_root) f.coeff[fid.at(r)][c] += v;
    };
    for (std::size_t k = 0; k < ev.size(); ++k) {
        if (ev[k].type != 'X') continue;
        const int p = ev[k].p, c = ev[k].gen;
        add(k, p, c, 1);       // W
        add(k + 1, p, c, 1);   // E
        add(k, p + 1, c, -1);  // N
        add(k, p - 1, c, -1);  // S
    }
    return f;
}

namespace detail {

inline bool heights_valid(const Faces& f, const std::vector<std::int64_t>& h) {
    for (const auto& row : f.coeff) {
        std::int64_t a = 0;
        for (std::size_t i = 0; i < h.size(); ++i) a += row[i] * h[i];
        if (a <= 0) return false;
    }
    return true;
}

// Best rational approximation with denominator at most maxden.
inline std::pair<std::int64_t, std::int64_t> approximate(double v, std::int64_t maxden) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(x);
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t q2 = q0 + ai * q1;
        if (q2 > maxden) break;
        const std::int64_t p2 = p0 + ai * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (x - a < 1e-12) break;
        x = 1.0 / (x - a);
    }
    return {p1, q1};
}

}  // namespace detail

// Heights making every face area positive. Small heights give tight area bounds
// in the disk search; powers of two in sweep order are the fallback.
inline std::vector<std::int64_t> pruning_heights(const Faces& f, int ncross) {
    std::vector<std::int64_t> pow2(ncross);
    for (int i = 0; i < ncross; ++i) pow2[i] = std::int64_t{1} << std::min(i, 62);
    if (ncross == 0) return pow2;
    // variables y_i = h_i - 1 and t = H - 1; minimize t
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    for (const auto& row : f.coeff) {
        std::vector<double> r(ncross + 1, 0.0);
        double s = 0;
        for (int i = 0; i < ncross; ++i) { r[i] = row[i]; s += row[i]; }
        A.push_back(r);
        b.push_back(1.0 - s);
    }
    for (int i = 0; i < ncross; ++i) {
        std::vector<double> r(ncross + 1, 0.0);
        r[i] = -1;
        r[ncross] = 1;
        A.push_back(r);
        b.push_back(0);
    }
    std::vector<double> c(ncross + 1, 0.0);
    c[ncross] = 1;
    const auto res = lp::minimize<double>(A, b, c);
    if (!res.feasible || !res.bounded) return pow2;
    std::vector<std::pair<std::int64_t, std::int64_t>> fr;
    std::int64_t L = 1;
    for (int i = 0; i < ncross; ++i) {
        fr.push_back(detail::approximate(1.0 + res.x[i], 64));
        L = std::lcm(L, fr.back().second);
    }
    std::vector<std::int64_t> h;
    for (auto [p, q] : fr) h.push_back(p * (L / q));
    return detail::heights_valid(f, h) ? h : pow2;
}

namespace detail {

class DiskSearch {
public:
    DiskSearch(const std::vector<SweepEvent>& ev, const Faces& faces, std::vector<std::int64_t> h, std::uint64_t budget)
        : ev_(ev), faces_(faces), h_(std::move(h)), budget_(budget) {
        for (int i = 0; i < faces_.count; ++i) {
            std::int64_t a = 0;
            for (std::size_t c = 0; c < h_.size(); ++c) a += faces_.coeff[i][c] * h_[c];
            area_.push_back(a);
        }
        // largest height among crossings strictly after each event
        sufmax_.assign(ev_.size() + 1, 0);
        for (std::size_t k = ev_.size(); k-- > 0;)
            sufmax_[k] = std::max(sufmax_[k + 1], k + 1 < ev_.size() && ev_[k + 1].type == 'X' ? h_[ev_[k + 1].gen] : 0);
    }

    void run() {
        State s;
        s.mf.assign(faces_.count, 0);
        step(0, s);
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::map<std::pair<int, std::vector<int>>, Rational>& found() const { return found_; }

private:
    template <class T, std::size_t N>
    using svec = boost::container::small_vector<T, N>;

    struct Sheet { int l, u, comp, top, bot; };
    // Boundary pieces are ropes in an arena that is rolled back on backtracking.
    struct Rope { int left, right, leaf; };
    struct State {
        svec<Sheet, 8> sh;
        svec<int, 16> pc;   // piece -> rope, -1 if empty
        svec<int, 8> par;   // union-find over sheet components
        int pos = 0, posk = -1;
        std::int64_t neg = 0, area = 0;
        std::int64_t den = 1;
        svec<std::uint8_t, 64> mf;  // per face, largest sheet multiplicity seen
    };

    int leaf(int x) {
        rope_.push_back({-1, -1, x});
        return static_cast<int>(rope_.size()) - 1;
    }
    int cat(int a, int b) {
        if (a < 0) return b;
        if (b < 0) return a;
        rope_.push_back({a, b, 0});
        return static_cast<int>(rope_.size()) - 1;
    }
    void flatten(int r, std::vector<int>& out) const {
        if (r < 0) return;
        const Rope& n = rope_[r];
        if (n.left < 0 && n.right < 0) { out.push_back(n.leaf); return; }
        flatten(n.left, out);
        flatten(n.right, out);
    }

    static int newp(State& s, int rope = -1) {
        s.pc.push_back(rope);
        return static_cast<int>(s.pc.size()) - 1;
    }
    static int newc(State& s) {
        s.par.push_back(static_cast<int>(s.par.size()));
        return s.par.back();
    }
    static int find(const State& s, int x) {
        while (s.par[x] != x) x = s.par[x];
        return x;
    }
    // Appends piece pa after pb with mid in between. Returns true (and the closed
    // cycle in out) when pa == pb.
    bool join(State& s, int pb, int pa, int mid, int& out) {
        if (pb == pa) {
            out = cat(s.pc[pb], mid);
            s.pc[pb] = -1;
            return true;
        }
        s.pc[pb] = cat(cat(s.pc[pb], mid), s.pc[pa]);
        s.pc[pa] = -1;
        for (auto& sh : s.sh) {
            if (sh.top == pa) sh.top = pb;
            if (sh.bot == pa) sh.bot = pb;
        }
        return false;
    }

    bool covered(State& n, std::size_t k) const {
        const auto& row = faces_.cell[k + 1];
        svec<int, 32> cc(row.size(), 0);
        for (const auto& s : n.sh)
            for (int j = s.l; j < s.u; ++j) {
                if (row[j] < 0) return false;
                ++cc[j];
            }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!cc[j]) continue;
            const int f = row[j];
            if (cc[j] > n.mf[f]) {
                n.area += (cc[j] - n.mf[f]) * area_[f];
                n.mf[f] = static_cast<std::uint8_t>(cc[j]);
            }
        }
        return true;
    }

    bool admissible(State& n, std::size_t k) const {
        if (!covered(n, k)) return false;
        const std::int64_t top = n.posk < 0 ? sufmax_[k] : h_[n.posk];
        return n.area + n.neg <= top;
    }

    void finish(const State& n, int rope) {
        std::vector<int> seq;
        flatten(rope, seq);
        std::size_t i = 0;
        int plus = 0;
        for (std::size_t j = 0; j < seq.size(); ++j)
            if (seq[j] < 0) { i = j; ++plus; }
        if (plus != 1) throw std::logic_error("disk boundary without a unique positive corner");
        if (n.area != h_[n.posk] - n.neg) throw std::logic_error("disk area does not match its corner heights");
        const int a = -1 - seq[i];
        std::vector<int> w(seq.begin() + i + 1, seq.end());
        w.insert(w.end(), seq.begin(), seq.begin() + i);
        found_[{a, w}] += Rational(1, n.den);
    }

    void step(std::size_t k, const State& st) {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
        if (k == ev_.size()) return;
        const auto& e = ev_[k];
        const std::size_t mark = rope_.size();
        if (e.type == 'B') birth(k, st, e.p);
        else if (e.type == 'D') tip(k, st, e.p);
        else crossing(k, st, e.p, e.gen);
        rope_.resize(mark);
    }

    void birth(std::size_t k, const State& st, int p) {
        svec<Sheet, 8> sh = st.sh;
        for (auto& s : sh) {
            if (s.l >= p) s.l += 2;
            if (s.u >= p) s.u += 2;
        }
        svec<int, 8> cand;
        for (int i = 0; i < static_cast<int>(sh.size()); ++i)
            if (sh[i].l < p && sh[i].u > p + 1) cand.push_back(i);
        for (int kb = 0;; ++kb) {
            bool any = false;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
                State n = st;
                n.sh.clear();
                std::size_t ci = 0;
                for (int i = 0; i < static_cast<int>(sh.size()); ++i) {
                    const Sheet s = sh[i];
                    const bool split = ci < cand.size() && cand[ci] == i && ((mask >> ci++) & 1);
                    if (split) {
                        const int q = newp(n);
                        n.sh.push_back({s.l, p, s.comp, q, s.bot});
                        n.sh.push_back({p + 1, s.u, s.comp, s.top, q});
                    } else {
                        n.sh.push_back(s);
                    }
                }
                for (int f = 2; f <= kb; ++f) n.den *= f;
                for (int b = 0; b < kb; ++b) {
                    const int q = newp(n);
                    n.sh.push_back({p, p + 1, newc(n), q, q});
                }
                if (admissible(n, k)) {
                    any = true;
                    step(k + 1, n);
                }
            }
            if (!any) break;
        }
    }

    void tip(std::size_t k, const State& st, int p) {
        for (const auto& s : st.sh)
            if ((s.u == p + 1 && s.l < p) || (s.l == p && s.u > p + 1)) return;
        svec<int, 8> T, Bt;
        for (int i = 0; i < static_cast<int>(st.sh.size()); ++i) {
            if (st.sh[i].u == p && st.sh[i].l < p) T.push_back(i);
            if (st.sh[i].l == p + 1 && st.sh[i].u > p + 1) Bt.push_back(i);
        }
        if (T.size() != Bt.size()) return;
        svec<int, 8> perm(Bt.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const std::size_t mark = rope_.size();
            svec<int, 8> partner(st.sh.size(), -1);
            svec<char, 8> is_bt(st.sh.size(), 0);
            for (std::size_t i = 0; i < T.size(); ++i) partner[T[i]] = Bt[perm[i]];
            for (int b : Bt) is_bt[b] = 1;
            State n = st;
            bool bad = false;
            int closed = -1;
            for (int a : T) {
                const Sheet A = n.sh[a], B = n.sh[partner[a]];
                const int ca = find(n, A.comp), cb = find(n, B.comp);
                if (ca == cb) { bad = true; break; }
                n.par[ca] = cb;
                if (join(n, B.bot, A.top, -1, closed)) { bad = true; break; }
            }
            if (!bad) {
                svec<Sheet, 8> merged;
                for (std::size_t i = 0; i < n.sh.size(); ++i) {
                    const Sheet s = n.sh[i];
                    if (partner[i] >= 0) {
                        const Sheet b = n.sh[partner[i]];
                        merged.push_back({s.l, b.u, s.comp, b.top, s.bot});
                    } else if (!is_bt[i]) {
                        merged.push_back(s);
                    }
                }
                n.sh = std::move(merged);
                int nclosed = 0, cyc = -1;
                for (std::size_t i = 0; i < n.sh.size();) {
                    const Sheet s = n.sh[i];
                    if (s.l == p && s.u == p + 1) {
                        n.sh.erase(n.sh.begin() + i);
                        int out;
                        if (join(n, s.bot, s.top, -1, out)) { ++nclosed; cyc = out; }
                        continue;
                    }
                    ++i;
                }
                for (auto& s : n.sh) {
                    if (s.l > p) s.l -= 2;
                    if (s.u > p) s.u -= 2;
                }
                if (nclosed) {
                    if (n.sh.empty() && nclosed == 1 && n.pos == 1) finish(n, cyc);
                } else if (admissible(n, k)) {
                    step(k + 1, n);
                }
            }
            rope_.resize(mark);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    struct Option { bool w; int l, u; bool ncorner, scorner; };

    void crossing(std::size_t k, const State& st, int p, int gen) {
        svec<svec<Option, 4>, 8> opts;
        for (const auto& s : st.sh) {
            svec<Option, 4> o;
            if (s.l == p && s.u == p + 1) {
                o.push_back({true, 0, 0, false, false});
            } else {
                svec<std::pair<int, bool>, 2> nl{{s.l, false}}, nu{{s.u, false}};
                if (s.u == p) nu = {{p + 1, false}, {p, true}};
                else if (s.u == p + 1) nu = {{p, false}};
                if (s.l == p + 1) nl = {{p, false}, {p + 1, true}};
                else if (s.l == p) nl = {{p + 1, false}};
                for (auto [a, ca] : nl)
                    for (auto [b, cb] : nu)
                        if (a < b) o.push_back({false, a, b, ca, cb});
            }
            if (o.empty()) return;
            opts.push_back(std::move(o));
        }
        const std::size_t m = opts.size();
        for (int birth = 0; birth <= 1; ++birth) {
            svec<std::size_t, 8> idx(m, 0);
            for (;;) {
                int nw = 0;
                for (std::size_t i = 0; i < m; ++i) nw += opts[i][idx[i]].w;
                const int npos = st.pos + birth + nw;
                if (npos <= 1) {
                    const std::size_t mark = rope_.size();
                    expand(k, st, p, gen, opts, idx, birth, npos);
                    rope_.resize(mark);
                }
                std::size_t i = 0;
                while (i < m && ++idx[i] == opts[i].size()) idx[i++] = 0;
                if (i == m) break;
            }
        }
    }

    template <class Opts, class Idx>
    void expand(std::size_t k, const State& st, int p, int gen, const Opts& opts, const Idx& idx, int birth, int npos) {
        State n = st;
        n.pos = npos;
        if (npos == 1 && st.pos == 0) n.posk = gen;
        svec<Sheet, 8> kept, dying;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            const Sheet s = st.sh[i];
            const Option& o = opts[i][idx[i]];
            if (o.w) { dying.push_back(s); continue; }
            if (o.ncorner) { n.pc[s.bot] = cat(n.pc[s.bot], leaf(gen)); n.neg += h_[gen]; }
            if (o.scorner) { n.pc[s.top] = cat(leaf(gen), n.pc[s.top]); n.neg += h_[gen]; }
            kept.push_back({o.l, o.u, s.comp, s.top, s.bot});
        }
        n.sh = kept;
        n.sh.insert(n.sh.end(), dying.begin(), dying.end());
        int nclosed = 0, cyc = -1;
        for (std::size_t j = 0; j < dying.size(); ++j) {
            const Sheet s = n.sh[kept.size() + j];
            int out;
            if (join(n, s.bot, s.top, leaf(-1 - gen), out)) { ++nclosed; cyc = out; }
        }
        n.sh.resize(kept.size());
        if (birth) {
            const int q = newp(n, leaf(-1 - gen));
            n.sh.push_back({p, p + 1, newc(n), q, q});
        }
        if (nclosed) {
            if (n.sh.empty() && nclosed == 1) finish(n, cyc);
            return;
        }
        if (n.sh.empty() && !n.pc.empty()) return;
        if (admissible(n, k)) step(k + 1, n);
    }

    const std::vector<SweepEvent>& ev_;
    const Faces& faces_;
    std::vector<std::int64_t> h_;
    std::vector<std::int64_t> area_;
    std::vector<std::int64_t> sufmax_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Rope> rope_;
    std::map<std::pair<int, std::vector<int>>, Rational> found_;
};

}  // namespace detail

inline constexpr std::uint64_t default_budget = 1000000;

// Complete list of admissible disks, sorted by (positive corner, word).
inline DiskSet admissible_disks(const LagrangianDiagram& l, std::uint64_t budget = default_budget) {
    const int nc = static_cast<int>(l.crossings.size());
    const Faces faces = compute_faces(l.events, nc);
    detail::DiskSearch search(l.events, faces, pruning_heights(faces, nc), budget);
    search.run();
    DiskSet out;
    out.nodes = search.nodes();
    for (const auto& [key, w] : search.found()) {
        if (denominator(w) != 1) throw std::logic_error("fractional disk count for " + l.crossings[key.first].name);
        out.disks.push_back({key.first, key.second, static_cast<std::int64_t>(numerator(w))});
    }
    return out;
}

}  // namespace legendrian
