#pragma once

// Unpruned reference enumeration of admissible disks, used to cross-check the
// library search. Same sweep model, plain data structures, no area bound, and
// a cap on the number of simultaneous sheets instead.

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <legendrian/lagrangian.hpp>

namespace oracle {

using legendrian::Rational;
using legendrian::SweepEvent;

// bounded[k][j]: gap j (between strands j-1 and j) after event k is a bounded face.
inline std::vector<std::vector<bool>> bounded_gaps(const std::vector<SweepEvent>& ev) {
    std::vector<int> parent;
    auto make = [&] {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    };
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    const int outside = make();
    std::vector<int> gaps{outside};
    std::vector<std::vector<int>> cols;
    for (const auto& e : ev) {
        const int p = e.p;
        std::vector<int> next;
        if (e.type == 'B') {
            for (int j = 0; j < p; ++j) next.push_back(gaps[j]);
            next.push_back(gaps[p]);
            next.push_back(make());
            next.push_back(gaps[p]);
            for (int j = p + 1; j < static_cast<int>(gaps.size()); ++j) next.push_back(gaps[j]);
        } else if (e.type == 'D') {
            for (int j = 0; j < p; ++j) next.push_back(gaps[j]);
            unite(gaps[p], gaps[p + 2]);
            next.push_back(gaps[p]);
            for (int j = p + 3; j < static_cast<int>(gaps.size()); ++j) next.push_back(gaps[j]);
        } else {
            next = gaps;
            next[p + 1] = make();
        }
        next.front() = outside;
        next.back() = outside;
        gaps = next;
        cols.push_back(gaps);
    }
    std::vector<std::vector<bool>> out;
    for (const auto& c : cols) {
        std::vector<bool> row;
        for (int g : c) row.push_back(find(g) != find(outside));
        out.push_back(row);
    }
    return out;
}

class ReferenceDisks {
public:
    ReferenceDisks(const std::vector<SweepEvent>& ev, int max_sheets, std::uint64_t max_nodes)
        : ev_(ev), bounded_(bounded_gaps(ev)), cap_(max_sheets), max_nodes_(max_nodes) {}

    std::map<std::pair<int, std::vector<int>>, Rational> run() {
        step(0, State{});
        return found_;
    }

private:
    struct Sheet { int l, u, comp, top, bot; };
    struct State {
        std::vector<Sheet> sh;
        std::vector<std::vector<int>> piece;
        std::vector<int> comp;
        int pos = 0;
        long long den = 1;
    };

    static int root(const State& s, int c) {
        while (s.comp[c] != c) c = s.comp[c];
        return c;
    }
    static int new_piece(State& s, std::vector<int> w = {}) {
        s.piece.push_back(std::move(w));
        return static_cast<int>(s.piece.size()) - 1;
    }
    static int new_comp(State& s) {
        s.comp.push_back(static_cast<int>(s.comp.size()));
        return s.comp.back();
    }
    // piece b, then mid, then piece a; true when b == a closes a cycle.
    static bool join(State& s, int b, int a, const std::vector<int>& mid, std::vector<int>& cycle) {
        if (a == b) {
            cycle = s.piece[b];
            cycle.insert(cycle.end(), mid.begin(), mid.end());
            s.piece[b].clear();
            return true;
        }
        auto& pb = s.piece[b];
        pb.insert(pb.end(), mid.begin(), mid.end());
        pb.insert(pb.end(), s.piece[a].begin(), s.piece[a].end());
        s.piece[a].clear();
        for (auto& sh : s.sh) {
            if (sh.top == a) sh.top = b;
            if (sh.bot == a) sh.bot = b;
        }
        return false;
    }

    bool inside(const State& s, std::size_t k) const {
        if (static_cast<int>(s.sh.size()) > cap_) return false;
        for (const auto& sh : s.sh)
            for (int g = sh.l + 1; g <= sh.u; ++g)
                if (!bounded_[k][g]) return false;
        return true;
    }

    void record(const State& s, const std::vector<int>& cycle) {
        int at = -1, count = 0;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (cycle[i] < 0) { at = static_cast<int>(i); ++count; }
        if (count != 1) throw std::logic_error("reference disk without a unique positive corner");
        std::vector<int> w(cycle.begin() + at + 1, cycle.end());
        w.insert(w.end(), cycle.begin(), cycle.begin() + at);
        found_[{-1 - cycle[at], w}] += Rational(1, s.den);
    }

    void step(std::size_t k, const State& s) {
        if (++nodes_ > max_nodes_) throw std::runtime_error("reference enumeration too large");
        if (k == ev_.size()) return;
        const auto& e = ev_[k];
        if (e.type == 'B') birth(k, s, e.p);
        else if (e.type == 'D') tip(k, s, e.p);
        else crossing(k, s, e.p, e.gen);
    }

    void birth(std::size_t k, const State& s, int p) {
        std::vector<Sheet> sh = s.sh;
        for (auto& x : sh) {
            if (x.l >= p) x.l += 2;
            if (x.u >= p) x.u += 2;
        }
        std::vector<int> across;
        for (int i = 0; i < static_cast<int>(sh.size()); ++i)
            if (sh[i].l < p && sh[i].u > p + 1) across.push_back(i);
        for (int kb = 0; static_cast<int>(sh.size()) + kb <= cap_; ++kb)
            for (unsigned mask = 0; mask < (1u << across.size()); ++mask) {
                State n = s;
                n.sh.clear();
                for (int i = 0; i < static_cast<int>(sh.size()); ++i) {
                    const auto it = std::find(across.begin(), across.end(), i);
                    if (it != across.end() && (mask >> (it - across.begin())) & 1) {
                        const int q = new_piece(n);
                        n.sh.push_back({sh[i].l, p, sh[i].comp, q, sh[i].bot});
                        n.sh.push_back({p + 1, sh[i].u, sh[i].comp, sh[i].top, q});
                    } else {
                        n.sh.push_back(sh[i]);
                    }
                }
                for (int b = 0; b < kb; ++b) {
                    const int q = new_piece(n);
                    n.sh.push_back({p, p + 1, new_comp(n), q, q});
                    n.den *= b + 1;
                }
                if (inside(n, k)) step(k + 1, n);
            }
    }

    void tip(std::size_t k, const State& s, int p) {
        std::vector<int> below, above;
        for (int i = 0; i < static_cast<int>(s.sh.size()); ++i) {
            const Sheet& x = s.sh[i];
            if ((x.u == p + 1 && x.l < p) || (x.l == p && x.u > p + 1)) return;
            if (x.u == p && x.l < p) below.push_back(i);
            if (x.l == p + 1 && x.u > p + 1) above.push_back(i);
        }
        if (below.size() != above.size()) return;
        std::vector<int> perm(above.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            State n = s;
            std::vector<int> cycle;
            bool ok = true;
            for (std::size_t i = 0; i < below.size() && ok; ++i) {
                const Sheet a = n.sh[below[i]], b = n.sh[above[perm[i]]];
                const int ra = root(n, a.comp), rb = root(n, b.comp);
                if (ra == rb || join(n, b.bot, a.top, {}, cycle)) ok = false;
                else n.comp[ra] = rb;
            }
            if (!ok) continue;
            std::vector<Sheet> next;
            for (int i = 0; i < static_cast<int>(n.sh.size()); ++i) {
                const auto bi = std::find(below.begin(), below.end(), i);
                if (bi != below.end()) {
                    const Sheet& b = n.sh[above[perm[bi - below.begin()]]];
                    next.push_back({n.sh[i].l, b.u, n.sh[i].comp, b.top, n.sh[i].bot});
                } else if (std::find(above.begin(), above.end(), i) == above.end()) {
                    next.push_back(n.sh[i]);
                }
            }
            n.sh = next;
            int closed = 0;
            for (;;) {
                auto it = std::find_if(n.sh.begin(), n.sh.end(), [&](const Sheet& x) { return x.l == p && x.u == p + 1; });
                if (it == n.sh.end()) break;
                const Sheet x = *it;
                n.sh.erase(it);
                std::vector<int> c;
                if (join(n, x.bot, x.top, {}, c)) { ++closed; cycle = c; }
            }
            shift_down(n, p);
            if (closed) {
                if (n.sh.empty() && closed == 1 && n.pos == 1) record(n, cycle);
            } else if (inside(n, k)) {
                step(k + 1, n);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    static void shift_down(State& n, int p) {
        for (auto& x : n.sh) {
            if (x.l > p) x.l -= 2;
            if (x.u > p) x.u -= 2;
        }
    }

    struct Choice { bool dies; int l, u; bool low_corner, high_corner; };

    void crossing(std::size_t k, const State& s, int p, int gen) {
        std::vector<std::vector<Choice>> opts;
        for (const auto& x : s.sh) {
            std::vector<Choice> o;
            if (x.l == p && x.u == p + 1) {
                o.push_back({true, 0, 0, false, false});
            } else {
                std::vector<std::pair<int, bool>> ls{{x.l, false}}, us{{x.u, false}};
                if (x.u == p) us = {{p + 1, false}, {p, true}};
                else if (x.u == p + 1) us = {{p, false}};
                if (x.l == p + 1) ls = {{p, false}, {p + 1, true}};
                else if (x.l == p) ls = {{p + 1, false}};
                for (auto [a, ca] : ls)
                    for (auto [b, cb] : us)
                        if (a < b) o.push_back({false, a, b, ca, cb});
            }
            if (o.empty()) return;
            opts.push_back(o);
        }
        std::vector<std::size_t> idx(opts.size(), 0);
        for (;;) {
            for (int born = 0; born <= 1; ++born) apply(k, s, p, gen, opts, idx, born);
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == opts[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }

    void apply(std::size_t k, const State& s, int p, int gen, const std::vector<std::vector<Choice>>& opts,
               const std::vector<std::size_t>& idx, int born) {
        State n = s;
        int dies = 0;
        for (std::size_t i = 0; i < opts.size(); ++i) dies += opts[i][idx[i]].dies;
        n.pos = s.pos + dies + born;
        if (n.pos > 1) return;
        std::vector<Sheet> kept, dying;
        for (std::size_t i = 0; i < opts.size(); ++i) {
            const Sheet x = s.sh[i];
            const Choice& c = opts[i][idx[i]];
            if (c.dies) { dying.push_back(x); continue; }
            if (c.low_corner) n.piece[x.bot].push_back(gen);
            if (c.high_corner) n.piece[x.top].insert(n.piece[x.top].begin(), gen);
            kept.push_back({c.l, c.u, x.comp, x.top, x.bot});
        }
        n.sh = kept;
        n.sh.insert(n.sh.end(), dying.begin(), dying.end());
        int closed = 0;
        std::vector<int> cycle;
        for (std::size_t j = 0; j < dying.size(); ++j) {
            const Sheet x = n.sh[kept.size() + j];
            std::vector<int> c;
            if (join(n, x.bot, x.top, {-1 - gen}, c)) { ++closed; cycle = c; }
        }
        n.sh.resize(kept.size());
        if (born) {
            const int q = new_piece(n, {-1 - gen});
            n.sh.push_back({p, p + 1, new_comp(n), q, q});
        }
        if (closed) {
            if (n.sh.empty() && closed == 1) record(n, cycle);
            return;
        }
        if (n.sh.empty() && !n.piece.empty()) return;
        if (inside(n, k)) step(k + 1, n);
    }

    const std::vector<SweepEvent>& ev_;
    std::vector<std::vector<bool>> bounded_;
    int cap_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::map<std::pair<int, std::vector<int>>, Rational> found_;
};

}  // namespace oracle
