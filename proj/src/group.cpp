#include "ttk/group.hpp"

#include "ttk/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ttk {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (int64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// returns p if n = p^k, else 0
int prime_power_base(int n) {
    if (n == 1) return 0;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        int m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0; // p is the smallest divisor, hence prime
    }
    return 0;
}

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(x) = f(g(x))
    std::vector<int> h(f.size());
    for (size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
    return h;
}

} // namespace

int Group::elt_order(Elt a) const {
    int n = 1;
    Elt x = a;
    while (x != 0) { x = mult(x, a); ++n; }
    return n;
}

int Group::exponent() const {
    int e = 1;
    for (Elt a = 0; a < order; ++a) e = std::lcm(e, elt_order(a));
    return e;
}

bool Group::is_abelian() const {
    for (Elt a = 0; a < order; ++a)
        for (Elt b = a + 1; b < order; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

void Group::validate() const {
    if (prime_power_base(order) != prime && order != 1)
        throw math_guard("NotPrimePower", "group order is not a power of the stored prime");
    for (Elt a = 0; a < order; ++a) {
        if (mult(0, a) != a || mult(a, 0) != a)
            throw math_guard("Inconsistent", "identity axiom failed");
        if (mult(a, inv(a)) != 0 || mult(inv(a), a) != 0)
            throw math_guard("Inconsistent", "inverse axiom failed");
    }
    if (order <= 64) {
        for (Elt a = 0; a < order; ++a)
            for (Elt b = 0; b < order; ++b)
                for (Elt c = 0; c < order; ++c)
                    if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                        throw math_guard("Inconsistent", "associativity failed");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, order - 1);
        for (int t = 0; t < 1000; ++t) {
            Elt a = d(rng), b = d(rng), c = d(rng);
            if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                throw math_guard("Inconsistent", "associativity failed on sample");
        }
    }
}

bool Subgroup::contains(Elt x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

bool Subgroup::contains_set(const Subgroup& other) const {
    return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    return elems < o.elems;
}

Subgroup closure(const Group& G, std::vector<Elt> gens) {
    std::vector<bool> in(G.order, false);
    std::vector<Elt> frontier = {0};
    in[0] = true;
    for (Elt g : gens)
        if (!in[g]) { in[g] = true; frontier.push_back(g); }
    // multiply until closed
    std::vector<Elt> all = frontier;
    for (size_t i = 0; i < all.size(); ++i)
        for (Elt g : gens) {
            Elt x = G.mult(all[i], g);
            if (!in[x]) { in[x] = true; all.push_back(x); }
            x = G.mult(g, all[i]);
            if (!in[x]) { in[x] = true; all.push_back(x); }
        }
    std::sort(all.begin(), all.end());
    return Subgroup{all};
}

Subgroup conjugate_subgroup(const Group& G, Elt g, const Subgroup& H) {
    std::vector<Elt> out;
    out.reserve(H.elems.size());
    for (Elt h : H.elems) out.push_back(G.conj(g, h));
    std::sort(out.begin(), out.end());
    return Subgroup{out};
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
    std::vector<Elt> out;
    for (Elt g = 0; g < G.order; ++g)
        if (conjugate_subgroup(G, g, H) == H) out.push_back(g);
    return Subgroup{out};
}

Subgroup centralizer(const Group& G, const Subgroup& H) {
    std::vector<Elt> out;
    for (Elt g = 0; g < G.order; ++g) {
        bool ok = true;
        for (Elt h : H.elems)
            if (G.mult(g, h) != G.mult(h, g)) { ok = false; break; }
        if (ok) out.push_back(g);
    }
    return Subgroup{out};
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    std::vector<Elt> out;
    std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                          std::back_inserter(out));
    return Subgroup{out};
}

bool is_normal(const Group& G, const Subgroup& H) {
    return normalizer(G, H).order() == G.order;
}

Elt coset_canon(const Group& G, Elt g, const Subgroup& K) {
    Elt best = G.order;
    for (Elt k : K.elems) best = std::min(best, G.mult(g, k));
    return best;
}

std::vector<Elt> coset_reps(const Group& G, const Subgroup& K) {
    std::vector<bool> seen(G.order, false);
    std::vector<Elt> reps;
    for (Elt g = 0; g < G.order; ++g) {
        if (seen[g]) continue;
        reps.push_back(g); // ascending scan => g is minimal in its coset
        for (Elt k : K.elems) seen[G.mult(g, k)] = true;
    }
    return reps;
}

GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::vector<std::vector<int>>>& generator_cycles,
                                 int order_bound) {
    if (degree < 1) throw invalid_input("MalformedCycle", "degree must be positive");
    std::vector<std::vector<int>> gens;
    for (const auto& cycles : generator_cycles) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        for (const auto& cyc : cycles) {
            std::vector<bool> used(degree, false);
            for (int pt : cyc) {
                if (pt < 1 || pt > degree)
                    throw invalid_input("MalformedCycle", "cycle point out of range");
                if (used[pt - 1]) throw invalid_input("MalformedCycle", "repeated point in cycle");
                used[pt - 1] = true;
            }
            for (size_t i = 0; i < cyc.size(); ++i)
                img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
        }
        // img must be a bijection; cycles on distinct points guarantee it per
        // cycle but overlapping cycles within one generator could collide
        std::vector<bool> hit(degree, false);
        for (int v : img) {
            if (hit[v]) throw invalid_input("MalformedCycle", "cycles overlap within one generator");
            hit[v] = true;
        }
        gens.push_back(img);
    }

    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elems;
    elems.insert(id);
    std::vector<std::vector<int>> frontier = {id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = compose_perm(x, g);
                if (elems.insert(y).second) {
                    next.push_back(y);
                    if ((int)elems.size() > order_bound)
                        throw invalid_input("OrderBoundExceeded", "closure exceeds the order bound");
                }
            }
        frontier = std::move(next);
    }

    int n = (int)elems.size();
    int p = prime_power_base(n);
    if (n > 1 && p == 0)
        throw invalid_input("NotPrimePower", "generated group order " + std::to_string(n) +
                                                 " is not a prime power");

    // std::set iteration is lexicographic; the identity is the lex-minimal
    // permutation, so it lands at index 0
    std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[sorted[i]] = i;

    auto G = std::make_shared<Group>();
    G->order = n;
    G->prime = (n == 1) ? 2 : p;
    G->perm_degree = degree;
    G->mult_table.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            G->mult_table[(size_t)a * n + b] = index.at(compose_perm(sorted[a], sorted[b]));
    G->inv_table.resize(n);
    for (int a = 0; a < n; ++a) {
        std::vector<int> invp(degree);
        for (int x = 0; x < degree; ++x) invp[sorted[a][x]] = x;
        G->inv_table[a] = index.at(invp);
    }
    for (const auto& g : gens) {
        G->generators.push_back(index.at(g));
        G->generator_perms.push_back(g);
    }
    G->validate();
    return G;
}

namespace {

using Cycles = std::vector<std::vector<int>>;

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
    if (A->perm_degree == 0 || B->perm_degree == 0)
        throw invalid_input("UnknownName", "direct product requires permutation-backed factors");
    int d = A->perm_degree + B->perm_degree;
    std::vector<Cycles> gens;
    auto to_cycles = [](const std::vector<int>& img, int offset) {
        Cycles cyc;
        std::vector<bool> seen(img.size(), false);
        for (size_t s = 0; s < img.size(); ++s) {
            if (seen[s] || img[s] == (int)s) continue;
            std::vector<int> c;
            int x = (int)s;
            while (!seen[x]) {
                seen[x] = true;
                c.push_back(x + 1 + offset);
                x = img[x];
            }
            cyc.push_back(c);
        }
        return cyc;
    };
    for (const auto& g : A->generator_perms) gens.push_back(to_cycles(g, 0));
    for (const auto& g : B->generator_perms) gens.push_back(to_cycles(g, A->perm_degree));
    return group_from_permutations(d, gens);
}

GroupPtr catalog_atom(const std::string& name) {
    auto cyclic = [](int n) {
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 1);
        return group_from_permutations(n, {{c}});
    };
    if (name == "Q8") {
        // i = (1 2 3 4)(5 6 7 8), j = (1 5 3 7)(2 8 4 6)
        return group_from_permutations(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}});
    }
    if (name == "SG32_43") {
        // holomorph of Z/8 on the 8 residues: a: x+1, b: -x, c: 3x
        return group_from_permutations(
            8, {{{1, 2, 3, 4, 5, 6, 7, 8}},
                {{2, 8}, {3, 7}, {4, 6}},
                {{2, 4}, {3, 7}, {6, 8}}});
    }
    if (name.size() >= 2 && name[0] == 'D') {
        int n = std::stoi(name.substr(1));
        if (n < 8 || (n & (n - 1)) != 0)
            throw invalid_input("UnknownName", "dihedral catalog groups are D{2^k}, k>=3: " + name);
        int m = n / 2;
        std::vector<int> rot(m);
        std::iota(rot.begin(), rot.end(), 1);
        Cycles refl;
        for (int i = 1; i <= m / 2; ++i) {
            int jj = m + 2 - i; // reflection x -> 2-x mod m on points 1..m
            if (jj > m) jj -= m;
            if (i < jj) refl.push_back({i, jj});
        }
        return group_from_permutations(m, {{rot}, refl});
    }
    if (name.size() >= 2 && name[0] == 'C') {
        int n = std::stoi(name.substr(1));
        if (n < 2 || prime_power_base(n) == 0)
            throw invalid_input("UnknownName", "cyclic catalog groups are C{p^k}: " + name);
        return cyclic(n);
    }
    if (name.size() >= 4 && name[0] == 'E') {
        auto rpos = name.find('r');
        if (rpos == std::string::npos) throw invalid_input("UnknownName", name);
        int p = std::stoi(name.substr(1, rpos - 1));
        int r = std::stoi(name.substr(rpos + 1));
        if (!is_prime(p) || r < 1 || r > 6) throw invalid_input("UnknownName", name);
        GroupPtr G = cyclic(p);
        for (int i = 1; i < r; ++i) G = direct_product(G, cyclic(p));
        return G;
    }
    throw invalid_input("UnknownName", "no catalog group named " + name);
}

} // namespace

GroupPtr catalog(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(ch);
    }
    parts.push_back(cur);
    GroupPtr G = catalog_atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) G = direct_product(G, catalog_atom(parts[i]));
    return G;
}

int SubgroupClassTable::class_of(const Subgroup& H) const {
    for (int i = 0; i < (int)classes.size(); ++i) {
        if (classes[i].rep.order() != H.order()) continue;
        for (const auto& m : classes[i].members)
            if (m == H) return i;
    }
    throw math_guard("Inconsistent", "subgroup not found in class table");
}

SubgroupClassTable enumerate_subgroups(const GroupPtr& Gp, int order_bound) {
    const Group& G = *Gp;
    if (G.order > order_bound)
        throw invalid_input("OrderBoundExceeded", "group too large for subgroup enumeration");

    // layered generation: extend each known subgroup by one element
    std::set<std::vector<Elt>> all;
    all.insert({0});
    std::vector<Subgroup> frontier = {Subgroup{{0}}};
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& H : frontier)
            for (Elt g = 1; g < G.order; ++g) {
                if (H.contains(g)) continue;
                std::vector<Elt> gens = H.elems;
                gens.push_back(g);
                Subgroup K = closure(G, gens);
                if (all.insert(K.elems).second) next.push_back(K);
            }
        frontier = std::move(next);
    }

    // conjugacy classes
    SubgroupClassTable tab;
    tab.G = Gp;
    std::set<std::vector<Elt>> assigned;
    std::vector<Subgroup> sorted_subs;
    for (const auto& e : all) sorted_subs.push_back(Subgroup{e});
    std::sort(sorted_subs.begin(), sorted_subs.end());
    for (const auto& H : sorted_subs) {
        if (assigned.count(H.elems)) continue;
        SubgroupClass cls;
        std::set<std::vector<Elt>> orbit;
        for (Elt g = 0; g < G.order; ++g) orbit.insert(conjugate_subgroup(G, g, H).elems);
        for (const auto& e : orbit) {
            assigned.insert(e);
            cls.members.push_back(Subgroup{e});
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.rep = cls.members.front();
        cls.normalizer_of_rep = normalizer(G, cls.rep);
        tab.classes.push_back(std::move(cls));
    }
    std::sort(tab.classes.begin(), tab.classes.end(),
              [](const SubgroupClass& a, const SubgroupClass& b) { return a.rep < b.rep; });

    int n = tab.num_classes();
    tab.leq.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (tab.classes[i].rep.order() > tab.classes[j].rep.order()) continue;
            for (const auto& m : tab.classes[i].members)
                if (tab.classes[j].rep.contains_set(m)) {
                    tab.leq[i][j] = true;
                    break;
                }
        }
    for (int i = 0; i < n; ++i) tab.weyl.push_back(weyl_group(Gp, tab.classes[i].rep));
    return tab;
}

WeylData weyl_group(const GroupPtr& Gp, const Subgroup& H) {
    const Group& G = *Gp;
    Subgroup N = normalizer(G, H);
    // cosets of H in N, sorted by canonical representative
    std::vector<Elt> reps;
    {
        std::set<Elt> seen;
        for (Elt n : N.elems) {
            if (seen.count(n)) continue;
            Elt c = coset_canon(G, n, H);
            reps.push_back(c);
            for (Elt h : H.elems) seen.insert(G.mult(n, h));
        }
        std::sort(reps.begin(), reps.end());
    }
    int w = (int)reps.size();
    std::map<Elt, int> rep_index;
    for (int i = 0; i < w; ++i) rep_index[reps[i]] = i;

    auto W = std::make_shared<Group>();
    W->order = w;
    W->prime = G.prime;
    W->mult_table.resize((size_t)w * w);
    W->inv_table.resize(w);
    for (int a = 0; a < w; ++a) {
        for (int b = 0; b < w; ++b)
            W->mult_table[(size_t)a * w + b] = rep_index.at(coset_canon(G, G.mult(reps[a], reps[b]), H));
        W->inv_table[a] = rep_index.at(coset_canon(G, G.inv(reps[a]), H));
    }
    // small generating set, greedily
    {
        Subgroup gen{{0}};
        for (Elt a = 1; a < w && gen.order() < w; ++a) {
            if (gen.contains(a)) continue;
            W->generators.push_back(a);
            gen = closure(*W, W->generators);
        }
    }

    WeylData wd;
    wd.W = W;
    wd.proj.assign(G.order, -1);
    for (Elt n : N.elems) wd.proj[n] = rep_index.at(coset_canon(G, n, H));
    wd.section = reps;
    return wd;
}

WeylData quotient_group(const GroupPtr& G, const Subgroup& N) {
    if (!is_normal(*G, N)) throw math_guard("Inconsistent", "quotient by a non-normal subgroup");
    return weyl_group(G, N);
}

namespace {

// quotient T/S as an abstract multiplication table, for invariant tests
struct SmallQuotient {
    int order;
    std::vector<int> mult;
    int exponent() const {
        int e = 1;
        for (int a = 0; a < order; ++a) {
            int o = 1, x = a;
            while (x != 0) { x = mult[x * order + a]; ++o; }
            e = std::lcm(e, o);
        }
        return e;
    }
    int involutions() const {
        int c = 0;
        for (int a = 1; a < order; ++a)
            if (mult[a * order + a] == 0) ++c;
        return c;
    }
};

SmallQuotient make_quotient(const Group& G, const Subgroup& T, const Subgroup& S) {
    std::vector<Elt> reps;
    std::set<Elt> seen;
    for (Elt t : T.elems) {
        if (seen.count(t)) continue;
        reps.push_back(coset_canon(G, t, S));
        for (Elt s : S.elems) seen.insert(G.mult(t, s));
    }
    std::sort(reps.begin(), reps.end());
    std::map<Elt, int> idx;
    for (int i = 0; i < (int)reps.size(); ++i) idx[reps[i]] = i;
    SmallQuotient q;
    q.order = (int)reps.size();
    q.mult.resize(q.order * q.order);
    for (int a = 0; a < q.order; ++a)
        for (int b = 0; b < q.order; ++b)
            q.mult[a * q.order + b] = idx.at(coset_canon(G, G.mult(reps[a], reps[b]), S));
    return q;
}

bool quotient_is_c4(const SmallQuotient& q) { return q.order == 4 && q.exponent() == 4; }
bool quotient_is_q8(const SmallQuotient& q) {
    return q.order == 8 && q.exponent() == 4 && q.involutions() == 1;
}
bool quotient_is_elemab(const SmallQuotient& q, int p) {
    return q.exponent() == p;
}

} // namespace

std::vector<SubquotientWitness> find_subquotients(const SubgroupClassTable& tab, SubqKind kind) {
    const Group& G = *tab.G;
    const int p = G.prime;

    // every subgroup, from the class members
    std::vector<Subgroup> subs;
    for (const auto& c : tab.classes)
        for (const auto& m : c.members) subs.push_back(m);
    std::sort(subs.begin(), subs.end());

    std::vector<SubquotientWitness> out;
    std::set<std::vector<std::vector<Elt>>> dedup; // by element lists of the tuple

    auto push = [&](SubquotientWitness w) {
        std::vector<std::vector<Elt>> key = {w.sub.elems, w.mid.elems, w.top.elems};
        if (dedup.insert(key).second) out.push_back(std::move(w));
    };

    if (kind == SubqKind::OrderP || kind == SubqKind::ElemAbRank2) {
        int target = (kind == SubqKind::OrderP) ? p : p * p;
        for (const auto& T : subs)
            for (const auto& S : subs) {
                if (S.order() * target != T.order()) continue;
                if (!T.contains_set(S)) continue;
                // S normal in T?
                bool nrm = true;
                for (Elt t : T.elems)
                    if (conjugate_subgroup(G, t, S) != S) { nrm = false; break; }
                if (!nrm) continue;
                if (kind == SubqKind::OrderP) {
                    push(SubquotientWitness{S, Subgroup{}, T, {}});
                } else {
                    auto q = make_quotient(G, T, S);
                    if (!quotient_is_elemab(q, p)) continue; // order p^2 abelian: C_p^2 iff exponent p
                    SubquotientWitness w{S, Subgroup{}, T, {}};
                    for (const auto& X : subs)
                        if (X.order() == S.order() * p && T.contains_set(X) && X.contains_set(S))
                            w.intermediates.push_back(X);
                    push(std::move(w));
                }
            }
        return out;
    }

    // chains H <| K <| L <= N_G(H), [K:H] = 2, L/H iso C4 or Q8.
    // (K/H is then the unique order-2 subgroup of L/H.)
    if (p != 2) return out;
    int lfactor = (kind == SubqKind::Cyclic4Chain) ? 4 : 8;
    for (const auto& H : subs) {
        Subgroup N = normalizer(G, H);
        for (const auto& L : subs) {
            if (L.order() != H.order() * lfactor) continue;
            if (!N.contains_set(L) || !L.contains_set(H)) continue;
            // H normal in L holds since L <= N_G(H)
            auto q = make_quotient(G, L, H);
            bool ok = (kind == SubqKind::Cyclic4Chain) ? quotient_is_c4(q) : quotient_is_q8(q);
            if (!ok) continue;
            for (const auto& K : subs) {
                if (K.order() != H.order() * 2) continue;
                if (!L.contains_set(K) || !K.contains_set(H)) continue;
                bool nrm = true; // K must be normal in... K/H the unique order-2 subgroup: normality in L automatic
                for (Elt t : K.elems)
                    if (conjugate_subgroup(G, t, H) != H) { nrm = false; break; }
                if (!nrm) continue;
                push(SubquotientWitness{H, K, L, {}});
            }
        }
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> parse_cycles_lines(const std::vector<std::string>& lines,
                                                              int degree) {
    std::vector<std::vector<std::vector<int>>> gens;
    for (const auto& line : lines) {
        std::vector<std::vector<int>> cycles;
        std::vector<int> cur;
        bool in_cycle = false;
        std::string num;
        auto flush_num = [&]() {
            if (!num.empty()) {
                cur.push_back(std::stoi(num));
                num.clear();
            }
        };
        for (char ch : line) {
            if (ch == '(') {
                if (in_cycle) throw invalid_input("MalformedCycle", "nested parenthesis");
                in_cycle = true;
                cur.clear();
            } else if (ch == ')') {
                if (!in_cycle) throw invalid_input("MalformedCycle", "unmatched parenthesis");
                flush_num();
                std::set<int> uniq(cur.begin(), cur.end());
                if (uniq.size() != cur.size())
                    throw invalid_input("MalformedCycle", "repeated point in cycle");
                if (cur.size() >= 2) cycles.push_back(cur);
                in_cycle = false;
            } else if (ch >= '0' && ch <= '9') {
                num.push_back(ch);
            } else if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\r') {
                flush_num();
            } else {
                throw invalid_input("MalformedCycle", std::string("unexpected character '") + ch + "'");
            }
        }
        if (in_cycle) throw invalid_input("MalformedCycle", "unterminated cycle");
        for (const auto& cyc : cycles)
            for (int pt : cyc)
                if (pt < 1 || pt > degree)
                    throw invalid_input("MalformedCycle", "cycle point exceeds the degree");
        if (!line.empty()) gens.push_back(cycles);
    }
    return gens;
}

std::string cycles_to_string(const std::vector<int>& img) {
    std::ostringstream os;
    std::vector<bool> seen(img.size(), false);
    bool any = false;
    for (size_t s = 0; s < img.size(); ++s) {
        if (seen[s] || img[s] == (int)s) continue;
        os << '(';
        int x = (int)s;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) os << ' ';
            os << (x + 1);
            first = false;
            x = img[x];
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

} // namespace ttk
