#include "edfforge/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "edfforge/valuation.hpp"

namespace edfforge {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1;
    base %= mod;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
    }
    return r;
}

bool is_primitive_root(std::int64_t g, std::int64_t p) {
    if (reduce_mod(g, p) == 0) return false;
    std::int64_t phi = p - 1;
    std::int64_t rest = phi;
    for (std::int64_t q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        if (pow_mod(g, phi / q, p) == 1) return false;
        while (rest % q == 0) rest /= q;
    }
    if (rest > 1 && pow_mod(g, phi / rest, p) == 1) return false;
    return true;
}

bool is_nonzero_square(std::int64_t a, std::int64_t p) {
    a = reduce_mod(a, p);
    return a != 0 && pow_mod(a, (p - 1) / 2, p) == 1;
}

// Cycle on vertex ids [first, first+m), edges in cyclic order.
void append_cycle_edges(std::vector<std::pair<int, int>>& edges, int first, int m) {
    for (int i = 0; i < m; ++i) edges.emplace_back(first + i, first + (i + 1) % m);
}

// Labelling shared by Theorem-style cycle valuations (m even):
// odd positions (i-1)/2, even positions m+1-i/2 up to m/2, then m-i/2.
std::vector<Label> even_cycle_labels(int m) {
    std::vector<Label> a(m);
    for (int i = 1; i <= m; ++i) {
        if (i % 2 == 1)
            a[i - 1] = (i - 1) / 2;
        else if (i <= m / 2)
            a[i - 1] = m + 1 - i / 2;
        else
            a[i - 1] = m - i / 2;
    }
    return a;
}

}  // namespace

LabelledGraph path_alpha(int m) {
    if (m < 2) throw std::invalid_argument("path_alpha: m must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    std::vector<Label> a(m);
    for (int i = 1; i <= m; ++i) a[i - 1] = (i % 2 == 1) ? (i - 1) / 2 : m - i / 2;
    return {Graph(m, std::move(edges)), Labelling(std::move(a))};
}

LabelledGraph complete_bipartite_alpha(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite_alpha: p,q must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
    std::vector<Label> a(p + q);
    for (int i = 0; i < p; ++i) a[i] = i;
    for (int j = 0; j < q; ++j) a[p + j] = static_cast<Label>(j + 1) * p;
    return {Graph(p + q, std::move(edges)), Labelling(std::move(a))};
}

LabelledGraph cycle_alpha(int m) {
    if (m < 4 || m % 4 != 0) throw std::invalid_argument("cycle_alpha: m must be 0 mod 4");
    std::vector<std::pair<int, int>> edges;
    append_cycle_edges(edges, 0, m);
    return {Graph(m, std::move(edges)), Labelling(even_cycle_labels(m))};
}

LabelledDigraph cycle_oriented_near_alpha(int m) {
    if (m < 6 || m % 4 != 2)
        throw std::invalid_argument("cycle_oriented_near_alpha: m must be 2 mod 4 and >= 6");
    Labelling a(even_cycle_labels(m));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < m; ++i) {
        if (a(i) < a(i + 1))
            arcs.emplace_back(i, i + 1);
        else
            arcs.emplace_back(i + 1, i);
    }
    arcs.emplace_back(m - 1, 0);  // closing arc reversed against the natural orientation
    return {Digraph(m, std::move(arcs)), std::move(a)};
}

LabelledGraph cyclotomic_near_alpha_tree(std::int64_t p) {
    if (p < 11 || !is_prime(p) || p % 8 == 1 || p % 8 == 7)
        throw std::invalid_argument(
            "cyclotomic_near_alpha_tree: p must be a prime >= 11 with p != +-1 mod 8");

    std::vector<Label> level1, level2;
    for (std::int64_t x = 1; x < p; ++x) {
        if (is_nonzero_square(x, p)) {
            if (2 * x > p)
                level1.push_back(x);
            else
                level2.push_back(x);
        } else {
            level1.push_back(x);
        }
    }
    std::sort(level1.begin(), level1.end());
    std::sort(level2.begin(), level2.end());

    std::vector<Label> labels{0};
    labels.insert(labels.end(), level1.begin(), level1.end());
    labels.insert(labels.end(), level2.begin(), level2.end());
    std::map<Label, int> id_of;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) id_of[labels[i]] = i;

    std::vector<std::pair<int, int>> edges;
    for (Label x : level1) edges.emplace_back(0, id_of[x]);
    for (Label s : level2) edges.emplace_back(id_of[2 * s], id_of[s]);  // 2s is a nonsquare
    return {Graph(static_cast<int>(labels.size()), std::move(edges)), Labelling(std::move(labels))};
}

LabelledDigraph star_path_oriented_beta(std::int64_t p, std::optional<std::int64_t> primitive) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("star_path_oriented_beta: p must be an odd prime");
    std::int64_t alpha;
    if (primitive) {
        alpha = reduce_mod(*primitive, p);
        if (!is_primitive_root(alpha, p))
            throw std::invalid_argument("star_path_oriented_beta: alpha is not primitive mod p");
    } else {
        alpha = 2;
        while (!is_primitive_root(alpha, p)) ++alpha;
    }

    const int m = static_cast<int>((p - 1) / 2);  // ids: root 0, u_i = 1+i, v_i = 1+m+i
    std::vector<Label> b(1 + 2 * m);
    b[0] = 0;
    const bool towards_u = is_nonzero_square(alpha - 1, p);
    std::int64_t power = 1;  // alpha^{2i}
    for (int i = 0; i < m; ++i) {
        std::int64_t even_pow = power;
        std::int64_t odd_pow = power * alpha % p;
        b[1 + i] = towards_u ? odd_pow : even_pow;
        b[1 + m + i] = towards_u ? even_pow : odd_pow;
        power = odd_pow * alpha % p;
    }

    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i) arcs.emplace_back(0, 1 + i);
    for (int i = 0; i < m; ++i) {
        if (towards_u)
            arcs.emplace_back(1 + m + i, 1 + i);
        else
            arcs.emplace_back(1 + i, 1 + m + i);
    }
    return {Digraph(1 + 2 * m, std::move(arcs)), Labelling(std::move(b))};
}

namespace {

LabelledGraph two_cycles(const std::vector<Label>& v, const std::vector<Label>& u) {
    const int m = static_cast<int>(v.size());
    std::vector<std::pair<int, int>> edges;
    append_cycle_edges(edges, 0, m);
    append_cycle_edges(edges, m, m);
    std::vector<Label> labels(v);
    labels.insert(labels.end(), u.begin(), u.end());
    return {Graph(2 * m, std::move(edges)), Labelling(std::move(labels))};
}

}  // namespace

LabelledGraph two_cycles_alpha(int k) {
    if (k < 1) throw std::invalid_argument("two_cycles_alpha: k must be >= 1");
    // Tabulated small cases; the closed form below is stated for k >= 4.
    if (k == 1) return two_cycles({0, 8, 1, 6}, {3, 7, 4, 5});
    if (k == 2) return two_cycles({0, 15, 1, 11, 2, 14, 3, 16}, {5, 12, 6, 10, 7, 9, 8, 13});
    if (k == 3)
        return two_cycles({0, 23, 1, 22, 2, 16, 3, 21, 4, 20, 5, 24},
                          {7, 18, 8, 17, 9, 15, 10, 14, 11, 13, 12, 19});

    const int m = 4 * k;
    std::vector<Label> v(m), u(m);
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0 && i <= 2 * k - 2)
            v[i] = 8 * k - i / 2;
        else if (i % 2 == 1 && i <= 2 * k - 1)
            v[i] = (i - 1) / 2;
        else if (i == 2 * k)
            v[i] = 5 * k + 1;
        else if (i % 2 == 0)
            v[i] = 8 * k - i / 2 + 1;
        else
            v[i] = (i - 1) / 2;
    }
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0 && i <= 2 * k - 2)
            u[i] = 6 * k + 1 - i / 2;
        else if (i % 2 == 1 && i <= 2 * k - 1)
            u[i] = 2 * k + 1 + (i - 1) / 2;
        else if (i == 2 * k)
            u[i] = 5 * k;
        else if (i % 2 == 0)
            u[i] = 6 * k - i / 2;
        else
            u[i] = 2 * k + 1 + (i - 1) / 2;
    }
    return two_cycles(v, u);
}

LabelledGraph two_cycles_alpha_4k2(int k) {
    if (k < 1) throw std::invalid_argument("two_cycles_alpha_4k2: k must be >= 1");
    if (k == 1) return two_cycles({0, 11, 1, 10, 4, 12}, {5, 9, 2, 7, 6, 8});

    const int m = 4 * k + 2;
    std::vector<Label> v(m), u(m);
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0 && i <= 2 * k - 2)
            v[i] = 2 * k + 2 + i / 2;
        else if (i % 2 == 1 && i <= 2 * k - 3)
            v[i] = 6 * k + 3 - (i - 1) / 2;
        else if (i % 2 == 1)
            v[i] = 6 * k + 3 + (i + 1) / 2;
        else
            v[i] = 2 * k - i / 2;
    }
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0 && i <= 2 * k + 2)
            u[i] = 5 * k + 4 - i / 2;
        else if (i % 2 == 1 && i <= 2 * k + 1)
            u[i] = 3 * k + 2 + (i - 1) / 2;
        else if (i % 2 == 1)
            u[i] = 3 * k + 1 - (i - 1) / 2;
        else
            u[i] = 5 * k + 2 + i / 2;
    }
    return two_cycles(v, u);
}

LabelledDigraph two_cycles_clockwise(int k, TwoCycleClass length_class) {
    LabelledGraph g = length_class == TwoCycleClass::len_4k ? two_cycles_alpha(k)
                                                            : two_cycles_alpha_4k2(k);
    const int m = g.graph.vertex_count() / 2;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i) arcs.emplace_back(i, (i + 1) % m);
    for (int i = 0; i < m; ++i) arcs.emplace_back(m + i, m + (i + 1) % m);
    return {Digraph(2 * m, std::move(arcs)), std::move(g.labelling)};
}

LabelledDigraph ladder_oriented(int k) {
    if (k < 1) throw std::invalid_argument("ladder_oriented: k must be >= 1");
    const int w = 2 * k + 1;  // ids: u_i = i, v_i = w+i
    std::vector<Label> a(2 * w);
    for (int i = 0; i <= k; ++i) {
        a[2 * i] = 2 * k + i;
        a[w + 2 * i] = 6 * k + 1 - i;
    }
    for (int i = 0; i < k; ++i) {
        a[2 * i + 1] = 4 * k - i;
        a[w + 2 * i + 1] = i;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < w; ++i) arcs.emplace_back(w + i, i);  // rungs bottom to top
    for (int i = 0; i + 1 < w; ++i) arcs.emplace_back(i, i + 1);
    for (int i = 0; i + 1 < w; ++i) arcs.emplace_back(w + i, w + i + 1);
    return {Digraph(2 * w, std::move(arcs)), Labelling(std::move(a))};
}

LabelledGraph sun_alpha(int k) {
    if (k < 1) throw std::invalid_argument("sun_alpha: k must be >= 1");
    const int c = 4 * k;  // ids: cycle v_i = i, pendant u_i = c+i
    std::vector<Label> a(2 * c);
    // Case-split intervals with empty ranges (lower bound above upper bound)
    // simply contribute nothing at small k; the fixed indices cover the rest.
    for (int i = 0; i < c; ++i) {
        if (i % 2 == 0 && i <= 2 * k - 2)
            a[i] = i / 2;
        else if (i % 2 == 1 && i <= 2 * k - 1)
            a[i] = 8 * k - (i + 1) / 2;
        else if (i % 2 == 0)
            a[i] = i / 2 + 2 * k - 1;
        else
            a[i] = 6 * k - (i + 1) / 2;
    }
    for (int i = 0; i < c; ++i) {
        if (i == 0)
            a[c + i] = 8 * k;
        else if (i == 2 * k - 1)
            a[c + i] = k;
        else if (i == 2 * k)
            a[c + i] = 5 * k;
        else if (i == 4 * k - 1)
            a[c + i] = 4 * k - 1;
        else if (i % 2 == 0 && i <= 2 * k - 2)
            a[c + i] = 6 * k - i / 2;
        else if (i % 2 == 1 && i <= 2 * k - 3)
            a[c + i] = 2 * k + (i - 1) / 2;
        else if (i % 2 == 0)
            a[c + i] = 8 * k - i / 2;
        else
            a[c + i] = (i + 1) / 2;
    }
    std::vector<std::pair<int, int>> edges;
    append_cycle_edges(edges, 0, c);
    for (int i = 0; i < c; ++i) edges.emplace_back(i, c + i);
    return {Graph(2 * c, std::move(edges)), Labelling(std::move(a))};
}

SemiDirectedSun sun_semi_directed(int k) {
    LabelledGraph sun = sun_alpha(k);
    const Labelling& a = sun.labelling;
    const int c = 4 * k;
    const Residue mod = 8 * k + 1;
    Digraph natural = natural_orientation(sun.graph, a);

    // Try both cycle directions; flip the cycle arcs that point the wrong
    // way, provided their labels form a negation-closed set.
    for (int dir = 0; dir < 2; ++dir) {
        std::set<Residue> flips;
        for (int i = 0; i < c; ++i) {
            int from = i, to = (i + 1) % c;
            if (dir == 1) std::swap(from, to);
            if (a(from) > a(to)) flips.insert(a(from) - a(to));
        }
        bool closed = true;
        for (Residue f : flips)
            if (!flips.count(reduce_mod(-f, mod))) closed = false;
        if (!closed) continue;

        Digraph flipped = flip_arcs(natural, a, flips);
        if (!check_oriented_near_alpha(flipped, a)) continue;
        for (int i = 0; i < c; ++i) {
            int from = i, to = (i + 1) % c;
            if (dir == 1) std::swap(from, to);
            if (!flipped.has_arc(from, to))
                throw std::logic_error("sun_semi_directed: cycle not unidirectional after flips");
        }
        return {std::move(flipped), a, std::vector<Residue>(flips.begin(), flips.end())};
    }
    throw std::runtime_error("sun_semi_directed: no negation-closed flip set found");
}

SetFamily unidirectional_path_family(int m, int l) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("unidirectional_path_family: m must be even and >= 2");
    if (l < 1) throw std::invalid_argument("unidirectional_path_family: l must be >= 1");
    const Residue n = static_cast<Residue>(m - 1) * l * l + 1;
    std::vector<ZSubset> sets;
    for (int i = 0; i < m; ++i) {
        std::vector<Residue> elems;
        for (int j = 0; j < l; ++j) {
            if (i % 2 == 0)
                elems.push_back(static_cast<Residue>(i) * l * l / 2 + static_cast<Residue>(j) * l);
            else
                elems.push_back(static_cast<Residue>(m - (i + 1) / 2) * l * l - j);
        }
        sets.emplace_back(n, std::move(elems));
    }
    return SetFamily(n, std::move(sets));
}

Digraph unidirectional_path(int m) {
    if (m < 2) throw std::invalid_argument("unidirectional_path: m must be >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < m; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(m, std::move(arcs));
}

}  // namespace edfforge
