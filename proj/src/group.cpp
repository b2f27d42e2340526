#include "tqft/group.hpp"
#include "tqft/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tqft {

int FiniteGroup::order_cap = 5040;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

// Greedy generating set by closure; small for every group we care about.
std::vector<int> generating_set(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    std::vector<char> in_closure(n, 0);
    in_closure[0] = 1;
    std::vector<int> closure{0}, gens;
    for (int g = 1; g < n; ++g) {
        if (in_closure[g]) continue;
        gens.push_back(g);
        // close under multiplication
        std::vector<int> frontier{g};
        in_closure[g] = 1;
        closure.push_back(g);
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (size_t i = 0; i < closure.size(); ++i) {
                for (int y : {t[x][closure[i]], t[closure[i]][x]}) {
                    if (!in_closure[y]) {
                        in_closure[y] = 1;
                        closure.push_back(y);
                        frontier.push_back(y);
                    }
                }
            }
        }
    }
    return gens;
}

} // namespace

void FiniteGroup::finalize(bool trusted) {
    n_ = static_cast<int>(cayley_.size());
    require(n_ >= 1, "group: empty Cayley table");
    require(n_ <= order_cap, "group: order " + std::to_string(n_) + " exceeds cap " +
                                 std::to_string(order_cap));
    for (auto& row : cayley_) {
        require(static_cast<int>(row.size()) == n_, "group: Cayley table is not square");
        for (int v : row) require(v >= 0 && v < n_, "group: table entry out of range");
    }
    // identity at index 0
    for (int x = 0; x < n_; ++x)
        require(cayley_[0][x] == x && cayley_[x][0] == x, "group: index 0 is not an identity");
    // rows and columns are permutations
    for (int a = 0; a < n_; ++a) {
        std::vector<char> seen_row(n_, 0), seen_col(n_, 0);
        for (int b = 0; b < n_; ++b) {
            if (seen_row[cayley_[a][b]]++) throw std::invalid_argument("group: row " + std::to_string(a) + " is not a permutation");
            if (seen_col[cayley_[b][a]]++) throw std::invalid_argument("group: column " + std::to_string(a) + " is not a permutation");
        }
    }
    // inverses
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (cayley_[a][b] == 0) { inverse_[a] = b; break; }
        require(inverse_[a] >= 0 && cayley_[inverse_[a]][a] == 0,
                "group: element " + std::to_string(a) + " has no two-sided inverse");
    }
    // associativity: exhaustive cubic check at small orders, Light's test above
    if (!trusted) {
        if (n_ <= 512) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c)
                        require(cayley_[cayley_[a][b]][c] == cayley_[a][cayley_[b][c]],
                                "group: non-associative table");
        } else {
            for (int g : generating_set(cayley_))
                for (int x = 0; x < n_; ++x)
                    for (int y = 0; y < n_; ++y)
                        require(cayley_[cayley_[g][x]][y] == cayley_[g][cayley_[x][y]],
                                "group: non-associative table (Light's test)");
        }
    }
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (cayley_[a][b] != cayley_[b][a]) { abelian_ = false; break; }
    // conjugacy classes, ordered by minimal member; class 0 = {identity}
    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        std::vector<int> orbit;
        std::vector<char> seen(n_, 0);
        for (int h = 0; h < n_; ++h) {
            int c = conjugate(g, h);
            if (!seen[c]) { seen[c] = 1; orbit.push_back(c); }
        }
        std::sort(orbit.begin(), orbit.end());
        int id = static_cast<int>(classes_.size());
        for (int x : orbit) class_of_[x] = id;
        classes_.push_back(ConjugacyClass{orbit.front(), std::move(orbit)});
    }
    for (const auto& cl : classes_)
        if (n_ % cl.size() != 0)
            throw invariant_error("class_size_divides_order",
                                  "class of size " + std::to_string(cl.size()) + " in group of order " + std::to_string(n_));
}

FiniteGroup FiniteGroup::from_cayley(std::string name, std::vector<std::vector<int>> cayley) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.cayley_ = std::move(cayley);
    g.finalize(/*trusted=*/false);
    return g;
}

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g;
    g.name_ = "trivial";
    g.cayley_ = {{0}};
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    require(n >= 1, "cyclic: n must be positive");
    FiniteGroup g;
    g.name_ = "Z" + std::to_string(n);
    g.cayley_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.cayley_[i][j] = (i + j) % n;
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
    require(n >= 1, "dihedral: n must be positive");
    // element i + n*j  <->  r^i s^j
    int m = 2 * n;
    FiniteGroup g;
    g.name_ = "D" + std::to_string(n);
    g.cayley_.assign(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        int i1 = a % n, j1 = a / n;
        for (int b = 0; b < m; ++b) {
            int i2 = b % n, j2 = b / n;
            int i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
            int j = (j1 + j2) % 2;
            g.cayley_[a][b] = i + n * j;
        }
    }
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    require(n >= 1 && n <= 7, "symmetric: n in 1..7 (order cap)");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    // lexicographic order puts the identity first
    std::map<std::vector<int>, int> rank;
    for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    FiniteGroup g;
    g.name_ = "S" + std::to_string(n);
    g.cayley_.assign(m, std::vector<int>(m));
    std::vector<int> comp(n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            g.cayley_[a][b] = rank[comp];
        }
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::quaternion8() {
    // order: 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int sign, int unit) { // unit 0..3 = 1,i,j,k
        return unit == 0 ? (sign > 0 ? 0 : 1) : 2 * unit + (sign > 0 ? 0 : 1);
    };
    // unit multiplication: (sign, unit)
    static const int us[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int uu[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    FiniteGroup g;
    g.name_ = "Q8";
    g.cayley_.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        int sa = (a == 0 || (a >= 2 && a % 2 == 0)) ? 1 : -1;
        int ua = a < 2 ? 0 : a / 2;
        for (int b = 0; b < 8; ++b) {
            int sb = (b == 0 || (b >= 2 && b % 2 == 0)) ? 1 : -1;
            int ub = b < 2 ? 0 : b / 2;
            g.cayley_[a][b] = enc(sa * sb * us[ua][ub], uu[ua][ub]);
        }
    }
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    long long m = static_cast<long long>(a.order()) * b.order();
    require(m <= order_cap, "product: order exceeds cap");
    FiniteGroup g;
    g.name_ = a.name() + "x" + b.name();
    int nb = b.order();
    g.cayley_.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            g.cayley_[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    g.finalize(true);
    return g;
}

FiniteGroup FiniteGroup::preset(const std::string& name, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        require(params.size() == k, "preset " + name + ": expected " + std::to_string(k) + " parameter(s)");
    };
    if (name == "trivial") { need(0); return trivial(); }
    if (name == "cyclic" || name == "Z") { need(1); return cyclic(params[0]); }
    if (name == "dihedral" || name == "D") { need(1); return dihedral(params[0]); }
    if (name == "symmetric" || name == "S") { need(1); return symmetric(params[0]); }
    if (name == "quaternion8" || name == "Q8") { need(0); return quaternion8(); }
    if (name == "product") {
        need(2);
        return product(cyclic(params[0]), cyclic(params[1]));
    }
    throw std::invalid_argument("unknown preset: " + name);
}

int Subgroup::index_of(int parent_element) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_element);
    if (it == elements.end() || *it != parent_element) return -1;
    return static_cast<int>(it - elements.begin());
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    require(!elements.empty() && elements.front() == 0, "subgroup: must contain the identity");
    require(G.order() % static_cast<int>(elements.size()) == 0, "subgroup: Lagrange violated");
    std::vector<int> pos(G.order(), -1);
    for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> tab(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        require(pos[G.inverse(elements[i])] >= 0, "subgroup: not closed under inverse");
        for (int j = 0; j < m; ++j) {
            int p = pos[G.mul(elements[i], elements[j])];
            require(p >= 0, "subgroup: not closed under product");
            tab[i][j] = p;
        }
    }
    Subgroup s;
    s.embedded_cayley = FiniteGroup::from_cayley(G.name() + "-sub" + std::to_string(m), std::move(tab));
    s.elements = std::move(elements);
    return s;
}

Subgroup centralizer(const FiniteGroup& G, int g) {
    require(g >= 0 && g < G.order(), "centralizer: element out of range");
    std::vector<int> elems;
    for (int h = 0; h < G.order(); ++h)
        if (G.mul(h, g) == G.mul(g, h)) elems.push_back(h);
    Subgroup s = make_subgroup(G, std::move(elems));
    long long cs = G.classes()[G.class_of(g)].size();
    if (static_cast<long long>(s.order()) * cs != G.order())
        throw invariant_error("orbit_stabilizer", "|Z(g)|*|class(g)| != |G|");
    return s;
}

ClassTensor class_structure_constants(const FiniteGroup& G) {
    const auto& cls = G.classes();
    int r = static_cast<int>(cls.size());
    ClassTensor t;
    t.r = r;
    t.n.assign(static_cast<size_t>(r) * r * r, 0);
    for (int c = 0; c < r; ++c) {
        int g = cls[c].representative;
        for (int b = 0; b < r; ++b)
            for (int h : cls[b].members) {
                int a = G.class_of(G.mul(g, G.inverse(h)));
                ++t.n[(static_cast<size_t>(a) * r + b) * r + c];
            }
    }
    return t;
}

} // namespace tqft
