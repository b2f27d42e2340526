#include "tqft/cobordism.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tqft {

int atom_inputs(Atom a) {
    switch (a) {
        case Atom::Id: return 1;
        case Atom::Pants: return 2;
        case Atom::Copants: return 1;
        case Atom::Cap: return 0;
        case Atom::Cup: return 1;
        case Atom::Twist: return 2;
    }
    return 0;
}

int atom_outputs(Atom a) {
    switch (a) {
        case Atom::Id: return 1;
        case Atom::Pants: return 1;
        case Atom::Copants: return 2;
        case Atom::Cap: return 1;
        case Atom::Cup: return 0;
        case Atom::Twist: return 2;
    }
    return 0;
}

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::Id: return "id";
        case Atom::Pants: return "pants";
        case Atom::Copants: return "copants";
        case Atom::Cap: return "cap";
        case Atom::Cup: return "cup";
        case Atom::Twist: return "twist";
    }
    return "?";
}

Atom atom_from_name(const std::string& s) {
    if (s == "id") return Atom::Id;
    if (s == "pants") return Atom::Pants;
    if (s == "copants") return Atom::Copants;
    if (s == "cap") return Atom::Cap;
    if (s == "cup") return Atom::Cup;
    if (s == "twist") return Atom::Twist;
    throw std::invalid_argument("unknown cobordism atom: " + s);
}

CobordismWord CobordismWord::parse(std::istream& in) {
    CobordismWord w;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<Atom> slice;
        std::string tok;
        while (ls >> tok) slice.push_back(atom_from_name(tok));
        if (!slice.empty()) w.slices.push_back(std::move(slice));
    }
    return w;
}

CobordismWord CobordismWord::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string CobordismWord::format() const {
    std::string out;
    for (const auto& slice : slices) {
        for (size_t i = 0; i < slice.size(); ++i) {
            if (i) out += ' ';
            out += atom_name(slice[i]);
        }
        out += '\n';
    }
    return out;
}

std::pair<int, int> typecheck(const CobordismWord& w) {
    if (w.slices.empty()) return {0, 0};
    int in_circles = 0;
    for (Atom a : w.slices.front()) in_circles += atom_inputs(a);
    int cur = in_circles;
    for (size_t t = 0; t < w.slices.size(); ++t) {
        int need = 0, produce = 0;
        for (Atom a : w.slices[t]) {
            need += atom_inputs(a);
            produce += atom_outputs(a);
        }
        if (need != cur)
            throw std::invalid_argument("cobordism arity mismatch at slice " + std::to_string(t) +
                                        ": " + std::to_string(cur) + " circles feed a slice of total input arity " +
                                        std::to_string(need));
        cur = produce;
    }
    return {in_circles, cur};
}

namespace {

// State tensor: (width + n_in) axes of size d, row-major, the first `width`
// axes are the current outputs.  Atoms are applied to consecutive axes.
struct State {
    int d, width, n_in;
    std::vector<Cplx> v;
    std::size_t axes() const { return std::size_t(width + n_in); }
};

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Replace axes [p, p+a) by b new axes through the map
// M[out_multi][in_multi] (row-major, size d^b x d^a).
void apply_map(State& s, int p, int a, int b, const std::vector<Cplx>& M,
               const EvalLimits& limits) {
    std::size_t d = s.d;
    std::size_t pre = ipow(d, p);
    std::size_t mid_in = ipow(d, a), mid_out = ipow(d, b);
    std::size_t post = ipow(d, int(s.axes()) - p - a);
    std::size_t total = pre * mid_out * post;
    if (total > limits.entry_cap)
        throw std::invalid_argument("cobordism evaluation exceeds the entry cap (" +
                                    std::to_string(total) + " > " + std::to_string(limits.entry_cap) + ")");
    std::vector<Cplx> out(total, Cplx(0));
    for (std::size_t x = 0; x < pre; ++x)
        for (std::size_t o = 0; o < mid_out; ++o) {
            const Cplx* Mrow = M.data() + o * mid_in;
            for (std::size_t i = 0; i < mid_in; ++i) {
                Cplx m = Mrow[i];
                if (m == Cplx(0)) continue;
                const Cplx* src = s.v.data() + (x * mid_in + i) * post;
                Cplx* dst = out.data() + (x * mid_out + o) * post;
                for (std::size_t y = 0; y < post; ++y) dst[y] += m * src[y];
            }
        }
    s.v = std::move(out);
    s.width += b - a;
}

std::vector<Cplx> atom_tensor(Atom a, const FrobeniusAlgebra& A) {
    const int d = A.dim();
    switch (a) {
        case Atom::Id: return {};
        case Atom::Pants: {
            std::vector<Cplx> M(size_t(d) * d * d);
            for (int k = 0; k < d; ++k)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) M[(size_t(k) * d + i) * d + j] = A.mu(i, j, k);
            return M;
        }
        case Atom::Copants: {
            std::vector<Cplx> delta = comultiplication(A);
            std::vector<Cplx> M(size_t(d) * d * d);
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int i = 0; i < d; ++i)
                        M[(size_t(j) * d + k) * d + i] = delta[(size_t(i) * d + j) * d + k];
            return M;
        }
        case Atom::Cap: {
            std::vector<Cplx> M(d);
            for (int i = 0; i < d; ++i) M[i] = A.unit()[i];
            return M;
        }
        case Atom::Cup: {
            std::vector<Cplx> M(d);
            for (int i = 0; i < d; ++i) M[i] = A.trace_vector()[i];
            return M;
        }
        case Atom::Twist: {
            std::vector<Cplx> M(size_t(d) * d * d * d, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    M[((size_t(j) * d + i) * d + i) * d + j] = 1;
            return M;
        }
    }
    return {};
}

} // namespace

Eigen::MatrixXcd evaluate(const CobordismWord& w, const FrobeniusAlgebra& A,
                          const EvalLimits& limits) {
    auto [n_in, n_out] = typecheck(w);
    if (!A.commutative())
        throw std::invalid_argument("cobordism evaluation requires a commutative algebra");
    int max_width = n_in;
    {
        int cur = n_in;
        for (const auto& slice : w.slices) {
            int produce = 0;
            for (Atom a : slice) produce += atom_outputs(a);
            cur = produce;
            max_width = std::max(max_width, cur);
        }
    }
    if (max_width > limits.width_cap)
        throw std::invalid_argument("cobordism width " + std::to_string(max_width) +
                                    " exceeds the cap " + std::to_string(limits.width_cap));
    const int d = A.dim();
    if (ipow(std::size_t(d), max_width + n_in) > limits.entry_cap)
        throw std::invalid_argument("cobordism evaluation exceeds the entry cap");

    State s{d, n_in, n_in, {}};
    s.v.assign(ipow(std::size_t(d), 2 * n_in), Cplx(0));
    // identity tensor: out axes mirror in axes
    std::size_t block = ipow(std::size_t(d), n_in);
    for (std::size_t i = 0; i < block; ++i) s.v[i * block + i] = 1;

    for (const auto& slice : w.slices) {
        int p = 0;
        for (Atom a : slice) {
            if (a == Atom::Id) {
                p += 1;
                continue;
            }
            std::vector<Cplx> M = atom_tensor(a, A);
            apply_map(s, p, atom_inputs(a), atom_outputs(a), M, limits);
            p += atom_outputs(a);
        }
    }
    Eigen::MatrixXcd out(ipow(std::size_t(d), n_out), block);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
        for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = s.v[std::size_t(r) * block + c];
    return out;
}

CobordismWord closed_surface_word(int genus) {
    if (genus < 0) throw std::invalid_argument("closed_surface_word: genus must be nonnegative");
    CobordismWord w;
    w.slices.push_back({Atom::Cap});
    for (int g = 0; g < genus; ++g) {
        w.slices.push_back({Atom::Copants});
        w.slices.push_back({Atom::Pants});
    }
    w.slices.push_back({Atom::Cup});
    return w;
}

namespace {
double word_defect(const CobordismWord& a, const CobordismWord& b, const FrobeniusAlgebra& A) {
    Eigen::MatrixXcd va = evaluate(a, A), vb = evaluate(b, A);
    return (va - vb).cwiseAbs().maxCoeff();
}
} // namespace

RelationReport relation_suite(const FrobeniusAlgebra& A) {
    using W = CobordismWord;
    auto w = [](std::initializer_list<std::vector<Atom>> sl) { return W{std::vector<std::vector<Atom>>(sl)}; };
    const Atom I = Atom::Id, P = Atom::Pants, C = Atom::Copants, U = Atom::Cap, E = Atom::Cup,
               T = Atom::Twist;
    std::vector<std::pair<std::string, std::pair<W, W>>> rel = {
        {"associativity", {w({{P, I}, {P}}), w({{I, P}, {P}})}},
        {"unit_left", {w({{U, I}, {P}}), w({{I}})}},
        {"unit_right", {w({{I, U}, {P}}), w({{I}})}},
        {"counit_left", {w({{C}, {E, I}}), w({{I}})}},
        {"counit_right", {w({{C}, {I, E}}), w({{I}})}},
        {"coassociativity", {w({{C}, {C, I}}), w({{C}, {I, C}})}},
        {"frobenius_left", {w({{C, I}, {I, P}}), w({{P}, {C}})}},
        {"frobenius_right", {w({{I, C}, {P, I}}), w({{P}, {C}})}},
        {"commutativity", {w({{T}, {P}}), w({{P}})}},
        {"cocommutativity", {w({{C}, {T}}), w({{C}})}},
        {"twist_involution", {w({{T}, {T}}), w({{I, I}})}},
        {"twist_naturality", {w({{U, I}, {T}}), w({{I, U}})}},
    };
    RelationReport rep;
    for (auto& [name, pair] : rel) {
        double dft = word_defect(pair.first, pair.second, A);
        rep.defects.emplace_back(name, dft);
        rep.max_defect = std::max(rep.max_defect, dft);
    }
    return rep;
}

} // namespace tqft
