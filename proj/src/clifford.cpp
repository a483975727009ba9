#include "hsdirac/clifford.hpp"

#include "hsdirac/errors.hpp"

#include <algorithm>
#include <functional>

namespace hsdirac {

namespace {

ExactMatrix pauli(int which) {
    ExactMatrix m(2, 2);
    switch (which) {
        case 1:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case 2:
            m(0, 1) = -ComplexRational::i();
            m(1, 0) = ComplexRational::i();
            break;
        default:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

ExactMatrix kron_chain(const std::vector<ExactMatrix>& factors) {
    ExactMatrix r = ExactMatrix::identity(1);
    for (const auto& f : factors) r = kron(r, f);
    return r;
}

// Sign of the permutation sorting `v`, or 0 if v has a repeated entry.
int sort_with_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) return 0;
    return sign;
}

unsigned long mask_of(const std::vector<int>& s) {
    unsigned long m = 0;
    for (int x : s) m |= 1UL << x;
    return m;
}

// Places `block` (dim_s x dim_s) scaled by `coef` at block position (row, col).
void add_block(ExactMatrix& m, std::size_t row, std::size_t col, std::size_t dim_s, const ExactMatrix& block,
               const ComplexRational& coef) {
    for (std::size_t a = 0; a < dim_s; ++a)
        for (std::size_t b = 0; b < dim_s; ++b)
            if (!block(a, b).is_zero()) m(row * dim_s + a, col * dim_s + b) += coef * block(a, b);
}

}  // namespace

CliffordRep gamma_matrices(int n, int cap) {
    if (n < 2) throw OutOfRange("gamma_matrices: n must be >= 2");
    if (n > cap) {
        throw CapExceeded("gamma_matrices: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    }
    const int m = n / 2;
    CliffordRep rep;
    rep.n = n;
    rep.dim_s = std::size_t{1} << m;
    const ExactMatrix one = ExactMatrix::identity(2);
    std::vector<ExactMatrix> hermitian;
    for (int p = 1; p <= m; ++p) {
        for (int which : {1, 2}) {
            std::vector<ExactMatrix> f(static_cast<std::size_t>(p - 1), pauli(3));
            f.push_back(pauli(which));
            f.insert(f.end(), static_cast<std::size_t>(m - p), one);
            hermitian.push_back(kron_chain(f));
        }
    }
    const ExactMatrix volume = kron_chain(std::vector<ExactMatrix>(static_cast<std::size_t>(m), pauli(3)));
    if (n % 2) {
        hermitian.push_back(volume);
    } else {
        rep.chirality = volume;
    }
    for (auto& g : hermitian) rep.gammas.push_back(ComplexRational::i() * g);
    return rep;
}

FormSpinorSpace::FormSpinorSpace(int n, int k_form, std::size_t dim_s) : n_(n), k_(k_form), dim_s_(dim_s) {
    if (k_form < 0 || k_form > n) throw OutOfRange("FormSpinorSpace: k_form out of range");
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == k_form) {
            by_mask_[mask_of(cur)] = subsets_.size();
            subsets_.push_back(cur);
            return;
        }
        for (int x = next; x < n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

long FormSpinorSpace::position(const std::vector<int>& sorted_subset) const {
    if (static_cast<int>(sorted_subset.size()) != k_) return -1;
    const auto it = by_mask_.find(mask_of(sorted_subset));
    return it == by_mask_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<ExactMatrix> so_action(const CliffordRep& rep, int k_form) {
    const FormSpinorSpace space(rep.n, k_form, rep.dim_s);
    const std::size_t forms = space.subset_count();
    const ExactMatrix id_s = ExactMatrix::identity(rep.dim_s);
    const ExactMatrix id_forms = ExactMatrix::identity(forms);
    std::vector<ExactMatrix> out;
    for (int a = 0; a < rep.n; ++a) {
        for (int b = a + 1; b < rep.n; ++b) {
            ExactMatrix form_part(forms, forms);
            for (std::size_t pos = 0; pos < forms; ++pos) {
                const auto& subset = space.subset(pos);
                for (std::size_t r = 0; r < subset.size(); ++r) {
                    int coef = 0;
                    int replacement = 0;
                    if (subset[r] == a) {
                        coef = 1;
                        replacement = b;
                    } else if (subset[r] == b) {
                        coef = -1;
                        replacement = a;
                    } else {
                        continue;
                    }
                    auto image = subset;
                    image[r] = replacement;
                    const int sign = sort_with_sign(image);
                    if (sign == 0) continue;
                    form_part(static_cast<std::size_t>(space.position(image)), pos) += coef * sign;
                }
            }
            ExactMatrix spin_part = multiply(rep.gammas[a], rep.gammas[b]);
            spin_part *= ComplexRational(Rational(1, 2));
            out.push_back(kron(form_part, id_s) + kron(id_forms, spin_part));
        }
    }
    return out;
}

ExactMatrix casimir_matrix(const CliffordRep& rep, int k_form) {
    const auto gens = so_action(rep, k_form);
    const std::size_t dim = FormSpinorSpace(rep.n, k_form, rep.dim_s).dimension();
    ExactMatrix c(dim, dim);
    for (const auto& l : gens) c -= multiply(l, l);
    return c;
}

ExactMatrix y_matrix(const CliffordRep& rep, int k_form) {
    if (k_form < 1 || k_form > rep.n) throw OutOfRange("y_matrix: need 1 <= k_form <= n");
    const FormSpinorSpace from(rep.n, k_form, rep.dim_s);
    const FormSpinorSpace to(rep.n, k_form - 1, rep.dim_s);
    ExactMatrix y(to.dimension(), from.dimension());
    for (std::size_t pos = 0; pos < from.subset_count(); ++pos) {
        const auto& subset = from.subset(pos);
        for (std::size_t r = 0; r < subset.size(); ++r) {
            // ι(e_i) removes e_i from position r with sign (-1)^r
            auto rest = subset;
            rest.erase(rest.begin() + static_cast<long>(r));
            const int sign = r % 2 ? -1 : 1;
            add_block(y, static_cast<std::size_t>(to.position(rest)), pos, rep.dim_s,
                      rep.gammas[static_cast<std::size_t>(subset[r])], ComplexRational(-sign));
        }
    }
    return y;
}

ExactMatrix exterior_matrix(const CliffordRep& rep, int k_form, int i) {
    if (k_form < 0 || k_form >= rep.n) throw OutOfRange("exterior_matrix: need 0 <= k_form < n");
    if (i < 0 || i >= rep.n) throw OutOfRange("exterior_matrix: coordinate index out of range");
    const FormSpinorSpace from(rep.n, k_form, rep.dim_s);
    const FormSpinorSpace to(rep.n, k_form + 1, rep.dim_s);
    const ExactMatrix id_s = ExactMatrix::identity(rep.dim_s);
    ExactMatrix e(to.dimension(), from.dimension());
    for (std::size_t pos = 0; pos < from.subset_count(); ++pos) {
        auto image = from.subset(pos);
        image.insert(image.begin(), i);
        const int sign = sort_with_sign(image);
        if (sign == 0) continue;
        add_block(e, static_cast<std::size_t>(to.position(image)), pos, rep.dim_s, id_s, ComplexRational(sign));
    }
    return e;
}

namespace {

std::vector<EkjProjector> build_projectors(const CliffordRep& rep, int k_form, const ExactMatrix& casimir) {
    const auto comps = spinor_form_components(GroupId(rep.n), k_form);
    std::vector<Rational> eigen;
    for (const auto& c : comps) eigen.push_back(casimir_scalar(c.weights.front()));
    for (std::size_t a = 0; a < eigen.size(); ++a)
        for (std::size_t b = a + 1; b < eigen.size(); ++b)
            if (eigen[a] == eigen[b]) {
                throw DegenerateCasimir("ekj_projectors: E^{k," + std::to_string(comps[a].j) + "} and E^{k," +
                                        std::to_string(comps[b].j) + "} share Casimir " + eigen[a].to_string());
            }
    auto projectors = lagrange_projectors(casimir, eigen);
    std::vector<EkjProjector> out;
    for (std::size_t a = 0; a < comps.size(); ++a) {
        const std::size_t rank = bareiss_rank(projectors[a]);
        out.push_back({comps[a].j, eigen[a], std::move(projectors[a]), rank, comps[a].dimension});
    }
    return out;
}

}  // namespace

std::vector<EkjProjector> ekj_projectors(const CliffordRep& rep, int k_form) {
    return build_projectors(rep, k_form, casimir_matrix(rep, k_form));
}

const ExactMatrix& CliffordWorkspace::casimir(int k_form) {
    auto it = casimir_.find(k_form);
    if (it == casimir_.end()) it = casimir_.emplace(k_form, casimir_matrix(rep_, k_form)).first;
    return it->second;
}

const std::vector<EkjProjector>& CliffordWorkspace::projectors(int k_form) {
    auto it = projectors_.find(k_form);
    if (it == projectors_.end()) it = projectors_.emplace(k_form, build_projectors(rep_, k_form, casimir(k_form))).first;
    return it->second;
}

const ExactMatrix& CliffordWorkspace::projector(int k_form, int j) {
    for (const auto& p : projectors(k_form))
        if (p.j == j) return p.projector;
    throw OutOfRange("no component E^{" + std::to_string(k_form) + "," + std::to_string(j) + "}");
}

ExactMatrix CliffordWorkspace::project(int k_form, int j, const ExactMatrix& x) {
    const auto& ps = projectors(k_form);
    const auto target = std::find_if(ps.begin(), ps.end(), [j](const EkjProjector& p) { return p.j == j; });
    if (target == ps.end()) {
        throw OutOfRange("no component E^{" + std::to_string(k_form) + "," + std::to_string(j) + "}");
    }
    const ExactMatrix& c = casimir(k_form);
    ExactMatrix acc = x;
    Rational denom = 1;
    for (const auto& p : ps) {
        if (p.j == j) continue;
        ExactMatrix shifted = c;
        shifted.add_scalar(-p.casimir);
        acc = multiply(shifted, acc);
        denom *= target->casimir - p.casimir;
    }
    acc *= ComplexRational(denom.inverse());
    return acc;
}

const ExactMatrix& CliffordWorkspace::y(int k_form) {
    auto it = y_.find(k_form);
    if (it == y_.end()) it = y_.emplace(k_form, y_matrix(rep_, k_form)).first;
    return it->second;
}

const std::vector<ExactMatrix>& CliffordWorkspace::generators(int k_form) {
    auto it = generators_.find(k_form);
    if (it == generators_.end()) it = generators_.emplace(k_form, so_action(rep_, k_form)).first;
    return it->second;
}

bool symbol_nontrivial(CliffordWorkspace& ws, int j) {
    if (j < 0 || 2 * (j + 1) > ws.n()) {
        throw OutOfRange("symbol_nontrivial: need 0 <= j <= n/2 - 1, got j=" + std::to_string(j));
    }
    const ExactMatrix& source = ws.projector(j, j);
    for (int i = 0; i < ws.n(); ++i) {
        const ExactMatrix moved = multiply(exterior_matrix(ws.rep(), j, i), source);
        if (!ws.project(j + 1, j + 1, moved).is_zero()) return true;
    }
    return false;
}

bool symbol_nontrivial(const CliffordRep& rep, int j) {
    CliffordWorkspace ws(rep);
    return symbol_nontrivial(ws, j);
}

bool exterior_component_vanishes(CliffordWorkspace& ws, int k_form, int j_from, int j_to) {
    const ExactMatrix& source = ws.projector(k_form, j_from);
    for (int i = 0; i < ws.n(); ++i) {
        const ExactMatrix moved = multiply(exterior_matrix(ws.rep(), k_form, i), source);
        if (!ws.project(k_form + 1, j_to, moved).is_zero()) return false;
    }
    return true;
}

std::vector<OracleCheck> run_clifford_checks(int n, int cap) {
    CliffordWorkspace ws(gamma_matrices(n, cap));
    const CliffordRep& rep = ws.rep();
    const GroupId group(n);
    const ExactMatrix id_s = ExactMatrix::identity(rep.dim_s);
    std::vector<OracleCheck> out;
    auto record = [&](std::string name, int k, int j, bool ok, std::string detail = {}) {
        out.push_back({std::move(name), n, k, j, ok, std::move(detail)});
    };

    {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                ExactMatrix anti = multiply(rep.gammas[a], rep.gammas[b]) + multiply(rep.gammas[b], rep.gammas[a]);
                if (a == b) anti.add_scalar(2);
                ok = ok && anti.is_zero();
            }
        record("clifford relations e_a e_b + e_b e_a = -2 delta", -1, -1, ok);
    }
    {
        bool ok = true;
        for (const auto& g : rep.gammas) ok = ok && multiply(g, g.adjoint()) == id_s;
        record("generators unitary", -1, -1, ok);
    }
    if (rep.chirality) {
        const ExactMatrix& chi = *rep.chirality;
        bool ok = multiply(chi, chi) == id_s && chi.trace().is_zero();
        for (std::size_t a = 0; a < rep.dim_s; ++a)
            for (std::size_t b = 0; b < rep.dim_s; ++b) ok = ok && (a == b || chi(a, b).is_zero());
        for (const auto& g : rep.gammas) ok = ok && (multiply(chi, g) + multiply(g, chi)).is_zero();
        record("chirality diagonal, squares to 1, traceless, anticommutes", -1, -1, ok);
    } else {
        ExactMatrix vol = id_s;
        for (const auto& g : rep.gammas) vol = multiply(vol, g);
        const ComplexRational c = vol(0, 0);
        ExactMatrix scalar = id_s;
        scalar *= c;
        record("volume element is central scalar", -1, -1, vol == scalar && !c.is_zero(), "e_1...e_n = " + c.to_string());
    }
    {
        const Rational want = casimir_scalar(spinor_weights(group).front());
        ExactMatrix expect = id_s;
        expect *= ComplexRational(want);
        record("casimir on S equals casimir_scalar(sigma)", 0, -1, casimir_matrix(rep, 0) == expect, want.to_string());
    }
    {
        const int k = std::min(1, n);
        const auto& gens = ws.generators(k);
        auto gen = [&](int a, int b) -> const ExactMatrix& {
            // lexicographic index of the pair a < b
            std::size_t idx = 0;
            for (int x = 0; x < a; ++x) idx += static_cast<std::size_t>(n - 1 - x);
            return gens[idx + static_cast<std::size_t>(b - a - 1)];
        };
        bool ok = true;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) ok = ok && commutator(gen(a, b), gen(a, c)) == gen(b, c);
        record("so(n) bracket [L_ab, L_ac] = L_bc", k, -1, ok);
    }

    for (int k = 0; k <= n; ++k) {
        const auto& ps = ws.projectors(k);
        const std::size_t dim = FormSpinorSpace(n, k, rep.dim_s).dimension();
        ExactMatrix sum(dim, dim);
        std::size_t rank_sum = 0;
        for (const auto& p : ps) {
            record("projector rank equals dim E^{k,j}", k, p.j, BigInt(static_cast<unsigned long>(p.rank)) == p.predicted_dim,
                   "rank " + std::to_string(p.rank) + ", predicted " + p.predicted_dim.get_str());
            sum += p.projector;
            rank_sum += p.rank;
        }
        const BigInt expected = binomial(n, k) * spinor_dim(group);
        record("projector ranks sum to C(n,k) dim S", k, -1, BigInt(static_cast<unsigned long>(rank_sum)) == expected,
               std::to_string(rank_sum) + " vs " + expected.get_str());
        record("projectors sum to identity", k, -1, sum == ExactMatrix::identity(dim));

        bool equivariant = true;
        for (const auto& l : ws.generators(k))
            for (const auto& p : ps) equivariant = equivariant && multiply(l, p.projector) == multiply(p.projector, l);
        record("projectors commute with so(n)", k, -1, equivariant);

        if (k >= 1) {
            const ExactMatrix& y = ws.y(k);
            bool y_equivariant = true;
            const auto& lo = ws.generators(k - 1);
            const auto& hi = ws.generators(k);
            for (std::size_t g = 0; g < lo.size(); ++g)
                y_equivariant = y_equivariant && multiply(lo[g], y) == multiply(y, hi[g]);
            record("Y commutes with so(n)", k, -1, y_equivariant);

            bool ladder = true;
            for (const auto& src : ps) {
                const ExactMatrix image = multiply(y, src.projector);
                for (const auto& dst : ws.projectors(k - 1)) {
                    if (dst.j == src.j) continue;
                    ladder = ladder && ws.project(k - 1, dst.j, image).is_zero();
                }
            }
            record("Y preserves the ladder index j", k, -1, ladder);
        }
    }

    for (int j = 1; j <= group.rank(); ++j) {
        const ExactMatrix restricted = multiply(ws.y(j), ws.projector(j, j));
        record("Y vanishes on E^{j,j}", j, j, restricted.is_zero());
    }
    for (int k = 1; k < group.rank(); ++k) {
        for (int j = 0; j < k; ++j) {
            const std::size_t r = bareiss_rank(multiply(ws.y(k + 1), ws.projector(k + 1, j)));
            const BigInt want = spinor_form_components(group, k)[static_cast<std::size_t>(j)].dimension;
            record("Y: E^{k+1,j} -> E^{k,j} has rank dim E^{k,j}", k + 1, j, BigInt(static_cast<unsigned long>(r)) == want,
                   "rank " + std::to_string(r) + ", dim " + want.get_str());
        }
    }
    for (int j = 0; 2 * (j + 1) <= n; ++j) {
        record("symbol of T_j nontrivial", j, j, symbol_nontrivial(ws, j));
    }
    for (int k = 0; k < n; ++k) {
        for (const auto& from : ws.projectors(k))
            for (const auto& to : ws.projectors(k + 1)) {
                if (std::abs(from.j - to.j) <= 1) continue;
                record("exterior multiplication E^{k,j} -> E^{k+1,j'} vanishes for |j-j'|>1", k, from.j,
                       exterior_component_vanishes(ws, k, from.j, to.j), "j'=" + std::to_string(to.j));
            }
    }
    return out;
}

}  // namespace hsdirac
