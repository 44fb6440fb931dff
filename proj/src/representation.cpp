#include "quiverlab/representation.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace quiverlab {

using linalg::MatrixX;

Representation::Representation(std::vector<int> dims, std::vector<Matrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
    for (int d : dims_) {
        if (d < 0) throw Error(Errc::ShapeMismatch, "negative dimension");
    }
}

Representation Representation::zero(const Quiver& q) {
    std::vector<Matrix> maps(static_cast<size_t>(q.arrow_count()), Matrix(0, 0));
    return Representation(std::vector<int>(static_cast<size_t>(q.vertex_count()), 0), std::move(maps));
}

int Representation::total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
}

bool operator==(const Representation& a, const Representation& b) {
    if (a.dims_ != b.dims_ || a.maps_.size() != b.maps_.size()) return false;
    for (size_t i = 0; i < a.maps_.size(); ++i) {
        if (a.maps_[i].rows() != b.maps_[i].rows() || a.maps_[i].cols() != b.maps_[i].cols()) return false;
        if (a.maps_[i] != b.maps_[i]) return false;
    }
    return true;
}

void check_shape(const Quiver& q, const Representation& m) {
    if (static_cast<int>(m.dims().size()) != q.vertex_count() || static_cast<int>(m.maps().size()) != q.arrow_count())
        throw Error(Errc::ShapeMismatch, "representation does not match the quiver size");
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        if (m.map(a).rows() != m.dim(arr.target) || m.map(a).cols() != m.dim(arr.source))
            throw Error(Errc::ShapeMismatch, "matrix of arrow '" + arr.name + "' has the wrong shape");
    }
}

Matrix path_action(const Quiver& q, const Representation& m, const Path& p) {
    if (p.is_trivial()) return Matrix::Identity(m.dim(p.source()), m.dim(p.source()));
    Matrix out = m.map(p.arrows().front());
    for (size_t i = 1; i < p.arrows().size(); ++i) out = (m.map(p.arrows()[i]) * out).eval();
    (void)q;
    return out;
}

bool validate_module(const Presentation& pres, const Representation& m) {
    const Quiver& q = pres.quiver();
    check_shape(q, m);
    for (const Relation& r : pres.relations()) {
        Matrix sum = Matrix::Zero(m.dim(r.target()), m.dim(r.source()));
        for (const Term& t : r.terms()) sum += t.coefficient * path_action(q, m, t.path);
        if (!linalg::row_echelon(sum).pivots.empty()) return false;
    }
    return true;
}

Representation dual(const Representation& m) {
    std::vector<Matrix> maps;
    for (const Matrix& a : m.maps()) maps.push_back(a.transpose());
    return Representation(m.dims(), std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.dims().size() != b.dims().size() || a.maps().size() != b.maps().size())
        throw Error(Errc::ShapeMismatch, "direct sum of representations of different quivers");
    std::vector<int> dims;
    for (size_t v = 0; v < a.dims().size(); ++v) dims.push_back(a.dims()[v] + b.dims()[v]);
    std::vector<Matrix> maps;
    for (size_t i = 0; i < a.maps().size(); ++i) {
        const Matrix& x = a.maps()[i];
        const Matrix& y = b.maps()[i];
        Matrix s = Matrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
        s.topLeftCorner(x.rows(), x.cols()) = x;
        s.bottomRightCorner(y.rows(), y.cols()) = y;
        maps.push_back(std::move(s));
    }
    return Representation(std::move(dims), std::move(maps));
}

int canonical_compare(const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim() ? -1 : 1;
    if (a.dims() != b.dims()) return a.dims() < b.dims() ? -1 : 1;
    for (size_t i = 0; i < a.maps().size() && i < b.maps().size(); ++i) {
        const Matrix& x = a.maps()[i];
        const Matrix& y = b.maps()[i];
        for (Eigen::Index r = 0; r < x.rows(); ++r) {
            for (Eigen::Index c = 0; c < x.cols(); ++c) {
                if (int cmp = Rational::compare(x(r, c), y(r, c)); cmp != 0) return cmp;
            }
        }
    }
    return 0;
}

bool is_intertwiner(const Quiver& q, const Representation& m, const Representation& n, const Morphism& f) {
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrow(a);
        const Matrix lhs = f[static_cast<size_t>(arr.target)] * m.map(a);
        const Matrix rhs = n.map(a) * f[static_cast<size_t>(arr.source)];
        if (lhs != rhs) return false;
    }
    return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism out;
    out.reserve(f.size());
    for (size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
    return out;
}

bool is_invertible(const Morphism& f) {
    return std::all_of(f.begin(), f.end(), [](const Matrix& m) { return linalg::is_invertible(m); });
}

// ---------------------------------------------------------------- presentations

namespace {

// Position of each basis index inside its e_x A e_y list.
std::vector<int> block_positions(const Algebra& a) {
    std::vector<int> pos(a.basis().size(), -1);
    const int n = a.quiver().vertex_count();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const auto& list = a.basis_between(x, y);
            for (size_t i = 0; i < list.size(); ++i) pos[static_cast<size_t>(list[i])] = static_cast<int>(i);
        }
    }
    return pos;
}

}  // namespace

PreparedModule::PreparedModule(const Algebra& a, Representation rep) : rep_(std::move(rep)) {
    a.require_finite();
    const Quiver& q = a.quiver();
    check_shape(q, rep_);
    const int n = q.vertex_count();

    // Action of every basis path, memoised over prefixes.
    std::map<Path, Matrix> memo;
    std::function<const Matrix&(const Path&)> act = [&](const Path& p) -> const Matrix& {
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        Matrix value;
        if (p.is_trivial()) {
            value = Matrix::Identity(rep_.dim(p.source()), rep_.dim(p.source()));
        } else if (p.length() == 1) {
            value = rep_.map(p.arrows().front());
        } else {
            std::vector<int> prefix(p.arrows().begin(), p.arrows().end() - 1);
            const Matrix& head = act(Path::from_arrows(q, std::move(prefix)));
            value = rep_.map(p.arrows().back()) * head;
        }
        return memo.emplace(p, std::move(value)).first->second;
    };
    actions_.reserve(a.basis().size());
    for (const Path& p : a.basis()) actions_.push_back(act(p));

    // Top: complement of the radical at each vertex.
    for (int x = 0; x < n; ++x) {
        linalg::Subspace<Rational> rad(rep_.dim(x));
        for (int arr : q.arrows_into(x)) {
            const Matrix& m = rep_.map(arr);
            for (Eigen::Index c = 0; c < m.cols(); ++c) rad.add(m.col(c));
        }
        for (auto j : rad.complement()) {
            Vector e = Vector::Zero(rep_.dim(x));
            e(j) = Rational(1);
            pres_.top.push_back(x);
            pres_.generators.push_back(std::move(e));
        }
    }
    const int gens = static_cast<int>(pres_.top.size());
    const auto pos = block_positions(a);

    // P0 at y has coordinates (g, i) for i in e_{top[g]} A e_y.
    std::vector<std::vector<int>> offset(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(gens), 0));
    std::vector<int> p0_dim(static_cast<size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
        for (int g = 0; g < gens; ++g) {
            offset[static_cast<size_t>(y)][static_cast<size_t>(g)] = p0_dim[static_cast<size_t>(y)];
            p0_dim[static_cast<size_t>(y)] += static_cast<int>(a.basis_between(pres_.top[static_cast<size_t>(g)], y).size());
        }
    }

    std::vector<MatrixX<Rational>> kernels(static_cast<size_t>(n));
    columns_.assign(static_cast<size_t>(n), {});
    column_inverse_.assign(static_cast<size_t>(n), Matrix());
    for (int y = 0; y < n; ++y) {
        Matrix c(rep_.dim(y), p0_dim[static_cast<size_t>(y)]);
        std::vector<std::pair<int, int>> labels;
        for (int g = 0; g < gens; ++g) {
            for (int i : a.basis_between(pres_.top[static_cast<size_t>(g)], y)) {
                c.col(static_cast<Eigen::Index>(labels.size())) = actions_[static_cast<size_t>(i)] * pres_.generators[static_cast<size_t>(g)];
                labels.emplace_back(g, i);
            }
        }
        const auto ech = linalg::row_echelon(c);
        if (ech.rank() != rep_.dim(y)) throw Error(Errc::ShapeMismatch, "top generators do not span the module");
        Matrix basis(rep_.dim(y), ech.rank());
        for (Eigen::Index j = 0; j < ech.rank(); ++j) {
            const auto col = ech.pivots[static_cast<size_t>(j)];
            basis.col(j) = c.col(col);
            columns_[static_cast<size_t>(y)].push_back(labels[static_cast<size_t>(col)]);
        }
        column_inverse_[static_cast<size_t>(y)] = *linalg::inverse(basis);
        kernels[static_cast<size_t>(y)] = linalg::kernel(c);
    }

    // Relations: generators of the kernel modulo its radical.
    for (int y = 0; y < n; ++y) {
        linalg::Subspace<Rational> rad(p0_dim[static_cast<size_t>(y)]);
        for (int arr : q.arrows_into(y)) {
            const int x = q.arrow(arr).source;
            const auto& kx = kernels[static_cast<size_t>(x)];
            for (Eigen::Index col = 0; col < kx.cols(); ++col) {
                Vector v = Vector::Zero(p0_dim[static_cast<size_t>(y)]);
                for (int g = 0; g < gens; ++g) {
                    const auto& list = a.basis_between(pres_.top[static_cast<size_t>(g)], x);
                    const int base = offset[static_cast<size_t>(x)][static_cast<size_t>(g)];
                    for (size_t t = 0; t < list.size(); ++t) {
                        const Rational& coef = kx(base + static_cast<Eigen::Index>(t), col);
                        if (coef.is_zero()) continue;
                        for (const auto& [j, d] : a.times_arrow(list[t], arr))
                            v(offset[static_cast<size_t>(y)][static_cast<size_t>(g)] + pos[static_cast<size_t>(j)]) += coef * d;
                    }
                }
                rad.add(v);
            }
        }
        const auto& ky = kernels[static_cast<size_t>(y)];
        for (Eigen::Index col = 0; col < ky.cols(); ++col) {
            if (!rad.add(ky.col(col))) continue;
            std::vector<Element> rel(static_cast<size_t>(gens));
            for (int g = 0; g < gens; ++g) {
                const auto& list = a.basis_between(pres_.top[static_cast<size_t>(g)], y);
                const int base = offset[static_cast<size_t>(y)][static_cast<size_t>(g)];
                for (size_t t = 0; t < list.size(); ++t) {
                    const Rational& coef = ky(base + static_cast<Eigen::Index>(t), col);
                    if (!coef.is_zero()) rel[static_cast<size_t>(g)].emplace_back(list[t], coef);
                }
                std::sort(rel[static_cast<size_t>(g)].begin(), rel[static_cast<size_t>(g)].end(),
                          [](const auto& l, const auto& r) { return l.first < r.first; });
            }
            pres_.relation_vertices.push_back(y);
            pres_.relations.push_back(std::move(rel));
        }
    }
}

std::vector<int> PreparedModule::value_offsets(const PreparedModule& target) const {
    std::vector<int> off;
    int s = 0;
    for (int x : pres_.top) {
        off.push_back(s);
        s += target.rep_.dim(x);
    }
    off.push_back(s);
    return off;
}

Morphism PreparedModule::extend(const PreparedModule& target, const Vector& values) const {
    const auto off = value_offsets(target);
    Morphism f;
    const int n = static_cast<int>(rep_.dims().size());
    for (int y = 0; y < n; ++y) {
        const auto& cols = columns_[static_cast<size_t>(y)];
        Matrix image(target.rep_.dim(y), static_cast<Eigen::Index>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            const auto [g, i] = cols[j];
            const int x = pres_.top[static_cast<size_t>(g)];
            image.col(static_cast<Eigen::Index>(j)) =
                target.actions_[static_cast<size_t>(i)] * values.segment(off[static_cast<size_t>(g)], target.rep_.dim(x));
        }
        f.push_back(image * column_inverse_[static_cast<size_t>(y)]);
    }
    return f;
}

ProjectivePresentation minimal_presentation(const Algebra& a, const Representation& m) {
    return PreparedModule(a, m).presentation();
}

Representation projective(const Algebra& a, int v) {
    a.require_finite();
    const Quiver& q = a.quiver();
    const auto pos = block_positions(a);
    std::vector<int> dims;
    for (int w = 0; w < q.vertex_count(); ++w) dims.push_back(static_cast<int>(a.basis_between(v, w).size()));
    std::vector<Matrix> maps;
    for (int arr = 0; arr < q.arrow_count(); ++arr) {
        const Arrow& ar = q.arrow(arr);
        Matrix m = Matrix::Zero(dims[static_cast<size_t>(ar.target)], dims[static_cast<size_t>(ar.source)]);
        const auto& list = a.basis_between(v, ar.source);
        for (size_t c = 0; c < list.size(); ++c) {
            for (const auto& [j, d] : a.times_arrow(list[c], arr)) m(pos[static_cast<size_t>(j)], static_cast<Eigen::Index>(c)) = d;
        }
        maps.push_back(std::move(m));
    }
    return Representation(std::move(dims), std::move(maps));
}

Representation transpose(const Algebra& a, const Representation& m) {
    const PreparedModule prepared(a, m);
    const ProjectivePresentation& pres = prepared.presentation();
    const Quiver& q = a.quiver();
    const int n = q.vertex_count();
    const auto pos = block_positions(a);
    const size_t gens = pres.top.size();
    const size_t rels = pres.relation_vertices.size();

    // Rows at w: (k, q') for q' in e_w A e_{y_k}.
    std::vector<std::vector<int>> row_offset(static_cast<size_t>(n), std::vector<int>(rels, 0));
    std::vector<int> rows(static_cast<size_t>(n), 0);
    for (int w = 0; w < n; ++w) {
        for (size_t k = 0; k < rels; ++k) {
            row_offset[static_cast<size_t>(w)][k] = rows[static_cast<size_t>(w)];
            rows[static_cast<size_t>(w)] += static_cast<int>(a.basis_between(w, pres.relation_vertices[k]).size());
        }
    }

    std::vector<linalg::Subspace<Rational>> image;
    for (int w = 0; w < n; ++w) {
        linalg::Subspace<Rational> im(rows[static_cast<size_t>(w)]);
        for (size_t g = 0; g < gens; ++g) {
            for (int qi : a.basis_between(w, pres.top[g])) {
                Vector col = Vector::Zero(rows[static_cast<size_t>(w)]);
                for (size_t k = 0; k < rels; ++k) {
                    Element prod;
                    for (const auto& [p, c] : pres.relations[k][g]) prod = add_scaled(prod, a.multiply(qi, p), c);
                    for (const auto& [j, d] : prod) col(row_offset[static_cast<size_t>(w)][k] + pos[static_cast<size_t>(j)]) += d;
                }
                im.add(col);
            }
        }
        image.push_back(std::move(im));
    }

    std::vector<int> dims;
    std::vector<std::vector<Eigen::Index>> comp;
    for (int w = 0; w < n; ++w) {
        comp.push_back(image[static_cast<size_t>(w)].complement());
        dims.push_back(static_cast<int>(comp.back().size()));
    }
    // Arrow a: w -> w' of Q acts on Tr M from w' to w by left multiplication.
    std::vector<Matrix> maps;
    for (int arr = 0; arr < q.arrow_count(); ++arr) {
        const int w = q.arrow(arr).source;
        const int w2 = q.arrow(arr).target;
        Matrix t = Matrix::Zero(dims[static_cast<size_t>(w)], dims[static_cast<size_t>(w2)]);
        for (size_t c = 0; c < comp[static_cast<size_t>(w2)].size(); ++c) {
            const Eigen::Index coord = comp[static_cast<size_t>(w2)][c];
            // Locate (k, q') for this coordinate.
            size_t k = 0;
            while (k + 1 < rels && row_offset[static_cast<size_t>(w2)][k + 1] <= coord) ++k;
            const auto& list = a.basis_between(w2, pres.relation_vertices[k]);
            const int qi = list[static_cast<size_t>(coord - row_offset[static_cast<size_t>(w2)][k])];
            Vector v = Vector::Zero(rows[static_cast<size_t>(w)]);
            for (const auto& [j, d] : a.arrow_times(arr, qi)) v(row_offset[static_cast<size_t>(w)][k] + pos[static_cast<size_t>(j)]) += d;
            t.col(static_cast<Eigen::Index>(c)) = image[static_cast<size_t>(w)].quotient_coordinates(v);
        }
        maps.push_back(std::move(t));
    }
    return Representation(std::move(dims), std::move(maps));
}

// ---------------------------------------------------------------- ModuleCategory

ModuleCategory::ModuleCategory(const Presentation& pres, int max_degree)
    : algebra_(std::make_shared<Algebra>(pres, max_degree)),
      opposite_(std::make_shared<Algebra>(opposite(pres), max_degree)) {
    algebra_->require_finite();
}

Representation ModuleCategory::projective(int v) const { return quiverlab::projective(*algebra_, v); }

Representation ModuleCategory::injective(int v) const { return dual(quiverlab::projective(*opposite_, v)); }

Representation ModuleCategory::simple(int v) const {
    const Quiver& q = quiver();
    std::vector<int> dims(static_cast<size_t>(q.vertex_count()), 0);
    dims[static_cast<size_t>(v)] = 1;
    std::vector<Matrix> maps;
    for (const Arrow& a : q.arrows()) maps.push_back(Matrix::Zero(dims[static_cast<size_t>(a.target)], dims[static_cast<size_t>(a.source)]));
    return Representation(std::move(dims), std::move(maps));
}

MatrixX<Rational> ModuleCategory::hom_values(const PreparedModule& m, const PreparedModule& n) const {
    const auto& pres = m.presentation();
    const auto off = m.value_offsets(n);
    const int unknowns = off.back();
    int equations = 0;
    for (int y : pres.relation_vertices) equations += n.rep().dim(y);
    Matrix e = Matrix::Zero(equations, unknowns);
    int row = 0;
    for (size_t k = 0; k < pres.relations.size(); ++k) {
        const int dy = n.rep().dim(pres.relation_vertices[k]);
        if (dy == 0) continue;
        for (size_t g = 0; g < pres.top.size(); ++g) {
            const int dx = n.rep().dim(pres.top[g]);
            if (dx == 0) continue;
            for (const auto& [i, c] : pres.relations[k][g])
                e.block(row, off[g], dy, dx) += c * n.basis_action(i);
        }
        row += dy;
    }
    return linalg::kernel(e);
}

int ModuleCategory::hom_dim(const PreparedModule& m, const PreparedModule& n) const {
    return static_cast<int>(hom_values(m, n).cols());
}

HomBasis ModuleCategory::hom_basis(const PreparedModule& m, const PreparedModule& n) const {
    const auto values = hom_values(m, n);
    HomBasis out;
    for (Eigen::Index c = 0; c < values.cols(); ++c) out.maps.push_back(m.extend(n, values.col(c)));
    return out;
}

HomBasis ModuleCategory::hom_basis(const Representation& m, const Representation& n) const {
    return hom_basis(prepare(m), prepare(n));
}

namespace {

// Coordinates of value vectors in the column basis `h`.
class Coordinates {
public:
    explicit Coordinates(const MatrixX<Rational>& h) {
        const auto ech = linalg::row_echelon(MatrixX<Rational>(h.transpose()));
        rows_ = ech.pivots;
        Matrix square(static_cast<Eigen::Index>(rows_.size()), h.cols());
        for (size_t r = 0; r < rows_.size(); ++r) square.row(static_cast<Eigen::Index>(r)) = h.row(rows_[r]);
        inverse_ = *linalg::inverse(square);
    }
    Vector operator()(const Vector& v) const {
        Vector picked(static_cast<Eigen::Index>(rows_.size()));
        for (size_t r = 0; r < rows_.size(); ++r) picked(static_cast<Eigen::Index>(r)) = v(rows_[r]);
        return inverse_ * picked;
    }

private:
    std::vector<Eigen::Index> rows_;
    Matrix inverse_;
};

// Generator values of f after the map with generator values `inner`.
Vector compose_values(const PreparedModule& m, const Morphism& f, const Vector& inner, const std::vector<int>& off_in,
                      const std::vector<int>& off_out) {
    const auto& top = m.presentation().top;
    Vector out(off_out.back());
    for (size_t g = 0; g < top.size(); ++g) {
        const Matrix& fx = f[static_cast<size_t>(top[g])];
        out.segment(off_out[g], fx.rows()) = fx * inner.segment(off_in[g], fx.cols());
    }
    return out;
}

// Trace form on End(m), in the coordinates of the basis `h`.
Matrix trace_form(const PreparedModule& m, const MatrixX<Rational>& h) {
    const Eigen::Index d = h.cols();
    const Coordinates coords(h);
    const auto off = m.value_offsets(m);
    std::vector<Matrix> left;
    for (Eigen::Index i = 0; i < d; ++i) {
        const Morphism fi = m.extend(m, h.col(i));
        Matrix l(d, d);
        for (Eigen::Index k = 0; k < d; ++k) l.col(k) = coords(compose_values(m, fi, h.col(k), off, off));
        left.push_back(std::move(l));
    }
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i; j < d; ++j) {
            g(i, j) = (left[static_cast<size_t>(i)] * left[static_cast<size_t>(j)]).trace();
            g(j, i) = g(i, j);
        }
    }
    return g;
}

}  // namespace

bool ModuleCategory::end_is_local(const PreparedModule& m) const {
    if (m.rep().is_zero()) return false;
    const auto h = hom_values(m, m);
    if (h.cols() == 1) return true;
    return linalg::rank(trace_form(m, h)) == 1;
}

bool ModuleCategory::end_is_local(const Representation& m) const { return end_is_local(prepare(m)); }

MatrixX<Rational> ModuleCategory::end_radical(const PreparedModule& m) const {
    const auto h = hom_values(m, m);
    if (h.cols() == 0) return h;
    const auto k = linalg::kernel(trace_form(m, h));
    return h * k;
}

bool ModuleCategory::is_isomorphic(const PreparedModule& m, const PreparedModule& n, bool known_indecomposable) const {
    if (m.rep().dims() != n.rep().dims()) return false;
    if (m.rep().is_zero()) return true;
    const auto fwd = hom_basis(m, n);
    if (fwd.maps.empty()) return false;
    for (const auto& f : fwd.maps) {
        if (is_invertible(f)) return true;
    }
    if (fwd.dim() == 1) return false;
    const auto back = hom_basis(n, m);
    if (back.maps.empty()) return false;
    if (known_indecomposable || end_is_local(m)) {
        // End(m) local: m is isomorphic to n iff some g f lies outside the
        // radical, i.e. is invertible, and the g f span the relevant ideal.
        for (const auto& f : fwd.maps) {
            for (const auto& g : back.maps) {
                if (is_invertible(compose(g, f))) return true;
            }
        }
        return false;
    }
    // Decomposable case: det(sum c_i f_i) is a polynomial of degree at most
    // total_dim in the c_i, so it cannot vanish on all of {0..D}^k unless it
    // vanishes identically.
    const int degree = m.rep().total_dim();
    const size_t k = fwd.maps.size();
    double combos = 1;
    for (size_t i = 0; i < k; ++i) combos *= degree + 1;
    if (combos > 2e6) throw Error(Errc::OutOfRange, "isomorphism search grid too large");
    std::vector<int> c(k, 0);
    while (true) {
        size_t i = 0;
        while (i < k && c[i] == degree) c[i++] = 0;
        if (i == k) break;
        ++c[i];
        Morphism sum = fwd.maps[0];
        for (auto& x : sum) x *= Rational(c[0]);
        for (size_t j = 1; j < k; ++j) {
            if (c[j] == 0) continue;
            for (size_t v = 0; v < sum.size(); ++v) sum[v] += Rational(c[j]) * fwd.maps[j][v];
        }
        if (is_invertible(sum)) return true;
    }
    return false;
}

bool ModuleCategory::is_isomorphic(const Representation& m, const Representation& n) const {
    if (m.dims() != n.dims()) return false;
    return is_isomorphic(prepare(m), prepare(n));
}

ProjectivePresentation ModuleCategory::minimal_presentation(const Representation& m) const {
    return quiverlab::minimal_presentation(*algebra_, m);
}

Representation ModuleCategory::tau(const Representation& m) const { return dual(transpose(*algebra_, m)); }

Representation ModuleCategory::tau_inv(const Representation& m) const { return transpose(*opposite_, dual(m)); }

// ---------------------------------------------------------------- free forms

HomBasis hom_basis(const Presentation& pres, const Representation& m, const Representation& n) {
    return ModuleCategory(pres).hom_basis(m, n);
}

bool is_isomorphic(const Presentation& pres, const Representation& m, const Representation& n) {
    return ModuleCategory(pres).is_isomorphic(m, n);
}

bool end_is_local(const Presentation& pres, const Representation& m) { return ModuleCategory(pres).end_is_local(m); }

Representation tau(const Presentation& pres, const Representation& m) {
    const ModuleCategory cat(pres);
    if (!cat.end_is_local(m)) throw Error(Errc::Decomposable, "tau expects an indecomposable module");
    return cat.tau(m);
}

Representation tau_inv(const Presentation& pres, const Representation& m) {
    const ModuleCategory cat(pres);
    if (!cat.end_is_local(m)) throw Error(Errc::Decomposable, "tau_inv expects an indecomposable module");
    return cat.tau_inv(m);
}

std::string to_json(const Quiver& q, const Representation& m) {
    nlohmann::ordered_json j;
    j["dims"] = m.dims();
    nlohmann::ordered_json maps = nlohmann::ordered_json::object();
    for (int a = 0; a < q.arrow_count(); ++a) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        const Matrix& x = m.map(a);
        for (Eigen::Index r = 0; r < x.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Eigen::Index c = 0; c < x.cols(); ++c) row.push_back(x(r, c).to_fraction_string());
            rows.push_back(std::move(row));
        }
        maps[q.arrow(a).name] = std::move(rows);
    }
    j["maps"] = std::move(maps);
    return j.dump();
}

}  // namespace quiverlab
