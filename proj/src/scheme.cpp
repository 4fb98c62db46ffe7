#include "quasigap/scheme.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace quasigap {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// OmegaSpec

OmegaSpec OmegaSpec::hypercube(int dim, bool open) {
    OmegaSpec o;
    o.dim = dim;
    o.preset = open ? "hypercube" : "hypercube-closed";
    for (int i = 0; i < dim; ++i) {
        for (int s : {+1, -1}) {
            HalfSpace h;
            h.normal.assign(dim, mpq_class(0));
            h.normal[i] = s;
            h.offset = 1;
            h.strict = open;
            o.halfspaces.push_back(std::move(h));
        }
    }
    return o;
}

OmegaSpec OmegaSpec::theorem13(int dim, const QVec& translate) {
    OmegaSpec o;
    o.dim = dim;
    o.preset = translate.empty() ? "theorem13" : "";
    for (int i = 0; i < dim; ++i) {
        HalfSpace lo;  // x_i > 0
        lo.normal.assign(dim, mpq_class(0));
        lo.normal[i] = -1;
        lo.offset = 0;
        lo.strict = true;
        o.halfspaces.push_back(std::move(lo));
        HalfSpace hi;  // x_i <= 1
        hi.normal.assign(dim, mpq_class(0));
        hi.normal[i] = 1;
        hi.offset = 1;
        o.halfspaces.push_back(std::move(hi));
    }
    HalfSpace cut;  // x_d + 2*x_1 <= 1
    cut.normal.assign(dim, mpq_class(0));
    cut.normal[0] += 2;
    cut.normal[dim - 1] += 1;
    cut.offset = 1;
    o.halfspaces.push_back(std::move(cut));
    if (!translate.empty()) {
        for (auto& h : o.halfspaces) {
            mpq_class shift(0);
            for (int i = 0; i < dim; ++i) shift += h.normal[i] * translate[i];
            h.offset += shift;
        }
    }
    return o;
}

OmegaSpec OmegaSpec::from_preset(const std::string& name, int dim) {
    if (name == "hypercube") return hypercube(dim, true);
    if (name == "hypercube-closed") return hypercube(dim, false);
    if (name == "theorem13") return theorem13(dim);
    throw ConfigError("unknown omega preset: " + name);
}

bool OmegaSpec::contains(const IVec& x, const mpq_class& r) const {
    if (sgn(r) == 0) {
        for (auto v : x)
            if (v != 0) return false;
        return true;
    }
    for (const auto& h : halfspaces) {
        mpq_class lhs(0);
        for (int i = 0; i < dim; ++i) lhs += h.normal[i] * (long)x[i];
        mpq_class rhs = r * h.offset;
        if (h.strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
    }
    return true;
}

bool OmegaSpec::contains(const SVec& x, const mpq_class& r, const ScalarMode& mode) const {
    if (sgn(r) == 0) {
        for (const auto& v : x)
            if (!v.is_zero()) return false;
        return true;
    }
    for (const auto& h : halfspaces) {
        Surd lhs;
        for (int i = 0; i < dim; ++i) lhs += Surd(h.normal[i]) * x[i];
        Ordering c = guarded_cmp(lhs, Surd(r * h.offset), mode);
        if (h.strict ? c != Ordering::less : c == Ordering::greater) return false;
    }
    return true;
}

namespace {

// Vertices of the closed polytope {normal.x <= offset}; dim <= 3.
std::vector<QVec> polytope_vertices(const OmegaSpec& o) {
    std::vector<QVec> verts;
    size_t h = o.halfspaces.size();
    std::vector<size_t> idx(o.dim);
    std::vector<size_t> stack;
    // enumerate all dim-subsets
    std::vector<std::vector<size_t>> subsets;
    std::vector<size_t> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (cur.size() == (size_t)o.dim) {
            subsets.push_back(cur);
            return;
        }
        for (size_t i = start; i < h; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    for (const auto& s : subsets) {
        QMat m(o.dim, o.dim);
        QVec rhs(o.dim);
        for (int r = 0; r < o.dim; ++r) {
            for (int c = 0; c < o.dim; ++c) m.at(r, c) = o.halfspaces[s[r]].normal[c];
            rhs[r] = o.halfspaces[s[r]].offset;
        }
        QMat inv;
        if (!m.invert(inv)) continue;
        QVec x = inv.mul(rhs);
        bool feasible = true;
        for (const auto& hs : o.halfspaces) {
            mpq_class lhs(0);
            for (int i = 0; i < o.dim; ++i) lhs += hs.normal[i] * x[i];
            if (lhs > hs.offset) {
                feasible = false;
                break;
            }
        }
        if (feasible) verts.push_back(x);
    }
    return verts;
}

bool has_recession_ray(const OmegaSpec& o) {
    // Candidate directions: null spaces of (dim-1)-subsets of normals plus
    // the coordinate axes; complete for dim <= 2, conservative above.
    std::vector<QVec> candidates;
    for (int i = 0; i < o.dim; ++i) {
        QVec e(o.dim, mpq_class(0));
        e[i] = 1;
        candidates.push_back(e);
    }
    if (o.dim == 2) {
        for (const auto& h : o.halfspaces) {
            candidates.push_back({-h.normal[1], h.normal[0]});
        }
    }
    if (o.dim == 3) {
        for (size_t a = 0; a < o.halfspaces.size(); ++a) {
            for (size_t b = a + 1; b < o.halfspaces.size(); ++b) {
                const QVec& u = o.halfspaces[a].normal;
                const QVec& v = o.halfspaces[b].normal;
                candidates.push_back({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                      u[0] * v[1] - u[1] * v[0]});
            }
        }
    }
    for (const auto& c : candidates) {
        bool zero = true;
        for (const auto& v : c) zero = zero && sgn(v) == 0;
        if (zero) continue;
        for (int s : {+1, -1}) {
            bool ray = true;
            for (const auto& h : o.halfspaces) {
                mpq_class lhs(0);
                for (int i = 0; i < o.dim; ++i) lhs += h.normal[i] * c[i] * s;
                if (sgn(lhs) > 0) {
                    ray = false;
                    break;
                }
            }
            if (ray) return true;
        }
    }
    return false;
}

}  // namespace

void OmegaSpec::bounding_box(QVec& lo, QVec& hi) const {
    auto verts = polytope_vertices(*this);
    if (verts.empty()) throw ConfigError("omega region has no vertices (empty or unbounded)");
    lo.assign(dim, verts[0][0]);
    hi.assign(dim, verts[0][0]);
    for (int i = 0; i < dim; ++i) {
        lo[i] = hi[i] = verts[0][i];
        for (const auto& v : verts) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
}

Surd OmegaSpec::gauge(const SVec& x) const {
    Surd best;
    bool have = false;
    for (const auto& h : halfspaces) {
        if (sgn(h.offset) <= 0)
            throw ConfigError("gauge requires 0 in the interior of omega");
        Surd lhs;
        for (int i = 0; i < dim; ++i) lhs += Surd(h.normal[i]) * x[i];
        Surd val = lhs / Surd(h.offset);
        if (!have || Surd::compare(val, best) == Ordering::greater) {
            best = val;
            have = true;
        }
    }
    return best;
}

void OmegaSpec::validate() const {
    if (dim <= 0 || dim > 3) throw ConfigError("omega dimension must be 1..3");
    if (halfspaces.empty()) throw ConfigError("omega needs at least one halfspace");
    for (const auto& h : halfspaces)
        if ((int)h.normal.size() != dim) throw ConfigError("omega normal has wrong dimension");
    if (has_recession_ray(*this)) throw ConfigError("omega region is unbounded");
    auto verts = polytope_vertices(*this);
    if (verts.empty()) throw ConfigError("omega region is empty");
    // interior point: centroid of the vertex set must be strictly feasible
    QVec c(dim, mpq_class(0));
    for (const auto& v : verts)
        for (int i = 0; i < dim; ++i) c[i] += v[i];
    for (int i = 0; i < dim; ++i) c[i] /= (long)verts.size();
    for (const auto& h : halfspaces) {
        mpq_class lhs(0);
        for (int i = 0; i < dim; ++i) lhs += h.normal[i] * c[i];
        if (!(lhs < h.offset)) throw ConfigError("omega region has empty interior");
    }
}

// ---------------------------------------------------------------------------
// WindowSpec

WindowSpec WindowSpec::build(const std::vector<IVec>& generators) {
    WindowSpec w;
    w.generators = generators;
    size_t n = generators.size();
    if (n == 0) throw ConfigError("window needs at least one generator");
    for (const auto& g : generators)
        if (g.size() != n)
            throw ConfigError("window generators must be (k-d)-vectors, one per dimension");
    w.b = ZMat(n, n);
    QMat bq(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) {
            w.b.at(i, j) = (long)generators[j][i];
            bq.at(i, j) = (long)generators[j][i];
        }
    mpq_class det = bq.det();
    if (sgn(det) == 0) throw DegenerateWindow("window generators are linearly dependent");
    w.index = mpz_class(::abs(det.get_num())).get_si();
    if (!bq.invert(w.binv)) throw DegenerateWindow("window matrix not invertible");
    w.denominators.resize(n);
    for (size_t i = 0; i < n; ++i) {
        // group of i-th coordinates of B^-1 Z^(k-d), together with 1
        mpz_class l(1);
        for (size_t j = 0; j < n; ++j) l = lcm(l, w.binv.at(i, j).get_den());
        mpz_class g = l;  // the "1" member contributes l/1
        for (size_t j = 0; j < n; ++j) {
            mpq_class scaled = w.binv.at(i, j) * mpq_class(l);
            g = gcd(g, scaled.get_num());
        }
        w.denominators[i] = mpz_class(l / g).get_si();
    }
    return w;
}

// ---------------------------------------------------------------------------
// SchemeConfig JSON

namespace {

ScalarMode mode_from_json(const ordered_json& j) {
    if (j.is_null()) return ScalarMode::exact();
    std::string m = j.value("mode", "exact-quadratic");
    if (m == "exact-quadratic") return ScalarMode::exact();
    if (m == "rational-surrogate") {
        unsigned bits = j.value("precision_bits", 256u);
        mpq_class radius(j.value("validity_radius", std::string("1000000")));
        radius.canonicalize();
        return ScalarMode::surrogate(bits, radius);
    }
    throw ConfigError("unknown scalar mode: " + m);
}

ordered_json mode_to_json(const ScalarMode& m) {
    ordered_json j;
    if (!m.is_surrogate()) {
        j["mode"] = "exact-quadratic";
    } else {
        j["mode"] = "rational-surrogate";
        j["precision_bits"] = m.precision_bits;
        j["validity_radius"] = m.validity_radius.get_str();
    }
    return j;
}

}  // namespace

SchemeConfig SchemeConfig::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    SchemeConfig c;
    try {
        c.k = j.at("k").get<int>();
        c.d = j.at("d").get<int>();
        for (const auto& row : j.at("alpha")) {
            c.alpha.emplace_back();
            for (const auto& s : row) c.alpha.back().push_back(s.get<std::string>());
        }
        for (const auto& s : j.at("shift")) c.shift.push_back(s.get<std::string>());
        for (const auto& g : j.at("window").at("generators")) {
            IVec v;
            for (const auto& x : g) v.push_back(x.get<std::int64_t>());
            c.window_generators.push_back(std::move(v));
        }
        if (j.contains("f0") && !j["f0"].is_null()) {
            if (j["f0"].is_string()) {
                c.f0_mode = j["f0"].get<std::string>();
                if (c.f0_mode != "orthogonal")
                    throw ConfigError("f0 must be \"orthogonal\" or a basis matrix");
            } else {
                c.f0_mode = "explicit";
                for (const auto& row : j["f0"]) {
                    c.f0_basis.emplace_back();
                    for (const auto& s : row) c.f0_basis.back().push_back(s.get<std::string>());
                }
            }
        }
        c.mode = mode_from_json(j.contains("scalar_mode") ? j["scalar_mode"] : ordered_json());
        c.relation_height = j.value("relation_height", 10000L);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad scheme config: ") + e.what());
    }
    return c;
}

std::string SchemeConfig::to_json_text() const {
    ordered_json j;
    j["k"] = k;
    j["d"] = d;
    ordered_json a = ordered_json::array();
    for (const auto& row : alpha) a.push_back(row);
    j["alpha"] = a;
    j["shift"] = shift;
    ordered_json gens = ordered_json::array();
    for (const auto& g : window_generators) gens.push_back(g);
    j["window"] = ordered_json{{"generators", gens}};
    if (f0_mode == "orthogonal") {
        j["f0"] = "orthogonal";
    } else {
        ordered_json rows = ordered_json::array();
        for (const auto& r : f0_basis) rows.push_back(r);
        j["f0"] = rows;
    }
    j["scalar_mode"] = mode_to_json(mode);
    j["relation_height"] = relation_height;
    return j.dump(2) + "\n";
}

SchemeConfig SchemeConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

// ---------------------------------------------------------------------------
// Scheme

namespace {

Surd parse_field(const std::string& literal, const char* what) {
    try {
        return Surd::parse(literal);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

std::string format_relation(const std::vector<mpz_class>& m2, const std::vector<mpz_class>& m1) {
    std::ostringstream os;
    os << "m2 = (";
    for (size_t i = 0; i < m2.size(); ++i) os << (i ? "," : "") << m2[i];
    os << "), m1 = (";
    for (size_t i = 0; i < m1.size(); ++i) os << (i ? "," : "") << m1[i];
    os << ")";
    return os.str();
}

}  // namespace

Scheme Scheme::build(const SchemeConfig& config) {
    Scheme s;
    s.config_ = config;
    s.k_ = config.k;
    s.d_ = config.d;
    if (!(1 <= s.d_ && s.d_ < s.k_)) throw ConfigError("need 1 <= d < k");
    int cod = s.k_ - s.d_;
    if ((int)config.alpha.size() != cod) throw ConfigError("alpha must have k-d rows");
    s.alpha_ = SMat(cod, s.d_);
    for (int i = 0; i < cod; ++i) {
        if ((int)config.alpha[i].size() != s.d_) throw ConfigError("alpha row has wrong length");
        for (int j = 0; j < s.d_; ++j)
            s.alpha_.at(i, j) = parse_field(config.alpha[i][j], "alpha entry");
    }
    if ((int)config.shift.size() != s.k_) throw ConfigError("shift must be a k-vector");
    s.shift_.resize(s.k_);
    for (int i = 0; i < s.k_; ++i) s.shift_[i] = parse_field(config.shift[i], "shift entry");
    if ((int)config.window_generators.size() != cod)
        throw ConfigError("window needs k-d generators");
    s.window_ = WindowSpec::build(config.window_generators);
    s.mode_ = config.mode;
    s.relation_height_ = config.relation_height;
    if (s.mode_.is_surrogate()) {
        // surrogate inputs must be rational
        for (const auto& v : s.alpha_.a)
            if (!v.is_rational())
                throw ConfigError("rational-surrogate mode requires rational alpha entries");
    }

    // F0 basis: default = orthogonal complement of E = span{(-A^T e_i, e_i)}.
    s.f0_ = SMat(s.k_, cod);
    if (config.f0_mode == "orthogonal") {
        for (int col = 0; col < cod; ++col) {
            for (int row = 0; row < s.d_; ++row) s.f0_.at(row, col) = -s.alpha_.at(col, row);
            s.f0_.at(s.d_ + col, col) = Surd(1L);
        }
    } else {
        if ((int)config.f0_basis.size() != cod)
            throw ConfigError("f0 basis needs k-d vectors");
        for (int col = 0; col < cod; ++col) {
            if ((int)config.f0_basis[col].size() != s.k_)
                throw ConfigError("f0 basis vector has wrong dimension");
            for (int row = 0; row < s.k_; ++row)
                s.f0_.at(row, col) = parse_field(config.f0_basis[col][row], "f0 entry");
        }
    }

    // M = [E basis | F0 basis]; pi_1 along F0 reads off the top block of M^-1.
    SMat m(s.k_, s.k_);
    for (int j = 0; j < s.d_; ++j) {
        m.at(j, j) = Surd(1L);
        for (int i = 0; i < cod; ++i) m.at(s.d_ + i, j) = s.alpha_.at(i, j);
    }
    for (int col = 0; col < cod; ++col)
        for (int row = 0; row < s.k_; ++row) m.at(row, s.d_ + col) = s.f0_.at(row, col);
    SMat minv;
    if (!m.invert(minv))
        throw SingularF0("F0 is not complementary to E (singular projection solve)");
    s.p_ = SMat(s.d_, s.k_);
    for (int i = 0; i < s.d_; ++i)
        for (int j = 0; j < s.k_; ++j) s.p_.at(i, j) = minv.at(i, j);
    s.p2_ = SMat(s.d_, cod);
    for (int i = 0; i < s.d_; ++i)
        for (int j = 0; j < cod; ++j) s.p2_.at(i, j) = s.p_.at(i, s.d_ + j);

    // L' = B^-1 L
    s.lprime_ = SMat(cod, s.d_);
    for (int i = 0; i < cod; ++i)
        for (int j = 0; j < s.d_; ++j) {
            Surd acc;
            for (int l = 0; l < cod; ++l)
                acc += Surd(s.window_.binv.at(i, l)) * s.alpha_.at(l, j);
            s.lprime_.at(i, j) = acc;
        }

    s.check_totally_irrational();
    s.check_f0_lattice();
    return s;
}

void Scheme::check_totally_irrational() const {
    int cod = k_ - d_;
    // A relation means some nonzero m2 in Z^(k-d) with A^T m2 in Z^d, i.e.
    // m1 + A^T m2 = 0; split per radical coordinate, unknowns (m2, t=m1).
    std::set<unsigned long> ds;
    ds.insert(1);
    for (const auto& v : alpha_.a)
        for (const auto& t : v.terms()) ds.insert(t.d);
    size_t rows = (size_t)d_ * ds.size();
    QMat m(rows, cod + d_);
    size_t r = 0;
    for (int j = 0; j < d_; ++j) {
        for (unsigned long dd : ds) {
            for (int i = 0; i < cod; ++i) {
                mpq_class c(0);
                for (const auto& t : alpha_.at(i, j).terms())
                    if (t.d == dd) c = t.q;
                m.at(r, i) = c;
            }
            if (dd == 1) m.at(r, cod + j) = 1;
            ++r;
        }
    }
    ZMat kern = integer_kernel(scale_rows_to_integer(m));
    auto best = lattice_shortest_supnorm(kern);
    if (best && best->supnorm <= relation_height_) {
        std::vector<mpz_class> m2(best->vec.begin(), best->vec.begin() + cod);
        std::vector<mpz_class> m1(best->vec.begin() + cod, best->vec.end());
        throw NotTotallyIrrational("integer relation at height " + best->supnorm.get_str() +
                                   ": " + format_relation(m2, m1));
    }
}

void Scheme::check_f0_lattice() const {
    // F0 = ker(pi_1); a nonzero integer vector in it violates F0 cap Z^k = {0}.
    std::set<unsigned long> ds;
    ds.insert(1);
    for (const auto& v : p_.a)
        for (const auto& t : v.terms()) ds.insert(t.d);
    QMat m((size_t)d_ * ds.size(), k_);
    size_t r = 0;
    for (int i = 0; i < d_; ++i) {
        for (unsigned long dd : ds) {
            for (int j = 0; j < k_; ++j) {
                mpq_class c(0);
                for (const auto& t : p_.at(i, j).terms())
                    if (t.d == dd) c = t.q;
                m.at(r, j) = c;
            }
            ++r;
        }
    }
    ZMat kern = integer_kernel(scale_rows_to_integer(m));
    auto best = lattice_shortest_supnorm(kern);
    if (best && best->supnorm <= relation_height_) {
        std::ostringstream os;
        os << "integer vector in F0 at height " << best->supnorm.get_str() << ": (";
        for (size_t i = 0; i < best->vec.size(); ++i) os << (i ? "," : "") << best->vec[i];
        os << ")";
        throw BadF0(os.str());
    }
}

SVec Scheme::apply_l(const SVec& n1) const {
    SVec out(k_ - d_);
    for (int i = 0; i < k_ - d_; ++i) {
        Surd acc;
        for (int j = 0; j < d_; ++j) acc += alpha_.at(i, j) * n1[j];
        out[i] = acc;
    }
    return out;
}

SVec Scheme::star(const IVec& n) const {
    int cod = k_ - d_;
    SVec n1(d_);
    for (int j = 0; j < d_; ++j) n1[j] = Surd((long)n[j]);
    SVec l = apply_l(n1);
    SVec v(cod);
    for (int i = 0; i < cod; ++i) v[i] = Surd((long)n[d_ + i]) - l[i];
    SVec out(cod);
    for (int i = 0; i < cod; ++i) {
        Surd acc;
        for (int j = 0; j < cod; ++j) acc += Surd(window_.binv.at(i, j)) * v[j];
        out[i] = acc;
    }
    return out;
}

SVec Scheme::star_shifted(const IVec& n) const {
    int cod = k_ - d_;
    SVec n1(d_);
    for (int j = 0; j < d_; ++j) n1[j] = Surd((long)n[j]) + shift_[j];
    SVec l = apply_l(n1);
    SVec v(cod);
    for (int i = 0; i < cod; ++i) v[i] = Surd((long)n[d_ + i]) + shift_[d_ + i] - l[i];
    SVec out(cod);
    for (int i = 0; i < cod; ++i) {
        Surd acc;
        for (int j = 0; j < cod; ++j) acc += Surd(window_.binv.at(i, j)) * v[j];
        out[i] = acc;
    }
    return out;
}

SVec Scheme::project(const IVec& n, Proj which) const {
    if (which == Proj::pi2) {
        SVec out(d_);
        for (int j = 0; j < d_; ++j) out[j] = Surd((long)n[j]);
        return out;
    }
    SVec v = to_svec(n);
    return p_.mul(v);
}

SVec Scheme::physical(const IVec& n) const {
    SVec v(k_);
    for (int i = 0; i < k_; ++i) v[i] = Surd((long)n[i]) + shift_[i];
    return p_.mul(v);
}

int Scheme::window_coord_side(const Surd& v) const {
    Ordering c0 = gcmp(v, Surd(0L));
    if (c0 == Ordering::less) return -1;
    if (c0 == Ordering::equal) return 0;
    Ordering c1 = gcmp(v, Surd(1L));
    if (c1 == Ordering::equal) return 0;
    return c1 == Ordering::less ? 1 : -1;
}

bool Scheme::accept(const IVec& n) const {
    SVec v = star_shifted(n);
    for (const auto& c : v) {
        int side = window_coord_side(c);
        if (side == 0) {
            std::ostringstream os;
            os << "lattice point (";
            for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
            os << ") lands on the window boundary; shift is not regular";
            throw SingularShift(os.str());
        }
        if (side < 0) return false;
    }
    return true;
}

void Scheme::check_radius(const mpq_class& r) const {
    if (mode_.is_surrogate() && r > mode_.validity_radius)
        throw ConfigError("radius " + mpq_class(r).get_str() +
                          " exceeds the surrogate validity radius " +
                          mode_.validity_radius.get_str());
}

void Scheme::window_box(IVec& lo, IVec& hi) const {
    int cod = k_ - d_;
    lo.assign(cod, 0);
    hi.assign(cod, 0);
    for (unsigned mask = 0; mask < (1u << cod); ++mask) {
        for (int i = 0; i < cod; ++i) {
            long corner = 0;
            for (int j = 0; j < cod; ++j)
                if (mask & (1u << j)) corner += mpz_class(window_.b.at(i, j)).get_si();
            lo[i] = std::min(lo[i], (std::int64_t)corner);
            hi[i] = std::max(hi[i], (std::int64_t)corner);
        }
    }
}

Surd Scheme::physical_reach() const {
    int cod = k_ - d_;
    Surd best;
    for (unsigned mask = 0; mask < (1u << cod); ++mask) {
        SVec w(cod);
        for (int i = 0; i < cod; ++i) {
            long v = 0;
            for (int j = 0; j < cod; ++j) {
                long sign = (mask & (1u << j)) ? 1 : -1;
                v += sign * mpz_class(window_.b.at(i, j)).get_si();
            }
            w[i] = Surd(v);
        }
        SVec img = p2_.mul(w);
        for (const auto& c : img) {
            Surd a = c.abs();
            if (Surd::compare(a, best) == Ordering::greater) best = a;
        }
    }
    return best;
}

}  // namespace quasigap
