#include "quasigap/windowpartition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace quasigap {

namespace {

const Surd kZero(0L);
const Surd kOne(1L);

template <typename Body>
void scan_box(const IVec& lo, const IVec& hi, Body&& body) {
    IVec cur(lo);
    int dim = (int)lo.size();
    while (true) {
        body(cur);
        int i = 0;
        while (i < dim && ++cur[i] > hi[i]) {
            cur[i] = lo[i];
            ++i;
        }
        if (i == dim) break;
    }
}

void omega_column_box(const Scheme& scheme, const mpq_class& r, bool inflate,
                      const OmegaSpec& omega, IVec& lo, IVec& hi) {
    QVec blo, bhi;
    omega.bounding_box(blo, bhi);
    Surd reach = inflate ? scheme.physical_reach() : Surd();
    lo.resize(scheme.d());
    hi.resize(scheme.d());
    for (int j = 0; j < scheme.d(); ++j) {
        lo[j] = (Surd(r * blo[j]) - reach).floor().get_si() - 1;
        hi[j] = (Surd(r * bhi[j]) + reach).ceil().get_si() + 1;
    }
}

// Per-coordinate half-width of the integer box covering B[-1,1]^(k-d).
IVec window_halfwidth(const Scheme& scheme) {
    int cod = scheme.codim();
    IVec m(cod, 0);
    for (int i = 0; i < cod; ++i) {
        long acc = 0;
        for (int j = 0; j < cod; ++j)
            acc += std::abs(mpz_class(scheme.window().b.at(i, j)).get_si());
        m[i] = acc;
    }
    return m;
}

}  // namespace

bool Wall::full_extents() const {
    if (extents.empty()) return true;
    for (size_t j = 0; j < extents.size(); ++j) {
        if ((int)j == coordinate) continue;
        if (!(extents[j].first == kZero && extents[j].second == kOne)) return false;
    }
    return true;
}

std::vector<Wall> walls(const Scheme& scheme, const mpq_class& r, PatchType type,
                        const OmegaSpec& omega) {
    if (sgn(r) < 0) throw ConfigError("walls: radius must be nonnegative");
    scheme.check_radius(r);
    int cod = scheme.codim();
    std::vector<Wall> out;

    if (type == PatchType::type2) {
        // offsets e - star((n1,*))_i collapse, mod the coordinate group
        // (1/m_i)Z, to frac_mod(L'_i(n1), 1/m_i) replicated across [0,1)
        std::vector<std::map<Surd, IVec>> offsets(cod);
        IVec lo, hi;
        omega_column_box(scheme, r, false, omega, lo, hi);
        scan_box(lo, hi, [&](const IVec& c) {
            if (!omega.contains(c, r)) return;
            for (int i = 0; i < cod; ++i) {
                Surd l;
                for (int j = 0; j < scheme.d(); ++j)
                    l += scheme.lprime().at(i, j) * Surd((long)c[j]);
                mpq_class step(1, scheme.window().denominators[i]);
                step.canonicalize();
                Surd base = Surd::frac_mod(l, step);
                IVec src(scheme.k(), 0);
                for (int j = 0; j < scheme.d(); ++j) src[j] = -c[j];
                for (long rep = 0; rep < scheme.window().denominators[i]; ++rep) {
                    Surd off = base + Surd(mpq_class(rep) * step);
                    offsets[i].emplace(off, src);
                }
            }
        });
        for (int i = 0; i < cod; ++i) {
            for (const auto& [off, src] : offsets[i]) {
                Wall w;
                w.coordinate = i;
                w.offset = off;
                w.source_n = src;
                out.push_back(std::move(w));
            }
        }
        return out;
    }

    // Type 1: enumerate lattice vectors n with pi_1(n) in r*Omega whose
    // translated window faces meet the window, and clip the faces.
    IVec lo, hi;
    omega_column_box(scheme, r, true, omega, lo, hi);
    IVec half = window_halfwidth(scheme);
    std::map<std::pair<int, Surd>, std::vector<Wall>> seen;
    scan_box(lo, hi, [&](const IVec& d1) {
        SVec l = scheme.apply_l(to_svec(IVec(d1.begin(), d1.end())));
        IVec nlo(cod), nhi(cod);
        for (int i = 0; i < cod; ++i) {
            nlo[i] = (l[i] - Surd((long)half[i])).floor().get_si() - 1;
            nhi[i] = (l[i] + Surd((long)half[i])).ceil().get_si() + 1;
        }
        IVec n((size_t)scheme.k());
        for (int j = 0; j < scheme.d(); ++j) n[j] = d1[j];
        scan_box(nlo, nhi, [&](const IVec& n2) {
            for (int i = 0; i < cod; ++i) n[scheme.d() + i] = n2[i];
            SVec v = scheme.star(n);
            for (int i = 0; i < cod; ++i) {
                if (Surd::compare(v[i].abs(), kOne) == Ordering::greater) return;
            }
            SVec img = scheme.project(n, Scheme::Proj::pi1);
            if (!omega.contains(img, r, scheme.mode())) return;
            // face pieces: x_i = e - v_i, x_j in [-v_j, 1-v_j] clipped
            for (int i = 0; i < cod; ++i) {
                for (int e = 0; e <= 1; ++e) {
                    Surd off = Surd((long)e) - v[i];
                    if (off.sign() < 0 || Surd::compare(off, kOne) != Ordering::less) continue;
                    Wall w;
                    w.coordinate = i;
                    w.offset = off;
                    w.source_n = n;
                    w.extents.resize(cod, {kZero, kOne});
                    bool empty = false;
                    for (int j = 0; j < cod; ++j) {
                        if (j == i) continue;
                        Surd elo = -v[j];
                        Surd ehi = kOne - v[j];
                        if (elo.sign() < 0) elo = kZero;
                        if (Surd::compare(ehi, kOne) == Ordering::greater) ehi = kOne;
                        if (Surd::compare(elo, ehi) != Ordering::less) {
                            empty = true;
                            break;
                        }
                        w.extents[j] = {elo, ehi};
                    }
                    if (empty) continue;
                    auto& bucket = seen[{i, off}];
                    bool dup = false;
                    for (const auto& prev : bucket)
                        if (prev.extents == w.extents) {
                            dup = true;
                            break;
                        }
                    if (!dup) bucket.push_back(w);
                }
            }
        });
    });
    for (auto& [key, bucket] : seen)
        for (auto& w : bucket) out.push_back(std::move(w));
    return out;
}

size_t WindowPartition::cell_index(const std::vector<size_t>& coords) const {
    size_t idx = 0;
    for (size_t i = 0; i < coords.size(); ++i) idx += coords[i] * strides_[i];
    return idx;
}

Surd WindowPartition::total_volume() const {
    Surd acc;
    for (const auto& c : components) acc += c.volume;
    return acc;
}

SVec WindowPartition::cell_center(size_t cell) const {
    SVec out(grid.size());
    size_t rem = cell;
    for (size_t i = 0; i < grid.size(); ++i) {
        size_t ci = rem % dims_[i];
        rem /= dims_[i];
        out[i] = (grid[i][ci] + grid[i][ci + 1]) / Surd(2L);
    }
    return out;
}

long WindowPartition::locate(const SVec& w) const {
    std::vector<size_t> coords(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const auto& g = grid[i];
        // find t with g[t] < w_i < g[t+1]
        size_t lo = 0, hi = g.size() - 1;
        if (Surd::compare(w[i], g.front()) != Ordering::greater ||
            Surd::compare(w[i], g.back()) != Ordering::less)
            return -1;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            Ordering c = Surd::compare(w[i], g[mid]);
            if (c == Ordering::equal) return -1;
            if (c == Ordering::less)
                hi = mid;
            else
                lo = mid;
        }
        coords[i] = lo;
    }
    return cell_to_component_[cell_index(coords)];
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

WindowPartition components_of(const std::vector<Wall>& wallset, int cod) {
    WindowPartition part;
    std::vector<std::set<Surd>> gsets((size_t)cod);
    for (int i = 0; i < cod; ++i) {
        gsets[i].insert(kZero);
        gsets[i].insert(kOne);
    }
    for (const auto& w : wallset) {
        gsets[w.coordinate].insert(w.offset);
        if (!w.extents.empty()) {
            for (int j = 0; j < cod; ++j) {
                if (j == w.coordinate) continue;
                gsets[j].insert(w.extents[j].first);
                gsets[j].insert(w.extents[j].second);
            }
        }
    }
    part.grid.resize(cod);
    part.dims_.resize(cod);
    for (int i = 0; i < cod; ++i) {
        part.grid[i].assign(gsets[i].begin(), gsets[i].end());
        part.dims_[i] = part.grid[i].size() - 1;
    }
    part.strides_.assign(cod, 1);
    for (int i = 1; i < cod; ++i) part.strides_[i] = part.strides_[i - 1] * part.dims_[i - 1];
    size_t total = 1;
    for (int i = 0; i < cod; ++i) total *= part.dims_[i];

    // index walls per (coordinate, offset)
    std::vector<std::map<Surd, std::vector<const Wall*>>> at((size_t)cod);
    for (const auto& w : wallset) at[w.coordinate][w.offset].push_back(&w);

    UnionFind uf(total);
    std::vector<size_t> coords(cod, 0);
    for (size_t cell = 0; cell < total; ++cell) {
        // decode
        size_t rem = cell;
        for (int i = 0; i < cod; ++i) {
            coords[i] = rem % part.dims_[i];
            rem /= part.dims_[i];
        }
        for (int i = 0; i < cod; ++i) {
            if (coords[i] + 1 > part.dims_[i] - 1) continue;  // no cell past the last line
            const Surd& line = part.grid[i][coords[i] + 1];
            auto it = at[i].find(line);
            bool covered = false;
            if (it != at[i].end()) {
                for (const Wall* w : it->second) {
                    if (w->extents.empty()) {
                        covered = true;
                        break;
                    }
                    bool contains = true;
                    for (int j = 0; j < cod && contains; ++j) {
                        if (j == i) continue;
                        const Surd& clo = part.grid[j][coords[j]];
                        const Surd& chi = part.grid[j][coords[j] + 1];
                        if (Surd::compare(w->extents[j].first, clo) == Ordering::greater ||
                            Surd::compare(chi, w->extents[j].second) == Ordering::greater)
                            contains = false;
                    }
                    if (contains) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) uf.unite(cell, cell + part.strides_[i]);
        }
    }

    std::map<size_t, size_t> root_to_comp;
    part.cell_to_component_.assign(total, -1);
    for (size_t cell = 0; cell < total; ++cell) {
        size_t root = uf.find(cell);
        auto [it, fresh] = root_to_comp.emplace(root, part.components.size());
        if (fresh) part.components.emplace_back();
        Component& comp = part.components[it->second];
        part.cell_to_component_[cell] = (long)it->second;
        comp.cells.push_back(cell);
        size_t rem = cell;
        Surd vol(1L);
        for (int i = 0; i < cod; ++i) {
            size_t ci = rem % part.dims_[i];
            rem /= part.dims_[i];
            vol *= part.grid[i][ci + 1] - part.grid[i][ci];
        }
        comp.volume += vol;
    }
    for (auto& comp : part.components) {
        size_t cell = *std::min_element(comp.cells.begin(), comp.cells.end());
        comp.representative.resize(cod);
        size_t rem = cell;
        for (int i = 0; i < cod; ++i) {
            size_t ci = rem % part.dims_[i];
            rem /= part.dims_[i];
            comp.representative[i] =
                (part.grid[i][ci] + part.grid[i][ci + 1]) / Surd(2L);
        }
    }
    return part;
}

namespace {

// The w-independent part of patch_at_internal: all candidate displacements n
// of the type's index set whose star lands within the window reach, with
// star(n) precomputed.  Membership of a concrete w then costs one vector
// addition and cod window-side tests per candidate.
struct InternalIndexSet {
    struct Candidate {
        IVec n;
        SVec star;
        bool in_index_set;  // pi_1(n) in r*Omega for type 1; always true for type 2
    };
    std::vector<Candidate> candidates;
    PatchType type;
    mpq_class r;

    InternalIndexSet(const Scheme& scheme, const mpq_class& radius, PatchType t,
                     const OmegaSpec& omega)
        : type(t), r(radius) {
        int cod = scheme.codim();
        IVec lo, hi;
        omega_column_box(scheme, radius, t == PatchType::type1, omega, lo, hi);
        IVec half = window_halfwidth(scheme);
        scan_box(lo, hi, [&](const IVec& d1) {
            if (t == PatchType::type2 && !omega.contains(d1, radius)) return;
            SVec l = scheme.apply_l(to_svec(IVec(d1.begin(), d1.end())));
            IVec nlo(cod), nhi(cod);
            for (int i = 0; i < cod; ++i) {
                nlo[i] = (l[i] - Surd((long)half[i])).floor().get_si() - 1;
                nhi[i] = (l[i] + Surd((long)half[i])).ceil().get_si() + 1;
            }
            IVec n((size_t)scheme.k());
            for (int j = 0; j < scheme.d(); ++j) n[j] = d1[j];
            scan_box(nlo, nhi, [&](const IVec& n2) {
                for (int i = 0; i < cod; ++i) n[scheme.d() + i] = n2[i];
                SVec v = scheme.star(n);
                for (int i = 0; i < cod; ++i)
                    if (Surd::compare(v[i].abs(), Surd(1L)) == Ordering::greater) return;
                bool in_set = true;
                if (t == PatchType::type1) {
                    SVec img = scheme.project(n, Scheme::Proj::pi1);
                    in_set = omega.contains(img, radius, scheme.mode());
                }
                candidates.push_back(Candidate{n, std::move(v), in_set});
            });
        });
    }

    PatchClass at(const Scheme& scheme, const SVec& w) const {
        int cod = scheme.codim();
        std::vector<IVec> disp;
        for (const auto& cand : candidates) {
            bool inside = true, boundary = false, outside_closed = false;
            for (int i = 0; i < cod; ++i) {
                int side = scheme.window_coord_side(cand.star[i] + w[i]);
                if (side == 0) boundary = true;
                if (side < 0) {
                    inside = false;
                    outside_closed = true;
                }
            }
            if (boundary && !outside_closed && cand.in_index_set)
                throw OnSingularSet("internal point lies on a wall of sing_" +
                                    std::to_string((int)type) + "(" + r.get_str() + ")");
            if (inside && !boundary && cand.in_index_set) disp.push_back(cand.n);
        }
        std::sort(disp.begin(), disp.end());
        PatchClass c;
        c.displacements = std::move(disp);
        c.patch_type = type;
        c.r = r;
        return c;
    }
};

}  // namespace

PatchClass patch_at_internal(const Scheme& scheme, const SVec& w, const mpq_class& r,
                             PatchType type, const OmegaSpec& omega) {
    if (sgn(r) < 0) throw ConfigError("patch radius must be nonnegative");
    scheme.check_radius(r);
    return InternalIndexSet(scheme, r, type, omega).at(scheme, w);
}

AnalyticSpectrum analytic_spectrum(const Scheme& scheme, const mpq_class& r, PatchType type,
                                   const OmegaSpec& omega) {
    return analytic_spectrum(scheme, r, type, omega,
                             components_of(walls(scheme, r, type, omega), scheme.codim()));
}

AnalyticSpectrum analytic_spectrum(const Scheme& scheme, const mpq_class& r, PatchType type,
                                   const OmegaSpec& omega, const WindowPartition& part) {
    if (sgn(r) < 0) throw ConfigError("patch radius must be nonnegative");
    scheme.check_radius(r);
    AnalyticSpectrum spec;
    spec.component_count = (long)part.components.size();
    InternalIndexSet index(scheme, r, type, omega);
    for (const auto& comp : part.components) {
        if (type == PatchType::type2 && comp.cells.size() != 1)
            throw Error("type-2 component is not a single box");
        PatchClass cls = index.at(scheme, comp.representative);
        spec.attribution[cls] += comp.volume;
        spec.components_per_class[cls] += 1;
    }
    if (type == PatchType::type2) {
        for (const auto& [cls, count] : spec.components_per_class) {
            if (count != 1)
                throw Error("type-2 component->class attribution is not injective");
        }
    }
    std::set<Surd> distinct;
    for (const auto& [cls, f] : spec.attribution) distinct.insert(f);
    spec.frequencies.assign(distinct.begin(), distinct.end());
    return spec;
}

std::string spectrum_csv_header() {
    return "r,type,component_count,class_count,distinct_frequency_count,frequencies\n";
}

std::string spectrum_csv_row(const mpq_class& r, PatchType type, const AnalyticSpectrum& s,
                             int digits) {
    std::ostringstream os;
    os << r.get_str() << "," << (int)type << "," << s.component_count << "," << s.class_count()
       << "," << s.frequencies.size() << ",";
    for (size_t i = 0; i < s.frequencies.size(); ++i) {
        os << s.frequencies[i].to_literal() << "~" << s.frequencies[i].to_decimal(digits)
           << (i + 1 < s.frequencies.size() ? ";" : "");
    }
    os << "\n";
    return os.str();
}

}  // namespace quasigap
