#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasigap/linalg.hpp"
#include "quasigap/relations.hpp"
#include "quasigap/surd.hpp"

namespace quasigap {

/**
 * Convex region Omega' in R^d given by halfspaces normal.x (<|<=) offset.
 * Scaled membership tests x in r*Omega' exactly; r = 0 degenerates to {0}.
 */
struct HalfSpace {
    QVec normal;
    mpq_class offset;
    bool strict = false;
};

struct OmegaSpec {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;
    std::string preset;  // "hypercube", "hypercube-closed", "theorem13", or ""

    static OmegaSpec hypercube(int dim, bool open = true);
    // {x in (0,1]^d : x_d + 2*x_1 <= 1}, optionally translated.
    static OmegaSpec theorem13(int dim, const QVec& translate = {});
    static OmegaSpec from_preset(const std::string& name, int dim);

    bool contains(const IVec& x, const mpq_class& r) const;
    bool contains(const SVec& x, const mpq_class& r, const ScalarMode& mode) const;
    // Per-coordinate closed bounding box of Omega' (unit scale).
    void bounding_box(QVec& lo, QVec& hi) const;
    // Minkowski gauge sup_h (normal.x)/offset; requires 0 interior.
    Surd gauge(const SVec& x) const;
    void validate() const;  // bounded, nonempty interior
};

struct WindowSpec {
    std::vector<IVec> generators;  // columns w_j of B, each in Z^(k-d)
    ZMat b;                        // B, columns = generators
    long index = 1;                // I = |det B|
    std::vector<long> denominators;  // m_i: i-th coordinates of B^-1 Z^(k-d) = (1/m_i) Z
    QMat binv;

    static WindowSpec build(const std::vector<IVec>& generators);
};

struct SchemeConfig {
    int k = 0, d = 0;
    std::vector<std::vector<std::string>> alpha;  // (k-d) x d surd literals
    std::vector<std::string> shift;               // k literals
    std::vector<IVec> window_generators;
    std::string f0_mode = "orthogonal";               // or "explicit"
    std::vector<std::vector<std::string>> f0_basis;   // (k-d) vectors of k literals
    ScalarMode mode;
    long relation_height = 10000;

    static SchemeConfig from_json_text(const std::string& text);
    std::string to_json_text() const;
    static SchemeConfig load(const std::string& path);
};

/**
 * A built cut-and-project scheme: E is the graph of L (matrix alpha), F =
 * {0} x R^(k-d), window = B [0,1)^(k-d) in F, physical points live on E
 * parametrized by their first d coordinates.  Immutable after build; all
 * queries are exact (or guarded, in surrogate mode).
 */
class Scheme {
public:
    static Scheme build(const SchemeConfig& config);

    int k() const { return k_; }
    int d() const { return d_; }
    int codim() const { return k_ - d_; }
    const SMat& alpha() const { return alpha_; }
    const SVec& shift() const { return shift_; }
    const WindowSpec& window() const { return window_; }
    const ScalarMode& mode() const { return mode_; }
    const SMat& lprime() const { return lprime_; }  // B^-1 L
    const SMat& p2() const { return p2_; }          // internal -> physical block of pi_1
    const SMat& projector() const { return p_; }    // full pi_1 coordinate matrix
    long relation_height() const { return relation_height_; }
    const SchemeConfig& config() const { return config_; }

    // L(x) for the first d coordinates of a lattice vector.
    SVec apply_l(const SVec& n1) const;
    // B-coordinates of pi*(n) = (0, n_2 - L(n_1)); exact.
    SVec star(const IVec& n) const;
    // B-coordinates of pi*(n + s).
    SVec star_shifted(const IVec& n) const;

    enum class Proj { pi1, pi2 };
    // E-coordinates (first d) of the projection of n along F_0 (pi1) or F (pi2).
    SVec project(const IVec& n, Proj which) const;
    // E-coordinates of pi_1(n + s): the physical position of the lift n.
    SVec physical(const IVec& n) const;

    // Strip membership of n + s; SingularShift on exact boundary contact.
    bool accept(const IVec& n) const;

    // Window-coordinate membership w in [0,1)^(k-d) relative to walls;
    // returns -1 (outside), 0 (on the boundary lattice), +1 (inside).
    int window_coord_side(const Surd& v) const;

    Ordering gcmp(const Surd& x, const Surd& y) const { return guarded_cmp(x, y, mode_); }
    // Surrogate validity: r within the configured validity radius.
    void check_radius(const mpq_class& r) const;

    // Closed per-coordinate bounds of B [0,1]^(k-d) (integer window corners).
    void window_box(IVec& lo, IVec& hi) const;
    // max |(P2 B sigma)_i| over sigma in {-1,0,1}-corners: physical reach of
    // one window diameter, used for covering-box inflation.
    Surd physical_reach() const;

private:
    int k_ = 0, d_ = 0;
    SMat alpha_;    // (k-d) x d
    SVec shift_;    // k
    SMat f0_;       // k x (k-d) columns
    WindowSpec window_;
    ScalarMode mode_;
    SMat p_;        // d x k, top rows of [E|F0]^-1
    SMat p2_;       // d x (k-d)
    SMat lprime_;   // (k-d) x d
    long relation_height_ = 10000;
    SchemeConfig config_;

    void check_totally_irrational() const;
    void check_f0_lattice() const;
};

}  // namespace quasigap
