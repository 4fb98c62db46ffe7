#pragma once

#include <map>
#include <vector>

#include "quasigap/patches.hpp"
#include "quasigap/scheme.hpp"

namespace quasigap {

/**
 * One wall of sing_i(r) in window (B-)coordinates: a piece of the hyperplane
 * x_coordinate = offset.  Type-2 walls span the full window cross-section;
 * type-1 walls may be partial, with per-coordinate extents clipped to [0,1].
 */
struct Wall {
    int coordinate = 0;
    Surd offset;                                // in [0,1)
    std::vector<std::pair<Surd, Surd>> extents;  // per other coordinate; empty = full
    IVec source_n;

    bool full_extents() const;
};

std::vector<Wall> walls(const Scheme& scheme, const mpq_class& r, PatchType type,
                        const OmegaSpec& omega);

struct Component {
    std::vector<size_t> cells;  // indices into the partition grid
    Surd volume;
    SVec representative;  // interior point: center of the smallest cell
};

/**
 * The offset grid and the connected components of reg_i(r).  Cells are the
 * grid boxes; adjacent cells merge across every facet not covered by a wall.
 */
struct WindowPartition {
    std::vector<std::vector<Surd>> grid;  // per coordinate, sorted, 0 and 1 included
    std::vector<Component> components;

    Surd total_volume() const;
    // Component index containing w; -1 if w lies on the grid skeleton.
    long locate(const SVec& w) const;
    // Exact center of a grid cell.
    SVec cell_center(size_t cell) const;

private:
    friend WindowPartition components_of(const std::vector<Wall>&, int);
    std::vector<size_t> dims_, strides_;
    std::vector<long> cell_to_component_;
    size_t cell_index(const std::vector<size_t>& coords) const;
};

WindowPartition components_of(const std::vector<Wall>& wallset, int cod);

// The patch class determined by an interior window point: displacements n of
// the type's index set with star(n) + w in [0,1)^(k-d).  OnSingularSet when
// w lies on a wall.
PatchClass patch_at_internal(const Scheme& scheme, const SVec& w, const mpq_class& r,
                             PatchType type, const OmegaSpec& omega);

struct AnalyticSpectrum {
    long component_count = 0;
    std::map<PatchClass, Surd> attribution;       // class -> exact frequency
    std::map<PatchClass, long> components_per_class;
    std::vector<Surd> frequencies;                // distinct values, ascending
    long class_count() const { return (long)attribution.size(); }
};

// Lemma-level spectrum: type-2 frequencies are single component volumes
// (bijection verified), type-1 frequencies sum the volumes of all components
// attributed to a class.
AnalyticSpectrum analytic_spectrum(const Scheme& scheme, const mpq_class& r, PatchType type,
                                   const OmegaSpec& omega);
// Same, against a partition the caller already computed.
AnalyticSpectrum analytic_spectrum(const Scheme& scheme, const mpq_class& r, PatchType type,
                                   const OmegaSpec& omega, const WindowPartition& part);

// CSV row: r, type, component_count, class_count, distinct_frequency_count,
// frequencies (exact literal and decimal).
std::string spectrum_csv_header();
std::string spectrum_csv_row(const mpq_class& r, PatchType type, const AnalyticSpectrum& s,
                             int digits);

}  // namespace quasigap
