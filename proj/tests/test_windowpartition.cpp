#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "quasigap/pointset.hpp"
#include "quasigap/windowpartition.hpp"
#include "testutil.hpp"

using namespace quasigap;
using namespace quasigap::testutil;

namespace {

Surd alpha5() { return Surd::quad(-1, 1, 2, 5); }

std::set<std::pair<int, Surd>> offset_set(const std::vector<Wall>& ws) {
    std::set<std::pair<int, Surd>> out;
    for (const auto& w : ws) out.insert({w.coordinate, w.offset});
    return out;
}

}  // namespace

TEST_CASE("zero radius leaves only the window's own faces") {
    Scheme s = Scheme::build(fibonacci_config());
    auto ws = walls(s, 0, PatchType::type2, OmegaSpec::hypercube(1, false));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].offset.is_zero());
    auto part = components_of(ws, 1);
    CHECK(part.components.size() == 1);
    CHECK(part.components[0].volume == Surd(1L));
}

TEST_CASE("Fibonacci r=1 type-2 walls sit at 0, 1-alpha, alpha") {
    Scheme s = Scheme::build(fibonacci_config());
    auto ws = walls(s, 1, PatchType::type2, OmegaSpec::hypercube(1, false));
    REQUIRE(ws.size() == 3);
    std::set<Surd> offsets;
    for (const auto& w : ws) {
        CHECK(w.coordinate == 0);
        CHECK(w.full_extents());
        offsets.insert(w.offset);
    }
    std::set<Surd> expect{Surd(), Surd(1L) - alpha5(), alpha5()};
    CHECK(offsets == expect);
}

TEST_CASE("Fibonacci r=1 components carry the golden volumes") {
    Scheme s = Scheme::build(fibonacci_config());
    auto part =
        components_of(walls(s, 1, PatchType::type2, OmegaSpec::hypercube(1, false)), 1);
    REQUIRE(part.components.size() == 3);
    std::vector<Surd> vols;
    for (const auto& c : part.components) vols.push_back(c.volume);
    // cells ordered from 0: lengths 1-alpha, 2alpha-1, 1-alpha
    CHECK(vols[0] == Surd::quad(3, -1, 2, 5));
    CHECK(vols[1] == Surd::quad(-2, 1, 1, 5));
    CHECK(vols[2] == Surd::quad(3, -1, 2, 5));
    CHECK(part.total_volume() == Surd(1L));
}

TEST_CASE("analytic spectrum: Fibonacci r=1 has 3 classes, 2 frequencies") {
    Scheme s = Scheme::build(fibonacci_config());
    auto spec = analytic_spectrum(s, 1, PatchType::type2, OmegaSpec::hypercube(1, false));
    CHECK(spec.component_count == 3);
    CHECK(spec.class_count() == 3);
    REQUIRE(spec.frequencies.size() == 2);
    CHECK(spec.frequencies[0] == Surd::quad(-2, 1, 1, 5));  // sqrt(5)-2
    CHECK(spec.frequencies[1] == Surd::quad(3, -1, 2, 5));  // (3-sqrt(5))/2
}

TEST_CASE("volume conservation and the Lemma 3.2 bijection at many radii") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        for (long r = 1; r <= 6; ++r) {
            auto part = components_of(walls(s, r, PatchType::type2, omega), s.codim());
            CHECK(part.total_volume() == Surd(1L));
            auto spec = analytic_spectrum(s, r, PatchType::type2, omega);
            CHECK(spec.class_count() == spec.component_count);
            Surd sum;
            for (const auto& [cls, f] : spec.attribution) sum += f;
            CHECK(sum == Surd(1L));
        }
    }
}

TEST_CASE("type-2 walls refine monotonically in r") {
    Scheme s = Scheme::build(golden_root2_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    auto coarse_walls = walls(s, 2, PatchType::type2, omega);
    auto fine_walls = walls(s, 5, PatchType::type2, omega);
    auto co = offset_set(coarse_walls), fo = offset_set(fine_walls);
    for (const auto& w : co) CHECK(fo.count(w) == 1);
    // every fine component sits inside a single coarse component
    auto coarse = components_of(coarse_walls, s.codim());
    auto fine = components_of(fine_walls, s.codim());
    for (const auto& comp : fine.components) {
        long home = coarse.locate(fine.cell_center(comp.cells.front()));
        REQUIRE(home >= 0);
        for (size_t cell : comp.cells) CHECK(coarse.locate(fine.cell_center(cell)) == home);
    }
}

TEST_CASE("a partial wall leaves cells connected through the uncovered half") {
    // synthetic rig: unit square, one full vertical wall at 1/2 and one
    // horizontal wall at 1/2 spanning only x in [0, 1/2)
    Wall vertical;
    vertical.coordinate = 0;
    vertical.offset = Surd(mpq_class(1, 2));
    Wall horizontal;
    horizontal.coordinate = 1;
    horizontal.offset = Surd(mpq_class(1, 2));
    horizontal.extents = {{Surd(0L), Surd(mpq_class(1, 2))}, {Surd(0L), Surd(1L)}};
    auto part = components_of({vertical, horizontal}, 2);
    // left side is cut in two, right side stays connected through the gap
    CHECK(part.components.size() == 3);
    std::multiset<std::string> vols;
    for (const auto& c : part.components) vols.insert(c.volume.to_literal());
    CHECK(vols == std::multiset<std::string>{"1/4", "1/4", "1/2"});
}

TEST_CASE("patch_at_internal agrees with the lattice-route patch") {
    for (const auto& cfg : {fibonacci_config(), golden_root2_config()}) {
        Scheme s = Scheme::build(cfg);
        OmegaSpec omega = OmegaSpec::hypercube(s.d(), false);
        auto pts = generate(s, 8);
        size_t stride = std::max<size_t>(1, pts.size() / 7);
        for (mpq_class r : {mpq_class(1), mpq_class(3)}) {
            for (size_t i = 0; i < pts.size(); i += stride) {
                for (PatchType t : {PatchType::type1, PatchType::type2}) {
                    PatchClass via_lattice = patch(s, pts[i], r, t, omega);
                    PatchClass via_window = patch_at_internal(s, pts[i].internal, r, t, omega);
                    CHECK(via_lattice.displacements == via_window.displacements);
                }
            }
        }
    }
}

TEST_CASE("interior points of one component share a patch class") {
    Scheme s = Scheme::build(golden_root2_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    auto part = components_of(walls(s, 2, PatchType::type2, omega), 2);
    for (const auto& comp : part.components) {
        PatchClass at_rep = patch_at_internal(s, comp.representative, 2, PatchType::type2, omega);
        for (size_t cell : comp.cells) {
            PatchClass at_cell =
                patch_at_internal(s, part.cell_center(cell), 2, PatchType::type2, omega);
            CHECK(at_cell.displacements == at_rep.displacements);
        }
    }
}

TEST_CASE("points on walls raise OnSingularSet") {
    Scheme s = Scheme::build(fibonacci_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    SVec on_wall{alpha5()};  // offset alpha is a wall at r=1
    CHECK_THROWS_AS(patch_at_internal(s, on_wall, 1, PatchType::type2, omega), OnSingularSet);
}

TEST_CASE("d=1, k=2 spectra never exceed three distinct frequencies") {
    Scheme s = Scheme::build(fibonacci_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    for (long r = 1; r <= 12; ++r) {
        auto spec = analytic_spectrum(s, r, PatchType::type2, omega);
        CHECK(spec.frequencies.size() <= 3);
    }
}

TEST_CASE("d=1, k=3 spectra are products of two circle partitions") {
    // each coordinate contributes at most 3 distinct gaps, so at most 9
    // distinct products; exact cross-field dedup keeps genuine coincidences
    Scheme s = Scheme::build(golden_root2_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    for (long r = 1; r <= 8; ++r) {
        auto spec = analytic_spectrum(s, r, PatchType::type2, omega);
        CHECK(spec.frequencies.size() <= 9);
    }
}

TEST_CASE("the 3-to-1 rig produces partial type-1 walls") {
    Scheme s = Scheme::build(golden_root2_config());
    OmegaSpec omega = OmegaSpec::hypercube(1, false);
    auto ws = walls(s, 2, PatchType::type1, omega);
    bool any_partial = false;
    for (const auto& w : ws) any_partial = any_partial || !w.full_extents();
    CHECK(any_partial);
    // type-1 attribution may group several components per class; volumes
    // still account for the whole window
    auto spec = analytic_spectrum(s, 2, PatchType::type1, omega);
    Surd sum;
    long grouped = 0;
    for (const auto& [cls, f] : spec.attribution) sum += f;
    for (const auto& [cls, n] : spec.components_per_class) grouped += n;
    CHECK(sum == Surd(1L));
    CHECK(grouped == spec.component_count);
    CHECK(spec.class_count() <= spec.component_count);
}

TEST_CASE("type-2 walls always span the full cross-section") {
    Scheme s = Scheme::build(coupled_window_config());
    for (const auto& w : walls(s, 3, PatchType::type2, OmegaSpec::hypercube(1, false)))
        CHECK(w.full_extents());
}

TEST_CASE("coupled window: denominators replicate wall offsets") {
    Scheme s = Scheme::build(coupled_window_config());
    auto ws = walls(s, 0, PatchType::type2, OmegaSpec::hypercube(1, false));
    // m = (1, 2): coordinate 2 gets offsets {0, 1/2} already at r = 0
    std::set<std::pair<int, Surd>> expect{
        {0, Surd()}, {1, Surd()}, {1, Surd(mpq_class(1, 2))}};
    CHECK(offset_set(ws) == expect);
}
