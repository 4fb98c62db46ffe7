#pragma once

#include <map>
#include <vector>

#include "quasigap/pointset.hpp"
#include "quasigap/scheme.hpp"

namespace quasigap {

enum class PatchType { type1 = 1, type2 = 2 };

/**
 * A patch up to translation: the sorted set of lattice displacements n such
 * that the displaced lift stays in the strip and the displacement passes the
 * type's window test (n_1 in r*Omega' for type 2, pi_1(n) in r*Omega for
 * type 1).  Displacement lists are exact integers, so class identity is
 * list identity.
 */
struct PatchClass {
    std::vector<IVec> displacements;  // sorted, contains 0
    PatchType patch_type = PatchType::type2;
    mpq_class r = 0;

    bool operator<(const PatchClass& o) const {
        if (displacements.size() != o.displacements.size())
            return displacements.size() < o.displacements.size();
        return displacements < o.displacements;
    }
    bool operator==(const PatchClass& o) const { return displacements == o.displacements; }
    size_t size() const { return displacements.size(); }
};

// The patch of a generated point, computed through absolute strip acceptance.
PatchClass patch(const Scheme& scheme, const LiftedPoint& y, const mpq_class& r,
                 PatchType type, const OmegaSpec& omega);

struct EmpiricalSpectrum {
    std::map<PatchClass, long> counts;
    long total = 0;
    mpq_class frequency(const PatchClass& c) const {
        auto it = counts.find(c);
        if (it == counts.end() || total == 0) return 0;
        mpq_class f(it->second, total);
        f.canonicalize();
        return f;
    }
};

// Counts patch classes over all centers y in generate(R); parallel over
// centers with a deterministic ordered merge.
EmpiricalSpectrum empirical_spectrum(const Scheme& scheme, const mpq_class& r,
                                     const mpq_class& big_r, PatchType type,
                                     const OmegaSpec& omega);
EmpiricalSpectrum empirical_spectrum_serial(const Scheme& scheme, const mpq_class& r,
                                            const mpq_class& big_r, PatchType type,
                                            const OmegaSpec& omega);

// A rational c2 for which P2(y, r-c2) is contained in P1(y, r) and P1(y, r)
// in P2(y, r+c2), for every center and radius: the window's physical reach
// measured in the gauge of Omega, rounded up to a dyadic rational.
mpq_class sandwich_c2(const Scheme& scheme, const OmegaSpec& omega);
// The exact gauge bound before rounding (linear in the window diameter).
Surd sandwich_c2_exact(const Scheme& scheme, const OmegaSpec& omega);

// JSON report rows sorted by descending frequency, then class id.
std::string spectrum_json(const EmpiricalSpectrum& spec);

}  // namespace quasigap
