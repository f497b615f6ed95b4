#include "kweyl/kmodule.hpp"

#include "kweyl/sampling.hpp"

namespace kweyl {

McleodReport mcleod_report(std::uint64_t seed) {
    McleodReport report;
    auto d = build_root_datum("A1", LatticeChoice::simply_connected);
    // the example's basis {1, x}
    std::vector<IVector> weights(2, IVector::Zero(1));
    weights[1][0] = 1;
    auto basis = steinberg_basis<Int>(d, &weights);
    InducedModule<Int> module(basis, 1, 1);
    Sampler rng(seed);

    // witness: the torsion generator in the x-coordinate
    InducedElement<Int> witness = module.zero();
    witness.coords[1].torsion[0] = 1;
    report.witness_weyl_invariant = module.is_weyl_invariant(witness);
    report.witness_hecke_invariant = module.is_hecke_invariant(witness);

    // Hecke invariants = image of j_pullback = {b . 1}: exhaustively over the
    // 4-element torsion grid, with the free parts drawn from a sample pool
    // that includes 0.
    std::vector<LaurentPoly<Int>> pool{LaurentPoly<Int>::zero(d), LaurentPoly<Int>::one(d)};
    for (int i = 0; i < 4; ++i) pool.push_back(rng.invariant<Int>(d));
    bool match = true;
    for (int t1 = 0; t1 <= 1; ++t1)
        for (int t2 = 0; t2 <= 1; ++t2) {
            for (const auto& f1 : pool)
                for (const auto& f2 : pool) {
                    InducedElement<Int> a = module.zero();
                    a.coords[0] = module.make_b({f1}, {static_cast<std::uint8_t>(t1)});
                    a.coords[1] = module.make_b({f2}, {static_cast<std::uint8_t>(t2)});
                    bool in_pullback_image = a.coords[1].is_zero();
                    if (module.is_hecke_invariant(a) != in_pullback_image) match = false;
                    ++report.grid_points;
                }
        }
    report.hecke_invariants_match_pullback_image = match;

    // with torsion-free B = R(G) the Weyl and Hecke invariants agree
    InducedModule<Int> free_module(basis, 1, 0);
    bool agree = true;
    for (int i = 0; i < 20; ++i) {
        InducedElement<Int> a = free_module.zero();
        switch (rng.uniform(0, 2)) {
        case 0:
            a.coords[0] = free_module.make_b({rng.invariant<Int>(d)});
            a.coords[1] = free_module.make_b({rng.invariant<Int>(d)});
            break;
        case 1:
            a = free_module.j_pullback(free_module.make_b({rng.invariant<Int>(d)}));
            break;
        default: {
            // symmetrized element: a + s(a) is Weyl invariant
            a.coords[rng.uniform(0, 1)] = free_module.make_b({rng.invariant<Int>(d)});
            a = free_module.add(a, free_module.act(op_weyl<Int>(d, d->simple_reflection(0)), a));
            break;
        }
        }
        if (free_module.is_weyl_invariant(a) != free_module.is_hecke_invariant(a)) agree = false;
        ++report.samples;
    }
    report.torsion_free_weyl_equals_hecke = agree;
    return report;
}

} // namespace kweyl
