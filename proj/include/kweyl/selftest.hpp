#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kweyl/kmodule.hpp"
#include "kweyl/sampling.hpp"

namespace kweyl {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestConfig {
    DatumPtr datum;
    ScalarRing scalar = ScalarRing::integers;
    std::uint64_t seed = 0;
    int samples = 10;
};

namespace detail {

inline void record(std::vector<CheckResult>& out, const std::string& name, bool pass,
                   const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

template <class S>
void run_typed_selftest(const SelftestConfig& cfg, std::vector<CheckResult>& out) {
    const DatumPtr& d = cfg.datum;
    Sampler rng(cfg.seed);
    const int n_samples = cfg.samples;
    auto one = LaurentPoly<S>::one(d);

    // braid independence at the longest element, both operator kinds
    {
        std::vector<LaurentPoly<S>> samples;
        for (int i = 0; i < n_samples; ++i) samples.push_back(rng.template laurent<S>(d));
        record(out, "braid-independence", braid_check<S>(d, d->longest_element(), samples));
    }

    // pointwise operator identities on random inputs
    {
        bool pass = true;
        for (int i = 0; i < n_samples && pass; ++i) {
            auto u = rng.template laurent<S>(d), v = rng.template laurent<S>(d);
            for (std::size_t k = 0; k < d->positive_roots().size() && pass; ++k) {
                const IVector& alpha = d->positive_roots()[k];
                int s = d->reflection_id(static_cast<int>(k));
                auto ea = LaurentPoly<S>::monomial(d, alpha);
                auto du = apply_simple(OperatorKind::delta, u, alpha);
                auto dv = apply_simple(OperatorKind::delta, v, alpha);
                auto dpu = apply_simple(OperatorKind::delta_prime, u, alpha);
                auto dpv = apply_simple(OperatorKind::delta_prime, v, alpha);
                pass = pass && apply_simple(OperatorKind::delta, one, alpha) == one;
                pass = pass && apply_simple(OperatorKind::delta, du, alpha) == du;
                pass = pass && apply_simple(OperatorKind::delta_prime, dpu, alpha) == dpu;
                pass = pass && weyl_act(s, du) == du;
                pass = pass && apply_simple(OperatorKind::delta, u * v, alpha) ==
                                   du * v + weyl_act(s, u) * (dv - v);
                pass = pass && apply_simple(OperatorKind::delta_prime, u * v, alpha) ==
                                   dpu * v + weyl_act(s, u) * dpv;
                pass = pass && dpu == ea * (du - u);
            }
        }
        record(out, "operator-identities", pass);
    }

    // partial'_w = e^rho partial_w e^{-rho}
    {
        bool pass = true;
        auto erho = LaurentPoly<S>::monomial_any(d, d->rho());
        auto erho_inv = LaurentPoly<S>::monomial_any(d, -d->rho());
        for (int i = 0; i < std::min(n_samples, 5) && pass; ++i) {
            auto u = rng.template laurent<S>(d);
            for (int w = 0; w < d->weyl_order() && pass; ++w)
                pass = apply_partial(OperatorKind::delta_prime, u, w) ==
                       erho * apply_partial(OperatorKind::delta, erho_inv * u, w);
        }
        record(out, "rho-conjugation", pass);
    }

    // character formula: quotient route vs top operator, d = J(1), top(d) = |W|
    {
        auto denom = weyl_denominator<S>(d);
        bool pass = denom == antisymmetrize(one);
        pass = pass && apply_partial(OperatorKind::delta, denom, d->longest_element()) ==
                           LaurentPoly<S>::constant(d, S(d->weyl_order()));
        for (int i = 0; i < std::min(n_samples, 8) && pass; ++i) {
            IVector lambda = rng.dominant_weight(d, 2);
            auto mono = LaurentPoly<S>::monomial(d, lambda);
            pass = apply_partial(OperatorKind::delta, mono, d->longest_element()) ==
                   exact_divide(antisymmetrize(mono), denom);
        }
        record(out, "character-formula", pass);
    }

    // Hecke ring: multiplication law, normal-form round trip, augmentation
    {
        std::vector<LaurentPoly<S>> samples;
        for (int i = 0; i < std::min(n_samples, 5); ++i) samples.push_back(rng.template laurent<S>(d, 3, 2, 4));
        auto report = hecke_relations_check<S>(d, samples);
        record(out, "hecke-relations", report.pass(),
               std::to_string(report.checks) + " identities checked");

        auto primes = op_partial_all<S>(d, OperatorKind::delta_prime);
        bool pass = true;
        for (int i = 0; i < std::min(n_samples, 8) && pass; ++i) {
            TwistedOperator<S> op(d);
            for (int w = 0; w < d->weyl_order(); ++w)
                if (rng.uniform(0, 1)) op = op + op_scalar(rng.template laurent<S>(d, 2, 2, 3)) * primes[w];
            pass = reconstruct(d, normal_form(op)) == op;
            pass = pass && (annihilates_top(op) == in_augmentation_ideal(op));
        }
        record(out, "hecke-normal-form", pass);
    }

    // Steinberg basis, duality, reproducing identity, module invariants
    if (abs(d->lattice_determinant()) == 1) {
        bool pass = true;
        std::string detail;
        try {
            auto basis = steinberg_basis<S>(d);
            detail = "gram determinant " + render_laurent(basis.gram_det());
            for (int i = 0; i < std::min(n_samples, 8) && pass; ++i)
                (void)expand_in_basis(rng.template laurent<S>(d), basis); // reconstruction verified inside
            InducedModule<S> m(basis, 1, 0);
            for (int i = 0; i < std::min(n_samples, 8) && pass; ++i) {
                auto a = m.zero();
                for (int w = 0; w < basis.size(); ++w)
                    if (rng.uniform(0, 1)) a.coords[w] = m.make_b({rng.template invariant<S>(d)});
                bool in_image = true;
                for (int w = 1; w < basis.size(); ++w)
                    if (!a.coords[w].is_zero()) in_image = false;
                pass = m.is_hecke_invariant(a) == in_image;
                auto [b, ok] = m.project_weyl_formula(a);
                pass = pass && ok;
            }
        } catch (const Error& e) {
            pass = false;
            detail = e.what();
        }
        record(out, "steinberg-duality", pass, detail);
    }

    // discriminant route in the rationals mode: pi = |W|^{-1} sum_w w
    if constexpr (std::is_same_v<S, Rat>) {
        auto u0 = weyl_denominator<Rat>(d) * Rat(1, d->weyl_order());
        bool pass = true;
        for (int i = 0; i < std::min(n_samples, 8) && pass; ++i) {
            auto u = rng.laurent<Rat>(d);
            LaurentPoly<Rat> avg(d);
            for (int w = 0; w < d->weyl_order(); ++w) avg += weyl_act(w, u);
            pass = projection_pi(u0, u) == avg * Rat(1, d->weyl_order());
        }
        record(out, "discriminant-averaging", pass);
    }
}

} // namespace detail

inline std::vector<CheckResult> run_selftest(const SelftestConfig& cfg) {
    std::vector<CheckResult> out;
    if (cfg.scalar == ScalarRing::integers)
        detail::run_typed_selftest<Int>(cfg, out);
    else
        detail::run_typed_selftest<Rat>(cfg, out);

    // SU(2)-specific fixtures
    if (cfg.datum->type_string() == "A1" && abs(cfg.datum->lattice_determinant()) == 1) {
        bool table = true;
        auto m = InducedModule<Int>::flag_model(cfg.datum);
        for (int k = -5; k <= 5 && table; ++k)
            for (int l = -2; l <= 2 && table; ++l) {
                IVector ek(1), el(1);
                ek << k;
                el << l;
                auto a = m.embed(LaurentPoly<Int>::monomial(cfg.datum, ek),
                                 m.make_b({LaurentPoly<Int>::monomial(cfg.datum, el)}));
                LaurentPoly<Int> expect(cfg.datum);
                IVector e(1);
                if (k >= 0)
                    for (int j = k; j >= -k; j -= 2) {
                        e << j + l;
                        expect.add_term(e, Int(1));
                    }
                else if (k <= -2)
                    for (int j = k + 2; j <= -k - 2; j += 2) {
                        e << j + l;
                        expect.add_term(e, Int(-1));
                    }
                table = m.flag_project(a) == expect;
            }
        detail::record(out, "su2-projection-table", table);
        auto report = mcleod_report(cfg.seed + 1);
        detail::record(out, "mcleod-counterexample", report.pass());
    }
    return out;
}

} // namespace kweyl
