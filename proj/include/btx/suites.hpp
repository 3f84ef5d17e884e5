#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "btx/generate.hpp"
#include "btx/io.hpp"
#include "btx/normality.hpp"
#include "btx/toeplitz.hpp"

namespace btx {

class UnknownTheoremError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One randomized trial: the structural criterion, the brute-force oracle,
/// and whether they agree. Disagreements carry a fully serialized instance.
struct TrialOutcome {
    std::string theorem_id;
    json instance;
    bool criterion_result;
    bool oracle_result;
    bool agreement;
};

namespace detail {

struct TrialEnv {
    Rng rng;
    std::size_t n, d;
    AlgebraKind kind;
    CommAlgebra alg;
};

inline TrialEnv make_env(const TrialConfig& cfg, int trial) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    auto n = static_cast<std::size_t>(rng.range(cfg.n_lo, cfg.n_hi));
    auto d = static_cast<std::size_t>(rng.range(cfg.d_lo, cfg.d_hi));
    AlgebraKind kind = cfg.kinds[rng.below(cfg.kinds.size())];
    CommAlgebra alg = gen_algebra(kind, d, rng.next());
    return {rng, n, d, kind, std::move(alg)};
}

inline json instance_base(const TrialEnv& env) {
    return json{{"n", env.n}, {"d", env.d}, {"algebra", to_string(env.kind)}};
}

inline BlockMatrix random_block_matrix(TrialEnv& env, long bound) {
    BlockMatrix m(env.n, env.d);
    for (std::size_t i = 0; i < env.n; ++i)
        for (std::size_t j = 0; j < env.n; ++j)
            m(i, j) = random_span_element(env.rng, env.alg, bound);
    return m;
}

// Adds a nonzero span element to one block on a diagonal of length >= 2,
// which always breaks Toeplitzness (needs n >= 2).
inline void break_toeplitz(TrialEnv& env, BlockMatrix& m, long bound) {
    const std::size_t n = m.blocks();
    require(n >= 2, "cannot break Toeplitzness of a single block");
    std::size_t i, j;
    do {
        i = env.rng.below(n);
        j = env.rng.below(n);
    } while (i >= j ? (i - j > n - 2) : (j - i > n - 2));
    m(i, j) += random_nonzero_span_element(env.rng, env.alg, bound);
}

inline ToeplitzSpec spec_scale(const ToeplitzSpec& s, const GaussianRational& u) {
    ToeplitzSpec out = s;
    out.diag() = u * out.diag();
    for (std::size_t k = 1; k < s.blocks(); ++k) {
        out.lower(k) = u * out.lower(k);
        out.upper(k) = u.conj() * out.upper(k);  // built upper blocks carry adjoints
    }
    return out;
}

// Perturbs one spec entry in place with a nonzero span element.
inline void perturb_spec(TrialEnv& env, ToeplitzSpec& s, long bound) {
    DenseMat delta = random_nonzero_span_element(env.rng, env.alg, bound);
    if (s.blocks() == 1) {
        s.diag() += delta;
        return;
    }
    std::size_t slot = env.rng.below(2 * (s.blocks() - 1) + 1);
    if (slot == 0) s.diag() += delta;
    else if (slot <= s.blocks() - 1) s.lower(slot) += delta;
    else s.upper(slot - (s.blocks() - 1)) += delta;
}

using Runner = std::function<TrialOutcome(const TrialConfig&, int trial)>;

// ---- section 2: displacement structure ------------------------------------

inline TrialOutcome run_L21(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    BlockMatrix m = random_block_matrix(env, cfg.coeff_bound);
    bool criterion = displacement_reconstruct(displacement(m)) == m;
    // oracle route: the literal shift products
    BlockMatrix s = shift(env.n, env.d);
    BlockMatrix dm = m - s * m * s.adjoint();
    BlockMatrix acc(env.n, env.d), term = dm;
    for (std::size_t k = 0; k < env.n; ++k) {
        acc = acc + term;
        term = s * term * s.adjoint();
    }
    bool oracle = acc == m;
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    return {"L2.1", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_L22(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    const bool positive = trial % 2 == 0;
    BlockMatrix m = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                             cfg.coeff_bound)
                        .build();
    if (!positive && env.n >= 2) break_toeplitz(env, m, cfg.coeff_bound);
    bool criterion = displacement_form(m).has_value();
    bool oracle = toeplitz_recognize(m).has_value();
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    return {"L2.2", std::move(inst), criterion, oracle, criterion == oracle};
}

// ---- section 3: products ---------------------------------------------------

inline TrialOutcome run_L31(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    ToeplitzSpec c = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                              cfg.coeff_bound);
    ToeplitzSpec d = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                              cfg.coeff_bound);
    if (trial % 4 == 3) {  // exercise the vanishing-diagonal terms
        c.diag() = DenseMat::zero(env.d);
        d.diag() = DenseMat::zero(env.d);
    }
    bool criterion = product_displacement_rhs(c, d) == displacement(c.build() * d.build());
    json inst = instance_base(env);
    inst["c"] = to_json(c);
    inst["d"] = to_json(d);
    return {"L3.1", std::move(inst), criterion, true, criterion};
}

struct Quadruple {
    ToeplitzSpec a, b, c, d;
};

inline Quadruple gen_toeplitz_quadruple(TrialEnv& env, long bound) {
    // criterion-satisfying families
    switch (env.rng.below(3)) {
        case 0: {  // same vectors, fresh diagonals
            ToeplitzSpec a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                      nullptr, bound);
            ToeplitzSpec b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                      nullptr, bound);
            ToeplitzSpec c = a, d = b;
            c.diag() = random_span_element(env.rng, env.alg, bound);
            d.diag() = random_span_element(env.rng, env.alg, bound);
            return {a, b, c, d};
        }
        case 1: {  // all four commute with the same generalized shift
            DenseMat x = gen_commutant_element(env.alg, env.rng.next());
            auto mk = [&] {
                return gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                                &x, bound);
            };
            return {mk(), mk(), mk(), mk()};
        }
        default: {  // literal copies
            ToeplitzSpec a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                      nullptr, bound);
            ToeplitzSpec b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                      nullptr, bound);
            return {a, b, a, b};
        }
    }
}

inline TrialOutcome run_T32i(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    Quadruple q = gen_toeplitz_quadruple(env, cfg.coeff_bound);
    if (trial % 2 == 1 && env.n >= 2) {
        // localized violation: perturb one vector entry until the criterion flips
        for (int attempt = 0; attempt < 8; ++attempt) {
            Quadruple cand = q;
            ToeplitzSpec* members[4] = {&cand.a, &cand.b, &cand.c, &cand.d};
            ToeplitzSpec* target = members[env.rng.below(4)];
            std::size_t k = 1 + env.rng.below(env.n - 1);
            DenseMat delta = random_nonzero_span_element(env.rng, env.alg, cfg.coeff_bound);
            if (env.rng.coin()) target->lower(k) += delta;
            else target->upper(k) += delta;
            if (!product_toeplitz_test(cand.a, cand.b, cand.c, cand.d)) {
                q = cand;
                break;
            }
        }
    }
    bool criterion = product_toeplitz_test(q.a, q.b, q.c, q.d);
    BlockMatrix diff = q.a.build() * q.b.build() - q.c.build() * q.d.build();
    bool oracle = toeplitz_recognize(diff).has_value();
    json inst = instance_base(env);
    inst["a"] = to_json(q.a);
    inst["b"] = to_json(q.b);
    inst["c"] = to_json(q.c);
    inst["d"] = to_json(q.d);
    return {"T3.2i", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_T32ii(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    // base pair with a Toeplitz product, via a shared generalized shift
    DenseMat x = gen_commutant_element(env.alg, env.rng.next());
    ToeplitzSpec a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                              &x, cfg.coeff_bound);
    ToeplitzSpec b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                              &x, cfg.coeff_bound);
    ToeplitzSpec c = b, d = a;  // products equal via commutation
    if (trial % 2 == 1) {
        GaussianRational u(2);
        c = spec_scale(a, u);
        d = b;
    }
    bool criterion = product_zero_test(a, b, c, d);
    bool oracle = a.build() * b.build() == c.build() * d.build();
    json inst = instance_base(env);
    inst["a"] = to_json(a);
    inst["b"] = to_json(b);
    inst["c"] = to_json(c);
    inst["d"] = to_json(d);
    return {"T3.2ii", std::move(inst), criterion, oracle, criterion == oracle};
}

inline std::pair<ToeplitzSpec, ToeplitzSpec> gen_product_toeplitz_pair(TrialEnv& env,
                                                                       long bound) {
    DenseMat x = gen_commutant_element(env.alg, env.rng.next());
    return {gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant, &x, bound),
            gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant, &x, bound)};
}

inline TrialOutcome run_C33(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    ToeplitzSpec a = ToeplitzSpec::zero(env.n, env.d), b = a;
    if (trial % 2 == 0) {
        auto pr = gen_product_toeplitz_pair(env, cfg.coeff_bound);
        a = pr.first;
        b = pr.second;
    } else {
        a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                     cfg.coeff_bound);
        b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                     cfg.coeff_bound);
        for (int attempt = 0; attempt < 8 && single_product_toeplitz_test(a, b); ++attempt)
            perturb_spec(env, a, cfg.coeff_bound);
    }
    bool criterion = single_product_toeplitz_test(a, b);
    bool oracle = toeplitz_recognize(a.build() * b.build()).has_value();
    json inst = instance_base(env);
    inst["a"] = to_json(a);
    inst["b"] = to_json(b);
    return {"C3.3", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_C34(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    ToeplitzSpec a = ToeplitzSpec::zero(env.n, env.d), b = a;
    if (trial % 2 == 0) {
        auto pr = gen_product_toeplitz_pair(env, cfg.coeff_bound);
        a = pr.first;
        b = pr.second;
    } else {
        a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                     cfg.coeff_bound);
        b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                     cfg.coeff_bound);
    }
    bool criterion = single_product_toeplitz_test(a, b);
    bool oracle = single_product_toeplitz_test(b, a);
    json inst = instance_base(env);
    inst["a"] = to_json(a);
    inst["b"] = to_json(b);
    return {"C3.4", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_T35(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    ToeplitzSpec a = ToeplitzSpec::zero(env.n, env.d), b = a;
    switch (env.rng.below(4)) {
        case 0:
            a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::lower_only, nullptr,
                         cfg.coeff_bound);
            b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::lower_only, nullptr,
                         cfg.coeff_bound);
            break;
        case 1:
            a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::upper_only, nullptr,
                         cfg.coeff_bound);
            b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::upper_only, nullptr,
                         cfg.coeff_bound);
            break;
        case 2: {
            auto pr = gen_product_toeplitz_pair(env, cfg.coeff_bound);
            a = pr.first;
            b = pr.second;
            break;
        }
        default: {
            DenseMat x = gen_commutant_element(env.alg, env.rng.next());
            a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant, &x,
                         cfg.coeff_bound);
            b = a;
            break;
        }
    }
    bool criterion = single_product_toeplitz_test(a, b);
    bool oracle = a.build() * b.build() == b.build() * a.build();
    json inst = instance_base(env);
    inst["a"] = to_json(a);
    inst["b"] = to_json(b);
    return {"T3.5", std::move(inst), criterion, oracle, criterion == oracle};
}

// ---- section 4: commutants -------------------------------------------------

inline TrialOutcome run_P41(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    BlockMatrix m = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none, nullptr,
                             cfg.coeff_bound)
                        .build();
    if (trial % 2 == 1 && env.n >= 2) break_toeplitz(env, m, cfg.coeff_bound);
    DenseMat x = env.rng.coin() ? gen_commutant_element(env.alg, env.rng.next())
                                : random_dense(env.rng, env.d, cfg.coeff_bound);
    bool criterion = sx_displacement_form(m, x).has_value();
    bool oracle = toeplitz_recognize(m).has_value();
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    inst["x"] = to_json(x);
    return {"P4.1", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_R42(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    DenseMat x = random_dense(env.rng, env.d, cfg.coeff_bound);
    BlockMatrix sx = shift_x(env.n, env.d, x);
    BlockMatrix lhs = BlockMatrix::identity(env.n, env.d) - sx * sx.adjoint();
    BlockMatrix corner(env.n, env.d);
    corner(env.n - 1, 0) = x.adjoint();
    BlockMatrix rhs = outer(basis_column(0, env.n, env.d), basis_row(0, env.n, env.d)) -
                      sx * corner;
    bool criterion = lhs == rhs;
    json inst = instance_base(env);
    inst["x"] = to_json(x);
    return {"R4.2", std::move(inst), criterion, true, criterion};
}

inline TrialOutcome run_T44(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    BlockMatrix m(env.n, env.d);
    if (trial % 2 == 0 || env.n < 2) {
        SpecConstraint c = env.rng.coin() ? SpecConstraint::lower_only
                                          : SpecConstraint::upper_only;
        ToeplitzSpec s = gen_spec(env.alg, env.n, env.rng.next(), c, nullptr, cfg.coeff_bound);
        if (env.rng.below(4) == 0)  // block diagonal-constant member
            s = ToeplitzSpec(env.n, s.diag(),
                             std::vector<DenseMat>(env.n - 1, DenseMat::zero(env.d)),
                             std::vector<DenseMat>(env.n - 1, DenseMat::zero(env.d)));
        m = s.build();
    } else {
        ToeplitzSpec s = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                  nullptr, cfg.coeff_bound);
        s.lower(1) += random_nonzero_span_element(env.rng, env.alg, cfg.coeff_bound);
        s.upper(1) += random_nonzero_span_element(env.rng, env.alg, cfg.coeff_bound);
        for (int attempt = 0;
             attempt < 8 && (s.lower_column().is_zero() || s.upper_column().is_zero());
             ++attempt)
            perturb_spec(env, s, cfg.coeff_bound);
        m = s.build();
        if (env.rng.coin()) break_toeplitz(env, m, cfg.coeff_bound);
    }
    ShiftCommutant structural = commutant_S_structural(m);
    ShiftCommutant direct = commutant_S_direct(m);
    bool criterion = structural != ShiftCommutant::neither;
    bool oracle = direct != ShiftCommutant::neither;
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    inst["structural"] = to_string(structural);
    inst["direct"] = to_string(direct);
    // agreement demands the full classification to match, not only membership
    return {"T4.4", std::move(inst), criterion, oracle,
            criterion == oracle && structural == direct};
}

inline TrialOutcome run_T45(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    DenseMat x = env.rng.coin() ? gen_commutant_element(env.alg, env.rng.next())
                                : gen_unitary(env.alg, env.rng.next());
    BlockMatrix m(env.n, env.d);
    if (trial % 2 == 0) {
        SpecConstraint c = env.rng.coin() ? SpecConstraint::sx_commutant
                                          : SpecConstraint::sx_star_commutant;
        m = gen_spec(env.alg, env.n, env.rng.next(), c, &x, cfg.coeff_bound).build();
    } else {
        ToeplitzSpec s = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::none,
                                  nullptr, cfg.coeff_bound);
        for (int attempt = 0;
             attempt < 8 &&
             commutant_SX_structural(s.build(), x) != ShiftXCommutant::neither;
             ++attempt)
            perturb_spec(env, s, cfg.coeff_bound);
        m = s.build();
        if (env.n >= 2 && env.rng.coin()) break_toeplitz(env, m, cfg.coeff_bound);
    }
    ShiftXCommutant structural = commutant_SX_structural(m, x);
    ShiftXCommutant direct = commutant_SX_classify(m, x).kind;
    bool criterion = structural != ShiftXCommutant::neither;
    bool oracle = direct != ShiftXCommutant::neither;
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    inst["x"] = to_json(x);
    inst["structural"] = to_string(structural);
    inst["direct"] = to_string(direct);
    return {"T4.5", std::move(inst), criterion, oracle,
            criterion == oracle && structural == direct};
}

inline TrialOutcome run_C46(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    DenseMat x = gen_commutant_element(env.alg, env.rng.next());
    ToeplitzSpec a = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                              &x, cfg.coeff_bound);
    ToeplitzSpec b = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                              &x, cfg.coeff_bound);
    bool criterion = sx_closure_product(a, b, x);
    bool oracle = toeplitz_recognize(a.build() * b.build()).has_value();
    json inst = instance_base(env);
    inst["a"] = to_json(a);
    inst["b"] = to_json(b);
    inst["x"] = to_json(x);
    return {"C4.6", std::move(inst), criterion, oracle, criterion == oracle};
}

// ---- section 5: normality --------------------------------------------------

inline ToeplitzSpec gen_normal_spec(TrialEnv& env, long bound) {
    switch (env.rng.below(3)) {
        case 0:
            return gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::hermitian,
                            nullptr, bound);
        case 1: {
            DenseMat x = gen_unitary(env.alg, env.rng.next());
            return gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant, &x,
                            bound);
        }
        default: {
            const auto& units = unit_scalars();
            DenseMat x = units[env.rng.below(units.size())] * DenseMat::identity(env.d);
            return gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant, &x,
                            bound);
        }
    }
}

inline TrialOutcome run_L51(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    BlockMatrix m(env.n, env.d);
    if (trial % 2 == 0) {
        if (env.rng.coin()) {
            // Hermitian block matrix with entries in the algebra
            for (std::size_t i = 0; i < env.n; ++i) {
                DenseMat h = random_span_element(env.rng, env.alg, cfg.coeff_bound);
                m(i, i) = h + h.adjoint();
                for (std::size_t j = i + 1; j < env.n; ++j) {
                    DenseMat v = random_span_element(env.rng, env.alg, cfg.coeff_bound);
                    m(i, j) = v;
                    m(j, i) = v.adjoint();
                }
            }
        } else {
            m = gen_normal_spec(env, cfg.coeff_bound).build();
        }
    } else {
        m = random_block_matrix(env, cfg.coeff_bound);
        for (int attempt = 0; attempt < 8 && normal_defect(m).is_zero(); ++attempt)
            m = random_block_matrix(env, cfg.coeff_bound);
    }
    bool criterion = lemma51_sums(m).all_zero();
    bool oracle = normal_defect(m).is_zero();
    json inst = instance_base(env);
    inst["matrix"] = to_json(m);
    return {"L5.1", std::move(inst), criterion, oracle, criterion == oracle};
}

inline TrialOutcome run_T52(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    ToeplitzSpec s = gen_normal_spec(env, cfg.coeff_bound);
    if (trial % 2 == 1) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            ToeplitzSpec cand = s;
            perturb_spec(env, cand, cfg.coeff_bound);
            if (!normal_defect(cand.build()).is_zero()) {
                s = cand;
                break;
            }
        }
    }
    NormalityReport report = normality_criterion(s);
    bool criterion = report.is_normal;
    bool oracle = report.defect.is_zero();
    bool lemma = lemma51_sums(s.build()).all_zero();
    json inst = instance_base(env);
    inst["spec"] = to_json(s);
    // the acceptance demands three-way agreement: criterion, defect, sums
    return {"T5.2", std::move(inst), criterion, oracle,
            criterion == oracle && lemma == oracle};
}

inline TrialOutcome run_C53(const TrialConfig& cfg, int trial) {
    TrialEnv env = make_env(cfg, trial);
    DenseMat x = gen_unitary(env.alg, env.rng.next());
    ToeplitzSpec s = gen_spec(env.alg, env.n, env.rng.next(), SpecConstraint::sx_commutant,
                              &x, cfg.coeff_bound);
    bool criterion = circulant_normality(s, x, &env.alg);
    bool oracle = normal_defect(s.build()).is_zero();
    json inst = instance_base(env);
    inst["spec"] = to_json(s);
    inst["x"] = to_json(x);
    return {"C5.3", std::move(inst), criterion, oracle, criterion == oracle};
}

inline const std::vector<std::pair<std::string, Runner>>& runner_table() {
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"L2.1", run_L21},   {"L2.2", run_L22},  {"L3.1", run_L31},
        {"T3.2i", run_T32i}, {"T3.2ii", run_T32ii}, {"C3.3", run_C33},
        {"C3.4", run_C34},   {"T3.5", run_T35},  {"P4.1", run_P41},
        {"R4.2", run_R42},   {"T4.4", run_T44},  {"T4.5", run_T45},
        {"C4.6", run_C46},   {"L5.1", run_L51},  {"T5.2", run_T52},
        {"C5.3", run_C53},
    };
    return table;
}

}  // namespace detail

/// Stable id -> description catalogue of the built-in check suites.
inline const std::vector<std::pair<std::string, std::string>>& theorem_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"L2.1", "displacement reconstruction round-trip"},
        {"L2.2", "Toeplitz iff displacement supported on first row and column"},
        {"L3.1", "product displacement assembled from spec data"},
        {"T3.2i", "AB-CD Toeplitz iff the outer-product identity holds"},
        {"T3.2ii", "AB=CD iff the zeroth and adjoint relations hold"},
        {"C3.3", "AB Toeplitz iff the single-product identity holds"},
        {"C3.4", "single-product criterion is symmetric in A and B"},
        {"T3.5", "Toeplitz products commute"},
        {"P4.1", "Toeplitz iff generalized displacement supported on the cross"},
        {"R4.2", "corner identity for the generalized shift"},
        {"T4.4", "commutant of S / S*: triangular block Toeplitz"},
        {"T4.5", "commutant of S_X / S_X*: corner-coupled block Toeplitz"},
        {"C4.6", "products of S_X-commutant matrices are Toeplitz"},
        {"L5.1", "normality via entrywise defect sums"},
        {"T5.2", "normality criterion for block Toeplitz specs"},
        {"C5.3", "S_X-commutant specs with unitary corner are normal"},
    };
    return catalog;
}

inline std::vector<std::string> theorem_ids() {
    std::vector<std::string> out;
    for (const auto& [id, desc] : theorem_catalog()) out.push_back(id);
    return out;
}

/// Runs one suite; deterministic in the config (per-trial counter-derived
/// seeds, so execution order cannot matter).
inline std::vector<TrialOutcome> run_theorem_suite(const std::string& theorem_id,
                                                   const TrialConfig& cfg) {
    cfg.validate();
    for (const auto& [id, runner] : detail::runner_table()) {
        if (id == theorem_id) {
            std::vector<TrialOutcome> out;
            out.reserve(static_cast<std::size_t>(cfg.trials));
            for (int t = 0; t < cfg.trials; ++t) out.push_back(runner(cfg, t));
            return out;
        }
    }
    throw UnknownTheoremError("unknown theorem id '" + theorem_id + "'");
}

inline json to_json(const TrialOutcome& o) {
    return json{{"theorem", o.theorem_id},
                {"criterion_result", o.criterion_result},
                {"oracle_result", o.oracle_result},
                {"agreement", o.agreement},
                {"instance", o.instance}};
}

}  // namespace btx
