#include "pdl/identities.hpp"

#include <random>

namespace pdl {

std::vector<IdentityLaw> standard_laws()
{
    const Prog p = prog("p");
    const Prog q = prog("q");
    const Prop a = atom("a");
    const Prop b = atom("b");
    const Prop halts_p = diamond(p, top());
    const Prop halts_q = diamond(q, top());
    const Prog pq = seq(p, q);
    const Prop ab = disj(a, neg(b));

    std::vector<IdentityLaw> laws;
    laws.push_back({"Fix(p) = fix(p) | [p]false", false, PropPair{big_fix(p), disj(fix(p), box(p, bottom()))}});
    laws.push_back({"fix(p) = Fix(p) & <p>true", false, PropPair{fix(p), conj(big_fix(p), halts_p)}});
    laws.push_back({"fix(p) = p ~ skip", false, PropPair{fix(p), tie(p, skip())}});
    laws.push_back({"fix(p;q) = (p;q) ~ skip", false, PropPair{fix(pq), tie(pq, skip())}});
    laws.push_back({"p ^ q = p - (p - q)", false, ProgPair{inter(p, q), diff(p, diff(p, q))}});
    laws.push_back({"fix(p) = <p>true & [p - (p ^ skip)]false", false,
                    PropPair{fix(p), conj(halts_p, box(diff(p, inter(p, skip())), bottom()))}});
    laws.push_back({"[p*]a = [while a do p od]false", false,
                    PropPair{box(star(p), a), box(while_do(a, p), bottom())}});
    laws.push_back({"<p*>a = <while !a do p od>true", false,
                    PropPair{diamond(star(p), a), diamond(while_do(neg(a), p), top())}});
    laws.push_back({"[(p;q)*](a | !b) = [while a | !b do p;q od]false", false,
                    PropPair{box(star(pq), ab), box(while_do(ab, pq), bottom())}});
    laws.push_back({"<(p;q)*>(a | !b) = <while !(a | !b) do p;q od>true", false,
                    PropPair{diamond(star(pq), ab), diamond(while_do(neg(ab), pq), top())}});
    laws.push_back({"p ~ q = <p ^ q>true | !(<p>true | <q>true)", true,
                    PropPair{tie(p, q), disj(diamond(inter(p, q), top()), neg(disj(halts_p, halts_q)))}});
    laws.push_back({"p ^ q = ?(p ~ q);p", true, ProgPair{inter(p, q), seq(test(tie(p, q)), p)}});
    return laws;
}

IdentityResult check_law(const Frame& m, const IdentityLaw& law)
{
    return std::visit([&](const auto& sides) { return check_identity(m, sides.lhs, sides.rhs); }, law.sides);
}

IdentitySuiteReport run_identity_suite(std::uint64_t seed, std::size_t models, DeterminismMode mode,
                                       std::size_t max_states)
{
    const auto laws = standard_laws();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_states);
    std::uniform_real_distribution<double> density(0.15, 0.7);

    IdentitySuiteReport report;
    for (std::size_t i = 0; i < models; ++i) {
        RandomModelParams params;
        params.seed = rng();
        params.states = size(rng);
        params.programs = {"p", "q"};
        params.props = {"a", "b"};
        params.deterministic = mode == DeterminismMode::DeterministicOnly || i % 2 == 1;
        params.density = density(rng);
        const KripkeModel model = random_model(params);
        const Frame frame(model);

        ++report.models;
        if (params.deterministic)
            ++report.deterministic_models;
        for (const auto& law : laws) {
            if (law.deterministic_only && !params.deterministic)
                continue;
            ++report.checks;
            const IdentityResult result = check_law(frame, law);
            if (const auto* cex = std::get_if<Counterexample>(&result))
                report.failures.push_back({law.name, i, model, *cex});
        }
    }
    return report;
}

} // namespace pdl
