"""Check catalog, report assembly, and the corpus run loop.

Each public check function returns a Verdict and raises HypothesisNotMet
when its hypothesis fails on the given input: the statements are
conditionals, so a false antecedent yields a skipped row, never a fail.
run_checks drives every type-applicable (fixture, check) pair and collects
one row each; reports are deterministic for a fixed seed (timings are
zeroed unless explicitly requested).
"""

import itertools
import json
import math
import time
from dataclasses import dataclass

from ._version import __version__
from .actions import ActionFixture, realize_actions
from .errors import (
    EvenCharacteristic,
    HypothesisNotMet,
    MalformedSpec,
    MismatchedParent,
    NotAPGroup,
    NotInvolution,
    NotSolvable,
    OutOfBudget,
    UnknownCheck,
)
from .fixtures import FixtureFile, realize_automorphisms, realize_groups
from .groups import Automorphism, FiniteGroup, is_prime
from .identities import engel_index_of_element, higman_polynomial, holds_identity
from .liering import (
    Verdict,
    build_dl,
    centralizer_subalgebra,
    check_cor_2_14,
    check_prop_2_11,
    decomposition_witness,
    induced_action,
    lazard_check,
    plus_minus_split,
    subgroup_graded_algebra,
)
from .series import (
    Subgroup,
    centralizer,
    dimension_series,
    fitting_height,
    generated_subgroup,
    is_nilpotent_subgroup,
    is_powerful,
    lower_central_series,
    normal_closure,
    power_subgroup,
    quotient_group,
    structure_predicates,
    trivial_subgroup,
    verify_np_series,
    whole_subgroup,
)

SCAN_BUDGET = 10**6
POWER_BUDGET = 2**20

GROUP_CHECKS = (
    "np_series",
    "lazard",
    "jacobi",
    "higman",
    "prop_2_11",
    "cor_2_14",
    "collection",
    "lemma_3_3",
    "lemma_3_4",
    "fitting",
    "powerful",
)
ACTION_CHECKS = (
    "c4_1",
    "c4_2",
    "c4_6",
    "c4_12",
    "t4_3",
    "t4_4",
    "pm_split",
    "obs_4_8",
)
CHECK_CATALOG = GROUP_CHECKS + ACTION_CHECKS


def _subgroup_exponent(G: FiniteGroup, H: Subgroup) -> int:
    return math.lcm(*(G.element_order(x) for x in H.elements()))


def _is_prime_power(n: int, q: int) -> bool:
    while n % q == 0:
        n //= q
    return n == 1


def _k_commutators(G: FiniteGroup, k: int, budget: int) -> list:
    """All values of left-normed weight-k commutators, sorted by key."""
    if k < 1:
        raise MalformedSpec("need k >= 1")
    if G.order**k > budget:
        raise OutOfBudget(f"|G|^{k} = {G.order ** k} exceeds the budget of {budget}")
    values = {}
    for tup in itertools.product(G.elements(), repeat=k):
        c = G.long_commutator(tup)
        values[c.key] = c
    return [values[key] for key in sorted(values)]


# -- the collection congruence -----------------------------------------


def check_collection_formula(
    G: FiniteGroup, p: int | None = None, n: int = 1, budget: int = SCAN_BUDGET
) -> Verdict:
    """(xy)^q with q = p^n equals x^q y^q modulo the iterated-power subgroup."""
    if p is None:
        info = G.is_p_group()
        if info is None:
            raise NotAPGroup("no prime given and the group is not a p-group")
        p = info[0]
    if n < 1:
        raise MalformedSpec("need n >= 1")
    q = p**n
    if q > POWER_BUDGET:
        raise OutOfBudget(f"p^n = {q} exceeds the power budget")
    if G.order**2 > budget:
        raise OutOfBudget(f"|G|^2 exceeds the budget of {budget}")
    lcs = lower_central_series(G)
    modulus_gens = list(power_subgroup(G, lcs.term(2), q).elements())
    for r in range(1, n + 1):
        layer = power_subgroup(G, lcs.term(p**r), p ** (n - r))
        modulus_gens.extend(layer.elements())
    modulus = generated_subgroup(G, modulus_gens)
    pairs = 0
    for x in G.elements():
        xq = G.power(x, q)
        for y in G.elements():
            lhs = G.power(G.multiply(x, y), q)
            rhs = G.multiply(xq, G.power(y, q))
            if G.multiply(lhs, G.inverse(rhs)) not in modulus:
                return Verdict(
                    False,
                    f"(xy)^{q} != x^{q} y^{q} modulo the subgroup of order "
                    f"{modulus.order} at x={x!r}, y={y!r}",
                )
            pairs += 1
    return Verdict(
        True,
        f"q={q}; modulus subgroup order {modulus.order}; {pairs} pairs verified",
    )


# -- commutator-subgroup lemmas -------------------------------------------


def check_lemma_3_3(
    G: FiniteGroup, k: int = 2, p: int | None = None, budget: int = SCAN_BUDGET
) -> Verdict:
    """If every weight-k commutator is a q-element, the k-th term is a q-group."""
    commutators = _k_commutators(G, k, budget)
    if p is not None:
        candidates = [p]
    else:
        info = G.is_p_group()
        if info is not None:
            candidates = [info[0]]
        else:
            candidates = [
                q for q in range(2, G.order + 1) if G.order % q == 0 and is_prime(q)
            ]
    failures = []
    chosen = None
    for q in candidates:
        bad = next(
            (c for c in commutators if not _is_prime_power(G.element_order(c), q)),
            None,
        )
        if bad is None:
            chosen = q
            break
        failures.append((q, bad))
    if chosen is None:
        q, bad = failures[-1]
        raise HypothesisNotMet(
            f"commutator {bad!r} of order {G.element_order(bad)} is not a "
            f"{q}-element" + ("" if p is not None else " (no prime works)"),
            witness=bad,
        )
    term = lower_central_series(G).term(k)
    ok = _is_prime_power(term.order, chosen)
    return Verdict(
        ok,
        f"all {len(commutators)} weight-{k} commutators are {chosen}-elements; "
        f"series term {k} has order {term.order}"
        + ("" if ok else f", which is not a power of {chosen}"),
    )


def check_lemma_3_4(G: FiniteGroup, k: int = 2, budget: int = SCAN_BUDGET) -> Verdict:
    """If every weight-k commutator is an Engel element, the k-th term is nilpotent."""
    commutators = _k_commutators(G, k, budget)
    worst = 1
    for c in commutators:
        idx = engel_index_of_element(G, c)
        if idx is None:
            raise HypothesisNotMet(
                f"weight-{k} commutator {c!r} is not an Engel element", witness=c
            )
        worst = max(worst, idx)
    term = lower_central_series(G).term(k)
    ok = is_nilpotent_subgroup(G, term)
    return Verdict(
        ok,
        f"all {len(commutators)} weight-{k} commutators are Engel "
        f"(max index {worst}); series term {k} of order {term.order} is "
        + ("nilpotent" if ok else "NOT nilpotent"),
    )


# -- coprime-action lemmas ---------------------------------------------------


def _coprime_or_raise(fx: ActionFixture) -> None:
    if not fx.coprime:
        raise HypothesisNotMet(
            f"gcd(|A|, |G|) = {math.gcd(fx.order, fx.group.order)} is not 1"
        )


def _q_squared_or_raise(fx: ActionFixture) -> int:
    if not fx.nontrivial:
        raise HypothesisNotMet("A is trivial")
    q = fx.noncyclic_q_squared()
    if q is None:
        shape = "cyclic" if fx.is_cyclic() else "not of prime-square order"
        raise HypothesisNotMet(f"A has order {fx.order} and is {shape}")
    return q


def check_4_1(fx: ActionFixture) -> Verdict:
    """G is generated by the fixed-point subgroups of the nontrivial a in A."""
    _coprime_or_raise(fx)
    q = _q_squared_or_raise(fx)
    G = fx.group
    cents = [centralizer(G, [a]) for a in fx.nontrivial]
    gens: list = []
    for cent in cents:
        gens.extend(cent.elements())
    span = generated_subgroup(G, gens)
    orders = tuple(c.order for c in cents)
    return Verdict(
        span.is_whole,
        f"q={q}; centralizer orders {orders}; generated subgroup order {span.order}"
        f" of {G.order}",
    )


def check_4_2(fx: ActionFixture) -> Verdict:
    """G equals the ordered product of the centralizers over A# (fixture order)."""
    _coprime_or_raise(fx)
    q = _q_squared_or_raise(fx)
    G = fx.group
    if G.is_p_group() is None:
        raise HypothesisNotMet("G is not a p-group")
    product = {G.identity.key}
    orders = []
    for a in fx.nontrivial:
        cent = centralizer(G, [a])
        orders.append(cent.order)
        product = {
            G._mul_keys(s, c.key) for s in product for c in cent.elements()
        }
    return Verdict(
        len(product) == G.order,
        f"q={q}; ordered product over A# (fixture order, centralizer orders "
        f"{tuple(orders)}) covers {len(product)} of {G.order} elements",
    )


def _invariant_normal_family(fx: ActionFixture) -> list:
    """Trivial, whole, and single-element normal closures that A preserves."""
    G = fx.group
    family = [trivial_subgroup(G), whole_subgroup(G)]
    seen = {family[0].keys, family[1].keys}
    for x in G.elements():
        closure = normal_closure(G, [x])
        if closure.keys not in seen:
            seen.add(closure.keys)
            family.append(closure)
    out = []
    for N in family:
        if all(
            all(phi(G.element(k)) in N for k in N.keys) for phi in fx.generators
        ):
            out.append(N)
    return out


def check_4_6(fx: ActionFixture) -> Verdict:
    """Fixed points pass to quotients: C_{G/N}(A) = image of C_G(A)."""
    _coprime_or_raise(fx)
    G = fx.group
    fixed = centralizer(G, fx.generators)
    family = _invariant_normal_family(fx)
    tested = []
    for N in family:
        quot = quotient_group(G, N)
        induced = [
            Automorphism(
                quot.group,
                [quot.project(phi(quot.lift(qg))) for qg in quot.group.generators],
            )
            for phi in fx.generators
        ]
        upstairs = {quot.project(x).key for x in fixed.elements()}
        downstairs = {x.key for x in centralizer(quot.group, induced).elements()}
        if upstairs != downstairs:
            return Verdict(
                False,
                f"fixed points disagree modulo the subgroup of order {N.order}: "
                f"image has {len(upstairs)}, quotient centralizer has "
                f"{len(downstairs)}",
            )
        tested.append(N.order)
    return Verdict(
        True,
        f"{len(tested)} invariant normal subgroups verified "
        f"(orders {tuple(tested)})",
    )


def check_4_12(G: FiniteGroup, a: Automorphism) -> Verdict:
    """Odd-order G with involutory a: unique x = gh, g inverted, h fixed."""
    if not isinstance(a, Automorphism) or a.source is not G:
        raise MismatchedParent("a must be an automorphism of G")
    if G.order % 2 == 0:
        raise HypothesisNotMet(f"G has even order {G.order}")
    if not a.compose(a).is_identity():
        raise HypothesisNotMet("a*a is not the identity")
    inverted = [g for g in G.elements() if a(g) == G.inverse(g)]
    fixed = centralizer(G, [a])
    counts: dict = {}
    for g in inverted:
        for h in fixed.elements():
            key = G.multiply(g, h).key
            counts[key] = counts.get(key, 0) + 1
    unique = len(counts) == G.order and all(v == 1 for v in counts.values())
    commutator_set = {G.multiply(G.inverse(y), a(y)).key for y in G.elements()}
    inverted_matches = commutator_set == {g.key for g in inverted}
    return Verdict(
        unique and inverted_matches,
        f"|inverted set| = {len(inverted)}, |C_G(a)| = {fixed.order}; "
        f"decomposition {'unique for all' if unique else 'NOT unique for some'} "
        f"{G.order} elements; inverted set "
        f"{'equals' if inverted_matches else 'differs from'} "
        "{[y,a] : y in G}",
    )


def check_theorem_4_3_instance(fx: ActionFixture) -> Verdict:
    """Record q, the centralizer-exponent bound n, and the group exponent."""
    _coprime_or_raise(fx)
    q = _q_squared_or_raise(fx)
    G = fx.group
    n = math.lcm(
        *(_subgroup_exponent(G, centralizer(G, [a])) for a in fx.nontrivial)
    )
    return Verdict(
        True,
        f"q={q}; centralizer exponents have lcm n={n}; exponent(G)={G.exponent()}",
    )


def check_theorem_4_4_instance(
    G: FiniteGroup, a: Automorphism, n: int | None = None
) -> Verdict:
    """Record the least valid n (centralizer exponent and [x,a] orders) vs exp(G)."""
    if not isinstance(a, Automorphism) or a.source is not G:
        raise MismatchedParent("a must be an automorphism of G")
    if G.order % 2 == 0:
        raise HypothesisNotMet(f"G has even order {G.order}")
    if not a.compose(a).is_identity():
        raise HypothesisNotMet("a*a is not the identity")
    fixed = centralizer(G, [a])
    orders = [
        G.element_order(G.multiply(G.inverse(y), a(y))) for y in G.elements()
    ]
    computed = math.lcm(_subgroup_exponent(G, fixed), *orders)
    if n is None:
        n = computed
    elif n % computed != 0:
        raise HypothesisNotMet(
            f"given n={n} but the centralizer exponent and [x,a] orders force "
            f"a multiple of {computed}"
        )
    return Verdict(
        True,
        f"n={n}; |C_G(a)|={fixed.order}; max |[x,a]| order {max(orders)}; "
        f"exponent(G)={G.exponent()}",
    )


# -- report plumbing -------------------------------------------------------


@dataclass(frozen=True)
class CheckRow:
    group: str
    check: str
    status: str  # pass | fail | skipped | sampled-pass
    details: str
    elapsed_ms: int = 0


@dataclass(frozen=True)
class CheckReport:
    tool_version: str
    seed: int
    rows: tuple

    @property
    def has_failures(self) -> bool:
        return any(row.status == "fail" for row in self.rows)

    def to_json(self) -> str:
        doc = {
            "tool_version": self.tool_version,
            "seed": self.seed,
            "rows": [
                {
                    "group": row.group,
                    "check": row.check,
                    "status": row.status,
                    "details": row.details,
                    "elapsed_ms": row.elapsed_ms,
                }
                for row in self.rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_table(self) -> str:
        headers = ("GROUP", "CHECK", "STATUS", "DETAILS")
        data = [
            (row.group, row.check, row.status, row.details) for row in self.rows
        ]
        widths = [
            max(len(headers[c]), *(len(r[c]) for r in data)) if data else len(headers[c])
            for c in range(3)
        ]
        lines = [
            "  ".join(h.ljust(w) for h, w in zip(headers[:3], widths)) + "  DETAILS"
        ]
        for r in data:
            lines.append(
                "  ".join(v.ljust(w) for v, w in zip(r[:3], widths)) + "  " + r[3]
            )
        counts: dict = {}
        for row in self.rows:
            counts[row.status] = counts.get(row.status, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        lines.append(f"-- {len(self.rows)} rows: {summary}")
        return "\n".join(lines) + "\n"


def emit_report(report: CheckReport, fmt: str = "json") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "table":
        return report.to_table()
    raise MalformedSpec(f"unknown report format {fmt!r}")


class RunContext:
    """Realized fixtures plus caches shared across checks."""

    def __init__(self, fx: FixtureFile, seed: int = 0, budget: int = SCAN_BUDGET):
        self.fx = fx
        self.seed = seed
        self.budget = budget
        self.groups = realize_groups(fx, seed=seed)
        self.auts = realize_automorphisms(fx, self.groups)
        self.actions = realize_actions(fx, self.groups, self.auts)
        self._dl: dict = {}
        self._witness: dict = {}

    def dl(self, name: str):
        if name not in self._dl:
            self._dl[name] = build_dl(self.groups[name], seed=self.seed)
        return self._dl[name]

    def dl_for_action(self, action_name: str):
        return self.dl(self.fx.action(action_name).group)

    def params(self, check: str, target: str) -> dict:
        return self.fx.params_for(check, target)

    def int_param(self, params: dict, key: str, default: int) -> int:
        if key not in params:
            return default
        try:
            return int(params[key])
        except ValueError:
            raise MalformedSpec(f"check parameter {key} must be an integer")

    def gens_param(self, params: dict, G: FiniteGroup):
        if "gens" not in params:
            return None
        return [G.generator_by_name(n) for n in params["gens"].split(",")]

    def witness(self, name: str, gens_key, gens):
        key = (name, gens_key)
        if key not in self._witness:
            self._witness[key] = decomposition_witness(self.groups[name], gens)
        return self._witness[key]


def _verdict_row(v: Verdict) -> tuple:
    return ("pass" if v.ok else "fail", v.detail)


# group-check handlers: (ctx, group name) -> (status, details)


def _h_np_series(ctx: RunContext, name: str):
    G = ctx.groups[name]
    info = G.is_p_group()
    if info is None:
        return "skipped", "not a p-group"
    series = dimension_series(G)
    verdict = verify_np_series(G, series, info[0])
    orders = series.orders()
    if verdict.ok:
        return "pass", f"series orders {orders}; both containment families verified"
    return "fail", f"series orders {orders}; {verdict.failure}"


def _h_lazard(ctx: RunContext, name: str):
    G = ctx.groups[name]
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    L = ctx.dl(name)
    count = 0
    for x in G.elements():
        if x.is_identity():
            continue
        verdict = lazard_check(G, L, x)
        if not verdict.ok:
            return "fail", f"at {x!r}: {verdict.detail}"
        count += 1
    return "pass", f"{count} nontrivial elements verified (power and index bounds)"


def _h_jacobi(ctx: RunContext, name: str):
    G = ctx.groups[name]
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    L = ctx.dl(name)
    basis = L.basis()
    pairs = triples = 0
    for u in basis:
        if not L.bracket(u, u).is_zero():
            return "fail", f"[u, u] != 0 at u = {u!r}"
        for v in basis:
            lhs = L.bracket(u, v)
            if lhs != -L.bracket(v, u):
                return "fail", f"antisymmetry fails at ({u!r}, {v!r})"
            du, dv = u.degree, v.degree
            if not lhs.is_zero() and lhs.degree != du + dv:
                return "fail", f"grading escape at ({u!r}, {v!r})"
            pairs += 1
            for w in basis:
                s = (
                    L.bracket(L.bracket(u, v), w)
                    + L.bracket(L.bracket(v, w), u)
                    + L.bracket(L.bracket(w, u), v)
                )
                if not s.is_zero():
                    return "fail", f"Jacobi fails at ({u!r}, {v!r}, {w!r})"
                triples += 1
    return "pass", f"{pairs} basis pairs and {triples} triples verified"


def _h_higman(ctx: RunContext, name: str):
    G = ctx.groups[name]
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    n = G.exponent()
    if n > 4:
        return "skipped", f"exponent {n} is outside the checked degree range (2..4)"
    verdict = holds_identity(higman_polynomial(n), ctx.dl(name))
    status = "pass" if verdict.holds else "fail"
    return status, f"degree {n} symmetrized law: {verdict.detail}"


def _h_prop_2_11(ctx: RunContext, name: str):
    G = ctx.groups[name]
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    params = ctx.params("prop_2_11", name)
    gens = ctx.gens_param(params, G)
    w = ctx.witness(name, params.get("gens"), gens)
    verdict = check_prop_2_11(G, w)
    status, detail = _verdict_row(verdict)
    return status, f"c={w.c}, s={w.s}, K={w.K}; {detail}"


def _h_cor_2_14(ctx: RunContext, name: str):
    G = ctx.groups[name]
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    params = ctx.params("cor_2_14", name)
    gens = ctx.gens_param(params, G)
    w = ctx.witness(name, params.get("gens"), gens)
    verdict = check_cor_2_14(G, w)
    status, detail = _verdict_row(verdict)
    return status, f"c={w.c}, s={w.s}, K={w.K}; {detail}"


def _h_collection(ctx: RunContext, name: str):
    G = ctx.groups[name]
    params = ctx.params("collection", name)
    if "prime" in params:
        p = ctx.int_param(params, "prime", 0)
    elif G.is_p_group() is not None:
        p = G.is_p_group()[0]
    else:
        return "skipped", "not a p-group and no prime parameter given"
    n = ctx.int_param(params, "n", 1)
    return _verdict_row(check_collection_formula(G, p, n, budget=ctx.budget))


def _h_lemma_3_3(ctx: RunContext, name: str):
    G = ctx.groups[name]
    params = ctx.params("lemma_3_3", name)
    k = ctx.int_param(params, "k", 2)
    p = ctx.int_param(params, "prime", 0) if "prime" in params else None
    return _verdict_row(check_lemma_3_3(G, k, p, budget=ctx.budget))


def _h_lemma_3_4(ctx: RunContext, name: str):
    G = ctx.groups[name]
    params = ctx.params("lemma_3_4", name)
    k = ctx.int_param(params, "k", 2)
    return _verdict_row(check_lemma_3_4(G, k, budget=ctx.budget))


def _h_fitting(ctx: RunContext, name: str):
    G = ctx.groups[name]
    profile = structure_predicates(G)
    if not profile.is_solvable:
        return "skipped", "not solvable"
    height = fitting_height(G)
    return (
        "pass",
        f"height {height}; exponent {profile.exponent}; order {G.order}"
        + ("; nilpotent" if profile.is_nilpotent else ""),
    )


def _h_powerful(ctx: RunContext, name: str):
    G = ctx.groups[name]
    info = G.is_p_group()
    if info is None:
        return "skipped", "not a p-group"
    p = info[0]
    flag = is_powerful(G)
    target = 4 if p == 2 else p
    return (
        "pass",
        f"powerful: {'yes' if flag else 'no'} "
        f"(commutator subgroup {'inside' if flag else 'escapes'} the "
        f"{target}-th power subgroup)",
    )


# action-check handlers: (ctx, action name) -> (status, details)


def _h_c4_1(ctx: RunContext, name: str):
    return _verdict_row(check_4_1(ctx.actions[name]))


def _h_c4_2(ctx: RunContext, name: str):
    return _verdict_row(check_4_2(ctx.actions[name]))


def _h_c4_6(ctx: RunContext, name: str):
    return _verdict_row(check_4_6(ctx.actions[name]))


def _single_involution_or_raise(fx: ActionFixture) -> Automorphism:
    a = fx.single_involution()
    if a is None:
        raise HypothesisNotMet("needs exactly one generating automorphism of order 2")
    return a


def _h_c4_12(ctx: RunContext, name: str):
    fx = ctx.actions[name]
    a = _single_involution_or_raise(fx)
    return _verdict_row(check_4_12(fx.group, a))


def _h_t4_3(ctx: RunContext, name: str):
    return _verdict_row(check_theorem_4_3_instance(ctx.actions[name]))


def _h_t4_4(ctx: RunContext, name: str):
    fx = ctx.actions[name]
    a = _single_involution_or_raise(fx)
    params = ctx.params("t4_4", name)
    n = ctx.int_param(params, "n", 0) if "n" in params else None
    return _verdict_row(check_theorem_4_4_instance(fx.group, a, n))


def _h_pm_split(ctx: RunContext, name: str):
    fx = ctx.actions[name]
    G = fx.group
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    a = _single_involution_or_raise(fx)
    L = ctx.dl_for_action(name)
    split = plus_minus_split(L, induced_action(a, L))
    return (
        "pass",
        f"plus dims {split.plus.dims()}, minus dims {split.minus.dims()}; "
        "all three bracket containments verified",
    )


def _h_obs_4_8(ctx: RunContext, name: str):
    fx = ctx.actions[name]
    G = fx.group
    _coprime_or_raise(fx)
    if G.is_p_group() is None:
        return "skipped", "not a p-group"
    L = ctx.dl_for_action(name)
    acts = [induced_action(phi, L) for phi in fx.generators]
    lie_side = centralizer_subalgebra(L, acts)
    group_side = subgroup_graded_algebra(G, L, centralizer(G, fx.generators))
    same = lie_side.space == group_side
    return (
        "pass" if same else "fail",
        f"fixed subalgebra dims {lie_side.space.dims()} "
        f"{'==' if same else '!='} fixed-subgroup algebra dims "
        f"{group_side.dims()}",
    )


_GROUP_HANDLERS = {
    "np_series": _h_np_series,
    "lazard": _h_lazard,
    "jacobi": _h_jacobi,
    "higman": _h_higman,
    "prop_2_11": _h_prop_2_11,
    "cor_2_14": _h_cor_2_14,
    "collection": _h_collection,
    "lemma_3_3": _h_lemma_3_3,
    "lemma_3_4": _h_lemma_3_4,
    "fitting": _h_fitting,
    "powerful": _h_powerful,
}
_ACTION_HANDLERS = {
    "c4_1": _h_c4_1,
    "c4_2": _h_c4_2,
    "c4_6": _h_c4_6,
    "c4_12": _h_c4_12,
    "t4_3": _h_t4_3,
    "t4_4": _h_t4_4,
    "pm_split": _h_pm_split,
    "obs_4_8": _h_obs_4_8,
}


def _expand_selection(selection) -> list:
    if selection is None:
        return list(CHECK_CATALOG)
    requested = []
    for item in selection:
        for name in str(item).split(","):
            name = name.strip()
            if name:
                requested.append(name)
    if "all" in requested:
        return list(CHECK_CATALOG)
    unknown = sorted(set(requested) - set(CHECK_CATALOG))
    if unknown:
        raise UnknownCheck(
            f"unknown check(s) {', '.join(unknown)}; catalog: "
            + ", ".join(CHECK_CATALOG + ("all",))
        )
    return [c for c in CHECK_CATALOG if c in requested]


def run_checks(
    fx: FixtureFile,
    selection=None,
    *,
    seed: int = 0,
    budget: int = SCAN_BUDGET,
    timings: bool = False,
) -> CheckReport:
    """One row per selected check per type-applicable fixture entry."""
    selected = _expand_selection(selection)
    ctx = RunContext(fx, seed=seed, budget=budget)
    rows = []

    def run_one(entry_name: str, check: str, handler) -> None:
        start = time.perf_counter()
        try:
            status, details = handler(ctx, entry_name)
        except HypothesisNotMet as exc:
            status, details = "skipped", f"hypothesis not met: {exc}"
        except (NotAPGroup, NotSolvable, EvenCharacteristic, NotInvolution) as exc:
            status, details = "skipped", str(exc)
        except OutOfBudget as exc:
            status, details = "skipped", f"budget: {exc}"
        elapsed = int((time.perf_counter() - start) * 1000) if timings else 0
        rows.append(CheckRow(entry_name, check, status, details, elapsed))

    for entry in fx.groups:
        for check in selected:
            if check in _GROUP_HANDLERS:
                run_one(entry.name, check, _GROUP_HANDLERS[check])
    for entry in fx.actions:
        for check in selected:
            if check in _ACTION_HANDLERS:
                run_one(entry.name, check, _ACTION_HANDLERS[check])
    rows.sort(key=lambda row: (row.group, row.check))
    return CheckReport(__version__, seed, tuple(rows))
