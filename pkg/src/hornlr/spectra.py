"""Candidate spectra of integral line graphs and their verification.

For partitions alpha, beta of equal size e (the degree sequences of the
two colour classes of a bipartite graph on nu = m + n vertices), the
candidate set P(alpha, beta) collects every partition gamma of size 2e
with exactly nu - 1 parts such that

  a) the Littlewood-Richardson coefficient of gamma in alpha * beta is
     non-zero,
  b) the first part strictly dominates the others,
  c) sum((gamma_i - 2)^2) = 2 * (sum C(alpha_j, 2) + sum C(beta_k, 2))
     - 4 (e - nu + 1),
  d) sum((gamma_i - 2)^3) = 6 * (sum C(alpha_j, 3) + sum C(beta_k, 3))
     + 8 (e - nu + 1).

When the line graph of a connected bipartite graph is integral, its
spectrum is gamma_1 - 2 >= ... >= gamma_{nu-1} - 2 together with -2
repeated e - nu + 1 times, for some gamma in P(alpha, beta); its
diameter is bounded by the largest number of distinct parts over the
candidate set, and by twice the clique number. `analyze_line_graph`
checks all of this on a concrete graph and reports any failure as a
theorem violation (which would mean a bug, not new mathematics).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .errors import InputError, TheoremViolation
from .graphs import (
    BipartiteGraph,
    Graph,
    clique_number,
    degree_partitions,
    diameter,
    exact_spectrum,
    expand_root_multiset,
    integer_spectrum,
    is_bipartite_graph,
    line_graph,
    numeric_spectrum,
    root_multiplicity,
)
from .lr import lr_positive
from .partitions import Partition, enumerate_partitions


def moment_c(
    gamma: Partition, alpha: Partition, beta: Partition, e: int, nu: int
) -> bool:
    """Exact second-moment identity, condition (c) above.

    gamma is read as a length nu - 1 vector (missing parts count as 0,
    contributing (0 - 2)^2 each); more than nu - 1 parts is an error.
    """
    lhs = _shifted_power_sum(gamma, nu - 1, 2)
    rhs = 2 * (
        sum(math.comb(a, 2) for a in alpha) + sum(math.comb(b, 2) for b in beta)
    ) - 4 * (e - nu + 1)
    return lhs == rhs


def moment_d(
    gamma: Partition, alpha: Partition, beta: Partition, e: int, nu: int
) -> bool:
    """Exact third-moment identity, condition (d) above."""
    lhs = _shifted_power_sum(gamma, nu - 1, 3)
    rhs = 6 * (
        sum(math.comb(a, 3) for a in alpha) + sum(math.comb(b, 3) for b in beta)
    ) + 8 * (e - nu + 1)
    return lhs == rhs


def _shifted_power_sum(gamma: Partition, length: int, power: int) -> int:
    if gamma.length > length:
        raise InputError(
            f"gamma has {gamma.length} parts but only {length} are allowed"
        )
    return sum((g - 2) ** power for g in gamma.padded(length))


@dataclass(frozen=True)
class CandidateSet:
    """P(alpha, beta): all candidate shifted spectra, descending lex."""

    alpha: Partition
    beta: Partition
    members: tuple[Partition, ...]
    e: int
    nu: int

    @property
    def max_distinct_parts(self) -> Optional[int]:
        if not self.members:
            return None
        return max(g.distinct_parts for g in self.members)

    def __contains__(self, gamma: Partition) -> bool:
        return gamma in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def enumerate_p(alpha: Partition, beta: Partition) -> CandidateSet:
    """Compute P(alpha, beta) by filtered exhaustive search.

    Search space: partitions of 2e with exactly nu - 1 parts and first
    part at most alpha_1 + beta_1 (no candidate can exceed that: a
    positive LR coefficient forces the top Weyl bound). Conditions are
    checked cheapest first; LR positivity runs last and only on the few
    survivors of the moment identities.
    """
    if alpha.size != beta.size:
        raise InputError(
            f"partitions must have equal size, got {alpha.size} and {beta.size}"
        )
    if alpha.size == 0:
        raise InputError("the common size e must be positive")
    return _enumerate_p_cached(alpha, beta)


@lru_cache(maxsize=None)
def _enumerate_p_cached(alpha: Partition, beta: Partition) -> CandidateSet:
    e = alpha.size
    nu = alpha.length + beta.length
    cap = alpha.part(1) + beta.part(1)
    members = []
    for gamma in enumerate_partitions(2 * e, nu - 1, cap):
        if nu - 1 >= 2 and gamma.part(1) == gamma.part(2):
            continue
        if not moment_c(gamma, alpha, beta, e, nu):
            continue
        if not moment_d(gamma, alpha, beta, e, nu):
            continue
        if not lr_positive(alpha, beta, gamma):
            continue
        members.append(gamma)
    return CandidateSet(alpha, beta, tuple(members), e, nu)


@dataclass(frozen=True)
class RamanujanVerdict:
    """Spectral-gap report for a k-regular graph.

    Two readings of the defining bound are reported side by side:
    `second_largest_ok` bounds |lambda_2| by 2*sqrt(k-1);
    `all_nontrivial_ok` bounds every eigenvalue except one Perron copy
    of k and, on bipartite graphs, one copy of -k. Comparisons are exact
    (squared integers) whenever the spectrum is integral.
    """

    degree: int
    second_largest: Union[int, float]
    least: Union[int, float]
    bound: float
    second_largest_ok: bool
    all_nontrivial_ok: bool
    exact: bool

    @property
    def is_ramanujan(self) -> bool:
        """Verdict under the second-largest reading (the weaker bound is
        reported separately; nothing downstream silently picks one)."""
        return self.second_largest_ok


def ramanujan_verdict(
    g: Graph, k: Optional[int] = None, tol: float = 1e-9
) -> RamanujanVerdict:
    """Evaluate the spectral-gap bounds for a k-regular graph.

    k defaults to the graph's common degree and is validated against it;
    k >= 1 and order >= 2 are required so that the bound and a second
    eigenvalue exist.
    """
    actual = g.regular_degree()
    if actual is None:
        raise InputError("Ramanujan verdicts require a regular graph")
    if k is None:
        k = actual
    elif k != actual:
        raise InputError(f"graph is {actual}-regular, not {k}-regular")
    if k < 1:
        raise InputError("degree must be at least 1")
    if g.order < 2:
        raise InputError("need at least two vertices for a second eigenvalue")

    roots = integer_spectrum(g)
    bound = 2.0 * math.sqrt(k - 1)
    bound_sq = 4 * (k - 1)
    if roots is not None:
        eigs: list = expand_root_multiset(roots)
        ok_second = eigs[1] * eigs[1] <= bound_sq
        nontrivial = _drop_trivial(eigs, k, is_bipartite_graph(g))
        ok_all = all(v * v <= bound_sq for v in nontrivial)
        exact = True
    else:
        eigs = numeric_spectrum(g)
        ok_second = abs(eigs[1]) <= bound + tol
        nontrivial = _drop_trivial(eigs, k, is_bipartite_graph(g), tol)
        ok_all = all(abs(v) <= bound + tol for v in nontrivial)
        exact = False
    return RamanujanVerdict(
        degree=k,
        second_largest=eigs[1],
        least=eigs[-1],
        bound=bound,
        second_largest_ok=ok_second,
        all_nontrivial_ok=ok_all,
        exact=exact,
    )


def _drop_trivial(eigs, k, bipartite: bool, tol: float = 0.0) -> list:
    """Remove one Perron copy of k and, for bipartite graphs, one -k."""
    out = list(eigs)
    _remove_close(out, k, tol)
    if bipartite:
        _remove_close(out, -k, tol)
    return out


def _remove_close(values: list, target, tol: float) -> None:
    for idx, v in enumerate(values):
        if abs(v - target) <= tol:
            del values[idx]
            return


@dataclass(frozen=True)
class SpectrumReport:
    """Everything `analyze_line_graph` establishes about one graph."""

    alpha: Partition
    beta: Partition
    e: int
    nu: int
    is_integral: bool
    char_poly: tuple[int, ...]
    spectrum_int: Optional[tuple[tuple[int, int], ...]]
    spectrum_float: Optional[tuple[float, ...]]
    gamma_matched: Optional[Partition]
    p_set: Optional[CandidateSet]
    minus_two_multiplicity: int
    diameter: int
    max_k_gamma: Optional[int]
    two_omega: int
    ramanujan: Optional[RamanujanVerdict]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        """Canonical JSON form: fixed key order, exact integers kept as
        integers, floats rounded to 12 significant digits so that a
        parse/re-serialize cycle is byte-identical."""
        if self.is_integral:
            spectrum = [[v, m] for v, m in (self.spectrum_int or ())]
        else:
            spectrum = [_json_float(v) for v in (self.spectrum_float or ())]
        ram = None
        if self.ramanujan is not None:
            r = self.ramanujan
            ram = {
                "degree": r.degree,
                "second_largest": _json_number(r.second_largest),
                "least": _json_number(r.least),
                "bound": _json_float(r.bound),
                "ramanujan_second_largest": r.second_largest_ok,
                "ramanujan_all_nontrivial": r.all_nontrivial_ok,
                "exact": r.exact,
            }
        return {
            "is_integral": self.is_integral,
            "spectrum": spectrum,
            "gamma": list(self.gamma_matched) if self.gamma_matched is not None else None,
            "p_set": [list(g) for g in self.p_set.members] if self.p_set is not None else None,
            "minus_two_multiplicity": self.minus_two_multiplicity,
            "diameter": self.diameter,
            "max_k_gamma": self.max_k_gamma,
            "two_omega": self.two_omega,
            "ramanujan": ram,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "e": self.e,
            "nu": self.nu,
            "char_poly": list(self.char_poly),
            "violations": list(self.violations),
        }


def _json_float(x: float) -> float:
    return float(f"{x:.12g}")


def _json_number(x):
    return x if isinstance(x, int) else _json_float(x)


def analyze_line_graph(
    bg: BipartiteGraph, include_p_set: Optional[bool] = None
) -> SpectrumReport:
    """Verify the integral-line-graph laws on one connected bipartite graph.

    Builds the line graph and its exact spectrum. When integral, the
    shifted spectrum (+2 on every eigenvalue above -2) is recovered and
    required to be a member of P(alpha, beta); the -2 multiplicity must
    equal e - nu + 1 (this one holds for every connected bipartite
    graph, integral or not, and is checked unconditionally); the
    diameter must respect both the distinct-part bound and twice the
    clique number. Failures land in `violations` rather than raising, so
    corpus runs can keep going; callers treat a non-empty list as a bug.

    `include_p_set` controls whether P(alpha, beta) is computed for
    non-integral graphs (default: only for integral ones, where the
    membership check needs it anyway).
    """
    if not bg.is_connected():
        raise InputError("analysis requires a connected bipartite graph")
    alpha, beta = degree_partitions(bg)
    lg, _ = line_graph(bg)
    e = lg.order
    nu = bg.order
    spec = exact_spectrum(lg)
    violations: list[str] = []

    minus_two = root_multiplicity(spec.char_poly, -2)
    if minus_two != e - nu + 1:
        violations.append(
            f"-2 multiplicity {minus_two} differs from e-nu+1 = {e - nu + 1}"
        )

    diam = diameter(lg)
    assert isinstance(diam, int)  # connected by construction
    omega = clique_number(lg)
    two_omega = 2 * omega
    degree = lg.regular_degree()
    ram = None
    if degree is not None and degree >= 1 and lg.order >= 2:
        ram = ramanujan_verdict(lg)

    gamma_matched: Optional[Partition] = None
    p_set: Optional[CandidateSet] = None
    max_k: Optional[int] = None
    spectrum_float: Optional[tuple[float, ...]] = None

    if spec.integer_roots is None:
        is_integral = False
        spectrum_float = tuple(numeric_spectrum(lg))
        if include_p_set:
            p_set = enumerate_p(alpha, beta)
            max_k = p_set.max_distinct_parts
    else:
        is_integral = True
        eigs = expand_root_multiset(spec.integer_roots)
        if eigs[-1] < -2:
            violations.append(f"line graph eigenvalue {eigs[-1]} below -2")
        gamma_matched = Partition(v + 2 for v in eigs if v > -2)
        p_set = enumerate_p(alpha, beta)
        max_k = p_set.max_distinct_parts
        if not p_set.members:
            violations.append("candidate set P(alpha, beta) is empty")
        elif gamma_matched not in p_set:
            violations.append(
                f"recovered gamma {gamma_matched} not in P(alpha, beta)"
            )
        if max_k is not None and diam > max_k:
            violations.append(f"diameter {diam} exceeds max distinct parts {max_k}")
        if diam > two_omega:
            violations.append(f"diameter {diam} exceeds twice the clique number {two_omega}")

    return SpectrumReport(
        alpha=alpha,
        beta=beta,
        e=e,
        nu=nu,
        is_integral=is_integral,
        char_poly=spec.char_poly,
        spectrum_int=spec.integer_roots,
        spectrum_float=spectrum_float,
        gamma_matched=gamma_matched,
        p_set=p_set,
        minus_two_multiplicity=minus_two,
        diameter=diam,
        max_k_gamma=max_k,
        two_omega=two_omega,
        ramanujan=ram,
        violations=tuple(violations),
    )


def regular_line_spectrum_template(
    s: int, n: int, x: int, y: int
) -> tuple[tuple[int, int], ...]:
    """Spectrum multiset of the line graph of an s-regular bipartite graph
    on colour classes of size n whose own nontrivial spectrum has x
    eigenvalues +-2 and y eigenvalues +-1:

      { -2^((s-2)n+1), (s-4)^x, (s-3)^y, (s-2)^(2n-2x-2y-2),
        (s-1)^y, s^x, (2s-2)^1 }

    Returned sorted by descending eigenvalue with equal values merged.
    The total multiplicity always works out to sn, the number of edges;
    it is asserted anyway.
    """
    if s < 2 or n < 1 or x < 0 or y < 0:
        raise InputError(f"need s >= 2, n >= 1, x, y >= 0; got {(s, n, x, y)}")
    middle = 2 * n - 2 * x - 2 * y - 2
    if middle < 0:
        raise InputError(
            f"multiplicity of s-2 would be negative: 2n-2x-2y-2 = {middle}"
        )
    counts: dict[int, int] = {}
    for value, mult in [
        (-2, (s - 2) * n + 1),
        (s - 4, x),
        (s - 3, y),
        (s - 2, middle),
        (s - 1, y),
        (s, x),
        (2 * s - 2, 1),
    ]:
        if mult:
            counts[value] = counts.get(value, 0) + mult
    total = sum(counts.values())
    if total != s * n:
        raise InputError(f"multiplicities sum to {total}, expected sn = {s * n}")
    return tuple(sorted(counts.items(), reverse=True))


_CASE_RANGES = {0: ("lambda0", 10), 1: ("lambda1", 8), 2: ("lambda2", 6)}


def classify_regular_ramanujan_case(bg: BipartiteGraph) -> str:
    """Case label for a connected s-regular bipartite graph whose line
    graph is integral and Ramanujan.

    The label records the second largest eigenvalue of the base graph
    (0, 1 or 2) and the associated degree window is asserted: s <= 10,
    8 or 6 respectively. The spectral-gap notion starts at degree 3, so
    s >= 3 is a precondition; both Ramanujan readings must agree and
    hold (they always do for line graphs of this shape, whose least
    eigenvalue is -2). Out-of-window degrees or a second eigenvalue
    outside {0, 1, 2} would falsify a theorem and raise.
    """
    if not bg.is_connected():
        raise InputError("classification requires a connected graph")
    s = bg.regular_degree()
    if s is None:
        raise InputError("classification requires an s-regular bipartite graph")
    if s < 3:
        raise InputError(
            f"line graph degree 2s-2 = {2 * s - 2} is below the Ramanujan range (s >= 3)"
        )
    lg, _ = line_graph(bg)
    if integer_spectrum(lg) is None:
        raise InputError("line graph is not integral")
    verdict = ramanujan_verdict(lg)
    if verdict.second_largest_ok != verdict.all_nontrivial_ok:
        raise InputError(
            "the two Ramanujan readings disagree on this graph; refusing to pick one"
        )
    if not verdict.second_largest_ok:
        raise InputError("line graph is not Ramanujan")

    base_roots = integer_spectrum(bg.as_graph())
    if base_roots is None:
        raise TheoremViolation(
            "integral line graph of a regular bipartite graph with non-integral base spectrum"
        )
    base_eigs = expand_root_multiset(base_roots)
    lam = base_eigs[1]
    if lam not in _CASE_RANGES:
        raise TheoremViolation(
            f"second largest base eigenvalue {lam} outside {{0, 1, 2}}"
        )
    label, s_max = _CASE_RANGES[lam]
    if s > s_max:
        raise TheoremViolation(
            f"case {label} admits 3 <= s <= {s_max}, got s = {s}"
        )
    return label
