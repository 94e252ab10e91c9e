from fractions import Fraction
from typing import Dict, NamedTuple, Sequence

from tensorpath.exact.counter import DEFAULT_MEM_CAP, count_paths
from tensorpath.groups.freudenthal import WeightDiagram
from tensorpath.sdk.exceptions import CoordinateMismatch, NegativeMultiplicity
from tensorpath.utils.common import IntVector, vec_add, vec_scale, vec_sub


def weight_multiplicity(d: WeightDiagram, N: int, nu: Sequence, mem_cap: int = DEFAULT_MEM_CAP) -> int:
    """m_N(lambda; nu) = P_N(nu - N*lambda) on the shifted step set."""
    r = d.root_system
    if len(nu) != r.rank_t:
        raise CoordinateMismatch(f"Weight {list(nu)} has length {len(nu)}, expected {r.rank_t}.")
    shift = vec_sub(nu, vec_scale(N, d.highest_weight))
    if not r.in_root_subspace(shift):
        return 0
    coords = r.lattice_coordinates(shift)
    if any(c.denominator != 1 for c in coords):
        return 0
    return int(count_paths(d.step_set, N, mem_cap).value(coords))


def irreducible_multiplicity(d: WeightDiagram, N: int, mu: Sequence, mem_cap: int = DEFAULT_MEM_CAP) -> int:
    """a_N(lambda; mu) as the alternating Weyl sum of weight multiplicities."""
    r = d.root_system
    mu = r.require_dominant(mu)
    total = 0
    for w in r.weyl_elements:
        shift = vec_sub(r.rho, w.apply(r.rho))
        total += w.sign * weight_multiplicity(d, N, vec_add(mu, shift), mem_cap)
    if total < 0:
        raise NegativeMultiplicity(f"a_{N}({list(d.highest_weight)}; {list(mu)}) = {total} < 0")
    return total


def decompose_tensor_power(d: WeightDiagram, N: int, mem_cap: int = DEFAULT_MEM_CAP) -> Dict[IntVector, int]:
    """All nonzero a_N(lambda; mu), keyed by dominant mu in lexicographic order."""
    r = d.root_system
    table = count_paths(d.step_set, N, mem_cap)
    top = vec_scale(N, d.highest_weight)
    out: Dict[IntVector, int] = {}
    for gamma, _ in table.items():
        mu = tuple(int(c) for c in vec_add(top, r.from_lattice(gamma)))
        if r.is_dominant(mu):
            a = irreducible_multiplicity(d, N, mu, mem_cap)
            if a:
                out[mu] = a
    return dict(sorted(out.items()))


class IrreducibleMeasure(NamedTuple):
    """Normalized counting measure of irreducible summands of V_lambda^(x)N."""
    summands: int
    masses: Dict[IntVector, Fraction]


def irreducible_measure(d: WeightDiagram, N: int, mem_cap: int = DEFAULT_MEM_CAP) -> IrreducibleMeasure:
    decomposition = decompose_tensor_power(d, N, mem_cap)
    summands = sum(decomposition.values())
    return IrreducibleMeasure(
        summands=summands,
        masses={mu: Fraction(a, summands) for mu, a in decomposition.items()},
    )


def alternating_mass(d: WeightDiagram, N: int, mu: Sequence, summands: int, mem_cap: int = DEFAULT_MEM_CAP) -> Fraction:
    """(dim V)^N / B_N * sum_w sgn(w) dm_N(mu + rho - w rho), dm_N the normalized weight measure."""
    r = d.root_system
    volume = d.dimension**N
    acc = Fraction(0)
    for w in r.weyl_elements:
        shift = vec_sub(r.rho, w.apply(r.rho))
        acc += w.sign * Fraction(weight_multiplicity(d, N, vec_add(mu, shift), mem_cap), volume)
    return volume * acc / summands
