"""Surgery presentations of Legendrian negative torus knots.

A presentation is the combinatorial content of the standard diagram: the
torus knot T(p, -q) sits as a Legendrian unknot (tb = -1, possibly
stabilized) alongside two contact (+1)-surgery unknot copies and two
contact (-1)-surgery chains.  The chains expand the two rational surgery
coefficients -p/(p-c) and -q/q'; expanding a coefficient -x through the
negative continued fraction x = [a0, ..., as] produces unknots with

    tb = (-a0, -a1 + 1, ..., -as + 1)

and each unknot independently carries a rotation number of the usual
parity, rot = tb + 1, tb + 3, ..., -tb - 1.  The knot itself carries
stab_pos positive and stab_neg negative stabilizations.
"""

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .cf import TorusKnotParams, complementary_expansions, neg_cf, torus_knot_params


# ---- chains


def chain_tbs(cf_entries) -> tuple[int, ...]:
    """Thurston-Bennequin numbers of the chain expanding coefficient -[cf]."""
    first, *rest = cf_entries
    return (-first,) + tuple(-a + 1 for a in rest)


def expand_contact_surgery(coeff) -> tuple[int, ...]:
    """Chain tbs realizing contact surgery with rational coefficient < -1."""
    coeff = Fraction(coeff)
    if coeff >= -1:
        raise ValueError(f"need a coefficient < -1, got {coeff}")
    return chain_tbs(neg_cf(-coeff.numerator, coeff.denominator))


def rotation_range(tb: int) -> range:
    """Legal rotation numbers of a tb < 0 unknot: tb+1, tb+3, ..., -tb-1."""
    if tb >= 0:
        raise ValueError(f"chain unknots have tb < 0, got {tb}")
    return range(tb + 1, -tb, 2)


def is_fully_positive(rot: int, tb: int) -> bool:
    """Whether the unknot is a purely positive stabilization (rot == -tb-1)."""
    return rot == -tb - 1


def is_fully_negative(rot: int, tb: int) -> bool:
    return rot == tb + 1


# ---- presentations


@dataclass(frozen=True)
class Presentation:
    """One choice of rotation numbers and knot stabilizations for T(p, -q)."""

    p: int
    q: int
    rots1: tuple[int, ...]
    rots2: tuple[int, ...]
    stab_pos: int = 0
    stab_neg: int = 0

    @property
    def level(self) -> int:
        """Total number of stabilizations on the knot."""
        return self.stab_pos + self.stab_neg

    def params(self) -> TorusKnotParams:
        return torus_knot_params(self.p, self.q)

    def conjugate(self) -> "Presentation":
        """Mirror of the presentation: all rotations negated, stabs swapped."""
        return Presentation(
            self.p,
            self.q,
            tuple(-r for r in self.rots1),
            tuple(-r for r in self.rots2),
            self.stab_neg,
            self.stab_pos,
        )

    def stabilize(self, pos: int = 0, neg: int = 0) -> "Presentation":
        if pos < 0 or neg < 0:
            raise ValueError("stabilization counts are nonnegative")
        return Presentation(
            self.p, self.q, self.rots1, self.rots2,
            self.stab_pos + pos, self.stab_neg + neg,
        )

    def to_dict(self) -> dict:
        tbs1, tbs2 = presentation_chain_tbs(self)
        return {
            "p": self.p,
            "q": self.q,
            "chains": [
                {"tb": list(tbs1), "rot": list(self.rots1)},
                {"tb": list(tbs2), "rot": list(self.rots2)},
            ],
            "stab_pos": self.stab_pos,
            "stab_neg": self.stab_neg,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Presentation":
        data = json.loads(text)
        pres = Presentation(
            int(data["p"]),
            int(data["q"]),
            tuple(int(r) for r in data["chains"][0]["rot"]),
            tuple(int(r) for r in data["chains"][1]["rot"]),
            int(data.get("stab_pos", 0)),
            int(data.get("stab_neg", 0)),
        )
        validate_presentation(pres)
        stored = tuple(tuple(chain["tb"]) for chain in data["chains"])
        if stored != presentation_chain_tbs(pres):
            raise ValueError("tb entries do not match the (p, q) chain shape")
        return pres


def chains_for(p: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two chain tb tuples shared by every presentation of T(p, -q)."""
    cf1, cf2 = complementary_expansions(torus_knot_params(p, q))
    return chain_tbs(cf1), chain_tbs(cf2)


def presentation_chain_tbs(pres: Presentation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return chains_for(pres.p, pres.q)


def validate_presentation(pres: Presentation) -> None:
    """Check rotation parities/ranges and stabilization counts."""
    tbs1, tbs2 = presentation_chain_tbs(pres)
    for tbs, rots in ((tbs1, pres.rots1), (tbs2, pres.rots2)):
        if len(tbs) != len(rots):
            raise ValueError(f"chain length mismatch: {rots} for tbs {tbs}")
        for tb, rot in zip(tbs, rots):
            if rot not in rotation_range(tb):
                raise ValueError(f"rotation {rot} illegal for tb {tb}")
    if pres.stab_pos < 0 or pres.stab_neg < 0:
        raise ValueError("stabilization counts are nonnegative")


def enumerate_presentations(p: int, q: int, level: int = 0):
    """All presentations of T(p, -q) with stab_pos + stab_neg == level.

    There are prod |tb| * (level + 1) of them; the iteration order is
    deterministic (row-major over chain rotations, then stab split).
    """
    params = torus_knot_params(p, q)
    cf1, cf2 = complementary_expansions(params)
    ranges1 = [rotation_range(tb) for tb in chain_tbs(cf1)]
    ranges2 = [rotation_range(tb) for tb in chain_tbs(cf2)]
    for rots1 in itertools.product(*ranges1):
        for rots2 in itertools.product(*ranges2):
            for pos in range(level + 1):
                yield Presentation(p, q, rots1, rots2, pos, level - pos)


# ---- the two distinguished shapes


def chain_extreme(tbs, rots, sign: int) -> bool:
    """Whether every unknot of a chain is fully positive (+1) / negative (-1)."""
    test = is_fully_positive if sign > 0 else is_fully_negative
    return all(test(rot, tb) for tb, rot in zip(tbs, rots))


def is_ambient_tight(pres: Presentation) -> bool:
    """Whether the ambient contact 3-sphere of the diagram is the tight one.

    This holds exactly when the two chains cancel against the (+1)-surgeries:
    the first chain must be entirely extreme and the second chain extreme in
    the opposite direction through its next-to-last unknot.  The final unknot
    of the second chain (the one with tb = -n + 1) is unconstrained, as is
    everything about the knot itself.
    """
    tbs1, tbs2 = presentation_chain_tbs(pres)
    for sign in (+1, -1):
        if chain_extreme(tbs1, pres.rots1, sign) and chain_extreme(
            tbs2[:-1], pres.rots2[:-1], -sign
        ):
            return True
    return False


def nonvanishing_condition(pres: Presentation) -> bool:
    """Whether the unstabilized presentation has nonzero contact invariant.

    The criterion is on the two chain leaders only: neither may be fully
    negative.  Presentations satisfying it are exactly the strongly
    non-loose ones that survive arbitrary negative stabilization, so they
    index the non-loose transverse representatives.
    """
    if pres.level != 0:
        raise ValueError("the nonvanishing condition applies to level 0")
    tbs1, tbs2 = presentation_chain_tbs(pres)
    return not is_fully_negative(pres.rots1[0], tbs1[0]) and not is_fully_negative(
        pres.rots2[0], tbs2[0]
    )
