"""Classical invariants (tb, rot, d3) read off a surgery presentation.

The diagram has a fixed linking pattern: every curve is a Legendrian unknot,
the two chain leaders and the two (+1)-surgery curves are mutual Legendrian
push-offs of one tb = -1 unknot (so any two of them link -1, as does each of
them with the knot), and consecutive chain unknots link +1.  Chain tails do
not link the knot or anything outside their chain.

With Q the linking matrix of the surgery curves (smooth framings on the
diagonal), the invariants of the knot L in the surgered contact 3-sphere are
computed by the usual formulas:

    tb  = tb_0 + det(Q_0) / det(Q)      (Q_0: extend Q by L with a 0 slot)
    rot = rot_0 - <r, Q^{-1} lk>
    d3  = (<r, Q^{-1} r> - 3 sig(Q) - 2 chi) / 4 + #(+1 surgeries)

where r is the vector of curve rotation numbers, lk the linking of L with
the curves, tb_0 = -1 - level and rot_0 = stab_pos - stab_neg.  The d3 we
report is normalized by +1/2, making it 0 on the standard tight 3-sphere.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cf import VerificationError, complementary_expansions, eval_neg_cf, merged_lens_entries
from .diagram import Presentation, presentation_chain_tbs
from .linalg import det_bareiss, signature_symmetric, solve_fraction


# ---- the linking matrix


def surgery_matrix(pres: Presentation) -> list[list[int]]:
    """Linking matrix of the surgery curves (chains, then both (+1)-curves)."""
    tbs1, tbs2 = presentation_chain_tbs(pres)
    n1, n2 = len(tbs1), len(tbs2)
    m = n1 + n2 + 2
    framings = [tb - 1 for tb in tbs1 + tbs2] + [0, 0]
    q = [[0] * m for _ in range(m)]
    for i in range(m):
        q[i][i] = framings[i]
    for base, size in ((0, n1), (n1, n2)):
        for i in range(base, base + size - 1):
            q[i][i + 1] = q[i + 1][i] = 1
    main = (0, n1, n1 + n2, n1 + n2 + 1)
    for i in main:
        for j in main:
            if i != j:
                q[i][j] = -1
    return q


def knot_linking_vector(pres: Presentation) -> list[int]:
    """Linking numbers of the knot with each surgery curve."""
    tbs1, tbs2 = presentation_chain_tbs(pres)
    n1, n2 = len(tbs1), len(tbs2)
    lk = [0] * (n1 + n2 + 2)
    for i in (0, n1, n1 + n2, n1 + n2 + 1):
        lk[i] = -1
    return lk


def rotation_vector(pres: Presentation) -> list[int]:
    """Rotation numbers of the surgery curves ((+1)-curves are unstabilized)."""
    return list(pres.rots1) + list(pres.rots2) + [0, 0]


def _extended_matrix(pres: Presentation, corner: int) -> list[list[int]]:
    q = surgery_matrix(pres)
    lk = knot_linking_vector(pres)
    return [row + [l] for row, l in zip(q, lk)] + [lk + [corner]]


# ---- invariants


def compute_tb(pres: Presentation) -> int:
    q = surgery_matrix(pres)
    tb = -1 - pres.level + Fraction(det_bareiss(_extended_matrix(pres, 0)), det_bareiss(q))
    if tb.denominator != 1:
        raise ArithmeticError(f"non-integral tb {tb} for {pres}")
    return int(tb)


def compute_rot(pres: Presentation) -> int:
    q = surgery_matrix(pres)
    r = rotation_vector(pres)
    x = solve_fraction(q, knot_linking_vector(pres))
    rot = pres.stab_pos - pres.stab_neg - sum(ri * xi for ri, xi in zip(r, x))
    if rot.denominator != 1:
        raise ArithmeticError(f"non-integral rot {rot} for {pres}")
    return int(rot)


def compute_d3(pres: Presentation) -> int:
    """d3 of the ambient contact 3-sphere, normalized to 0 on the tight one."""
    q = surgery_matrix(pres)
    r = rotation_vector(pres)
    x = solve_fraction(q, r)
    csq = sum(ri * xi for ri, xi in zip(r, x))
    sigma = signature_symmetric(q)
    chi = 1 + len(q)
    d3 = (csq - 3 * sigma - 2 * chi) / 4 + 2 + Fraction(1, 2)
    if d3.denominator != 1:
        raise ArithmeticError(f"non-integral normalized d3 {d3} for {pres}")
    return int(d3)


def d3_surgered(pres: Presentation) -> Fraction:
    """Unnormalized d3 of the result of contact (-1)-surgery on the knot."""
    ext = _extended_matrix(pres, -2 - pres.level)
    r = rotation_vector(pres) + [pres.stab_pos - pres.stab_neg]
    x = solve_fraction(ext, r)
    csq = sum(ri * xi for ri, xi in zip(r, x))
    sigma = signature_symmetric(ext)
    chi = 1 + len(ext)
    return (csq - 3 * sigma - 2 * chi) / 4 + 2


# ---- bundled result


@dataclass(frozen=True)
class ClassicalInvariants:
    """tb, rot and ambient d3, plus the derived bigrading.

    alexander = (tb - rot + 1) / 2 and maslov = 2 * alexander - d3 locate the
    class in the bigraded knot Floer module; they are integers for every
    presentation (tb - rot is odd).
    """

    tb: int
    rot: int
    d3: int
    alexander: int
    maslov: int


def bigrading(tb: int, rot: int, d3: int) -> tuple:
    """(A, M) = ((tb - rot + 1)/2, 2A - d3); exact, ints when integral."""
    alex = Fraction(tb - rot + 1, 2)
    maslov = 2 * alex - d3
    if alex.denominator == 1:
        return int(alex), int(maslov)
    return alex, maslov


def classical_invariants(pres: Presentation) -> ClassicalInvariants:
    tb = compute_tb(pres)
    rot = compute_rot(pres)
    d3 = compute_d3(pres)
    alex, maslov = bigrading(tb, rot, d3)
    if not isinstance(alex, int):
        raise ArithmeticError(f"tb - rot even for {pres}")
    return ClassicalInvariants(tb, rot, d3, alex, maslov)


# ---- smooth-topology oracle


def validate_smooth_topology(pres: Presentation) -> dict:
    """Check that the diagram presents S3 and surgers to the right lens space.

    Returns a report dict; report["ok"] is False when any oracle fails.  The
    ambient check (|det Q| = 1) applies at any level; the surgered first
    homology and the lens type (u, v) = (pq+1, p^2 up to inversion) are
    level-0 statements, the latter read off the chain left after cancelling
    the (+1)-curves.
    """
    p, q = pres.p, pres.q
    ambient_det = det_bareiss(surgery_matrix(pres))
    report = {"p": p, "q": q, "ambient_det": ambient_det}
    ok = abs(ambient_det) == 1
    if pres.level == 0:
        h1 = abs(det_bareiss(_extended_matrix(pres, -2)))
        u = p * q + 1
        value = eval_neg_cf(merged_lens_entries(*complementary_expansions(pres.params())))
        v_expect = p * p % u
        report["surgered_h1"] = h1
        report["lens"] = (value.numerator, value.denominator)
        ok = ok and h1 == u and value.numerator == u
        ok = ok and value.denominator in (v_expect, pow(v_expect, -1, u))
    report["ok"] = ok
    return report


def assert_smooth_topology(pres: Presentation) -> dict:
    report = validate_smooth_topology(pres)
    if not report["ok"]:
        raise VerificationError(f"smooth topology oracle failed: {report}")
    return report
