import logging
import math
from collections import Counter

from casson_invariants.arithmetic import smith_normal_form, two_torsion_order
from casson_invariants.constants import DEFAULT_ENUMERATION_CAP
from casson_invariants.exceptions import EnumerationCapExceeded
from casson_invariants.invariants import triangle_presentation
from casson_invariants.manifolds import SmallSeifertSpec
from casson_invariants.oracle.eigen import (
    SectorSpec,
    canonical_residue,
    reducible_residues,
    sector_eigen_classes,
)

logger = logging.getLogger(__name__)


def check_cap(size: int, cap: int) -> None:
    """Raises when an enumeration of ``size`` would exceed ``cap``.

    Args:
        size (int): Size of the enumeration.
        cap (int): The largest allowed size.

    Raises:
        EnumerationCapExceeded: If ``size > cap``.
    """
    if size > cap:
        raise EnumerationCapExceeded(size, cap)


def count_sector_irreducible(
    spec: SmallSeifertSpec, sector: SectorSpec
) -> int:
    """Number of irreducible ``SL_2(C)`` characters in one sector.

    Every triple of eigenvalue classes for ``x``, ``y`` and ``xy`` is the
    character of exactly one representation; the triple is irreducible
    unless the classes are those of a diagonal representation.

    Args:
        spec (SmallSeifertSpec): The small Seifert space.
        sector (SectorSpec): The sector.

    Returns:
        int: The number of irreducible characters in the sector.
    """
    p, q, r = spec.orders
    xs = sector_eigen_classes(p, sector.sign_x)
    ys = sector_eigen_classes(q, sector.sign_y)
    zs = sector_eigen_classes(r, sector.sign_xy)
    period = 2 * math.lcm(p, q, r)
    z_residues = Counter(
        canonical_residue(z.rescaled(period), period) for z in zs
    )
    reducible = sum(
        z_residues[residue]
        for x in xs
        for y in ys
        for residue in reducible_residues(x, y, period)
    )
    count = len(xs) * len(ys) * len(zs) - reducible
    logger.debug(
        "Sector %r of %r: %d triples, %d reducible",
        sector,
        spec,
        len(xs) * len(ys) * len(zs),
        reducible,
    )
    return count


def count_sl_irreducible(
    spec: SmallSeifertSpec, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[int, int]:
    """Counts the irreducible ``SL_2(C)`` characters of a small Seifert space
    by enumeration, sector by sector.

    The central element acts as ``+I`` or ``-I`` in every irreducible
    representation, and the two sectors are told apart by ``chi(h) = +-2``,
    so the counts simply add up.

    Args:
        spec (SmallSeifertSpec): A validated spec.
        cap (int): Largest allowed ``p * q * r``. Defaults to
            ``DEFAULT_ENUMERATION_CAP``.

    Raises:
        EnumerationCapExceeded: If ``p * q * r`` exceeds ``cap``.

    Returns:
        tuple[int, int]: Counts for the ``+I`` and ``-I`` sectors.
    """
    check_cap(math.prod(spec.orders), cap)
    plus = count_sector_irreducible(spec, SectorSpec.for_spec(spec, 1))
    minus = count_sector_irreducible(spec, SectorSpec.for_spec(spec, -1))
    return plus, minus


def count_triangle_reducible(p: int, q: int, r: int) -> int:
    """Number of reducible ``SL_2(C)`` characters of the triangle group
    ``<x, y | x^p = y^q = (xy)^r = 1>``.

    These are the diagonal characters, i.e. homomorphisms ``A -> C*`` up to
    inversion where ``A`` is the abelianization, so there are
    ``(|A| + |A[2]|) / 2`` of them.

    Args:
        p (int): Order of ``x``.
        q (int): Order of ``y``.
        r (int): Order of ``xy``.

    Returns:
        int: The number of reducible characters.
    """
    abelianization = smith_normal_form(triangle_presentation(p, q, r))
    return (abelianization.order + two_torsion_order(abelianization)) // 2


def count_diagonal_characters(p: int, q: int, r: int) -> int:
    """Counts diagonal characters of the triangle group one by one.

    A diagonal representation sends ``x`` to ``exp(2 pi i u / p)`` and ``y``
    to ``exp(2 pi i v / q)`` subject to ``(xy)^r = 1``; pairs related by
    simultaneous inversion give the same character.

    Args:
        p (int): Order of ``x``.
        q (int): Order of ``y``.
        r (int): Order of ``xy``.

    Returns:
        int: The number of diagonal characters.
    """
    homomorphisms = 0
    self_inverse = 0
    for u in range(p):
        for v in range(q):
            if (r * (u * q + v * p)) % (p * q) != 0:
                continue
            homomorphisms += 1
            if (2 * u) % p == 0 and (2 * v) % q == 0:
                self_inverse += 1
    return (homomorphisms + self_inverse) // 2
