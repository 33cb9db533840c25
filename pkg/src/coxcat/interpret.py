"""Bijections between the signed families and marked type-A objects.

Each forward map strips the negative integers and records which blocks were
properly contained in a signed block; each inverse rebuilds the signed
partition from the marked blocks, pairing them by the family's matching
convention.  The D maps carry an extra sign for the block absorbing n.
"""

from __future__ import annotations

from .core import Block, SetPartition, ValidationError
from .models import MarkedPair, MarkedTriple, d_reduce, is_member, validate_marked
from .signed import SignedPartition, positive_part


def pairing(blocks) -> tuple[int, ...]:
    """Sizes |A_1 u A_2k|, |A_2 u A_2k-1|, ... for an even list sorted by maximum."""
    bs = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[-1])
    if len(bs) % 2:
        raise ValidationError("pairing needs an even number of blocks")
    k = len(bs) // 2
    return tuple(sorted((len(bs[i]) + len(bs[-1 - i]) for i in range(k)), reverse=True))


def _alpha_marked(p: SignedPartition, n: int) -> MarkedPair:
    """Positive parts of the blocks; mark those properly contained in their block."""
    blocks: list[Block] = []
    marked: list[Block] = []
    for b in p.blocks:
        pos = positive_part(b)
        if not pos:
            continue
        blocks.append(pos)
        if len(pos) < len(b):
            marked.append(pos)
    sigma = SetPartition.from_blocks(blocks, n)
    return MarkedPair.make(sigma, marked)


def _mirror(b) -> Block:
    return tuple(sorted(-x for x in b))


def _signed_from_pairs(
    sigma: SetPartition,
    marked: tuple[Block, ...],
    pairs: list[tuple[Block, Block]],
    zero: Block | None,
) -> SignedPartition:
    out: list[Block] = []
    for a1, a2 in pairs:
        mixed = tuple(sorted(a1 + _mirror(a2)))
        out.append(mixed)
        out.append(_mirror(mixed))
    if zero is not None:
        out.append(tuple(sorted(zero + _mirror(zero))))
    consumed = {b for pr in pairs for b in pr} | ({zero} if zero else set())
    for b in sigma.blocks:
        if b not in consumed:
            out.append(b)
            out.append(_mirror(b))
    return SignedPartition.from_blocks(out, sigma.n)


def _first_with_last(blocks: tuple[Block, ...]) -> list[tuple[Block, Block]]:
    return [(blocks[i], blocks[-1 - i]) for i in range(len(blocks) // 2)]


# ---------------------------------------------------------------------------
# Type B and C


def phi_nc_b(p: SignedPartition, check: bool = True) -> MarkedPair:
    if check and not is_member(p, "nc_b"):
        raise ValidationError("not a type-B noncrossing partition")
    return _alpha_marked(p, p.n)


def phi_nc_b_inverse(m: MarkedPair, check: bool = True) -> SignedPartition:
    """Middle-unmatched convention: X_i pairs with X_{k+1-i}, odd middle -> zero block."""
    if check and not validate_marked(m, "nc_nn"):
        raise ValidationError("not a marked noncrossing pair with nonnested marks")
    x = m.marked
    zero = x[len(x) // 2] if len(x) % 2 else None
    return _signed_from_pairs(m.sigma, x, _first_with_last(x), zero)


def phi_nn_b(p: SignedPartition, check: bool = True) -> MarkedPair:
    if check and not is_member(p, "nn_b"):
        raise ValidationError("not a type-B nonnesting partition")
    return _alpha_marked(p, p.n)


def phi_nn_b_inverse(m: MarkedPair, check: bool = True) -> SignedPartition:
    """First-unmatched convention: an odd count makes the smallest-max block the zero block."""
    if check and not validate_marked(m, "nn_na"):
        raise ValidationError("not a marked nonnesting pair with nonaligned marks")
    x = m.marked
    if len(x) % 2:
        zero, rest = x[0], x[1:]
    else:
        zero, rest = None, x
    return _signed_from_pairs(m.sigma, x, _first_with_last(rest), zero)


def phi_nn_c(p: SignedPartition, check: bool = True) -> MarkedPair:
    if check and not is_member(p, "nn_c"):
        raise ValidationError("not a type-C nonnesting partition")
    return _alpha_marked(p, p.n)


def phi_nn_c_inverse(m: MarkedPair, check: bool = True) -> SignedPartition:
    """Middle-unmatched convention, like the type-B noncrossing inverse."""
    if check and not validate_marked(m, "nn_na"):
        raise ValidationError("not a marked nonnesting pair with nonaligned marks")
    x = m.marked
    zero = x[len(x) // 2] if len(x) % 2 else None
    return _signed_from_pairs(m.sigma, x, _first_with_last(x), zero)


# ---------------------------------------------------------------------------
# Type D


def _epsilon_of_top_block(bn: Block, n: int) -> int:
    """Sign rule for the block {a_1..a_r, -b_1..-b_s, n} containing n."""
    pos = [x for x in bn if 0 < x < n]
    neg = [-x for x in bn if x < 0]
    if not neg:
        return 1
    if pos and max(pos) < max(neg):
        return 1
    return -1


def _phi_d_forward(p: SignedPartition) -> MarkedTriple:
    """Shared case analysis for both D maps; no membership check."""
    n = p.n
    bn = p.block_containing(n)
    if bn == (n,) or p.zero_block() is not None:
        reduced = d_reduce(p)
        if reduced is None:
            raise ValidationError("the top-element merge is not a signed partition")
        pair = _alpha_marked(reduced, n - 1)
        return MarkedTriple(pair.sigma, pair.marked, 0)
    eps = _epsilon_of_top_block(bn, n)
    blocks: list[Block] = []
    marked: list[Block] = []
    for b in p.blocks:
        pos = tuple(x for x in positive_part(b) if x != n)
        if not pos:
            continue
        blocks.append(pos)
        if set(pos) != set(b):
            marked.append(pos)
    sigma = SetPartition.from_blocks(blocks, n - 1)
    return MarkedTriple.make(sigma, marked, eps)


def phi_nc_d(p: SignedPartition, check: bool = True) -> MarkedTriple:
    if check and not is_member(p, "nc_d"):
        raise ValidationError("not a type-D noncrossing partition")
    return _phi_d_forward(p)


def phi_nn_d(p: SignedPartition, check: bool = True) -> MarkedTriple:
    if check and not is_member(p, "nn_d"):
        raise ValidationError("not a type-D nonnesting partition")
    return _phi_d_forward(p)


def _eps_set(eps: int, b: Block) -> Block:
    return tuple(sorted(eps * x for x in b))


def _grow_by_top(p: SignedPartition, n: int) -> SignedPartition:
    """Add +-n to the zero block, or as two singletons when there is none."""
    z = p.zero_block()
    blocks = []
    for b in p.blocks:
        blocks.append(tuple(sorted(b + (n, -n))) if b == z else b)
    if z is None:
        blocks.extend([(n,), (-n,)])
    return SignedPartition.from_blocks(blocks, n)


def phi_nc_d_inverse(t: MarkedTriple, check: bool = True) -> SignedPartition:
    if check and not validate_marked(t, "nc_nn_pm"):
        raise ValidationError("not a marked noncrossing triple with nonnested marks")
    n = t.sigma.n + 1
    if t.epsilon == 0:
        return _grow_by_top(phi_nc_b_inverse(t.pair, check=False), n)
    x = t.marked
    k = len(x)
    if k % 2 == 0:
        half = k // 2
        pairs = [pr for pr in _first_with_last(x) if pr != (x[half - 1], x[half])]
        top = _eps_set(t.epsilon, x[half - 1] + _mirror(x[half])) + (n,)
        zero = None
    else:
        pairs = _first_with_last(x[: k // 2] + x[k // 2 + 1:])
        top = _eps_set(t.epsilon, x[k // 2]) + (n,)
        zero = None
    out = [tuple(sorted(top)), _mirror(tuple(sorted(top)))]
    consumed = {b for pr in pairs for b in pr}
    middle = {x[k // 2 - 1], x[k // 2]} if k % 2 == 0 else {x[k // 2]}
    for a1, a2 in pairs:
        mixed = tuple(sorted(a1 + _mirror(a2)))
        out.append(mixed)
        out.append(_mirror(mixed))
    for b in t.sigma.blocks:
        if b not in consumed and b not in middle:
            out.append(b)
            out.append(_mirror(b))
    return SignedPartition.from_blocks(out, n)


def phi_nn_d_inverse(t: MarkedTriple, check: bool = True) -> SignedPartition:
    """The low-max marked blocks absorb n; the remainder pairs first-with-last."""
    if check and not validate_marked(t, "nn_na_pm"):
        raise ValidationError("not a marked nonnesting triple with nonaligned marks")
    n = t.sigma.n + 1
    if t.epsilon == 0:
        return _grow_by_top(phi_nn_b_inverse(t.pair, check=False), n)
    x = t.marked
    if len(x) % 2 == 0:
        top = _eps_set(t.epsilon, x[0] + _mirror(x[1])) + (n,)
        absorbed = {x[0], x[1]}
        pairs = _first_with_last(x[2:])
    else:
        top = _eps_set(t.epsilon, x[0]) + (n,)
        absorbed = {x[0]}
        pairs = _first_with_last(x[1:])
    out = [tuple(sorted(top)), _mirror(tuple(sorted(top)))]
    consumed = {b for pr in pairs for b in pr} | absorbed
    for a1, a2 in pairs:
        mixed = tuple(sorted(a1 + _mirror(a2)))
        out.append(mixed)
        out.append(_mirror(mixed))
    for b in t.sigma.blocks:
        if b not in consumed:
            out.append(b)
            out.append(_mirror(b))
    return SignedPartition.from_blocks(out, n)


# ---------------------------------------------------------------------------
# Type clauses: the multiset T such that type(pi) = type(sigma minus X) + T


def _type_multiset(sizes) -> tuple[int, ...]:
    return tuple(sorted(sizes, reverse=True))


def unmarked_type(m: MarkedPair | MarkedTriple) -> tuple[int, ...]:
    marked = set(m.marked)
    return _type_multiset(len(b) for b in m.sigma.blocks if b not in marked)


def type_clause_b(m: MarkedPair) -> tuple[int, ...]:
    """T for the type-B noncrossing interpretation (middle block drops out when odd)."""
    x = m.marked
    if len(x) % 2 == 0:
        return pairing(x)
    return pairing(x[: len(x) // 2] + x[len(x) // 2 + 1:])


def type_clause_nn_b(m: MarkedPair) -> tuple[int, ...]:
    x = m.marked
    if len(x) % 2 == 0:
        return pairing(x)
    return pairing(x[1:])


type_clause_nn_c = type_clause_b


def type_clause_nc_d(t: MarkedTriple) -> tuple[int, ...]:
    x, k = t.marked, len(t.marked)
    if t.epsilon == 0 and k % 2 == 0:
        return _type_multiset(pairing(x) + (1,))
    if t.epsilon == 0:
        return pairing(x[: k // 2] + x[k // 2 + 1:])
    if k % 2 == 0:
        rest = tuple(b for i, b in enumerate(x) if i not in (k // 2 - 1, k // 2))
        return _type_multiset(pairing(rest) + (len(x[k // 2 - 1]) + len(x[k // 2]) + 1,))
    rest = x[: k // 2] + x[k // 2 + 1:]
    return _type_multiset(pairing(rest) + (len(x[k // 2]) + 1,))


def type_clause_nn_d(t: MarkedTriple) -> tuple[int, ...]:
    x, k = t.marked, len(t.marked)
    if t.epsilon == 0 and k % 2 == 0:
        return _type_multiset(pairing(x) + (1,))
    if t.epsilon == 0:
        return pairing(x[1:])
    if k % 2 == 0:
        return _type_multiset(pairing(x[2:]) + (len(x[0]) + len(x[1]) + 1,))
    return _type_multiset(pairing(x[1:]) + (len(x[0]) + 1,))
